#pragma once

// Yau twist: mu' = beta mu, Delta' = Delta beta, alpha' = beta alpha; S, eta, eps kept.

#include "whh/weak_hom_hopf.hpp"

namespace whh {

/// Checks that beta is an invertible bialgebra endomorphism of H commuting
/// with S and alpha. Every failing entry is listed in the report.
template <ExactField F>
CheckReport check_twist_map(const WeakHomHopfAlgebra<F>& H, const LinearMap<F>& beta, CheckOptions opt = {}) {
  CheckReport rep("twist-map", opt);
  rep.merge(check_morphism(beta, H.algebra(), H.algebra(), opt), "algebra-");
  rep.merge(check_morphism(beta, H.coalgebra(), H.coalgebra(), opt), "coalgebra-");
  rep.fact("twist.invertible", "bijective structure maps", detail::invertible(beta));
  check_maps_equal(rep, "twist.commutes-with-S", "beta S = S beta", compose(beta, H.S()), compose(H.S(), beta));
  check_maps_equal(rep, "twist.commutes-with-alpha", "beta alpha = alpha beta", compose(beta, H.alpha()),
                   compose(H.alpha(), beta));
  return rep;
}

/// Raw twisted structure without any checks (used to exhibit failures).
template <ExactField F>
WeakHomHopfAlgebra<F> yau_twist_unchecked(const WeakHomHopfAlgebra<F>& H, const LinearMap<F>& beta, std::string name) {
  return WeakHomHopfAlgebra<F>(std::move(name), H.ctx(), H.dim(), compose(beta, H.mu()), H.eta(),
                               compose(H.delta(), beta), H.eps(), compose(beta, H.alpha()), H.S());
}

/// Verified twist: throws StructureError naming the failing checks if beta is
/// not an admissible automorphism or if the result fails certification.
template <ExactField F>
WeakHomHopfAlgebra<F> yau_twist(const WeakHomHopfAlgebra<F>& H, const LinearMap<F>& beta, std::string name) {
  auto pre = check_twist_map(H, beta);
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
    return s;
  };
  if (!pre.pass()) throw StructureError("twist map rejected for " + H.name() + ": " + join(pre.failing()));
  auto T = yau_twist_unchecked(H, beta, std::move(name));
  auto rep = certify(T);
  if (!rep.pass()) throw StructureError("twisted algebra " + T.name() + " fails certification: " + join(rep.failing()));
  return T;
}

}  // namespace whh
