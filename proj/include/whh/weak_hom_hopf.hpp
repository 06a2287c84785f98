#pragma once

// Weak Hom-bialgebras and weak Hom-Hopf algebras: axiom suite, counital maps.

#include "whh/hom_structures.hpp"
#include "whh/subspace.hpp"

#include <map>

namespace whh {

struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <ExactField F>
class WeakHomHopfAlgebra {
 public:
  using Context = typename F::Context;

  WeakHomHopfAlgebra() = default;

  /// Takes the raw structure maps; inverses of alpha and S are computed here.
  /// Throws SingularMap if either is not invertible (S^{-1} is needed downstream).
  WeakHomHopfAlgebra(std::string name, Context ctx, std::size_t d, LinearMap<F> mu, LinearMap<F> eta,
                     LinearMap<F> delta, LinearMap<F> eps, LinearMap<F> alpha, LinearMap<F> S)
      : name_(std::move(name)), ctx_(ctx), d_(d), mu_(std::move(mu)), eta_(std::move(eta)), delta_(std::move(delta)),
        eps_(std::move(eps)), alpha_(std::move(alpha)), S_(std::move(S)) {
    validate(algebra());
    validate(coalgebra());
    detail::expect_shape(S_.dom(), {d}, "antipode domain");
    detail::expect_shape(S_.cod(), {d}, "antipode codomain");
    try {
      alpha_inv_ = invert(alpha_);
    } catch (const SingularMap& e) {
      throw SingularMap("twist alpha is singular (rank " + std::to_string(e.rank) + ")", e.rank);
    }
    try {
      S_inv_ = invert(S_);
    } catch (const SingularMap& e) {
      throw SingularMap("antipode S is singular (rank " + std::to_string(e.rank) +
                            "); the compatibility condition needs S^{-1}",
                        e.rank);
    }
    one1_ = compose(delta_, eta_);
  }

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const Context& ctx() const { return ctx_; }
  [[nodiscard]] std::size_t dim() const { return d_; }
  [[nodiscard]] const LinearMap<F>& mu() const { return mu_; }
  [[nodiscard]] const LinearMap<F>& eta() const { return eta_; }
  [[nodiscard]] const LinearMap<F>& delta() const { return delta_; }
  [[nodiscard]] const LinearMap<F>& eps() const { return eps_; }
  [[nodiscard]] const LinearMap<F>& alpha() const { return alpha_; }
  [[nodiscard]] const LinearMap<F>& alpha_inv() const { return alpha_inv_; }
  [[nodiscard]] const LinearMap<F>& S() const { return S_; }
  [[nodiscard]] const LinearMap<F>& S_inv() const { return S_inv_; }
  /// Delta(1) as a map () -> (d,d).
  [[nodiscard]] const LinearMap<F>& one1() const { return one1_; }
  [[nodiscard]] LinearMap<F> id() const { return LinearMap<F>::identity({d_}, ctx_); }

  /// alpha^k for any integer k (cached).
  [[nodiscard]] const LinearMap<F>& alpha_pow(int k) const {
    auto it = pow_cache_.find(k);
    if (it != pow_cache_.end()) return it->second;
    LinearMap<F> p = k >= 0 ? power(alpha_, k) : power(alpha_inv_, -k);
    return pow_cache_.emplace(k, std::move(p)).first->second;
  }

  [[nodiscard]] bool is_twisted() const { return !(alpha_ == id()); }
  [[nodiscard]] bool delta_one_is_trivial() const {
    return one1_ == tensor(eta_, eta_);
  }

  [[nodiscard]] HomAlgebra<F> algebra() const { return {d_, mu_, eta_, alpha_, ctx_}; }
  [[nodiscard]] HomCoalgebra<F> coalgebra() const { return {d_, delta_, eps_, alpha_, ctx_}; }

 private:
  std::string name_;
  Context ctx_{};
  std::size_t d_ = 0;
  LinearMap<F> mu_, eta_, delta_, eps_, alpha_, S_;
  LinearMap<F> alpha_inv_, S_inv_, one1_;
  mutable std::map<int, LinearMap<F>> pow_cache_;
};

template <ExactField F>
struct CounitalMaps {
  LinearMap<F> eps_t, eps_s, hat_eps_t, hat_eps_s;
  Subspace<F> Ht, Hs, hat_Ht, hat_Hs;
};

/// eps_t(h)=eps(1_1 h)1_2, eps_s(h)=1_1 eps(h 1_2), hat variants with the
/// product order reversed.
template <ExactField F>
CounitalMaps<F> counital_maps(const WeakHomHopfAlgebra<F>& H) {
  using T = Tensor<F>;
  const auto d = H.dim();
  const auto& ctx = H.ctx();
  std::vector<Leg> in = {{"h", d}}, out = {{"x", d}};
  CounitalMaps<F> c;
  c.eps_t = tabulate<F>(ctx, in, out, [&](T& t) {
    t.apply(H.one1(), {}, {"o1", "x"}).apply(H.mu(), {"o1", "h"}, {"y"}).apply(H.eps(), {"y"}, {});
  });
  c.eps_s = tabulate<F>(ctx, in, out, [&](T& t) {
    t.apply(H.one1(), {}, {"x", "o2"}).apply(H.mu(), {"h", "o2"}, {"y"}).apply(H.eps(), {"y"}, {});
  });
  c.hat_eps_t = tabulate<F>(ctx, in, out, [&](T& t) {
    t.apply(H.one1(), {}, {"o1", "x"}).apply(H.mu(), {"h", "o1"}, {"y"}).apply(H.eps(), {"y"}, {});
  });
  c.hat_eps_s = tabulate<F>(ctx, in, out, [&](T& t) {
    t.apply(H.one1(), {}, {"x", "o2"}).apply(H.mu(), {"o2", "h"}, {"y"}).apply(H.eps(), {"y"}, {});
  });
  c.Ht = Subspace<F>::image(c.eps_t);
  c.Hs = Subspace<F>::image(c.eps_s);
  c.hat_Ht = Subspace<F>::image(c.hat_eps_t);
  c.hat_Hs = Subspace<F>::image(c.hat_eps_s);
  return c;
}

template <ExactField F>
CheckReport check_weak_bialgebra(const WeakHomHopfAlgebra<F>& H, CheckOptions opt = {}) {
  using T = Tensor<F>;
  CheckReport rep("weak-bialgebra", opt);
  const auto d = H.dim();
  const auto& ctx = H.ctx();
  check_identity<F>(
      rep, "weak-bialgebra.multiplicative", "weak bialgebra: Delta(ab)=Delta(a)Delta(b)", ctx, {{"a", d}, {"b", d}},
      {{"x", d}, {"y", d}}, [&](T& t) { t.apply(H.mu(), {"a", "b"}, {"ab"}).apply(H.delta(), {"ab"}, {"x", "y"}); },
      [&](T& t) {
        t.apply(H.delta(), {"a"}, {"a1", "a2"})
            .apply(H.delta(), {"b"}, {"b1", "b2"})
            .apply(H.mu(), {"a1", "b1"}, {"x"})
            .apply(H.mu(), {"a2", "b2"}, {"y"});
      });
  std::vector<Leg> abc = {{"a", d}, {"b", d}, {"c", d}};
  check_identity<F>(
      rep, "weak-bialgebra.counit-left", "weak bialgebra: eps((ab)c)=eps(ab1)eps(b2c)", ctx, abc, {},
      [&](T& t) { t.apply(H.mu(), {"a", "b"}, {"ab"}).apply(H.mu(), {"ab", "c"}, {"y"}).apply(H.eps(), {"y"}, {}); },
      [&](T& t) {
        t.apply(H.delta(), {"b"}, {"b1", "b2"})
            .apply(H.mu(), {"a", "b1"}, {"y"})
            .apply(H.mu(), {"b2", "c"}, {"z"})
            .apply(H.eps(), {"y"}, {})
            .apply(H.eps(), {"z"}, {});
      });
  check_identity<F>(
      rep, "weak-bialgebra.counit-right", "weak bialgebra: eps(a(bc))=eps(ab2)eps(b1c)", ctx, abc, {},
      [&](T& t) { t.apply(H.mu(), {"b", "c"}, {"bc"}).apply(H.mu(), {"a", "bc"}, {"y"}).apply(H.eps(), {"y"}, {}); },
      [&](T& t) {
        t.apply(H.delta(), {"b"}, {"b1", "b2"})
            .apply(H.mu(), {"a", "b2"}, {"y"})
            .apply(H.mu(), {"b1", "c"}, {"z"})
            .apply(H.eps(), {"y"}, {})
            .apply(H.eps(), {"z"}, {});
      });
  std::vector<Leg> xyz = {{"x", d}, {"y", d}, {"z", d}};
  check_identity<F>(
      rep, "weak-bialgebra.unit-left", "weak bialgebra: (Delta(x)id)Delta(1)=1_1(x)1_2 1'_1(x)1'_2", ctx, {}, xyz,
      [&](T& t) { t.apply(H.one1(), {}, {"p", "z"}).apply(H.delta(), {"p"}, {"x", "y"}); },
      [&](T& t) { t.apply(H.one1(), {}, {"x", "q"}).apply(H.one1(), {}, {"r", "z"}).apply(H.mu(), {"q", "r"}, {"y"}); });
  check_identity<F>(
      rep, "weak-bialgebra.unit-right", "weak bialgebra: (id(x)Delta)Delta(1)=1_1(x)1'_1 1_2(x)1'_2", ctx, {}, xyz,
      [&](T& t) { t.apply(H.one1(), {}, {"x", "p"}).apply(H.delta(), {"p"}, {"y", "z"}); },
      [&](T& t) { t.apply(H.one1(), {}, {"x", "q"}).apply(H.one1(), {}, {"r", "z"}).apply(H.mu(), {"r", "q"}, {"y"}); });
  return rep;
}

template <ExactField F>
CheckReport check_antipode(const WeakHomHopfAlgebra<F>& H, CheckOptions opt = {}) {
  using T = Tensor<F>;
  CheckReport rep("antipode", opt);
  const auto d = H.dim();
  const auto& ctx = H.ctx();
  auto cm = counital_maps(H);
  std::vector<Leg> h = {{"h", d}}, x = {{"x", d}};
  check_maps_equal(rep, "antipode.commutes-with-twist", "antipode: S alpha = alpha S", compose(H.S(), H.alpha()),
                   compose(H.alpha(), H.S()));
  check_identity<F>(
      rep, "antipode.target", "antipode: h1 S(h2)=eps_t(h)", ctx, h, x,
      [&](T& t) { t.apply(H.delta(), {"h"}, {"a", "b"}).apply1(H.S(), "b").apply(H.mu(), {"a", "b"}, {"x"}); },
      [&](T& t) { t.apply(cm.eps_t, {"h"}, {"x"}); });
  check_identity<F>(
      rep, "antipode.source", "antipode: S(h1)h2=eps_s(h)", ctx, h, x,
      [&](T& t) { t.apply(H.delta(), {"h"}, {"a", "b"}).apply1(H.S(), "a").apply(H.mu(), {"a", "b"}, {"x"}); },
      [&](T& t) { t.apply(cm.eps_s, {"h"}, {"x"}); });
  check_identity<F>(
      rep, "antipode.anti-multiplicative", "antipode: S(hg)=S(g)S(h)", ctx, {{"h", d}, {"g", d}}, x,
      [&](T& t) { t.apply(H.mu(), {"h", "g"}, {"y"}).apply(H.S(), {"y"}, {"x"}); },
      [&](T& t) { t.apply1(H.S(), "h").apply1(H.S(), "g").apply(H.mu(), {"g", "h"}, {"x"}); });
  check_maps_equal(rep, "antipode.unit", "antipode: S(1)=1", compose(H.S(), H.eta()), H.eta());
  check_identity<F>(
      rep, "antipode.anti-comultiplicative", "antipode: Delta(S h)=S(h2)(x)S(h1)", ctx, h, {{"x", d}, {"y", d}},
      [&](T& t) { t.apply1(H.S(), "h").apply(H.delta(), {"h"}, {"x", "y"}); },
      [&](T& t) { t.apply(H.delta(), {"h"}, {"y", "x"}).apply1(H.S(), "x").apply1(H.S(), "y"); });
  check_maps_equal(rep, "antipode.counit", "antipode: eps S = eps", compose(H.eps(), H.S()), H.eps());
  check_maps_equal(rep, "antipode.invertible", "antipode: S S^{-1} = id", compose(H.S(), H.S_inv()), H.id());
  return rep;
}

/// Full axiom suite: Hom-algebra, Hom-coalgebra, weak bialgebra, antipode.
template <ExactField F>
CheckReport certify(const WeakHomHopfAlgebra<F>& H, CheckOptions opt = {}) {
  CheckReport rep(H.name(), opt);
  rep.merge(check_hom_algebra(H.algebra(), opt));
  rep.merge(check_hom_coalgebra(H.coalgebra(), opt));
  rep.merge(check_weak_bialgebra(H, opt));
  rep.merge(check_antipode(H, opt));
  return rep;
}

/// Facts about the counital maps that the category constructions rely on.
template <ExactField F>
CheckReport counital_report(const WeakHomHopfAlgebra<F>& H, CheckOptions opt = {}) {
  CheckReport rep("counital", opt);
  auto c = counital_maps(H);
  auto invariant = [&](const Subspace<F>& s) {
    for (const auto& b : s.basis())
      if (!s.member(H.alpha().apply(b))) return false;
    return true;
  };
  check_maps_equal(rep, "counital.eps_t-idempotent", "eps_t eps_t = eps_t", compose(c.eps_t, c.eps_t), c.eps_t);
  check_maps_equal(rep, "counital.eps_s-idempotent", "eps_s eps_s = eps_s", compose(c.eps_s, c.eps_s), c.eps_s);
  rep.fact("counital.alpha-preserves-Hs", "alpha(H_s) in H_s", invariant(c.Hs));
  rep.fact("counital.alpha-preserves-Ht", "alpha(H_t) in H_t", invariant(c.Ht));
  rep.fact("counital.Hs-equals-Ht", "H_s = H_t (unit-object convention)", c.Hs == c.Ht);
  CheckEntry& e = rep.fact("counital.dims", "dimensions", true);
  e.notes.push_back("dim H_t=" + std::to_string(c.Ht.dim()) + " dim H_s=" + std::to_string(c.Hs.dim()) +
                    " dim hatH_t=" + std::to_string(c.hat_Ht.dim()) + " dim hatH_s=" + std::to_string(c.hat_Hs.dim()));
  return rep;
}

}  // namespace whh
