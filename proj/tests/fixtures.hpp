#pragma once

// Shared fixtures: single-entry mutations of corpus structures, and an
// independent classical braiding oracle.

#include "whh/whh.hpp"

#include <functional>

namespace fixtures {

using namespace whh;
using Q = Rational;

template <ExactField F>
LinearMap<F> bump(LinearMap<F> f, std::size_t row, std::size_t col, const F& by) {
  f.set(row, col, f.entry(row, col) + by);
  return f;
}

struct HopfMutation {
  std::string name;
  WeakHomHopfAlgebra<Q> H;
};

/// Which structure map to perturb.
enum class Slot { mu, eta, delta, eps, alpha, S };

inline WeakHomHopfAlgebra<Q> mutate(const WeakHomHopfAlgebra<Q>& H, Slot s, std::size_t row, std::size_t col,
                                    const std::string& name) {
  const Q one = H.ctx().one();
  auto mu = H.mu(), eta = H.eta(), delta = H.delta(), eps = H.eps(), alpha = H.alpha(), S = H.S();
  switch (s) {
    case Slot::mu: mu = bump(mu, row, col, one); break;
    case Slot::eta: eta = bump(eta, row, col, one); break;
    case Slot::delta: delta = bump(delta, row, col, one); break;
    case Slot::eps: eps = bump(eps, row, col, one); break;
    case Slot::alpha: alpha = bump(alpha, row, col, one); break;
    case Slot::S: S = bump(S, row, col, one); break;
  }
  return WeakHomHopfAlgebra<Q>(name, H.ctx(), H.dim(), mu, eta, delta, eps, alpha, S);
}

/// Single-entry structure-constant mutations of certified instances
/// (each keeps alpha and S invertible so the object can be built).
inline std::vector<HopfMutation> hopf_mutations() {
  std::vector<HopfMutation> v;
  auto kz2 = instance_kz2().H;
  auto ks3 = instance_ks3().H;
  auto pair2 = instance_pair2().H;
  auto disc = instance_discrete2().H;
  auto tw4 = instance_twisted_kz4().H;
  auto tw3 = instance_twisted_kz3().H;
  auto add = [&](const WeakHomHopfAlgebra<Q>& H, Slot s, std::size_t r, std::size_t c, const std::string& what) {
    const auto name = H.name() + ":" + what;
    v.push_back({name, mutate(H, s, r, c, name)});
  };
  add(kz2, Slot::mu, 0, 3, "mu(g,g)+=1");
  add(kz2, Slot::eta, 1, 0, "eta+=g");
  add(kz2, Slot::delta, 2, 1, "Delta(g)+=g(x)1");
  add(kz2, Slot::eps, 0, 1, "eps(g)+=1");
  add(kz2, Slot::S, 0, 1, "S(g)+=1");
  add(kz2, Slot::alpha, 0, 1, "alpha(g)+=1");
  add(ks3, Slot::mu, 0, 1 * 6 + 2, "mu(1,2)+=e0");
  add(ks3, Slot::delta, 0, 3, "Delta(e3)+=e0(x)e0");
  add(pair2, Slot::mu, 0, 1 * 4 + 2, "mu(1,2)+=e0");
  add(pair2, Slot::delta, 1 * 4 + 2, 3, "Delta(e3)+=e1(x)e2");
  add(disc, Slot::eps, 0, 0, "eps(e0)+=1");
  add(tw4, Slot::alpha, 1, 1, "alpha(g)+=g");
  add(tw3, Slot::mu, 0, 1 * 3 + 1, "mu(g,g)+=1");
  add(tw4, Slot::S, 2, 1, "S(g)+=g^2");
  return v;
}

struct ModuleFixture {
  std::string name;  // instance/module:mutation
  WeakHomHopfAlgebra<Q> H;
  YDPtr<Q> M;
  bool mutated;
};

/// Every certified corpus object, plus for each one an action mutation and a
/// coaction mutation, plus kS3 module-comodules that are not Yetter-Drinfeld
/// (1-dim characters graded by a non-central element).
inline std::vector<ModuleFixture> module_fixtures() {
  std::vector<ModuleFixture> v;
  {
    auto H = instance_ks3().H;
    const Q one(1), m1(-1);
    const std::vector<Q> triv(6, one), sgn{one, m1, m1, one, one, m1};
    for (std::size_t g = 1; g < 6; ++g) {
      v.push_back({"kS3/triv@e" + std::to_string(g), H, one_dim_module(H, triv, g, one, "triv@e" + std::to_string(g)), true});
      v.push_back({"kS3/sgn@e" + std::to_string(g), H, one_dim_module(H, sgn, g, one, "sgn@e" + std::to_string(g)), true});
    }
  }
  for (const auto& I : rational_corpus()) {
    for (const auto& M : I.modules) {
      v.push_back({I.name + "/" + M->name, I.H, M, false});
      const auto one = I.H.ctx().one();
      const auto d = I.H.dim(), m = M->dim;
      // act: h = last basis element acting on m_0, extra component on the last basis vector
      auto act = bump(M->act, m - 1, (d - 1) * m, one);
      v.push_back({I.name + "/" + M->name + ":act", I.H, make_yd(I.H, M->name + ":act", act, M->co, M->alpha), true});
      // co: extra (m_0 (x) last basis element)
      auto co = bump(M->co, d - 1, 0, one);
      v.push_back({I.name + "/" + M->name + ":co", I.H, make_yd(I.H, M->name + ":co", M->act, co, M->alpha), true});
    }
  }
  return v;
}

/// Classical Yetter-Drinfeld braiding c(m (x) n) = n_0 (x) n_1.m on the full
/// tensor space, from structure constants with plain loops. Rows (n0, m'),
/// columns (m, n).
inline std::vector<std::vector<Q>> classical_braiding(const WeakHomHopfAlgebra<Q>& H, const YDModule<Q>& M,
                                                      const YDModule<Q>& N) {
  const auto d = H.dim(), m = M.dim, n = N.dim;
  std::vector<std::vector<Q>> c(n * m, std::vector<Q>(m * n, Q(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t j0 = 0; j0 < n; ++j0)
        for (std::size_t h = 0; h < d; ++h) {
          const Q w = N.co.entry(j0 * d + h, j);
          if (w.is_zero()) continue;
          for (std::size_t i2 = 0; i2 < m; ++i2) {
            const Q a = M.act.entry(i2, h * m + i);
            if (!a.is_zero()) c[j0 * m + i2][i * n + j] = c[j0 * m + i2][i * n + j] + w * a;
          }
        }
  return c;
}

}  // namespace fixtures
