#pragma once

// The desk-scale corpus: group and groupoid algebras, Yau twists and their
// Yetter-Drinfeld modules. Everything returned here has passed its checks.

#include "whh/groups.hpp"
#include "whh/qt_cqt.hpp"
#include "whh/twist.hpp"
#include "whh/yd_category.hpp"

namespace whh {

/// 1-dim object: h.x = chi(h) x, rho(x) = x (x) b_g, alpha_M = lambda.
template <ExactField F>
YDPtr<F> one_dim_module(const WeakHomHopfAlgebra<F>& H, const std::vector<F>& chi, std::size_t grade, F lambda,
                        std::string name) {
  const auto d = H.dim();
  const auto& ctx = H.ctx();
  if (chi.size() != d) throw ShapeError("character needs " + std::to_string(d) + " values");
  if (grade >= d) throw ShapeError("grade index out of range");
  LinearMap<F> act({d, 1}, {1}, ctx), co({1}, {1, d}, ctx), al({1}, {1}, ctx);
  for (std::size_t i = 0; i < d; ++i) act.set(0, i, chi[i]);
  co.set(grade, 0, ctx.one());
  al.set(0, 0, lambda);
  return make_yd(H, std::move(name), act, co, al);
}

/// Adjoint-style object on H: h.m = h_2 m S^-1(h_1), rho = Delta, alpha_M = alpha.
/// Only meaningful for alpha = id; callers certify.
template <ExactField F>
YDPtr<F> adjoint_module(const WeakHomHopfAlgebra<F>& H, std::string name = "adj") {
  using T = Tensor<F>;
  const auto d = H.dim();
  auto act = tabulate<F>(H.ctx(), {{"h", d}, {"m", d}}, {{"x", d}}, [&](T& t) {
    t.apply(H.delta(), {"h"}, {"h1", "h2"})
        .apply(H.mu(), {"h2", "m"}, {"p"})
        .apply1(H.S_inv(), "h1")
        .apply(H.mu(), {"p", "h1"}, {"x"});
  });
  return make_yd(H, std::move(name), act, H.delta(), H.alpha());
}

/// Object module of a groupoid algebra: basis v_o, arrow a: s -> t sends v_s
/// to v_t, rho(v_o) = v_o (x) id_o.
template <ExactField F>
YDPtr<F> object_module(const WeakHomHopfAlgebra<F>& H, const GroupoidPresentation& G, std::string name = "obj") {
  const auto n = G.objects, d = H.dim();
  const auto& ctx = H.ctx();
  LinearMap<F> act({d, n}, {n}, ctx), co({n}, {n, d}, ctx);
  for (std::size_t a = 0; a < G.size(); ++a) act.set(G.arrows[a].second, a * n + G.arrows[a].first, ctx.one());
  for (std::size_t o = 0; o < n; ++o) co.set(o * d + *G.identity_of(o), o, ctx.one());
  return make_yd(H, std::move(name), act, co, LinearMap<F>::identity({n}, ctx));
}

/// Transports an object of H to the Yau twist H^beta: action beta_M o act,
/// coaction (beta_M (x) beta) o rho, twist beta_M o alpha_M.
template <ExactField F>
YDPtr<F> twist_module(const WeakHomHopfAlgebra<F>& Hb, const YDModule<F>& M, const LinearMap<F>& beta_M,
                      const LinearMap<F>& beta, std::string name) {
  return make_yd(Hb, std::move(name), compose(beta_M, M.act), compose(tensor(beta_M, beta), M.co),
                 compose(beta_M, M.alpha));
}

/// Candidate scalar values for the 1-dim search: roots of x^n = 1 for n | d! over
/// the prime field or {1,-1} over the rationals, plus 0 when allowed.
template <ExactField F>
std::vector<F> character_values(const typename F::Context& ctx, bool with_zero) {
  std::vector<F> v;
  if (with_zero) v.push_back(ctx.zero());
  if constexpr (std::is_same_v<F, ModP>) {
    for (std::uint64_t x = 1; x < ctx.modulus(); ++x) v.push_back(ctx.from_int(static_cast<std::int64_t>(x)));
  } else {
    v.push_back(ctx.one());
    v.push_back(-ctx.one());
  }
  return v;
}

/// Exhaustive 1-dim search: every (chi, grade, lambda) with values from
/// character_values that passes the full YD check.
template <ExactField F>
std::vector<YDPtr<F>> one_dim_search(const WeakHomHopfAlgebra<F>& H, bool with_zero) {
  const auto d = H.dim();
  const auto& ctx = H.ctx();
  auto vals = character_values<F>(ctx, with_zero);
  auto lambdas = character_values<F>(ctx, false);
  std::vector<YDPtr<F>> out;
  std::vector<std::size_t> pick(d, 0);
  const auto base = vals.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= base;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    std::vector<F> chi(d);
    for (std::size_t i = 0; i < d; ++i) {
      chi[i] = vals[c % base];
      c /= base;
    }
    for (const auto& lam : lambdas) {
      auto probe = one_dim_module(H, chi, 0, lam, "probe");
      if (!check_module(H.algebra(), probe->module()).pass()) continue;
      for (std::size_t g = 0; g < d; ++g) {
        std::string name = "chi[";
        for (std::size_t i = 0; i < d; ++i) name += (i ? "," : "") + chi[i].str();
        name += "]@" + std::to_string(g);
        if (!(lam == ctx.one())) name += "*" + lam.str();
        auto M = one_dim_module(H, chi, g, lam, name);
        if (check_yd(H, *M).pass()) out.push_back(M);
      }
    }
  }
  return out;
}

template <ExactField F>
struct Instance {
  std::string name;
  WeakHomHopfAlgebra<F> H;
  std::vector<YDPtr<F>> modules;  // certified objects used in corpus sweeps
  std::string note;
};

namespace detail {

template <ExactField F>
void keep_certified(Instance<F>& I, const YDPtr<F>& M) {
  if (!check_yd(I.H, *M).pass()) throw StructureError("corpus object " + M->name + " fails certification");
  I.modules.push_back(M);
}

template <ExactField F>
LinearMap<F> group_automorphism(const GroupPresentation& G, const std::vector<std::size_t>& image,
                                const typename F::Context& ctx) {
  LinearMap<F> b({G.order}, {G.order}, ctx);
  for (std::size_t a = 0; a < G.order; ++a) b.set(image[a], a, ctx.one());
  return b;
}

}  // namespace detail

inline Instance<Rational> instance_kz2() {
  RationalField Q;
  auto G = GroupPresentation::cyclic(2);
  Instance<Rational> I{"kZ2", group_algebra<Rational>(G, Q, "kZ2"), {}, "group algebra of Z/2 over Q"};
  auto one = Q.one(), m1 = -Q.one();
  detail::keep_certified(I, one_dim_module(I.H, {one, m1}, 1, one, "sign"));
  detail::keep_certified(I, one_dim_module(I.H, {one, one}, 1, one, "triv@g"));
  detail::keep_certified(I, one_dim_module(I.H, {one, one}, 0, one, "triv"));
  detail::keep_certified(I, adjoint_module(I.H));
  return I;
}

inline Instance<ModP> instance_kz3_gf7() {
  PrimeField P(7);
  auto G = GroupPresentation::cyclic(3);
  Instance<ModP> I{"kZ3/GF7", group_algebra<ModP>(G, P, "kZ3/GF7"), {}, "group algebra of Z/3 over GF(7)"};
  auto f = [&](std::int64_t x) { return P.from_int(x); };
  // chi(g) = 2 is a primitive cube root of unity mod 7
  detail::keep_certified(I, one_dim_module(I.H, {f(1), f(2), f(4)}, 1, f(1), "chi2@g"));
  detail::keep_certified(I, one_dim_module(I.H, {f(1), f(4), f(2)}, 2, f(1), "chi4@g2"));
  detail::keep_certified(I, one_dim_module(I.H, {f(1), f(1), f(1)}, 0, f(1), "triv"));
  detail::keep_certified(I, adjoint_module(I.H));
  return I;
}

inline Instance<Rational> instance_ks3() {
  RationalField Q;
  auto G = GroupPresentation::symmetric3();
  Instance<Rational> I{"kS3", group_algebra<Rational>(G, Q, "kS3"), {}, "group algebra of S3 over Q"};
  std::vector<Rational> sgn;
  for (std::size_t a = 0; a < 6; ++a) {
    // parity of the permutation from the lexicographic list
    const bool odd = a == 1 || a == 2 || a == 5;
    sgn.push_back(odd ? -Q.one() : Q.one());
  }
  detail::keep_certified(I, one_dim_module(I.H, sgn, 0, Q.one(), "sgn"));
  detail::keep_certified(I, one_dim_module(I.H, std::vector<Rational>(6, Q.one()), 0, Q.one(), "triv"));
  detail::keep_certified(I, adjoint_module(I.H));
  return I;
}

inline Instance<Rational> instance_discrete2() {
  RationalField Q;
  auto G = GroupoidPresentation::discrete(2);
  Instance<Rational> I{"discrete2", groupoid_algebra<Rational>(G, Q, "discrete2"), {},
                       "groupoid algebra of the 2-object identity groupoid"};
  detail::keep_certified(I, object_module(I.H, G));
  detail::keep_certified(I, adjoint_module(I.H));
  detail::keep_certified(I, unit_object(I.H));
  return I;
}

inline Instance<Rational> instance_pair2() {
  RationalField Q;
  auto G = GroupoidPresentation::pair(2);
  Instance<Rational> I{"pair2", groupoid_algebra<Rational>(G, Q, "pair2"), {},
                       "groupoid algebra of the pair groupoid on 2 objects"};
  detail::keep_certified(I, object_module(I.H, G));
  detail::keep_certified(I, unit_object(I.H));
  return I;
}

/// kZ_n twisted by the Hopf automorphism g -> g^k, with the classical objects
/// transported along the same automorphism.
inline Instance<Rational> instance_twisted_cyclic(std::size_t n, std::size_t k) {
  RationalField Q;
  auto G = GroupPresentation::cyclic(n);
  auto base = group_algebra<Rational>(G, Q, "kZ" + std::to_string(n));
  std::vector<std::size_t> img(n);
  for (std::size_t a = 0; a < n; ++a) img[a] = (a * k) % n;
  auto beta = detail::group_automorphism<Rational>(G, img, Q);
  const std::string name = "kZ" + std::to_string(n) + "^(g->g^" + std::to_string(k) + ")";
  Instance<Rational> I{name, yau_twist(base, beta, name), {}, "Yau twist of a cyclic group algebra"};
  auto adj = adjoint_module(base);
  detail::keep_certified(I, twist_module(I.H, *adj, beta, beta, "adj^beta"));
  auto one = Q.one();
  // grade 1 and a real character are beta-invariant for any k
  std::vector<Rational> triv(n, one);
  detail::keep_certified(I, twist_module(I.H, *one_dim_module(base, triv, 0, one, "triv"),
                                         LinearMap<Rational>::identity({1}, Q), beta, "triv"));
  if (n % 2 == 0) {
    std::vector<Rational> sg(n);
    for (std::size_t a = 0; a < n; ++a) sg[a] = a % 2 ? -one : one;
    auto s = one_dim_module(base, sg, n / 2, one, "sign@g^" + std::to_string(n / 2));
    detail::keep_certified(I, twist_module(I.H, *s, LinearMap<Rational>::identity({1}, Q), beta, s->name));
  }
  return I;
}

inline Instance<Rational> instance_twisted_kz4() { return instance_twisted_cyclic(4, 3); }
inline Instance<Rational> instance_twisted_kz3() { return instance_twisted_cyclic(3, 2); }

/// The kZ2 twist by beta(g) = -g, which is not a coalgebra map; throws.
inline WeakHomHopfAlgebra<Rational> attempt_twisted_kz2() {
  RationalField Q;
  auto G = GroupPresentation::cyclic(2);
  auto base = group_algebra<Rational>(G, Q, "kZ2");
  LinearMap<Rational> beta({2}, {2}, Q);
  beta.set(0, 0, Q.one());
  beta.set(1, 1, -Q.one());
  return yau_twist(base, beta, "kZ2^(g->-g)");
}

/// R = 1(x)1 = Rbar, valid on any Hopf (Delta(1) = 1(x)1) instance.
template <ExactField F>
RMatrix<F> trivial_rmatrix(const WeakHomHopfAlgebra<F>& H) {
  auto R = tensor(H.eta(), H.eta());
  return {R, R};
}

/// On kZ_n (n even, basis g^a, possibly Yau twisted by g -> g^k with k odd):
/// R = 1/2 (1(x)1 + 1(x)u + u(x)1 - u(x)u) with u = g^{n/2}, and Rbar = R.
inline RMatrix<Rational> cyclic_sign_rmatrix(const WeakHomHopfAlgebra<Rational>& H) {
  const auto d = H.dim();
  if (d % 2) throw ShapeError("sign R-matrix needs an even cyclic group");
  const auto& Q = H.ctx();
  const std::size_t u = d / 2;
  auto half = Q.one() / Q.from_int(2);
  LinearMap<Rational> R({}, {d, d}, Q);
  R.set(0, 0, half);
  R.set(u, 0, half);
  R.set(u * d, 0, half);
  R.set(u * d + u, 0, -half);
  return {R, R};
}

/// sigma(a,b) = eps(a)eps(b), sigma' = sigma.
template <ExactField F>
SigmaForm<F> trivial_sigma(const WeakHomHopfAlgebra<F>& H) {
  auto s = tensor(H.eps(), H.eps());
  return {s, s};
}

/// On kZ_n (n even): sigma(g^i, g^j) = (-1)^{ij}, sigma' = sigma.
inline SigmaForm<Rational> cyclic_sign_sigma(const WeakHomHopfAlgebra<Rational>& H) {
  const auto d = H.dim();
  if (d % 2) throw ShapeError("sign form needs an even cyclic group");
  const auto& Q = H.ctx();
  LinearMap<Rational> s({d, d}, {}, Q);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) s.set(0, i * d + j, (i * j) % 2 ? -Q.one() : Q.one());
  return {s, s};
}

/// All rational corpus instances in a fixed order.
inline std::vector<Instance<Rational>> rational_corpus() {
  std::vector<Instance<Rational>> v;
  v.push_back(instance_kz2());
  v.push_back(instance_ks3());
  v.push_back(instance_discrete2());
  v.push_back(instance_pair2());
  v.push_back(instance_twisted_kz4());
  v.push_back(instance_twisted_kz3());
  v.push_back(instance_twisted_cyclic(5, 2));
  return v;
}

}  // namespace whh
