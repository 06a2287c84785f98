#pragma once

// Hom-algebras, Hom-coalgebras and their (co)modules, with axiom checkers.
// Structure maps:  mu (d,d)->(d), eta ()->(d), delta (d)->(d,d), eps (d)->(),
// action (d,m)->(m), coaction (m)->(m,d).

#include "whh/report.hpp"

namespace whh {

template <ExactField F>
struct HomAlgebra {
  using Context = typename F::Context;
  std::size_t d = 0;
  LinearMap<F> mu, eta, alpha;
  Context ctx{};
};

template <ExactField F>
struct HomCoalgebra {
  using Context = typename F::Context;
  std::size_t d = 0;
  LinearMap<F> delta, eps, alpha;
  Context ctx{};
};

template <ExactField F>
struct HModule {
  std::size_t dim = 0;
  LinearMap<F> act, alpha;
};

template <ExactField F>
struct HComodule {
  std::size_t dim = 0;
  LinearMap<F> co, alpha;
};

namespace detail {

inline void expect_shape(const Shape& got, const Shape& want, const std::string& what) {
  if (got != want) throw ShapeError(what + " has shape " + shape_str(got) + ", expected " + shape_str(want));
}

template <ExactField F>
bool invertible(const LinearMap<F>& f) {
  return f.rows() == f.cols() && rank(f) == f.rows();
}

}  // namespace detail

template <ExactField F>
void validate(const HomAlgebra<F>& A) {
  const auto d = A.d;
  detail::expect_shape(A.mu.dom(), {d, d}, "multiplication domain");
  detail::expect_shape(A.mu.cod(), {d}, "multiplication codomain");
  detail::expect_shape(A.eta.dom(), {}, "unit domain");
  detail::expect_shape(A.eta.cod(), {d}, "unit codomain");
  detail::expect_shape(A.alpha.dom(), {d}, "twist domain");
  detail::expect_shape(A.alpha.cod(), {d}, "twist codomain");
}

template <ExactField F>
void validate(const HomCoalgebra<F>& C) {
  const auto d = C.d;
  detail::expect_shape(C.delta.dom(), {d}, "comultiplication domain");
  detail::expect_shape(C.delta.cod(), {d, d}, "comultiplication codomain");
  detail::expect_shape(C.eps.dom(), {d}, "counit domain");
  detail::expect_shape(C.eps.cod(), {}, "counit codomain");
  detail::expect_shape(C.alpha.dom(), {d}, "twist domain");
  detail::expect_shape(C.alpha.cod(), {d}, "twist codomain");
}

template <ExactField F>
CheckReport check_hom_algebra(const HomAlgebra<F>& A, CheckOptions opt = {}) {
  validate(A);
  CheckReport rep("hom-algebra", opt);
  const auto d = A.d;
  const auto& ctx = A.ctx;
  rep.fact("hom-algebra.twist-invertible", "bijective structure maps", detail::invertible(A.alpha));
  using T = Tensor<F>;
  std::vector<Leg> ab = {{"a", d}, {"b", d}};
  std::vector<Leg> abc = {{"a", d}, {"b", d}, {"c", d}};
  std::vector<Leg> x = {{"x", d}};
  check_identity<F>(
      rep, "hom-algebra.multiplicative-twist", "Hom-algebra: alpha(ab)=alpha(a)alpha(b)", ctx, ab, x,
      [&](T& t) { t.apply(A.mu, {"a", "b"}, {"x"}).apply1(A.alpha, "x"); },
      [&](T& t) { t.apply1(A.alpha, "a").apply1(A.alpha, "b").apply(A.mu, {"a", "b"}, {"x"}); });
  check_identity<F>(
      rep, "hom-algebra.hom-associativity", "Hom-algebra: alpha(a)(bc)=(ab)alpha(c)", ctx, abc, x,
      [&](T& t) { t.apply1(A.alpha, "a").apply(A.mu, {"b", "c"}, {"y"}).apply(A.mu, {"a", "y"}, {"x"}); },
      [&](T& t) { t.apply1(A.alpha, "c").apply(A.mu, {"a", "b"}, {"y"}).apply(A.mu, {"y", "c"}, {"x"}); });
  check_maps_equal(rep, "hom-algebra.twist-fixes-unit", "Hom-algebra: alpha(1)=1", compose(A.alpha, A.eta), A.eta);
  check_identity<F>(
      rep, "hom-algebra.left-unit", "Hom-algebra: 1a=alpha(a)", ctx, {{"a", d}}, x,
      [&](T& t) { t.apply(A.eta, {}, {"u"}).apply(A.mu, {"u", "a"}, {"x"}); },
      [&](T& t) { t.apply(A.alpha, {"a"}, {"x"}); });
  check_identity<F>(
      rep, "hom-algebra.right-unit", "Hom-algebra: a1=alpha(a)", ctx, {{"a", d}}, x,
      [&](T& t) { t.apply(A.eta, {}, {"u"}).apply(A.mu, {"a", "u"}, {"x"}); },
      [&](T& t) { t.apply(A.alpha, {"a"}, {"x"}); });
  return rep;
}

template <ExactField F>
CheckReport check_hom_coalgebra(const HomCoalgebra<F>& C, CheckOptions opt = {}) {
  validate(C);
  CheckReport rep("hom-coalgebra", opt);
  const auto d = C.d;
  const auto& ctx = C.ctx;
  rep.fact("hom-coalgebra.twist-invertible", "bijective structure maps", detail::invertible(C.alpha));
  using T = Tensor<F>;
  std::vector<Leg> c = {{"c", d}};
  check_identity<F>(
      rep, "hom-coalgebra.comultiplicative-twist", "Hom-coalgebra: Delta(alpha c)=alpha(c1)(x)alpha(c2)", ctx, c,
      {{"x", d}, {"y", d}}, [&](T& t) { t.apply1(C.alpha, "c").apply(C.delta, {"c"}, {"x", "y"}); },
      [&](T& t) { t.apply(C.delta, {"c"}, {"x", "y"}).apply1(C.alpha, "x").apply1(C.alpha, "y"); });
  check_identity<F>(
      rep, "hom-coalgebra.hom-coassociativity", "Hom-coalgebra: (alpha(x)Delta)Delta=(Delta(x)alpha)Delta", ctx, c,
      {{"x", d}, {"y", d}, {"z", d}},
      [&](T& t) { t.apply(C.delta, {"c"}, {"x", "w"}).apply1(C.alpha, "x").apply(C.delta, {"w"}, {"y", "z"}); },
      [&](T& t) { t.apply(C.delta, {"c"}, {"w", "z"}).apply1(C.alpha, "z").apply(C.delta, {"w"}, {"x", "y"}); });
  check_maps_equal(rep, "hom-coalgebra.counit-twist-invariant", "Hom-coalgebra: eps(alpha c)=eps(c)",
                   compose(C.eps, C.alpha), C.eps);
  check_identity<F>(
      rep, "hom-coalgebra.left-counit", "Hom-coalgebra: eps(c1)c2=alpha(c)", ctx, c, {{"x", d}},
      [&](T& t) { t.apply(C.delta, {"c"}, {"y", "x"}).apply(C.eps, {"y"}, {}); },
      [&](T& t) { t.apply(C.alpha, {"c"}, {"x"}); });
  check_identity<F>(
      rep, "hom-coalgebra.right-counit", "Hom-coalgebra: c1 eps(c2)=alpha(c)", ctx, c, {{"x", d}},
      [&](T& t) { t.apply(C.delta, {"c"}, {"x", "y"}).apply(C.eps, {"y"}, {}); },
      [&](T& t) { t.apply(C.alpha, {"c"}, {"x"}); });
  return rep;
}

template <ExactField F>
CheckReport check_module(const HomAlgebra<F>& A, const HModule<F>& M, CheckOptions opt = {}) {
  const auto d = A.d, m = M.dim;
  detail::expect_shape(M.act.dom(), {d, m}, "action domain");
  detail::expect_shape(M.act.cod(), {m}, "action codomain");
  detail::expect_shape(M.alpha.dom(), {m}, "module twist");
  CheckReport rep("module", opt);
  const auto& ctx = A.ctx;
  using T = Tensor<F>;
  rep.fact("module.twist-invertible", "bijective structure maps", detail::invertible(M.alpha));
  check_identity<F>(
      rep, "module.twist-compatible", "module: alpha_M(a.m)=alpha(a).alpha_M(m)", ctx, {{"a", d}, {"m", m}},
      {{"x", m}}, [&](T& t) { t.apply(M.act, {"a", "m"}, {"x"}).apply1(M.alpha, "x"); },
      [&](T& t) { t.apply1(A.alpha, "a").apply1(M.alpha, "m").apply(M.act, {"a", "m"}, {"x"}); });
  check_identity<F>(
      rep, "module.hom-associativity", "module: alpha(a).(b.m)=(ab).alpha_M(m)", ctx, {{"a", d}, {"b", d}, {"m", m}},
      {{"x", m}},
      [&](T& t) { t.apply1(A.alpha, "a").apply(M.act, {"b", "m"}, {"y"}).apply(M.act, {"a", "y"}, {"x"}); },
      [&](T& t) { t.apply(A.mu, {"a", "b"}, {"ab"}).apply1(M.alpha, "m").apply(M.act, {"ab", "m"}, {"x"}); });
  check_identity<F>(
      rep, "module.unital", "module: 1.m=alpha_M(m)", ctx, {{"m", m}}, {{"x", m}},
      [&](T& t) { t.apply(A.eta, {}, {"u"}).apply(M.act, {"u", "m"}, {"x"}); },
      [&](T& t) { t.apply(M.alpha, {"m"}, {"x"}); });
  return rep;
}

template <ExactField F>
CheckReport check_comodule(const HomCoalgebra<F>& C, const HComodule<F>& M, CheckOptions opt = {}) {
  const auto d = C.d, m = M.dim;
  detail::expect_shape(M.co.dom(), {m}, "coaction domain");
  detail::expect_shape(M.co.cod(), {m, d}, "coaction codomain");
  detail::expect_shape(M.alpha.dom(), {m}, "comodule twist");
  CheckReport rep("comodule", opt);
  const auto& ctx = C.ctx;
  using T = Tensor<F>;
  rep.fact("comodule.twist-invertible", "bijective structure maps", detail::invertible(M.alpha));
  check_identity<F>(
      rep, "comodule.twist-compatible", "comodule: rho(alpha_M m)=alpha_M(m0)(x)alpha(m1)", ctx, {{"m", m}},
      {{"x", m}, {"h", d}}, [&](T& t) { t.apply1(M.alpha, "m").apply(M.co, {"m"}, {"x", "h"}); },
      [&](T& t) { t.apply(M.co, {"m"}, {"x", "h"}).apply1(M.alpha, "x").apply1(C.alpha, "h"); });
  check_identity<F>(
      rep, "comodule.hom-coassociativity", "comodule: alpha_M(m0)(x)Delta(m1)=rho(m0)(x)alpha(m1)", ctx, {{"m", m}},
      {{"x", m}, {"h1", d}, {"h2", d}},
      [&](T& t) { t.apply(M.co, {"m"}, {"x", "h"}).apply1(M.alpha, "x").apply(C.delta, {"h"}, {"h1", "h2"}); },
      [&](T& t) { t.apply(M.co, {"m"}, {"y", "h2"}).apply1(C.alpha, "h2").apply(M.co, {"y"}, {"x", "h1"}); });
  check_identity<F>(
      rep, "comodule.counital", "comodule: eps(m1)m0=alpha_M(m)", ctx, {{"m", m}}, {{"x", m}},
      [&](T& t) { t.apply(M.co, {"m"}, {"x", "h"}).apply(C.eps, {"h"}, {}); },
      [&](T& t) { t.apply(M.alpha, {"m"}, {"x"}); });
  return rep;
}

enum class MorphismKind { algebra, coalgebra, module, comodule };

/// f: A -> B of Hom-algebras.
template <ExactField F>
CheckReport check_morphism(const LinearMap<F>& f, const HomAlgebra<F>& A, const HomAlgebra<F>& B, CheckOptions opt = {}) {
  detail::expect_shape(f.dom(), {A.d}, "morphism domain");
  detail::expect_shape(f.cod(), {B.d}, "morphism codomain");
  CheckReport rep("algebra-morphism", opt);
  check_maps_equal(rep, "morphism.twist", "morphism: alpha_B f = f alpha_A", compose(B.alpha, f), compose(f, A.alpha));
  check_maps_equal(rep, "morphism.unit", "morphism: f(1)=1", compose(f, A.eta), B.eta);
  check_maps_equal(rep, "morphism.multiplicative", "morphism: mu_B(f(x)f) = f mu_A", compose(B.mu, tensor(f, f)),
                   compose(f, A.mu));
  return rep;
}

template <ExactField F>
CheckReport check_morphism(const LinearMap<F>& f, const HomCoalgebra<F>& C, const HomCoalgebra<F>& D,
                           CheckOptions opt = {}) {
  detail::expect_shape(f.dom(), {C.d}, "morphism domain");
  detail::expect_shape(f.cod(), {D.d}, "morphism codomain");
  CheckReport rep("coalgebra-morphism", opt);
  check_maps_equal(rep, "morphism.twist", "morphism: alpha_D f = f alpha_C", compose(D.alpha, f), compose(f, C.alpha));
  check_maps_equal(rep, "morphism.counit", "morphism: eps_D f = eps_C", compose(D.eps, f), C.eps);
  check_maps_equal(rep, "morphism.comultiplicative", "morphism: Delta_D f = (f(x)f) Delta_C", compose(D.delta, f),
                   compose(tensor(f, f), C.delta));
  return rep;
}

/// f: M -> N of A-modules.
template <ExactField F>
CheckReport check_morphism(const LinearMap<F>& f, const HomAlgebra<F>& A, const HModule<F>& M, const HModule<F>& N,
                           CheckOptions opt = {}) {
  detail::expect_shape(f.dom(), {M.dim}, "morphism domain");
  detail::expect_shape(f.cod(), {N.dim}, "morphism codomain");
  CheckReport rep("module-morphism", opt);
  check_maps_equal(rep, "morphism.twist", "morphism: alpha_N f = f alpha_M", compose(N.alpha, f), compose(f, M.alpha));
  auto id = LinearMap<F>::identity({A.d}, A.ctx);
  check_maps_equal(rep, "morphism.linear", "morphism: theta_N(id(x)f) = f theta_M", compose(N.act, tensor(id, f)),
                   compose(f, M.act));
  return rep;
}

template <ExactField F>
CheckReport check_morphism(const LinearMap<F>& f, const HomCoalgebra<F>& C, const HComodule<F>& M,
                           const HComodule<F>& N, CheckOptions opt = {}) {
  detail::expect_shape(f.dom(), {M.dim}, "morphism domain");
  detail::expect_shape(f.cod(), {N.dim}, "morphism codomain");
  CheckReport rep("comodule-morphism", opt);
  check_maps_equal(rep, "morphism.twist", "morphism: alpha_N f = f alpha_M", compose(N.alpha, f), compose(f, M.alpha));
  auto id = LinearMap<F>::identity({C.d}, C.ctx);
  check_maps_equal(rep, "morphism.colinear", "morphism: rho_N f = (f(x)id) rho_M", compose(N.co, f),
                   compose(tensor(f, id), M.co));
  return rep;
}

}  // namespace whh
