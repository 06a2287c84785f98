#pragma once

// Yetter-Drinfeld modules over a weak Hom-Hopf algebra and the monoidal
// structure built on the truncated tensor product.
//
// Objects are finite-dimensional; a tensor object X (x) Y lives inside the
// ambient space (X.dim, Y.dim) as a subspace, and its structure maps are
// computed on the ambient space then pushed back through a checked projection.

#include "whh/hom_structures.hpp"
#include "whh/subspace.hpp"
#include "whh/weak_hom_hopf.hpp"

#include <memory>

namespace whh {

enum class ObjectKind { plain, truncated, tilde, unit, left_dual, right_dual };

inline const char* to_string(ObjectKind k) {
  switch (k) {
    case ObjectKind::plain: return "plain";
    case ObjectKind::truncated: return "truncated";
    case ObjectKind::tilde: return "tilde";
    case ObjectKind::unit: return "unit";
    case ObjectKind::left_dual: return "left-dual";
    case ObjectKind::right_dual: return "right-dual";
  }
  return "?";
}

template <ExactField F>
struct YDModule {
  std::string name;
  std::size_t dim = 0;
  LinearMap<F> act;    // (d, dim) -> (dim)
  LinearMap<F> co;     // (dim) -> (dim, d)
  LinearMap<F> alpha;  // (dim) -> (dim)
  LinearMap<F> alpha_inv;
  ObjectKind kind = ObjectKind::plain;
  // tensor objects: factors and the subspace of (left.dim, right.dim);
  // unit object: subspace of (d); duals: `left` is the original object
  std::shared_ptr<const YDModule> left, right;
  Subspace<F> sub;

  [[nodiscard]] HModule<F> module() const { return {dim, act, alpha}; }
  [[nodiscard]] HComodule<F> comodule() const { return {dim, co, alpha}; }
  [[nodiscard]] const LinearMap<F>& alpha_pow(int k) const {
    auto it = pow_cache_.find(k);
    if (it != pow_cache_.end()) return it->second;
    auto p = k >= 0 ? power(alpha, k) : power(alpha_inv, -k);
    return pow_cache_.emplace(k, std::move(p)).first->second;
  }
  [[nodiscard]] LinearMap<F> id() const { return LinearMap<F>::identity({dim}, act.ctx()); }

  mutable std::map<int, LinearMap<F>> pow_cache_;
};

template <ExactField F>
using YDPtr = std::shared_ptr<const YDModule<F>>;

/// Builds an object from raw structure maps; throws on bad shapes or a singular twist.
template <ExactField F>
YDPtr<F> make_yd(const WeakHomHopfAlgebra<F>& H, std::string name, LinearMap<F> act, LinearMap<F> co,
                 LinearMap<F> alpha) {
  const auto d = H.dim();
  const auto m = alpha.rows();
  detail::expect_shape(alpha.dom(), {m}, name + " twist domain");
  detail::expect_shape(alpha.cod(), {m}, name + " twist codomain");
  detail::expect_shape(act.dom(), {d, m}, name + " action domain");
  detail::expect_shape(act.cod(), {m}, name + " action codomain");
  detail::expect_shape(co.dom(), {m}, name + " coaction domain");
  detail::expect_shape(co.cod(), {m, d}, name + " coaction codomain");
  auto y = std::make_shared<YDModule<F>>();
  y->name = std::move(name);
  y->dim = m;
  y->act = std::move(act);
  y->co = std::move(co);
  y->alpha = std::move(alpha);
  try {
    y->alpha_inv = invert(y->alpha);
  } catch (const SingularMap&) {
    throw StructureError("twist of " + y->name + " is not invertible");
  }
  return y;
}

// ---------------------------------------------------------------- checks

/// Module and comodule axioms plus the compatibility condition
///   (h.m)_0 (x) (h.m)_1 = a^-1(h_21).m_0 (x) [a^-2(h_22) a^-1(m_1)] S^-1(h_1).
template <ExactField F>
CheckReport check_yd(const WeakHomHopfAlgebra<F>& H, const YDModule<F>& M, CheckOptions opt = {}) {
  using T = Tensor<F>;
  const auto d = H.dim(), m = M.dim;
  CheckReport rep("yd:" + M.name, opt);
  rep.merge(check_module(H.algebra(), M.module(), opt));
  rep.merge(check_comodule(H.coalgebra(), M.comodule(), opt));
  check_identity<F>(
      rep, "yd.compatibility", "YD: (h.m)_0(x)(h.m)_1 = a^-1(h21).m0 (x) [a^-2(h22)a^-1(m1)]S^-1(h1)", H.ctx(),
      {{"h", d}, {"m", m}}, {{"x", m}, {"y", d}},
      [&](T& t) { t.apply(M.act, {"h", "m"}, {"n"}).apply(M.co, {"n"}, {"x", "y"}); },
      [&](T& t) {
        t.apply(H.delta(), {"h"}, {"h1", "h2"})
            .apply(H.delta(), {"h2"}, {"h21", "h22"})
            .apply1(H.alpha_inv(), "h21")
            .apply(M.co, {"m"}, {"m0", "m1"})
            .apply(M.act, {"h21", "m0"}, {"x"})
            .apply1(H.alpha_pow(-2), "h22")
            .apply1(H.alpha_inv(), "m1")
            .apply(H.mu(), {"h22", "m1"}, {"p"})
            .apply1(H.S_inv(), "h1")
            .apply(H.mu(), {"p", "h1"}, {"y"});
      });
  return rep;
}

/// (1_1 (x) 1_2).(M (x) H): image of m(x)h -> 1_1.m (x) 1_2 h.
template <ExactField F>
Subspace<F> coaction_target(const WeakHomHopfAlgebra<F>& H, const YDModule<F>& M) {
  using T = Tensor<F>;
  const auto d = H.dim();
  auto P = tabulate<F>(H.ctx(), {{"m", M.dim}, {"h", d}}, {{"x", M.dim}, {"y", d}}, [&](T& t) {
    t.apply(H.one1(), {}, {"o1", "o2"}).apply(M.act, {"o1", "m"}, {"x"}).apply(H.mu(), {"o2", "h"}, {"y"});
  });
  return Subspace<F>::image(P);
}

/// Module and comodule axioms with the two-part form: coaction lands in (1_1(x)1_2).(M(x)H), and
///   a(h_1).m_0 (x) a^2(h_2)a(m_1) = (h_2.m)_0 (x) (h_2.m)_1 a^2(h_1).
template <ExactField F>
CheckReport check_yd_equivalent(const WeakHomHopfAlgebra<F>& H, const YDModule<F>& M, CheckOptions opt = {}) {
  using T = Tensor<F>;
  const auto d = H.dim(), m = M.dim;
  CheckReport rep("yd-equivalent:" + M.name, opt);
  rep.merge(check_module(H.algebra(), M.module(), opt));
  rep.merge(check_comodule(H.coalgebra(), M.comodule(), opt));
  auto target = coaction_target(H, M);
  {
    CheckEntry e;
    e.id = "yd.coaction-in-truncated";
    e.anchor = "YD: rho(m) in (1_1(x)1_2).(M(x)H)";
    for (std::size_t j = 0; j < m; ++j) {
      ++e.tested;
      auto v = M.co.column(j);
      if (target.member(v)) continue;
      e.pass = false;
      ++e.failures;
      if (e.witnesses.size() < opt.max_witnesses)
        e.witnesses.push_back({{{"m", j}}, sv::to_string(v, {m, d}), "not in (1_1(x)1_2).(M(x)H)"});
    }
    rep.add(std::move(e));
  }
  check_identity<F>(
      rep, "yd.twisted-compatibility", "YD: a(h1).m0 (x) a^2(h2)a(m1) = (h2.m)_0 (x) (h2.m)_1 a^2(h1)", H.ctx(),
      {{"h", d}, {"m", m}}, {{"x", m}, {"y", d}},
      [&](T& t) {
        t.apply(H.delta(), {"h"}, {"h1", "h2"})
            .apply(M.co, {"m"}, {"m0", "m1"})
            .apply1(H.alpha(), "h1")
            .apply(M.act, {"h1", "m0"}, {"x"})
            .apply1(H.alpha_pow(2), "h2")
            .apply1(H.alpha(), "m1")
            .apply(H.mu(), {"h2", "m1"}, {"y"});
      },
      [&](T& t) {
        t.apply(H.delta(), {"h"}, {"h1", "h2"})
            .apply(M.act, {"h2", "m"}, {"n"})
            .apply(M.co, {"n"}, {"x", "n1"})
            .apply1(H.alpha_pow(2), "h1")
            .apply(H.mu(), {"n1", "h1"}, {"y"});
      });
  return rep;
}

/// f: X -> Y is H-linear, H-colinear and commutes with the twists.
template <ExactField F>
CheckReport check_yd_morphism(const WeakHomHopfAlgebra<F>& H, const LinearMap<F>& f, const YDModule<F>& X,
                              const YDModule<F>& Y, const std::string& label, CheckOptions opt = {}) {
  CheckReport rep(label, opt);
  auto fi = f.reshaped({X.dim}, {Y.dim});
  auto Id = H.id();
  check_maps_equal(rep, label + ".linear", "f(h.x) = h.f(x)", compose(fi, X.act), compose(Y.act, tensor(Id, fi)));
  check_maps_equal(rep, label + ".colinear", "rho f = (f(x)id) rho", compose(Y.co, fi), compose(tensor(fi, Id), X.co));
  check_maps_equal(rep, label + ".twist", "alpha f = f alpha", compose(Y.alpha, fi), compose(fi, X.alpha));
  return rep;
}

// ------------------------------------------------------------ constructions

/// P(x(x)y) = 1_1.x (x) 1_2.y on the full tensor space.
template <ExactField F>
LinearMap<F> truncation_projector(const WeakHomHopfAlgebra<F>& H, const YDModule<F>& X, const YDModule<F>& Y) {
  using T = Tensor<F>;
  return tabulate<F>(H.ctx(), {{"x", X.dim}, {"y", Y.dim}}, {{"x'", X.dim}, {"y'", Y.dim}}, [&](T& t) {
    t.apply(H.one1(), {}, {"o1", "o2"}).apply(X.act, {"o1", "x"}, {"x'"}).apply(Y.act, {"o2", "y"}, {"y'"});
  });
}

namespace detail {

template <ExactField F>
std::shared_ptr<YDModule<F>> tensor_shell(const YDPtr<F>& X, const YDPtr<F>& Y, Subspace<F> sub, ObjectKind kind,
                                          const std::string& glyph) {
  auto T = std::make_shared<YDModule<F>>();
  T->name = "(" + X->name + glyph + Y->name + ")";
  T->dim = sub.dim();
  T->kind = kind;
  T->left = X;
  T->right = Y;
  T->sub = std::move(sub);
  return T;
}

template <ExactField F, class Fn>
LinearMap<F> build_checked(const std::string& what, typename F::Context ctx, const std::vector<Leg>& in,
                           const std::vector<Leg>& out, Fn&& fn) {
  try {
    return tabulate<F>(ctx, in, out, std::forward<Fn>(fn));
  } catch (const SubspaceEscape& e) {
    throw StructureError(what + ": " + e.what() + " " + e.detail);
  }
}

template <ExactField F>
void finish_tensor(std::shared_ptr<YDModule<F>>& T) {
  try {
    T->alpha_inv = invert(T->alpha);
  } catch (const SingularMap&) {
    throw StructureError("twist of " + T->name + " is not invertible");
  }
}

}  // namespace detail

/// Truncated tensor: the image of P with h.(x(x)y) = h_1.x (x) h_2.y,
/// coaction (x_0(x)y_0)(x)a^-2(y_1 x_1) and twist a_X(x)a_Y. Each structure
/// map is checked to stay inside the subspace.
template <ExactField F>
YDPtr<F> truncated_tensor(const WeakHomHopfAlgebra<F>& H, const YDPtr<F>& X, const YDPtr<F>& Y) {
  using T = Tensor<F>;
  const auto d = H.dim();
  const auto& ctx = H.ctx();
  auto sub = Subspace<F>::image(truncation_projector(H, *X, *Y));
  auto R = detail::tensor_shell(X, Y, sub, ObjectKind::truncated, "(x)");
  const auto k = R->dim;
  auto incl = sub.inclusion().reshaped({k}, {X->dim, Y->dim});
  const std::string who = "truncated tensor " + R->name;
  R->act = detail::build_checked<F>(who + " action", ctx, {{"h", d}, {"t", k}}, {{"u", k}}, [&](T& t) {
    t.apply(incl, {"t"}, {"x", "y"})
        .apply(H.delta(), {"h"}, {"h1", "h2"})
        .apply(X->act, {"h1", "x"}, {"x'"})
        .apply(Y->act, {"h2", "y"}, {"y'"});
    project_legs(t, sub, {"x'", "y'"}, "u", who);
  });
  R->co = detail::build_checked<F>(who + " coaction", ctx, {{"t", k}}, {{"u", k}, {"c", d}}, [&](T& t) {
    t.apply(incl, {"t"}, {"x", "y"})
        .apply(X->co, {"x"}, {"x0", "x1"})
        .apply(Y->co, {"y"}, {"y0", "y1"})
        .apply(H.mu(), {"y1", "x1"}, {"c"})
        .apply1(H.alpha_pow(-2), "c");
    project_legs(t, sub, {"x0", "y0"}, "u", who);
  });
  R->alpha = detail::build_checked<F>(who + " twist", ctx, {{"t", k}}, {{"u", k}}, [&](T& t) {
    t.apply(incl, {"t"}, {"x", "y"}).apply1(X->alpha, "x").apply1(Y->alpha, "y");
    project_legs(t, sub, {"x", "y"}, "u", who);
  });
  detail::finish_tensor(R);
  return R;
}

/// Q(x(x)y) = x_0 (x) y_0 eps(x_1 y_1).
template <ExactField F>
LinearMap<F> tilde_projector(const WeakHomHopfAlgebra<F>& H, const YDModule<F>& X, const YDModule<F>& Y) {
  using T = Tensor<F>;
  return tabulate<F>(H.ctx(), {{"x", X.dim}, {"y", Y.dim}}, {{"x0", X.dim}, {"y0", Y.dim}}, [&](T& t) {
    t.apply(X.co, {"x"}, {"x0", "x1"})
        .apply(Y.co, {"y"}, {"y0", "y1"})
        .apply(H.mu(), {"x1", "y1"}, {"c"})
        .apply(H.eps(), {"c"}, {});
  });
}

/// Comodule-side tensor: the image of Q with action a^-2(h_1).x (x) a^-2(h_2).y,
/// coaction (x_0(x)y_0)(x)y_1 x_1 and twist a_X(x)a_Y.
template <ExactField F>
YDPtr<F> tilde_tensor(const WeakHomHopfAlgebra<F>& H, const YDPtr<F>& X, const YDPtr<F>& Y) {
  using T = Tensor<F>;
  const auto d = H.dim();
  const auto& ctx = H.ctx();
  auto sub = Subspace<F>::image(tilde_projector(H, *X, *Y));
  auto R = detail::tensor_shell(X, Y, sub, ObjectKind::tilde, "(~)");
  const auto k = R->dim;
  auto incl = sub.inclusion().reshaped({k}, {X->dim, Y->dim});
  const std::string who = "tilde tensor " + R->name;
  R->act = detail::build_checked<F>(who + " action", ctx, {{"h", d}, {"t", k}}, {{"u", k}}, [&](T& t) {
    t.apply(incl, {"t"}, {"x", "y"})
        .apply(H.delta(), {"h"}, {"h1", "h2"})
        .apply1(H.alpha_pow(-2), "h1")
        .apply1(H.alpha_pow(-2), "h2")
        .apply(X->act, {"h1", "x"}, {"x'"})
        .apply(Y->act, {"h2", "y"}, {"y'"});
    project_legs(t, sub, {"x'", "y'"}, "u", who);
  });
  R->co = detail::build_checked<F>(who + " coaction", ctx, {{"t", k}}, {{"u", k}, {"c", d}}, [&](T& t) {
    t.apply(incl, {"t"}, {"x", "y"})
        .apply(X->co, {"x"}, {"x0", "x1"})
        .apply(Y->co, {"y"}, {"y0", "y1"})
        .apply(H.mu(), {"y1", "x1"}, {"c"});
    project_legs(t, sub, {"x0", "y0"}, "u", who);
  });
  R->alpha = detail::build_checked<F>(who + " twist", ctx, {{"t", k}}, {{"u", k}}, [&](T& t) {
    t.apply(incl, {"t"}, {"x", "y"}).apply1(X->alpha, "x").apply1(Y->alpha, "y");
    project_legs(t, sub, {"x", "y"}, "u", who);
  });
  detail::finish_tensor(R);
  return R;
}

/// The unit object H_s = eps_s(H) with action h.x = hat-eps_s(hx), coaction
/// Delta and twist alpha.
template <ExactField F>
YDPtr<F> unit_object(const WeakHomHopfAlgebra<F>& H) {
  using T = Tensor<F>;
  const auto d = H.dim();
  const auto& ctx = H.ctx();
  auto cm = counital_maps(H);
  auto sub = cm.Hs;
  auto U = std::make_shared<YDModule<F>>();
  U->name = "H_s";
  U->kind = ObjectKind::unit;
  U->dim = sub.dim();
  U->sub = sub;
  const auto k = U->dim;
  auto incl = sub.inclusion();
  const std::string who = "unit object";
  U->act = detail::build_checked<F>(who + " action", ctx, {{"h", d}, {"t", k}}, {{"u", k}}, [&](T& t) {
    t.apply(incl, {"t"}, {"x"}).apply(H.mu(), {"h", "x"}, {"y"}).apply(cm.hat_eps_s, {"y"}, {"z"});
    project_legs(t, sub, {"z"}, "u", who);
  });
  U->co = detail::build_checked<F>(who + " coaction", ctx, {{"t", k}}, {{"u", k}, {"c", d}}, [&](T& t) {
    t.apply(incl, {"t"}, {"x"}).apply(H.delta(), {"x"}, {"x1", "c"});
    project_legs(t, sub, {"x1"}, "u", who);
  });
  U->alpha = detail::build_checked<F>(who + " twist", ctx, {{"t", k}}, {{"u", k}}, [&](T& t) {
    t.apply(incl, {"t"}, {"x"}).apply1(H.alpha(), "x");
    project_legs(t, sub, {"x"}, "u", who);
  });
  detail::finish_tensor(U);
  return U;
}

// ------------------------------------------------------------- category

enum class TensorKind { truncated, tilde };

/// How r^-1(m) treats the module element: `dropped_twist` uses m itself,
/// `with_twist` applies alpha_M first.
enum class RightUnitReading { dropped_twist, with_twist };

/// How an elementary tensor x (x)_t y is read inside the truncated space:
/// `normalized` applies P(alpha^-1 (x) alpha^-1), `literal` requires x(x)y to
/// already lie in the subspace.
enum class ElementReading { normalized, literal };

struct CategoryOptions {
  TensorKind kind = TensorKind::truncated;
  RightUnitReading right_unit = RightUnitReading::dropped_twist;
  ElementReading element = ElementReading::normalized;
};

template <ExactField F>
class YDCategory {
 public:
  using Ptr = YDPtr<F>;
  using Map = LinearMap<F>;
  using T = Tensor<F>;

  explicit YDCategory(WeakHomHopfAlgebra<F> H, CategoryOptions opt = {}) : H_(std::move(H)), opt_(opt) {}

  [[nodiscard]] const WeakHomHopfAlgebra<F>& hopf() const { return H_; }
  [[nodiscard]] const CategoryOptions& options() const { return opt_; }
  [[nodiscard]] const typename F::Context& ctx() const { return H_.ctx(); }

  const Ptr& unit() {
    if (!unit_) unit_ = unit_object(H_);
    return unit_;
  }

  /// Memoised tensor object.
  Ptr tensor(const Ptr& X, const Ptr& Y) {
    auto key = std::make_pair(X.get(), Y.get());
    auto it = tensors_.find(key);
    if (it != tensors_.end()) return it->second;
    Ptr R = opt_.kind == TensorKind::truncated ? truncated_tensor(H_, X, Y) : tilde_tensor(H_, X, Y);
    tensors_.emplace(key, R);
    keep_.push_back(X);
    keep_.push_back(Y);
    return R;
  }

  /// f (x) g : src -> tgt where src, tgt are tensor objects and f, g act on the factors.
  Map tensor(const Map& f, const Map& g, const Ptr& src, const Ptr& tgt) {
    expect_tensor(*src, "source");
    expect_tensor(*tgt, "target");
    auto incl = inclusion(*src);
    auto fi = f.reshaped({src->left->dim}, {tgt->left->dim});
    auto gi = g.reshaped({src->right->dim}, {tgt->right->dim});
    return detail::build_checked<F>("tensor of maps into " + tgt->name, ctx(), {{"t", src->dim}}, {{"u", tgt->dim}},
                                    [&](T& t) {
                                      t.apply(incl, {"t"}, {"a", "b"}).apply1(fi, "a").apply1(gi, "b");
                                      project_legs(t, tgt->sub, {"a", "b"}, "u", tgt->name);
                                    });
  }

  /// Reads x (x)_t y as an element of the tensor object T.
  Map element(const Ptr& Tobj) {
    expect_tensor(*Tobj, "element target");
    const auto& X = *Tobj->left;
    const auto& Y = *Tobj->right;
    return detail::build_checked<F>("element of " + Tobj->name, ctx(), {{"x", X.dim}, {"y", Y.dim}},
                                    {{"u", Tobj->dim}}, [&](T& t) {
                                      if (opt_.element == ElementReading::normalized) {
                                        t.apply1(X.alpha_inv, "x").apply1(Y.alpha_inv, "y");
                                        t.apply(H_.one1(), {}, {"o1", "o2"})
                                            .apply(X.act, {"o1", "x"}, {"x'"})
                                            .apply(Y.act, {"o2", "y"}, {"y'"});
                                        project_legs(t, Tobj->sub, {"x'", "y'"}, "u", Tobj->name);
                                      } else {
                                        project_legs(t, Tobj->sub, {"x", "y"}, "u", Tobj->name);
                                      }
                                    });
  }

  /// a((x(x)y)(x)z) = a^-1(x) (x) (y (x) a(z)).
  Map assoc(const Ptr& X, const Ptr& Y, const Ptr& Z) {
    auto XY = tensor(X, Y), YZ = tensor(Y, Z);
    auto src = tensor(XY, Z), tgt = tensor(X, YZ);
    auto i1 = inclusion(*src), i2 = inclusion(*XY);
    return detail::build_checked<F>("associator into " + tgt->name, ctx(), {{"t", src->dim}}, {{"u", tgt->dim}},
                                    [&](T& t) {
                                      t.apply(i1, {"t"}, {"xy", "z"})
                                          .apply(i2, {"xy"}, {"x", "y"})
                                          .apply1(X->alpha_inv, "x")
                                          .apply1(Z->alpha, "z");
                                      project_legs(t, YZ->sub, {"y", "z"}, "yz", YZ->name);
                                      project_legs(t, tgt->sub, {"x", "yz"}, "u", tgt->name);
                                    });
  }

  /// a^-1(x(x)(y(x)z)) = (a(x) (x) y) (x) a^-1(z).
  Map assoc_inv(const Ptr& X, const Ptr& Y, const Ptr& Z) {
    auto XY = tensor(X, Y), YZ = tensor(Y, Z);
    auto src = tensor(X, YZ), tgt = tensor(XY, Z);
    auto i1 = inclusion(*src), i2 = inclusion(*YZ);
    return detail::build_checked<F>("inverse associator into " + tgt->name, ctx(), {{"t", src->dim}},
                                    {{"u", tgt->dim}}, [&](T& t) {
                                      t.apply(i1, {"t"}, {"x", "yz"})
                                          .apply(i2, {"yz"}, {"y", "z"})
                                          .apply1(X->alpha, "x")
                                          .apply1(Z->alpha_inv, "z");
                                      project_legs(t, XY->sub, {"x", "y"}, "xy", XY->name);
                                      project_legs(t, tgt->sub, {"xy", "z"}, "u", tgt->name);
                                    });
  }

  /// l(x (x) m) = S(x).a_M^-2(m).
  Map left_unitor(const Ptr& M) {
    auto U = unit();
    auto src = tensor(U, M);
    auto i1 = inclusion(*src);
    auto iu = U->sub.inclusion();
    return tabulate<F>(ctx(), {{"t", src->dim}}, {{"m", M->dim}}, [&](T& t) {
      t.apply(i1, {"t"}, {"x", "n"})
          .apply(iu, {"x"}, {"h"})
          .apply1(H_.S(), "h")
          .apply1(M->alpha_pow(-2), "n")
          .apply(M->act, {"h", "n"}, {"m"});
    });
  }

  /// l^-1(m) = 1 (x)_t a_M(m).
  Map left_unitor_inv(const Ptr& M) {
    auto U = unit();
    auto src = tensor(U, M);
    auto one = unit_element();
    auto el = element(src);
    return tabulate<F>(ctx(), {{"m", M->dim}}, {{"u", src->dim}}, [&](T& t) {
      t.apply1(M->alpha, "m").apply(one, {}, {"x"}).apply(el, {"x", "m"}, {"u"});
    });
  }

  /// r(m (x) x) = x.a_M^-2(m).
  Map right_unitor(const Ptr& M) {
    auto U = unit();
    auto src = tensor(M, U);
    auto i1 = inclusion(*src);
    auto iu = U->sub.inclusion();
    return tabulate<F>(ctx(), {{"t", src->dim}}, {{"m", M->dim}}, [&](T& t) {
      t.apply(i1, {"t"}, {"n", "x"})
          .apply(iu, {"x"}, {"h"})
          .apply1(M->alpha_pow(-2), "n")
          .apply(M->act, {"h", "n"}, {"m"});
    });
  }

  /// r^-1(m) = eps(1_3) eps_s(1_2).m (x)_t 1_1 with 1_1(x)1_2(x)1_3 = (Delta(x)id)Delta(1).
  Map right_unitor_inv(const Ptr& M) {
    auto U = unit();
    auto src = tensor(M, U);
    auto el = element(src);
    auto cm = counital_maps(H_);
    return detail::build_checked<F>("right unit inverse for " + M->name, ctx(), {{"m", M->dim}},
                                    {{"u", src->dim}}, [&](T& t) {
                                      if (opt_.right_unit == RightUnitReading::with_twist) t.apply1(M->alpha, "m");
                                      t.apply(H_.one1(), {}, {"a", "o3"})
                                          .apply(H_.delta(), {"a"}, {"o1", "o2"})
                                          .apply(H_.eps(), {"o3"}, {})
                                          .apply1(cm.eps_s, "o2")
                                          .apply(M->act, {"o2", "m"}, {"n"});
                                      project_legs(t, U->sub, {"o1"}, "x", "unit object");
                                      t.apply(el, {"n", "x"}, {"u"});
                                    });
  }

  /// 1 as an element of the unit object, ()->(dim H_s).
  Map unit_element() {
    auto U = unit();
    return detail::build_checked<F>("unit element", ctx(), {}, {{"u", U->dim}}, [&](T& t) {
      t.apply(H_.eta(), {}, {"h"});
      project_legs(t, U->sub, {"h"}, "u", "unit object");
    });
  }

  /// Inclusion of a tensor object into its ambient pair of legs.
  static Map inclusion(const YDModule<F>& X) {
    if (X.kind == ObjectKind::unit) return X.sub.inclusion();
    expect_tensor(X, "object");
    return X.sub.inclusion().reshaped({X.dim}, {X.left->dim, X.right->dim});
  }

 private:
  static void expect_tensor(const YDModule<F>& X, const std::string& what) {
    if ((X.kind != ObjectKind::truncated && X.kind != ObjectKind::tilde) || !X.left || !X.right)
      throw StructureError(what + " " + X.name + " is not a tensor object");
  }

  WeakHomHopfAlgebra<F> H_;
  CategoryOptions opt_;
  Ptr unit_;
  std::map<std::pair<const void*, const void*>, Ptr> tensors_;
  std::vector<Ptr> keep_;
};

// ---------------------------------------------------- monoidal coherence

/// Structural checks for a single object: the unitors are inverse YD isomorphisms.
template <ExactField F>
CheckReport check_unitors(YDCategory<F>& C, const YDPtr<F>& M, CheckOptions opt = {}) {
  CheckReport rep("unitors:" + M->name, opt);
  const auto& H = C.hopf();
  auto U = C.unit();
  auto UM = C.tensor(U, M), MU = C.tensor(M, U);
  auto run = [&](const std::string& id, auto&& fn) {
    try {
      fn();
    } catch (const StructureError& e) {
      rep.fact(id, "unit constraint construction", false, e.what());
    }
  };
  run("unit.left-inverse", [&] {
    auto l = C.left_unitor(M), li = C.left_unitor_inv(M);
    check_maps_equal(rep, "unit.left-inverse", "l l^-1 = id", compose(l, li), M->id());
    check_maps_equal(rep, "unit.left-inverse-other-side", "l^-1 l = id", compose(li, l), UM->id());
    rep.merge(check_yd_morphism(H, l, *UM, *M, "unit.left-morphism", opt));
  });
  run("unit.right-inverse", [&] {
    auto r = C.right_unitor(M), ri = C.right_unitor_inv(M);
    check_maps_equal(rep, "unit.right-inverse", "r r^-1 = id", compose(r, ri), M->id());
    check_maps_equal(rep, "unit.right-inverse-other-side", "r^-1 r = id", compose(ri, r), MU->id());
    rep.merge(check_yd_morphism(H, r, *MU, *M, "unit.right-morphism", opt));
  });
  return rep;
}

/// (r_M (x) id_N) = (id_M (x) l_N) a_{M,H_s,N} on (M (x) H_s) (x) N.
template <ExactField F>
CheckReport check_triangle(YDCategory<F>& C, const YDPtr<F>& M, const YDPtr<F>& N, CheckOptions opt = {}) {
  CheckReport rep("triangle:" + M->name + "," + N->name, opt);
  try {
    auto U = C.unit();
    auto MU = C.tensor(M, U), UN = C.tensor(U, N), MN = C.tensor(M, N);
    auto src = C.tensor(MU, N), mid = C.tensor(M, UN);
    auto lhs = C.tensor(C.right_unitor(M), N->id(), src, MN);
    auto rhs = compose(C.tensor(M->id(), C.left_unitor(N), mid, MN), C.assoc(M, U, N));
    check_maps_equal(rep, "monoidal.triangle", "(r (x) id) = (id (x) l) a", lhs, rhs);
  } catch (const StructureError& e) {
    rep.fact("monoidal.triangle", "(r (x) id) = (id (x) l) a", false, e.what());
  }
  return rep;
}

/// a_{M,N,P(x)Q} a_{M(x)N,P,Q} = (id (x) a_{N,P,Q}) a_{M,N(x)P,Q} (a_{M,N,P} (x) id).
template <ExactField F>
CheckReport check_pentagon(YDCategory<F>& C, const YDPtr<F>& M, const YDPtr<F>& N, const YDPtr<F>& P,
                           const YDPtr<F>& Q, CheckOptions opt = {}) {
  CheckReport rep("pentagon:" + M->name + "," + N->name + "," + P->name + "," + Q->name, opt);
  try {
    auto MN = C.tensor(M, N), NP = C.tensor(N, P), PQ = C.tensor(P, Q);
    auto MN_P = C.tensor(MN, P), M_NP = C.tensor(M, NP), NP_Q = C.tensor(NP, Q), N_PQ = C.tensor(N, PQ);
    auto src = C.tensor(MN_P, Q);          // ((MN)P)Q
    auto s2 = C.tensor(M_NP, Q);           // (M(NP))Q
    auto s3 = C.tensor(M, NP_Q);           // M((NP)Q)
    auto tgt = C.tensor(M, N_PQ);          // M(N(PQ))
    auto lhs = compose(C.assoc(M, N, PQ), C.assoc(MN, P, Q));
    auto rhs = compose(C.tensor(M->id(), C.assoc(N, P, Q), s3, tgt),
                       compose(C.assoc(M, NP, Q), C.tensor(C.assoc(M, N, P), Q->id(), src, s2)));
    check_maps_equal(rep, "monoidal.pentagon", "a a = (id (x) a) a (a (x) id)", lhs, rhs);
  } catch (const StructureError& e) {
    rep.fact("monoidal.pentagon", "a a = (id (x) a) a (a (x) id)", false, e.what());
  }
  return rep;
}

}  // namespace whh
