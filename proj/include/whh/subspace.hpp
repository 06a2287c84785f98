#pragma once

// Subspaces of a tensor-power space, stored as a reduced row-echelon basis.
// Each basis row has a pivot entry 1, and every other row vanishes at that
// pivot, so the coordinates of a member vector are its pivot entries.

#include "whh/linear_map.hpp"
#include "whh/tensor.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace whh {

template <ExactField F>
class Subspace {
 public:
  using Context = typename F::Context;

  Subspace() = default;
  Subspace(Shape ambient, Context ctx) : ambient_(std::move(ambient)), ctx_(ctx) {}

  static Subspace full(const Shape& ambient, Context ctx) {
    Subspace s(ambient, ctx);
    for (std::size_t i = 0; i < volume(ambient); ++i) s.rows_.emplace(i, SparseVec<F>{{i, ctx.one()}});
    return s;
  }

  static Subspace span(const Shape& ambient, const std::vector<SparseVec<F>>& vectors, Context ctx) {
    Subspace s(ambient, ctx);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  /// Column span of f.
  static Subspace image(const LinearMap<F>& f) {
    Subspace s(f.cod(), f.ctx());
    for (std::size_t c = 0; c < f.cols(); ++c) s.insert(f.column(c));
    return s;
  }

  /// Adds v to the spanning set; returns true if the dimension grew.
  bool insert(const SparseVec<F>& v) {
    auto r = reduce(v);
    if (r.empty()) return false;
    const std::size_t piv = r.front().first;
    F lead = r.front().second;
    F inv = ctx_.one() / lead;
    r = sv::scale(r, inv);
    for (auto& [p, row] : rows_) {
      const F* c = sv::find(row, piv);
      if (c) {
        F coef = -*c;
        row = sv::axpy(row, coef, r);
      }
    }
    rows_.emplace(piv, std::move(r));
    return true;
  }

  [[nodiscard]] const Shape& ambient() const { return ambient_; }
  [[nodiscard]] std::size_t dim() const { return rows_.size(); }
  [[nodiscard]] const Context& ctx() const { return ctx_; }

  [[nodiscard]] std::vector<SparseVec<F>> basis() const {
    std::vector<SparseVec<F>> b;
    for (const auto& [p, r] : rows_) b.push_back(r);
    return b;
  }
  [[nodiscard]] std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    for (const auto& [k, r] : rows_) p.push_back(k);
    return p;
  }

  [[nodiscard]] bool member(const SparseVec<F>& v) const {
    for (const auto& [i, x] : v)
      if (i >= volume(ambient_)) throw ShapeError("member: index outside ambient " + shape_str(ambient_));
    return reduce(v).empty();
  }

  /// Coordinates of v in this basis, or nullopt if v is not a member.
  [[nodiscard]] std::optional<SparseVec<F>> coords(const SparseVec<F>& v) const {
    if (!reduce(v).empty()) return std::nullopt;
    SparseVec<F> c;
    std::size_t k = 0;
    for (const auto& [p, row] : rows_) {
      const F* x = sv::find(v, p);
      if (x) c.emplace_back(k, *x);
      ++k;
    }
    return c;
  }

  /// (k) -> ambient.
  [[nodiscard]] LinearMap<F> inclusion() const {
    LinearMap<F> m(Shape{dim()}, ambient_, ctx_);
    std::size_t k = 0;
    for (const auto& [p, row] : rows_) m.set_column(k++, row);
    return m;
  }

  /// ambient -> (k); reads pivot coordinates. projection ∘ inclusion = id.
  [[nodiscard]] LinearMap<F> projection() const {
    LinearMap<F> m(ambient_, Shape{dim()}, ctx_);
    std::size_t k = 0;
    for (const auto& [p, row] : rows_) m.set(k++, p, ctx_.one());
    return m;
  }

  [[nodiscard]] bool contains(const Subspace& other) const {
    for (const auto& [p, r] : other.rows_)
      if (!member(r)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.ambient_ == b.ambient_ && a.rows_ == b.rows_; }

 private:
  [[nodiscard]] SparseVec<F> reduce(const SparseVec<F>& v) const {
    SparseVec<F> r = v;
    // rows vanish at foreign pivots, so one pass over v's pivot entries suffices
    for (const auto& [i, x] : v) {
      auto it = rows_.find(i);
      if (it == rows_.end()) continue;
      F coef = -x;
      r = sv::axpy(r, coef, it->second);
    }
    return r;
  }

  Shape ambient_;
  Context ctx_{};
  std::map<std::size_t, SparseVec<F>> rows_;
};

/// Replaces the legs `legs` of t (which must span sub's ambient space, in
/// order) by one leg `out` holding coordinates. Throws SubspaceEscape if some
/// slice of t leaves the subspace.
template <ExactField F>
Tensor<F>& project_legs(Tensor<F>& t, const Subspace<F>& sub, const std::vector<std::string>& legs,
                        const std::string& out, const std::string& what = "subspace") {
  Shape amb;
  for (const auto& l : legs) amb.push_back(t.legs()[t.position(l)].dim);
  if (volume(amb) != volume(sub.ambient()))
    throw LegError("project_legs: legs do not span the ambient space " + shape_str(sub.ambient()));
  std::vector<std::string> order;
  std::vector<Leg> kept;
  for (const auto& l : t.legs())
    if (std::find(legs.begin(), legs.end(), l.name) == legs.end()) {
      order.push_back(l.name);
      kept.push_back(l);
    }
  order.insert(order.end(), legs.begin(), legs.end());
  const auto v = t.read(order);
  const std::size_t A = volume(amb), k = sub.dim();
  SparseVec<F> res;
  // legs to project are innermost, so each slice is a contiguous run
  for (std::size_t a = 0; a < v.size();) {
    const std::size_t rest = v[a].first / A;
    SparseVec<F> slice;
    std::size_t b = a;
    for (; b < v.size() && v[b].first / A == rest; ++b) slice.emplace_back(v[b].first % A, v[b].second);
    auto c = sub.coords(slice);
    if (!c) throw SubspaceEscape("value leaves " + what, sv::to_string(slice, amb));
    for (const auto& [i, x] : *c) res.emplace_back(rest * k + i, x);
    a = b;
  }
  kept.push_back({out, k});
  t = Tensor<F>::from_vector(t.ctx(), std::move(kept), std::move(res));
  return t;
}

}  // namespace whh
