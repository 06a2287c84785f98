#pragma once

// Labelled multi-leg sparse tensors. Sweedler-style formulas are evaluated by
// starting from a basis tuple and applying structure maps to named legs, e.g.
//
//   Tensor t = Tensor::basis(ctx, {{"h", d, i}, {"m", k, j}});
//   t.apply(delta, {"h"}, {"h1", "h2"}).apply(act, {"h2", "m"}, {"m"});
//
// Consumed legs disappear; produced legs are appended. read() returns the
// flat sparse vector for a requested leg order.

#include "whh/linear_map.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace whh {

struct LegError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Leg {
  std::string name;
  std::size_t dim;
};

/// Thrown when a checked projection meets a vector outside the subspace.
struct SubspaceEscape : std::runtime_error {
  std::string detail;
  SubspaceEscape(const std::string& what, std::string d) : std::runtime_error(what), detail(std::move(d)) {}
};

template <ExactField F>
class Tensor {
 public:
  using Context = typename F::Context;

  Tensor() = default;
  Tensor(Context ctx, std::vector<Leg> legs) : ctx_(ctx), legs_(std::move(legs)) {}

  struct BasisLeg {
    std::string name;
    std::size_t dim;
    std::size_t index;
  };

  static Tensor basis(Context ctx, const std::vector<BasisLeg>& legs) {
    std::vector<Leg> ls;
    std::vector<std::size_t> idx;
    for (const auto& b : legs) {
      if (b.index >= b.dim) throw LegError("basis index out of range on leg " + b.name);
      ls.push_back({b.name, b.dim});
      idx.push_back(b.index);
    }
    Tensor t(ctx, ls);
    t.entries_.emplace_back(flatten(idx, t.shape()), ctx.one());
    return t;
  }

  /// A tensor holding a given vector on the listed legs.
  static Tensor from_vector(Context ctx, std::vector<Leg> legs, SparseVec<F> v) {
    Tensor t(ctx, std::move(legs));
    t.entries_ = std::move(v);
    return t;
  }

  /// The scalar 1 (no legs).
  static Tensor unit(Context ctx) {
    Tensor t(ctx, {});
    t.entries_.emplace_back(0, ctx.one());
    return t;
  }

  [[nodiscard]] Shape shape() const {
    Shape s;
    for (const auto& l : legs_) s.push_back(l.dim);
    return s;
  }
  [[nodiscard]] const std::vector<Leg>& legs() const { return legs_; }
  [[nodiscard]] const SparseVec<F>& entries() const { return entries_; }
  [[nodiscard]] bool is_zero() const { return entries_.empty(); }
  [[nodiscard]] const Context& ctx() const { return ctx_; }

  [[nodiscard]] std::size_t position(const std::string& name) const {
    for (std::size_t i = 0; i < legs_.size(); ++i)
      if (legs_[i].name == name) return i;
    throw LegError("no leg named '" + name + "'" + describe());
  }

  /// Applies f to the legs `in` (in that order, matching f.dom()) and appends
  /// the output legs `out` (matching f.cod()).
  Tensor& apply(const LinearMap<F>& f, const std::vector<std::string>& in, const std::vector<std::string>& out) {
    if (in.size() != f.dom().size() || out.size() != f.cod().size())
      throw LegError("apply: map arity " + shape_str(f.dom()) + "->" + shape_str(f.cod()) + " vs " +
                     std::to_string(in.size()) + " in / " + std::to_string(out.size()) + " out legs");
    std::vector<std::size_t> in_pos;
    std::vector<bool> consumed(legs_.size(), false);
    for (std::size_t k = 0; k < in.size(); ++k) {
      auto p = position(in[k]);
      if (consumed[p]) throw LegError("apply: leg '" + in[k] + "' listed twice");
      if (legs_[p].dim != f.dom()[k])
        throw LegError("apply: leg '" + in[k] + "' has dim " + std::to_string(legs_[p].dim) + ", map expects " +
                       std::to_string(f.dom()[k]));
      consumed[p] = true;
      in_pos.push_back(p);
    }
    std::vector<Leg> new_legs;
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < legs_.size(); ++p)
      if (!consumed[p]) {
        new_legs.push_back(legs_[p]);
        kept.push_back(p);
      }
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (const auto& l : new_legs)
        if (l.name == out[k]) throw LegError("apply: output leg '" + out[k] + "' already present");
      new_legs.push_back({out[k], f.cod()[k]});
    }
    const Shape old_shape = shape();
    const Shape in_shape = f.dom();
    const std::size_t out_vol = volume(f.cod());

    std::unordered_map<std::size_t, F> acc;
    acc.reserve(entries_.size() * 2 + 1);
    for (const auto& [flat, val] : entries_) {
      auto idx = unflatten(flat, old_shape);
      std::size_t col = 0;
      for (std::size_t k = 0; k < in_pos.size(); ++k) col = col * in_shape[k] + idx[in_pos[k]];
      std::size_t rest = 0;
      for (auto p : kept) rest = rest * legs_[p].dim + idx[p];
      for (const auto& [row, coef] : f.column(col)) {
        std::size_t key = rest * out_vol + row;
        auto it = acc.find(key);
        if (it == acc.end()) acc.emplace(key, val * coef);
        else it->second += val * coef;
      }
    }
    legs_ = std::move(new_legs);
    std::vector<std::pair<std::size_t, F>> raw(acc.begin(), acc.end());
    entries_ = sv::canonical(std::move(raw));
    return *this;
  }

  /// In-place single-leg map keeping the leg name.
  Tensor& apply1(const LinearMap<F>& f, const std::string& leg) {
    std::string tmp = leg + "'";
    apply(f, {leg}, {tmp});
    rename(tmp, leg);
    return *this;
  }

  Tensor& rename(const std::string& from, const std::string& to) {
    legs_[position(from)].name = to;
    return *this;
  }

  /// Tensor product with another tensor (legs concatenated, names must be disjoint).
  Tensor& times(const Tensor& other) {
    for (const auto& l : other.legs_)
      for (const auto& m : legs_)
        if (l.name == m.name) throw LegError("times: duplicate leg '" + l.name + "'");
    const std::size_t ov = volume(other.shape());
    SparseVec<F> out;
    for (const auto& [a, va] : entries_)
      for (const auto& [b, vb] : other.entries_) out.emplace_back(a * ov + b, va * vb);
    legs_.insert(legs_.end(), other.legs_.begin(), other.legs_.end());
    entries_ = sv::canonical(std::move(out));
    return *this;
  }

  Tensor& scale(const F& s) {
    entries_ = sv::scale(entries_, s);
    return *this;
  }

  Tensor& add(const Tensor& other) {
    auto o = other.read(names());
    entries_ = sv::axpy(entries_, ctx_.one(), o);
    return *this;
  }

  [[nodiscard]] std::vector<std::string> names() const {
    std::vector<std::string> n;
    for (const auto& l : legs_) n.push_back(l.name);
    return n;
  }

  /// Flat vector with legs permuted into `order` (must list every leg exactly once).
  [[nodiscard]] SparseVec<F> read(const std::vector<std::string>& order) const {
    if (order.size() != legs_.size()) throw LegError("read: expected " + std::to_string(legs_.size()) + " legs" + describe());
    std::vector<std::size_t> pos;
    Shape out_shape;
    for (const auto& n : order) {
      pos.push_back(position(n));
      out_shape.push_back(legs_[pos.back()].dim);
    }
    bool identity = true;
    for (std::size_t k = 0; k < pos.size(); ++k) identity = identity && pos[k] == k;
    if (identity) return entries_;
    const Shape old_shape = shape();
    std::vector<std::pair<std::size_t, F>> raw;
    raw.reserve(entries_.size());
    for (const auto& [flat, val] : entries_) {
      auto idx = unflatten(flat, old_shape);
      std::size_t f = 0;
      for (std::size_t k = 0; k < pos.size(); ++k) f = f * out_shape[k] + idx[pos[k]];
      raw.emplace_back(f, val);
    }
    return sv::canonical(std::move(raw));
  }

  Tensor& reorder(const std::vector<std::string>& order) {
    auto v = read(order);
    std::vector<Leg> ls;
    for (const auto& n : order) ls.push_back(legs_[position(n)]);
    legs_ = std::move(ls);
    entries_ = std::move(v);
    return *this;
  }

  /// Scalar value of a leg-less tensor.
  [[nodiscard]] F scalar() const {
    if (!legs_.empty()) throw LegError("scalar: tensor still has legs" + describe());
    return entries_.empty() ? ctx_.zero() : entries_.front().second;
  }

 private:
  [[nodiscard]] std::string describe() const {
    std::string s = " (legs:";
    for (const auto& l : legs_) s += " " + l.name + "[" + std::to_string(l.dim) + "]";
    return s + ")";
  }

  Context ctx_{};
  std::vector<Leg> legs_;
  SparseVec<F> entries_;
};

/// Tabulates a multilinear formula into a LinearMap: the domain legs are fed
/// basis tuples, `fn` transforms the tensor, and the result is read in `out_order`.
template <ExactField F, class Fn>
LinearMap<F> tabulate(typename F::Context ctx, const std::vector<Leg>& in_legs, const std::vector<Leg>& out_legs,
                      Fn&& fn) {
  Shape dom, cod;
  std::vector<std::string> order;
  for (const auto& l : in_legs) dom.push_back(l.dim);
  for (const auto& l : out_legs) {
    cod.push_back(l.dim);
    order.push_back(l.name);
  }
  return LinearMap<F>::from_columns(dom, cod, ctx, [&](std::size_t c) {
    auto idx = unflatten(c, dom);
    std::vector<typename Tensor<F>::BasisLeg> b;
    for (std::size_t k = 0; k < in_legs.size(); ++k) b.push_back({in_legs[k].name, in_legs[k].dim, idx[k]});
    Tensor<F> t = Tensor<F>::basis(ctx, b);
    try {
      fn(t);
    } catch (const SubspaceEscape& e) {
      std::string at = " at input (";
      for (std::size_t k = 0; k < in_legs.size(); ++k) at += (k ? ", " : "") + in_legs[k].name + "=" + std::to_string(idx[k]);
      throw SubspaceEscape(e.what(), e.detail + at + ")");
    }
    for (const auto& l : out_legs)
      if (t.legs()[t.position(l.name)].dim != l.dim) throw LegError("tabulate: output leg '" + l.name + "' has wrong dim");
    return t.read(order);
  });
}

}  // namespace whh
