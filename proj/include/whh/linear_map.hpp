#pragma once

// Linear maps between tensor-power spaces.
//
// Index convention (used everywhere): a basis tuple (i0, i1, ..., ik) of a
// space with factor shape (s0, s1, ..., sk) has flat index
//   ((i0 * s1 + i1) * s2 + i2) ... * sk + ik          (row-major mixed radix).
// Rows of a map are indexed by the codomain, columns by the domain.
// Storage is column-sparse; the mathematical object is the dense matrix.

#include "whh/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace whh {

using Shape = std::vector<std::size_t>;

inline std::size_t volume(const Shape& s) {
  std::size_t v = 1;
  for (auto d : s) v *= d;
  return v;
}

inline std::string shape_str(const Shape& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

inline std::vector<std::size_t> unflatten(std::size_t flat, const Shape& s) {
  std::vector<std::size_t> idx(s.size());
  for (std::size_t k = s.size(); k-- > 0;) {
    idx[k] = flat % s[k];
    flat /= s[k];
  }
  return idx;
}

inline std::size_t flatten(const std::vector<std::size_t>& idx, const Shape& s) {
  std::size_t f = 0;
  for (std::size_t k = 0; k < s.size(); ++k) f = f * s[k] + idx[k];
  return f;
}

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMap : std::runtime_error {
  std::size_t rank;
  SingularMap(const std::string& what, std::size_t r) : std::runtime_error(what), rank(r) {}
};

/// Sparse vector: sorted (index, value) pairs with no stored zeros.
template <class F>
using SparseVec = std::vector<std::pair<std::size_t, F>>;

namespace sv {

template <class F>
SparseVec<F> axpy(const SparseVec<F>& x, const F& a, const SparseVec<F>& y) {
  // x + a*y
  SparseVec<F> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      F v = a * y[j].second;
      if (!v.is_zero()) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      F v = x[i].second + a * y[j].second;
      if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
SparseVec<F> scale(const SparseVec<F>& x, const F& a) {
  SparseVec<F> out;
  if (a.is_zero()) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, a * v);
  return out;
}

template <class F>
const F* find(const SparseVec<F>& x, std::size_t idx) {
  auto it = std::lower_bound(x.begin(), x.end(), idx, [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != x.end() && it->first == idx) ? &it->second : nullptr;
}

/// Builds a canonical sparse vector from unsorted entries, summing duplicates.
template <class F>
SparseVec<F> canonical(std::vector<std::pair<std::size_t, F>> raw) {
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> out;
  out.reserve(raw.size());
  for (auto& e : raw) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
  return out;
}

template <class F>
std::string to_string(const SparseVec<F>& x, const Shape& s) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, v] : x) {
    if (!first) os << " + ";
    first = false;
    os << v.str() << "*[";
    auto idx = unflatten(i, s);
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
    os << "]";
  }
  return os.str();
}

}  // namespace sv

template <ExactField F>
class LinearMap {
 public:
  using Scalar = F;
  using Context = typename F::Context;

  LinearMap() = default;
  LinearMap(Shape dom, Shape cod, Context ctx = {})
      : dom_(std::move(dom)), cod_(std::move(cod)), ctx_(ctx), cols_(volume(dom_)) {}

  static LinearMap identity(const Shape& s, Context ctx = {}) {
    LinearMap m(s, s, ctx);
    for (std::size_t i = 0; i < m.cols_.size(); ++i) m.cols_[i].emplace_back(i, ctx.one());
    return m;
  }

  static LinearMap zero(const Shape& dom, const Shape& cod, Context ctx = {}) { return LinearMap(dom, cod, ctx); }

  /// rows[r][c] is the coefficient of codomain basis r in the image of domain basis c.
  static LinearMap from_dense(const Shape& dom, const Shape& cod, const std::vector<std::vector<F>>& rows,
                              Context ctx = {}) {
    LinearMap m(dom, cod, ctx);
    if (rows.size() != volume(cod)) throw ShapeError("from_dense: row count does not match codomain " + shape_str(cod));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != volume(dom))
        throw ShapeError("from_dense: column count does not match domain " + shape_str(dom));
      for (std::size_t c = 0; c < rows[r].size(); ++c)
        if (!rows[r][c].is_zero()) m.cols_[c].emplace_back(r, rows[r][c]);
    }
    return m;
  }

  /// Map whose column c is fn(c).
  static LinearMap from_columns(const Shape& dom, const Shape& cod, Context ctx,
                                const std::function<SparseVec<F>(std::size_t)>& fn) {
    LinearMap m(dom, cod, ctx);
    for (std::size_t c = 0; c < m.cols_.size(); ++c) m.cols_[c] = fn(c);
    return m;
  }

  /// Linear functional / vector helpers: a vector v in V is a map () -> V.
  static LinearMap vector(const Shape& cod, SparseVec<F> v, Context ctx = {}) {
    LinearMap m(Shape{}, cod, ctx);
    m.cols_[0] = std::move(v);
    return m;
  }

  [[nodiscard]] const Shape& dom() const { return dom_; }
  [[nodiscard]] const Shape& cod() const { return cod_; }
  [[nodiscard]] std::size_t rows() const { return volume(cod_); }
  [[nodiscard]] std::size_t cols() const { return cols_.size(); }
  [[nodiscard]] const Context& ctx() const { return ctx_; }
  [[nodiscard]] const SparseVec<F>& column(std::size_t c) const { return cols_.at(c); }
  [[nodiscard]] std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
  }

  [[nodiscard]] F entry(std::size_t r, std::size_t c) const {
    const F* p = sv::find(cols_.at(c), r);
    return p ? *p : ctx_.zero();
  }

  void set(std::size_t r, std::size_t c, const F& v) {
    if (r >= rows() || c >= cols()) throw ShapeError("set: index out of range");
    auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t k) { return e.first < k; });
    if (it != col.end() && it->first == r) {
      if (v.is_zero()) col.erase(it);
      else it->second = v;
    } else if (!v.is_zero()) {
      col.insert(it, {r, v});
    }
  }

  void set_column(std::size_t c, SparseVec<F> v) { cols_.at(c) = std::move(v); }

  [[nodiscard]] std::vector<std::vector<F>> dense() const {
    std::vector<std::vector<F>> out(rows(), std::vector<F>(cols(), ctx_.zero()));
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : cols_[c]) out[r][c] = v;
    return out;
  }

  [[nodiscard]] SparseVec<F> apply(const SparseVec<F>& x) const {
    SparseVec<F> acc;
    for (const auto& [c, a] : x) acc = sv::axpy(acc, a, cols_.at(c));
    return acc;
  }

  /// Re-labels the factor shapes without touching entries (volumes must agree).
  [[nodiscard]] LinearMap reshaped(Shape dom, Shape cod) const {
    if (volume(dom) != volume(dom_) || volume(cod) != volume(cod_))
      throw ShapeError("reshape " + shape_str(dom_) + "->" + shape_str(cod_) + " as " + shape_str(dom) + "->" +
                       shape_str(cod));
    LinearMap m = *this;
    m.dom_ = std::move(dom);
    m.cod_ = std::move(cod);
    return m;
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    if (volume(a.dom_) != volume(b.dom_) || volume(a.cod_) != volume(b.cod_)) return false;
    return a.cols_ == b.cols_;
  }

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    same_shape(a, b, "+");
    LinearMap m(a.dom_, a.cod_, a.ctx_);
    auto one = a.ctx_.one();
    for (std::size_t c = 0; c < m.cols(); ++c) m.cols_[c] = sv::axpy(a.cols_[c], one, b.cols_[c]);
    return m;
  }
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    same_shape(a, b, "-");
    LinearMap m(a.dom_, a.cod_, a.ctx_);
    auto mone = -a.ctx_.one();
    for (std::size_t c = 0; c < m.cols(); ++c) m.cols_[c] = sv::axpy(a.cols_[c], mone, b.cols_[c]);
    return m;
  }
  friend LinearMap operator*(const F& s, const LinearMap& a) {
    LinearMap m(a.dom_, a.cod_, a.ctx_);
    for (std::size_t c = 0; c < m.cols(); ++c) m.cols_[c] = sv::scale(a.cols_[c], s);
    return m;
  }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
  }

  [[nodiscard]] LinearMap transpose() const {
    LinearMap m(cod_, dom_, ctx_);
    for (std::size_t c = 0; c < cols(); ++c)
      for (const auto& [r, v] : cols_[c]) m.cols_[r].emplace_back(c, v);
    return m;
  }

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    os << shape_str(dom_) << " -> " << shape_str(cod_) << "\n";
    for (const auto& row : dense()) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c].str();
      os << "\n";
    }
    return os.str();
  }

 private:
  static void same_shape(const LinearMap& a, const LinearMap& b, const char* op) {
    if (a.dom_ != b.dom_ || a.cod_ != b.cod_)
      throw ShapeError(std::string("operator") + op + ": shapes " + shape_str(a.dom_) + "->" + shape_str(a.cod_) +
                       " and " + shape_str(b.dom_) + "->" + shape_str(b.cod_));
    if (!(a.ctx_ == b.ctx_)) throw FieldMismatch("mixed ground fields in map arithmetic");
  }

  Shape dom_, cod_;
  Context ctx_{};
  std::vector<SparseVec<F>> cols_;
};

/// f ∘ g.
template <ExactField F>
LinearMap<F> compose(const LinearMap<F>& f, const LinearMap<F>& g) {
  if (volume(g.cod()) != volume(f.dom()) || g.cod() != f.dom())
    throw ShapeError("compose: codomain " + shape_str(g.cod()) + " of inner map does not match domain " +
                     shape_str(f.dom()) + " of outer map");
  if (!(f.ctx() == g.ctx())) throw FieldMismatch("compose: mixed ground fields");
  return LinearMap<F>::from_columns(g.dom(), f.cod(), f.ctx(), [&](std::size_t c) { return f.apply(g.column(c)); });
}

/// Kronecker product; factor shapes are concatenated.
template <ExactField F>
LinearMap<F> tensor(const LinearMap<F>& f, const LinearMap<F>& g) {
  if (!(f.ctx() == g.ctx())) throw FieldMismatch("tensor: mixed ground fields");
  Shape dom = f.dom(), cod = f.cod();
  dom.insert(dom.end(), g.dom().begin(), g.dom().end());
  cod.insert(cod.end(), g.cod().begin(), g.cod().end());
  const std::size_t gc = g.cols(), gr = g.rows();
  return LinearMap<F>::from_columns(dom, cod, f.ctx(), [&](std::size_t c) {
    SparseVec<F> out;
    const auto& fc = f.column(c / gc);
    const auto& gcol = g.column(c % gc);
    out.reserve(fc.size() * gcol.size());
    for (const auto& [r1, v1] : fc)
      for (const auto& [r2, v2] : gcol) out.emplace_back(r1 * gr + r2, v1 * v2);
    return out;
  });
}

template <ExactField F, class... Rest>
LinearMap<F> tensor(const LinearMap<F>& f, const LinearMap<F>& g, const Rest&... rest) {
  return tensor(tensor(f, g), rest...);
}

/// Leg permutation map: output leg k is input leg perm[k].
template <ExactField F>
LinearMap<F> permutation(const Shape& in, const std::vector<std::size_t>& perm, typename F::Context ctx = {}) {
  if (perm.size() != in.size()) throw ShapeError("permutation: arity mismatch");
  Shape out(in.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out[k] = in.at(perm[k]);
  return LinearMap<F>::from_columns(in, out, ctx, [&](std::size_t c) {
    auto idx = unflatten(c, in);
    std::vector<std::size_t> o(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) o[k] = idx[perm[k]];
    return SparseVec<F>{{flatten(o, out), ctx.one()}};
  });
}

namespace detail {

/// Gauss-Jordan on dense rows; returns rank and leaves the matrix in RREF.
template <ExactField F>
std::size_t rref_inplace(std::vector<std::vector<F>>& a, std::size_t ncols, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    F inv = F(a[r][c]);
    for (std::size_t k = 0; k < a[r].size(); ++k)
      if (!a[r][k].is_zero()) a[r][k] = a[r][k] / inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      F f = a[i][c];
      for (std::size_t k = 0; k < a[i].size(); ++k)
        if (!a[r][k].is_zero()) a[i][k] = a[i][k] - f * a[r][k];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace detail

template <ExactField F>
std::size_t rank(const LinearMap<F>& f) {
  auto a = f.dense();
  return detail::rref_inplace(a, f.cols());
}

/// Exact inverse by Gauss-Jordan elimination; throws SingularMap with the rank.
template <ExactField F>
LinearMap<F> invert(const LinearMap<F>& f) {
  const std::size_t n = f.rows();
  if (n != f.cols()) throw ShapeError("invert: map " + shape_str(f.dom()) + "->" + shape_str(f.cod()) + " is not square");
  auto a = f.dense();
  for (std::size_t r = 0; r < n; ++r) {
    a[r].resize(2 * n, f.ctx().zero());
    a[r][n + r] = f.ctx().one();
  }
  std::size_t rk = detail::rref_inplace(a, n);
  if (rk < n) throw SingularMap("invert: singular map of rank " + std::to_string(rk) + " < " + std::to_string(n), rk);
  LinearMap<F> out(f.cod(), f.dom(), f.ctx());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!a[r][n + c].is_zero()) out.set(r, c, a[r][n + c]);
  return out;
}

template <ExactField F>
LinearMap<F> power(const LinearMap<F>& f, int k) {
  if (k < 0) return power(invert(f), -k);
  auto out = LinearMap<F>::identity(f.dom(), f.ctx());
  for (int i = 0; i < k; ++i) out = compose(f, out);
  return out;
}

}  // namespace whh
