#pragma once

// Check reports: one entry per identity, each carrying failing basis tuples
// with both sides rendered exactly.

#include "whh/tensor.hpp"

#include <functional>
#include <string>
#include <vector>

namespace whh {

struct Witness {
  std::vector<std::pair<std::string, std::size_t>> input;  // leg name, basis index
  std::string lhs;
  std::string rhs;
};

struct CheckEntry {
  std::string id;
  std::string anchor;
  bool pass = true;
  std::size_t failures = 0;
  std::size_t tested = 0;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
};

struct CheckOptions {
  std::size_t max_witnesses = 16;
};

class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string subject, CheckOptions opt = {}) : subject_(std::move(subject)), opt_(opt) {}

  [[nodiscard]] const std::string& subject() const { return subject_; }
  [[nodiscard]] const std::vector<CheckEntry>& entries() const { return entries_; }
  [[nodiscard]] const CheckOptions& options() const { return opt_; }
  [[nodiscard]] bool pass() const {
    for (const auto& e : entries_)
      if (!e.pass) return false;
    return true;
  }
  [[nodiscard]] const CheckEntry* find(const std::string& id) const {
    for (const auto& e : entries_)
      if (e.id == id) return &e;
    return nullptr;
  }
  [[nodiscard]] bool passed(const std::string& id) const {
    auto* e = find(id);
    return e && e->pass;
  }
  [[nodiscard]] std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& e : entries_)
      if (!e.pass) out.push_back(e.id);
    return out;
  }

  CheckEntry& add(CheckEntry e) {
    entries_.push_back(std::move(e));
    return entries_.back();
  }

  /// Records a boolean fact (no witness tuple).
  CheckEntry& fact(const std::string& id, const std::string& anchor, bool ok, const std::string& detail = {}) {
    CheckEntry e{id, anchor, ok, ok ? 0u : 1u, 1, {}, {}};
    if (!ok && !detail.empty()) e.witnesses.push_back({{}, detail, ""});
    return add(std::move(e));
  }

  /// Merges another report, prefixing its ids.
  void merge(const CheckReport& other, const std::string& prefix = {}) {
    for (auto e : other.entries_) {
      if (!prefix.empty()) e.id = prefix + e.id;
      entries_.push_back(std::move(e));
    }
    for (const auto& d : other.deviations_) deviation(d);
  }

  /// Convention choices applied while checking (reported alongside entries).
  void deviation(const std::string& text) {
    for (const auto& d : deviations_)
      if (d == text) return;
    deviations_.push_back(text);
  }
  [[nodiscard]] const std::vector<std::string>& deviations() const { return deviations_; }

  void note(const std::string& id, const std::string& text) {
    for (auto& e : entries_)
      if (e.id == id) e.notes.push_back(text);
  }

 private:
  std::string subject_;
  CheckOptions opt_;
  std::vector<CheckEntry> entries_;
  std::vector<std::string> deviations_;
};

/// Compares two tabulated formulas over every basis tuple of `in_legs`.
/// Both sides must return tensors readable in `out_order`.
template <ExactField F, class L, class R>
CheckEntry& check_identity(CheckReport& rep, const std::string& id, const std::string& anchor,
                           typename F::Context ctx, const std::vector<Leg>& in_legs,
                           const std::vector<Leg>& out_legs, L&& lhs, R&& rhs) {
  CheckEntry e;
  e.id = id;
  e.anchor = anchor;
  Shape dom, cod;
  std::vector<std::string> order;
  for (const auto& l : in_legs) dom.push_back(l.dim);
  for (const auto& l : out_legs) {
    cod.push_back(l.dim);
    order.push_back(l.name);
  }
  const std::size_t n = volume(dom);
  for (std::size_t c = 0; c < n; ++c) {
    auto idx = unflatten(c, dom);
    std::vector<typename Tensor<F>::BasisLeg> b;
    for (std::size_t k = 0; k < in_legs.size(); ++k) b.push_back({in_legs[k].name, in_legs[k].dim, idx[k]});
    auto t1 = Tensor<F>::basis(ctx, b);
    auto t2 = t1;
    std::string err1, err2;
    SparseVec<F> a, z;
    bool ok1 = true, ok2 = true;
    try {
      lhs(t1);
      a = t1.read(order);
    } catch (const SubspaceEscape& ex) {
      ok1 = false;
      err1 = std::string(ex.what()) + ": " + ex.detail;
    }
    try {
      rhs(t2);
      z = t2.read(order);
    } catch (const SubspaceEscape& ex) {
      ok2 = false;
      err2 = std::string(ex.what()) + ": " + ex.detail;
    }
    ++e.tested;
    if (ok1 && ok2 && a == z) continue;
    e.pass = false;
    ++e.failures;
    if (e.witnesses.size() < rep.options().max_witnesses) {
      Witness w;
      for (std::size_t k = 0; k < in_legs.size(); ++k) w.input.emplace_back(in_legs[k].name, idx[k]);
      w.lhs = ok1 ? sv::to_string(a, cod) : err1;
      w.rhs = ok2 ? sv::to_string(z, cod) : err2;
      e.witnesses.push_back(std::move(w));
    }
  }
  return rep.add(std::move(e));
}

/// Map equality f == g with per-column witnesses.
template <ExactField F>
CheckEntry& check_maps_equal(CheckReport& rep, const std::string& id, const std::string& anchor,
                             const LinearMap<F>& f, const LinearMap<F>& g, const std::string& in_name = "x") {
  CheckEntry e;
  e.id = id;
  e.anchor = anchor;
  if (volume(f.dom()) != volume(g.dom()) || volume(f.cod()) != volume(g.cod())) {
    e.pass = false;
    e.failures = 1;
    e.witnesses.push_back({{}, "shape " + shape_str(f.dom()) + "->" + shape_str(f.cod()),
                           "shape " + shape_str(g.dom()) + "->" + shape_str(g.cod())});
    return rep.add(std::move(e));
  }
  for (std::size_t c = 0; c < f.cols(); ++c) {
    ++e.tested;
    if (f.column(c) == g.column(c)) continue;
    e.pass = false;
    ++e.failures;
    if (e.witnesses.size() < rep.options().max_witnesses) {
      Witness w;
      auto idx = unflatten(c, f.dom());
      for (std::size_t k = 0; k < idx.size(); ++k)
        w.input.emplace_back(idx.size() == 1 ? in_name : in_name + std::to_string(k), idx[k]);
      w.lhs = sv::to_string(f.column(c), f.cod());
      w.rhs = sv::to_string(g.column(c), g.cod());
      e.witnesses.push_back(std::move(w));
    }
  }
  return rep.add(std::move(e));
}

}  // namespace whh
