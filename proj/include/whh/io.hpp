#pragma once

// JSON spec documents and report emission.
//
// A spec document:
//   { "format_version": 1,
//     "field": "rational" | {"prime": p},
//     "objects": { "<name>": { "type": ..., ... }, ... } }
//
// Tensors are sparse entry lists [i_1, ..., i_k, j_1, ..., j_l, "value"]:
// the domain indices come first, then the codomain indices. So a
// multiplication entry [a, b, c, "v"] says e_a e_b has coefficient v on e_c,
// a comultiplication entry [a, b, c, "v"] says Delta(e_a) has v on e_b (x) e_c.
// Loading canonicalizes (entries sorted, zeros dropped, values reduced), so
// load(save(doc)) == doc.

#include "whh/entwining.hpp"
#include "whh/groups.hpp"
#include "whh/instance_forge.hpp"
#include "whh/qt_cqt.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace whh {

using json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FieldDesc {
  std::uint64_t prime = 0;  // 0 = rationals
  [[nodiscard]] bool is_rational() const { return prime == 0; }
  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

struct SpecDocument {
  int format_version = 1;
  FieldDesc field;
  std::map<std::string, json> objects;
  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

namespace io_detail {

struct TensorSlot {
  std::string key;
  bool required;
  // shape in terms of the owner's "d" (ambient algebra) and "m" (own dim)
  std::vector<char> dom, cod;
};

inline const std::map<std::string, std::vector<TensorSlot>>& slots() {
  static const std::map<std::string, std::vector<TensorSlot>> s = {
      {"algebra", {{"mu", true, {'d', 'd'}, {'d'}}, {"eta", true, {}, {'d'}}, {"alpha", false, {'d'}, {'d'}}}},
      {"coalgebra", {{"delta", true, {'d'}, {'d', 'd'}}, {"eps", true, {'d'}, {}}, {"alpha", false, {'d'}, {'d'}}}},
      {"weak_bialgebra",
       {{"mu", true, {'d', 'd'}, {'d'}},
        {"eta", true, {}, {'d'}},
        {"delta", true, {'d'}, {'d', 'd'}},
        {"eps", true, {'d'}, {}},
        {"alpha", false, {'d'}, {'d'}},
        {"S", false, {'d'}, {'d'}}}},
      {"weak_hopf",
       {{"mu", true, {'d', 'd'}, {'d'}},
        {"eta", true, {}, {'d'}},
        {"delta", true, {'d'}, {'d', 'd'}},
        {"eps", true, {'d'}, {}},
        {"alpha", false, {'d'}, {'d'}},
        {"S", true, {'d'}, {'d'}}}},
      {"module", {{"act", true, {'d', 'm'}, {'m'}}, {"alpha", false, {'m'}, {'m'}}}},
      {"comodule", {{"co", true, {'m'}, {'m', 'd'}}, {"alpha", false, {'m'}, {'m'}}}},
      {"yd_module", {{"act", true, {'d', 'm'}, {'m'}}, {"co", true, {'m'}, {'m', 'd'}}, {"alpha", false, {'m'}, {'m'}}}},
      {"r_matrix", {{"R", true, {}, {'d', 'd'}}, {"Rbar", true, {}, {'d', 'd'}}}},
      {"sigma_form", {{"sigma", true, {'d', 'd'}, {}}, {"sigma_prime", true, {'d', 'd'}, {}}}},
      {"entwining", {{"psi", true, {'a', 'c'}, {'a', 'c'}}}},
      {"group", {}},
      {"groupoid", {}},
  };
  return s;
}

inline bool is_hopf_like(const std::string& t) {
  return t == "weak_hopf" || t == "weak_bialgebra" || t == "group" || t == "groupoid";
}
inline bool is_algebra_like(const std::string& t) { return t == "algebra" || is_hopf_like(t); }
inline bool is_coalgebra_like(const std::string& t) { return t == "coalgebra" || is_hopf_like(t); }

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

inline std::size_t get_size(const json& o, const std::string& key, const std::string& where) {
  if (!o.contains(key)) fail(where, "missing field '" + key + "'");
  const auto& v = o.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    fail(where, "field '" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

inline std::string get_string(const json& o, const std::string& key, const std::string& where) {
  if (!o.contains(key) || !o.at(key).is_string()) fail(where, "missing string field '" + key + "'");
  return o.at(key).get<std::string>();
}

template <class Canon>
json canonical_entries(const json& entries, const Shape& dom, const Shape& cod, Canon&& canon,
                       const std::string& where) {
  if (!entries.is_array()) fail(where, "tensor must be an array of entries");
  const std::size_t k = dom.size() + cod.size();
  std::map<std::vector<std::size_t>, std::string> acc;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != k + 1)
      fail(where, "entry " + e.dump() + " must have " + std::to_string(k) + " indices and a value");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& x = e[i];
      if (!x.is_number_integer() || x.get<long long>() < 0) fail(where, "bad index in entry " + e.dump());
      auto v = x.get<std::size_t>();
      std::size_t bound = i < dom.size() ? dom[i] : cod[i - dom.size()];
      if (v >= bound) fail(where, "index " + std::to_string(v) + " out of range " + std::to_string(bound) +
                                      " in entry " + e.dump());
      idx.push_back(v);
    }
    const auto& val = e[k];
    std::string lit;
    if (val.is_string()) lit = val.get<std::string>();
    else if (val.is_number_integer()) lit = std::to_string(val.get<long long>());
    else fail(where, "value must be a string \"p/q\" or an integer in entry " + e.dump());
    std::optional<std::string> c;
    try {
      c = canon(lit);
    } catch (const std::exception& ex) {
      fail(where, ex.what());
    }
    if (acc.count(idx)) fail(where, "duplicate entry for indices of " + e.dump());
    if (c) acc.emplace(idx, *c);
  }
  json out = json::array();
  for (const auto& [idx, v] : acc) {
    json e = json::array();
    for (auto i : idx) e.push_back(i);
    e.push_back(v);
    out.push_back(std::move(e));
  }
  return out;
}

/// Canonical literal, or nullopt for zero.
inline std::function<std::optional<std::string>(const std::string&)> canonicalizer(const FieldDesc& f) {
  if (f.is_rational())
    return [](const std::string& s) -> std::optional<std::string> {
      auto q = Rational::parse(s);
      if (q.is_zero()) return std::nullopt;
      return q.str();
    };
  auto P = std::make_shared<PrimeField>(f.prime);
  return [P](const std::string& s) -> std::optional<std::string> {
    auto v = P->parse(s);
    if (v.is_zero()) return std::nullopt;
    return v.str();
  };
}

}  // namespace io_detail

/// Validates and canonicalizes a parsed JSON value.
inline SpecDocument parse_spec(const json& root) {
  using namespace io_detail;
  if (!root.is_object()) fail("document", "top level must be an object");
  SpecDocument doc;
  if (!root.contains("format_version") || !root.at("format_version").is_number_integer())
    fail("document", "missing integer 'format_version'");
  doc.format_version = root.at("format_version").get<int>();
  if (doc.format_version != 1) fail("document", "unsupported format_version " + std::to_string(doc.format_version));
  if (!root.contains("field")) fail("document", "missing 'field'");
  const auto& fd = root.at("field");
  if (fd.is_string() && fd.get<std::string>() == "rational") {
    doc.field.prime = 0;
  } else if (fd.is_object() && fd.contains("prime") && fd.at("prime").is_number_unsigned()) {
    doc.field.prime = fd.at("prime").get<std::uint64_t>();
    if (doc.field.prime > (1ULL << 31) || !PrimeField::is_prime(doc.field.prime)) fail("field", std::to_string(doc.field.prime) + " is not a supported prime (< 2^31)");
  } else {
    fail("field", "must be \"rational\" or {\"prime\": p}");
  }
  for (const auto& [k, v] : root.items())
    if (k != "format_version" && k != "field" && k != "objects") fail("document", "unknown top-level key '" + k + "'");
  if (!root.contains("objects") || !root.at("objects").is_object()) fail("document", "missing object map 'objects'");
  const auto& objs = root.at("objects");
  auto canon = canonicalizer(doc.field);

  // first pass: types and intrinsic dimensions
  std::map<std::string, std::string> type_of;
  std::map<std::string, std::size_t> dim_of;
  for (const auto& [name, o] : objs.items()) {
    const std::string where = "object '" + name + "'";
    if (!o.is_object()) fail(where, "must be an object");
    auto t = get_string(o, "type", where);
    if (!slots().count(t)) fail(where, "unknown type '" + t + "'");
    type_of[name] = t;
    if (t == "group") dim_of[name] = get_size(o, "order", where);
    else if (t == "groupoid") {
      if (!o.contains("arrows") || !o.at("arrows").is_array()) fail(where, "missing 'arrows'");
      dim_of[name] = o.at("arrows").size();
    } else if (t != "r_matrix" && t != "sigma_form" && t != "entwining") {
      dim_of[name] = get_size(o, "dim", where);
    }
  }
  auto ref = [&](const json& o, const std::string& key, const std::string& where, bool (*ok)(const std::string&),
                 const char* kind) {
    auto r = get_string(o, key, where);
    auto it = type_of.find(r);
    if (it == type_of.end()) fail(where, "'" + key + "' refers to unknown object '" + r + "'");
    if (!ok(it->second)) fail(where, "'" + key + "' must name " + std::string(kind) + ", got " + it->second);
    return r;
  };

  for (const auto& [name, o] : objs.items()) {
    const std::string where = "object '" + name + "'";
    const auto& t = type_of[name];
    json out = json::object();
    out["type"] = t;
    std::size_t d = 0, m = 0, a = 0, c = 0;
    std::set<std::string> known{"type", "note"};
    if (o.contains("note")) {
      if (!o.at("note").is_string()) fail(where, "'note' must be a string");
      out["note"] = o.at("note");
    }
    if (t == "algebra" || t == "coalgebra" || t == "weak_bialgebra" || t == "weak_hopf") {
      d = dim_of[name];
      out["dim"] = d;
      known.insert("dim");
    } else if (t == "module" || t == "comodule" || t == "yd_module" || t == "r_matrix" || t == "sigma_form") {
      bool (*ok)(const std::string&) = t == "module"     ? &is_algebra_like
                                       : t == "comodule" ? &is_coalgebra_like
                                                         : &is_hopf_like;
      auto over = ref(o, "over", where, ok, t == "module" ? "an algebra" : t == "comodule" ? "a coalgebra" : "a Hopf-type object");
      out["over"] = over;
      known.insert("over");
      d = dim_of[over];
      if (t != "r_matrix" && t != "sigma_form") {
        m = dim_of[name];
        out["dim"] = m;
        known.insert("dim");
      }
    } else if (t == "entwining") {
      auto A = ref(o, "algebra", where, &is_algebra_like, "an algebra");
      auto C = ref(o, "coalgebra", where, &is_coalgebra_like, "a coalgebra");
      out["algebra"] = A;
      out["coalgebra"] = C;
      known.insert({"algebra", "coalgebra"});
      a = dim_of[A];
      c = dim_of[C];
    } else if (t == "group") {
      const auto n = dim_of[name];
      out["order"] = n;
      known.insert({"order", "table"});
      if (!o.contains("table") || !o.at("table").is_array() || o.at("table").size() != n)
        fail(where, "'table' must be an order x order array");
      for (const auto& row : o.at("table")) {
        if (!row.is_array() || row.size() != n) fail(where, "'table' rows must have length order");
        for (const auto& v : row)
          if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) fail(where, "table entry out of range");
      }
      out["table"] = o.at("table");
    } else if (t == "groupoid") {
      const auto n = dim_of[name];
      auto objects = get_size(o, "objects", where);
      out["objects"] = objects;
      known.insert({"objects", "arrows", "compose"});
      for (const auto& ar : o.at("arrows"))
        if (!ar.is_array() || ar.size() != 2 || !ar[0].is_number_unsigned() || !ar[1].is_number_unsigned() ||
            ar[0].get<std::size_t>() >= objects || ar[1].get<std::size_t>() >= objects)
          fail(where, "arrows must be [source, target] pairs of object indices");
      out["arrows"] = o.at("arrows");
      if (!o.contains("compose") || !o.at("compose").is_array() || o.at("compose").size() != n)
        fail(where, "'compose' must be an arrows x arrows array");
      for (const auto& row : o.at("compose")) {
        if (!row.is_array() || row.size() != n) fail(where, "'compose' rows must have length #arrows");
        for (const auto& v : row)
          if (!v.is_null() && (!v.is_number_unsigned() || v.get<std::size_t>() >= n))
            fail(where, "compose entry must be null or an arrow index");
      }
      out["compose"] = o.at("compose");
    }
    auto dimension = [&](char ch) -> std::size_t {
      switch (ch) {
        case 'd': return d;
        case 'm': return m;
        case 'a': return a;
        default: return c;
      }
    };
    for (const auto& s : slots().at(t)) {
      known.insert(s.key);
      if (!o.contains(s.key)) {
        if (s.required) fail(where, "missing tensor '" + s.key + "'");
        continue;
      }
      Shape dom, cod;
      for (char ch : s.dom) dom.push_back(dimension(ch));
      for (char ch : s.cod) cod.push_back(dimension(ch));
      out[s.key] = canonical_entries(o.at(s.key), dom, cod, canon, where + " tensor '" + s.key + "'");
    }
    for (const auto& [k, v] : o.items())
      if (!known.count(k)) fail(where, "unknown field '" + k + "'");
    doc.objects.emplace(name, std::move(out));
  }
  return doc;
}

inline SpecDocument parse_spec_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_spec(root);
}

inline SpecDocument load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str());
}

inline json to_json(const SpecDocument& doc) {
  json root = json::object();
  root["format_version"] = doc.format_version;
  if (doc.field.is_rational()) root["field"] = "rational";
  else root["field"] = json{{"prime", doc.field.prime}};
  json objs = json::object();
  for (const auto& [k, v] : doc.objects) objs[k] = v;
  root["objects"] = objs;
  return root;
}

inline std::string save_spec(const SpecDocument& doc) { return to_json(doc).dump(2) + "\n"; }

// ----------------------------------------------------------- typed view

template <ExactField F>
json tensor_json(const LinearMap<F>& f) {
  json out = json::array();
  for (std::size_t c = 0; c < f.cols(); ++c) {
    auto in = unflatten(c, f.dom());
    for (const auto& [r, v] : f.column(c)) {
      json e = json::array();
      for (auto i : in) e.push_back(i);
      for (auto i : unflatten(r, f.cod())) e.push_back(i);
      e.push_back(v.str());
      out.push_back(std::move(e));
    }
  }
  return out;
}

template <ExactField F>
FieldDesc field_of(const typename F::Context& ctx) {
  if constexpr (std::is_same_v<F, ModP>) return FieldDesc{ctx.modulus()};
  else return FieldDesc{0};
}

/// Builds spec documents from typed objects.
template <ExactField F>
class SpecWriter {
 public:
  explicit SpecWriter(const typename F::Context& ctx) { doc_.field = field_of<F>(ctx); }

  SpecWriter& hopf(const std::string& name, const WeakHomHopfAlgebra<F>& H, const std::string& note = {}) {
    json o{{"type", "weak_hopf"},       {"dim", H.dim()},           {"mu", tensor_json(H.mu())},
           {"eta", tensor_json(H.eta())}, {"delta", tensor_json(H.delta())}, {"eps", tensor_json(H.eps())},
           {"alpha", tensor_json(H.alpha())}, {"S", tensor_json(H.S())}};
    if (!note.empty()) o["note"] = note;
    return put(name, o);
  }
  SpecWriter& yd(const std::string& name, const std::string& over, const YDModule<F>& M) {
    return put(name, json{{"type", "yd_module"},
                          {"over", over},
                          {"dim", M.dim},
                          {"act", tensor_json(M.act)},
                          {"co", tensor_json(M.co)},
                          {"alpha", tensor_json(M.alpha)}});
  }
  SpecWriter& module(const std::string& name, const std::string& over, const HModule<F>& M) {
    return put(name, json{{"type", "module"}, {"over", over}, {"dim", M.dim}, {"act", tensor_json(M.act)},
                          {"alpha", tensor_json(M.alpha)}});
  }
  SpecWriter& comodule(const std::string& name, const std::string& over, const HComodule<F>& M) {
    return put(name, json{{"type", "comodule"}, {"over", over}, {"dim", M.dim}, {"co", tensor_json(M.co)},
                          {"alpha", tensor_json(M.alpha)}});
  }
  SpecWriter& rmatrix(const std::string& name, const std::string& over, const RMatrix<F>& R) {
    return put(name, json{{"type", "r_matrix"}, {"over", over}, {"R", tensor_json(R.R)}, {"Rbar", tensor_json(R.Rbar)}});
  }
  SpecWriter& sigma(const std::string& name, const std::string& over, const SigmaForm<F>& S) {
    return put(name, json{{"type", "sigma_form"},
                          {"over", over},
                          {"sigma", tensor_json(S.sigma)},
                          {"sigma_prime", tensor_json(S.sigma_prime)}});
  }
  SpecWriter& entwining(const std::string& name, const std::string& A, const std::string& C, const LinearMap<F>& psi) {
    return put(name, json{{"type", "entwining"}, {"algebra", A}, {"coalgebra", C}, {"psi", tensor_json(psi)}});
  }
  SpecWriter& group(const std::string& name, const GroupPresentation& G) {
    return put(name, json{{"type", "group"}, {"order", G.order}, {"table", G.table}});
  }
  SpecWriter& groupoid(const std::string& name, const GroupoidPresentation& G) {
    json arrows = json::array(), comp = json::array();
    for (const auto& [s, t] : G.arrows) arrows.push_back(json::array({s, t}));
    for (const auto& row : G.compose) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v ? json(*v) : json(nullptr));
      comp.push_back(r);
    }
    return put(name, json{{"type", "groupoid"}, {"objects", G.objects}, {"arrows", arrows}, {"compose", comp}});
  }
  SpecWriter& raw(const std::string& name, json o) { return put(name, std::move(o)); }

  /// Canonicalized (and therefore validated) document.
  [[nodiscard]] SpecDocument document() const { return parse_spec(to_json(doc_)); }

 private:
  SpecWriter& put(const std::string& name, json o) {
    doc_.objects[name] = std::move(o);
    return *this;
  }
  SpecDocument doc_;
};

/// Materializes typed objects from a document over the field F.
template <ExactField F>
class SpecModel {
 public:
  using Context = typename F::Context;

  SpecModel(SpecDocument doc, Context ctx) : doc_(std::move(doc)), ctx_(ctx) {}

  [[nodiscard]] const SpecDocument& document() const { return doc_; }
  [[nodiscard]] const Context& ctx() const { return ctx_; }

  [[nodiscard]] std::string type(const std::string& name) const { return obj(name).at("type").template get<std::string>(); }

  [[nodiscard]] std::vector<std::string> names(const std::string& type_name) const {
    std::vector<std::string> v;
    for (const auto& [k, o] : doc_.objects)
      if (o.at("type") == type_name) v.push_back(k);
    return v;
  }
  [[nodiscard]] std::vector<std::string> names_over(const std::string& type_name, const std::string& over) const {
    std::vector<std::string> v;
    for (const auto& [k, o] : doc_.objects)
      if (o.at("type") == type_name && o.value("over", "") == over) v.push_back(k);
    return v;
  }
  [[nodiscard]] std::string over(const std::string& name) const { return obj(name).at("over").template get<std::string>(); }

  const WeakHomHopfAlgebra<F>& hopf(const std::string& name) {
    if (auto it = hopf_.find(name); it != hopf_.end()) return it->second;
    const auto& o = obj(name);
    const auto t = type(name);
    if (!io_detail::is_hopf_like(t)) throw ParseError("object '" + name + "' is a " + t + ", not a Hopf-type object");
    try {
      if (t == "group") return hopf_.emplace(name, group_algebra<F>(group(o), ctx_, name)).first->second;
      if (t == "groupoid") return hopf_.emplace(name, groupoid_algebra<F>(groupoid(o), ctx_, name)).first->second;
    } catch (const PresentationError& e) {
      throw ParseError("object '" + name + "': " + e.what());
    }
    const std::size_t d = o.at("dim");
    auto I = LinearMap<F>::identity({d}, ctx_);
    try {
      WeakHomHopfAlgebra<F> H(name, ctx_, d, map(o, "mu", {d, d}, {d}), map(o, "eta", {}, {d}),
                              map(o, "delta", {d}, {d, d}), map(o, "eps", {d}, {}), map_or(o, "alpha", I),
                              map_or(o, "S", I));
      return hopf_.emplace(name, std::move(H)).first->second;
    } catch (const SingularMap& e) {
      throw ParseError("object '" + name + "': " + e.what());
    }
  }

  [[nodiscard]] bool has_antipode(const std::string& name) const {
    const auto t = type(name);
    return t != "weak_bialgebra" || obj(name).contains("S");
  }

  HomAlgebra<F> algebra(const std::string& name) {
    const auto t = type(name);
    if (t != "algebra") return hopf(name).algebra();
    const auto& o = obj(name);
    const std::size_t d = o.at("dim");
    return {d, map(o, "mu", {d, d}, {d}), map(o, "eta", {}, {d}), map_or(o, "alpha", LinearMap<F>::identity({d}, ctx_)),
            ctx_};
  }

  HomCoalgebra<F> coalgebra(const std::string& name) {
    const auto t = type(name);
    if (t != "coalgebra") return hopf(name).coalgebra();
    const auto& o = obj(name);
    const std::size_t d = o.at("dim");
    return {d, map(o, "delta", {d}, {d, d}), map(o, "eps", {d}, {}),
            map_or(o, "alpha", LinearMap<F>::identity({d}, ctx_)), ctx_};
  }

  [[nodiscard]] std::size_t ambient_dim(const std::string& name) const {
    const auto& o = obj(name);
    const auto t = type(name);
    if (t == "group") return o.at("order");
    if (t == "groupoid") return o.at("arrows").size();
    return o.at("dim");
  }

  /// Module part of a module or Yetter-Drinfeld object.
  HModule<F> module(const std::string& name) {
    const auto& o = obj(name);
    const auto t = type(name);
    if (t != "module" && t != "yd_module") throw ParseError("object '" + name + "' is a " + t + ", not a module");
    const std::size_t m = o.at("dim");
    const auto d = ambient_dim(over(name));
    return {m, map(o, "act", {d, m}, {m}), map_or(o, "alpha", LinearMap<F>::identity({m}, ctx_))};
  }

  HComodule<F> comodule(const std::string& name) {
    const auto& o = obj(name);
    const auto t = type(name);
    if (t != "comodule" && t != "yd_module") throw ParseError("object '" + name + "' is a " + t + ", not a comodule");
    const std::size_t m = o.at("dim");
    const auto d = ambient_dim(over(name));
    return {m, map(o, "co", {m}, {m, d}), map_or(o, "alpha", LinearMap<F>::identity({m}, ctx_))};
  }

  YDPtr<F> yd(const std::string& name) {
    if (auto it = yd_.find(name); it != yd_.end()) return it->second;
    if (type(name) != "yd_module") throw ParseError("object '" + name + "' is a " + type(name) + ", not a yd_module");
    const auto& H = hopf(over(name));
    auto M = module(name);
    auto C = comodule(name);
    try {
      return yd_.emplace(name, make_yd(H, name, M.act, C.co, M.alpha)).first->second;
    } catch (const std::exception& e) {
      throw ParseError("object '" + name + "': " + e.what());
    }
  }

  RMatrix<F> rmatrix(const std::string& name) {
    const auto& o = obj(name);
    if (type(name) != "r_matrix") throw ParseError("object '" + name + "' is not an r_matrix");
    const auto d = ambient_dim(over(name));
    return {map(o, "R", {}, {d, d}), map(o, "Rbar", {}, {d, d})};
  }

  SigmaForm<F> sigma(const std::string& name) {
    const auto& o = obj(name);
    if (type(name) != "sigma_form") throw ParseError("object '" + name + "' is not a sigma_form");
    const auto d = ambient_dim(over(name));
    return {map(o, "sigma", {d, d}, {}), map(o, "sigma_prime", {d, d}, {})};
  }

  EntwiningStructure<F> entwining(const std::string& name) {
    const auto& o = obj(name);
    if (type(name) != "entwining") throw ParseError("object '" + name + "' is not an entwining");
    const auto A = o.at("algebra").template get<std::string>(), C = o.at("coalgebra").template get<std::string>();
    auto alg = algebra(A);
    auto co = coalgebra(C);
    return {alg, co, map(o, "psi", {alg.d, co.d}, {alg.d, co.d})};
  }

 private:
  [[nodiscard]] const json& obj(const std::string& name) const {
    auto it = doc_.objects.find(name);
    if (it == doc_.objects.end()) throw ParseError("no object named '" + name + "'");
    return it->second;
  }

  LinearMap<F> map(const json& o, const std::string& key, const Shape& dom, const Shape& cod) const {
    LinearMap<F> f(dom, cod, ctx_);
    for (const auto& e : o.at(key)) {
      std::vector<std::size_t> in, out;
      for (std::size_t i = 0; i < dom.size(); ++i) in.push_back(e[i].template get<std::size_t>());
      for (std::size_t i = 0; i < cod.size(); ++i) out.push_back(e[dom.size() + i].template get<std::size_t>());
      f.set(flatten(out, cod), flatten(in, dom), ctx_.parse(e.back().template get<std::string>()));
    }
    return f;
  }
  LinearMap<F> map_or(const json& o, const std::string& key, const LinearMap<F>& dflt) const {
    if (!o.contains(key)) return dflt;
    return map(o, key, dflt.dom(), dflt.cod());
  }

  static GroupPresentation group(const json& o) {
    GroupPresentation G;
    G.order = o.at("order");
    G.table = o.at("table").template get<std::vector<std::vector<std::size_t>>>();
    G.identity = G.order;
    for (std::size_t e = 0; e < G.order && G.identity == G.order; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < G.order && ok; ++a) ok = G.table[e][a] == a && G.table[a][e] == a;
      if (ok) G.identity = e;
    }
    if (G.identity == G.order) throw PresentationError("group table has no identity");
    G.inverse.assign(G.order, G.order);
    for (std::size_t a = 0; a < G.order; ++a)
      for (std::size_t b = 0; b < G.order; ++b)
        if (G.table[a][b] == G.identity && G.table[b][a] == G.identity) G.inverse[a] = b;
    for (auto v : G.inverse)
      if (v == G.order) throw PresentationError("group table has an element without inverse");
    return G;
  }
  static GroupoidPresentation groupoid(const json& o) {
    GroupoidPresentation G;
    G.objects = o.at("objects");
    for (const auto& a : o.at("arrows")) G.arrows.emplace_back(a[0].template get<std::size_t>(), a[1].template get<std::size_t>());
    for (const auto& row : o.at("compose")) {
      std::vector<std::optional<std::size_t>> r;
      for (const auto& v : row) r.push_back(v.is_null() ? std::nullopt : std::optional<std::size_t>(v.template get<std::size_t>()));
      G.compose.push_back(std::move(r));
    }
    return G;
  }

  SpecDocument doc_;
  Context ctx_;
  std::map<std::string, WeakHomHopfAlgebra<F>> hopf_;
  std::map<std::string, YDPtr<F>> yd_;
};

// ----------------------------------------------------------- corpus files

struct CorpusFile {
  std::string stem;
  SpecDocument doc;
};

/// kZ2 object whose coaction x -> x (x) (1 + g) is not coassociative.
inline YDPtr<Rational> broken_fixture(const WeakHomHopfAlgebra<Rational>& H) {
  const auto& Q = H.ctx();
  LinearMap<Rational> act({2, 1}, {1}, Q), co({1}, {1, 2}, Q);
  act.set(0, 0, Q.one());
  act.set(0, 1, -Q.one());
  co.set(0, 0, Q.one());
  co.set(1, 0, Q.one());
  return make_yd(H, "broken_fixture", act, co, LinearMap<Rational>::identity({1}, Q));
}

namespace io_detail {

template <ExactField F>
void put_instance(SpecWriter<F>& w, const Instance<F>& I) {
  for (const auto& M : I.modules) w.yd(M->name, "H", *M);
  w.entwining("psi", "H", "H", canonical_psi(I.H).psi);
}

}  // namespace io_detail

/// The shipped corpus as spec documents, objects over the Hopf-type object "H".
inline std::vector<CorpusFile> corpus_files() {
  std::vector<CorpusFile> out;
  RationalField Q;
  {
    auto I = instance_kz2();
    SpecWriter<Rational> w(Q);
    w.group("H", GroupPresentation::cyclic(2));
    io_detail::put_instance(w, I);
    w.yd("broken_fixture", "H", *broken_fixture(I.H));
    w.rmatrix("R", "H", cyclic_sign_rmatrix(I.H));
    w.sigma("sigma", "H", cyclic_sign_sigma(I.H));
    out.push_back({"kz2", w.document()});
  }
  {
    auto I = instance_kz3_gf7();
    SpecWriter<ModP> w(I.H.ctx());
    w.group("H", GroupPresentation::cyclic(3));
    io_detail::put_instance(w, I);
    w.rmatrix("R", "H", trivial_rmatrix(I.H));
    w.sigma("sigma", "H", trivial_sigma(I.H));
    out.push_back({"kz3_gf7", w.document()});
  }
  {
    auto I = instance_ks3();
    SpecWriter<Rational> w(Q);
    w.group("H", GroupPresentation::symmetric3());
    io_detail::put_instance(w, I);
    // kS3 is cocommutative but not commutative: 1(x)1 is an R-matrix, eps(x)eps is no sigma form
    w.rmatrix("R", "H", trivial_rmatrix(I.H));
    out.push_back({"ks3", w.document()});
  }
  {
    auto I = instance_discrete2();
    SpecWriter<Rational> w(Q);
    w.hopf("H", I.H, I.note);
    io_detail::put_instance(w, I);
    out.push_back({"discrete2", w.document()});
  }
  {
    auto I = instance_pair2();
    SpecWriter<Rational> w(Q);
    w.groupoid("H", GroupoidPresentation::pair(2));
    io_detail::put_instance(w, I);
    out.push_back({"pair2", w.document()});
  }
  for (auto [n, k] : {std::pair<std::size_t, std::size_t>{4, 3}, {3, 2}, {5, 2}}) {
    auto I = instance_twisted_cyclic(n, k);
    SpecWriter<Rational> w(Q);
    w.hopf("H", I.H, I.name);
    io_detail::put_instance(w, I);
    if (n % 2 == 0) {
      w.rmatrix("R", "H", cyclic_sign_rmatrix(I.H));
      w.sigma("sigma", "H", cyclic_sign_sigma(I.H));
    }
    out.push_back({"twisted_kz" + std::to_string(n), w.document()});
  }
  return out;
}

// ----------------------------------------------------------- reports

enum class ReportFormat { text, structured };

struct TimedReport {
  CheckReport report;
  std::string target;  // verify / check target that produced it
  double millis = 0;
};

struct ReportBundle {
  std::string command;
  std::string input;
  std::vector<TimedReport> reports;

  [[nodiscard]] bool pass() const {
    for (const auto& r : reports)
      if (!r.report.pass()) return false;
    return true;
  }
};

inline json report_json(const ReportBundle& b, bool timings) {
  json out = json::object();
  out["format_version"] = 1;
  out["command"] = b.command;
  out["input"] = b.input;
  out["pass"] = b.pass();
  json reps = json::array();
  for (const auto& tr : b.reports) {
    const auto& r = tr.report;
    json rj = json::object();
    rj["subject"] = r.subject();
    rj["target"] = tr.target;
    rj["pass"] = r.pass();
    rj["deviations"] = r.deviations();
    if (timings) rj["timing_ms"] = tr.millis;
    json checks = json::array();
    for (const auto& e : r.entries()) {
      json c = json::object();
      c["check"] = e.id;
      c["anchor"] = e.anchor;
      c["pass"] = e.pass;
      c["tested"] = e.tested;
      c["failures"] = e.failures;
      json ws = json::array();
      for (const auto& w : e.witnesses) {
        json in = json::array();
        for (const auto& [leg, i] : w.input) in.push_back(json::array({leg, i}));
        ws.push_back(json{{"input", in}, {"lhs", w.lhs}, {"rhs", w.rhs}});
      }
      c["witnesses"] = ws;
      if (!e.notes.empty()) c["notes"] = e.notes;
      checks.push_back(std::move(c));
    }
    rj["checks"] = checks;
    reps.push_back(std::move(rj));
  }
  out["reports"] = reps;
  return out;
}

inline std::string report_text(const ReportBundle& b, bool timings) {
  std::ostringstream os;
  os << b.command << " " << b.input << "\n";
  for (const auto& tr : b.reports) {
    const auto& r = tr.report;
    os << "[" << (r.pass() ? "PASS" : "FAIL") << "] " << r.subject();
    if (!tr.target.empty()) os << "  (" << tr.target << ")";
    if (timings) os << "  " << tr.millis << " ms";
    os << "\n";
    for (const auto& d : r.deviations()) os << "    deviation: " << d << "\n";
    for (const auto& e : r.entries()) {
      os << "  " << (e.pass ? "ok  " : "FAIL") << " " << e.id;
      if (!e.pass) os << "  (" << e.failures << "/" << e.tested << " inputs)";
      os << "  -- " << e.anchor << "\n";
      for (const auto& n : e.notes) os << "        note: " << n << "\n";
      for (const auto& w : e.witnesses) {
        os << "        at";
        for (const auto& [leg, i] : w.input) os << " " << leg << "=" << i;
        os << "\n          lhs: " << w.lhs << "\n          rhs: " << w.rhs << "\n";
      }
    }
  }
  os << (b.pass() ? "RESULT: pass" : "RESULT: FAIL") << "\n";
  return os.str();
}

inline std::string emit_report(const ReportBundle& b, ReportFormat fmt, bool timings) {
  if (fmt == ReportFormat::structured) return report_json(b, timings).dump(2) + "\n";
  return report_text(b, timings);
}

}  // namespace whh
