#pragma once

// Command-line front end. run_cli is callable in-process (tests use it).

#include "whh/whh.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>

namespace whh::cli {

enum Exit : int { ok = 0, check_failed = 1, usage = 2, parse = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command, target, file;
  std::vector<std::string> modules;
  std::string hopf, rmatrix, sigma, entwining, side = "both", reading = "literal", kind = "truncated";
  std::string report = "text", output, emit_dir;
  std::size_t max_witnesses = 16;
  int co_power = -1;
  bool no_timings = false;
};

inline std::vector<std::string> split_commas(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  for (const auto& s : in) {
    std::size_t start = 0;
    while (true) {
      auto p = s.find(',', start);
      auto piece = s.substr(start, p == std::string::npos ? std::string::npos : p - start);
      if (!piece.empty()) out.push_back(piece);
      if (p == std::string::npos) break;
      start = p + 1;
    }
  }
  return out;
}

template <ExactField F>
class Runner {
 public:
  using Ptr = YDPtr<F>;

  Runner(const Options& o, SpecModel<F>& model, std::ostream& err) : o_(o), m_(model), err_(err) {
    opt_.max_witnesses = o.max_witnesses;
    bundle_.command = o.command + " " + o.target;
    bundle_.input = std::filesystem::path(o.file).filename().string();
  }

  int run(std::ostream& out) {
    if (o_.command == "check") check();
    else if (o_.command == "verify") verify();
    else return build(out);
    const auto fmt = o_.report == "structured" ? ReportFormat::structured : ReportFormat::text;
    write(out, emit_report(bundle_, fmt, !o_.no_timings));
    return bundle_.pass() ? ok : check_failed;
  }

 private:
  // ------------------------------------------------------------ plumbing

  template <class Fn>
  void timed(const std::string& target, Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r = fn();
    auto t1 = std::chrono::steady_clock::now();
    bundle_.reports.push_back({std::move(r), target, std::chrono::duration<double, std::milli>(t1 - t0).count()});
  }

  void write(std::ostream& out, const std::string& text) const {
    if (o_.output.empty()) {
      out << text;
      return;
    }
    std::ofstream f(o_.output);
    if (!f) throw UsageError("cannot write '" + o_.output + "'");
    f << text;
  }

  void require(const std::string& name, std::initializer_list<const char*> types) const {
    if (!m_.document().objects.count(name)) throw UsageError("no object named '" + name + "' in " + o_.file);
    const auto t = m_.type(name);
    for (const char* ok : types)
      if (t == ok) return;
    std::string want;
    for (const char* ok : types) want += std::string(want.empty() ? "" : "|") + ok;
    throw UsageError("object '" + name + "' is a " + t + ", expected " + want);
  }

  std::vector<std::string> of_types(std::initializer_list<const char*> types) const {
    std::vector<std::string> v;
    for (const auto& [k, obj] : m_.document().objects)
      for (const char* t : types)
        if (obj.at("type") == t) v.push_back(k);
    return v;
  }

  std::string hopf_name() const {
    if (!o_.hopf.empty()) {
      require(o_.hopf, {"weak_hopf", "weak_bialgebra", "group", "groupoid"});
      return o_.hopf;
    }
    for (const auto& n : o_.modules)
      if (m_.document().objects.count(n) && m_.document().objects.at(n).contains("over")) return m_.over(n);
    auto all = of_types({"weak_hopf", "weak_bialgebra", "group", "groupoid"});
    if (all.size() != 1) throw UsageError("cannot pick a Hopf-type object; pass --hopf");
    return all.front();
  }

  const WeakHomHopfAlgebra<F>& H() {
    if (!hname_) hname_ = hopf_name();
    return m_.hopf(*hname_);
  }

  std::string pick(const std::string& given, const char* type, const char* flag) {
    const auto hn = hopf_name();
    if (!given.empty()) {
      require(given, {type});
      if (m_.document().objects.at(given).contains("over") && m_.over(given) != hn)
        throw UsageError("object '" + given + "' is not over '" + hn + "'");
      return given;
    }
    auto all = m_.names_over(type, hn);
    if (all.size() != 1) throw UsageError(std::string("cannot pick a ") + type + "; pass " + flag);
    return all.front();
  }

  /// yd objects named on the command line, or all yd objects over H.
  std::vector<Ptr> yd_selection() {
    std::vector<Ptr> v;
    if (!o_.modules.empty()) {
      for (const auto& n : o_.modules) {
        require(n, {"yd_module"});
        v.push_back(m_.yd(n));
      }
      return v;
    }
    for (const auto& n : m_.names_over("yd_module", hopf_name())) v.push_back(m_.yd(n));
    return v;
  }

  std::vector<std::string> name_selection(std::initializer_list<const char*> types) const {
    if (o_.modules.empty()) return of_types(types);
    for (const auto& n : o_.modules) require(n, types);
    return o_.modules;
  }

  /// k-tuples: the named modules as one tuple, or all tuples of the corpus objects.
  std::vector<std::vector<Ptr>> tuples(std::size_t k) {
    auto sel = yd_selection();
    if (!o_.modules.empty()) {
      if (sel.size() != k) throw UsageError(o_.target + " takes " + std::to_string(k) + " modules");
      return {sel};
    }
    if (sel.empty()) throw UsageError("no yd_module objects over the Hopf-type object");
    std::vector<std::vector<Ptr>> out;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<Ptr> t;
      for (auto i : idx) t.push_back(sel[i]);
      out.push_back(std::move(t));
      std::size_t p = k;
      while (p > 0 && ++idx[p - 1] == sel.size()) idx[--p] = 0;
      if (p == 0) break;
    }
    return out;
  }

  CategoryOptions cat_options(TensorKind kind) const { return {kind, {}, {}}; }
  TensorKind kind() const {
    if (o_.kind == "truncated") return TensorKind::truncated;
    if (o_.kind == "tilde") return TensorKind::tilde;
    throw UsageError("--kind must be truncated or tilde");
  }
  EntwiningReading reading() const {
    if (o_.reading == "literal") return EntwiningReading::literal;
    if (o_.reading == "balanced") return EntwiningReading::balanced;
    throw UsageError("--reading must be literal or balanced");
  }
  std::vector<bool> sides() const {
    if (o_.side == "left") return {false};
    if (o_.side == "right") return {true};
    if (o_.side == "both") return {false, true};
    throw UsageError("--side must be left, right or both");
  }

  // ------------------------------------------------------------ check

  void check() {
    const auto& t = o_.target;
    if (t == "algebra") {
      for (const auto& n : name_selection({"algebra", "weak_bialgebra", "weak_hopf", "group", "groupoid"}))
        timed(t, [&] {
          CheckReport r("algebra:" + n, opt_);
          r.merge(check_hom_algebra(m_.algebra(n), opt_));
          return r;
        });
    } else if (t == "coalgebra") {
      for (const auto& n : name_selection({"coalgebra", "weak_bialgebra", "weak_hopf", "group", "groupoid"}))
        timed(t, [&] {
          CheckReport r("coalgebra:" + n, opt_);
          r.merge(check_hom_coalgebra(m_.coalgebra(n), opt_));
          return r;
        });
    } else if (t == "bialgebra") {
      for (const auto& n : name_selection({"weak_bialgebra", "weak_hopf", "group", "groupoid"}))
        timed(t, [&] {
          const auto& Hn = m_.hopf(n);
          CheckReport r("bialgebra:" + n, opt_);
          r.merge(check_hom_algebra(Hn.algebra(), opt_));
          r.merge(check_hom_coalgebra(Hn.coalgebra(), opt_));
          r.merge(check_weak_bialgebra(Hn, opt_));
          return r;
        });
    } else if (t == "hopf") {
      for (const auto& n : name_selection({"weak_bialgebra", "weak_hopf", "group", "groupoid"})) {
        if (!m_.has_antipode(n)) throw UsageError("object '" + n + "' has no antipode");
        timed(t, [&] {
          CheckReport r("hopf:" + n, opt_);
          r.merge(certify(m_.hopf(n), opt_));
          return r;
        });
      }
    } else if (t == "module") {
      for (const auto& n : name_selection({"module", "yd_module"}))
        timed(t, [&] {
          CheckReport r("module:" + n, opt_);
          r.merge(check_module(m_.algebra(m_.over(n)), m_.module(n), opt_));
          return r;
        });
    } else if (t == "comodule") {
      for (const auto& n : name_selection({"comodule", "yd_module"}))
        timed(t, [&] {
          CheckReport r("comodule:" + n, opt_);
          r.merge(check_comodule(m_.coalgebra(m_.over(n)), m_.comodule(n), opt_));
          return r;
        });
    } else if (t == "yd") {
      for (const auto& n : name_selection({"yd_module"}))
        timed(t, [&] { return check_yd(m_.hopf(m_.over(n)), *m_.yd(n), opt_); });
    } else if (t == "entwining") {
      auto names = o_.entwining.empty() ? of_types({"entwining"}) : std::vector<std::string>{o_.entwining};
      for (const auto& n : names) {
        require(n, {"entwining"});
        timed(t, [&] {
          CheckReport r("entwining:" + n, opt_);
          r.merge(check_entwining(m_.entwining(n), opt_, reading()));
          return r;
        });
        auto E = m_.entwining(n);
        for (const auto& mn : o_.modules) {
          require(mn, {"yd_module"});
          timed(t, [&] { return check_entwined_module(E, *m_.yd(mn), opt_, reading()); });
        }
      }
    } else if (t == "rmatrix") {
      auto names = o_.rmatrix.empty() ? of_types({"r_matrix"}) : std::vector<std::string>{o_.rmatrix};
      for (const auto& n : names) {
        require(n, {"r_matrix"});
        timed(t, [&] {
          CheckReport r("rmatrix:" + n, opt_);
          r.merge(check_rmatrix(m_.hopf(m_.over(n)), m_.rmatrix(n), opt_));
          return r;
        });
      }
    } else if (t == "sigma") {
      auto names = o_.sigma.empty() ? of_types({"sigma_form"}) : std::vector<std::string>{o_.sigma};
      for (const auto& n : names) {
        require(n, {"sigma_form"});
        timed(t, [&] {
          CheckReport r("sigma:" + n, opt_);
          r.merge(check_sigma(m_.hopf(m_.over(n)), m_.sigma(n), opt_));
          return r;
        });
      }
    } else {
      throw UsageError("unknown check target '" + t + "'");
    }
    if (bundle_.reports.empty()) throw UsageError("nothing to check for target '" + t + "'");
  }

  // ------------------------------------------------------------ verify

  Ptr induced_by_r(const std::string& rname, const std::string& n) {
    return induced_coaction_unchecked(H(), m_.rmatrix(rname).R, m_.module(n), n + "^R");
  }
  Ptr induced_by_sigma(const std::string& sname, const std::string& n) {
    return induced_action_unchecked(H(), m_.sigma(sname).sigma, m_.comodule(n), n + "^sigma");
  }
  std::vector<std::string> plain_selection(std::initializer_list<const char*> types) {
    if (!o_.modules.empty()) {
      for (const auto& n : o_.modules) require(n, types);
      return o_.modules;
    }
    std::vector<std::string> v;
    for (const char* t : types)
      for (const auto& n : m_.names_over(t, hopf_name())) v.push_back(n);
    std::sort(v.begin(), v.end());
    return v;
  }

  void verify() {
    const auto& t = o_.target;
    if (t == "pentagon" || t == "triangle" || t == "hexagon" || t == "hybe" || t == "snake") {
      YDCategory<F> C(H(), cat_options(kind()));
      if (t == "pentagon") {
        for (const auto& q : tuples(4)) timed(t, [&] { return check_pentagon(C, q[0], q[1], q[2], q[3], opt_); });
      } else if (t == "triangle") {
        for (const auto& q : tuples(2))
          timed(t, [&] {
            CheckReport r = check_triangle(C, q[0], q[1], opt_);
            r.merge(check_unitors(C, q[0], opt_));
            return r;
          });
      } else if (t == "hexagon") {
        for (const auto& q : tuples(3))
          timed(t, [&] {
            CheckReport r = check_hexagons(C, q[0], q[1], q[2], opt_);
            r.merge(check_braiding(C, q[0], q[1], opt_));
            return r;
          });
      } else if (t == "hybe") {
        for (const auto& q : tuples(3)) timed(t, [&] { return check_hom_yang_baxter(H(), *q[0], *q[1], *q[2], opt_); });
      } else {
        for (const auto& q : tuples(1))
          for (bool right : sides()) timed(t, [&] { return check_duality(C, q[0], right, opt_, o_.co_power); });
      }
    } else if (t == "prop32") {
      for (const auto& q : tuples(1))
        timed(t, [&] {
          CheckReport r("yd-equivalence:" + q[0]->name, opt_);
          auto a = check_yd(H(), *q[0], opt_);
          auto b = check_yd_equivalent(H(), *q[0], opt_);
          r.merge(a, "single-form/");
          r.merge(b, "two-part-form/");
          r.fact("prop32.agreement", "prop32: single-form passes <=> two-part form passes", a.pass() == b.pass());
          return r;
        });
      strict_ = false;
    } else if (t == "prop34") {
      auto E = canonical_psi(H());
      timed(t, [&] {
        CheckReport r("canonical-entwining:" + H().name(), opt_);
        r.merge(check_entwining(E, opt_, reading()));
        return r;
      });
      for (const auto& q : tuples(1))
        timed(t, [&] {
          CheckReport r("prop34-law:" + q[0]->name, opt_);
          auto a = check_yd(H(), *q[0], opt_);
          auto b = check_entwined_module(E, *q[0], opt_, reading());
          r.merge(b);
          r.fact("prop34.law", "prop34: YD compatibility <=> entwined compatibility", a.pass() == b.pass());
          return r;
        });
    } else if (t == "prop46" || t == "prop47") {
      const auto rn = pick(o_.rmatrix, "r_matrix", "--rmatrix");
      YDCategory<F> C(H());
      auto names = plain_selection({"module", "yd_module"});
      std::vector<Ptr> ind;
      for (const auto& n : names) ind.push_back(induced_by_r(rn, n));
      if (t == "prop46")
        for (const auto& Y : ind)
          timed(t, [&] {
            CheckReport r("induced-coaction:" + Y->name, opt_);
            r.merge(check_yd(H(), *Y, opt_), "prop46.");
            return r;
          });
      for (const auto& X : ind)
        for (const auto& Y : ind) {
          if (t == "prop46") timed(t, [&] { return check_induced_tensor_coaction(C, m_.rmatrix(rn), X, Y, opt_); });
          else timed(t, [&] { return check_rep_braiding(C, m_.rmatrix(rn), X, Y, opt_); });
        }
    } else if (t == "prop53" || t == "thm54") {
      const auto sn = pick(o_.sigma, "sigma_form", "--sigma");
      YDCategory<F> C(H(), cat_options(TensorKind::tilde));
      auto names = plain_selection({"comodule", "yd_module"});
      std::vector<Ptr> ind;
      for (const auto& n : names) ind.push_back(induced_by_sigma(sn, n));
      if (t == "prop53")
        for (const auto& Y : ind)
          timed(t, [&] {
            CheckReport r("induced-action:" + Y->name, opt_);
            r.merge(check_yd(H(), *Y, opt_), "prop53.");
            return r;
          });
      for (const auto& X : ind)
        for (const auto& Y : ind) {
          if (t == "prop53")
            timed(t, [&] {
              CheckReport r = check_induced_tensor_action(C, m_.sigma(sn), X, Y, opt_);
              r.merge(check_yd(H(), *C.tensor(X, Y), opt_), "tilde-tensor/");
              return r;
            });
          else timed(t, [&] { return check_corep_braiding(C, m_.sigma(sn), X, Y, opt_); });
        }
      if (t == "thm54")
        for (const auto& X : ind)
          for (const auto& Y : ind)
            for (const auto& Z : ind) timed(t, [&] { return check_hexagons(C, X, Y, Z, opt_); });
    } else {
      throw UsageError("unknown verify target '" + t + "'");
    }
    if (!strict_) {
      // agreement is the verdict here: a module failing both forms is still a pass
      for (auto& tr : bundle_.reports) {
        CheckReport r(tr.report.subject(), opt_);
        for (const auto& e : tr.report.entries())
          if (e.id == "prop32.agreement") r.add(e);
        for (const auto& e : tr.report.entries())
          if (e.id != "prop32.agreement") {
            auto x = e;
            if (!x.pass) x.notes.push_back("informational: the verdict is prop32.agreement");
            x.pass = true;
            r.add(std::move(x));
          }
        tr.report = std::move(r);
      }
    }
  }

  // ------------------------------------------------------------ build

  int build(std::ostream& out) {
    const auto& t = o_.target;
    SpecDocument doc = m_.document();
    SpecWriter<F> w(m_.ctx());
    for (const auto& [k, v] : doc.objects) w.raw(k, v);
    const auto hn = hopf_name();
    auto need = [&](std::size_t k) {
      if (o_.modules.size() != k) throw UsageError("build " + t + " takes " + std::to_string(k) + " modules");
    };
    try {
      if (t == "tensor" || t == "tilde") {
        need(2);
        for (const auto& n : o_.modules) require(n, {"yd_module"});
        auto X = m_.yd(o_.modules[0]), Y = m_.yd(o_.modules[1]);
        auto T = t == "tensor" ? truncated_tensor(H(), X, Y) : tilde_tensor(H(), X, Y);
        w.yd(T->name, hn, *T);
      } else if (t == "dual") {
        need(1);
        require(o_.modules[0], {"yd_module"});
        auto X = m_.yd(o_.modules[0]);
        for (bool right : sides()) {
          auto D = right ? right_dual(H(), X, o_.co_power) : left_dual(H(), X, o_.co_power);
          w.yd(D->name, hn, *D);
        }
      } else if (t == "unit") {
        auto U = unit_object(H());
        w.yd(U->name, hn, *U);
      } else if (t == "psi") {
        w.entwining("psi:" + hn, hn, hn, canonical_psi(H()).psi);
      } else if (t == "induce-coaction") {
        need(1);
        require(o_.modules[0], {"module", "yd_module"});
        const auto rn = pick(o_.rmatrix, "r_matrix", "--rmatrix");
        auto Y = induced_coaction(H(), m_.rmatrix(rn).R, m_.module(o_.modules[0]), o_.modules[0] + "^R");
        w.yd(Y->name, hn, *Y);
      } else if (t == "induce-action") {
        need(1);
        require(o_.modules[0], {"comodule", "yd_module"});
        const auto sn = pick(o_.sigma, "sigma_form", "--sigma");
        auto Y = induced_action(H(), m_.sigma(sn).sigma, m_.comodule(o_.modules[0]), o_.modules[0] + "^sigma");
        w.yd(Y->name, hn, *Y);
      } else if (t == "braiding") {
        need(2);
        for (const auto& n : o_.modules) require(n, {"yd_module"});
        YDCategory<F> C(H(), cat_options(kind()));
        auto b = braiding(C, m_.yd(o_.modules[0]), m_.yd(o_.modules[1]));
        json j{{"format_version", 1},
               {"braiding", json{{"source", b.src->name}, {"target", b.tgt->name}, {"kind", o_.kind}}},
               {"c", tensor_json(b.c)},
               {"c_inv", tensor_json(b.c_inv)},
               {"source_dim", b.src->dim},
               {"target_dim", b.tgt->dim}};
        write(out, j.dump(2) + "\n");
        return ok;
      } else {
        throw UsageError("unknown build target '" + t + "'");
      }
    } catch (const StructureError& e) {
      err_ << "build " << t << ": " << e.what() << "\n";
      return check_failed;
    }
    write(out, save_spec(w.document()));
    return ok;
  }

  const Options& o_;
  SpecModel<F>& m_;
  std::ostream& err_;
  CheckOptions opt_;
  ReportBundle bundle_;
  std::optional<std::string> hname_;
  bool strict_ = true;
};

// ------------------------------------------------------------ corpus

inline int run_corpus(const Options& o, std::ostream& out) {
  if (!o.emit_dir.empty()) {
    std::filesystem::create_directories(o.emit_dir);
    for (const auto& f : corpus_files()) {
      std::ofstream file(std::filesystem::path(o.emit_dir) / (f.stem + ".spec"));
      if (!file) throw UsageError("cannot write into '" + o.emit_dir + "'");
      file << save_spec(f.doc);
    }
    return ok;
  }
  CheckOptions opt;
  opt.max_witnesses = o.max_witnesses;
  ReportBundle b{"corpus", "built-in", {}};
  auto sweep = [&]<class F>(const Instance<F>& I) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r("instance:" + I.name, opt);
    r.merge(certify(I.H, opt));
    for (const auto& M : I.modules) r.merge(check_yd(I.H, *M, opt), M->name + "/");
    auto t1 = std::chrono::steady_clock::now();
    b.reports.push_back({std::move(r), "corpus", std::chrono::duration<double, std::milli>(t1 - t0).count()});
  };
  sweep(instance_kz3_gf7());
  for (const auto& I : rational_corpus()) sweep(I);
  const auto fmt = o.report == "structured" ? ReportFormat::structured : ReportFormat::text;
  out << emit_report(b, fmt, !o.no_timings);
  return b.pass() ? ok : check_failed;
}

// ------------------------------------------------------------ entry

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"exact checker for weak Hom-Hopf algebras and Yetter-Drinfeld modules", "whh"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> mod_raw;

  auto common = [&](CLI::App* s) {
    s->add_option("--report", o.report, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    s->add_option("--max-witnesses", o.max_witnesses, "cap on witnesses listed per check");
    s->add_flag("--no-timings", o.no_timings, "omit timings (byte-stable reports)");
  };
  auto objects = [&](CLI::App* s) {
    s->add_option("--module,--modules", mod_raw, "object names, comma separated or repeated");
    s->add_option("--hopf", o.hopf, "Hopf-type object");
    s->add_option("--rmatrix", o.rmatrix, "r_matrix object");
    s->add_option("--sigma", o.sigma, "sigma_form object");
    s->add_option("--entwining", o.entwining, "entwining object");
    s->add_option("--side", o.side, "left, right or both (duals)");
    s->add_option("--co-power", o.co_power, "twist power in the dual coaction");
    s->add_option("--reading", o.reading, "entwining reading: literal or balanced");
    s->add_option("--kind", o.kind, "tensor product: truncated or tilde");
    s->add_option("-o,--output", o.output, "write output here instead of stdout");
  };

  auto* check = app.add_subcommand("check", "certify structures in a spec file");
  check->add_option("target", o.target, "algebra|coalgebra|bialgebra|hopf|module|comodule|yd|entwining|rmatrix|sigma")
      ->required()
      ->check(CLI::IsMember(
          {"algebra", "coalgebra", "bialgebra", "hopf", "module", "comodule", "yd", "entwining", "rmatrix", "sigma"}));
  check->add_option("file", o.file, "spec file")->required();
  common(check);
  objects(check);

  auto* build = app.add_subcommand("build", "construct a new object and print the extended spec");
  build->add_option("target", o.target, "tensor|tilde|dual|unit|braiding|psi|induce-coaction|induce-action")
      ->required()
      ->check(CLI::IsMember(
          {"tensor", "tilde", "dual", "unit", "braiding", "psi", "induce-coaction", "induce-action"}));
  build->add_option("file", o.file, "spec file")->required();
  common(build);
  objects(build);

  auto* verify = app.add_subcommand("verify", "verify a structural claim on objects of a spec file");
  verify
      ->add_option("target", o.target,
                   "pentagon|triangle|hexagon|hybe|snake|prop32|prop34|prop46|prop47|prop53|thm54")
      ->required()
      ->check(CLI::IsMember({"pentagon", "triangle", "hexagon", "hybe", "snake", "prop32", "prop34", "prop46",
                             "prop47", "prop53", "thm54"}));
  verify->add_option("file", o.file, "spec file")->required();
  common(verify);
  objects(verify);

  auto* corpus = app.add_subcommand("corpus", "certify the built-in corpus or write it out as spec files");
  corpus->add_option("--emit", o.emit_dir, "write <stem>.spec files into this directory");
  common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  }
  o.modules = split_commas(mod_raw);
  o.command = app.get_subcommands().front()->get_name();

  try {
    if (o.command == "corpus") return run_corpus(o, out);
    auto doc = load_spec(o.file);
    if (doc.field.is_rational()) {
      SpecModel<Rational> m(std::move(doc), RationalField{});
      return Runner<Rational>(o, m, err).run(out);
    }
    SpecModel<ModP> m(doc, PrimeField(doc.field.prime));
    return Runner<ModP>(o, m, err).run(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const StructureError& e) {
    err << "structure error: " << e.what() << "\n";
    return check_failed;
  } catch (const ShapeError& e) {
    err << "parse error: " << e.what() << "\n";
    return parse;
  }
}

}  // namespace whh::cli
