// Spec documents, the committed corpus files and the command-line front end.

#include "cli.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace whh;
using fixtures::Q;
namespace fs = std::filesystem;

namespace {

const std::string kCorpus = WHH_CORPUS_DIR;

std::string corpus(const std::string& stem) { return kCorpus + "/" + stem + ".spec"; }

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "whh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto d = fs::temp_directory_path() / ("whh_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d / name;
}

// objects present in the built file but not in the input
std::string added(const fs::path& built, const std::string& input) {
  auto a = load_spec(built.string()), b = load_spec(input);
  std::string names;
  for (const auto& [k, o] : a.objects)
    if (!b.objects.count(k)) names += (names.empty() ? "" : ",") + k;
  return names;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

json minimal() {
  return json::parse(R"({
    "format_version": 1,
    "field": "rational",
    "objects": {
      "H": {"type": "group", "order": 2, "table": [[0, 1], [1, 0]]},
      "s": {"type": "yd_module", "over": "H", "dim": 1,
            "act": [[0, 0, 0, "1"], [1, 0, 0, "-1"]],
            "co": [[0, 0, 1, "2/2"]]}
    }
  })");
}

// ------------------------------------------------------------ documents

TEST(Spec, LoadSaveIsIdentityOnCanonicalDocuments) {
  for (const auto& f : corpus_files()) {
    auto text = save_spec(f.doc);
    auto back = parse_spec_text(text);
    EXPECT_EQ(back, f.doc) << f.stem;
    EXPECT_EQ(save_spec(back), text) << f.stem;
  }
}

TEST(Spec, CanonicalizesLiterals) {
  auto doc = parse_spec(minimal());
  const auto& co = doc.objects.at("s").at("co");
  ASSERT_EQ(co.size(), 1u);
  EXPECT_EQ(co[0][3], "1");
  SpecModel<Q> m(doc, RationalField{});
  EXPECT_TRUE(check_yd(m.hopf("H"), *m.yd("s")).pass());
}

TEST(Spec, CommittedCorpusMatchesTheBuiltInInstances) {
  std::size_t n = 0;
  for (const auto& f : corpus_files()) {
    ++n;
    auto on_disk = load_spec(corpus(f.stem));
    EXPECT_EQ(on_disk, f.doc) << f.stem;
  }
  EXPECT_EQ(n, 8u);
}

TEST(Spec, GroupTablesMaterializeToTheSameAlgebraAsTheForge) {
  SpecModel<Q> m(load_spec(corpus("ks3")), RationalField{});
  const auto& H = m.hopf("H");
  auto ref = instance_ks3().H;
  EXPECT_EQ(H.mu(), ref.mu());
  EXPECT_EQ(H.delta(), ref.delta());
  EXPECT_EQ(H.S(), ref.S());
  SpecModel<ModP> p(load_spec(corpus("kz3_gf7")), PrimeField(7));
  EXPECT_TRUE(certify(p.hopf("H")).pass());
}

void expect_rejected(json j, const std::string& why) { EXPECT_THROW(parse_spec(j), ParseError) << why; }

TEST(Spec, RejectsMalformedDocuments) {
  {
    auto j = minimal();
    j["objects"]["s"]["co"][0][3] = "1/0";
    expect_rejected(j, "zero denominator");
  }
  {
    auto j = minimal();
    j["objects"]["s"]["act"].push_back(json::array({0, 0, 0, "3"}));
    expect_rejected(j, "duplicate entry");
  }
  {
    auto j = minimal();
    j["objects"]["s"]["type"] = "yd_thing";
    expect_rejected(j, "unknown type");
  }
  {
    auto j = minimal();
    j["objects"]["s"]["act"][0][0] = 2;
    expect_rejected(j, "index out of range");
  }
  {
    auto j = minimal();
    j["objects"]["s"]["over"] = "K";
    expect_rejected(j, "dangling reference");
  }
  {
    auto j = minimal();
    j["objects"]["s"]["colour"] = "blue";
    expect_rejected(j, "unknown key");
  }
  {
    auto j = minimal();
    j["field"] = json{{"prime", 9u}};
    expect_rejected(j, "composite modulus");
  }
  {
    auto j = minimal();
    j["format_version"] = 2;
    expect_rejected(j, "version");
  }
  EXPECT_THROW(parse_spec_text("{ not json"), ParseError);
}

TEST(Spec, PrimeFieldReducesLiterals) {
  auto j = minimal();
  j["field"] = json{{"prime", 5u}};
  j["objects"]["s"]["act"][1][3] = "4";
  j["objects"]["s"]["co"][0][3] = "6";
  auto doc = parse_spec(j);
  EXPECT_EQ(doc.objects.at("s").at("co")[0][3], "1");
  SpecModel<ModP> m(doc, PrimeField(5));
  EXPECT_TRUE(check_yd(m.hopf("H"), *m.yd("s")).pass());
}

// ------------------------------------------------------------ command line

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"check", "hopf", corpus("kz2")}).code, cli::ok);
  EXPECT_EQ(cli({"check", "yd", corpus("kz2"), "--module", "broken_fixture"}).code, cli::check_failed);
  EXPECT_EQ(cli({"check", "hopf", corpus("nope")}).code, cli::parse);
  EXPECT_EQ(cli({"check", "nonsense", corpus("kz2")}).code, cli::usage);
  EXPECT_EQ(cli({}).code, cli::usage);
  EXPECT_EQ(cli({"verify", "hexagon", corpus("kz2"), "--module", "missing"}).code, cli::usage);
  EXPECT_EQ(cli({"verify", "snake", corpus("kz2"), "--modules", "sign,adj"}).code, cli::usage);
  auto bad = scratch("bad.spec");
  write(bad, "{\"format_version\": 1}");
  EXPECT_EQ(cli({"check", "hopf", bad.string()}).code, cli::parse);
}

TEST(Cli, VerifyTargetsOnTheCorpus) {
  EXPECT_EQ(cli({"verify", "hybe", corpus("kz2"), "--modules", "sign,sign,sign"}).code, cli::ok);
  EXPECT_EQ(cli({"verify", "pentagon", corpus("pair2")}).code, cli::ok);
  EXPECT_EQ(cli({"verify", "snake", corpus("kz2"), "--side", "both", "--module", "adj"}).code, cli::ok);
  // without a selection every object is swept, including the broken one
  EXPECT_EQ(cli({"verify", "snake", corpus("kz2")}).code, cli::check_failed);
  EXPECT_EQ(cli({"verify", "hexagon", corpus("twisted_kz4")}).code, cli::ok);
  EXPECT_EQ(cli({"check", "rmatrix", corpus("twisted_kz4")}).code, cli::ok);
  EXPECT_EQ(cli({"verify", "thm54", corpus("twisted_kz4")}).code, cli::ok);
  // the entwining law fails in the literal reading on a twisted instance
  EXPECT_EQ(cli({"verify", "prop34", corpus("twisted_kz4")}).code, cli::check_failed);
  EXPECT_EQ(cli({"verify", "prop34", corpus("twisted_kz4"), "--reading", "balanced"}).code, cli::ok);
}

TEST(Cli, StructuredReportParsesAndCarriesWitnesses) {
  auto r = cli({"check", "yd", corpus("kz2"), "--module", "broken_fixture", "--report", "structured"});
  ASSERT_EQ(r.code, cli::check_failed);
  auto j = json::parse(r.out);
  EXPECT_EQ(j.at("format_version"), 1);
  EXPECT_EQ(j.at("command"), "check yd");
  EXPECT_FALSE(j.at("pass").get<bool>());
  bool witness = false;
  for (const auto& rep : j.at("reports"))
    for (const auto& c : rep.at("checks"))
      if (!c.at("pass").get<bool>()) witness |= !c.at("witnesses").empty();
  EXPECT_TRUE(witness);
}

TEST(Cli, MaxWitnessesCapsTheListing) {
  auto r = cli({"check", "yd", corpus("kz2"), "--module", "broken_fixture", "--report", "structured",
                "--max-witnesses", "1"});
  auto j = json::parse(r.out);
  std::size_t failing = 0;
  for (const auto& rep : j.at("reports"))
    for (const auto& c : rep.at("checks")) {
      EXPECT_LE(c.at("witnesses").size(), 1u);
      failing += !c.at("pass").get<bool>();
    }
  EXPECT_GT(failing, 0u);
}

TEST(Cli, ReportsAreDeterministicWithoutTimings) {
  const std::vector<std::string> args{"verify", "hexagon", corpus("ks3"), "--report", "structured", "--no-timings"};
  auto a = cli(args), b = cli(args);
  EXPECT_EQ(a.code, cli::ok);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out).at("reports")[0].count("timing_ms"), 0u);
}

TEST(Cli, BuiltTensorReloadsAndCertifies) {
  auto out = scratch("tensor.spec");
  auto r = cli({"build", "tensor", corpus("kz2"), "--modules", "sign,adj", "-o", out.string()});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  auto doc = load_spec(out.string());
  SpecModel<Q> m(doc, RationalField{});
  auto yds = m.names_over("yd_module", "H");
  ASSERT_FALSE(yds.empty());
  bool found = false;
  for (const auto& n : yds) {
    auto M = m.yd(n);
    if (M->dim == 2 && n != "adj") {
      found = true;
      EXPECT_TRUE(check_yd(m.hopf("H"), *M).pass()) << n;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(cli({"check", "yd", out.string(), "--modules", added(out, corpus("kz2"))}).code, cli::ok);
}

TEST(Cli, BuiltDualAndInducedObjectsCertify) {
  auto d = scratch("dual.spec");
  ASSERT_EQ(cli({"build", "dual", corpus("ks3"), "--module", "adj", "-o", d.string()}).code, cli::ok);
  EXPECT_EQ(cli({"check", "yd", d.string(), "--modules", added(d, corpus("ks3"))}).code, cli::ok);
  auto i = scratch("induced.spec");
  ASSERT_EQ(cli({"build", "induce-coaction", corpus("kz2"), "--module", "sign", "-o", i.string()}).code, cli::ok);
  const auto fresh = added(i, corpus("kz2"));
  ASSERT_FALSE(fresh.empty());
  EXPECT_EQ(cli({"check", "yd", i.string(), "--modules", fresh}).code, cli::ok);
}

TEST(Cli, CorpusEmitReproducesCommittedFiles) {
  auto dir = scratch("emit");
  fs::create_directories(dir);
  ASSERT_EQ(cli({"corpus", "--emit", dir.string()}).code, cli::ok);
  for (const auto& f : corpus_files()) {
    std::ifstream a(dir / (f.stem + ".spec")), b(corpus(f.stem));
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str()) << f.stem;
  }
}

}  // namespace
