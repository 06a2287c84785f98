// Entwining structures, quasitriangular R-matrices, coquasitriangular forms and
// the braidings they induce.

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace whh;
using fixtures::Q;

namespace {

YDPtr<Q> by_name(const Instance<Q>& I, const std::string& n) {
  for (const auto& M : I.modules)
    if (M->name == n) return M;
  throw std::out_of_range(n);
}

// ------------------------------------------------------------ entwining

TEST(Entwining, CanonicalMapOnUntwistedInstancesHoldsInBothReadings) {
  for (auto I : {instance_kz2(), instance_ks3()}) {
    auto E = canonical_psi(I.H);
    EXPECT_TRUE(check_entwining(E, {}, EntwiningReading::literal).pass()) << I.name;
    EXPECT_TRUE(check_entwining(E, {}, EntwiningReading::balanced).pass()) << I.name;
    for (const auto& M : I.modules)
      EXPECT_TRUE(check_entwined_module(E, *M, {}, EntwiningReading::literal).pass()) << I.name << "/" << M->name;
  }
}

TEST(Entwining, LiteralReadingFailsOnTwistedInstances) {
  for (auto I : {instance_twisted_kz4(), instance_twisted_kz3()}) {
    auto E = canonical_psi(I.H);
    auto lit = check_entwining(E, {}, EntwiningReading::literal);
    EXPECT_FALSE(lit.pass()) << I.name;
    EXPECT_TRUE(check_entwining(E, {}, EntwiningReading::balanced).pass()) << I.name;
    for (const auto& M : I.modules)
      EXPECT_TRUE(check_entwined_module(E, *M, {}, EntwiningReading::balanced).pass()) << I.name << "/" << M->name;
  }
}

TEST(Entwining, PerturbedMapIsRejected) {
  auto I = instance_kz2();
  auto E = canonical_psi(I.H);
  E.psi = fixtures::bump(E.psi, 0, 3, Q(1));
  EXPECT_FALSE(check_entwining(E, {}, EntwiningReading::balanced).pass());
}

// ------------------------------------------------------------ R-matrices

// kZ2 (x) kZ2 coefficients r[a][b] of g^a (x) g^b, checked by plain loops:
// (Delta (x) id)R = R13 R23, (id (x) Delta)R = R13 R12, R invertible.
using R4 = std::array<std::array<Q, 2>, 2>;

bool classical_rmatrix(const R4& r) {
  for (int s : {1, -1})
    for (int t : {1, -1}) {
      Q v = r[0][0] + Q(t) * r[0][1] + Q(s) * r[1][0] + Q(s * t) * r[1][1];
      if (v.is_zero()) return false;
    }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        // coefficient of g^a (x) g^b (x) g^c
        Q lhs1 = a == b ? r[a][c] : Q(0), rhs1(0);
        Q lhs2 = b == c ? r[a][b] : Q(0), rhs2(0);
        for (int x = 0; x < 2; ++x) {
          // R13 R23 = sum r[a][x] r[b][y] with x + y = c
          rhs1 += r[a][x] * r[b][(c + x) % 2];
          // R13 R12 = sum r[x][c] r[y][b] with x + y = a
          rhs2 += r[x][c] * r[(a + x) % 2][b];
        }
        if (!(lhs1 == rhs1) || !(lhs2 == rhs2)) return false;
      }
  return true;
}

// inverse in kZ2 (x) kZ2 through its four characters
R4 inverse(const R4& r) {
  R4 out{};
  for (int s : {1, -1})
    for (int t : {1, -1}) {
      Q v = r[0][0] + Q(t) * r[0][1] + Q(s) * r[1][0] + Q(s * t) * r[1][1];
      Q w = Q(1) / v / Q(4);
      out[0][0] += w;
      out[0][1] += Q(t) * w;
      out[1][0] += Q(s) * w;
      out[1][1] += Q(s * t) * w;
    }
  return out;
}

LinearMap<Q> as_element(const R4& r) {
  LinearMap<Q> R({}, {2, 2}, RationalField{});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) R.set(a * 2 + b, 0, r[a][b]);
  return R;
}

TEST(RMatrix, ExhaustiveSearchOnKZ2MatchesLoopOracle) {
  auto H = instance_kz2().H;
  const std::array<Q, 5> vals{Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(1)};
  std::size_t found = 0, total = 0;
  for (std::size_t code = 0; code < 625; ++code) {
    R4 r;
    std::size_t c = code;
    for (auto& row : r)
      for (auto& x : row) {
        x = vals[c % 5];
        c /= 5;
      }
    ++total;
    const bool want = classical_rmatrix(r);
    bool invertible = true;
    for (int s : {1, -1})
      for (int t : {1, -1}) invertible &= !(r[0][0] + Q(t) * r[0][1] + Q(s) * r[1][0] + Q(s * t) * r[1][1]).is_zero();
    auto R = as_element(r);
    RMatrix<Q> Rm{R, invertible ? as_element(inverse(r)) : R};
    const bool got = check_rmatrix(H, Rm).pass();
    EXPECT_EQ(got, want) << "candidate " << code;
    found += got;
  }
  EXPECT_EQ(total, 625u);
  EXPECT_EQ(found, 2u);  // 1(x)1 and the sign R-matrix
}

TEST(RMatrix, OneTensorGSatisfiesOnlyTheSecondLegCondition) {
  auto H = instance_kz2().H;
  R4 r{};
  r[0][1] = Q(1);
  auto R = as_element(r);
  auto rep = check_rmatrix(H, RMatrix<Q>{R, R});
  EXPECT_TRUE(rep.passed("rmatrix.coproduct-second"));
  EXPECT_FALSE(rep.passed("rmatrix.coproduct-first"));
  const auto* e = rep.find("rmatrix.coproduct-first");
  ASSERT_NE(e, nullptr);
  EXPECT_FALSE(e->witnesses.empty());
  EXPECT_TRUE(rep.passed("rmatrix.weak-inverse-right"));
}

TEST(RMatrix, CorpusRMatricesCertify) {
  EXPECT_TRUE(check_rmatrix(instance_kz2().H, cyclic_sign_rmatrix(instance_kz2().H)).pass());
  EXPECT_TRUE(check_rmatrix(instance_ks3().H, trivial_rmatrix(instance_ks3().H)).pass());
  auto tw = instance_twisted_kz4().H;
  EXPECT_TRUE(check_rmatrix(tw, cyclic_sign_rmatrix(tw)).pass());
  auto gf7 = instance_kz3_gf7().H;
  EXPECT_TRUE(check_rmatrix(gf7, trivial_rmatrix(gf7)).pass());
}

TEST(RMatrix, SignRMatrixInducesTheGradingOfTheSignModule) {
  auto I = instance_kz2();
  auto sign = by_name(I, "sign");
  auto Y = induced_coaction(I.H, cyclic_sign_rmatrix(I.H).R, as_module(*sign), "sign'");
  // rho(m) = m (x) g
  EXPECT_EQ(Y->co.entry(flatten({0, 1}, {1, 2}), 0), Q(1));
  EXPECT_EQ(Y->co.entry(flatten({0, 0}, {1, 2}), 0), Q(0));
  EXPECT_EQ(Y->co, sign->co);
}

TEST(RMatrix, InducedCoactionOnTensorAgreesWithTensorCoaction) {
  auto I = instance_twisted_kz4();
  YDCategory<Q> C(I.H);
  auto Rm = cyclic_sign_rmatrix(I.H);
  // objects whose coaction is the R-induced one
  std::vector<YDPtr<Q>> ind;
  for (const auto& M : I.modules) {
    auto Y = induced_coaction_unchecked(I.H, Rm.R, as_module(*M), M->name + "^R");
    if (check_yd(I.H, *Y).pass()) ind.push_back(Y);
  }
  ASSERT_FALSE(ind.empty());
  for (const auto& M : ind)
    for (const auto& N : ind) {
      EXPECT_TRUE(check_induced_tensor_coaction(C, Rm, M, N).pass()) << M->name << "," << N->name;
      EXPECT_TRUE(check_rep_braiding(C, Rm, M, N).pass()) << M->name << "," << N->name;
    }
}

TEST(RMatrix, RepBraidingDiffersFromYDBraidingWhenCoactionIsNotInduced) {
  auto I = instance_ks3();
  YDCategory<Q> C(I.H);
  auto Rm = trivial_rmatrix(I.H);
  auto adj = by_name(I, "adj"), triv = by_name(I, "triv"), sgn = by_name(I, "sgn");
  EXPECT_TRUE(check_rep_braiding(C, Rm, triv, sgn).pass());
  auto r = check_rep_braiding(C, Rm, adj, adj);
  EXPECT_FALSE(r.passed("rep-braiding.equals-yd"));
  EXPECT_TRUE(r.passed("rep-braiding.inverse-left"));
}

// ------------------------------------------------------------ sigma forms

using S4 = std::array<std::array<Q, 2>, 2>;

// bicharacter test on Z2 with nonzero values
bool classical_sigma(const S4& s) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      if (s[a][b].is_zero()) return false;
      for (int c = 0; c < 2; ++c) {
        if (!(s[(a + b) % 2][c] == s[a][c] * s[b][c])) return false;
        if (!(s[a][(b + c) % 2] == s[a][b] * s[a][c])) return false;
      }
    }
  return true;
}

LinearMap<Q> as_form(const S4& s) {
  LinearMap<Q> f({2, 2}, {}, RationalField{});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) f.set(0, a * 2 + b, s[a][b]);
  return f;
}

TEST(SigmaForm, ExhaustiveSearchOnKZ2MatchesLoopOracle) {
  auto H = instance_kz2().H;
  const std::array<Q, 4> vals{Q(-1), Q(0), Q(1), Q(2)};
  std::size_t found = 0;
  for (std::size_t code = 0; code < 256; ++code) {
    S4 s;
    std::size_t c = code;
    for (auto& row : s)
      for (auto& x : row) {
        x = vals[c % 4];
        c /= 4;
      }
    // convolution inverse on grouplikes is the pointwise inverse
    S4 inv = s;
    bool nonzero = true;
    for (auto& row : inv)
      for (auto& x : row) {
        nonzero &= !x.is_zero();
        if (!x.is_zero()) x = Q(1) / x;
      }
    const bool want = classical_sigma(s);
    const bool got = check_sigma(H, SigmaForm<Q>{as_form(s), as_form(nonzero ? inv : s)}).pass();
    EXPECT_EQ(got, want) << "candidate " << code;
    found += got;
  }
  EXPECT_EQ(found, 2u);  // trivial and sign
}

TEST(SigmaForm, WrongInverseFailsTheWeakInverseCondition) {
  auto H = instance_kz2().H;
  S4 s{{{Q(1), Q(1)}, {Q(1), Q(2)}}};
  auto sign = cyclic_sign_sigma(H);
  auto rep = check_sigma(H, SigmaForm<Q>{as_form(s), sign.sigma_prime});
  EXPECT_FALSE(rep.passed("sigma.weak-inverse-right") && rep.passed("sigma.weak-inverse-left"));
  EXPECT_FALSE(rep.pass());
}

TEST(SigmaForm, CorpusFormsCertify) {
  auto kz2 = instance_kz2().H;
  EXPECT_TRUE(check_sigma(kz2, cyclic_sign_sigma(kz2)).pass());
  EXPECT_TRUE(check_sigma(kz2, trivial_sigma(kz2)).pass());
  auto tw = instance_twisted_kz4().H;
  EXPECT_TRUE(check_sigma(tw, cyclic_sign_sigma(tw)).pass());
}

TEST(SigmaForm, SignFormInducesTheSignAction) {
  auto I = instance_kz2();
  auto tg = by_name(I, "triv@g"), sign = by_name(I, "sign");
  auto Y = induced_action(I.H, cyclic_sign_sigma(I.H).sigma, as_comodule(*tg), "triv@g^sigma");
  EXPECT_EQ(Y->act.entry(0, 1), Q(-1));
  EXPECT_EQ(Y->act, sign->act);
}

TEST(SigmaForm, CorepBraidingAndInducedTildeActionOnTwistedKZ4) {
  auto I = instance_twisted_kz4();
  YDCategory<Q> C(I.H, CategoryOptions{TensorKind::tilde, RightUnitReading::dropped_twist,
                                       ElementReading::normalized});
  auto S = cyclic_sign_sigma(I.H);
  std::vector<YDPtr<Q>> ind;
  for (const auto& M : I.modules) {
    auto Y = induced_action_unchecked(I.H, S.sigma, as_comodule(*M), M->name + "^sigma");
    if (check_yd(I.H, *Y).pass()) ind.push_back(Y);
  }
  ASSERT_FALSE(ind.empty());
  for (const auto& M : ind)
    for (const auto& N : ind) {
      EXPECT_TRUE(check_induced_tensor_action(C, S, M, N).pass()) << M->name << "," << N->name;
      EXPECT_TRUE(check_corep_braiding(C, S, M, N).pass()) << M->name << "," << N->name;
    }
}

TEST(SigmaForm, CorepBraidingNeedsTheTildeTensor) {
  auto I = instance_kz2();
  YDCategory<Q> C(I.H);
  auto sign = by_name(I, "sign");
  EXPECT_THROW(corep_braiding(C, cyclic_sign_sigma(I.H), sign, sign), StructureError);
}

}  // namespace
