// Scalars, linear maps, tensors, subspaces, Hom structures, weak Hom-Hopf
// axioms, Yau twists and the corpus instances.

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace whh;
using fixtures::Q;

namespace {

RationalField QQ;

Q q(const char* s) { return Rational::parse(s); }

// ------------------------------------------------------------ scalars

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(q("6/4").str(), "3/2");
  EXPECT_EQ(q("-2/-4").str(), "1/2");
  EXPECT_EQ(q("0/7").str(), "0");
  EXPECT_EQ(q("10").str(), "10");
  EXPECT_THROW(q("1/0"), std::exception);
  EXPECT_THROW(q("x"), std::exception);
}

TEST(Rational, ArithmeticIsExactAcrossOverflow) {
  Q big = q("9223372036854775807");
  Q r = big * big / big;
  EXPECT_EQ(r, big);
  EXPECT_EQ((big + Q(1)).str(), "9223372036854775808");
  EXPECT_EQ((q("1/3") + q("1/6")).str(), "1/2");
  EXPECT_EQ((q("1/3") - q("1/3")).is_zero(), true);
  EXPECT_THROW(Q(1) / Q(0), std::domain_error);
}

TEST(PrimeField, ReducesLiteralsModP) {
  PrimeField P(7);
  EXPECT_EQ(P.parse("1/2"), P.from_int(4));
  EXPECT_EQ(P.parse("-1"), P.from_int(6));
  EXPECT_EQ(P.from_int(2) * P.from_int(2) * P.from_int(2), P.one());
  EXPECT_THROW((void)P.parse("1/7"), ScalarParseError);
  EXPECT_THROW(PrimeField(8), std::invalid_argument);
}

// ------------------------------------------------------------ linear maps

LinearMap<Q> dense(const Shape& dom, const Shape& cod, std::vector<std::vector<int>> rows) {
  std::vector<std::vector<Q>> r;
  for (auto& row : rows) {
    std::vector<Q> x;
    for (int v : row) x.push_back(Q(v));
    r.push_back(x);
  }
  return LinearMap<Q>::from_dense(dom, cod, r, QQ);
}

TEST(LinearMap, ComposeMatchesHandMultiplication) {
  auto A = dense({2}, {2}, {{1, 2}, {3, 4}});
  auto B = dense({2}, {2}, {{0, 1}, {1, 0}});
  EXPECT_EQ(compose(A, B), dense({2}, {2}, {{2, 1}, {4, 3}}));
  EXPECT_EQ(compose(B, A), dense({2}, {2}, {{3, 4}, {1, 2}}));
}

TEST(LinearMap, KroneckerProductOrdersLegsLeftToRight) {
  auto A = dense({2}, {2}, {{1, 2}, {3, 4}});
  auto I = LinearMap<Q>::identity({2}, QQ);
  auto T = tensor(A, I);
  // (A (x) I)(e_1 (x) e_0) = A e_1 (x) e_0 = 2 e_0(x)e_0 + 4 e_1(x)e_0
  EXPECT_EQ(T.entry(flatten({0, 0}, {2, 2}), flatten({1, 0}, {2, 2})), Q(2));
  EXPECT_EQ(T.entry(flatten({1, 0}, {2, 2}), flatten({1, 0}, {2, 2})), Q(4));
  EXPECT_EQ(T.entry(flatten({0, 1}, {2, 2}), flatten({1, 0}, {2, 2})), Q(0));
}

TEST(LinearMap, InverseAndRank) {
  auto A = dense({3}, {3}, {{2, 0, 1}, {1, 1, 0}, {0, 3, 1}});
  auto Ai = invert(A);
  EXPECT_EQ(compose(A, Ai), LinearMap<Q>::identity({3}, QQ));
  EXPECT_EQ(rank(dense({3}, {3}, {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})), 2u);
  EXPECT_THROW(invert(dense({2}, {2}, {{1, 2}, {2, 4}})), SingularMap);
  EXPECT_EQ(power(A, -1), Ai);
  EXPECT_EQ(power(A, 2), compose(A, A));
}

TEST(LinearMap, PermutationSwapsLegs) {
  auto P = permutation<Q>({2, 3}, {1, 0}, QQ);
  EXPECT_EQ(P.dom(), (Shape{2, 3}));
  EXPECT_EQ(P.cod(), (Shape{3, 2}));
  EXPECT_EQ(P.entry(flatten({2, 1}, {3, 2}), flatten({1, 2}, {2, 3})), Q(1));
  EXPECT_EQ(compose(permutation<Q>({3, 2}, {1, 0}, QQ), P), LinearMap<Q>::identity({2, 3}, QQ));
}

TEST(Tensor, ContractionAgreesWithDenseLoops) {
  // mu of kZ3 applied to (a, b) then twisted: compare against i+j mod 3 by hand
  auto H = group_algebra<Q>(GroupPresentation::cyclic(3), QQ);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      auto t = Tensor<Q>::basis(QQ, {{"a", 3, a}, {"b", 3, b}});
      t.apply(H.mu(), {"a", "b"}, {"x"}).apply(H.delta(), {"x"}, {"y", "z"});
      auto v = t.read({"y", "z"});
      ASSERT_EQ(v.size(), 1u);
      const std::size_t c = (a + b) % 3;
      EXPECT_EQ(v[0].first, flatten({c, c}, {3, 3}));
      EXPECT_EQ(v[0].second, Q(1));
    }
}

TEST(Subspace, MembershipAndCoordinates) {
  auto S = Subspace<Q>::span({3}, {{{0, Q(1)}, {1, Q(1)}}, {{2, Q(2)}}}, QQ);
  EXPECT_EQ(S.dim(), 2u);
  EXPECT_TRUE(S.member({{0, Q(3)}, {1, Q(3)}, {2, Q(1)}}));
  EXPECT_FALSE(S.member({{0, Q(1)}}));
  auto c = S.coords({{0, Q(3)}, {1, Q(3)}, {2, Q(1)}});
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(S.inclusion().apply(*c), (SparseVec<Q>{{0, Q(3)}, {1, Q(3)}, {2, Q(1)}}));
}

// ------------------------------------------------------------ Hom structures

TEST(HomAlgebra, UnitActsAsTwistOnKZ2) {
  auto H = instance_kz2().H;
  auto left = compose(H.mu(), tensor(H.eta(), LinearMap<Q>::identity({2}, QQ)).reshaped({2}, {2, 2}));
  EXPECT_EQ(left, H.alpha());
  EXPECT_TRUE(check_hom_algebra(H.algebra()).pass());
}

TEST(HomCoalgebra, NonCounitalCoproductFailsCounitAxiom) {
  auto H = instance_kz2().H;
  LinearMap<Q> delta({2}, {2, 2}, QQ);
  delta.set(0, 0, Q(1));                        // Delta(1) = 1(x)1
  delta.set(flatten({1, 0}, {2, 2}), 1, Q(1));  // Delta(g) = g(x)1
  HomCoalgebra<Q> C{2, delta, H.eps(), H.alpha(), QQ};
  auto r = check_hom_coalgebra(C);
  // g_1 eps(g_2) = g still holds; eps(g_1) g_2 = 1 does not
  EXPECT_TRUE(r.passed("hom-coalgebra.right-counit"));
  EXPECT_FALSE(r.passed("hom-coalgebra.left-counit"));
  auto* e = r.find("hom-coalgebra.left-counit");
  ASSERT_NE(e, nullptr);
  ASSERT_EQ(e->witnesses.size(), 1u);
  EXPECT_EQ(e->witnesses[0].input, (std::vector<std::pair<std::string, std::size_t>>{{"c", 1}}));
}

TEST(HomModule, SignCharacterIsAModuleAndScaledOneIsNot) {
  auto H = instance_kz2().H;
  LinearMap<Q> act({2, 1}, {1}, QQ);
  act.set(0, 0, Q(1));
  act.set(0, 1, Q(-1));
  HModule<Q> M{1, act, LinearMap<Q>::identity({1}, QQ)};
  EXPECT_TRUE(check_module(H.algebra(), M).pass());
  act.set(0, 1, Q(2));
  EXPECT_FALSE(check_module(H.algebra(), HModule<Q>{1, act, M.alpha}).pass());
}

// ------------------------------------------------------------ weak Hom-Hopf

TEST(WeakHomHopf, CorpusInstancesCertify) {
  EXPECT_TRUE(certify(instance_kz3_gf7().H).pass());
  for (const auto& I : rational_corpus()) EXPECT_TRUE(certify(I.H).pass()) << I.name;
}

TEST(WeakHomHopf, PairGroupoidUnitCoproductIsSumOfIdentityArrows) {
  auto H = instance_pair2().H;
  // identity arrows of the pair groupoid on 2 objects are e00 (index 0) and e11 (index 3)
  SparseVec<Q> want{{flatten({0, 0}, {4, 4}), Q(1)}, {flatten({3, 3}, {4, 4}), Q(1)}};
  EXPECT_EQ(H.one1().column(0), want);
  auto c = counital_maps(H);
  EXPECT_EQ(c.Hs.dim(), 2u);
  EXPECT_EQ(c.Ht.dim(), 2u);
  EXPECT_TRUE(c.Hs == c.Ht);
}

TEST(WeakHomHopf, GroupAlgebraHasOneDimensionalCounitalSubalgebra) {
  auto c = counital_maps(instance_ks3().H);
  EXPECT_EQ(c.Hs.dim(), 1u);
}

TEST(WeakHomHopf, EveryStructureMutationIsCaughtWithAWitness) {
  auto muts = fixtures::hopf_mutations();
  ASSERT_GE(muts.size(), 10u);
  for (const auto& m : muts) {
    auto r = certify(m.H);
    EXPECT_FALSE(r.pass()) << m.name;
    bool witnessed = false;
    for (const auto& e : r.entries()) witnessed |= !e.pass && !e.witnesses.empty();
    EXPECT_TRUE(witnessed) << m.name;
  }
}

TEST(WeakHomHopf, SingularTwistIsRejectedAtConstruction) {
  auto H = instance_kz2().H;
  EXPECT_THROW((WeakHomHopfAlgebra<Q>("bad", QQ, 2, H.mu(), H.eta(), H.delta(), H.eps(), LinearMap<Q>({2}, {2}, QQ),
                                      H.S())),
               SingularMap);
}

// ------------------------------------------------------------ Yau twists

TEST(YauTwist, MinusGOnKZ2IsNotACoalgebraMap) {
  auto base = group_algebra<Q>(GroupPresentation::cyclic(2), QQ);
  LinearMap<Q> beta({2}, {2}, QQ);
  beta.set(0, 0, Q(1));
  beta.set(1, 1, Q(-1));
  auto r = check_twist_map(base, beta);
  EXPECT_FALSE(r.passed("coalgebra-morphism.counit"));
  EXPECT_THROW(attempt_twisted_kz2(), StructureError);
}

TEST(YauTwist, MinusGOnKZ4IsNotACoalgebraMapEither) {
  auto base = group_algebra<Q>(GroupPresentation::cyclic(4), QQ);
  LinearMap<Q> beta({4}, {4}, QQ);
  beta.set(0, 0, Q(1));
  beta.set(1, 1, Q(-1));
  beta.set(2, 2, Q(1));
  beta.set(3, 3, Q(-1));
  EXPECT_FALSE(check_twist_map(base, beta).pass());
}

TEST(YauTwist, AutomorphismTwistIsGenuinelyHomType) {
  auto I = instance_twisted_kz4();
  EXPECT_TRUE(I.H.is_twisted());
  // alpha(g) = g^3, and g * g = alpha(g^2) = g^2 (twisted product a(ab))
  EXPECT_EQ(I.H.alpha().entry(3, 1), Q(1));
  EXPECT_EQ(I.H.mu().entry(2, flatten({1, 1}, {4, 4})), Q(1));
  EXPECT_EQ(I.H.mu().entry(3, flatten({0, 1}, {4, 4})), Q(1));  // 1 * g = alpha(g) = g^3
  EXPECT_TRUE(certify(I.H).pass());
}

// ------------------------------------------------------------ corpus

TEST(Corpus, OneDimensionalSearchOnKZ2FindsFourObjects) {
  auto H = instance_kz2().H;
  auto found = one_dim_search(H, false);
  EXPECT_GE(found.size(), 4u);
  std::set<std::string> names;
  for (const auto& M : found) names.insert(M->name);
  EXPECT_TRUE(names.count("chi[1,-1]@1"));
  EXPECT_TRUE(names.count("chi[1,1]@0"));
}

TEST(Corpus, GF7CubeRootCharacterIsYD) {
  auto I = instance_kz3_gf7();
  ASSERT_EQ(I.modules.size(), 4u);
  for (const auto& M : I.modules) EXPECT_TRUE(check_yd(I.H, *M).pass()) << M->name;
  // chi(g) = 2 has order 3 mod 7
  EXPECT_EQ(I.modules[0]->act.entry(0, 1), PrimeField(7).from_int(2));
}

TEST(Corpus, EveryCorpusModuleCertifies) {
  for (const auto& I : rational_corpus()) {
    EXPECT_FALSE(I.modules.empty()) << I.name;
    for (const auto& M : I.modules) EXPECT_TRUE(check_yd(I.H, *M).pass()) << I.name << "/" << M->name;
  }
}

}  // namespace
