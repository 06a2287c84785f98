#pragma once

// Entwining structures psi: A(x)C -> A(x)C, written psi(a(x)c) = a_psi (x) c^psi.
// The Sweedler conditions are compiled to the following contractions
// (psi' denotes a second application of psi):
//
//   multiplicative   psi(ab(x)c) then a_C on the C leg
//                  = psi(b(x)a_C c) -> (b',c'), psi(a(x)c') -> (a',c''), gives a'b' (x) c''
//   unit             psi(1(x)c) = eps(c_1^psi) 1_psi (x) c_2
//   comultiplicative a_A(a_psi) (x) Delta(c^psi)
//                  = Delta c = c1(x)c2, psi(a_A a (x) c2) -> (a',c2'), psi(a'(x)c1) -> (a'',c1'),
//                    gives a'' (x) c1' (x) c2'
//   counit           eps(c^psi) a_psi = eps(c^psi) a 1_psi
//   entwined module  rho(a.m) = a_A(a_psi).m_0 (x) a_C(m_1^psi)
//
// EntwiningReading::balanced drops the twist on the right-hand input of the
// multiplicative and comultiplicative conditions and both twists of the
// entwined-module condition. That form matches the compatibility
// rho(a.m) = a^-1(a_21).m_0 (x) (a^-2(a_22)a^-1(m_1))S^-1(a_1) stated for the
// canonical map; the literal form fails on instances with a non-identity twist.

#include "whh/yd_category.hpp"

namespace whh {

enum class EntwiningReading { literal, balanced };

inline std::string to_string(EntwiningReading r) { return r == EntwiningReading::literal ? "literal" : "balanced"; }

template <ExactField F>
struct EntwiningStructure {
  HomAlgebra<F> A;
  HomCoalgebra<F> C;
  LinearMap<F> psi;  // (dA, dC) -> (dA, dC)
};

template <ExactField F>
CheckReport check_entwining(const EntwiningStructure<F>& E, CheckOptions opt = {},
                            EntwiningReading reading = EntwiningReading::literal) {
  const bool lit = reading == EntwiningReading::literal;
  using T = Tensor<F>;
  const auto dA = E.A.d, dC = E.C.d;
  detail::expect_shape(E.psi.dom(), {dA, dC}, "entwining map domain");
  detail::expect_shape(E.psi.cod(), {dA, dC}, "entwining map codomain");
  const auto& ctx = E.A.ctx;
  const auto& psi = E.psi;
  CheckReport rep("entwining", opt);
  if (!lit) rep.deviation("entwining reading: balanced");
  check_maps_equal(rep, "entwining.twist-natural", "psi (a(x)a) = (a(x)a) psi", compose(psi, tensor(E.A.alpha, E.C.alpha)),
                   compose(tensor(E.A.alpha, E.C.alpha), psi));
  check_identity<F>(
      rep, "entwining.multiplicative", "psi(ab)(x)a(c^psi) = a_psi b_phi (x) a(c)^{psi phi}", ctx,
      {{"a", dA}, {"b", dA}, {"c", dC}}, {{"x", dA}, {"y", dC}},
      [&](T& t) { t.apply(E.A.mu, {"a", "b"}, {"ab"}).apply(psi, {"ab", "c"}, {"x", "y"}).apply1(E.C.alpha, "y"); },
      [&](T& t) {
        if (lit) t.apply1(E.C.alpha, "c");
        t.apply(psi, {"b", "c"}, {"b'", "c'"})
            .apply(psi, {"a", "c'"}, {"a'", "y"})
            .apply(E.A.mu, {"a'", "b'"}, {"x"});
      });
  check_identity<F>(
      rep, "entwining.unit", "psi(1(x)c) = eps(c_1^psi) 1_psi (x) c_2", ctx, {{"c", dC}}, {{"x", dA}, {"y", dC}},
      [&](T& t) { t.apply(E.A.eta, {}, {"u"}).apply(psi, {"u", "c"}, {"x", "y"}); },
      [&](T& t) {
        t.apply(E.C.delta, {"c"}, {"c1", "y"})
            .apply(E.A.eta, {}, {"u"})
            .apply(psi, {"u", "c1"}, {"x", "c1'"})
            .apply(E.C.eps, {"c1'"}, {});
      });
  check_identity<F>(
      rep, "entwining.comultiplicative", "a(a_psi)(x)Delta(c^psi) = a(a)_{phi psi} (x) c1^psi (x) c2^phi", ctx,
      {{"a", dA}, {"c", dC}}, {{"x", dA}, {"y1", dC}, {"y2", dC}},
      [&](T& t) {
        t.apply(psi, {"a", "c"}, {"x", "y"}).apply1(E.A.alpha, "x").apply(E.C.delta, {"y"}, {"y1", "y2"});
      },
      [&](T& t) {
        if (lit) t.apply1(E.A.alpha, "a");
        t.apply(E.C.delta, {"c"}, {"c1", "c2"})
            .apply(psi, {"a", "c2"}, {"a'", "y2"})
            .apply(psi, {"a'", "c1"}, {"x", "y1"});
      });
  check_identity<F>(
      rep, "entwining.counit", "eps(c^psi) a_psi = eps(c^psi) a 1_psi", ctx, {{"a", dA}, {"c", dC}}, {{"x", dA}},
      [&](T& t) { t.apply(psi, {"a", "c"}, {"x", "y"}).apply(E.C.eps, {"y"}, {}); },
      [&](T& t) {
        t.apply(E.A.eta, {}, {"u"})
            .apply(psi, {"u", "c"}, {"v", "y"})
            .apply(E.C.eps, {"y"}, {})
            .apply(E.A.mu, {"a", "v"}, {"x"});
      });
  return rep;
}

/// phi(a(x)c) = a^-1(a_21) (x) (a^-2(a_22) a^-1(c)) S^-1(a_1).
template <ExactField F>
EntwiningStructure<F> canonical_psi(const WeakHomHopfAlgebra<F>& H) {
  using T = Tensor<F>;
  const auto d = H.dim();
  auto phi = tabulate<F>(H.ctx(), {{"a", d}, {"c", d}}, {{"x", d}, {"y", d}}, [&](T& t) {
    t.apply(H.delta(), {"a"}, {"a1", "a2"})
        .apply(H.delta(), {"a2"}, {"a21", "a22"})
        .apply(H.alpha_inv(), {"a21"}, {"x"})
        .apply1(H.alpha_pow(-2), "a22")
        .apply1(H.alpha_inv(), "c")
        .apply(H.mu(), {"a22", "c"}, {"p"})
        .apply1(H.S_inv(), "a1")
        .apply(H.mu(), {"p", "a1"}, {"y"});
  });
  return {H.algebra(), H.coalgebra(), phi};
}

/// rho(a.m) = a_A(a_psi).m_0 (x) a_C(m_1^psi), M given by its action, coaction and twist.
template <ExactField F>
CheckReport check_entwined_module(const EntwiningStructure<F>& E, const YDModule<F>& M, CheckOptions opt = {},
                                  EntwiningReading reading = EntwiningReading::literal) {
  const bool lit = reading == EntwiningReading::literal;
  using T = Tensor<F>;
  const auto dA = E.A.d, dC = E.C.d, m = M.dim;
  CheckReport rep("entwined:" + M.name, opt);
  if (!lit) rep.deviation("entwining reading: balanced");
  detail::expect_shape(M.act.dom(), {dA, m}, "entwined module action");
  detail::expect_shape(M.co.cod(), {m, dC}, "entwined module coaction");
  check_identity<F>(
      rep, "entwined.compatibility", "rho(a.m) = a(a_psi).m_0 (x) a(m_1^psi)", E.A.ctx, {{"a", dA}, {"m", m}},
      {{"x", m}, {"y", dC}}, [&](T& t) { t.apply(M.act, {"a", "m"}, {"n"}).apply(M.co, {"n"}, {"x", "y"}); },
      [&](T& t) {
        t.apply(M.co, {"m"}, {"m0", "m1"})
            .apply(E.psi, {"a", "m1"}, {"a'", "y"});
        if (lit) t.apply1(E.A.alpha, "a'");
        t.apply(M.act, {"a'", "m0"}, {"x"});
        if (lit) t.apply1(E.C.alpha, "y");
      });
  return rep;
}

}  // namespace whh
