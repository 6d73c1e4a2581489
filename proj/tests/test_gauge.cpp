#include <gtest/gtest.h>

#include "avmod/errors.hpp"
#include "avmod/gauge.hpp"
#include "avmod/gauge_io.hpp"
#include "avmod/report.hpp"
#include "avmod/parse.hpp"
#include "avmod/random.hpp"
#include "oracles.hpp"

using namespace avmod;

namespace {

PolyMatrix constant_matrix(std::size_t n, const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Polynomial>> entries;
  for (const auto& row : rows) {
    std::vector<Polynomial> r;
    for (int v : row) r.push_back(Polynomial::constant(n, v));
    entries.push_back(std::move(r));
  }
  return PolyMatrix::from_rows(entries);
}

const CheckResult& check_named(const VerificationReport& r, const std::string& prefix) {
  for (const auto& c : r.checks) {
    if (c.name.rfind(prefix, 0) == 0) return c;
  }
  throw std::logic_error("no check " + prefix);
}

VectorField vf(std::string_view text, std::size_t n) { return parse_vector_field(text, n); }

ModuleElement elem(std::vector<std::string> coords, std::size_t n) {
  std::vector<Polynomial> polys;
  for (const auto& c : coords) polys.push_back(parse_polynomial(c, n));
  return ModuleElement::from_coords(std::move(polys));
}

// Adjoint spec with rho(x1 d1) negated.
GaugeModuleSpec negated_adjoint(std::size_t n) {
  GaugeModuleSpec spec = gauge_adjoint(n);
  PolyMatrix& m = spec.rho.at(VectorFieldGen(MultiIndex::unit(n, 0), 0));
  m = -m;
  return spec;
}

}  // namespace

TEST(PolyMatrix, Arithmetic) {
  const PolyMatrix a = constant_matrix(1, {{0, 1}, {0, 0}});
  const PolyMatrix b = constant_matrix(1, {{0, 0}, {1, 0}});
  EXPECT_EQ(matrix_commutator(a, b), constant_matrix(1, {{1, 0}, {0, -1}}));
  EXPECT_EQ(PolyMatrix::identity(1, 2) * a, a);
  PolyMatrix c(1, 1);
  c.at(0, 0) = parse_polynomial("x1^2", 1);
  EXPECT_EQ(to_string(matrix_partial(c, 0)), "[[2*x1]]");
  EXPECT_THROW(PolyMatrix::from_rows({{Polynomial(1), Polynomial(1)}}), SpecError);
}

TEST(GaugeVerify, BuiltInSpecsPass) {
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_TRUE(gauge_verify(gauge_trivial(n)).passed());
    const VerificationReport r = gauge_verify(gauge_adjoint(n));
    EXPECT_TRUE(r.passed()) << to_text(r);
  }
}

TEST(GaugeVerify, FlatnessViolationReportsResidual) {
  GaugeModuleSpec spec = gauge_trivial(2);
  spec.B[0].at(0, 0) = parse_polynomial("x2", 2);
  const VerificationReport r = gauge_verify(spec);
  EXPECT_FALSE(r.passed());
  const CheckResult& gf1 = check_named(r, "GF1");
  ASSERT_TRUE(gf1.residual.has_value());
  EXPECT_EQ(*gf1.residual, constant_matrix(2, {{-1}}));
  EXPECT_NE(to_text(r).find("residual: [[-1]]"), std::string::npos);
  EXPECT_NE(to_text(r).find(kCompositionConvention), std::string::npos);
}

TEST(GaugeVerify, CommutationViolationReportsResidual) {
  GaugeModuleSpec spec = gauge_trivial(1);
  PolyMatrix m(1, 1);
  m.at(0, 0) = parse_polynomial("x1", 1);
  spec.rho.emplace(VectorFieldGen({1}, 0), m);
  const VerificationReport r = gauge_verify(spec);
  const CheckResult& gf2 = check_named(r, "GF2");
  EXPECT_FALSE(gf2.passed());
  EXPECT_EQ(*gf2.residual, constant_matrix(1, {{1}}));
  EXPECT_TRUE(check_named(r, "GF1").passed());
}

TEST(GaugeVerify, NonHomomorphicRhoIsRejected) {
  const VerificationReport r = gauge_verify(negated_adjoint(2));
  const CheckResult& hom = check_named(r, "rho is a Lie");
  EXPECT_FALSE(hom.passed());
  ASSERT_TRUE(hom.residual.has_value());
  EXPECT_FALSE(hom.residual->is_zero());
}

TEST(GaugeVerify, HomomorphismCheckCoversSupportPairsBeyondTheBound) {
  // n = 1, rank 4. rho(x d) = diag(0,1,2,3), rho(x^2 d) = E32 + E43,
  // rho(x^3 d) = E31 + E42. Every pair with degree sum <= 2 is consistent,
  // but [x^2 d, x^3 d] = x^4 d lies outside the support while
  // [rho(x^2 d), rho(x^3 d)] = E41.
  GaugeModuleSpec spec = gauge_trivial(1, 4);
  spec.rho.emplace(VectorFieldGen({1}, 0), constant_matrix(1, {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}}));
  spec.rho.emplace(VectorFieldGen({2}, 0), constant_matrix(1, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  spec.rho.emplace(VectorFieldGen({3}, 0), constant_matrix(1, {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  const VerificationReport r = gauge_verify(spec);
  const CheckResult& hom = check_named(r, "rho is a Lie");
  EXPECT_EQ(hom.failed, 1u) << to_text(r);
  EXPECT_EQ(*hom.residual, -constant_matrix(1, {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}}));
  // The module axioms agree that this is not a module.
  EXPECT_FALSE(check_module_axioms(spec, 2, 0).passed());
}

TEST(GaugeVerify, MalformedSpecs) {
  GaugeModuleSpec spec = gauge_trivial(2);
  spec.B.pop_back();
  EXPECT_THROW(gauge_verify(spec), SpecError);
  spec = gauge_trivial(2);
  spec.rho.emplace(VectorFieldGen({0, 0}, 0), PolyMatrix(2, 1));
  EXPECT_THROW(gauge_verify(spec), SpecError);
  spec = gauge_trivial(2);
  spec.rho.emplace(VectorFieldGen({1, 0}, 0), PolyMatrix(2, 2));
  EXPECT_THROW(gauge_verify(spec), SpecError);
}

TEST(GaugeAdjoint, Shape) {
  const GaugeModuleSpec one = gauge_adjoint(1);
  EXPECT_EQ(one.rank, 1u);
  EXPECT_EQ(one.rho.at(VectorFieldGen({1}, 0)), constant_matrix(1, {{-1}}));
  const GaugeModuleSpec two = gauge_adjoint(2);
  const VectorFieldGen x1d2({1, 0}, 1);
  EXPECT_EQ(rho_act(two, x1d2, ModuleElement::frame(2, 2, 0)), -ModuleElement::frame(2, 2, 1));
  EXPECT_TRUE(rho_act(two, x1d2, ModuleElement::frame(2, 2, 1)).is_zero());
}

TEST(GaugeAdjoint, MatchesTransportOracle) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const GaugeModuleSpec spec = gauge_adjoint(n);
    for (const auto& m : multi_indices_between(n, 1, 3)) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t j = 0; j < n; ++j) {
          const ModuleElement expected = ModuleElement::from_coords(oracle::adjoint_rho_via_psi(m, p, j));
          EXPECT_EQ(rho_act(spec, VectorFieldGen(m, p), ModuleElement::frame(n, n, j)), expected);
          if (m.total() >= 2) {
            EXPECT_TRUE(expected.is_zero());
          }
        }
      }
    }
  }
}

TEST(GaugeAct, Examples) {
  const GaugeModuleSpec trivial = gauge_trivial(2);
  // (f d1)(g e1) = f (dg/dx1) e1
  EXPECT_EQ(gauge_act(trivial, vf("x2^2*d1", 2), elem({"x1^3*x2"}, 2)), elem({"3*x1^2*x2^3"}, 2));

  const GaugeModuleSpec adj = gauge_adjoint(2);
  EXPECT_TRUE(gauge_act(adj, vf("x2*d1", 2), ModuleElement::frame(2, 2, 0)).is_zero());
  EXPECT_EQ(gauge_act(adj, vf("x2*d1", 2), ModuleElement::frame(2, 2, 1)), -ModuleElement::frame(2, 2, 0));
  EXPECT_TRUE(gauge_act(adj, vf("x1^2*d2 - d1", 2), ModuleElement(2, 2)).is_zero());
}

TEST(GaugeAct, AdjointIsTheBracket) {
  // In the frame e_j = d_j the action is eta . (g d_j) = [eta, g d_j].
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.below(3);
    const VectorField eta = random_vector_field(rng, n, 3, 3);
    const VectorField w = random_vector_field(rng, n, 3, 3);
    std::vector<Polynomial> coords(n, Polynomial(n));
    for (const auto& [g, c] : w.terms()) coords[g.dir].add_term(g.k, c);
    std::vector<Polynomial> expected(n, Polynomial(n));
    const VectorField br = vf_bracket(eta, w);
    for (const auto& [g, c] : br.terms()) expected[g.dir].add_term(g.k, c);
    EXPECT_EQ(gauge_act(gauge_adjoint(n), eta, ModuleElement::from_coords(coords)),
              ModuleElement::from_coords(expected));
  }
}

TEST(GaugeAct, CovariantDerivativeWhenRhoIsEmpty) {
  GaugeModuleSpec spec = gauge_trivial(2, 2);
  spec.B[0] = PolyMatrix::from_rows({{parse_polynomial("x2", 2), parse_polynomial("1", 2)},
                                      {Polynomial(2), parse_polynomial("x1*x2", 2)}});
  const ModuleElement m = elem({"x1^2 + x2", "3*x1*x2"}, 2);
  const Polynomial f = parse_polynomial("x1*x2^2 - 2", 2);
  const ModuleElement expected = f * covariant_partial(spec, 0, m);
  EXPECT_EQ(gauge_act(spec, VectorField::from_polynomial(f, 0), m), expected);
}

TEST(GaugeAct, SumOverSupportMatchesDisplayedFormula) {
  // (f d_i) m expanded by hand on monomials: f d_i m + f B_i m + sum_k (1/k!) d^k f rho(x^k d_i) m.
  const GaugeModuleSpec spec = gauge_adjoint(2);
  const Polynomial f = parse_polynomial("x1^2*x2", 2);
  const ModuleElement m = elem({"x2", "x1"}, 2);
  ModuleElement expected = f * module_partial(m, 0);
  expected += parse_polynomial("2*x1*x2", 2) * rho_act(spec, VectorFieldGen({1, 0}, 0), m);
  expected += parse_polynomial("x1^2", 2) * rho_act(spec, VectorFieldGen({0, 1}, 0), m);
  EXPECT_EQ(gauge_act(spec, VectorField::from_polynomial(f, 0), m), expected);
}

TEST(PhiTransport, Examples) {
  const GaugeModuleSpec adj1 = gauge_adjoint(1);
  EXPECT_TRUE(check_phi_transport(adj1, vf("x1^2*d1", 1), ModuleElement::frame(1, 1, 0)));
  EXPECT_TRUE(check_phi_transport(gauge_trivial(2), vf("x1*d2", 2), elem({"x1^2*x2 - 3"}, 2)));
  EXPECT_TRUE(check_phi_transport(gauge_adjoint(2), vf("d1", 2), elem({"x2", "x1^3"}, 2)));
}

TEST(PhiTransport, BuiltInSpecs) {
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_TRUE(check_phi_transport_suite(gauge_trivial(n), 3, 1).passed());
    const VerificationReport r = check_phi_transport_suite(gauge_adjoint(n), 3, 1);
    EXPECT_TRUE(r.passed()) << to_text(r);
  }
}

TEST(ModuleAxioms, BuiltInSpecsPass) {
  for (std::size_t n = 1; n <= 2; ++n) {
    EXPECT_TRUE(check_module_axioms(gauge_trivial(n), 2, 3).passed());
    const VerificationReport r = check_module_axioms(gauge_adjoint(n), 2, 3);
    EXPECT_TRUE(r.passed()) << to_text(r);
  }
}

TEST(ModuleAxioms, NegatedRhoFailsLieAction) {
  const VerificationReport r = check_module_axioms(negated_adjoint(2), 2, 3);
  EXPECT_FALSE(check_named(r, "Lie action").passed());
  EXPECT_TRUE(check_named(r, "Leibniz").passed());
}

TEST(GaugeIo, RoundTrip) {
  for (const GaugeModuleSpec& spec : {gauge_trivial(2), gauge_adjoint(3)}) {
    const std::string text = gauge_spec_to_json(spec);
    const GaugeModuleSpec back = gauge_spec_from_json(text);
    EXPECT_EQ(back.B, spec.B);
    EXPECT_EQ(back.rho, spec.rho);
    EXPECT_EQ(gauge_spec_to_json(back), text);
  }
}

TEST(GaugeIo, ReadsDocument) {
  const GaugeModuleSpec spec = gauge_spec_from_json(
      R"({"n": 2, "rank": 1, "B": [[["x2"]], [["0"]]], "rho": [{"k": [1, 0], "p": 2, "matrix": [["3/2"]]}]})");
  EXPECT_EQ(spec.B[0], PolyMatrix::from_rows({{parse_polynomial("x2", 2)}}));
  EXPECT_EQ(spec.rho.at(VectorFieldGen({1, 0}, 1)), PolyMatrix::from_rows({{parse_polynomial("3/2", 2)}}));
}

TEST(GaugeIo, RejectsMalformedDocuments) {
  const char* bad[] = {
      R"({"n": 1, "rank": 1, "B": [[["0"]]], "rho": [], "extra": 1})",
      R"({"n": 1, "rank": 1, "B": [[["0"]]]})",
      R"({"n": 1, "rank": 1, "B": [[["x2"]]], "rho": []})",
      R"({"n": 1, "rank": 1, "B": [[["0", "0"]]], "rho": []})",
      R"({"n": 1, "rank": 1, "B": [], "rho": []})",
      R"({"n": 1, "rank": 1, "B": [[["0"]]], "rho": [{"k": [0], "p": 1, "matrix": [["1"]]}]})",
      R"({"n": 1, "rank": 1, "B": [[["0"]]], "rho": [{"k": [1], "p": 2, "matrix": [["1"]]}]})",
      R"({"n": 1, "rank": 1, "B": [[["0"]]], "rho": [{"k": [1], "p": 1, "matrix": [["1"]], "q": 0}]})",
      R"({"n": 1, "rank": 1, "B": [[[0]]], "rho": []})",
      R"({"n": 0, "rank": 1, "B": [], "rho": []})",
      R"({"n": 1, "rank": 1)",
  };
  for (const char* text : bad) EXPECT_THROW(gauge_spec_from_json(text), SpecError) << text;
}

TEST(GaugeIo, ReportJson) {
  GaugeModuleSpec spec = gauge_trivial(2);
  spec.B[0].at(0, 0) = parse_polynomial("x2", 2);
  const std::string json = report_to_json(gauge_verify(spec));
  EXPECT_NE(json.find("\"passed\": false"), std::string::npos);
  EXPECT_NE(json.find("\"residual\""), std::string::npos);
  EXPECT_NE(json.find("\"-1\""), std::string::npos);
}
