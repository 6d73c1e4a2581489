#include <gtest/gtest.h>

#include "avmod/errors.hpp"
#include "avmod/random.hpp"
#include "avmod/witt.hpp"

using namespace avmod;

namespace {

VectorField gen(const MultiIndex& k, std::size_t dir, const Rational& c = 1) {
  return VectorField::generator(VectorFieldGen(k, dir), c);
}

// Action of a bracket checked against the commutator of actions.
bool acts_as_commutator(const VectorField& a, const VectorField& b, const Polynomial& f) {
  return vf_apply(vf_bracket(a, b), f) == vf_apply(a, vf_apply(b, f)) - vf_apply(b, vf_apply(a, f));
}

}  // namespace

TEST(Witt, BracketExamples) {
  EXPECT_EQ(vf_bracket(gen({0}, 0), gen({1}, 0)), gen({0}, 0));
  EXPECT_TRUE(vf_bracket(gen({1}, 0), gen({1}, 0)).is_zero());
  const VectorField x1d2 = gen({1, 0}, 1), x2d1 = gen({0, 1}, 0);
  EXPECT_EQ(vf_bracket(x1d2, x2d1), gen({1, 0}, 0) - gen({0, 1}, 1));

  for (const auto& f : {Polynomial::monomial({1, 0}), Polynomial::monomial({0, 1}), Polynomial::monomial({2, 3})}) {
    EXPECT_TRUE(acts_as_commutator(x1d2, x2d1, f));
    EXPECT_TRUE(acts_as_commutator(gen({0, 0}, 0), gen({1, 0}, 0), f));
  }
}

TEST(Witt, Apply) {
  EXPECT_EQ(vf_apply(gen({1}, 0), Polynomial::monomial({2})), Polynomial::monomial({2}, 2));
  EXPECT_TRUE(vf_apply(gen({3, 1}, 1), Polynomial::constant(2, 7)).is_zero());
  EXPECT_EQ(vf_apply(gen({0, 1}, 0), Polynomial::monomial({1, 1})), Polynomial::monomial({0, 2}));
}

TEST(Witt, DegreesAndLplus) {
  EXPECT_EQ(vf_degree(VectorFieldGen({0}, 0)), -1);
  EXPECT_FALSE(vf_in_lplus(gen({0}, 0)));
  EXPECT_EQ(vf_degree(VectorFieldGen({1, 0}, 1)), 0);
  EXPECT_TRUE(vf_in_lplus(gen({1, 0}, 1)));
  EXPECT_EQ(vf_degree(VectorFieldGen({2, 1}, 0)), 2);
  EXPECT_TRUE(vf_in_lplus(gen({2, 1}, 0)));
  EXPECT_THROW(VectorFieldGen({1, 0}, 2), DimensionError);
}

TEST(Witt, JacobiOnGeneratorTriples) {
  for (std::size_t n = 1; n <= 2; ++n) {
    std::vector<VectorField> gens;
    for (const auto& k : multi_indices_between(n, 0, 2)) {
      for (std::size_t p = 0; p < n; ++p) gens.push_back(gen(k, p));
    }
    for (const auto& a : gens) {
      for (const auto& b : gens) {
        for (const auto& c : gens) {
          const VectorField jac = vf_bracket(a, vf_bracket(b, c)) + vf_bracket(b, vf_bracket(c, a)) +
                                  vf_bracket(c, vf_bracket(a, b));
          ASSERT_TRUE(jac.is_zero());
        }
      }
    }
  }
}

TEST(Witt, DerivationAndBracketCompatibility) {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(3);
    const VectorField a = random_vector_field(rng, n, 3, 3);
    const VectorField b = random_vector_field(rng, n, 3, 3);
    const Polynomial f = random_poly(rng, n, 4, 3);
    const Polynomial g = random_poly(rng, n, 4, 3);
    EXPECT_EQ(vf_apply(a, f * g), f * vf_apply(a, g) + g * vf_apply(a, f));
    EXPECT_TRUE(acts_as_commutator(a, b, f));
    EXPECT_EQ(vf_bracket(a, b), -vf_bracket(b, a));
  }
}

TEST(Witt, LplusClosedAndDegreeAdditive) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& k : multi_indices_between(n, 1, 3)) {
      for (const auto& l : multi_indices_between(n, 1, 3)) {
        for (std::size_t p = 0; p < n; ++p) {
          for (std::size_t q = 0; q < n; ++q) {
            const VectorFieldGen a(k, p), b(l, q);
            const VectorField br = gen_bracket(a, b);
            EXPECT_TRUE(vf_in_lplus(br));
            for (const auto& [g, c] : br.terms()) EXPECT_EQ(g.degree(), a.degree() + b.degree());
          }
        }
      }
    }
  }
}

TEST(Witt, GeneratorOrder) {
  // |k| first, then k ascending lexicographically, then direction.
  EXPECT_TRUE(gen_compare(VectorFieldGen({0, 0}, 1), VectorFieldGen({0, 1}, 0)) < 0);
  EXPECT_TRUE(gen_compare(VectorFieldGen({0, 1}, 0), VectorFieldGen({1, 0}, 0)) < 0);
  EXPECT_TRUE(gen_compare(VectorFieldGen({1, 0}, 0), VectorFieldGen({1, 0}, 1)) < 0);
  EXPECT_EQ(to_string(gen({2, 1}, 0) - gen({0, 0}, 1)), "-d2 + x1^2*x2*d1");
}
