#include <gtest/gtest.h>

#include "avmod/errors.hpp"
#include "avmod/random.hpp"
#include "avmod/smash.hpp"

using namespace avmod;

namespace {

SmashElement f_(const Polynomial& f) { return SmashElement::from_poly(f); }
SmashElement g_(const VectorFieldGen& g) { return SmashElement::from_env(EnvElement::generator(g)); }
SmashElement x_(const MultiIndex& r) { return f_(Polynomial::monomial(r)); }

}  // namespace

TEST(Smash, VectorFieldPastFunction) {
  const VectorFieldGen d1({0}, 0), e({1}, 0);
  // (1 # d1)(x1 # 1) = x1 # d1 + 1 # 1
  EXPECT_EQ(g_(d1) * x_({1}), SmashElement::term({1}, PBWMonomial{{d1}}) + SmashElement::unit(1));
  // (1 # x1d1)(x1 # 1) = x1 # x1d1 + x1 # 1, since (x1d1)(x1) = x1
  EXPECT_EQ(g_(e) * x_({1}), SmashElement::term({1}, PBWMonomial{{e}}) + x_({1}));
}

TEST(Smash, FunctionsMultiplyInA) {
  const Polynomial f = Polynomial::monomial({1, 2}) + Polynomial::constant(2, 3);
  const Polynomial g = Polynomial::monomial({0, 1}, -2);
  EXPECT_EQ(f_(f) * f_(g), f_(f * g));
}

TEST(Smash, Commutators) {
  const VectorFieldGen d1({0}, 0), e({1}, 0), e2({2}, 0);
  EXPECT_EQ(smash_commutator(g_(d1), x_({1})), SmashElement::unit(1));
  EXPECT_TRUE(smash_commutator(x_({1, 0}), x_({0, 1})).is_zero());
  EXPECT_EQ(smash_commutator(g_(e), g_(e2)), g_(e2));
}

TEST(Smash, LeibnizRelation) {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (const auto& k : multi_indices_between(n, 0, 3)) {
      for (std::size_t p = 0; p < n; ++p) {
        const VectorFieldGen eta(k, p);
        for (const auto& r : multi_indices_between(n, 0, 3)) {
          const Polynomial f = Polynomial::monomial(r);
          ASSERT_EQ(smash_commutator(g_(eta), f_(f)), f_(gen_apply(eta, f)));
        }
      }
    }
  }
}

TEST(Smash, UnitAndSubalgebras) {
  Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.below(2);
    const SmashElement a = random_smash(rng, n, 3, 2, 2, 2);
    EXPECT_EQ(SmashElement::unit(n) * a, a);
    EXPECT_EQ(a * SmashElement::unit(n), a);

    const EnvElement u = random_env(rng, n, 2, 2, 2);
    const EnvElement v = random_env(rng, n, 2, 2, 2);
    EXPECT_EQ(SmashElement::from_env(u) * SmashElement::from_env(v), SmashElement::from_env(u * v));

    const Polynomial f = random_poly(rng, n, 3, 3), g = random_poly(rng, n, 3, 3);
    EXPECT_EQ(f_(f) * f_(g), f_(g) * f_(f));
  }
}

TEST(Smash, Associative) {
  Rng rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.below(2);
    const SmashElement a = random_smash(rng, n, 3, 2, 2, 2);
    const SmashElement b = random_smash(rng, n, 3, 2, 2, 2);
    const SmashElement c = random_smash(rng, n, 3, 2, 2, 2);
    ASSERT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Smash, PrintingAndErrors) {
  const VectorFieldGen e({1, 0}, 1);
  SmashElement a = SmashElement::term({1, 0}, PBWMonomial{{e}}, Rational(3, 2));
  a += SmashElement::term({0, 1}, PBWMonomial{}, -1);
  EXPECT_EQ(to_string(a), "3/2*x1 # x1*d2 - x2 # 1");
  EXPECT_THROW(a * SmashElement::unit(1), DimensionError);
}
