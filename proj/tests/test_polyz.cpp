#include <gtest/gtest.h>

#include "cmaut/cyclotomic.hpp"
#include "cmaut/error.hpp"
#include "cmaut/polyz.hpp"
#include "support/oracles.hpp"

using cmaut::ErrorCode;
using cmaut::Integer;
using cmaut::UniPoly;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const cmaut::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InternalError;
}

}  // namespace

TEST(Polyz, Arithmetic) {
  EXPECT_EQ((UniPoly{1, 1} * UniPoly{-1, 1}), (UniPoly{-1, 0, 1}));
  EXPECT_EQ(cmaut::cyclotomic(1) * (cmaut::cyclotomic(2) * (cmaut::cyclotomic(3) * cmaut::cyclotomic(6))),
            UniPoly::x_pow_minus_one(6));
  EXPECT_TRUE((UniPoly{} * UniPoly{3, 0, 0, 0, 0, 1}).is_zero());
  EXPECT_EQ(UniPoly{}.degree(), UniPoly::kMinusInfinity);
  EXPECT_EQ((UniPoly{1, 2, 3} - UniPoly{1, 2, 3}).degree(), UniPoly::kMinusInfinity);
}

TEST(Polyz, DivremExamples) {
  auto [q1, r1] = cmaut::divrem(UniPoly{-1, 0, 1}, UniPoly{-1, 1});
  EXPECT_EQ(q1, (UniPoly{1, 1}));
  EXPECT_TRUE(r1.is_zero());
  auto [q2, r2] = cmaut::divrem(UniPoly{1, 0, 0, 1}, UniPoly{1, 1});
  EXPECT_EQ(q2, (UniPoly{1, -1, 1}));
  EXPECT_TRUE(r2.is_zero());
  auto [q3, r3] = cmaut::divrem(UniPoly{0, 0, 0, 1}, UniPoly{1, 0, 1});
  EXPECT_EQ(q3, (UniPoly{0, 1}));
  EXPECT_EQ(r3, (UniPoly{0, -1}));
  EXPECT_EQ(code_of([] { cmaut::divrem(UniPoly{1, 2}, UniPoly{1, 2}); }), ErrorCode::NotUnitary);
  EXPECT_EQ(code_of([] { cmaut::divrem(UniPoly{1, 2}, UniPoly{}); }), ErrorCode::ZeroPolynomial);
}

TEST(Polyz, DivremRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const UniPoly a = oracle::random_poly(rng, 12, 20, false);
    const UniPoly b = oracle::random_poly(rng, 6, 20, true);
    auto [q, r] = cmaut::divrem(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(Polyz, RingAxioms) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const UniPoly a = oracle::random_poly(rng, 7, 9, false);
    const UniPoly b = oracle::random_poly(rng, 7, 9, false);
    const UniPoly c = oracle::random_poly(rng, 7, 9, false);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, UniPoly{});
    EXPECT_EQ(-(-a), a);
  }
}

TEST(Polyz, TextFormat) {
  EXPECT_EQ(UniPoly::parse("-1,0,1"), (UniPoly{-1, 0, 1}));
  EXPECT_EQ(UniPoly::parse("0"), UniPoly{});
  EXPECT_EQ(UniPoly{}.to_string(), "0");
  EXPECT_EQ((UniPoly{-1, 0, 1}).to_string(), "-1,0,1");
  EXPECT_EQ(UniPoly::parse(" 3 , +2 ,0,0").to_string(), "3,2");
  EXPECT_EQ(UniPoly::parse("123456789012345678901234567890").coeff(0),
            Integer("123456789012345678901234567890"));
  for (const char* bad : {"", ",", "1,,2", "x", "1.5", "1,2,"})
    EXPECT_EQ(code_of([bad] { UniPoly::parse(bad); }), ErrorCode::InvalidArgument) << bad;
}

TEST(Polyz, Transforms) {
  EXPECT_EQ((UniPoly{1, 2}).compose_power(3), (UniPoly{1, 0, 0, 2}));
  EXPECT_EQ(UniPoly::monomial(1, 7).fold_exponents(6), (UniPoly{0, 1}));
  EXPECT_EQ((UniPoly{5, 1, 2}).reciprocal_mod(4), (UniPoly{5, 0, 2, 1}));
}

TEST(Polyz, ResultantExamples) {
  EXPECT_EQ(cmaut::resultant(UniPoly{-1, 1}, UniPoly{1, 1}), 2);
  EXPECT_EQ(cmaut::resultant(UniPoly{1, 1}, UniPoly{-1, 1}), -2);
  EXPECT_EQ(cmaut::resultant(UniPoly{1, 0, 1}, UniPoly{-1, 0, 1}), 4);
  EXPECT_EQ(cmaut::resultant(UniPoly{5}, UniPoly{0, 1}), 5);
  EXPECT_EQ(code_of([] { cmaut::resultant(UniPoly{}, UniPoly{1}); }), ErrorCode::ZeroPolynomial);
}

TEST(Polyz, ResultantMatchesEuclidOracle) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    UniPoly f = oracle::random_poly(rng, 7, 6, false);
    UniPoly g = oracle::random_poly(rng, 7, 6, false);
    if (f.is_zero() || g.is_zero()) continue;
    const oracle::Q expected = oracle::euclid_resultant(oracle::to_q(f), oracle::to_q(g));
    EXPECT_EQ(oracle::Q(cmaut::resultant(f, g)), expected) << f.to_string() << " ; " << g.to_string();
  }
}

TEST(Polyz, ResultantAntisymmetryAndMultiplicativity) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    UniPoly f = oracle::random_poly(rng, 6, 5, true);
    UniPoly g = oracle::random_poly(rng, 6, 5, true);
    UniPoly h = oracle::random_poly(rng, 4, 5, true);
    const long mn = f.degree() * g.degree();
    EXPECT_EQ(cmaut::resultant(f, g), (mn % 2 ? -1 : 1) * cmaut::resultant(g, f));
    EXPECT_EQ(cmaut::resultant(f, g * h), cmaut::resultant(f, g) * cmaut::resultant(f, h));
  }
}

TEST(Polyz, ResultantVanishesExactlyOnCommonFactor) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 200; ++i) {
    UniPoly f = oracle::random_poly(rng, 5, 4, true);
    UniPoly g = oracle::random_poly(rng, 5, 4, true);
    if (i % 2) {
      const UniPoly common = oracle::random_poly(rng, 3, 4, true);
      f = f * common;
      g = g * common;
    }
    const bool coprime = oracle::deg(oracle::qgcd(oracle::to_q(f), oracle::to_q(g))) == 0;
    EXPECT_EQ(cmaut::resultant(f, g) != 0, coprime) << f.to_string() << " ; " << g.to_string();
  }
}

TEST(Polyz, BareissDeterminant) {
  EXPECT_EQ(cmaut::bareiss_determinant({{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(cmaut::bareiss_determinant({{2, 0, 0}, {0, 3, 0}, {1, 1, 4}}), 24);
  EXPECT_EQ(cmaut::bareiss_determinant({{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(cmaut::bareiss_determinant({}), 1);
}
