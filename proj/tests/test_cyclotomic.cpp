#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "gelfand/cyclotomic.hpp"

using namespace gelfand;

namespace {

Cyclotomic random_element(std::mt19937& rng, int r) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c;
  for (int k = 0; k < euler_phi(r); ++k) c.emplace_back(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return Cyclotomic::from_coefficients(r, c);
}

}  // namespace

TEST(Cyclotomic, RootOfUnityZeroIsOne) { EXPECT_EQ(Cyclotomic::root_of_unity(4, 0), Cyclotomic(1)); }

TEST(Cyclotomic, RootsOfUnitySumToZero) {
  for (int r = 2; r <= 12; ++r) {
    Cyclotomic s;
    for (int k = 0; k < r; ++k) s += Cyclotomic::root_of_unity(r, k);
    EXPECT_TRUE(s.is_zero()) << "r=" << r;
  }
}

TEST(Cyclotomic, PolynomialsMatchKnownValues) {
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(euler_phi(12), 4);
}

TEST(Cyclotomic, RootsMultiplyByAddingExponents) {
  for (int r : {3, 4, 5, 6, 8, 12}) {
    for (int a = -r; a < 2 * r; a += 3) {
      for (int b = 0; b < r; ++b) {
        EXPECT_EQ(Cyclotomic::root_of_unity(r, a) * Cyclotomic::root_of_unity(r, b), Cyclotomic::root_of_unity(r, a + b));
      }
    }
  }
}

TEST(Cyclotomic, Conjugation) {
  EXPECT_EQ(Cyclotomic(1).conjugate(), Cyclotomic(1));
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  EXPECT_EQ(i.conjugate(), Cyclotomic::root_of_unity(4, 3));
  EXPECT_EQ(i.conjugate(), -i);
  std::mt19937 rng(7);
  for (int t = 0; t < 100; ++t) {
    const int r = 3 + t % 10;
    const Cyclotomic a = random_element(rng, r);
    EXPECT_EQ(a.conjugate().conjugate(), a);
    const Cyclotomic norm = a * a.conjugate();
    EXPECT_EQ(norm.conjugate(), norm);
  }
}

TEST(Cyclotomic, IsRational) {
  auto minus_one = Cyclotomic::root_of_unity(2, 1).is_rational();
  ASSERT_TRUE(minus_one.has_value());
  EXPECT_EQ(*minus_one, Rational(-1));
  EXPECT_FALSE(Cyclotomic::root_of_unity(3, 1).is_rational().has_value());
  // zeta_6 + zeta_6^5 = 1
  auto one = (Cyclotomic::root_of_unity(6, 1) + Cyclotomic::root_of_unity(6, 5)).is_rational();
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(*one, Rational(1));
}

TEST(Cyclotomic, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    const int r = 2 + t % 11;
    const Cyclotomic a = random_element(rng, r);
    const Cyclotomic b = random_element(rng, r);
    const Cyclotomic c = random_element(rng, r);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Cyclotomic, EmbeddingCoherence) {
  const Cyclotomic minus = Cyclotomic::root_of_unity(2, 1);
  const Cyclotomic w = Cyclotomic::root_of_unity(6, 1);
  EXPECT_EQ(minus.lifted(6) * w, minus * w);
  EXPECT_EQ(minus.lifted(6), Cyclotomic::root_of_unity(6, 3));
  EXPECT_EQ(Cyclotomic::root_of_unity(3, 1).lifted(12), Cyclotomic::root_of_unity(12, 4));
  // mixed orders lift to the lcm
  EXPECT_EQ((Cyclotomic::root_of_unity(4, 1) * Cyclotomic::root_of_unity(6, 1)).order(), 12);
  EXPECT_EQ(Cyclotomic::root_of_unity(4, 1) * Cyclotomic::root_of_unity(6, 1), Cyclotomic::root_of_unity(12, 5));
}

TEST(Cyclotomic, NormHasPositiveTrace) {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const int r = 3 + t % 9;
    const Cyclotomic a = random_element(rng, r);
    if (a.is_zero()) continue;
    const Cyclotomic norm = a * a.conjugate();
    EXPECT_FALSE(norm.is_zero());
    // trace over Q: sum of the Galois conjugates
    Cyclotomic trace;
    for (int k = 1; k < r; ++k) {
      if (std::gcd(k, r) != 1) continue;
      Cyclotomic image;
      for (std::size_t j = 0; j < norm.coeffs().size(); ++j) {
        image += Cyclotomic(norm.coeffs()[j]) * Cyclotomic::root_of_unity(r, static_cast<long long>(j) * k);
      }
      trace += image;
    }
    auto value = trace.is_rational();
    ASSERT_TRUE(value.has_value());
    EXPECT_GT(*value, 0);
  }
}

TEST(Cyclotomic, JsonRoundTripAndDisplay) {
  const Cyclotomic a = Cyclotomic(Rational(-2, 3)) * Cyclotomic::root_of_unity(8, 3) + Cyclotomic(5);
  EXPECT_EQ(Cyclotomic::from_json(a.to_json()), a);
  EXPECT_EQ(a.to_string(), "5 - 2/3*ζ8^3");
  EXPECT_EQ(Cyclotomic(0).to_string(), "0");
  EXPECT_THROW(Cyclotomic::from_json(nlohmann::json{{"order", 4}}), ParseError);
}

TEST(Cyclotomic, ConcurrentFieldConstruction) {
  std::vector<std::thread> pool;
  std::vector<Cyclotomic> results(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      Cyclotomic s;
      for (int k = 0; k < 30; ++k) s += Cyclotomic::root_of_unity(30, k);
      results[static_cast<std::size_t>(t)] = s;
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& s : results) EXPECT_TRUE(s.is_zero());
}
