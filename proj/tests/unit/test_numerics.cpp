// Copyright 2026 The Groves Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "groves/errors.hpp"
#include "groves/numerics.hpp"
#include "groves/rational.hpp"

namespace groves {
namespace {

TEST(RationalTest, CanonicalForm) {
  const Rational a(6, -8);
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 4);
  EXPECT_EQ(a.to_string(), "-3/4");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
  EXPECT_TRUE(Rational(10, 5).is_integer());
  EXPECT_EQ(Rational(0, 7), Rational(0));
}

TEST(RationalTest, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  Rational x(1);
  EXPECT_THROW(x /= Rational(0), std::domain_error);
}

TEST(RationalTest, ParseStrict) {
  EXPECT_EQ(Rational::parse("19/24"), Rational(19, 24));
  EXPECT_EQ(Rational::parse("-7/12"), Rational(-7, 12));
  EXPECT_EQ(Rational::parse("42"), Rational(42));
  EXPECT_EQ(Rational::parse("4/8").to_string(), "1/2");
  for (const char* bad : {"", "1/", "/2", "1.5", "+3", "1/0", "a", "1 /2", "--1", "1/-2"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(RationalTest, ArithmeticIsExact) {
  Rational sum;
  for (int k = 1; k <= 10; ++k) sum += Rational(1, k * (k + 1));
  EXPECT_EQ(sum, Rational(10, 11));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 7), Rational(1, 7));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(-Rational(2, 5), Rational(-2, 5));
  EXPECT_EQ(abs(Rational(-2, 5)), Rational(2, 5));
}

TEST(RationalTest, OrderingMatchesCrossMultiplication) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  for (int t = 0; t < 2000; ++t) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    EXPECT_EQ(x < y, a * d < c * b);
    EXPECT_EQ(x == y, a * d == c * b);
  }
}

TEST(RationalTest, RoundTripsThroughString) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 97);
  for (int t = 0; t < 500; ++t) {
    const Rational x(num(rng), den(rng));
    EXPECT_EQ(Rational::parse(x.to_string()), x);
    std::ostringstream s;
    s << x;
    EXPECT_EQ(s.str(), x.to_string());
  }
}

TEST(OrderStatisticTest, CountsMultiplicity) {
  const std::vector<Rational> v{2, 3, 2, 0};
  EXPECT_EQ(order_statistic(v, 1), Rational(3));
  EXPECT_EQ(order_statistic(v, 2), Rational(2));
  EXPECT_EQ(order_statistic(v, 3), Rational(2));
  EXPECT_EQ(order_statistic(v, 4), Rational(0));
  EXPECT_THROW(order_statistic(v, 0), ContractViolation);
  EXPECT_THROW(order_statistic(v, 5), ContractViolation);
  const SortedVector s(v);
  EXPECT_EQ(s.at(1), Rational(3));
  EXPECT_EQ(s.at(4), Rational(0));
  EXPECT_THROW(s.at(5), ContractViolation);
}

TEST(OrderStatisticTest, AgreesWithFullSortOnRandomInput) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> val(-5, 5);
  for (int t = 0; t < 300; ++t) {
    std::vector<Rational> v(1 + t % 7);
    for (auto& x : v) x = Rational(val(rng), 1 + (t % 3));
    std::vector<Rational> sorted = v;
    std::sort(sorted.begin(), sorted.end(), [](const Rational& a, const Rational& b) { return b < a; });
    for (std::size_t j = 1; j <= v.size(); ++j) EXPECT_EQ(order_statistic(v, j), sorted[j - 1]);
  }
}

TEST(BinomialTest, PascalTriangle) {
  for (unsigned long n = 1; n <= 20; ++n) {
    for (unsigned long k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    EXPECT_EQ(binomial(n, 0), 1);
    EXPECT_EQ(binomial(n, n), 1);
    EXPECT_EQ(binomial(n, n + 1), 0);
  }
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
}

TEST(JoinTest, CanonicalStrings) {
  const std::vector<Rational> v{Rational(1, 2), Rational(3), Rational(-2, 6)};
  EXPECT_EQ(join(v), "1/2,3,-1/3");
  EXPECT_EQ(join(v, " "), "1/2 3 -1/3");
}

}  // namespace
}  // namespace groves
