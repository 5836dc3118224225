#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "satake/dirichlet.hpp"
#include "satake/random.hpp"
#include "satake/testing/oracles.hpp"

using namespace satake;
using namespace std::complex_literals;

namespace {

CMSeries ones(std::int64_t p_max = 1000) { return CMSeries::constant(1.0, p_max, 1.0); }

}  // namespace

TEST(Primes, SmallValues)
{
  const std::vector<std::int64_t> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  std::vector<std::int64_t> found;
  for (std::int64_t k = -3; k < 30; ++k)
    if (is_prime(k))
      found.push_back(k);
  EXPECT_EQ(found, small);
  const auto spf = smallest_prime_factors(100);
  for (std::int64_t k = 2; k <= 100; ++k)
    EXPECT_EQ(spf[static_cast<std::size_t>(k)] == k, is_prime(k));
}

TEST(CMSeries, Validation)
{
  EXPECT_THROW(CMSeries({{4, 1.0}}, 10), std::invalid_argument);
  EXPECT_THROW(CMSeries({{13, 1.0}}, 10), std::invalid_argument);
  EXPECT_THROW(CMSeries({{3, -1.0}}, 10), std::invalid_argument);
  EXPECT_THROW(CMSeries({}, 1), std::invalid_argument);
  const CMSeries s({{3, 2.0}}, 10, 0.5);
  EXPECT_EQ(s.at_prime(3), 2.0);
  EXPECT_EQ(s.at_prime(5), 0.5);
  EXPECT_THROW(s.at_prime(11), std::out_of_range);
  EXPECT_EQ(CMSeries({}, 10, 1.0, 0.25).at_prime(11), 0.25);
}

TEST(SeriesLiteral, Parses)
{
  const auto s = parse_series_literal("2:2,3:1.5", 100);
  EXPECT_EQ(s.at_prime(2), 2.0);
  EXPECT_EQ(s.at_prime(3), 1.5);
  EXPECT_EQ(s.at_prime(5), 1.0);
  EXPECT_EQ(parse_series_literal("", 10, 0.0).at_prime(7), 0.0);
  EXPECT_THROW(parse_series_literal("2", 10), std::invalid_argument);
  EXPECT_THROW(parse_series_literal("2:x", 10), std::invalid_argument);
  EXPECT_THROW(parse_series_literal("2:1,2:3", 10), std::invalid_argument);
  EXPECT_THROW(parse_series_literal("9:1", 10), std::invalid_argument);
}

TEST(Coefficient, Examples)
{
  for (std::int64_t n = 1; n <= 50; ++n)
    EXPECT_EQ(coefficient(ones(), n), 1.0);
  EXPECT_EQ(coefficient(CMSeries({{2, 3.0}}, 10), 8), 27.0);
  EXPECT_EQ(coefficient(CMSeries({{2, 2.0}, {3, 5.0}}, 10), 12), 20.0);
}

TEST(Coefficient, CompletelyMultiplicative)
{
  const CMSeries s({{2, 1.5}, {3, 0.0}, {5, 2.0}, {7, 0.3}}, 50, 0.9, 1.1);
  const auto table = coefficient_table(s, 3000);
  for (std::int64_t m = 1; m <= 50; ++m)
    for (std::int64_t n = 1; n <= 60; ++n)
      EXPECT_NEAR(table[static_cast<std::size_t>(m * n)],
                  table[static_cast<std::size_t>(m)] * table[static_cast<std::size_t>(n)],
                  1e-12 * std::max(1.0, table[static_cast<std::size_t>(m * n)]));
  EXPECT_EQ(table[1], 1.0);
}

TEST(PartialSum, Examples)
{
  EXPECT_EQ(partial_sum(ones(), 3), 3.0);
  EXPECT_EQ(partial_sum(ones(), 8, true), 6.0);
  EXPECT_EQ(partial_sum(CMSeries({{2, 2.0}}, 100, 1.0, 1.0), 4), 8.0);
  EXPECT_THROW(partial_sum(ones(), 0), std::invalid_argument);
}

TEST(DivisorTau, Examples)
{
  EXPECT_EQ(divisor_tau(12), 6);
  EXPECT_EQ(divisor_tau(1), 1);
  for (std::int64_t p : {2, 3, 97, 101})
    EXPECT_EQ(divisor_tau(p * p), 3);
}

TEST(DivisorTau, SieveAndFactorisationMatchScan)
{
  const auto table = divisor_table(2000);
  for (std::int64_t n = 1; n <= 2000; ++n) {
    const auto expected = oracle::divisors_by_scan(n);
    EXPECT_EQ(divisor_tau(n), expected);
    EXPECT_EQ(table[static_cast<std::size_t>(n)], expected);
  }
}

TEST(DivisorBound, HalfExponentIsSqrtThree)
{
  EXPECT_NEAR(divisor_bound_constant(0.5, 100000), std::sqrt(3.0), 1e-14);
  EXPECT_EQ(divisor_bound_constant(0.5, 1), 1.0);
}

TEST(SquareIdentity, Examples)
{
  const auto three = square_identity_check(ones(), 3);
  EXPECT_EQ(three.square, 9.0);
  EXPECT_EQ(three.restricted, 9.0);
  EXPECT_EQ(three.weighted, 23.0);

  const auto one = square_identity_check(ones(), 1);
  EXPECT_EQ(one.square, 1.0);
  EXPECT_EQ(one.restricted, 1.0);
  EXPECT_EQ(one.weighted, 1.0);

  const auto spike = square_identity_check(CMSeries({{2, 2.0}}, 100, 0.0, 0.0), 2);
  EXPECT_EQ(spike.square, 9.0);
  EXPECT_EQ(spike.restricted, 9.0);
}

TEST(SquareIdentity, HoldsForNonnegativeSeries)
{
  SplitMix64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::map<std::int64_t, double> over;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13})
      over[p] = rng.uniform(0.0, 2.5);
    const CMSeries s(over, 13, rng.uniform(0.0, 1.5), rng.uniform(0.0, 1.5));
    const std::int64_t x = 1 + static_cast<std::int64_t>(rng.below(120));
    const auto id = square_identity_check(s, x);
    EXPECT_NEAR(id.square, id.restricted, 1e-9 * id.square);
    EXPECT_LE(id.restricted, id.weighted * (1 + 1e-12));
  }
}

TEST(DyadicTail, Examples)
{
  const auto s = ones();
  // Direct evaluation of the same dyadic blocks.
  double direct = 0.0;
  for (std::int64_t m = 1; m <= 1024; m *= 2)
    direct += std::pow(static_cast<double>(m), -2.0) * static_cast<double>(2 * m);
  EXPECT_NEAR(dyadic_tail_sum(s, 2.0, 1024), direct, 1e-12);
  EXPECT_GE(dyadic_tail_sum(s, 2.0, 1024), dirichlet_partial_value(s, 2.0, 2047));

  EXPECT_NEAR(dyadic_tail_sum(s, 40.0, 1 << 20), 2.0, 1e-9);
  EXPECT_TRUE(std::isfinite(dyadic_tail_sum(s, 1.5, 1)));
  EXPECT_NEAR(dyadic_tail_sum(s, 1.5, 1), 2.0, 0.0);
  EXPECT_THROW(dyadic_tail_sum(s, 1.0, 10), std::invalid_argument);
}

TEST(EulerProduct, MatchesDirichletSum)
{
  EXPECT_NEAR(euler_product_value(ones(10000), 2.0), std::numbers::pi * std::numbers::pi / 6, 1e-12);
  const CMSeries s({{2, 1.5}, {3, 0.5}}, 3, 1.0, 0.0);  // finitely many primes
  const double closed = 1.0 / (1.0 - 1.5 / 8.0) / (1.0 - 0.5 / 27.0);
  EXPECT_NEAR(euler_product_value(s, 3.0), closed, 1e-14);
  EXPECT_NEAR(dirichlet_partial_value(s, 3.0, 2000000), closed, 1e-9);
  EXPECT_THROW(euler_product_value(CMSeries::constant(1.0, 10), 2.0), std::invalid_argument);
}

TEST(MaxsqEulerFactor, Examples)
{
  const auto unit = *make_unitary_class(SpectralParams({1.0, 1i, -1.0}, 2), 1e-12);
  EXPECT_NEAR(maxsq_euler_factor(unit, 2.0), 4.0 / 3.0, 1e-15);

  const double s2 = std::sqrt(2.0);
  const auto u = *make_unitary_class(SpectralParams({s2, 1.0 / s2}, 4), 1e-12);
  EXPECT_NEAR(maxsq_euler_factor(u, 1.0), 2.0, 1e-12);

  const auto edge = *make_unitary_class(SpectralParams({2.0, 0.5}, 4), 1e-12);
  EXPECT_THROW(maxsq_euler_factor(edge, 1.0), std::domain_error);
}

// Closed form against a term-by-term geometric sum whose length adapts to the ratio.
TEST(MaxsqEulerFactor, MatchesTruncatedSeries)
{
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::int64_t np = 2 + static_cast<std::int64_t>(seed % 30);
    const auto u = sample_unitary_class(2 + seed % 4, 3.0, seed);
    const UnitaryClass at(u.params().with_prime_norm(np), {u.pairing().begin(), u.pairing().end()}, u.tolerance());
    const double sigma = 2.0 * std::log(3.0) / std::log(static_cast<double>(np)) + 0.1;
    const double ratio = max_modulus_sq(at.params()) * std::pow(static_cast<double>(np), -sigma);
    ASSERT_LT(ratio, 1.0);
    EXPECT_NEAR(maxsq_euler_factor(at, sigma), oracle::truncated_geometric(ratio), 1e-12 * maxsq_euler_factor(at, sigma));
  }
}

TEST(LinearExtraction, Examples)
{
  const auto a = linear_extraction_check(3.0, 0.1);
  EXPECT_NEAR(a.geometric, 1 / 0.7, 1e-15);
  EXPECT_NEAR(a.extracted, 1.3 / 0.91, 1e-15);
  const auto b = linear_extraction_check(0.0, 0.5);
  EXPECT_EQ(b.geometric, 1.0);
  EXPECT_EQ(b.extracted, 1.0);
  const auto c = linear_extraction_check(1.0, 0.5);
  EXPECT_EQ(c.geometric, 2.0);
  EXPECT_EQ(c.extracted, 2.0);
  EXPECT_THROW(linear_extraction_check(2.0, 0.5), std::invalid_argument);
}

TEST(RamifiedBound, Examples)
{
  const auto one = ramified_factor_bound(4, 1);
  EXPECT_DOUBLE_EQ(one.delta, 0.5);
  EXPECT_NEAR(one.factor, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(one.bound, 1.5, 1e-15);
  EXPECT_TRUE(one.holds);

  const auto two = ramified_factor_bound(2, 2);
  const double y = std::pow(2.0, -0.2);
  EXPECT_NEAR(two.factor, 1 / (1 - y * y), 1e-14);
  EXPECT_NEAR(two.bound, 1 + y, 1e-14);
  EXPECT_EQ(two.holds, two.factor <= two.bound);
  EXPECT_FALSE(two.holds);

  EXPECT_TRUE(ramified_factor_bound(1000000007, 2).holds);
}

// The comparison flips exactly at Np = phi^{n^2 + 1}.
TEST(RamifiedBound, ThresholdIsGoldenPower)
{
  const std::vector<std::int64_t> expected{3, 12, 123, 3572};
  for (int n = 1; n <= 4; ++n) {
    const auto t = ramified_threshold(n);
    EXPECT_EQ(t, expected[static_cast<std::size_t>(n - 1)]);
    EXPECT_FALSE(ramified_factor_bound(t - 1, n).holds);
    for (std::int64_t np = t; np < t + 2000; ++np)
      ASSERT_TRUE(ramified_factor_bound(np, n).holds) << "n=" << n << " Np=" << np;
    const double golden = std::pow(std::numbers::phi, n * n + 1.0);
    EXPECT_LT(static_cast<double>(t - 1), golden);
    EXPECT_GE(static_cast<double>(t), golden);
  }
}

TEST(RamifiedBound, SquaredDecayFormHoldsEverywhere)
{
  for (int n = 1; n <= 6; ++n)
    for (std::int64_t np = 2; np < 5000; ++np) {
      const auto r = ramified_factor_bound(np, n);
      EXPECT_LE(r.factor, 1 + r.c_delta * std::pow(static_cast<double>(np), -2 * r.delta) + 1e-12);
    }
}

TEST(Conductor, Examples)
{
  EXPECT_EQ(archimedean_factor(std::vector<Complex>{}), 1.0);
  EXPECT_EQ(archimedean_factor(std::vector<Complex>{0.0, 0.0}), 1.0);
  EXPECT_NEAR(archimedean_factor(std::vector<Complex>{3.0, Complex(0, 4)}), 20.0, 1e-14);

  const auto c1 = Conductor::make(1, {});
  EXPECT_EQ(rankin_conductor_bound(c1, 1, c1, 1).analytic, 1.0);
  const auto a = Conductor::make(10, {});
  const auto b = Conductor::make(100, {});
  EXPECT_NEAR(rankin_conductor_bound(a, 2, b, 3).analytic, 1e7, 1e-3);
  EXPECT_NEAR(rankin_conductor_bound(a, 2, b, 3).arithmetic, 1e7, 1e-3);
  EXPECT_THROW(Conductor::make(0, {}), std::invalid_argument);
}
