#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "satake/random.hpp"
#include "satake/symfunc.hpp"
#include "satake/testing/oracles.hpp"

using namespace satake;
using namespace std::complex_literals;

namespace {

std::vector<std::vector<int>> shapes(const std::vector<Partition>& ps)
{
  std::vector<std::vector<int>> out;
  for (const auto& p : ps)
    out.emplace_back(p.parts().begin(), p.parts().end());
  return out;
}

std::vector<GaussianRational> rational_point(SplitMix64& rng, std::size_t n)
{
  std::vector<GaussianRational> x;
  for (std::size_t i = 0; i < n; ++i)
    x.emplace_back(Rational(static_cast<int>(rng.below(19)) - 9, 1 + static_cast<int>(rng.below(6))),
                   Rational(static_cast<int>(rng.below(19)) - 9, 1 + static_cast<int>(rng.below(6))));
  return x;
}

SpectralParams conj_params(const SpectralParams& p)
{
  std::vector<Complex> v;
  for (const Complex& z : p.values())
    v.push_back(std::conj(z));
  return SpectralParams(v);
}

}  // namespace

TEST(Partition, Validation)
{
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_EQ(Partition({3, 1, 1}).weight(), 5);
  EXPECT_EQ(Partition().length(), 0u);
}

TEST(Partitions, Examples)
{
  EXPECT_EQ(shapes(partitions(3, 2)), (std::vector<std::vector<int>>{{3}, {2, 1}}));
  EXPECT_EQ(shapes(partitions(0, 5)), (std::vector<std::vector<int>>{{}}));
  EXPECT_EQ(partitions(4, 4).size(), 5u);
}

TEST(Partitions, CountsMatchRecurrence)
{
  // p(r, at most n parts) = p(r, n-1) + p(r-n, n).
  std::vector<std::vector<long>> p(21, std::vector<long>(9, 0));
  for (int n = 0; n <= 8; ++n)
    p[0][static_cast<std::size_t>(n)] = 1;
  for (int r = 1; r <= 20; ++r)
    for (int n = 1; n <= 8; ++n)
      p[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)] =
          p[static_cast<std::size_t>(r)][static_cast<std::size_t>(n - 1)] +
          (r >= n ? p[static_cast<std::size_t>(r - n)][static_cast<std::size_t>(n)] : 0);
  for (int r = 0; r <= 20; ++r)
    for (int n = 1; n <= 8; ++n)
      EXPECT_EQ(static_cast<long>(partitions(r, n).size()), p[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)]);
}

TEST(SchurEval, TooManyPartsThrows)
{
  const std::vector<Complex> x{1.0, 2.0};
  EXPECT_THROW(schur_eval<Complex>(Partition({1, 1, 1}), x), std::invalid_argument);
}

TEST(SchurEval, ExactMatchesTableauxOracle)
{
  SplitMix64 rng(17);
  for (int r = 0; r <= 6; ++r)
    for (std::size_t n = 1; n <= 4; ++n)
      for (const Partition& lambda : partitions(r, static_cast<int>(n))) {
        const auto x = rational_point(rng, n);
        const std::vector<int> shape(lambda.parts().begin(), lambda.parts().end());
        const auto det = schur_eval<GaussianRational>(lambda, std::span<const GaussianRational>(x));
        const auto tab = oracle::schur_by_tableaux<GaussianRational>(shape, x);
        EXPECT_TRUE(det == tab) << lambda.to_string();
      }
}

TEST(SchurEval, FloatAndExactModesAgree)
{
  SplitMix64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Complex> x;
    for (int i = 0; i < 4; ++i)
      x.push_back(std::polar(rng.uniform(0.3, 2.0), rng.angle()));
    for (const Partition& lambda : partitions(5, 4)) {
      const Complex f = schur_eval(lambda, x, false);
      const Complex e = schur_eval(lambda, x, true);
      EXPECT_LT(std::abs(f - e), 1e-10 * (1 + std::abs(e)));
    }
  }
}

TEST(SchurEval, ZeroPaddingInvariance)
{
  const std::vector<Complex> x{2.0, 0.5 + 1i, -1.0};
  std::vector<Complex> padded = x;
  padded.push_back(0.0);
  padded.push_back(0.0);
  for (int r = 0; r <= 6; ++r)
    for (const Partition& lambda : partitions(r, 3))
      EXPECT_LT(std::abs(schur_eval<Complex>(lambda, x) - schur_eval<Complex>(lambda, padded)), 1e-10);
  // Partitions longer than the nonzero support vanish.
  EXPECT_LT(std::abs(schur_eval<Complex>(Partition({1, 1, 1, 1}), padded)), 1e-12);
}

TEST(RankinCoefficient, Examples)
{
  const SpectralParams a({2.0, 0.5 + 1i, -1i});
  const SpectralParams b({1.0 + 1i, 3.0, 0.25});
  const Complex sa = 2.0 + 0.5 + 1i - 1i, sb = 1.0 + 1i + 3.0 + 0.25;
  EXPECT_LT(std::abs(rankin_coefficient(a, b, 1) - sa * sb), 1e-12);
  EXPECT_EQ(rankin_coefficient(a, b, 0), Complex(1.0));
  EXPECT_LT(std::abs(rankin_coefficient(SpectralParams({1.0, 1.0}), SpectralParams({1.0, 1.0}), 2) - 10.0), 1e-12);
}

TEST(RankinCoefficient, PadsShorterInput)
{
  const std::vector<Complex> a{2.0, 3.0};
  const std::vector<Complex> b{1.0, -1.0, 0.5};
  const Complex lhs = rankin_coefficient<Complex>(a, b, 3);
  const Complex rhs = euler_expand<Complex>(a, b, 3)[3];
  EXPECT_LT(std::abs(lhs - rhs), 1e-10 * std::abs(rhs));
}

TEST(EulerExpand, Examples)
{
  const auto h = euler_expand(SpectralParams({1.0, 1.0}), SpectralParams({1.0, 1.0}), 2);
  EXPECT_LT(std::abs(h[2] - 10.0), 1e-12);
  EXPECT_EQ(h[0], Complex(1.0));
}

TEST(EulerExpand, CauchyIdentityExact)
{
  SplitMix64 rng(23);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int r = 0; r <= 6; ++r) {
      const auto a = rational_point(rng, n);
      const auto b = rational_point(rng, n);
      EXPECT_TRUE(rankin_coefficient<GaussianRational>(a, b, r) == euler_expand<GaussianRational>(a, b, r)[static_cast<std::size_t>(r)])
          << "n=" << n << " r=" << r;
    }
}

TEST(SelfPair, Examples)
{
  const SpectralParams p({3.0 + 1i, -0.5, 2i});
  EXPECT_NEAR(self_pair_coefficient(p, 1), std::norm(Complex(3.0 + 1i - 0.5 + 2i)), 1e-12);
  EXPECT_NEAR(self_pair_coefficient(SpectralParams({1.0, 1.0}), 1), 4.0, 1e-12);
  EXPECT_NEAR(self_pair_coefficient(SpectralParams({2.0, 0.5}), 2), 28.5625, 1e-12);
}

TEST(MonomialCount, Examples)
{
  EXPECT_EQ(monomial_count(2, 1), 2);
  EXPECT_EQ(monomial_count(4, 2), 10);
  EXPECT_EQ(monomial_count(1, 7), 1);
  EXPECT_THROW(monomial_count(0, 1), std::invalid_argument);
}

TEST(Domination, Examples)
{
  const auto flat = coefficient_domination_check(SpectralParams({1.0, 1.0}), 1);
  EXPECT_NEAR(flat.value, 4.0, 1e-12);
  EXPECT_NEAR(flat.bound, 4.0, 1e-12);
  EXPECT_TRUE(flat.holds());

  const auto two = coefficient_domination_check(SpectralParams({2.0, 0.5}), 1);
  EXPECT_NEAR(two.value, 6.25, 1e-12);
  EXPECT_NEAR(two.bound, 16.0, 1e-12);

  for (int r = 0; r <= 6; ++r) {
    const auto one = coefficient_domination_check(SpectralParams({0.7 - 2i}), r);
    EXPECT_NEAR(one.value, one.bound, 1e-9 * one.bound);
  }
}

TEST(Domination, HoldsOnSampledClasses)
{
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto p = sample_unitary_class(1 + seed % 5, 20.0, seed).params();
    for (int r = 0; r <= 5; ++r) {
      const auto c = coefficient_domination_check(p, r);
      EXPECT_GE(c.value, 0.0);
      EXPECT_TRUE(c.holds()) << "seed " << seed << " r " << r;
    }
  }
}

TEST(CauchySchwarz, Examples)
{
  const auto r0 = cauchy_schwarz_check(SpectralParams({2.0, 1i}), SpectralParams({3.0}), 0);
  EXPECT_DOUBLE_EQ(r0.value, 1.0);
  EXPECT_DOUBLE_EQ(r0.bound, 1.0);

  const SpectralParams real({2.0, -0.5, 1.5});
  const auto same = cauchy_schwarz_check(real, real, 4);
  EXPECT_NEAR(same.value, same.bound, 1e-10 * same.bound);

  // Complex parameters reach equality against their conjugates.
  const SpectralParams z({2.0 + 1i, -0.5i, 1.5});
  const auto paired = cauchy_schwarz_check(z, conj_params(z), 4);
  EXPECT_NEAR(paired.value, paired.bound, 1e-10 * paired.bound);

  const auto a = sample_unitary_class(3, 10.0, 1).params();
  const auto b = sample_unitary_class(3, 10.0, 2).params();
  EXPECT_TRUE(cauchy_schwarz_check(a, b, 4).holds());
}
