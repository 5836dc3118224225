#include <cmath>
#include <complex>
#include <vector>

#include <gtest/gtest.h>

#include "satake/params.hpp"
#include "satake/random.hpp"
#include "satake/serialize.hpp"
#include "satake/testing/oracles.hpp"

using namespace satake;
using namespace std::complex_literals;

namespace {

std::vector<Complex> vals(const SpectralParams& p) { return {p.values().begin(), p.values().end()}; }

}  // namespace

TEST(SpectralParams, RejectsBadInput)
{
  EXPECT_THROW(SpectralParams({}), std::invalid_argument);
  EXPECT_THROW(SpectralParams({0.0}), std::invalid_argument);
  EXPECT_THROW(SpectralParams({Complex(NAN, 0)}), std::invalid_argument);
  EXPECT_THROW(SpectralParams({1.0}, 1), std::invalid_argument);
  EXPECT_NO_THROW(SpectralParams({1.0}, 2));
}

TEST(SortByModulus, Examples)
{
  EXPECT_EQ(vals(sort_by_modulus(SpectralParams({0.5, 2.0, 1.0}))), (std::vector<Complex>{2.0, 1.0, 0.5}));
  EXPECT_EQ(vals(sort_by_modulus(SpectralParams({1.0, 1.0, 1.0}))), (std::vector<Complex>{1.0, 1.0, 1.0}));
  EXPECT_EQ(vals(sort_by_modulus(SpectralParams({1i, 3.0, 1.0 / 3}))), (std::vector<Complex>{3.0, 1i, 1.0 / 3}));
}

TEST(SortByModulus, StableAndRelabelsPairing)
{
  const auto u = make_unitary_class(SpectralParams({0.5, 1i, 2.0, -1i}), 1e-12);
  ASSERT_TRUE(u);
  const auto s = sort_by_modulus(*u);
  EXPECT_EQ(vals(s.params()), (std::vector<Complex>{2.0, 1i, -1i, 0.5}));
  EXPECT_EQ(std::vector<std::size_t>(s.pairing().begin(), s.pairing().end()), (std::vector<std::size_t>{3, 1, 2, 0}));
}

TEST(UnitaryPairing, Examples)
{
  const auto sigma = check_unitary_pairing(SpectralParams({2.0, 0.5, 1i, -1i}), 1e-12);
  ASSERT_TRUE(sigma);
  EXPECT_EQ(*sigma, (std::vector<std::size_t>{1, 0, 2, 3}));

  const auto id = check_unitary_pairing(SpectralParams({1.0, 1.0}), 0.0);
  ASSERT_TRUE(id);
  EXPECT_EQ(*id, (std::vector<std::size_t>{0, 1}));

  EXPECT_FALSE(check_unitary_pairing(SpectralParams({2.0, 2.0}), 1e-12));
}

// The search must agree with an exhaustive scan of all n! permutations on
// whether any involutive pairing exists.
TEST(UnitaryPairing, AgreesWithExhaustiveScan)
{
  SplitMix64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    std::vector<Complex> v;
    for (std::size_t i = 0; i < n; ++i) {
      // Values drawn from a small set so that pairings are common but not certain.
      const double mods[] = {0.5, 1.0, 2.0};
      const Complex phases[] = {1.0, 1i, -1.0};
      v.push_back(mods[rng.below(3)] * phases[rng.below(3)]);
    }
    const SpectralParams p(v);
    bool exists = false;
    for (const auto& perm : oracle::all_pairings(p, 1e-12)) {
      bool involution = true;
      for (std::size_t i = 0; i < n; ++i)
        involution = involution && perm[perm[i]] == i;
      exists = exists || involution;
    }
    const auto found = check_unitary_pairing(p, 1e-12);
    EXPECT_EQ(found.has_value(), exists) << "trial " << trial;
    if (found) {
      EXPECT_NO_THROW(UnitaryClass(p, *found, 1e-12));
    }
  }
}

TEST(UnitaryClass, ValidatesInvariants)
{
  const SpectralParams p({2.0, 0.5});
  EXPECT_THROW(UnitaryClass(p, {0, 1}, 1e-12), std::invalid_argument);  // 2*2 != 1
  EXPECT_THROW(UnitaryClass(p, {1, 1}, 1e-12), std::invalid_argument);  // not a permutation
  EXPECT_THROW(UnitaryClass(p, {1}, 1e-12), std::invalid_argument);
  EXPECT_NO_THROW(UnitaryClass(p, {1, 0}, 1e-12));
}

TEST(Sampler, Examples)
{
  for (std::uint64_t seed : {0ull, 1ull, 12345ull}) {
    const auto one = sample_unitary_class(1, 50.0, seed);
    EXPECT_NEAR(std::abs(one.params()[0]), 1.0, 1e-15);
    const auto two = sample_unitary_class(2, 1.0, seed);
    for (const Complex& z : two.params().values())
      EXPECT_NEAR(std::abs(z), 1.0, 1e-12);
  }
  const auto u = sample_unitary_class(4, 10.0, 42);
  EXPECT_TRUE(check_unitary_pairing(u.params(), 1e-9));
  int large = 0;
  for (const Complex& z : u.params().values())
    large += std::abs(z) > 1.0 + 1e-9;
  EXPECT_LE(large, 2);
}

TEST(Sampler, RespectsBoundsOverManySeeds)
{
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 1 + seed % 9;
    const auto u = sample_unitary_class(n, 30.0, seed);
    int large = 0;
    for (const Complex& z : u.params().values()) {
      EXPECT_LE(std::abs(z), 30.0 * (1 + 1e-12));
      EXPECT_GE(std::abs(z), 1 / 30.0 * (1 - 1e-12));
      large += std::abs(z) > 1.0 + 1e-9;
    }
    EXPECT_LE(large, static_cast<int>(n / 2));
  }
}

TEST(Sampler, DeterministicSerialization)
{
  for (std::uint64_t seed : {3ull, 7ull, 1ull << 40}) {
    const auto a = to_json(sample_unitary_class(6, 100.0, seed)).dump();
    const auto b = to_json(sample_unitary_class(6, 100.0, seed)).dump();
    EXPECT_EQ(a, b);
  }
  EXPECT_NE(to_json(sample_unitary_class(6, 100.0, 3)).dump(), to_json(sample_unitary_class(6, 100.0, 4)).dump());
}

TEST(Sampler, DerivedStreamsDiffer)
{
  EXPECT_NE(derive_seed(7, 0), derive_seed(7, 1));
  EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
  EXPECT_EQ(derive_seed(7, 5), derive_seed(7, 5));
}

TEST(Serialization, RoundTripIsBitExact)
{
  const auto u = sample_unitary_class(5, 1e6, 11).params().with_prime_norm(7);
  const auto back = spectral_params_from_json(to_json(u));
  ASSERT_EQ(back.rank(), u.rank());
  for (std::size_t i = 0; i < u.rank(); ++i) {
    EXPECT_EQ(back[i].real(), u[i].real());
    EXPECT_EQ(back[i].imag(), u[i].imag());
  }
  EXPECT_EQ(back.prime_norm(), std::optional<std::int64_t>(7));

  const auto cls = sample_unitary_class(4, 10.0, 2);
  const auto cls_back = unitary_class_from_json(to_json(cls));
  EXPECT_EQ(to_json(cls_back).dump(), to_json(cls).dump());
}

TEST(Serialization, AcceptsDecimalStrings)
{
  nlohmann::json j{{"n", 2}, {"prime_norm", nullptr}};
  j["values"] = nlohmann::json::array({nlohmann::json::array({"2.0", 0}), nlohmann::json::array({"0.5", "0"})});
  const auto p = spectral_params_from_json(j);
  EXPECT_EQ(p[0], Complex(2.0));
  EXPECT_EQ(p[1], Complex(0.5));
}

TEST(Elementary, Examples)
{
  const SpectralParams p({2.0, 0.5, 1i, -1i});
  EXPECT_NEAR(std::abs(exterior_trace(p, 2) - Complex(2.0)), 0.0, 1e-15);
  EXPECT_EQ(exterior_trace(p, 0), Complex(1.0));
  EXPECT_EQ(exterior_trace(SpectralParams({3.0 + 1i}), 1), 3.0 + 1i);
  EXPECT_THROW(exterior_trace(p, 5), std::out_of_range);
}

TEST(Elementary, MatchesSubsetOracle)
{
  SplitMix64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.below(7);
    std::vector<Complex> v;
    for (std::size_t i = 0; i < n; ++i)
      v.push_back(std::polar(rng.uniform(0.2, 3.0), rng.angle()));
    const auto e = elementary_symmetric<Complex>(v);
    for (std::size_t j = 0; j <= n; ++j)
      EXPECT_LT(std::abs(e[j] - oracle::elementary_by_subsets<Complex>(v, j)), 1e-11 * (1 + std::abs(e[j])));
  }
}

// For a unitary class, Tr wedge^j A = conj(Tr wedge^{n-j} A) * det A.
TEST(Elementary, DualityOnUnitaryClasses)
{
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const auto u = sample_unitary_class(n, 5.0, seed);
    const auto e = elementary_symmetric<Complex>(u.params().values());
    for (std::size_t j = 0; j <= n; ++j) {
      const Complex dual = std::conj(e[n - j]) * e[n];
      EXPECT_LT(std::abs(e[j] - dual), 1e-9 * (1 + std::abs(e[j]))) << "n=" << n << " j=" << j;
    }
  }
}

TEST(Sym2, Examples)
{
  EXPECT_NEAR(std::abs(sym2_trace(SpectralParams({1.0, 1.0})) - 3.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(sym2_trace(SpectralParams({2.0})) - 4.0), 0, 1e-15);
  EXPECT_NEAR(std::abs(sym2_trace(SpectralParams({2.0, 0.5})) - 5.25), 0, 1e-15);
}
