#ifndef SATAKE_DIRICHLET_HPP
#define SATAKE_DIRICHLET_HPP

// Completely multiplicative Dirichlet series with nonnegative coefficients,
// local Euler factors, and conductor arithmetic.
//
// Ideals are modeled over the rationals: N(n) = n, prime ideals are rational
// primes.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "satake/majorization.hpp"
#include "satake/params.hpp"

namespace satake {

inline bool is_prime(std::int64_t n)
{
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// lambda(n) = prod_p lambda(p)^{v_p(n)}.
///
/// Prime values are explicit overrides, `default_value` for other primes up
/// to p_max, and `tail_value` beyond p_max. Without a tail value, asking for
/// a coefficient with a prime factor above p_max is an error.
class CMSeries {
 public:
  CMSeries(std::map<std::int64_t, double> overrides, std::int64_t p_max, double default_value = 1.0,
           std::optional<double> tail_value = std::nullopt)
      : overrides_(std::move(overrides)), p_max_(p_max), default_value_(default_value), tail_value_(tail_value)
  {
    if (p_max_ < 2)
      throw std::invalid_argument("CMSeries: p_max must be >= 2");
    check_value(default_value_, "default value");
    if (tail_value_)
      check_value(*tail_value_, "tail value");
    for (const auto& [p, v] : overrides_) {
      if (!is_prime(p))
        throw std::invalid_argument("CMSeries: " + std::to_string(p) + " is not prime");
      if (p > p_max_)
        throw std::invalid_argument("CMSeries: prime " + std::to_string(p) + " exceeds p_max");
      check_value(v, "prime value");
    }
  }

  /// lambda(p) = value for every prime up to p_max.
  static CMSeries constant(double value, std::int64_t p_max, std::optional<double> tail_value = std::nullopt)
  {
    return CMSeries({}, p_max, value, tail_value);
  }

  double at_prime(std::int64_t p) const
  {
    if (p > p_max_) {
      if (!tail_value_)
        throw std::out_of_range("CMSeries: prime " + std::to_string(p) + " lies beyond p_max = " +
                                std::to_string(p_max_) + " and no tail value is set");
      return *tail_value_;
    }
    auto it = overrides_.find(p);
    return it != overrides_.end() ? it->second : default_value_;
  }

  std::int64_t p_max() const { return p_max_; }
  double default_value() const { return default_value_; }
  std::optional<double> tail_value() const { return tail_value_; }
  const std::map<std::int64_t, double>& overrides() const { return overrides_; }

 private:
  static void check_value(double v, const char* what)
  {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string("CMSeries: ") + what + " must be finite and nonnegative");
  }

  std::map<std::int64_t, double> overrides_;
  std::int64_t p_max_;
  double default_value_;
  std::optional<double> tail_value_;
};

/// Parses "2:2,3:1.5" (comma-separated prime:value pairs).
inline CMSeries parse_series_literal(const std::string& literal, std::int64_t p_max, double default_value = 1.0,
                                     std::optional<double> tail_value = std::nullopt)
{
  std::map<std::int64_t, double> overrides;
  std::stringstream ss(literal);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos)
      continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("series literal: expected prime:value, got '" + item + "'");
    std::size_t used = 0;
    const std::string ps = item.substr(0, colon);
    const std::string vs = item.substr(colon + 1);
    std::int64_t p = 0;
    double v = 0.0;
    try {
      p = std::stoll(ps, &used);
      if (used != ps.size())
        throw std::invalid_argument(ps);
      v = std::stod(vs, &used);
      if (used != vs.size())
        throw std::invalid_argument(vs);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("series literal: malformed entry '" + item + "'");
    }
    if (!overrides.emplace(p, v).second)
      throw std::invalid_argument("series literal: prime " + std::to_string(p) + " given twice");
  }
  return CMSeries(std::move(overrides), p_max, default_value, tail_value);
}

/// Smallest prime factor of every k <= n (spf[0] = spf[1] = 0).
inline std::vector<std::int64_t> smallest_prime_factors(std::int64_t n)
{
  std::vector<std::int64_t> spf(static_cast<std::size_t>(std::max<std::int64_t>(n, 1)) + 1, 0);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (spf[static_cast<std::size_t>(i)] != 0)
      continue;
    for (std::int64_t k = i; k <= n; k += i)
      if (spf[static_cast<std::size_t>(k)] == 0)
        spf[static_cast<std::size_t>(k)] = i;
  }
  return spf;
}

/// lambda(n) by trial-division factorization.
inline double coefficient(const CMSeries& series, std::int64_t n)
{
  if (n < 1)
    throw std::invalid_argument("coefficient: n must be >= 1");
  double value = 1.0;
  for (std::int64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      value *= series.at_prime(p);
      n /= p;
    }
  if (n > 1)
    value *= series.at_prime(n);
  return value;
}

/// lambda(0..n) with lambda(0) = 0, built with lambda(k) = lambda(p) lambda(k/p).
inline std::vector<double> coefficient_table(const CMSeries& series, std::int64_t n)
{
  const auto spf = smallest_prime_factors(n);
  std::vector<double> lambda(spf.size(), 0.0);
  if (n >= 1)
    lambda[1] = 1.0;
  for (std::int64_t k = 2; k <= n; ++k) {
    const std::int64_t p = spf[static_cast<std::size_t>(k)];
    lambda[static_cast<std::size_t>(k)] = series.at_prime(p) * lambda[static_cast<std::size_t>(k / p)];
  }
  return lambda;
}

inline std::vector<bool> squarefree_table(std::int64_t n)
{
  std::vector<bool> sf(static_cast<std::size_t>(std::max<std::int64_t>(n, 1)) + 1, true);
  sf[0] = false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    for (std::int64_t k = d * d; k <= n; k += d * d)
      sf[static_cast<std::size_t>(k)] = false;
  return sf;
}

/// S(0..n), S(X) = sum_{k <= X} lambda(k), optionally over squarefree k only.
inline std::vector<double> partial_sums(const CMSeries& series, std::int64_t n, bool squarefree_only = false)
{
  const auto lambda = coefficient_table(series, n);
  const auto sf = squarefree_only ? squarefree_table(n) : std::vector<bool>();
  std::vector<double> s(lambda.size(), 0.0);
  for (std::size_t k = 1; k < lambda.size(); ++k)
    s[k] = s[k - 1] + ((!squarefree_only || sf[k]) ? lambda[k] : 0.0);
  return s;
}

inline double partial_sum(const CMSeries& series, std::int64_t x, bool squarefree_only = false)
{
  if (x < 1)
    throw std::invalid_argument("partial_sum: X must be >= 1");
  return partial_sums(series, x, squarefree_only).back();
}

inline std::int64_t divisor_tau(std::int64_t n)
{
  if (n < 1)
    throw std::invalid_argument("divisor_tau: n must be >= 1");
  std::int64_t tau = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    std::int64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    tau *= e + 1;
  }
  return n > 1 ? 2 * tau : tau;
}

/// tau(0..n) by the divisor sieve (tau(0) = 0).
inline std::vector<std::int64_t> divisor_table(std::int64_t n)
{
  std::vector<std::int64_t> tau(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)) + 1, 0);
  for (std::int64_t d = 1; d <= n; ++d)
    for (std::int64_t k = d; k <= n; k += d)
      ++tau[static_cast<std::size_t>(k)];
  return tau;
}

/// max_{1 <= k <= n} tau(k) / k^eps.
inline double divisor_bound_constant(double eps, std::int64_t n)
{
  const auto tau = divisor_table(n);
  double best = 0.0;
  for (std::int64_t k = 1; k <= n; ++k)
    best = std::max(best, static_cast<double>(tau[static_cast<std::size_t>(k)]) / std::pow(static_cast<double>(k), eps));
  return best;
}

struct SquareIdentity {
  double square = 0.0;      // S(X)^2
  double restricted = 0.0;  // sum_{r <= X^2} lambda(r) tau_X(r)
  double weighted = 0.0;    // sum_{r <= X^2} lambda(r) tau(r)
};

/// tau_X(r) = #{d | r : d <= X, r/d <= X}, so that S(X)^2 equals the
/// restricted sum exactly; the full divisor count only bounds it.
inline SquareIdentity square_identity_check(const CMSeries& series, std::int64_t x)
{
  if (x < 1)
    throw std::invalid_argument("square_identity_check: X must be >= 1");
  if (x > 3'000'000'000LL)
    throw std::invalid_argument("square_identity_check: X^2 out of range");
  const std::int64_t n = x * x;
  const auto lambda = coefficient_table(series, n);
  const auto tau = divisor_table(n);

  std::vector<std::int64_t> tau_x(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t d = 1; d <= x; ++d)
    for (std::int64_t e = 1; e <= x; ++e)
      ++tau_x[static_cast<std::size_t>(d * e)];

  SquareIdentity out;
  double s = 0.0;
  for (std::int64_t k = 1; k <= x; ++k)
    s += lambda[static_cast<std::size_t>(k)];
  out.square = s * s;
  for (std::int64_t r = 1; r <= n; ++r) {
    const auto i = static_cast<std::size_t>(r);
    out.restricted += lambda[i] * static_cast<double>(tau_x[i]);
    out.weighted += lambda[i] * static_cast<double>(tau[i]);
  }
  return out;
}

/// sum_{k >= 0, M = 2^k <= X_max} M^{-sigma} S(2M), which dominates
/// sum_{n < 2^{K+1}} lambda(n) n^{-sigma} since n ~ M has n^{-sigma} <= M^{-sigma}.
inline double dyadic_tail_sum(const CMSeries& series, double sigma, std::int64_t x_max)
{
  if (!(sigma > 1.0))
    throw std::invalid_argument("dyadic_tail_sum: sigma must exceed 1");
  if (x_max < 1)
    throw std::invalid_argument("dyadic_tail_sum: X_max must be >= 1");
  const auto s = partial_sums(series, 2 * x_max);
  double total = 0.0;
  for (std::int64_t m = 1; m <= x_max; m *= 2)
    total += std::pow(static_cast<double>(m), -sigma) * s[static_cast<std::size_t>(2 * m)];
  return total;
}

/// sum_{n <= N} lambda(n) n^{-sigma}.
inline double dirichlet_partial_value(const CMSeries& series, double sigma, std::int64_t n)
{
  const auto lambda = coefficient_table(series, n);
  double total = 0.0;
  for (std::int64_t k = n; k >= 1; --k)
    total += lambda[static_cast<std::size_t>(k)] * std::pow(static_cast<double>(k), -sigma);
  return total;
}

/// L(sigma) = prod_p (1 - lambda(p) p^{-sigma})^{-1}. Needs a tail value of
/// 0 (finite product) or 1 (zeta(sigma) times the corrected finite part).
inline double euler_product_value(const CMSeries& series, double sigma)
{
  const auto tail = series.tail_value();
  if (!tail || (*tail != 0.0 && *tail != 1.0))
    throw std::invalid_argument("euler_product_value: tail value must be 0 or 1");
  if (*tail == 1.0 && !(sigma > 1.0))
    throw std::domain_error("euler_product_value: zeta tail diverges for sigma <= 1");
  double log_value = 0.0;
  const auto spf = smallest_prime_factors(series.p_max());
  for (std::int64_t p = 2; p <= series.p_max(); ++p) {
    if (spf[static_cast<std::size_t>(p)] != p)
      continue;
    const double y = series.at_prime(p) * std::pow(static_cast<double>(p), -sigma);
    if (y >= 1.0)
      throw std::domain_error("euler_product_value: local factor at p=" + std::to_string(p) + " diverges");
    log_value -= std::log1p(-y);
    if (*tail == 1.0)
      log_value += std::log1p(-std::pow(static_cast<double>(p), -sigma));
  }
  double value = std::exp(log_value);
  if (*tail == 1.0)
    value *= std::riemann_zeta(sigma);
  return value;
}

/// (1 - max|alpha|^2 Np^{-sigma})^{-1}: the local factor of the |max|^2 series.
inline double maxsq_euler_factor(const UnitaryClass& uclass, double sigma)
{
  const auto np = uclass.params().prime_norm();
  if (!np)
    throw std::invalid_argument("maxsq_euler_factor: prime norm is required");
  const double ratio = max_modulus_sq(uclass.params()) * std::pow(static_cast<double>(*np), -sigma);
  if (ratio >= 1.0)
    throw std::domain_error("maxsq_euler_factor: geometric series diverges (ratio " + std::to_string(ratio) + ")");
  return 1.0 / (1.0 - ratio);
}

struct LinearExtraction {
  double geometric = 0.0;  // 1 / (1 - y)
  double extracted = 0.0;  // (1 + y) / (1 - y^2)
};

/// With y = lambda_p x: sum_r y^r = (1 + y) sum_r y^{2r}.
inline LinearExtraction linear_extraction_check(double lambda_p, double x)
{
  if (!(lambda_p >= 0.0) || !(x >= 0.0) || !(x < 1.0))
    throw std::invalid_argument("linear_extraction_check: need lambda_p >= 0 and 0 <= x < 1");
  const double y = lambda_p * x;
  if (!(y < 1.0))
    throw std::invalid_argument("linear_extraction_check: lambda_p * x must be < 1");
  return {1.0 / (1.0 - y), (1.0 + y) / (1.0 - y * y)};
}

struct RamifiedBound {
  double delta = 0.0;
  double factor = 0.0;   // (1 - Np^{-2 delta})^{-1}
  double bound = 0.0;    // 1 + Np^{-delta}
  bool holds = false;    // factor <= bound
  double c_delta = 0.0;  // factor <= 1 + c_delta Np^{-2 delta} for every Np >= 2
};

/// Local bound at a ramified prime using only |alpha| <= Np^{1/2 - delta}.
inline RamifiedBound ramified_factor_bound(std::int64_t np, int n)
{
  if (np < 2 || n < 1)
    throw std::invalid_argument("ramified_factor_bound: need Np >= 2 and n >= 1");
  RamifiedBound out;
  out.delta = lrs_delta(n);
  const double y = std::pow(static_cast<double>(np), -out.delta);
  out.factor = 1.0 / (1.0 - y * y);
  out.bound = 1.0 + y;
  out.holds = out.factor <= out.bound;
  out.c_delta = 1.0 / (1.0 - std::pow(2.0, -2.0 * out.delta));
  return out;
}

/// Smallest Np from which ramified_factor_bound holds for every larger Np:
/// 1/(1-y^2) <= 1+y  <=>  y + y^2 <= 1  <=>  Np >= phi^{n^2+1}, phi the golden ratio.
inline std::int64_t ramified_threshold(int n)
{
  const double bound = std::pow(std::numbers::phi, 1.0 / lrs_delta(n));
  auto np = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::floor(bound)) - 1);
  while (!ramified_factor_bound(np, n).holds)
    ++np;
  return np;
}

/// prod (1 + |mu_i|).
inline double archimedean_factor(std::span<const Complex> mu)
{
  double lambda = 1.0;
  for (const Complex& m : mu)
    lambda *= 1.0 + std::abs(m);
  return lambda;
}

struct Conductor {
  std::int64_t q = 1;
  std::vector<Complex> mu;
  double lambda_inf = 1.0;
  double C = 1.0;

  static Conductor make(std::int64_t q, std::vector<Complex> mu)
  {
    if (q < 1)
      throw std::invalid_argument("Conductor: q must be >= 1");
    Conductor c;
    c.q = q;
    c.mu = std::move(mu);
    c.lambda_inf = archimedean_factor(c.mu);
    c.C = static_cast<double>(c.q) * c.lambda_inf;
    return c;
  }
};

struct RankinConductor {
  double analytic = 0.0;    // C(pi1)^{n2} C(pi2)^{n1}
  double arithmetic = 0.0;  // q(pi1)^{n2} q(pi2)^{n1}
};

/// Right-hand side shape of the Rankin-Selberg conductor bound, with the
/// implied constant set to 1. Not a certified inequality on actual conductors.
inline RankinConductor rankin_conductor_bound(const Conductor& c1, int n1, const Conductor& c2, int n2)
{
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("rankin_conductor_bound: ranks must be positive");
  return {std::pow(c1.C, n2) * std::pow(c2.C, n1),
          std::pow(static_cast<double>(c1.q), n2) * std::pow(static_cast<double>(c2.q), n1)};
}

}  // namespace satake

#endif  // SATAKE_DIRICHLET_HPP
