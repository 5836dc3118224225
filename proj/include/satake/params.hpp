#ifndef SATAKE_PARAMS_HPP
#define SATAKE_PARAMS_HPP

// Local spectral data at a finite place: the diagonal entries of a Satake
// matrix, the reciprocal-conjugate pairing forced by unitarity, traces of
// exterior and symmetric-square representations, and a seeded sampler.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "satake/random.hpp"

namespace satake {

using Complex = std::complex<double>;

/// Multiset of n nonzero local parameters, optionally tagged with the norm of
/// the prime it lives at.
class SpectralParams {
 public:
  explicit SpectralParams(std::vector<Complex> values, std::optional<std::int64_t> prime_norm = std::nullopt)
      : values_(std::move(values)), prime_norm_(prime_norm)
  {
    if (values_.empty())
      throw std::invalid_argument("SpectralParams: rank must be positive");
    for (const Complex& z : values_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("SpectralParams: non-finite parameter");
      if (z == Complex{})
        throw std::invalid_argument("SpectralParams: zero parameter (class must be invertible)");
    }
    if (prime_norm_ && *prime_norm_ < 2)
      throw std::invalid_argument("SpectralParams: prime norm must be >= 2");
  }

  std::size_t rank() const { return values_.size(); }
  std::span<const Complex> values() const { return values_; }
  const Complex& operator[](std::size_t i) const { return values_[i]; }
  std::optional<std::int64_t> prime_norm() const { return prime_norm_; }

  SpectralParams with_prime_norm(std::int64_t np) const { return SpectralParams(values_, np); }

  bool is_sorted_by_modulus() const
  {
    for (std::size_t i = 1; i < values_.size(); ++i)
      if (std::abs(values_[i]) > std::abs(values_[i - 1]))
        return false;
    return true;
  }

  friend bool operator==(const SpectralParams&, const SpectralParams&) = default;

 private:
  std::vector<Complex> values_;
  std::optional<std::int64_t> prime_norm_;
};

/// |a * conj(b) - 1|: how far b is from being the reciprocal-conjugate partner of a.
inline double pairing_defect(Complex a, Complex b)
{
  return std::abs(a * std::conj(b) - 1.0);
}

/// Parameters together with an involution sigma witnessing A^{-1} ~ conj(A):
/// alpha_i * conj(alpha_sigma(i)) = 1 up to `tolerance`.
class UnitaryClass {
 public:
  UnitaryClass(SpectralParams params, std::vector<std::size_t> pairing, double tolerance)
      : params_(std::move(params)), pairing_(std::move(pairing)), tolerance_(tolerance)
  {
    const std::size_t n = params_.rank();
    if (tolerance_ < 0 || !std::isfinite(tolerance_))
      throw std::invalid_argument("UnitaryClass: tolerance must be finite and nonnegative");
    if (pairing_.size() != n)
      throw std::invalid_argument("UnitaryClass: pairing has wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = pairing_[i];
      if (j >= n || pairing_[j] != i)
        throw std::invalid_argument("UnitaryClass: pairing is not an involution");
      if (pairing_defect(params_[i], params_[j]) > tolerance_)
        throw std::invalid_argument("UnitaryClass: pair " + std::to_string(i) + "<->" + std::to_string(j) +
                                    " is not reciprocal-conjugate");
    }
    if (count_large(params_, tolerance_) > n / 2)
      throw std::invalid_argument("UnitaryClass: more than floor(n/2) parameters exceed modulus 1");
  }

  const SpectralParams& params() const { return params_; }
  std::span<const std::size_t> pairing() const { return pairing_; }
  double tolerance() const { return tolerance_; }
  std::size_t rank() const { return params_.rank(); }

  /// #{i : |alpha_i| > 1 + tol}.
  static std::size_t count_large(const SpectralParams& p, double tol)
  {
    return static_cast<std::size_t>(
        std::count_if(p.values().begin(), p.values().end(), [tol](Complex z) { return std::abs(z) > 1.0 + tol; }));
  }

  friend bool operator==(const UnitaryClass&, const UnitaryClass&) = default;

 private:
  SpectralParams params_;
  std::vector<std::size_t> pairing_;
  double tolerance_;
};

/// Index order that sorts by weakly decreasing modulus, ties kept in input order.
inline std::vector<std::size_t> modulus_order(std::span<const Complex> values)
{
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(values[a]) > std::abs(values[b]); });
  return order;
}

inline SpectralParams sort_by_modulus(const SpectralParams& params)
{
  const auto order = modulus_order(params.values());
  std::vector<Complex> sorted;
  sorted.reserve(order.size());
  for (std::size_t k : order)
    sorted.push_back(params[k]);
  return SpectralParams(std::move(sorted), params.prime_norm());
}

/// Sorts the parameters and relabels the pairing to match.
inline UnitaryClass sort_by_modulus(const UnitaryClass& uclass)
{
  const auto order = modulus_order(uclass.params().values());
  std::vector<std::size_t> new_index(order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    new_index[order[k]] = k;
  std::vector<std::size_t> pairing(order.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    pairing[k] = new_index[uclass.pairing()[order[k]]];
  return UnitaryClass(sort_by_modulus(uclass.params()), std::move(pairing), uclass.tolerance());
}

namespace detail {

inline bool match_pairs(const SpectralParams& p, double tol, std::vector<std::size_t>& sigma,
                        std::vector<bool>& used)
{
  const std::size_t n = p.rank();
  std::size_t i = 0;
  while (i < n && used[i])
    ++i;
  if (i == n)
    return true;

  // Candidates ordered by defect, then by index: the greedy choice is tried first.
  std::vector<std::pair<double, std::size_t>> candidates;
  for (std::size_t j = i; j < n; ++j) {
    if (used[j])
      continue;
    const double d = pairing_defect(p[i], p[j]);
    if (d <= tol)
      candidates.emplace_back(d, j);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  for (const auto& [defect, j] : candidates) {
    used[i] = used[j] = true;
    sigma[i] = j;
    sigma[j] = i;
    if (match_pairs(p, tol, sigma, used))
      return true;
    used[i] = used[j] = false;
  }
  return false;
}

}  // namespace detail

/// A pairing sigma with |alpha_i conj(alpha_sigma(i)) - 1| <= tol for all i, if one exists.
inline std::optional<std::vector<std::size_t>> check_unitary_pairing(const SpectralParams& params, double tol)
{
  if (tol < 0 || !std::isfinite(tol))
    throw std::invalid_argument("check_unitary_pairing: tolerance must be finite and nonnegative");
  std::vector<std::size_t> sigma(params.rank());
  std::vector<bool> used(params.rank(), false);
  if (!detail::match_pairs(params, tol, sigma, used))
    return std::nullopt;
  if (UnitaryClass::count_large(params, tol) > params.rank() / 2)
    return std::nullopt;
  return sigma;
}

inline std::optional<UnitaryClass> make_unitary_class(const SpectralParams& params, double tol)
{
  auto sigma = check_unitary_pairing(params, tol);
  if (!sigma)
    return std::nullopt;
  return UnitaryClass(params, std::move(*sigma), tol);
}

/// Draws k ~ U{0..floor(n/2)} reciprocal-conjugate pairs (|z| log-uniform on
/// [1, max_modulus]) and n - 2k unit-modulus values, then shuffles positions.
inline UnitaryClass sample_unitary_class(std::size_t n, double max_modulus, std::uint64_t seed)
{
  if (n < 1)
    throw std::invalid_argument("sample_unitary_class: n must be >= 1");
  if (!(max_modulus >= 1.0) || !std::isfinite(max_modulus))
    throw std::invalid_argument("sample_unitary_class: max_modulus must be >= 1");

  SplitMix64 rng(seed);
  const std::size_t pairs = rng.below(n / 2 + 1);
  const double log_max = std::log(max_modulus);

  std::vector<Complex> values;
  std::vector<std::size_t> partner;
  values.reserve(n);
  for (std::size_t k = 0; k < pairs; ++k) {
    const double r = std::exp(log_max * rng.uniform());
    const double theta = rng.angle();
    const std::size_t at = values.size();
    values.push_back(std::polar(r, theta));
    values.push_back(std::polar(1.0 / r, theta));
    partner.push_back(at + 1);
    partner.push_back(at);
  }
  while (values.size() < n) {
    partner.push_back(values.size());
    values.push_back(std::polar(1.0, rng.angle()));
  }

  // Fisher-Yates on positions, carrying the pairing along.
  std::vector<std::size_t> slot(n);
  std::iota(slot.begin(), slot.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i)
    std::swap(slot[i], slot[rng.below(i + 1)]);
  std::vector<std::size_t> where(n);
  for (std::size_t k = 0; k < n; ++k)
    where[slot[k]] = k;

  std::vector<Complex> shuffled(n);
  std::vector<std::size_t> sigma(n);
  for (std::size_t k = 0; k < n; ++k) {
    shuffled[k] = values[slot[k]];
    sigma[k] = where[partner[slot[k]]];
  }
  return UnitaryClass(SpectralParams(std::move(shuffled)), std::move(sigma), 1e-9);
}

/// Elementary symmetric polynomials e_0..e_n from the coefficients of prod(1 + x_i t).
template <typename T>
std::vector<T> elementary_symmetric(std::span<const T> x)
{
  std::vector<T> e(x.size() + 1, T(0));
  e[0] = T(1);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j > 0; --j)
      e[j] += x[i] * e[j - 1];
  return e;
}

/// Trace of the j-th exterior power: e_j(alpha).
inline Complex exterior_trace(const SpectralParams& params, std::size_t j)
{
  if (j > params.rank())
    throw std::out_of_range("exterior_trace: j must satisfy 0 <= j <= n");
  return elementary_symmetric(params.values())[j];
}

/// Trace of sym^2: sum over i <= j of alpha_i alpha_j.
inline Complex sym2_trace(const SpectralParams& params)
{
  Complex sum{}, sum_sq{};
  for (const Complex& z : params.values()) {
    sum += z;
    sum_sq += z * z;
  }
  return 0.5 * (sum * sum + sum_sq);
}

}  // namespace satake

#endif  // SATAKE_PARAMS_HPP
