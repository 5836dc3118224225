#ifndef SATAKE_SYMFUNC_HPP
#define SATAKE_SYMFUNC_HPP

// Partitions, Schur functions, and Rankin-Selberg coefficients at a prime.
//
// The r-th Euler coefficient of prod_{i,j} (1 - alpha_i beta_j x)^{-1} is the
// complete homogeneous function h_r of the n^2 products alpha_i beta_j; by the
// Cauchy identity it equals sum over partitions lambda of r with at most n
// parts of s_lambda(alpha) s_lambda(beta).
//
// Schur functions are evaluated with the Jacobi-Trudi determinant
// det[h_{lambda_i - i + j}], which is polynomial in the inputs and so stays
// well-defined at repeated and zero values (the bialternant quotient does not).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "satake/exact.hpp"
#include "satake/majorization.hpp"
#include "satake/params.hpp"

namespace satake {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
  {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const
  {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i)
      s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

namespace detail {

inline void collect_partitions(int remaining, int max_part, int slots, std::vector<int>& prefix,
                               std::vector<Partition>& out)
{
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (slots == 0)
    return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    collect_partitions(remaining - part, part, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Partitions of r with at most n parts, in reverse-lexicographic order.
inline std::vector<Partition> partitions(int r, int n)
{
  if (r < 0 || n < 1)
    throw std::invalid_argument("partitions: need r >= 0 and n >= 1");
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::collect_partitions(r, r, n, prefix, out);
  return out;
}

/// h_0..h_kmax of x.
template <typename T>
std::vector<T> complete_homogeneous(std::span<const T> x, int kmax)
{
  std::vector<T> h(static_cast<std::size_t>(std::max(kmax, 0)) + 1, T(0));
  h[0] = T(1);
  // Multiply by 1/(1 - x_i t) one variable at a time.
  for (const T& xi : x)
    for (std::size_t k = 1; k < h.size(); ++k)
      h[k] += xi * h[k - 1];
  return h;
}

/// Determinant by Gaussian elimination; partial pivoting for floating types,
/// first-nonzero pivoting for exact ones.
template <typename T>
T determinant(std::vector<std::vector<T>> a)
{
  const std::size_t n = a.size();
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = scalar::pivot_weight(a[col][col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const double w = scalar::pivot_weight(a[row][col]);
      if (w > best) {
        best = w;
        pivot = row;
      }
    }
    if (scalar::is_zero(a[pivot][col]))
      return T(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (scalar::is_zero(a[row][col]))
        continue;
      const T factor = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k)
        a[row][k] -= factor * a[col][k];
    }
  }
  return det;
}

/// s_lambda(x) as det[h_{lambda_i - i + j}]_{i,j <= length(lambda)}.
template <typename T>
T schur_eval(const Partition& lambda, std::span<const T> x)
{
  if (lambda.length() > x.size())
    throw std::invalid_argument("schur_eval: partition " + lambda.to_string() + " has more parts than variables");
  const std::size_t l = lambda.length();
  if (l == 0)
    return T(1);
  const auto h = complete_homogeneous(x, lambda[0] + static_cast<int>(l));
  std::vector<std::vector<T>> m(l, std::vector<T>(l, T(0)));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const int k = lambda[i] - static_cast<int>(i) + static_cast<int>(j);
      if (k >= 0)
        m[i][j] = h[static_cast<std::size_t>(k)];
    }
  return determinant(std::move(m));
}

inline std::vector<GaussianRational> to_exact(std::span<const Complex> x)
{
  std::vector<GaussianRational> out;
  out.reserve(x.size());
  for (const Complex& z : x)
    out.push_back(GaussianRational::from_complex(z));
  return out;
}

/// Floating or exact evaluation; in exact mode every input double is taken as
/// the rational it represents and only the result is rounded.
inline Complex schur_eval(const Partition& lambda, std::span<const Complex> x, bool exact_mode)
{
  if (!exact_mode)
    return schur_eval<Complex>(lambda, x);
  const auto ex = to_exact(x);
  return schur_eval<GaussianRational>(lambda, std::span<const GaussianRational>(ex)).to_complex();
}

namespace detail {

template <typename T>
std::vector<T> padded(std::span<const T> x, std::size_t n)
{
  std::vector<T> out(x.begin(), x.end());
  out.resize(std::max(n, out.size()), T(0));
  return out;
}

}  // namespace detail

/// sum over lambda in P_n(r) of s_lambda(a) s_lambda(b); the shorter input is
/// padded with zeros to the common length n.
template <typename T>
T rankin_coefficient(std::span<const T> a, std::span<const T> b, int r)
{
  if (r < 0)
    throw std::invalid_argument("rankin_coefficient: r must be >= 0");
  const std::size_t n = std::max(a.size(), b.size());
  const auto pa = detail::padded(a, n);
  const auto pb = detail::padded(b, n);
  T sum(0);
  for (const Partition& lambda : partitions(r, static_cast<int>(n)))
    sum += schur_eval<T>(lambda, std::span<const T>(pa)) * schur_eval<T>(lambda, std::span<const T>(pb));
  return sum;
}

inline Complex rankin_coefficient(const SpectralParams& p1, const SpectralParams& p2, int r)
{
  return rankin_coefficient<Complex>(p1.values(), p2.values(), r);
}

/// Coefficients x^0..x^{r_max} of prod_{i,j} (1 - a_i b_j x)^{-1}, expanded
/// directly as h_r of the pairwise products.
template <typename T>
std::vector<T> euler_expand(std::span<const T> a, std::span<const T> b, int r_max)
{
  if (r_max < 0)
    throw std::invalid_argument("euler_expand: r_max must be >= 0");
  std::vector<T> products;
  products.reserve(a.size() * b.size());
  for (const T& x : a)
    for (const T& y : b)
      products.push_back(x * y);
  return complete_homogeneous(std::span<const T>(products), r_max);
}

inline std::vector<Complex> euler_expand(const SpectralParams& p1, const SpectralParams& p2, int r_max)
{
  return euler_expand<Complex>(p1.values(), p2.values(), r_max);
}

/// lambda(p^r, pi x pi~) = sum_lambda |s_lambda(alpha)|^2.
inline double self_pair_coefficient(const SpectralParams& p, int r)
{
  if (r < 0)
    throw std::invalid_argument("self_pair_coefficient: r must be >= 0");
  double sum = 0.0;
  for (const Partition& lambda : partitions(r, static_cast<int>(p.rank())))
    sum += std::norm(schur_eval<Complex>(lambda, p.values()));
  return sum;
}

/// C(k + r - 1, r): monomials of degree r in k variables.
inline Integer monomial_count(int k, int r)
{
  if (k < 1 || r < 0)
    throw std::invalid_argument("monomial_count: need k >= 1 and r >= 0");
  Integer c(1);
  for (int i = 1; i <= r; ++i)
    c = c * (k - 1 + i) / i;
  return c;
}

struct CoefficientBound {
  double value = 0.0;
  double bound = 0.0;
  bool holds(double rel_tol = 1e-9) const { return value <= bound + rel_tol * std::max(1.0, bound); }
};

/// (lambda(p^r, pi x pi~), N(n^2, r) max|alpha|^{2r}).
inline CoefficientBound coefficient_domination_check(const SpectralParams& p, int r)
{
  const auto n = static_cast<int>(p.rank());
  const double count = monomial_count(n * n, r).convert_to<double>();
  return {self_pair_coefficient(p, r), count * std::pow(max_modulus_sq(p), r)};
}

/// (|lambda(p^r, pi1 x pi2)|, sqrt(lambda(p^r, pi1 x pi1~) lambda(p^r, pi2 x pi2~))).
inline CoefficientBound cauchy_schwarz_check(const SpectralParams& p1, const SpectralParams& p2, int r)
{
  return {std::abs(rankin_coefficient(p1, p2, r)),
          std::sqrt(self_pair_coefficient(p1, r) * self_pair_coefficient(p2, r))};
}

}  // namespace satake

#endif  // SATAKE_SYMFUNC_HPP
