#ifndef SATAKE_MAJORIZATION_HPP
#define SATAKE_MAJORIZATION_HPP

// Bounds on max_i |alpha_i|^2 by traces of exterior powers.
//
// For a unitary class ordered |alpha_1| >= ... >= |alpha_n| (at most
// m = floor(n/2) parameters of modulus above 1):
//
//   max |alpha_i|^2 <= c_n (1 + sum_{j=1}^{m} |Tr wedge^j A|^{2/j}).
//
// The sum starts at j = 1. Dropping the j = 1 term is false already for
// n = 2 (diag(t, 1/t) with t >= 3); trace_bound keeps start_j = 2 available
// so that the failure can be exhibited.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "satake/constants.hpp"
#include "satake/params.hpp"

namespace satake {

inline double max_modulus_sq(const SpectralParams& params)
{
  double best = 0.0;
  for (const Complex& z : params.values())
    best = std::max(best, std::norm(z));
  return best;
}

enum class ProofCase { case_i, case_ii };

inline const char* to_string(ProofCase c) { return c == ProofCase::case_i ? "case_i" : "case_ii"; }

struct CaseReport {
  ProofCase tag = ProofCase::case_ii;
  int j = 0;  // set only for case_i
  // case_i: R_{j+1} |alpha_1|^j, the proven lower bound on |Tr wedge^j A|.
  // case_ii: c_n, the proven upper bound on max |alpha_i|^2.
  double lower_bound_witness = 0.0;
  double trace_modulus = 0.0;  // |Tr wedge^j A| in case_i
  bool witness_holds = false;
};

namespace detail {

inline void check_table(const UnitaryClass& u, const ConstantTable& t, const char* who)
{
  if (static_cast<std::size_t>(t.n) != u.rank())
    throw std::invalid_argument(std::string(who) + ": constant table is for n=" + std::to_string(t.n) +
                                " but the class has rank " + std::to_string(u.rank()));
  if (!u.params().is_sorted_by_modulus())
    throw std::invalid_argument(std::string(who) + ": parameters must be sorted by modulus");
}

}  // namespace detail

/// Which branch of the case analysis applies: the first j in 1..m with
/// |alpha_i| >= R_i |alpha_1| for i <= j and |alpha_{j+1}| <= R_{j+1} |alpha_1|,
/// otherwise case (ii) where |alpha_{m+1}| >= R_{m+1} |alpha_1|.
inline CaseReport classify_case(const UnitaryClass& uclass, const ConstantTable& table, double tol = 1e-9)
{
  detail::check_table(uclass, table, "classify_case");
  const auto& a = uclass.params();
  const double top = std::abs(a[0]);
  const auto e = elementary_symmetric(a.values());

  CaseReport report;
  for (int j = 1; j <= table.m; ++j) {
    if (std::abs(a[static_cast<std::size_t>(j - 1)]) < table.threshold_value(j) * top)
      break;  // prefix condition fails for every larger j as well
    if (std::abs(a[static_cast<std::size_t>(j)]) <= table.threshold_value(j + 1) * top) {
      report.tag = ProofCase::case_i;
      report.j = j;
      report.lower_bound_witness = table.threshold_value(j + 1) * std::pow(top, j);
      report.trace_modulus = std::abs(e[static_cast<std::size_t>(j)]);
      report.witness_holds = report.trace_modulus >= report.lower_bound_witness - tol;
      return report;
    }
  }
  report.tag = ProofCase::case_ii;
  report.lower_bound_witness = table.leading_value();
  report.witness_holds = max_modulus_sq(a) <= report.lower_bound_witness + tol;
  return report;
}

/// c_n (1 + sum_{j=start_j}^{m} |Tr wedge^j A|^{2/j}).
inline double trace_bound(const UnitaryClass& uclass, const ConstantTable& table, int start_j = 1)
{
  detail::check_table(uclass, table, "trace_bound");
  if (start_j != 1 && start_j != 2)
    throw std::invalid_argument("trace_bound: start_j must be 1 or 2");
  const auto e = elementary_symmetric(uclass.params().values());
  double sum = 1.0;
  for (int j = start_j; j <= table.m; ++j)
    sum += std::pow(std::abs(e[static_cast<std::size_t>(j)]), 2.0 / j);
  return table.leading_value() * sum;
}

struct TraceSplit {
  double trace_sq = 0.0;   // |Tr A|^2
  double sym2_abs = 0.0;   // |Tr sym^2 A|
  double wedge2_abs = 0.0; // |Tr wedge^2 A|
  double residual = 0.0;   // |(Tr A)^2 - Tr sym^2 A - Tr wedge^2 A| / scale
};

/// (Tr A)^2 = Tr sym^2 A + Tr wedge^2 A, hence |Tr A|^2 <= |Tr sym^2 A| + |Tr wedge^2 A|.
inline TraceSplit trace_split_check(const SpectralParams& params)
{
  const Complex tr = exterior_trace(params, 1);
  const Complex sym2 = sym2_trace(params);
  const Complex wedge2 = params.rank() >= 2 ? exterior_trace(params, 2) : Complex{};
  TraceSplit out;
  out.trace_sq = std::norm(tr);
  out.sym2_abs = std::abs(sym2);
  out.wedge2_abs = std::abs(wedge2);
  double scale = 0.0;
  for (const Complex& z : params.values())
    scale += std::abs(z);
  scale *= scale;
  out.residual = scale > 0 ? std::abs(tr * tr - sym2 - wedge2) / scale : 0.0;
  return out;
}

/// delta(d) = 1 / (d^2 + 1).
inline double lrs_delta(int n)
{
  if (n < 1)
    throw std::invalid_argument("lrs_delta: n must be >= 1");
  return 1.0 / (static_cast<double>(n) * n + 1.0);
}

/// Np^{1/2 - delta(n)}.
inline double lrs_threshold(int n, std::int64_t prime_norm)
{
  if (prime_norm < 2)
    throw std::invalid_argument("lrs_threshold: prime norm must be >= 2");
  return std::pow(static_cast<double>(prime_norm), 0.5 - lrs_delta(n));
}

/// Every parameter satisfies Np^{-(1/2-delta)} <= |alpha_i| <= Np^{1/2-delta}.
inline bool lrs_check(const SpectralParams& params, double tol = 0.0)
{
  if (!params.prime_norm())
    throw std::invalid_argument("lrs_check: prime norm is required");
  const double hi = lrs_threshold(static_cast<int>(params.rank()), *params.prime_norm());
  const double lo = 1.0 / hi;
  for (const Complex& z : params.values()) {
    const double r = std::abs(z);
    if (r > hi * (1.0 + tol) || r < lo * (1.0 - tol))
      return false;
  }
  return true;
}

/// c_n (m + |Tr A|^2 + sum_{j=2}^{m} |Tr wedge^j A|): trace_bound with
/// |x|^{2/j} <= 1 + |x| applied to every j >= 2 term.
inline double prime_majorization_bound(const UnitaryClass& uclass, const ConstantTable& table)
{
  detail::check_table(uclass, table, "prime_majorization_bound");
  const auto e = elementary_symmetric(uclass.params().values());
  double sum = static_cast<double>(table.m) + std::norm(e[1]);
  for (int j = 2; j <= table.m; ++j)
    sum += std::abs(e[static_cast<std::size_t>(j)]);
  return table.leading_value() * sum;
}

}  // namespace satake

#endif  // SATAKE_MAJORIZATION_HPP
