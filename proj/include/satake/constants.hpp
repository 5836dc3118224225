#ifndef SATAKE_CONSTANTS_HPP
#define SATAKE_CONSTANTS_HPP

// Exact constants of the trace majorization.
//
// With m = floor(n/2) and r_j = C(n, j) the number of terms of Tr(wedge^j A),
// the thresholds are R_1 = 1 and R_j = (R_1 ... R_{j-1}) / r_{j-1}, chosen so
// that under the case-(i) ordering the leading monomial of Tr(wedge^j A)
// outweighs the other r_j - 1 terms. The leading constant is c_n = R_{m+1}^{-2}.

#include <array>
#include <cstddef>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "satake/exact.hpp"

namespace satake {

// The prefix products square at every step, so c_n has about 2^{n/2} digits:
// 550k bits at n = 32, some 10^10 at n = 64. Doubles overflow from n = 18 on.
inline constexpr int kMaxRank = 32;

struct ConstantTable {
  int n = 0;
  int m = 0;
  std::vector<Integer> r;   // r_0 .. r_m
  std::vector<Rational> R;  // R_1 .. R_{m+1}, stored 0-based
  Rational c_n;

  /// R_j for 1 <= j <= m+1.
  const Rational& threshold(int j) const { return R.at(static_cast<std::size_t>(j - 1)); }
  double threshold_value(int j) const { return to_double(threshold(j)); }
  double leading_value() const { return to_double(c_n); }
};

namespace detail {

inline void check_rank(int n, int lowest, const char* who)
{
  if (n < lowest || n > kMaxRank)
    throw std::invalid_argument(std::string(who) + ": n must lie in [" + std::to_string(lowest) + ", " +
                                std::to_string(kMaxRank) + "]");
}

}  // namespace detail

/// [r_0, ..., r_m] with r_j = C(n, j).
inline std::vector<Integer> subset_counts(int n)
{
  detail::check_rank(n, 1, "subset_counts");
  const int m = n / 2;
  std::vector<Integer> r{Integer(1)};
  for (int j = 1; j <= m; ++j)
    r.push_back(r.back() * (n - j + 1) / j);
  return r;
}

/// [R_1, ..., R_{m+1}].
inline std::vector<Rational> threshold_sequence(int n)
{
  detail::check_rank(n, 2, "threshold_sequence");
  const auto r = subset_counts(n);
  const int m = n / 2;
  std::vector<Rational> R;
  Rational prefix(1);  // R_1 * ... * R_{j-1}
  for (int j = 1; j <= m + 1; ++j) {
    R.push_back(prefix / Rational(r[static_cast<std::size_t>(j - 1)]));
    prefix *= R.back();
  }
  return R;
}

inline Rational leading_constant(int n)
{
  const auto R = threshold_sequence(n);
  return 1 / (R.back() * R.back());
}

inline ConstantTable make_constant_table(int n)
{
  ConstantTable t;
  t.n = n;
  t.m = n / 2;
  t.r = subset_counts(n);
  t.R = threshold_sequence(n);
  t.c_n = 1 / (t.R.back() * t.R.back());
  return t;
}

/// Memoized table; each entry is built once and never modified afterwards.
inline const ConstantTable& constant_table(int n)
{
  detail::check_rank(n, 2, "constant_table");
  static std::array<std::once_flag, kMaxRank + 1> flags;
  static std::array<std::optional<ConstantTable>, kMaxRank + 1> tables;
  const auto k = static_cast<std::size_t>(n);
  std::call_once(flags[k], [&] { tables[k] = make_constant_table(n); });
  return *tables[k];
}

inline nlohmann::json to_json(const ConstantTable& t)
{
  nlohmann::json out;
  out["n"] = t.n;
  out["m"] = t.m;
  out["r"] = nlohmann::json::array();
  for (const auto& v : t.r) {
    // Exact integers; strings only once they leave the int64 range.
    if (v <= Integer(std::numeric_limits<std::int64_t>::max()))
      out["r"].push_back(v.convert_to<std::int64_t>());
    else
      out["r"].push_back(v.str());
  }
  out["R"] = nlohmann::json::array();
  for (const auto& v : t.R)
    out["R"].push_back(fraction_string(v));
  out["c_n"] = fraction_string(t.c_n);
  return out;
}

}  // namespace satake

#endif  // SATAKE_CONSTANTS_HPP
