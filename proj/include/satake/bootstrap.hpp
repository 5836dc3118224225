#ifndef SATAKE_BOOTSTRAP_HPP
#define SATAKE_BOOTSTRAP_HPP

// Exponent-halving bootstrap for completely multiplicative series with
// nonnegative coefficients.
//
// One step turns a premise S(Y) <= B Y^sigma into S(X) <= sqrt(kappa B) X^{s+eps}
// through
//
//   S(X)^2 = sum_{r <= X^2} lambda(r) tau_X(r)
//          <= sum_{r <= X^2} lambda(r) tau(r)
//          <= kappa X^{2e} S(X^2)                 (tau(r) <= kappa r^e)
//          <= kappa B X^{2(sigma + e)},           e = s + eps - sigma > 0,
//
// where s is the growth abscissa of the series (s = 1 for series that
// converge to the right of 1). Writing the premise constant as K C^a for a
// conductor C, each step halves a; after M > log2(A / eps) steps the
// conductor exponent is below eps.
//
// kappa is measured on the table range as max_{r <= X_max} tau(r) / r^e,
// and every premise is checked against the partial sums on [1, X_max].

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satake/dirichlet.hpp"

namespace satake {

class PremiseViolation : public std::runtime_error {
 public:
  PremiseViolation(std::int64_t witness, double partial_sum, double bound)
      : std::runtime_error("bootstrap premise fails at X=" + std::to_string(witness) + ": S(X)=" +
                           std::to_string(partial_sum) + " > " + std::to_string(bound)),
        witness_(witness),
        partial_sum_(partial_sum),
        bound_(bound)
  {
  }

  std::int64_t witness() const { return witness_; }
  double partial_sum() const { return partial_sum_; }
  double bound() const { return bound_; }

 private:
  std::int64_t witness_;
  double partial_sum_;
  double bound_;
};

/// Partial sums and divisor counts on [0, X_max], shared by all steps.
struct BootstrapData {
  std::int64_t x_max = 0;
  std::vector<double> lambda;
  std::vector<double> sums;
  std::vector<std::int64_t> tau;
  std::vector<double> weighted_sums;  // sum_{r <= X} lambda(r) tau(r)

  BootstrapData(const CMSeries& series, std::int64_t x_max_)
      : x_max(x_max_), lambda(coefficient_table(series, x_max_)), tau(divisor_table(x_max_))
  {
    if (x_max < 1)
      throw std::invalid_argument("BootstrapData: X_max must be >= 1");
    sums.assign(lambda.size(), 0.0);
    weighted_sums.assign(lambda.size(), 0.0);
    for (std::size_t k = 1; k < lambda.size(); ++k) {
      sums[k] = sums[k - 1] + lambda[k];
      weighted_sums[k] = weighted_sums[k - 1] + lambda[k] * static_cast<double>(tau[k]);
    }
  }

  double S(std::int64_t x) const { return sums[static_cast<std::size_t>(x)]; }

  /// max_{1 <= X <= X_max} S(X) / X^sigma.
  double sup_ratio(double sigma) const
  {
    double best = 0.0;
    for (std::int64_t x = 1; x <= x_max; ++x)
      best = std::max(best, S(x) / std::pow(static_cast<double>(x), sigma));
    return best;
  }

  double divisor_constant(double e) const
  {
    double best = 0.0;
    for (std::int64_t r = 1; r <= x_max; ++r)
      best = std::max(best, static_cast<double>(tau[static_cast<std::size_t>(r)]) /
                                std::pow(static_cast<double>(r), e));
    return best;
  }
};

/// Least-squares slope of log S(X) against log X on `points` log-spaced
/// integers in [lo, hi].
inline double growth_exponent(const BootstrapData& data, std::int64_t lo, std::int64_t hi, int points = 61)
{
  if (lo < 1 || hi <= lo || hi > data.x_max || points < 2)
    throw std::invalid_argument("growth_exponent: need 1 <= lo < hi <= X_max");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(hi));
  for (int i = 0; i < points; ++i) {
    const auto x = static_cast<std::int64_t>(std::llround(std::exp(a + (b - a) * i / (points - 1))));
    const double s = data.S(std::clamp(x, lo, hi));
    if (!(s > 0.0))
      continue;
    const double lx = std::log(static_cast<double>(x));
    const double ly = std::log(s);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++used;
  }
  if (used < 2)
    throw std::domain_error("growth_exponent: partial sums vanish on the range");
  return (used * sxy - sx * sy) / (used * sxx - sx * sx);
}

struct BootstrapStep {
  double premise_constant = 0.0;  // B
  double premise_sigma = 0.0;     // sigma
  double exponent_out = 0.0;      // s + eps
  double divisor_exponent = 0.0;  // e = s + eps - sigma
  double kappa = 0.0;
  double certified_constant = 0.0;  // sqrt(kappa B)
  double measured_constant = 0.0;   // max_X S(X) / X^{s + eps}
  std::int64_t chain_checked_up_to = 0;
  bool chain_holds = true;

  bool certificate_holds() const { return measured_constant <= certified_constant * (1.0 + 1e-12); }
};

inline BootstrapStep bootstrap_step(const BootstrapData& data, double B, double sigma, double eps,
                                    double abscissa = 1.0)
{
  if (!(B > 0.0) || !(eps > 0.0) || !std::isfinite(B))
    throw std::invalid_argument("bootstrap_step: need B > 0 and eps > 0");
  BootstrapStep step;
  step.premise_constant = B;
  step.premise_sigma = sigma;
  step.exponent_out = abscissa + eps;
  step.divisor_exponent = abscissa + eps - sigma;
  if (!(step.divisor_exponent > 0.0))
    throw std::invalid_argument("bootstrap_step: premise exponent must lie below s + eps");

  for (std::int64_t x = 1; x <= data.x_max; ++x) {
    const double bound = B * std::pow(static_cast<double>(x), sigma);
    if (data.S(x) > bound * (1.0 + 1e-12))
      throw PremiseViolation(x, data.S(x), bound);
  }

  step.kappa = data.divisor_constant(step.divisor_exponent);
  step.certified_constant = std::sqrt(step.kappa * B);
  step.measured_constant = data.sup_ratio(step.exponent_out);

  // Every link of the chain, wherever X^2 stays inside the table.
  const double slack = 1.0 + 1e-12;
  for (std::int64_t x = 1; x * x <= data.x_max; ++x) {
    const std::int64_t n = x * x;
    const double weighted = data.weighted_sums[static_cast<std::size_t>(n)];
    const double xs = static_cast<double>(x);
    const double square = data.S(x) * data.S(x);
    const double divisor_link = step.kappa * std::pow(xs, 2 * step.divisor_exponent) * data.S(n);
    const double premise_link = step.kappa * B * std::pow(xs, 2 * (sigma + step.divisor_exponent));
    if (square > weighted * slack || weighted > divisor_link * slack || divisor_link > premise_link * slack)
      step.chain_holds = false;
    step.chain_checked_up_to = x;
  }
  return step;
}

inline BootstrapStep bootstrap_step(const CMSeries& series, std::int64_t x_max, double B, double sigma, double eps,
                                    double abscissa = 1.0)
{
  return bootstrap_step(BootstrapData(series, x_max), B, sigma, eps, abscissa);
}

/// Smallest integer M >= 0 with M > (log A - log eps) / log 2, i.e. A / 2^M < eps.
inline int bootstrap_iterations(double A, double eps)
{
  if (!(A > 0.0) || !(eps > 0.0))
    throw std::invalid_argument("bootstrap_iterations: need A > 0 and eps > 0");
  int m = std::max(0, static_cast<int>(std::floor(std::log2(A) - std::log2(eps))) + 1);
  while (m > 0 && std::ldexp(A, -(m - 1)) < eps)
    --m;
  while (std::ldexp(A, -m) >= eps)
    ++m;
  return m;
}

struct BootstrapOptions {
  std::int64_t x_max = 100000;
  double eps = 0.05;
  double conductor = 100.0;
  std::optional<double> A;             // premise B_0 = C^A; measured when absent
  std::optional<double> abscissa;      // growth abscissa s; regressed when absent
  std::optional<int> iterations;       // bootstrap_iterations(A, eps) when absent
  std::int64_t regression_lo = 100;
  std::int64_t regression_hi = 100000;
};

struct BootstrapIteration {
  int iter = 0;
  double sigma = 0.0;            // X-exponent of the certified bound
  double exponent = 0.0;         // conductor exponent a_k
  double constant = 0.0;         // certified constant K_k C^{a_k}
  double log_cofactor = 0.0;     // log K_k
  double kappa = 0.0;
  double measured_constant = 0.0;
  double measured_exponent = 0.0;  // log(measured constant) / log C
  bool certificate_holds = true;
  bool chain_holds = true;
};

struct BootstrapRun {
  double abscissa = 0.0;
  double regression_slope = 0.0;
  double conductor = 0.0;
  double A = 0.0;
  double initial_constant = 0.0;
  int iterations = 0;
  std::vector<BootstrapIteration> steps;

  double final_exponent() const { return steps.empty() ? A : steps.back().exponent; }
  bool all_certificates_hold() const
  {
    return std::all_of(steps.begin(), steps.end(),
                       [](const BootstrapIteration& s) { return s.certificate_holds && s.chain_holds; });
  }
};

/// Iterates bootstrap_step with premise exponents s + eps (1 - 2^{-k}), so the
/// X-exponent increases towards s + eps while the conductor exponent halves.
inline BootstrapRun bootstrap_run(const CMSeries& series, const BootstrapOptions& opt)
{
  if (!(opt.conductor > 1.0))
    throw std::invalid_argument("bootstrap_run: conductor must exceed 1");
  if (!(opt.eps > 0.0))
    throw std::invalid_argument("bootstrap_run: eps must be positive");
  const BootstrapData data(series, opt.x_max);

  BootstrapRun run;
  run.conductor = opt.conductor;
  const std::int64_t hi = std::min(opt.regression_hi, opt.x_max);
  const std::int64_t lo = std::min(opt.regression_lo, hi / 2);
  run.regression_slope = lo >= 1 && hi > lo ? growth_exponent(data, lo, hi) : 1.0;
  run.abscissa = opt.abscissa.value_or(run.regression_slope);

  const double log_c = std::log(opt.conductor);
  if (opt.A) {
    if (!(*opt.A > 0.0))
      throw std::invalid_argument("bootstrap_run: A must be positive");
    run.A = *opt.A;
  } else {
    run.A = std::max(std::log(data.sup_ratio(run.abscissa)), 0.0) / log_c;
  }
  run.initial_constant = std::exp(run.A * log_c);
  run.iterations = opt.iterations.value_or(run.A > 0.0 ? bootstrap_iterations(run.A, opt.eps) : 0);
  if (run.iterations < 0)
    throw std::invalid_argument("bootstrap_run: iteration count must be >= 0");

  double exponent = run.A;
  double log_cofactor = 0.0;
  for (int k = 0; k < run.iterations; ++k) {
    const double sigma = run.abscissa + opt.eps * (1.0 - std::ldexp(1.0, -k));
    const double eps_out = opt.eps * (1.0 - std::ldexp(1.0, -(k + 1)));
    const double B = std::exp(log_cofactor + exponent * log_c);
    const BootstrapStep step = bootstrap_step(data, B, sigma, eps_out, run.abscissa);

    log_cofactor = 0.5 * (std::log(step.kappa) + log_cofactor);
    exponent *= 0.5;

    BootstrapIteration it;
    it.iter = k + 1;
    it.sigma = step.exponent_out;
    it.exponent = exponent;
    it.constant = step.certified_constant;
    it.log_cofactor = log_cofactor;
    it.kappa = step.kappa;
    it.measured_constant = step.measured_constant;
    it.measured_exponent = std::log(step.measured_constant) / log_c;
    it.certificate_holds = step.certificate_holds();
    it.chain_holds = step.chain_holds;
    run.steps.push_back(it);
  }
  return run;
}

}  // namespace satake

#endif  // SATAKE_BOOTSTRAP_HPP
