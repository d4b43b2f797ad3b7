#include "degsplit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "degsplit/errors.hpp"

namespace degsplit {

namespace {

using real = long double;

constexpr real kLnSqrt2Pi = 0.918938533204672741780329736405617639861L;
constexpr real kLn2Pi = 1.837877066409345483560659472811235279723L;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(n!) - log(sqrt(2 pi n) (n/e)^n), Stirling's series error term.
real stirlerr(real n) {
  constexpr real S0 = 1.0L / 12;
  constexpr real S1 = 1.0L / 360;
  constexpr real S2 = 1.0L / 1260;
  constexpr real S3 = 1.0L / 1680;
  constexpr real S4 = 1.0L / 1188;
  constexpr real S5 = 691.0L / 360360;
  constexpr real S6 = 1.0L / 156;
  if (n <= 15) return std::lgamma(n + 1) - (n + 0.5L) * std::log(n) + n - kLnSqrt2Pi;
  const real nn = n * n;
  return (S0 - (S1 - (S2 - (S3 - (S4 - (S5 - S6 / nn) / nn) / nn) / nn) / nn) / nn) / n;
}

// x log(x/np) + np - x without cancellation when x is close to np.
real bd0(real x, real np) {
  if (std::fabs(x - np) < 0.1L * (x + np)) {
    real v = (x - np) / (x + np);
    real s = (x - np) * v;
    real ej = 2 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const real s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

// Saddle-point evaluation of log Pr[Bin(n,p) = x] for 0 < p < 1.
real log_pmf(std::int64_t n_int, std::int64_t x_int, real p, real q) {
  const real n = static_cast<real>(n_int);
  const real x = static_cast<real>(x_int);
  if (x_int == 0) return p < 0.1L ? -bd0(n, n * q) - n * p : n * std::log(q);
  if (x_int == n_int) return q < 0.1L ? -bd0(n, n * p) - n * q : n * std::log(p);
  const real lc = stirlerr(n) - stirlerr(x) - stirlerr(n - x) - bd0(x, n * p) - bd0(n - x, n * q);
  const real lf = kLn2Pi + std::log(x) + std::log1p(-x / n);
  return lc - 0.5L * lf;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability " + std::to_string(p) + " outside [0, 1]");
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  real sum = 0;
  real carry = 0;
  void add(real v) {
    const real t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  real value() const { return sum + carry; }
};

// log Σ_{i=lo..hi} Pr[Bin(n,p) = i] for 0 < p < 1 and 0 <= lo <= hi <= n.
// The pmf is unimodal, so summation starts at the largest term in range and
// walks outward until the remaining terms cannot affect the result.
double log_range_sum(std::int64_t n, std::int64_t lo, std::int64_t hi, double p_in) {
  const real p = p_in;
  const real q = 1.0L - p;
  const auto mode = static_cast<std::int64_t>(std::floor(static_cast<real>(n + 1) * p));
  const std::int64_t anchor = std::clamp(mode, lo, hi);
  const real anchor_log = log_pmf(n, anchor, p, q);

  constexpr real kNegligible = 1e-22L;
  CompensatedSum acc;
  acc.add(1);
  for (std::int64_t i = anchor + 1; i <= hi; ++i) {
    const real term = std::exp(log_pmf(n, i, p, q) - anchor_log);
    acc.add(term);
    if (term * static_cast<real>(hi - i) < kNegligible * acc.value()) break;
  }
  for (std::int64_t i = anchor - 1; i >= lo; --i) {
    const real term = std::exp(log_pmf(n, i, p, q) - anchor_log);
    acc.add(term);
    if (term * static_cast<real>(i - lo) < kNegligible * acc.value()) break;
  }
  return static_cast<double>(anchor_log + std::log(acc.value()));
}

}  // namespace

double log_binom_pmf(std::int64_t n, std::int64_t i, double p) {
  check_probability(p);
  if (n < 0 || i < 0 || i > n) return kNegInf;
  if (p == 0.0) return i == 0 ? 0.0 : kNegInf;
  if (p == 1.0) return i == n ? 0.0 : kNegInf;
  return static_cast<double>(log_pmf(n, i, p, 1.0L - static_cast<real>(p)));
}

double log_binom_tail(std::int64_t n, std::int64_t ell, double p) {
  check_probability(p);
  if (ell <= 0) return 0.0;
  if (ell > n) return kNegInf;
  if (p == 0.0) return kNegInf;
  if (p == 1.0) return 0.0;
  return log_range_sum(n, ell, n, p);
}

double binom_tail(std::int64_t n, std::int64_t ell, double p) {
  return std::exp(log_binom_tail(n, ell, p));
}

double binom_lower_tail(std::int64_t n, std::int64_t ell, double p) {
  check_probability(p);
  if (ell < 0) return 0.0;
  if (ell >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;
  return std::exp(log_range_sum(n, 0, ell, p));
}

double log_g_eval(double p, std::size_t k, std::size_t c) {
  if (c <= 5) throw DomainError("c must exceed 5");
  check_probability(p);
  if (p == 0.0) return kNegInf;
  const auto trials = static_cast<std::int64_t>((c - 5) * k);
  return std::log(p) + log_binom_tail(trials, static_cast<std::int64_t>(5 * k), p);
}

double g_eval(double p, std::size_t k, std::size_t c) { return std::exp(log_g_eval(p, k, c)); }

double chernoff_upper(double mu, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  if (!(mu >= 0.0)) throw DomainError("mu must be non-negative");
  return std::exp(-delta * delta * mu / 3.0);
}

double chernoff_lower(double mu, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
  if (!(mu >= 0.0)) throw DomainError("mu must be non-negative");
  return std::exp(-delta * delta * mu / 2.0);
}

bool is_case_one(double t, std::size_t k, std::size_t c) {
  const double cc = static_cast<double>(c);
  const double threshold = (cc - 2) * (cc - 2) * static_cast<double>(k) / (6 * cc) - std::log(50.0);
  return std::log(t) <= threshold;
}

namespace {

bool second_condition(std::size_t k, double t, std::size_t c, double p) {
  const auto n = static_cast<std::int64_t>(c * k);
  const auto ell = static_cast<std::int64_t>((c - 1) * k);
  return log_binom_tail(n, ell, p) <= -3.0 * std::log(t);
}

}  // namespace

Calibration case_one_calibration(std::size_t k, double t, std::size_t c) {
  Calibration cal;
  cal.p = 0.5;
  cal.which = Case::I;
  cal.t = t;
  cal.k = k;
  cal.c = c;
  cal.second_condition_ok = second_condition(k, t, c, 0.5);
  return cal;
}

Calibration calibrate_p(std::size_t k, double t, std::size_t c) {
  if (k == 0) throw DomainError("k must be positive");
  if (!(t >= 1)) throw DomainError("t must be at least 1");
  if (c <= 5) throw DomainError("c must exceed 5");

  const double target = 5.0 * static_cast<double>(k) / t;
  const double log_target = std::log(target);
  if (log_g_eval(0.5, k, c) <= log_target) {
    throw NoRootInRange("target 5k/t = " + std::to_string(target) + " is not below g(1/2) = " +
                        std::to_string(g_eval(0.5, k, c)));
  }

  constexpr double kRelTol = 1e-9;
  constexpr int kMaxIterations = 200;
  double lo = 0.0;
  double hi = 0.5;
  double p = 0.25;
  for (int it = 0; it < kMaxIterations; ++it) {
    p = lo + (hi - lo) / 2;
    if (p <= lo || p >= hi) break;
    const double lg = log_g_eval(p, k, c);
    // |g/target - 1| <= tol, with a little room for the exp/log round trip.
    if (std::fabs(std::expm1(lg - log_target)) <= 0.5 * kRelTol) break;
    if (lg < log_target) {
      lo = p;
    } else {
      hi = p;
    }
  }

  Calibration cal;
  cal.p = p;
  cal.which = Case::II;
  cal.t = t;
  cal.k = k;
  cal.c = c;
  cal.relative_residual = std::fabs(std::expm1(log_g_eval(p, k, c) - log_target));
  cal.residual = cal.relative_residual * target;
  cal.second_condition_ok = second_condition(k, t, c, p);
  return cal;
}

}  // namespace degsplit
