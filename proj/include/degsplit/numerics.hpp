#pragma once

#include <cstddef>
#include <cstdint>

namespace degsplit {

enum class Case { I, II };

/// Sampling probability for one run and how it was obtained.
struct Calibration {
  double p = 0.5;
  double residual = 0.0;           ///< |g(p) - 5k/t|
  double relative_residual = 0.0;  ///< residual / (5k/t)
  bool second_condition_ok = false;  ///< b_{ck,p}((c-1)k) <= t^-3
  Case which = Case::I;
  double t = 0;  ///< in-degree cap; real-valued so calibration accepts t beyond 2^64
  std::size_t k = 0;
  std::size_t c = 50;
};

/// Pr[Bin(n, p) >= ell]. Accurate to about 1e-12 relative for n <= 1e4.
/// Throws DomainError for p outside [0, 1].
double binom_tail(std::int64_t n, std::int64_t ell, double p);

/// log Pr[Bin(n, p) >= ell]; -inf when the probability is zero.
double log_binom_tail(std::int64_t n, std::int64_t ell, double p);

/// Pr[Bin(n, p) <= ell].
double binom_lower_tail(std::int64_t n, std::int64_t ell, double p);

/// log Pr[Bin(n, p) = i] for 0 <= i <= n.
double log_binom_pmf(std::int64_t n, std::int64_t i, double p);

/// g(p) = p * Pr[Bin((c-5)k, p) >= 5k].
double g_eval(double p, std::size_t k, std::size_t c);
double log_g_eval(double p, std::size_t k, std::size_t c);

/// exp(-delta^2 mu / 3), bounding Pr[X >= (1+delta) mu].
double chernoff_upper(double mu, double delta);
/// exp(-delta^2 mu / 2), bounding Pr[X <= (1-delta) mu].
double chernoff_lower(double mu, double delta);

/// ln t <= (c-2)^2 k / (6c) - ln 50, evaluated without forming the exponential.
bool is_case_one(double t, std::size_t k, std::size_t c);

/// Case I calibration: p = 1/2.
Calibration case_one_calibration(std::size_t k, double t, std::size_t c);

/// Bisection root of g(p) = 5k/t on (0, 1/2) to relative residual 1e-9.
/// Throws NoRootInRange when 5k/t >= g(1/2).
Calibration calibrate_p(std::size_t k, double t, std::size_t c = 50);

}  // namespace degsplit
