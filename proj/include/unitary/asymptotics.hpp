#pragma once

// Growth of the primorial rank via the Lambert W function.

#include <cstdint>
#include <vector>

#include "unitary/arith.hpp"

namespace unitary {

/// Principal branch W(z) for z >= 0, i.e. the w >= 0 with w e^w = z.
/// |w e^w - z| <= 1e-12 max(1, z). Throws DomainError for z < 0 or NaN.
double lambert_w(double z);

/// The m with C m log m = log_n, namely log_n / (C W(log_n / C)).
/// Requires C > 0 and log_n > C e.
double ell_solution(double log_n, double c);

struct EllSample {
  std::uint64_t n = 0;
  int ell = 0;          // exact primorial rank
  double estimate = 0;  // ell_solution(log n, C) with the fitted C
};

struct EllGrowthFit {
  double c = 0;  // least-squares fit of log n ~ C m log m over the samples
  std::vector<EllSample> samples;
  double band_low = 0;   // min of ell - estimate
  double band_high = 0;  // max of ell - estimate
};

/// Exact ell(n) at the given n (each >= 3), and the fitted W-estimate.
EllGrowthFit fit_ell_growth(const std::vector<std::uint64_t>& samples);

/// n = 10^3 .. 10^16, one per decade.
std::vector<std::uint64_t> default_ell_samples();

}  // namespace unitary
