#include "unitary/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "unitary/errors.hpp"

namespace unitary {

double lambert_w(double z) {
  if (!std::isfinite(z) || z < 0.0) {
    throw DomainError("lambert_w needs a finite z >= 0, got " + std::to_string(z));
  }
  if (z == 0.0) return 0.0;

  double w = 0.0;
  if (z > std::exp(1.0)) {
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  } else {
    w = std::log1p(z);
  }

  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double fp = ew * (w + 1.0);
    const double step = f / (fp - (w + 2.0) * f / (2.0 * w + 2.0));
    w -= step;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) break;
  }
  return w;
}

double ell_solution(double log_n, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("ell_solution needs C > 0");
  if (!(log_n > c * std::exp(1.0)) || !std::isfinite(log_n)) {
    throw DomainError("ell_solution needs log n > C e (log n = " + std::to_string(log_n) +
                      ", C = " + std::to_string(c) + ")");
  }
  const double x = log_n / c;
  return x / lambert_w(x);
}

std::vector<std::uint64_t> default_ell_samples() {
  std::vector<std::uint64_t> out;
  std::uint64_t n = 1000;
  for (int e = 3; e <= 16; ++e) {
    out.push_back(n);
    n *= 10;
  }
  return out;
}

EllGrowthFit fit_ell_growth(const std::vector<std::uint64_t>& samples) {
  if (samples.empty()) throw DomainError("ell growth fit needs at least one sample");
  double num = 0.0;
  double den = 0.0;
  EllGrowthFit fit;
  for (std::uint64_t n : samples) {
    const int m = primorial_rank(n);
    if (m < 2) throw DomainError("ell growth samples need ell(n) >= 2, got n = " + std::to_string(n));
    const double a = m * std::log(static_cast<double>(m));
    const double b = std::log(static_cast<double>(n));
    num += a * b;
    den += a * a;
    fit.samples.push_back({n, m, 0.0});
  }
  fit.c = num / den;
  fit.band_low = std::numeric_limits<double>::infinity();
  fit.band_high = -std::numeric_limits<double>::infinity();
  for (auto& s : fit.samples) {
    s.estimate = ell_solution(std::log(static_cast<double>(s.n)), fit.c);
    const double gap = s.ell - s.estimate;
    fit.band_low = std::min(fit.band_low, gap);
    fit.band_high = std::max(fit.band_high, gap);
  }
  return fit;
}

}  // namespace unitary
