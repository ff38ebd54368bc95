#include "nlslab/smooth.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

namespace {

double raw_bump(double t) {
  if (std::abs(t) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t * t));
}

double bump_mass() {
  // int_{-1}^{1} raw_bump, computed once; the integrand is C^inf with all
  // derivatives vanishing at the endpoints, so Simpson converges fast.
  static const double mass = [] {
    const std::size_t n = 4096;  // intervals
    const double h = 2.0 / static_cast<double>(n);
    double acc = raw_bump(-1.0) + raw_bump(1.0);
    for (std::size_t j = 1; j < n; ++j)
      acc += raw_bump(-1.0 + h * static_cast<double>(j)) * (j % 2 == 1 ? 4.0 : 2.0);
    return acc * h / 3.0;
  }();
  return mass;
}

}  // namespace

double unit_bump(double t) { return raw_bump(t) / bump_mass(); }

double mollified_indicator(double x, double a, double h) {
  if (a <= 0.0 || h <= 0.0) throw std::invalid_argument("mollified_indicator: a, h > 0");
  x = std::abs(x);
  if (x >= a + h) return 0.0;
  if (x <= a - h) return 1.0;
  // integral of (1/h) bump((x-y)/h) over y in [-a, a]; substitute t = (x-y)/h.
  const double lo = std::max(-1.0, (x - a) / h);
  const double hi = std::min(1.0, (x + a) / h);
  const std::size_t n = 512;
  const double step = (hi - lo) / static_cast<double>(n);
  double acc = unit_bump(lo) + unit_bump(hi);
  for (std::size_t j = 1; j < n; ++j)
    acc += unit_bump(lo + step * static_cast<double>(j)) * (j % 2 == 1 ? 4.0 : 2.0);
  return acc * step / 3.0;
}

double simpson(const std::vector<double>& values, double step) {
  const std::size_t n = values.size();
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("simpson: odd sample count >= 3");
  double acc = values.front() + values.back();
  for (std::size_t j = 1; j + 1 < n; ++j) acc += values[j] * (j % 2 == 1 ? 4.0 : 2.0);
  return acc * step / 3.0;
}

namespace {

template <typename T>
std::vector<T> prefix_impl(const std::vector<T>& f, double h) {
  const std::size_t n = f.size();
  std::vector<T> out(n, T{});
  if (n == 0) return out;
  if (n == 1) return out;
  if (n == 2) {  // trapezoid is all we have
    out[1] = (f[0] + f[1]) * (h / 2.0);
    return out;
  }
  for (std::size_t k = 1; k < n; ++k) {
    if (k == 1) {
      out[1] = (f[0] * 5.0 + f[1] * 8.0 - f[2]) * (h / 12.0);
    } else if (k % 2 == 0) {
      out[k] = out[k - 2] + (f[k - 2] + f[k - 1] * 4.0 + f[k]) * (h / 3.0);
    } else {
      out[k] = out[k - 1] + (-f[k - 2] + f[k - 1] * 8.0 + f[k] * 5.0) * (h / 12.0);
    }
  }
  return out;
}

}  // namespace

std::vector<double> prefix_integrals(const std::vector<double>& values, double step) {
  return prefix_impl(values, step);
}

std::vector<cplx> prefix_integrals(const std::vector<cplx>& values, double step) {
  return prefix_impl(values, step);
}

}  // namespace nlslab
