#pragma once

#include <cstddef>
#include <vector>

#include "nlslab/fft.hpp"

namespace nlslab {

// C^inf bump supported on (-1,1), normalized so that its integral is 1.
double unit_bump(double t);

// Convolution of the indicator of [-a, a] with the bump of half-width h,
// evaluated by quadrature:
//   == 1 for |x| <= a - h,  == 0 for |x| >= a + h, smooth ramp between.
double mollified_indicator(double x, double a, double h);

// Composite Simpson on uniformly spaced samples (odd count).
double simpson(const std::vector<double>& values, double step);

// Prefix integrals I[k] = int_{x0}^{x0 + k*step} on uniform samples.
// Simpson pairs for even k; odd cells use the 3-point right-corrected rule
// (h/12)(-f[k-2] + 8 f[k-1] + 5 f[k]); both are locally O(step^4).
// I[1] for the very first cell falls back to the 3-point left rule.
std::vector<double> prefix_integrals(const std::vector<double>& values, double step);
std::vector<cplx> prefix_integrals(const std::vector<cplx>& values, double step);

}  // namespace nlslab
