#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nlslab {

using cplx = std::complex<double>;

// In-place radix-2 decimation-in-time FFT, unnormalized:
//   out[k] = sum_j in[j] exp(-2*pi*i*j*k/n).
// n must be a power of two. Twiddle tables are cached per size and shared;
// concurrent calls from different threads are safe.
void fft_forward(std::vector<cplx>& data);

// Unnormalized inverse: out[j] = sum_k in[k] exp(+2*pi*i*j*k/n).
// fft_inverse(fft_forward(x)) == n * x.
void fft_inverse(std::vector<cplx>& data);

bool is_power_of_two(std::size_t n);

// Direct O(n^2) summation, same convention as fft_forward. Test oracle and
// serial reference for the benchmark target.
std::vector<cplx> dft_direct(const std::vector<cplx>& in, bool inverse = false);

}  // namespace nlslab
