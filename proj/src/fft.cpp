#include "nlslab/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace nlslab {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

// Twiddles for size n: w[j] = exp(-2*pi*i*j/n), j = 0..n/2-1.
std::shared_ptr<const std::vector<cplx>> twiddles(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const std::vector<cplx>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto tab = std::make_shared<std::vector<cplx>>(n / 2);
  const double step = -2.0 * M_PI / static_cast<double>(n);
  for (std::size_t j = 0; j < n / 2; ++j)
    (*tab)[j] = cplx(std::cos(step * static_cast<double>(j)),
                     std::sin(step * static_cast<double>(j)));
  cache.emplace(n, tab);
  return tab;
}

void bit_reverse(std::vector<cplx>& a) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
}

void fft_core(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fft: size must be a power of two");
  if (n == 1) return;
  auto tw = twiddles(n);
  const std::vector<cplx>& w = *tw;
  bit_reverse(a);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        cplx t = w[j * stride];
        if (inverse) t = std::conj(t);
        t *= a[i + j + len / 2];
        const cplx u = a[i + j];
        a[i + j] = u + t;
        a[i + j + len / 2] = u - t;
      }
    }
  }
}

}  // namespace

void fft_forward(std::vector<cplx>& data) { fft_core(data, false); }
void fft_inverse(std::vector<cplx>& data) { fft_core(data, true); }

std::vector<cplx> dft_direct(const std::vector<cplx>& in, bool inverse) {
  const std::size_t n = in.size();
  std::vector<cplx> out(n, cplx(0.0, 0.0));
  const double sgn = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = sgn * 2.0 * M_PI * static_cast<double>(j) *
                         static_cast<double>(k) / static_cast<double>(n);
      acc += in[j] * cplx(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace nlslab
