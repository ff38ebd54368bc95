#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlslab/fft.hpp"

namespace nlslab {

// Periodic grid on [-L/2, L/2). Frequencies live on dxi * {-M/2, ..., M/2-1}.
// L/(2pi) must be a positive integer (>= 8) so that every integer frequency
// box center lands exactly on the sample lattice; this is what lets window
// tables be shared across boxes as plain index shifts.
struct GridSpec {
  double length = 0.0;       // L
  std::size_t samples = 0;   // M, power of two
  double dx = 0.0;           // L / M
  double dxi = 0.0;          // 2*pi / L
  int modes_per_box = 0;     // 1/dxi, integral by construction

  GridSpec() = default;
  GridSpec(double L, std::size_t M);

  double x(std::size_t j) const {
    return -0.5 * length + dx * static_cast<double>(j);
  }
  // centered spectral index i <-> frequency
  double xi(std::size_t i) const {
    return dxi * (static_cast<double>(i) - static_cast<double>(samples) / 2.0);
  }
  std::ptrdiff_t mode(std::size_t i) const {
    return static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(samples / 2);
  }
  // centered index of the spectral sample at integer box center k (xi = k)
  std::size_t center_index(int k) const {
    return samples / 2 + static_cast<std::size_t>(static_cast<std::ptrdiff_t>(k) * modes_per_box);
  }
  double nyquist() const { return dxi * static_cast<double>(samples) / 2.0; }

  bool operator==(const GridSpec& o) const {
    return length == o.length && samples == o.samples;
  }
};

// Complex field sampled in physical space, with an optional cached spectrum
// in centered (increasing-xi) order. Values are immutable by convention:
// operations return fresh fields.
struct Field {
  GridSpec grid;
  std::vector<cplx> samples;
  std::optional<std::vector<cplx>> spectrum;

  Field() = default;
  explicit Field(const GridSpec& g) : grid(g), samples(g.samples, cplx(0.0, 0.0)) {}
  Field(const GridSpec& g, std::vector<cplx> phys) : grid(g), samples(std::move(phys)) {}
};

// Forward transform approximating the continuous Fourier integral:
//   fhat(xi_m) = dx * sum_j f(x_j) exp(-i xi_m x_j),
// inverse carries the dxi/(2*pi) weight. Centered storage order.
std::vector<cplx> forward_spectrum(const GridSpec& g, const std::vector<cplx>& phys);
std::vector<cplx> inverse_samples(const GridSpec& g, const std::vector<cplx>& spec);

// dft caches the spectrum on the returned field; rejects non-finite input.
Field dft(const Field& f);
// Build a field directly from a centered spectrum.
Field field_from_spectrum(const GridSpec& g, std::vector<cplx> spec);
const std::vector<cplx>& spectrum_of(const Field& f);  // requires cached spectrum
Field with_spectrum(Field f);

// Zero-pad a centered spectrum onto the 2M grid of the same length (and cut
// back). Cubic pointwise products are formed on the padded grid so that the
// result equals the zero-extended linear convolution on the resolved band.
std::vector<cplx> pad_spectrum(const GridSpec& g, const std::vector<cplx>& spec);
std::vector<cplx> truncate_spectrum(const GridSpec& g, const std::vector<cplx>& padded);
GridSpec padded_grid(const GridSpec& g);

double l2_norm(const Field& f);
double lp_norm(const Field& f, double p);  // rectangle rule, p = inf -> max
bool finite(const std::vector<cplx>& v);

// a * exp(-(x-x0)^2 / (2 w^2)) * exp(i xi0 x), periodized over the domain.
// Rejected if the periodization tail at the domain edge exceeds 1e-14 of the
// peak.
Field make_gaussian(const GridSpec& g, double amplitude, double width, double center,
                    double modulation);

// Spectrum sum_k c[k] * prof(xi - k) with prof a smooth bump supported in
// [-1/4, 1/4]; coefficients run k = -K..K.
Field make_boxdata(const GridSpec& g, const std::vector<cplx>& coeffs);

// 16-byte header (M as u64 LE, L as f64 LE) followed by M interleaved
// (re, im) f64 LE pairs.
void write_field(const Field& f, const std::string& path);
Field read_field(const std::string& path);
void write_field_csv(const Field& f, const std::string& path);  // columns x, re, im

}  // namespace nlslab
