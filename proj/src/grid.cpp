#include "nlslab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "nlslab/smooth.hpp"

namespace nlslab {

GridSpec::GridSpec(double L, std::size_t M) {
  if (L <= 0.0) throw std::invalid_argument("GridSpec: length must be positive");
  if (!is_power_of_two(M)) throw std::invalid_argument("GridSpec: samples must be a power of two");
  length = L;
  samples = M;
  dx = L / static_cast<double>(M);
  dxi = 2.0 * M_PI / L;
  const double mpb = 1.0 / dxi;
  modes_per_box = static_cast<int>(std::lround(mpb));
  if (std::abs(mpb - static_cast<double>(modes_per_box)) > 1e-9)
    throw std::invalid_argument("GridSpec: L/(2*pi) must be an integer");
  if (modes_per_box < 8)
    throw std::invalid_argument("GridSpec: need at least 8 modes per unit frequency box");
}

bool finite(const std::vector<cplx>& v) {
  for (const cplx& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

std::vector<cplx> forward_spectrum(const GridSpec& g, const std::vector<cplx>& phys) {
  const std::size_t M = g.samples;
  if (phys.size() != M) throw std::invalid_argument("forward_spectrum: size mismatch");
  // Modulate by (-1)^j to shift the natural DFT so index i is the centered
  // mode i - M/2, then fix the phase from x_j starting at -L/2.
  std::vector<cplx> a(M);
  for (std::size_t j = 0; j < M; ++j) a[j] = (j % 2 == 0) ? phys[j] : -phys[j];
  fft_forward(a);
  for (std::size_t i = 0; i < M; ++i) {
    const bool odd = (static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(M / 2)) & 1;
    a[i] *= odd ? -g.dx : g.dx;
  }
  return a;
}

std::vector<cplx> inverse_samples(const GridSpec& g, const std::vector<cplx>& spec) {
  const std::size_t M = g.samples;
  if (spec.size() != M) throw std::invalid_argument("inverse_samples: size mismatch");
  std::vector<cplx> a(M);
  for (std::size_t i = 0; i < M; ++i) {
    const bool odd = (static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(M / 2)) & 1;
    a[i] = odd ? -spec[i] : spec[i];
  }
  fft_inverse(a);
  const double scale = 1.0 / (g.dx * static_cast<double>(M));
  for (std::size_t j = 0; j < M; ++j) {
    a[j] *= (j % 2 == 0) ? scale : -scale;
  }
  return a;
}

Field dft(const Field& f) {
  if (!finite(f.samples)) throw std::invalid_argument("dft: non-finite samples");
  Field out = f;
  out.spectrum = forward_spectrum(f.grid, f.samples);
  return out;
}

Field field_from_spectrum(const GridSpec& g, std::vector<cplx> spec) {
  Field out(g);
  out.samples = inverse_samples(g, spec);
  out.spectrum = std::move(spec);
  return out;
}

const std::vector<cplx>& spectrum_of(const Field& f) {
  if (!f.spectrum) throw std::logic_error("spectrum_of: spectrum not cached; call dft first");
  return *f.spectrum;
}

Field with_spectrum(Field f) {
  if (!f.spectrum) f.spectrum = forward_spectrum(f.grid, f.samples);
  return f;
}

GridSpec padded_grid(const GridSpec& g) { return GridSpec(g.length, 2 * g.samples); }

std::vector<cplx> pad_spectrum(const GridSpec& g, const std::vector<cplx>& spec) {
  const std::size_t M = g.samples;
  std::vector<cplx> out(2 * M, cplx(0.0, 0.0));
  std::copy(spec.begin(), spec.end(), out.begin() + static_cast<std::ptrdiff_t>(M / 2));
  return out;
}

std::vector<cplx> truncate_spectrum(const GridSpec& g, const std::vector<cplx>& padded) {
  const std::size_t M = g.samples;
  if (padded.size() != 2 * M) throw std::invalid_argument("truncate_spectrum: size mismatch");
  return std::vector<cplx>(padded.begin() + static_cast<std::ptrdiff_t>(M / 2),
                           padded.begin() + static_cast<std::ptrdiff_t>(M / 2 + M));
}

double l2_norm(const Field& f) {
  double acc = 0.0;
  for (const cplx& z : f.samples) acc += std::norm(z);
  return std::sqrt(acc * f.grid.dx);
}

double lp_norm(const Field& f, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& z : f.samples) m = std::max(m, std::abs(z));
    return m;
  }
  if (p < 1.0) throw std::invalid_argument("lp_norm: p >= 1 required");
  double acc = 0.0;
  for (const cplx& z : f.samples) acc += std::pow(std::abs(z), p);
  return std::pow(acc * f.grid.dx, 1.0 / p);
}

Field make_gaussian(const GridSpec& g, double amplitude, double width, double center,
                    double modulation) {
  if (width <= 0.0) throw std::invalid_argument("make_gaussian: width must be positive");
  const double edge = 0.5 * g.length - std::abs(center);
  if (amplitude != 0.0 && std::exp(-edge * edge / (2.0 * width * width)) > 1e-14)
    throw std::invalid_argument("make_gaussian: periodization tail exceeds 1e-14 of peak; grid too small");
  Field out(g);
  for (std::size_t j = 0; j < g.samples; ++j) {
    cplx v(0.0, 0.0);
    for (int im = -2; im <= 2; ++im) {
      const double xx = g.x(j) + g.length * im - center;
      const double env = amplitude * std::exp(-xx * xx / (2.0 * width * width));
      if (env != 0.0) v += env * std::polar(1.0, modulation * (g.x(j) + g.length * im));
    }
    out.samples[j] = v;
  }
  return with_spectrum(std::move(out));
}

Field make_boxdata(const GridSpec& g, const std::vector<cplx>& coeffs) {
  if (coeffs.size() % 2 == 0) throw std::invalid_argument("make_boxdata: coeffs must cover k = -K..K");
  const int K = static_cast<int>(coeffs.size() / 2);
  if (static_cast<double>(K) + 0.25 >= g.nyquist())
    throw std::invalid_argument("make_boxdata: K too large for grid");
  std::vector<cplx> spec(g.samples, cplx(0.0, 0.0));
  for (int k = -K; k <= K; ++k) {
    const cplx c = coeffs[static_cast<std::size_t>(k + K)];
    if (c == cplx(0.0, 0.0)) continue;
    for (std::size_t i = 0; i < g.samples; ++i) {
      const double off = g.xi(i) - static_cast<double>(k);
      if (std::abs(off) < 0.25) spec[i] += c * mollified_indicator(off, 0.125, 0.125);
    }
  }
  return field_from_spectrum(g, std::move(spec));
}

namespace {

void put_u64(std::ofstream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64(std::ofstream& os, double v) {
  std::uint64_t u;
  static_assert(sizeof(u) == sizeof(v));
  std::memcpy(&u, &v, 8);
  put_u64(os, u);
}

std::uint64_t get_u64(std::ifstream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

double get_f64(std::ifstream& is) {
  const std::uint64_t u = get_u64(is);
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

}  // namespace

void write_field(const Field& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_field: cannot open " + path);
  put_u64(os, f.grid.samples);
  put_f64(os, f.grid.length);
  for (const cplx& z : f.samples) {
    put_f64(os, z.real());
    put_f64(os, z.imag());
  }
  if (!os) throw std::runtime_error("write_field: write failed for " + path);
}

Field read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_field: cannot open " + path);
  const std::uint64_t M = get_u64(is);
  const double L = get_f64(is);
  GridSpec g(L, static_cast<std::size_t>(M));
  Field f(g);
  for (std::size_t j = 0; j < g.samples; ++j) {
    const double re = get_f64(is);
    const double im = get_f64(is);
    f.samples[j] = cplx(re, im);
  }
  if (!is) throw std::runtime_error("read_field: truncated file " + path);
  return f;
}

void write_field_csv(const Field& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_field_csv: cannot open " + path);
  os << "x,re,im\n";
  char buf[128];
  for (std::size_t j = 0; j < f.grid.samples; ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", f.grid.x(j), f.samples[j].real(),
                  f.samples[j].imag());
    os << buf;
  }
}

}  // namespace nlslab
