#include "nlslab/modulation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nlslab/smooth.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nlslab {

WindowFamily::WindowFamily(const GridSpec& grid, double deriv_growth_exponent)
    : grid_(grid), deriv_growth_(deriv_growth_exponent) {
  if (grid.modes_per_box < 8)
    throw std::invalid_argument("WindowFamily: grid too coarse, need >= 8 modes per box");
  const int mpb = grid.modes_per_box;
  sigma_half_ = (3 * mpb) / 4;          // support radius 3/4
  fat_half_ = (17 * mpb) / 16 + 1;      // support radius 17/16 (pad one step)

  // Raw mollified indicator, then pointwise renormalization by the sum of
  // integer translates. The translate sum is 1-periodic on the lattice.
  std::vector<double> raw(static_cast<std::size_t>(2 * sigma_half_ + 1));
  for (std::ptrdiff_t o = -sigma_half_; o <= sigma_half_; ++o)
    raw[static_cast<std::size_t>(o + sigma_half_)] =
        mollified_indicator(static_cast<double>(o) * grid.dxi, 0.5, 0.25);
  auto raw_at = [&](std::ptrdiff_t o) -> double {
    const std::ptrdiff_t i = o + sigma_half_;
    return (i < 0 || i >= static_cast<std::ptrdiff_t>(raw.size())) ? 0.0 : raw[static_cast<std::size_t>(i)];
  };
  sigma_.assign(raw.size(), 0.0);
  for (std::ptrdiff_t o = -sigma_half_; o <= sigma_half_; ++o) {
    const double den = raw_at(o) + raw_at(o - mpb) + raw_at(o + mpb);
    sigma_[static_cast<std::size_t>(o + sigma_half_)] = raw_at(o) / den;
  }

  fat_.assign(static_cast<std::size_t>(2 * fat_half_ + 1), 0.0);
  for (std::ptrdiff_t o = -fat_half_; o <= fat_half_; ++o)
    fat_[static_cast<std::size_t>(o + fat_half_)] =
        mollified_indicator(static_cast<double>(o) * grid.dxi, 29.0 / 32.0, 5.0 / 32.0);

  lower_bound_ = 1.0;
  for (std::ptrdiff_t o = -mpb / 2; o < mpb / 2; ++o)
    lower_bound_ = std::min(lower_bound_, sigma_lat(o));

  // Overlap and frame bounds over one period of the lattice.
  overlap_ = 0;
  frame_lo_ = 2.0;
  frame_hi_ = 0.0;
  for (int r = 0; r < mpb; ++r) {
    int count = 0;
    double ssq = 0.0;
    for (int k = -2; k <= 2; ++k) {
      const double v = sigma_lat(r - static_cast<std::ptrdiff_t>(k) * mpb);
      if (v != 0.0) ++count;
      ssq += v * v;
    }
    overlap_ = std::max(overlap_, count);
    frame_lo_ = std::min(frame_lo_, ssq);
    frame_hi_ = std::max(frame_hi_, ssq);
  }

  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(grid.samples / 2);
  max_resolved_ = static_cast<int>((half - fat_half_) / mpb);
}

ModParams::ModParams(double p_, double q_, double s_) : p(p_), q(q_), s(s_) {
  if (p < 1.0 || q < 1.0) throw std::invalid_argument("ModParams: p, q >= 1 required");
  if (s < 0.0) throw std::invalid_argument("ModParams: s >= 0 required");
}

double ModParams::q_conj() const {
  if (q == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(q)) return 1.0;
  return q / (q - 1.0);
}

double japanese_bracket(int k) {
  return std::sqrt(1.0 + static_cast<double>(k) * static_cast<double>(k));
}

std::vector<cplx> box_spectrum(const WindowFamily& w, const std::vector<cplx>& spec, int k,
                               bool fattened) {
  const GridSpec& g = w.grid();
  if (!w.resolved(k)) throw std::invalid_argument("box_spectrum: box outside resolved band");
  std::vector<cplx> out(g.samples, cplx(0.0, 0.0));
  const std::ptrdiff_t half = fattened ? w.fat_half() : w.sigma_half();
  const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(g.center_index(k));
  for (std::ptrdiff_t o = -half; o <= half; ++o) {
    const std::ptrdiff_t i = c + o;
    if (i < 0 || i >= static_cast<std::ptrdiff_t>(g.samples)) continue;
    const double v = fattened ? w.fat_lat(o) : w.sigma_lat(o);
    out[static_cast<std::size_t>(i)] = v * spec[static_cast<std::size_t>(i)];
  }
  return out;
}

Field box_project(const WindowFamily& w, const Field& f, int k, bool fattened) {
  const Field g = with_spectrum(f);
  return field_from_spectrum(f.grid, box_spectrum(w, *g.spectrum, k, fattened));
}

BoxDecomposition decompose(const WindowFamily& w, const Field& f) {
  BoxDecomposition out;
  out.max_box = w.max_resolved_box();
  const Field g = with_spectrum(f);
  out.pieces.resize(static_cast<std::size_t>(2 * out.max_box + 1));
  const int n = 2 * out.max_box + 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int idx = 0; idx < n; ++idx) {
    const int k = idx - out.max_box;
    out.pieces[static_cast<std::size_t>(idx)] =
        field_from_spectrum(f.grid, box_spectrum(w, *g.spectrum, k, false));
  }
  return out;
}

double modulation_norm(const WindowFamily& w, const Field& f, const ModParams& mp,
                       std::vector<BoxNormRow>* rows) {
  const GridSpec& g = w.grid();
  const Field fs = with_spectrum(f);
  const std::vector<cplx>& spec = *fs.spectrum;

  // Leakage check: energy outside the union of resolved sigma supports.
  const int kmax = w.max_resolved_box();
  double total = 0.0, outside = 0.0;
  const double reach = static_cast<double>(kmax) + 0.75;
  for (std::size_t i = 0; i < g.samples; ++i) {
    const double e = std::norm(spec[i]);
    total += e;
    if (std::abs(g.xi(i)) > reach) outside += e;
  }
  if (total > 0.0 && outside > 1e-10 * total)
    throw std::invalid_argument("modulation_norm: unresolved spectral energy fraction " +
                                std::to_string(outside / total));

  const int n = 2 * kmax + 1;
  std::vector<double> box_lp(static_cast<std::size_t>(n), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int idx = 0; idx < n; ++idx) {
    const int k = idx - kmax;
    Field piece = field_from_spectrum(g, box_spectrum(w, spec, k, false));
    box_lp[static_cast<std::size_t>(idx)] = lp_norm(piece, mp.p);
  }

  double acc = 0.0, sup = 0.0;
  for (int idx = 0; idx < n; ++idx) {
    const int k = idx - kmax;
    const double weight = std::pow(japanese_bracket(k), mp.s);
    const double term = weight * box_lp[static_cast<std::size_t>(idx)];
    if (rows) rows->push_back({k, box_lp[static_cast<std::size_t>(idx)], weight, term});
    if (std::isinf(mp.q))
      sup = std::max(sup, term);
    else
      acc += std::pow(term, mp.q);
  }
  return std::isinf(mp.q) ? sup : std::pow(acc, 1.0 / mp.q);
}

Field fourier_cutoff(const Field& f, double cutoff) {
  if (cutoff <= 0.0) throw std::invalid_argument("fourier_cutoff: cutoff must be positive");
  const Field fs = with_spectrum(f);
  std::vector<cplx> spec = *fs.spectrum;
  const GridSpec& g = f.grid;
  for (std::size_t i = 0; i < g.samples; ++i)
    spec[i] *= mollified_indicator(g.xi(i), cutoff + 0.5, 0.5);
  return field_from_spectrum(g, std::move(spec));
}

std::optional<double> nesting_ratio(const WindowFamily& w, const Field& f, int k, double p1,
                                    double p2) {
  if (p1 > p2) throw std::invalid_argument("nesting_ratio: requires p1 <= p2");
  Field piece = box_project(w, f, k, false);
  const double lo = lp_norm(piece, p1);
  if (lo == 0.0) return std::nullopt;
  return lp_norm(piece, p2) / lo;
}

}  // namespace nlslab
