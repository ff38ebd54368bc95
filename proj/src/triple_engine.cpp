#include "nlslab/triple_engine.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

BoxSequence to_boxes(const WindowFamily& w, const Field& v, int K) {
  if (K > w.max_resolved_box())
    throw std::invalid_argument("to_boxes: K exceeds resolved band");
  const Field vs = with_spectrum(v);
  BoxSequence out;
  out.grid = v.grid;
  out.K = K;
  out.spec.resize(static_cast<std::size_t>(2 * K + 1));
  for (int n = -K; n <= K; ++n)
    out.spec[static_cast<std::size_t>(n + K)] = box_spectrum(w, *vs.spectrum, n, false);
  return out;
}

Field from_boxes(const WindowFamily& w, const BoxSequence& b) {
  std::vector<cplx> spec(b.grid.samples, cplx(0.0, 0.0));
  for (const auto& piece : b.spec)
    for (std::size_t i = 0; i < spec.size(); ++i) spec[i] += piece[i];
  (void)w;
  return field_from_spectrum(b.grid, std::move(spec));
}

namespace {

// padded physical samples of a centered-M spectrum multiplied by
// exp(i coeff xi^2)
std::vector<cplx> padded_phys(const GridSpec& g, const GridSpec& pg,
                              const std::vector<cplx>& spec, double coeff) {
  std::vector<cplx> s = spec;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double xi = g.xi(i);
    s[i] *= std::polar(1.0, coeff * xi * xi);
  }
  return inverse_samples(pg, pad_spectrum(g, s));
}

}  // namespace

TripleEngine::TripleEngine(const WindowFamily& w, const BoxSequence& v, double t)
    : w_(&w), g_(v.grid), pg_(padded_grid(v.grid)), K_(v.K), t_(t) {
  const std::size_t P = pg_.samples;
  u_.resize(static_cast<std::size_t>(2 * K_ + 1));
  for (int m = -K_; m <= K_; ++m)
    u_[static_cast<std::size_t>(m + K_)] = padded_phys(g_, pg_, v.piece(m), t);

  diag_.assign(static_cast<std::size_t>(4 * K_ + 1), std::vector<cplx>(P, cplx(0.0, 0.0)));
  for (int s = -2 * K_; s <= 2 * K_; ++s) {
    std::vector<cplx>& d = diag_[static_cast<std::size_t>(s + 2 * K_)];
    const int lo = std::max(-K_, s - K_);
    const int hi = std::min(K_, s + K_);
    for (int n1 = lo; n1 <= hi; ++n1) {
      const std::vector<cplx>& a = u(n1);
      const std::vector<cplx>& b = u(s - n1);
      for (std::size_t j = 0; j < P; ++j) d[j] += a[j] * b[j];
    }
  }

  corr_.assign(5, std::vector<cplx>(P, cplx(0.0, 0.0)));
  for (int c = -2; c <= 2; ++c) {
    std::vector<cplx>& e = corr_[static_cast<std::size_t>(c + 2)];
    for (int m = -K_; m <= K_; ++m) {
      if (m + c < -K_ || m + c > K_) continue;
      const std::vector<cplx>& a = u(m);
      const std::vector<cplx>& b = u(m + c);
      for (std::size_t j = 0; j < P; ++j) e[j] += std::conj(a[j]) * b[j];
    }
  }
}

std::vector<cplx> TripleEngine::mask_back(int n, std::vector<cplx> padded) const {
  std::vector<cplx> spec = truncate_spectrum(g_, forward_spectrum(pg_, padded));
  const std::ptrdiff_t c = static_cast<std::ptrdiff_t>(g_.center_index(n));
  const std::ptrdiff_t sh = w_->sigma_half();
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(g_.samples); ++i) {
    const std::ptrdiff_t o = i - c;
    if (o < -sh || o > sh) {
      spec[static_cast<std::size_t>(i)] = cplx(0.0, 0.0);
    } else {
      const double xi = g_.xi(static_cast<std::size_t>(i));
      spec[static_cast<std::size_t>(i)] *=
          w_->sigma_lat(o) * std::polar(1.0, -t_ * xi * xi);
    }
  }
  return spec;
}

std::vector<cplx> TripleEngine::full_sum(int n) const {
  const std::size_t P = pg_.samples;
  std::vector<cplx> acc(P, cplx(0.0, 0.0));
  for (int delta = -1; delta <= 1; ++delta)
    for (int n2 = -K_; n2 <= K_; ++n2) {
      const int s = n + delta + n2;
      if (s < -2 * K_ || s > 2 * K_) continue;
      const std::vector<cplx>& d = diag_[static_cast<std::size_t>(s + 2 * K_)];
      const std::vector<cplx>& um = u(n2);
      for (std::size_t j = 0; j < P; ++j) acc[j] += std::conj(um[j]) * d[j];
    }
  return mask_back(n, std::move(acc));
}

std::pair<std::vector<cplx>, std::vector<cplx>> TripleEngine::resonant_sums(int n) const {
  const std::size_t P = pg_.samples;
  std::vector<cplx> acc2(P, cplx(0.0, 0.0));
  // n1 ~ n: sum_{n1,delta} u_n1 E_c with c = n + delta - n1, then the same
  // with the roles of n1 and n3 swapped (E covers both orders).
  for (int pass = 0; pass < 2; ++pass)
    for (int nr = n - 1; nr <= n + 1; ++nr) {
      if (nr < -K_ || nr > K_) continue;
      for (int delta = -1; delta <= 1; ++delta) {
        const int c = n + delta - nr;
        const std::vector<cplx>& e = corr_[static_cast<std::size_t>(c + 2)];
        const std::vector<cplx>& a = u(nr);
        for (std::size_t j = 0; j < P; ++j) acc2[j] += a[j] * e[j];
      }
    }
  std::vector<cplx> acc1(P, cplx(0.0, 0.0));
  for (int n1 = n - 1; n1 <= n + 1; ++n1) {
    if (n1 < -K_ || n1 > K_) continue;
    for (int n3 = n - 1; n3 <= n + 1; ++n3) {
      if (n3 < -K_ || n3 > K_) continue;
      for (int delta = -1; delta <= 1; ++delta) {
        const int n2 = n1 + n3 - n - delta;
        if (n2 < -K_ || n2 > K_) continue;
        const std::vector<cplx>& a = u(n1);
        const std::vector<cplx>& b = u(n2);
        const std::vector<cplx>& cc = u(n3);
        for (std::size_t j = 0; j < P; ++j) acc1[j] += a[j] * std::conj(b[j]) * cc[j];
      }
    }
  }
  return {mask_back(n, std::move(acc2)), mask_back(n, std::move(acc1))};
}

std::vector<cplx> TripleEngine::triple_sum(int n, const std::vector<Triple>& triples) const {
  const std::size_t P = pg_.samples;
  std::vector<cplx> acc(P, cplx(0.0, 0.0));
  for (const Triple& tr : triples) {
    const std::vector<cplx>& a = u(tr.n1);
    const std::vector<cplx>& b = u(tr.n2);
    const std::vector<cplx>& c = u(tr.n3);
    for (std::size_t j = 0; j < P; ++j) acc[j] += a[j] * std::conj(b[j]) * c[j];
  }
  return mask_back(n, std::move(acc));
}

std::vector<cplx> TripleEngine::nonresonant_sum(int n) const {
  auto [r2, r1] = resonant_sums(n);
  std::vector<cplx> full = full_sum(n);
  for (std::size_t i = 0; i < full.size(); ++i) full[i] -= r2[i] - r1[i];
  return full;
}

namespace ref {

std::vector<cplx> triple_sum_direct(const WindowFamily& w, const BoxSequence& v, int n, double t,
                                    const std::vector<Triple>& triples) {
  const GridSpec& g = v.grid;
  const GridSpec pg = padded_grid(g);
  std::vector<cplx> acc(g.samples, cplx(0.0, 0.0));
  for (const Triple& tr : triples) {
    const std::vector<cplx> a = padded_phys(g, pg, v.piece(tr.n1), t);
    const std::vector<cplx> b = padded_phys(g, pg, v.piece(tr.n2), t);
    const std::vector<cplx> c = padded_phys(g, pg, v.piece(tr.n3), t);
    std::vector<cplx> prod(pg.samples);
    for (std::size_t j = 0; j < pg.samples; ++j) prod[j] = a[j] * std::conj(b[j]) * c[j];
    std::vector<cplx> spec = truncate_spectrum(g, forward_spectrum(pg, prod));
    for (std::size_t i = 0; i < g.samples; ++i) {
      const double xi = g.xi(i);
      acc[i] += spec[i] * w.sigma_at(n, i) * std::polar(1.0, -t * xi * xi);
    }
  }
  return acc;
}

std::vector<cplx> full_sum_direct(const WindowFamily& w, const BoxSequence& v, int n, double t) {
  return triple_sum_direct(w, v, n, t, enumerate_triples(n, v.K));
}

}  // namespace ref

}  // namespace nlslab
