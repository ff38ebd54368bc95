#pragma once

#include <vector>

#include "nlslab/modulation.hpp"
#include "nlslab/resonance.hpp"

namespace nlslab {

// Interaction-picture box pieces of a field at one time: spectra of
// v_n = box_n v for n = -K..K.
struct BoxSequence {
  GridSpec grid;
  int K = 0;
  std::vector<std::vector<cplx>> spec;  // index n + K, centered spectra

  const std::vector<cplx>& piece(int n) const { return spec[static_cast<std::size_t>(n + K)]; }
  bool has(int n) const { return n >= -K && n <= K; }
};

BoxSequence to_boxes(const WindowFamily& w, const Field& v, int K);
Field from_boxes(const WindowFamily& w, const BoxSequence& b);

// Sums of first-generation interactions sum box_n exp(it dxx)[u_1 conj(u_2) u_3]
// over triples n1 - n2 + n3 ~ n, evaluated from free-evolved pieces
// u_m = exp(-it dxx) v_m held in physical space on the doubled (dealiased)
// grid. Pair diagonals D_s = sum_{n1+n3=s} u_n1 u_n3 and correlations
// E_c = sum_m conj(u_m) u_{m+c} make the full and resonant sums O(K) per
// output box instead of O(K^2).
class TripleEngine {
 public:
  TripleEngine(const WindowFamily& w, const BoxSequence& v, double t);

  const WindowFamily& windows() const { return *w_; }
  const GridSpec& grid() const { return g_; }
  int K() const { return K_; }
  double time() const { return t_; }

  // sum over every triple with n1 - n2 + n3 ~ n
  std::vector<cplx> full_sum(int n) const;
  // (R2, R1): sum over n1 ~ n plus sum over n3 ~ n, and sum over both
  std::pair<std::vector<cplx>, std::vector<cplx>> resonant_sums(int n) const;
  // direct sum over an explicit triple list
  std::vector<cplx> triple_sum(int n, const std::vector<Triple>& triples) const;
  // full nonresonant sum: full - R2 + R1
  std::vector<cplx> nonresonant_sum(int n) const;

 private:
  std::vector<cplx> mask_back(int n, std::vector<cplx> padded_phys) const;
  const std::vector<cplx>& u(int m) const { return u_[static_cast<std::size_t>(m + K_)]; }

  const WindowFamily* w_;
  GridSpec g_, pg_;
  int K_;
  double t_;
  std::vector<std::vector<cplx>> u_;     // padded physical u_m
  std::vector<std::vector<cplx>> diag_;  // D_s, s = -2K..2K
  std::vector<std::vector<cplx>> corr_;  // E_c, c = -2..2
};

namespace ref {

// Straightforward per-triple evaluation (propagate, multiply, project) used
// as the serial reference for tests and the benchmark target.
std::vector<cplx> triple_sum_direct(const WindowFamily& w, const BoxSequence& v, int n, double t,
                                    const std::vector<Triple>& triples);
std::vector<cplx> full_sum_direct(const WindowFamily& w, const BoxSequence& v, int n, double t);

}  // namespace ref

}  // namespace nlslab
