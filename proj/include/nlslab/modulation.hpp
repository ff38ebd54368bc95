#pragma once

#include <optional>
#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

// Smooth partition of unity {sigma_k = sigma_0(. - k)} on the frequency grid
// plus the fattened profiles used to mask operator inputs.
//
// sigma_0 is the indicator of [-1/2, 1/2) mollified by a bump of half-width
// 1/4 (support [-3/4, 3/4]), renormalized pointwise by the sum of its integer
// translates so the partition of unity is exact on the lattice. The fattened
// profile is identically 1 on [-3/4, 3/4] and supported in [-17/16, 17/16].
class WindowFamily {
 public:
  explicit WindowFamily(const GridSpec& grid, double deriv_growth_exponent = 1.1);

  const GridSpec& grid() const { return grid_; }

  // Profile values at lattice offset o from the box center, xi - k = o * dxi.
  double sigma_lat(std::ptrdiff_t o) const {
    const std::ptrdiff_t i = o + sigma_half_;
    return (i < 0 || i >= static_cast<std::ptrdiff_t>(sigma_.size())) ? 0.0 : sigma_[static_cast<std::size_t>(i)];
  }
  double fat_lat(std::ptrdiff_t o) const {
    const std::ptrdiff_t i = o + fat_half_;
    return (i < 0 || i >= static_cast<std::ptrdiff_t>(fat_.size())) ? 0.0 : fat_[static_cast<std::size_t>(i)];
  }

  // sigma_k / fattened sigma_k at centered spectral index i.
  double sigma_at(int k, std::size_t i) const {
    return sigma_lat(grid_.mode(i) - static_cast<std::ptrdiff_t>(k) * grid_.modes_per_box);
  }
  double fat_at(int k, std::size_t i) const {
    return fat_lat(grid_.mode(i) - static_cast<std::ptrdiff_t>(k) * grid_.modes_per_box);
  }

  std::ptrdiff_t sigma_half() const { return sigma_half_; }   // lattice steps, 3/4 unit
  std::ptrdiff_t fat_half() const { return fat_half_; }       // lattice steps, 17/16 unit

  double lower_bound_on_core() const { return lower_bound_; }  // min over Q_0
  int overlap_count() const { return overlap_; }
  double deriv_growth_exponent() const { return deriv_growth_; }

  // Largest |k| whose fattened box sits inside the resolved band.
  int max_resolved_box() const { return max_resolved_; }
  bool resolved(int k) const { return k >= -max_resolved_ && k <= max_resolved_; }

  // Frame bounds of S(xi) = sum_k sigma_k(xi)^2 over the lattice.
  double frame_lower() const { return frame_lo_; }
  double frame_upper() const { return frame_hi_; }

 private:
  GridSpec grid_;
  std::vector<double> sigma_, fat_;
  std::ptrdiff_t sigma_half_ = 0, fat_half_ = 0;
  double lower_bound_ = 0.0;
  int overlap_ = 0;
  int max_resolved_ = 0;
  double frame_lo_ = 0.0, frame_hi_ = 0.0;
  double deriv_growth_ = 1.1;
};

// (p, q, s) with the conjugate exponent of q; infinities mean sup norms.
struct ModParams {
  double p = 2.0;
  double q = 2.0;
  double s = 0.0;

  ModParams() = default;
  ModParams(double p_, double q_, double s_);
  double q_conj() const;  // 1/q + 1/q' = 1
};

double japanese_bracket(int k);

// Spectrum of box piece: sigma_k (or fattened sigma_k) times the spectrum.
std::vector<cplx> box_spectrum(const WindowFamily& w, const std::vector<cplx>& spec, int k,
                               bool fattened);
Field box_project(const WindowFamily& w, const Field& f, int k, bool fattened = false);

struct BoxDecomposition {
  int max_box = 0;                       // pieces cover k = -max_box..max_box
  std::vector<Field> pieces;             // index k + max_box
  const Field& piece(int k) const { return pieces[static_cast<std::size_t>(k + max_box)]; }
};

BoxDecomposition decompose(const WindowFamily& w, const Field& f);

struct BoxNormRow {
  int k;
  double box_lp;
  double weight;        // <k>^s
  double contribution;  // weight * box_lp, the l^q summand
};

// (sum_k <k>^{sq} ||box_k f||_p^q)^{1/q}; per-box L^p by the rectangle rule.
// Rejects input whose spectral energy outside the resolved boxes exceeds
// 1e-10 of the total.
double modulation_norm(const WindowFamily& w, const Field& f, const ModParams& mp,
                       std::vector<BoxNormRow>* rows = nullptr);

// Smooth symbol == 1 on [-cutoff, cutoff], vanishing outside
// [-cutoff-1, cutoff+1].
Field fourier_cutoff(const Field& f, double cutoff);

// ||box_k f||_{p2} / ||box_k f||_{p1}; nullopt when the denominator vanishes.
std::optional<double> nesting_ratio(const WindowFamily& w, const Field& f, int k, double p1,
                                    double p2);

}  // namespace nlslab
