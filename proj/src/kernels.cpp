#include "nlslab/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

namespace {

constexpr double kPhaseFloor = 1e-9;

struct LeafInfo {
  int node = -1;
  int box = 0;
  int fsgn = +1;
  const std::vector<cplx>* spec = nullptr;
};

}  // namespace

std::vector<cplx> tree_term_spectrum(const WindowFamily& w, const Chronicle& c,
                                     const IndexAssignment& a,
                                     const std::vector<const std::vector<cplx>*>& leaves,
                                     bool with_phase, double t) {
  const GridSpec& g = w.grid();
  const int mpb = g.modes_per_box;
  const std::size_t M = g.samples;
  const SignMaps sm = signs(c);
  const std::vector<int> terminals = c.terminal_nodes();
  const int J = c.generations;
  if (leaves.size() != terminals.size())
    throw std::invalid_argument("tree_term_spectrum: need one spectrum per terminal node");

  std::vector<LeafInfo> leaf(terminals.size());
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    leaf[i].node = terminals[i];
    leaf[i].box = a.freq[static_cast<std::size_t>(terminals[i])];
    leaf[i].fsgn = sm.fsgn[static_cast<std::size_t>(terminals[i])];
    leaf[i].spec = leaves[i];
    if (!w.resolved(leaf[i].box))
      throw std::invalid_argument("tree_term_spectrum: leaf box outside resolved band");
  }

  // Oriented lattice offsets per node; leaves loop over their fattened
  // supports, internal offsets follow left - middle + right.
  std::vector<std::ptrdiff_t> offset(c.nodes.size(), 0);
  std::vector<cplx> out(M, cplx(0.0, 0.0));
  const std::ptrdiff_t fh = w.fat_half();
  const double dxi = g.dxi;
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(M / 2);

  // growth-node children ids per generation, for the phase factors
  struct Gen {
    std::ptrdiff_t node, left, right;
    int sign;
  };
  std::vector<Gen> gens;
  for (int j = 0; j < J; ++j) {
    const int id = c.growth[static_cast<std::size_t>(j)];
    const TreeNode& nd = c.nodes[static_cast<std::size_t>(id)];
    gens.push_back({id, nd.children[0], nd.children[2], sm.fsgn[static_cast<std::size_t>(id)]});
  }

  const double weight = std::pow(dxi / (2.0 * M_PI), 2.0 * J);

  // Depth-first over leaf offsets; value accumulates leaf spectra and masks.
  std::function<void(std::size_t, cplx)> recurse = [&](std::size_t li, cplx acc) {
    if (li == leaf.size()) {
      // resolve internal offsets bottom-up (children have larger ids)
      for (std::size_t id = c.nodes.size(); id-- > 0;) {
        const TreeNode& nd = c.nodes[id];
        if (!nd.terminal())
          offset[id] = offset[static_cast<std::size_t>(nd.children[0])] -
                       offset[static_cast<std::size_t>(nd.children[1])] +
                       offset[static_cast<std::size_t>(nd.children[2])];
      }
      // internal window masks
      double masks = 1.0;
      for (int j = 0; j < J && masks != 0.0; ++j) {
        const int id = c.growth[static_cast<std::size_t>(j)];
        masks *= w.sigma_lat(offset[static_cast<std::size_t>(id)] -
                             static_cast<std::ptrdiff_t>(a.freq[static_cast<std::size_t>(id)]) * mpb);
      }
      if (masks == 0.0) return;
      // running phases
      double den = 1.0;
      double run = 0.0;
      for (const Gen& gn : gens) {
        const double za = dxi * static_cast<double>(offset[static_cast<std::size_t>(gn.node)]);
        const double z1 = dxi * static_cast<double>(offset[static_cast<std::size_t>(gn.left)]);
        const double z3 = dxi * static_cast<double>(offset[static_cast<std::size_t>(gn.right)]);
        run += gn.sign * (za - z1) * (za - z3);
        if (std::abs(run) < kPhaseFloor)
          throw std::domain_error("tree_term_spectrum: vanishing running phase on the support");
        den *= run;
      }
      cplx val = acc * (masks / den);
      if (with_phase) val *= std::polar(1.0, -2.0 * t * run);
      const std::ptrdiff_t oi = half + offset[0];
      if (oi >= 0 && oi < static_cast<std::ptrdiff_t>(M)) out[static_cast<std::size_t>(oi)] += val;
      return;
    }
    const LeafInfo& lf = leaf[li];
    const std::ptrdiff_t center = static_cast<std::ptrdiff_t>(lf.box) * mpb;
    for (std::ptrdiff_t o = center - fh; o <= center + fh; ++o) {
      const std::ptrdiff_t idx = half + o;
      if (idx < 0 || idx >= static_cast<std::ptrdiff_t>(M)) continue;
      const double mask = w.fat_lat(o - center);
      if (mask == 0.0) continue;
      cplx v = (*lf.spec)[static_cast<std::size_t>(idx)];
      if (v == cplx(0.0, 0.0)) continue;
      if (lf.fsgn < 0) v = std::conj(v);
      offset[static_cast<std::size_t>(lf.node)] = o;
      recurse(li + 1, acc * (mask * v));
    }
  };
  recurse(0, cplx(weight, 0.0));
  return out;
}

std::vector<cplx> gen1_term_spectrum(const WindowFamily& w, int n, int n1, int n2, int n3,
                                     const std::vector<cplx>& l1, const std::vector<cplx>& l2,
                                     const std::vector<cplx>& l3, bool with_phase, double t) {
  const GridSpec& g = w.grid();
  const int mpb = g.modes_per_box;
  const std::ptrdiff_t M = static_cast<std::ptrdiff_t>(g.samples);
  const std::ptrdiff_t half = M / 2;
  const std::ptrdiff_t sh = w.sigma_half();
  const std::ptrdiff_t fh = w.fat_half();
  const double dxi = g.dxi;
  const double dxi2 = dxi * dxi;

  // kernel table over gap offsets d = o_xi - o_leaf
  const std::ptrdiff_t spread = sh + fh;
  const std::ptrdiff_t base1 = static_cast<std::ptrdiff_t>(n - n1) * mpb;
  const std::ptrdiff_t base3 = static_cast<std::ptrdiff_t>(n - n3) * mpb;
  const std::size_t tab = static_cast<std::size_t>(2 * spread + 1);
  std::vector<cplx> kernel(tab * tab);
  for (std::ptrdiff_t i = -spread; i <= spread; ++i)
    for (std::ptrdiff_t j = -spread; j <= spread; ++j) {
      const double m = dxi2 * static_cast<double>(base1 + i) * static_cast<double>(base3 + j);
      cplx v(0.0, 0.0);
      if (std::abs(m) >= kPhaseFloor) {
        v = cplx(1.0 / m, 0.0);
        if (with_phase) v *= std::polar(1.0, -2.0 * t * m);
      }
      kernel[static_cast<std::size_t>(i + spread) * tab + static_cast<std::size_t>(j + spread)] = v;
    }

  std::vector<cplx> out(static_cast<std::size_t>(M), cplx(0.0, 0.0));
  const double weight = dxi2 / (4.0 * M_PI * M_PI);
  const std::ptrdiff_t c1 = static_cast<std::ptrdiff_t>(n1) * mpb;
  const std::ptrdiff_t c2 = static_cast<std::ptrdiff_t>(n2) * mpb;
  const std::ptrdiff_t c3 = static_cast<std::ptrdiff_t>(n3) * mpb;
  const std::ptrdiff_t cn = static_cast<std::ptrdiff_t>(n) * mpb;

  for (std::ptrdiff_t oo = cn - sh; oo <= cn + sh; ++oo) {
    if (half + oo < 0 || half + oo >= M) continue;
    const double mask_out = w.sigma_lat(oo - cn);
    if (mask_out == 0.0) continue;
    cplx acc(0.0, 0.0);
    for (std::ptrdiff_t o1 = c1 - fh; o1 <= c1 + fh; ++o1) {
      if (half + o1 < 0 || half + o1 >= M) continue;
      const double m1 = w.fat_lat(o1 - c1);
      if (m1 == 0.0) continue;
      const cplx a = l1[static_cast<std::size_t>(half + o1)] * m1;
      if (a == cplx(0.0, 0.0)) continue;
      const std::size_t row = static_cast<std::size_t>(oo - o1 - base1 + spread) * tab;
      for (std::ptrdiff_t o3 = c3 - fh; o3 <= c3 + fh; ++o3) {
        if (half + o3 < 0 || half + o3 >= M) continue;
        const double m3 = w.fat_lat(o3 - c3);
        if (m3 == 0.0) continue;
        const std::ptrdiff_t o2 = o1 + o3 - oo;
        if (half + o2 < 0 || half + o2 >= M) continue;
        const double m2 = w.fat_lat(o2 - c2);
        if (m2 == 0.0) continue;
        const cplx b = l3[static_cast<std::size_t>(half + o3)] * m3;
        if (b == cplx(0.0, 0.0)) continue;
        const cplx mid = std::conj(l2[static_cast<std::size_t>(half + o2)]) * m2;
        acc += a * b * mid * kernel[row + static_cast<std::size_t>(oo - o3 - base3 + spread)];
      }
    }
    out[static_cast<std::size_t>(half + oo)] = acc * (mask_out * weight);
  }
  return out;
}

std::vector<cplx> inverse_phase_spectrum(const WindowFamily& w, int n, int n1, int n2, int n3,
                                         const std::vector<cplx>& u1,
                                         const std::vector<cplx>& u2,
                                         const std::vector<cplx>& u3) {
  if (std::abs(n - n1) <= 1 || std::abs(n - n3) <= 1)
    throw std::invalid_argument("inverse_phase_spectrum: resonant triple");
  return gen1_term_spectrum(w, n, n1, n2, n3, u1, u2, u3, false, 0.0);
}

int infer_box(const WindowFamily& w, const Field& f) {
  const GridSpec& g = w.grid();
  const Field fs = with_spectrum(f);
  const std::vector<cplx>& spec = *fs.spectrum;
  std::size_t peak = 0;
  double best = -1.0;
  double total = 0.0;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double m = std::norm(spec[i]);
    total += m;
    if (m > best) {
      best = m;
      peak = i;
    }
  }
  if (total == 0.0) return 0;
  const int k = static_cast<int>(std::lround(g.xi(peak)));
  if (!w.resolved(k)) throw std::invalid_argument("infer_box: peak outside resolved band");
  double outside = 0.0;
  const std::ptrdiff_t center = static_cast<std::ptrdiff_t>(g.center_index(k));
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const std::ptrdiff_t o = static_cast<std::ptrdiff_t>(i) - center;
    if (std::abs(o) > w.fat_half() || w.fat_lat(o) < 1.0 - 1e-12) outside += std::norm(spec[i]);
  }
  if (outside > 1e-10 * total)
    throw std::invalid_argument("infer_box: input not box-localized (fattened) at k=" +
                                std::to_string(k));
  return k;
}

}  // namespace nlslab
