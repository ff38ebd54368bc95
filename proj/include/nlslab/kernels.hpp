#pragma once

#include <vector>

#include "nlslab/modulation.hpp"
#include "nlslab/trees.hpp"

namespace nlslab {

// Direct Fourier-side quadrature of the tree-structured multilinear kernels.
//
// Convention notes (the one place where the bookkeeping meets):
//  * All kernels are evaluated in "oriented" leaf variables: the variable of
//    leaf beta lives near +n_beta, and leaves with fsgn = -1 contribute the
//    conjugate of their spectrum. In oriented variables every internal mask
//    is just sigma_{n_alpha}(zeta_alpha) with
//    zeta_alpha = zeta_left - zeta_middle + zeta_right.
//  * Denominators are products of the signed running phases
//      m_j = sum_{i <= j} fsgn(growth_i) (zeta^{(i)} - zeta_1^{(i)})(zeta^{(i)} - zeta_3^{(i)}),
//    i.e. without the factor 2 of the full phase, matching the printed
//    generation-1 kernel. A middle-child growth enters its phase with a
//    minus sign. One differentiation by parts therefore contributes the
//    exact scalar 1/(-i * 2 * m_j) = (i/2) * (1/m_j); the partial-sum
//    assembly multiplies the (i/2)^J back in, this routine does not.
//  * with_phase additionally multiplies exp(-i t * 2 * m_J), the oscillatory
//    factor of the boundary operators; leaves are then interaction-picture
//    spectra (no separate free propagation is needed).
//
// Leaves are centered spectra ordered by terminal node id. Offsets where any
// window vanishes contribute nothing; a running phase smaller than 1e-9 on a
// contributing offset is rejected (excluded by the index constraints).
std::vector<cplx> tree_term_spectrum(const WindowFamily& w, const Chronicle& c,
                                     const IndexAssignment& a,
                                     const std::vector<const std::vector<cplx>*>& leaves,
                                     bool with_phase, double t);

// Generation-1 specialization (three leaves), kernel
//   sigma_n(xi) (dxi/2pi)^2 sum exp(-2it m) / m * l1(z1) conj(l2(z2)) l3(z3),
// m = (xi - z1)(xi - z3). Used in the inner loops of the partial-sum
// operator; agrees with tree_term_spectrum on the one-generation chronicle.
std::vector<cplx> gen1_term_spectrum(const WindowFamily& w, int n, int n1, int n2, int n3,
                                     const std::vector<cplx>& l1, const std::vector<cplx>& l2,
                                     const std::vector<cplx>& l3, bool with_phase, double t);

// Printed generation-1 kernel in literal variables: trilinear form weighted
// by 1/((xi - xi1)(xi - xi3)) with the output window sigma_n and fattened
// masks on the inputs. Inputs must be box-localized; the triple must be
// nonresonant relative to n.
std::vector<cplx> inverse_phase_spectrum(const WindowFamily& w, int n, int n1, int n2, int n3,
                                         const std::vector<cplx>& u1,
                                         const std::vector<cplx>& u2,
                                         const std::vector<cplx>& u3);

// Box label of an essentially box-localized field: integer nearest the
// spectral magnitude peak. Rejects fields whose energy outside the fattened
// box exceeds 1e-10 of the total.
int infer_box(const WindowFamily& w, const Field& f);

}  // namespace nlslab
