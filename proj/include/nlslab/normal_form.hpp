#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nlslab/kernels.hpp"
#include "nlslab/propagator.hpp"
#include "nlslab/triple_engine.hpp"

namespace nlslab {

struct NormalFormConfig {
  int J_max = 2;              // truncation generation of the partial sum
  double threshold_N = 100.0; // resonance threshold
  int K = 8;                  // frequency box cutoff
  ModParams mp{2.0, 2.0, 0.0};
  std::size_t time_nodes = 9; // odd Simpson node count on [0, T]
  double final_time = 0.01;
  double fp_tol = 1e-11;
  std::size_t fp_max_iters = 40;
  int lambda = +1;            // sign of the nonlinearity
  bool allow_small_N = false; // skip the contraction-regime size check on N

  void validate(const WindowFamily& w) const;
  std::vector<double> node_times() const;
};

// First-generation interaction box_n exp(it dxx)[u1 conj(u2) u3] with
// u_i = exp(-it dxx) v_i; trilinear, conjugate-linear in the middle slot.
// Inputs must be box-localized (fattened boxes accepted).
Field trilinear_interaction(const WindowFamily& w, int n, const Field& v1, const Field& v2,
                            const Field& v3, double t);

struct ResonantParts {
  Field either_near;  // sum over n1 ~ n plus sum over n3 ~ n (R2)
  Field both_near;    // sum over n1 ~ n and n3 ~ n (R1)
};
ResonantParts resonant_parts(const WindowFamily& w, const BoxSequence& v, int n, double t);

struct NonresonantParts {
  Field bounded_phase;  // |Phi| <= N (N11)
  Field large_phase;    // |Phi| >  N (N12)
};
NonresonantParts nonresonant_parts(const WindowFamily& w, const BoxSequence& v, int n, double t,
                                   double N);

// Printed generation-1 kernel (reciprocal phase weight); boxes inferred from
// the inputs when not supplied.
Field inverse_phase_kernel(const WindowFamily& w, int n, const Field& u1, const Field& u2,
                           const Field& u3);
Field inverse_phase_kernel(const WindowFamily& w, int n, const std::array<int, 3>& boxes,
                           const Field& u1, const Field& u2, const Field& u3);

// General tree kernel acting on one leaf field per terminal node (node-id
// order); coincides with inverse_phase_kernel on the one-generation tree.
Field tree_kernel(const WindowFamily& w, const Chronicle& c, const IndexAssignment& a,
                  const std::vector<Field>& leaves);

// One generation-1 boundary term with its exact differentiation-by-parts
// scalar (i/2) restored: the time derivative of this object reproduces the
// interaction minus the leaf-derivative terms.
Field gen1_boundary_term(const WindowFamily& w, int n, const std::array<int, 3>& boxes,
                         const Field& v1, const Field& v2, const Field& v3, double t);

// Partial-sum operator applied to a trajectory sampled on the config's
// Simpson nodes. Returns the mapped trajectory on the same nodes.
Trajectory apply_partial_sum(const WindowFamily& w, const Field& v0, const Trajectory& v,
                             const NormalFormConfig& cfg);

struct FixedPointResult {
  Trajectory trajectory;
  std::vector<double> distances;  // sup-node M_{p,q} distance per iteration
  std::size_t iterations = 0;
  bool converged = false;
};

// Iterates v <- Gamma_{v0} v from the constant trajectory until the
// sup-node distance drops below fp_tol. A non-contracting run returns
// converged = false with the distance history (N or T outside the
// admissible regime).
FixedPointResult fixed_point_solve(const WindowFamily& w, const Field& v0,
                                   const NormalFormConfig& cfg);

struct RemainderReport {
  int J = 1;
  std::vector<int> boxes;         // n values
  std::vector<double> box_norms;  // sup over nodes of the M_{p,q} norm at n
  double sup_norm = 0.0;
};

// Norms of the not-yet-expanded operator after J steps, assembled from the
// exact leaf-substitution identity (no numerical time differentiation).
RemainderReport remainder_norms(const WindowFamily& w, const Trajectory& v, int J,
                                const NormalFormConfig& cfg);

struct CutoffProbeRow {
  double cutoff;
  double l2_dist;
  double mod_dist;
};

// Cubic nonlinearity of the cutoff trajectory against the largest-cutoff
// evaluation, max over stored times.
std::vector<CutoffProbeRow> cutoff_probe(const WindowFamily& w, const Trajectory& u,
                                         std::vector<double> cutoffs, const ModParams& mp);

// M_{p,q} norm of a spectrum touching few boxes (scans the support).
double local_mod_norm(const WindowFamily& w, const std::vector<cplx>& spec, const ModParams& mp);

}  // namespace nlslab
