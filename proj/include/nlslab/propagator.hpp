#pragma once

#include <string>
#include <vector>

#include "nlslab/grid.hpp"
#include "nlslab/modulation.hpp"

namespace nlslab {

// Sign conventions follow i u_t - u_xx + lambda |u|^2 u = 0. The free flow
// of that equation is the multiplier exp(+i t xi^2); the semigroup
// exp(it dxx) used for the interaction picture is its inverse.
struct EvolutionParams {
  int lambda = +1;     // the +- in front of the nonlinearity
  double final_time = 0.1;
  double dt = 1e-3;
  bool linear_only = false;  // diagnostic: drop the nonlinear substep

  EvolutionParams() = default;
  EvolutionParams(int lam, double T, double step);
};

// exp(it dxx): spectrum multiplied by exp(-i t xi^2). Unitary on L^2.
Field free_evolve(const Field& f, double t);

Field to_interaction(const Field& u, double t);    // v = exp(it dxx) u
Field from_interaction(const Field& v, double t);  // u = exp(-it dxx) v

struct Trajectory {
  GridSpec grid;
  int lambda = +1;
  std::vector<double> times;
  std::vector<Field> states;
};

// Strang splitting: half linear step (multiplier exp(+i dt/2 xi^2)), exact
// pointwise nonlinear step u <- u exp(i lambda dt |u|^2), half linear step.
// States are recorded exactly at record_times (each must be a multiple of
// dt); an empty list records only t = 0 and t = T.
Trajectory splitstep_solve(const Field& u0, const EvolutionParams& params,
                           const std::vector<double>& record_times = {});

// ||S(t) f||_{M^s_{p,q}} / ((1+|t|)^{|1/2 - 1/p|} ||f||_{M^s_{p,q}}).
double semigroup_growth_ratio(const WindowFamily& w, const Field& f, double t,
                              const ModParams& mp);

void write_trajectory(const Trajectory& tr, const std::string& dir);
Trajectory read_trajectory(const std::string& dir);

}  // namespace nlslab
