#include "nlslab/propagator.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace nlslab {

EvolutionParams::EvolutionParams(int lam, double T, double step)
    : lambda(lam), final_time(T), dt(step) {
  if (lam != 1 && lam != -1) throw std::invalid_argument("EvolutionParams: lambda must be +-1");
  if (T <= 0.0 || T >= 1.0) throw std::invalid_argument("EvolutionParams: need 0 < T < 1");
  if (step <= 0.0) throw std::invalid_argument("EvolutionParams: dt must be positive");
  const double ratio = T / step;
  if (std::abs(ratio - std::round(ratio)) > 1e-12 * ratio + 1e-12)
    throw std::invalid_argument("EvolutionParams: dt must divide T");
}

namespace {

std::vector<cplx> phase_multiplied(const GridSpec& g, const std::vector<cplx>& spec,
                                   double coeff) {
  // spectrum times exp(i coeff xi^2)
  std::vector<cplx> out(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const double xi = g.xi(i);
    out[i] = spec[i] * std::polar(1.0, coeff * xi * xi);
  }
  return out;
}

}  // namespace

Field free_evolve(const Field& f, double t) {
  const Field fs = with_spectrum(f);
  return field_from_spectrum(f.grid, phase_multiplied(f.grid, *fs.spectrum, -t));
}

Field to_interaction(const Field& u, double t) { return free_evolve(u, t); }

Field from_interaction(const Field& v, double t) {
  const Field fs = with_spectrum(v);
  return field_from_spectrum(v.grid, phase_multiplied(v.grid, *fs.spectrum, t));
}

Trajectory splitstep_solve(const Field& u0, const EvolutionParams& params,
                           const std::vector<double>& record_times) {
  const GridSpec& g = u0.grid;
  const double T = params.final_time;
  const double dt = params.dt;
  const std::size_t steps = static_cast<std::size_t>(std::llround(T / dt));

  // Aliasing estimate: one nonlinear step pushes ~ dt * |u|^2 u beyond the
  // band; compare the cubic tail above two thirds of the Nyquist frequency
  // against the total mass.
  {
    Field cubic(g);
    for (std::size_t j = 0; j < g.samples; ++j)
      cubic.samples[j] = u0.samples[j] * std::norm(u0.samples[j]);
    const std::vector<cplx> cs = forward_spectrum(g, cubic.samples);
    double tail = 0.0, total = 0.0;
    for (std::size_t i = 0; i < g.samples; ++i) {
      const double e = std::norm(cs[i]);
      total += e;
      if (std::abs(g.xi(i)) > (2.0 / 3.0) * g.nyquist()) tail += e;
    }
    const double mass = l2_norm(u0);
    const double alias = mass > 0.0 ? dt * std::sqrt(tail) / mass : 0.0;
    if (alias > 1e-8)
      throw std::invalid_argument("splitstep_solve: per-step aliasing estimate " +
                                  std::to_string(alias) + " > 1e-8, try dt <= " +
                                  std::to_string(dt * 1e-8 / alias));
  }

  std::vector<bool> record(steps + 1, false);
  if (record_times.empty()) {
    record.front() = record.back() = true;
  } else {
    for (double t : record_times) {
      const double idx = t / dt;
      const std::size_t k = static_cast<std::size_t>(std::llround(idx));
      if (k > steps || std::abs(idx - std::round(idx)) > 1e-9 * (idx + 1.0))
        throw std::invalid_argument("splitstep_solve: record time not on the step grid");
      record[k] = true;
    }
  }

  Trajectory out;
  out.grid = g;
  out.lambda = params.lambda;

  std::vector<cplx> spec = *with_spectrum(u0).spectrum;
  if (record[0]) {
    out.times.push_back(0.0);
    out.states.push_back(field_from_spectrum(g, spec));
  }

  const double lam = static_cast<double>(params.lambda);
  for (std::size_t s = 1; s <= steps; ++s) {
    spec = phase_multiplied(g, spec, 0.5 * dt);  // half step of exp(-it dxx)
    if (!params.linear_only) {
      std::vector<cplx> phys = inverse_samples(g, spec);
      for (cplx& z : phys) z *= std::polar(1.0, lam * dt * std::norm(z));
      spec = forward_spectrum(g, phys);
    }
    spec = phase_multiplied(g, spec, 0.5 * dt);
    if (s % 16 == 0 || s == steps) {
      if (!finite(spec))
        throw std::runtime_error("splitstep_solve: non-finite state at step " + std::to_string(s));
    }
    if (record[s]) {
      out.times.push_back(static_cast<double>(s) * dt);
      out.states.push_back(field_from_spectrum(g, spec));
    }
  }
  return out;
}

double semigroup_growth_ratio(const WindowFamily& w, const Field& f, double t,
                              const ModParams& mp) {
  const double base = modulation_norm(w, f, mp);
  if (base == 0.0) throw std::invalid_argument("semigroup_growth_ratio: zero input");
  const double evolved = modulation_norm(w, free_evolve(f, t), mp);
  const double growth = std::pow(1.0 + std::abs(t), std::abs(0.5 - 1.0 / mp.p));
  return evolved / (growth * base);
}

void write_trajectory(const Trajectory& tr, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  nlohmann::json manifest;
  manifest["grid"] = {{"L", tr.grid.length}, {"M", tr.grid.samples}};
  manifest["lambda"] = tr.lambda;
  manifest["times"] = tr.times;
  std::vector<std::string> files;
  char name[64];
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    std::snprintf(name, sizeof(name), "field_%04zu.bin", i);
    files.emplace_back(name);
    write_field(tr.states[i], (fs::path(dir) / name).string());
  }
  manifest["files"] = files;
  std::ofstream os(fs::path(dir) / "manifest.json");
  os << manifest.dump(2) << "\n";
  if (!os) throw std::runtime_error("write_trajectory: cannot write manifest in " + dir);
}

Trajectory read_trajectory(const std::string& dir) {
  namespace fs = std::filesystem;
  std::ifstream is(fs::path(dir) / "manifest.json");
  if (!is) throw std::runtime_error("read_trajectory: no manifest in " + dir);
  nlohmann::json manifest;
  is >> manifest;
  Trajectory tr;
  tr.grid = GridSpec(manifest["grid"]["L"].get<double>(),
                     manifest["grid"]["M"].get<std::size_t>());
  tr.lambda = manifest["lambda"].get<int>();
  tr.times = manifest["times"].get<std::vector<double>>();
  for (const auto& name : manifest["files"]) {
    Field f = read_field((fs::path(dir) / name.get<std::string>()).string());
    if (!(f.grid == tr.grid)) throw std::runtime_error("read_trajectory: grid mismatch");
    tr.states.push_back(with_spectrum(std::move(f)));
  }
  if (tr.states.size() != tr.times.size())
    throw std::runtime_error("read_trajectory: manifest/file count mismatch");
  return tr;
}

}  // namespace nlslab
