#include "nlslab/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlslab {

double phase(double xi, double xi1, double xi2, double xi3) {
  return xi * xi - xi1 * xi1 + xi2 * xi2 - xi3 * xi3;
}

std::int64_t phase_int(std::int64_t n, std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  const std::int64_t bound = 1000000000;
  if (std::abs(n) > bound || std::abs(n1) > bound || std::abs(n2) > bound || std::abs(n3) > bound)
    throw std::invalid_argument("phase_int: argument out of checked range");
  return n * n - n1 * n1 + n2 * n2 - n3 * n3;
}

bool approx(std::int64_t a, std::int64_t b) { return std::abs(a - b) <= 1; }

std::vector<Triple> enumerate_triples(int n, int K) {
  if (std::abs(n) > K) throw std::invalid_argument("enumerate_triples: |n| <= K required");
  std::vector<Triple> out;
  for (int n1 = -K; n1 <= K; ++n1)
    for (int n2 = -K; n2 <= K; ++n2)
      for (int delta = -1; delta <= 1; ++delta) {
        const int n3 = n + delta - n1 + n2;
        if (n3 < -K || n3 > K) continue;
        Triple t{n1, n2, n3};
        t.near1 = approx(n1, n);
        t.near3 = approx(n3, n);
        out.push_back(t);
      }
  // n3 determines delta, so each (n1, n2, n3) appears once; order them.
  std::sort(out.begin(), out.end(), [](const Triple& a, const Triple& b) {
    if (a.n1 != b.n1) return a.n1 < b.n1;
    if (a.n2 != b.n2) return a.n2 < b.n2;
    return a.n3 < b.n3;
  });
  return out;
}

TripleSplit split_A_N(const std::vector<Triple>& triples, int n, double N) {
  if (N < 0.0) throw std::invalid_argument("split_A_N: N >= 0 required");
  TripleSplit out;
  for (const Triple& t : triples) {
    if (t.resonant())
      throw std::invalid_argument("split_A_N: resonant triple in input");
    const double phi = static_cast<double>(phase_int(n, t.n1, t.n2, t.n3));
    (std::abs(phi) <= N ? out.bounded : out.unbounded).push_back(t);
  }
  return out;
}

std::int64_t divisor_count(std::int64_t m) {
  if (m <= 0 || m > 1000000000) throw std::invalid_argument("divisor_count: need 1 <= m <= 1e9");
  std::int64_t count = 1;
  for (std::int64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    count *= (e + 1);
  }
  if (m > 1) count *= 2;
  return count;
}

std::vector<std::int32_t> divisor_count_table(std::int64_t limit) {
  if (limit < 1 || limit > 100000000) throw std::invalid_argument("divisor_count_table: bad limit");
  std::vector<std::int32_t> d(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t a = 1; a <= limit; ++a)
    for (std::int64_t b = a; b <= limit; b += a) ++d[static_cast<std::size_t>(b)];
  return d;
}

bool in_C_J(std::int64_t mu_tilde_J, std::int64_t mu_tilde_J1, std::int64_t mu_1, int J) {
  if (J < 1) throw std::invalid_argument("in_C_J: J >= 1 required");
  const double c = std::pow(2.0 * J + 3.0, 3.0);
  const double lhs = std::abs(static_cast<double>(mu_tilde_J1));
  const double e = 1.0 - 0.01;
  return lhs <= c * std::pow(std::abs(static_cast<double>(mu_tilde_J)), e) ||
         lhs <= c * std::pow(std::abs(static_cast<double>(mu_1)), e);
}

PhaseData accumulate_phases(const std::vector<std::int64_t>& mu,
                            const std::vector<int>& growth_signs) {
  if (mu.size() != growth_signs.size())
    throw std::invalid_argument("accumulate_phases: size mismatch");
  PhaseData out;
  out.mu = mu;
  std::int64_t run = 0;
  for (std::size_t j = 0; j < mu.size(); ++j) {
    const std::int64_t s = growth_signs[j] >= 0 ? mu[j] : -mu[j];
    out.mu_signed.push_back(s);
    run += s;
    out.mu_tilde.push_back(run);
    out.mu_hat *= static_cast<double>(run);
  }
  return out;
}

}  // namespace nlslab
