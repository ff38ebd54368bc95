#pragma once

#include <cstdint>
#include <vector>

namespace nlslab {

// xi^2 - xi1^2 + xi2^2 - xi3^2; equals 2 (xi - xi1)(xi - xi3) whenever
// xi = xi1 - xi2 + xi3.
double phase(double xi, double xi1, double xi2, double xi3);

// Exact integer version, overflow-checked for |n| <= 1e9.
std::int64_t phase_int(std::int64_t n, std::int64_t n1, std::int64_t n2, std::int64_t n3);

// n1 - n2 + n3 in {n-1, n, n+1}
bool approx(std::int64_t a, std::int64_t b);  // |a - b| <= 1

struct Triple {
  int n1, n2, n3;
  bool near1 = false;  // n1 ~ n
  bool near3 = false;  // n3 ~ n
  bool resonant() const { return near1 || near3; }
};

// All triples with |n_i| <= K and n1 - n2 + n3 ~ n, lexicographic in
// (n1, n2, n3), classification relative to n filled in.
std::vector<Triple> enumerate_triples(int n, int K);

struct TripleSplit {
  std::vector<Triple> bounded;    // |Phi| <= N  (A_N(n))
  std::vector<Triple> unbounded;  // |Phi| >  N  (A_N(n)^c)
};

// Split nonresonant triples by the size of the exact integer phase. N may be
// infinity (diagnostic sentinel: everything lands in `bounded`). Rejects
// resonant input.
TripleSplit split_A_N(const std::vector<Triple>& triples, int n, double N);

// Exact divisor count via trial factorization; 1 <= m <= 1e9.
std::int64_t divisor_count(std::int64_t m);
// d(m) for all 1 <= m <= limit (sieve); index 0 unused.
std::vector<std::int32_t> divisor_count_table(std::int64_t limit);

// Membership in the phase set that stops the expansion at generation J+1:
// |mu_tilde_{J+1}| <= (2J+3)^3 |mu_tilde_J|^{1-1/100}  or
// |mu_tilde_{J+1}| <= (2J+3)^3 |mu_1|^{1-1/100}.
bool in_C_J(std::int64_t mu_tilde_J, std::int64_t mu_tilde_J1, std::int64_t mu_1, int J);

// Running phase data of a growth history: per-generation factors mu_j, their
// prefix sums and the prefix-product denominators. `signed_mu` carries the
// conjugation sign of the generation (middle-child growths flip it).
struct PhaseData {
  std::vector<std::int64_t> mu;         // per paper convention, factor 2 included
  std::vector<std::int64_t> mu_signed;  // fsgn(growth node) * mu
  std::vector<std::int64_t> mu_tilde;   // prefix sums of mu_signed
  double mu_hat = 1.0;                  // product of prefix sums
};

PhaseData accumulate_phases(const std::vector<std::int64_t>& mu,
                            const std::vector<int>& growth_signs);

}  // namespace nlslab
