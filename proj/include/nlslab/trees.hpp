#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "nlslab/resonance.hpp"

namespace nlslab {

struct TreeNode {
  int parent = -1;
  int slot = -1;  // 0 left, 1 middle, 2 right; -1 for the root
  std::array<int, 3> children = {-1, -1, -1};
  int generation = 0;  // j >= 1 when this node was converted; 0 while terminal
  bool terminal() const { return children[0] < 0; }
};

// Ordered ternary tree together with its growth history: generation j
// converts one terminal node of the previous tree into a parent of three.
// Node ids follow creation order (root 0, generation j adds 3j-2..3j).
struct Chronicle {
  int generations = 0;
  std::vector<int> growth;  // node converted at generation j (index j-1)
  std::vector<TreeNode> nodes;

  std::vector<int> internal_nodes() const;  // == growth
  std::vector<int> terminal_nodes() const;  // ascending ids
};

// All chronicles of J generations in growth-event lexicographic order;
// exactly (2J-1)!! of them. Guarded to 1 <= J <= 7.
std::vector<Chronicle> enumerate_chronicles(int J);

struct SignMaps {
  std::vector<int> psgn;  // -1 iff middle child
  std::vector<int> fsgn;  // psgn * (-1)^(middle strict ancestors)
};

SignMaps signs(const Chronicle& c);

// Integer frequencies on the nodes: for every internal node a with children
// (a1, a2, a3), n_a ~ n_a1 - n_a2 + n_a3 and n_a !~ n_a1, n_a !~ n_a3; at the
// root additionally |mu_1| = 2|n - n1||n - n3| > N.
struct IndexAssignment {
  std::vector<int> freq;  // per node id
};

bool valid_assignment(const Chronicle& c, const IndexAssignment& a, double N);

// Streams every assignment with |freq| <= K for the given root frequency, in
// deterministic loop order (per generation: n1 asc, n3 asc, slack asc).
// Returns the count.
std::size_t for_each_assignment(const Chronicle& c, int K, double N, int root_freq,
                                const std::function<void(const IndexAssignment&)>& fn);
// Same, over all root frequencies |n| <= K.
std::size_t for_each_assignment(const Chronicle& c, int K, double N,
                                const std::function<void(const IndexAssignment&)>& fn);

// Phase bookkeeping of an assignment: per-generation factors, conjugation
// signs of the growth nodes, signed prefix sums and their product, plus the
// per-node variant (sum over internal nodes outside the subtree) kept as a
// diagnostic; the two denominators agree up to the reported ratio.
struct TreePhases {
  std::vector<std::int64_t> mu;      // 2 (n - n1)(n - n3) per generation
  std::vector<int> growth_sign;     // fsgn of the node grown at generation j
  PhaseData prefix;                 // signed prefix sums / product
  double mu_hat_subtree = 1.0;      // per-node variant product
  double ratio() const;             // |subtree| / |prefix|
};

TreePhases phase_data(const Chronicle& c, const IndexAssignment& a);

struct CombinatoricConstants {
  int J = 0;
  std::uint64_t chronicle_count = 0;  // (2J-1)!!
  double log_dJ = 0.0;                // log[(J+1)!^A * J^(3J/2)]
  double dJ = 0.0;                    // exp(log_dJ), may be +inf for large J
};

CombinatoricConstants constants(int J, double A);

}  // namespace nlslab
