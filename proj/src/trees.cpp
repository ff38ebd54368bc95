#include "nlslab/trees.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

std::vector<int> Chronicle::internal_nodes() const { return growth; }

std::vector<int> Chronicle::terminal_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
    if (nodes[static_cast<std::size_t>(i)].terminal()) out.push_back(i);
  return out;
}

namespace {

Chronicle grow(const Chronicle& base, int target) {
  Chronicle c = base;
  ++c.generations;
  c.growth.push_back(target);
  TreeNode& t = c.nodes[static_cast<std::size_t>(target)];
  if (!t.terminal()) throw std::logic_error("grow: target is not terminal");
  t.generation = c.generations;
  for (int s = 0; s < 3; ++s) {
    TreeNode child;
    child.parent = target;
    child.slot = s;
    t.children[static_cast<std::size_t>(s)] = static_cast<int>(c.nodes.size());
    c.nodes.push_back(child);
  }
  return c;
}

}  // namespace

std::vector<Chronicle> enumerate_chronicles(int J) {
  if (J < 1 || J > 7) throw std::invalid_argument("enumerate_chronicles: 1 <= J <= 7");
  Chronicle seed;
  seed.nodes.emplace_back();
  std::vector<Chronicle> level{grow(seed, 0)};
  for (int j = 2; j <= J; ++j) {
    std::vector<Chronicle> next;
    next.reserve(level.size() * static_cast<std::size_t>(2 * j - 1));
    for (const Chronicle& c : level)
      for (int t : c.terminal_nodes()) next.push_back(grow(c, t));
    level = std::move(next);
  }
  return level;
}

SignMaps signs(const Chronicle& c) {
  SignMaps m;
  const std::size_t n = c.nodes.size();
  m.psgn.assign(n, +1);
  m.fsgn.assign(n, +1);
  for (std::size_t i = 1; i < n; ++i) {
    const TreeNode& node = c.nodes[i];
    m.psgn[i] = (node.slot == 1) ? -1 : +1;
    int middles = 0;  // middle strict ancestors, root never counts
    for (int a = node.parent; a > 0; a = c.nodes[static_cast<std::size_t>(a)].parent)
      if (c.nodes[static_cast<std::size_t>(a)].slot == 1) ++middles;
    m.fsgn[i] = m.psgn[i] * (middles % 2 == 0 ? +1 : -1);
  }
  return m;
}

bool valid_assignment(const Chronicle& c, const IndexAssignment& a, double N) {
  if (a.freq.size() != c.nodes.size()) return false;
  for (std::size_t j = 0; j < c.growth.size(); ++j) {
    const TreeNode& node = c.nodes[static_cast<std::size_t>(c.growth[j])];
    const std::int64_t na = a.freq[static_cast<std::size_t>(c.growth[j])];
    const std::int64_t n1 = a.freq[static_cast<std::size_t>(node.children[0])];
    const std::int64_t n2 = a.freq[static_cast<std::size_t>(node.children[1])];
    const std::int64_t n3 = a.freq[static_cast<std::size_t>(node.children[2])];
    if (!approx(n1 - n2 + n3, na)) return false;
    if (approx(n1, na) || approx(n3, na)) return false;
    if (j == 0) {
      const double mu1 = 2.0 * std::abs(static_cast<double>(na - n1)) *
                         std::abs(static_cast<double>(na - n3));
      if (!(mu1 > N)) return false;
    }
  }
  return true;
}

namespace {

std::size_t assign_recursive(const Chronicle& c, int K, double N, std::size_t gen,
                             IndexAssignment& a,
                             const std::function<void(const IndexAssignment&)>& fn) {
  if (gen == c.growth.size()) {
    fn(a);
    return 1;
  }
  const TreeNode& node = c.nodes[static_cast<std::size_t>(c.growth[gen])];
  const int na = a.freq[static_cast<std::size_t>(c.growth[gen])];
  std::size_t count = 0;
  for (int n1 = -K; n1 <= K; ++n1) {
    if (approx(n1, na)) continue;
    for (int n3 = -K; n3 <= K; ++n3) {
      if (approx(n3, na)) continue;
      if (gen == 0) {
        const double mu1 = 2.0 * std::abs(static_cast<double>(na - n1)) *
                           std::abs(static_cast<double>(na - n3));
        if (!(mu1 > N)) continue;
      }
      for (int delta = -1; delta <= 1; ++delta) {
        const int n2 = n1 + n3 - na - delta;
        if (n2 < -K || n2 > K) continue;
        a.freq[static_cast<std::size_t>(node.children[0])] = n1;
        a.freq[static_cast<std::size_t>(node.children[1])] = n2;
        a.freq[static_cast<std::size_t>(node.children[2])] = n3;
        count += assign_recursive(c, K, N, gen + 1, a, fn);
      }
    }
  }
  return count;
}

}  // namespace

std::size_t for_each_assignment(const Chronicle& c, int K, double N, int root_freq,
                                const std::function<void(const IndexAssignment&)>& fn) {
  if (std::abs(root_freq) > K)
    throw std::invalid_argument("for_each_assignment: |root| <= K required");
  IndexAssignment a;
  a.freq.assign(c.nodes.size(), 0);
  a.freq[0] = root_freq;
  return assign_recursive(c, K, N, 0, a, fn);
}

std::size_t for_each_assignment(const Chronicle& c, int K, double N,
                                const std::function<void(const IndexAssignment&)>& fn) {
  std::size_t count = 0;
  for (int n = -K; n <= K; ++n) count += for_each_assignment(c, K, N, n, fn);
  return count;
}

double TreePhases::ratio() const {
  return std::abs(mu_hat_subtree) / std::abs(prefix.mu_hat);
}

TreePhases phase_data(const Chronicle& c, const IndexAssignment& a) {
  TreePhases out;
  const SignMaps sm = signs(c);
  for (std::size_t j = 0; j < c.growth.size(); ++j) {
    const int id = c.growth[j];
    const TreeNode& node = c.nodes[static_cast<std::size_t>(id)];
    const std::int64_t na = a.freq[static_cast<std::size_t>(id)];
    const std::int64_t n1 = a.freq[static_cast<std::size_t>(node.children[0])];
    const std::int64_t n3 = a.freq[static_cast<std::size_t>(node.children[2])];
    out.mu.push_back(2 * (na - n1) * (na - n3));
    out.growth_sign.push_back(sm.fsgn[static_cast<std::size_t>(id)]);
  }
  out.prefix = accumulate_phases(out.mu, out.growth_sign);

  // Per-node variant: for each internal node, sum mu over the internal nodes
  // that are not its strict descendants, then take the product.
  out.mu_hat_subtree = 1.0;
  for (std::size_t j = 0; j < c.growth.size(); ++j) {
    const int alpha = c.growth[j];
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < c.growth.size(); ++i) {
      bool descendant = false;
      for (int p = c.growth[i]; p >= 0; p = c.nodes[static_cast<std::size_t>(p)].parent) {
        if (p == alpha && c.growth[i] != alpha) {
          descendant = true;
          break;
        }
      }
      if (!descendant) acc += out.mu[i];
    }
    out.mu_hat_subtree *= static_cast<double>(acc);
  }
  return out;
}

CombinatoricConstants constants(int J, double A) {
  if (J < 1) throw std::invalid_argument("constants: J >= 1 required");
  if (!(A > 1.0)) throw std::invalid_argument("constants: A > 1 required");
  CombinatoricConstants out;
  out.J = J;
  out.chronicle_count = 1;
  for (int j = 2; j <= J; ++j) {
    const std::uint64_t f = static_cast<std::uint64_t>(2 * j - 1);
    if (out.chronicle_count > UINT64_MAX / f)
      throw std::overflow_error("constants: chronicle count overflows 64 bits");
    out.chronicle_count *= f;
  }
  out.log_dJ = A * std::lgamma(static_cast<double>(J) + 2.0) +
               1.5 * static_cast<double>(J) * std::log(static_cast<double>(J));
  out.dJ = std::exp(out.log_dJ);
  return out;
}

}  // namespace nlslab
