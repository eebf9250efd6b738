#include "qgt/expander.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qgt/rng.hpp"

namespace qgt {

namespace {

void checkGraphShape(const BipartiteExpander& g) {
  if (g.n_left <= 0 || g.n_right <= 0 || g.degree <= 0)
    throw DomainError("expander: empty side or degree");
  if (static_cast<std::int64_t>(g.adjacency.size()) != g.n_left)
    throw DomainError("expander: adjacency size mismatch");
  for (const auto& nbrs : g.adjacency) {
    if (static_cast<int>(nbrs.size()) != g.degree)
      throw DomainError("expander: vertex without exactly D neighbors");
    for (std::size_t t = 0; t < nbrs.size(); ++t) {
      if (nbrs[t] < 0 || nbrs[t] >= g.n_right)
        throw DomainError("expander: neighbor index out of range");
      if (t > 0 && nbrs[t] <= nbrs[t - 1])
        throw DomainError("expander: neighbors not sorted distinct");
    }
  }
}

double subsetCount(std::int64_t n, std::int64_t k) {
  double total = 0;
  double binom = 1;
  for (std::int64_t s = 1; s <= k; ++s) {
    binom = binom * static_cast<double>(n - s + 1) / static_cast<double>(s);
    total += binom;
    if (total > 1e18) return total;
  }
  return total;
}

// Depth-first subset walk with incremental distinct-neighbor counting.
// Visits every subset of size 1..k exactly once, smaller sizes first along
// each branch, so the first violation found on a branch has minimal size
// within it; exhaustive over all branches either way.
struct SubsetWalker {
  const BipartiteExpander& g;
  std::vector<int> cover_count;
  std::int64_t distinct = 0;
  std::vector<int> chosen;

  explicit SubsetWalker(const BipartiteExpander& graph)
      : g(graph), cover_count(graph.n_right, 0) {}

  void push(int v) {
    for (const int j : g.adjacency[v])
      if (cover_count[j]++ == 0) ++distinct;
    chosen.push_back(v);
  }
  void pop() {
    const int v = chosen.back();
    chosen.pop_back();
    for (const int j : g.adjacency[v])
      if (--cover_count[j] == 0) --distinct;
  }

  // visit returns false to abort the walk.
  template <class Visit>
  bool walk(std::int64_t max_size, int first, const Visit& visit) {
    for (int v = first; v < g.n_left; ++v) {
      push(v);
      const bool keep = visit(chosen, distinct);
      if (!keep) return false;
      if (static_cast<std::int64_t>(chosen.size()) < max_size)
        if (!walk(max_size, v + 1, visit)) return false;
      pop();
    }
    return true;
  }
};

}  // namespace

ExpansionCheck verifyExpansion(const BipartiteExpander& g, std::int64_t k,
                               double a) {
  checkGraphShape(g);
  if (k < 1 || k > g.n_left)
    throw DomainError("verifyExpansion: K out of range");
  if (subsetCount(g.n_left, k) > 1e7)
    throw DomainError("verifyExpansion: instance too large for brute force");
  ExpansionCheck result;
  result.ok = true;
  SubsetWalker walker(g);
  walker.walk(k, 0, [&](const std::vector<int>& s, std::int64_t distinct) {
    if (static_cast<double>(distinct) <
        a * static_cast<double>(s.size()) - 1e-12) {
      result.ok = false;
      result.violating_set = s;
      return false;
    }
    return true;
  });
  return result;
}

ExpansionStats expansionStats(const BipartiteExpander& g, std::int64_t k) {
  checkGraphShape(g);
  if (subsetCount(g.n_left, k) > 1e7)
    throw DomainError("expansionStats: instance too large for brute force");
  ExpansionStats stats;
  stats.min_ratio = std::numeric_limits<double>::infinity();
  std::vector<double> worst_by_size(static_cast<std::size_t>(k) + 1,
                                    std::numeric_limits<double>::infinity());
  SubsetWalker walker(g);
  walker.walk(k, 0, [&](const std::vector<int>& s, std::int64_t distinct) {
    const double ratio =
        static_cast<double>(distinct) / static_cast<double>(s.size());
    stats.min_ratio = std::min(stats.min_ratio, ratio);
    worst_by_size[s.size()] = std::min(worst_by_size[s.size()], ratio);
    return true;
  });
  stats.k_achieved = 0;
  for (std::int64_t s = 1; s <= k; ++s) {
    if (worst_by_size[s] + 1e-12 < 1.0) break;  // cannot happen; safety
    stats.k_achieved = s;
    if (s + 1 <= k && worst_by_size[s + 1] == 0) break;
  }
  return stats;
}

BipartiteExpander randomExpander(std::int64_t n_left, std::int64_t n_right,
                                 int degree, std::int64_t k, double a,
                                 std::uint64_t seed, int max_attempts) {
  if (degree > n_right)
    throw DomainError("randomExpander: degree exceeds right side");
  if (static_cast<double>(k) * a > static_cast<double>(n_right))
    throw DomainError("randomExpander: K*A exceeds right side");

  std::int64_t best_k = 0;
  double best_a = 0;
  std::vector<int> pool(n_right);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    BipartiteExpander g;
    g.n_left = n_left;
    g.n_right = n_right;
    g.degree = degree;
    g.k_bound = k;
    g.expansion = a;
    g.adjacency.resize(n_left);
    Rng rng(deriveSeed(seed, static_cast<std::uint64_t>(attempt)));
    for (std::int64_t v = 0; v < n_left; ++v) {
      std::iota(pool.begin(), pool.end(), 0);
      // Partial Fisher-Yates: first `degree` entries become the sample.
      for (int t = 0; t < degree; ++t) {
        const auto r = t + static_cast<std::int64_t>(
                               rng.below(static_cast<std::uint64_t>(
                                   n_right - t)));
        std::swap(pool[t], pool[r]);
      }
      g.adjacency[v].assign(pool.begin(), pool.begin() + degree);
      std::sort(g.adjacency[v].begin(), g.adjacency[v].end());
    }
    if (verifyExpansion(g, k, a).ok) {
      g.verified = true;
      return g;
    }
    const ExpansionStats stats = expansionStats(g, k);
    if (stats.k_achieved > best_k ||
        (stats.k_achieved == best_k && stats.min_ratio > best_a)) {
      best_k = stats.k_achieved;
      best_a = stats.min_ratio;
    }
  }
  throw ExpanderSearchError(
      "randomExpander: attempts exhausted without a verified graph", best_k,
      best_a);
}

bool estimateExpansion(const BipartiteExpander& g, std::int64_t k, double a,
                       int samples_per_size, std::uint64_t seed) {
  checkGraphShape(g);
  const std::int64_t exhaustive_cap = std::min<std::int64_t>(k, 2);
  if (!verifyExpansion(g, exhaustive_cap, a).ok) return false;

  Rng rng(seed);
  std::vector<int> pool(g.n_left);
  std::vector<int> cover(g.n_right, 0);
  for (std::int64_t size = 3; size <= k; ++size) {
    for (int s = 0; s < samples_per_size; ++s) {
      std::iota(pool.begin(), pool.end(), 0);
      std::int64_t distinct = 0;
      std::fill(cover.begin(), cover.end(), 0);
      for (std::int64_t t = 0; t < size; ++t) {
        const auto r = t + static_cast<std::int64_t>(rng.below(
                               static_cast<std::uint64_t>(g.n_left - t)));
        std::swap(pool[t], pool[r]);
        for (const int j : g.adjacency[pool[t]])
          if (cover[j]++ == 0) ++distinct;
      }
      if (static_cast<double>(distinct) < a * static_cast<double>(size) - 1e-12)
        return false;
    }
  }
  return true;
}

BinaryMatrix inducedMatrix(const BipartiteExpander& g) {
  checkGraphShape(g);
  BinaryMatrix b(g.n_right, g.n_left);
  for (std::int64_t i = 0; i < g.n_left; ++i)
    for (const int j : g.adjacency[i]) b.set(j, i, true);
  return b;
}

std::vector<BinaryMatrix> decompose(const BinaryMatrix& b, int degree) {
  if (degree < 1) throw DomainError("decompose: degree below 1");
  std::vector<BinaryMatrix> blocks(
      static_cast<std::size_t>(degree), BinaryMatrix(b.rows(), b.cols()));
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    int found = 0;
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      if (!b.get(i, j)) continue;
      if (found < degree) blocks[found].set(i, j, true);
      ++found;
    }
    if (found != degree)
      throw DomainError("decompose: column without exactly D ones");
  }
  return blocks;
}

BipartiteExpander referenceExpander6x4() {
  BipartiteExpander g;
  g.n_left = 6;
  g.n_right = 4;
  g.degree = 2;
  g.k_bound = 2;
  g.expansion = 1.0;
  g.adjacency = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  g.verified = verifyExpansion(g, g.k_bound, g.expansion).ok;
  return g;
}

}  // namespace qgt
