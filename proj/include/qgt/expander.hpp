#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qgt/types.hpp"

namespace qgt {

/// Left-regular bipartite graph. When `verified` is set, every left subset
/// S with |S| <= k_bound has at least expansion * |S| distinct neighbors.
struct BipartiteExpander {
  std::int64_t n_left = 0;
  std::int64_t n_right = 0;
  int degree = 0;
  std::int64_t k_bound = 0;
  double expansion = 0.0;
  bool verified = false;
  std::vector<std::vector<int>> adjacency;  // per left vertex, sorted, distinct
};

struct ExpansionCheck {
  bool ok = false;
  std::vector<int> violating_set;  // empty when ok
};

/// Exact check over all subsets of size 1..K (every size is checked, not
/// just K). Rejects instances with more than 10^7 subsets.
ExpansionCheck verifyExpansion(const BipartiteExpander& g, std::int64_t k,
                               double a);

/// Largest prefix k' <= k for which expansion `a` holds, plus the minimum
/// neighbor ratio min |Gamma(S)|/|S| over all |S| <= k.
struct ExpansionStats {
  std::int64_t k_achieved = 0;
  double min_ratio = 0.0;
};
ExpansionStats expansionStats(const BipartiteExpander& g, std::int64_t k);

/// Thrown when random search exhausts its attempts; carries the best
/// parameters any sampled graph actually achieved.
class ExpanderSearchError : public DomainError {
 public:
  ExpanderSearchError(const std::string& what, std::int64_t best_k,
                      double best_a)
      : DomainError(what), best_k(best_k), best_a(best_a) {}
  std::int64_t best_k;
  double best_a;
};

/// Samples left-D-regular graphs (D distinct uniform neighbors per vertex)
/// until one passes verifyExpansion; the result carries the verified flag.
BipartiteExpander randomExpander(std::int64_t n_left, std::int64_t n_right,
                                 int degree, std::int64_t k, double a,
                                 std::uint64_t seed, int max_attempts = 200);

/// Sampled estimator for instances too large for the exact check:
/// exhaustive over sizes 1..2, random subsets for sizes 3..K. Returns false
/// as soon as a violation is found; true means "no violation sampled".
bool estimateExpansion(const BipartiteExpander& g, std::int64_t k, double a,
                       int samples_per_size, std::uint64_t seed);

/// M x N adjacency matrix: entry (j, i) = 1 iff right vertex j is a
/// neighbor of left vertex i. Columns have exactly `degree` ones.
BinaryMatrix inducedMatrix(const BipartiteExpander& g);

/// Splits a column-regular binary matrix into D matrices with exactly one
/// nonzero per column; block i takes the i-th smallest row index.
std::vector<BinaryMatrix> decompose(const BinaryMatrix& b, int degree);

/// The bundled (6,4,2,2,1) example instance: left vertex i is joined to
/// the i-th lexicographic pair of right vertices.
BipartiteExpander referenceExpander6x4();

}  // namespace qgt
