#pragma once

#include <cmath>
#include <cstdint>

#include "qgt/errors.hpp"

namespace qgt {

/// Problem parameters. Exponent form derives the integer thresholds
/// d0 = ceil(n^kappa), e = n^delta, k = ceil(n^lambda); the direct form
/// sets them explicitly for desk-scale instances where the power laws
/// degenerate.
struct CodeParams {
  std::int64_t n = 0;
  double kappa = std::nan("");
  double delta = std::nan("");
  double lambda = std::nan("");
  double epsilon = std::nan("");  // kappa - 2*delta
  std::int64_t d0 = 0;            // distance threshold
  double e = 0.0;                 // noise bound
  std::int64_t k = 0;             // sparsity
  bool boundary_regime = false;   // 2*delta == kappa

  bool hasExponents() const { return !std::isnan(kappa); }

  static CodeParams fromExponents(std::int64_t n, double kappa, double delta,
                                  double lambda = 1.0);
  static CodeParams fromDirect(std::int64_t n, std::int64_t d0, double e,
                               std::int64_t k);
};

}  // namespace qgt
