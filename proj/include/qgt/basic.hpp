#pragma once

#include <optional>

#include "qgt/noiseless.hpp"
#include "qgt/params.hpp"
#include "qgt/types.hpp"

namespace qgt {

/// Pooling code built from H kron M: the Hadamard factor spreads the inner
/// noiseless code across segments, the positive/negative split turns the
/// signed matrix into two {0,1} pooling matrices stacked vertically.
struct BasicCode {
  CodeParams params;
  NoiselessCode inner;
  int hadamard_log2 = 0;
  std::int64_t n_bar = 0;
  std::int64_t height = 0;  // 2 * rowsP()
  // Materialized only at desk scale; large codes stay structured.
  std::optional<BinaryMatrix> q1, q2;

  std::int64_t hadamardSize() const { return std::int64_t{1} << hadamard_log2; }
  std::int64_t rowsP() const { return hadamardSize() * inner.height(); }

  /// Noise bound under which the segment-counting argument guarantees
  /// hamming error <= d0: corrupted segments need squared noise >= 1/4
  /// post-deconstruction, total post-deconstruction energy is at most
  /// 4 e^2 * inner-height, and each corrupted segment costs at most
  /// `width` bit errors.
  double segmentNoiseBudget() const;

  /// min(params.e, segmentNoiseBudget); what experiments should use.
  double advertisedNoiseBound() const;
};

/// Builds the code. With exponent-form params the factor sizes derive from
/// epsilon; direct-form params use the overrides (inner width defaults
/// to 2). The Hadamard factor always rounds up to a power of two.
BasicCode buildBasic(const CodeParams& params, NoiselessScheme inner_scheme,
                     std::optional<int> inner_width = std::nullopt,
                     std::optional<int> hadamard_log2 = std::nullopt);

/// y = [Q1 x ; Q2 x] for binary x of length n, computed through the
/// Kronecker structure in O(n_bar * inner_height) without dense matrices.
IntVec encodeBasic(const BasicCode& code, const IntVec& x);

/// Raw measurement of an arbitrary ternary difference vector d (adversary
/// and oracle helper): [Q1 d ; Q2 d].
IntVec measureDiffBasic(const BasicCode& code, const IntVec& d);

struct BasicDecodeStats {
  std::int64_t segments_total = 0;
  std::int64_t segments_infeasible = 0;
};

/// Two-step decode: subtract the lower half from the upper half, run
/// hadamard_log2 deconstruction levels, then round each segment and decode
/// it with the inner code (infeasible segments erase to zero).
IntVec decodeBasic(const BasicCode& code, const RealVec& y,
                   BasicDecodeStats* stats = nullptr);

/// One recursion family of the half-sum/half-difference transform:
/// t = 0 is the identity; t = 1 maps (u, l) to ((u+l)/2, (u-l)/2); deeper
/// levels recurse into each half. Equals blockwise (1/2^t) H-conjugation.
RealVec deconstructLevel(const RealVec& y, int n_levels);

/// Dense forms for the brute-force oracle; DomainError above 2^26 entries.
TernaryMatrix basicDifferenceMatrix(const BasicCode& code);  // P, n columns
BinaryMatrix basicPoolingMatrix(const BasicCode& code);      // [Q1; Q2]

}  // namespace qgt
