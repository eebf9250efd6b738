#pragma once

#include <optional>
#include <string>

#include "qgt/types.hpp"

namespace qgt {

enum class NoiselessScheme { identity, recursive_split };

std::string schemeName(NoiselessScheme s);
NoiselessScheme schemeFromName(const std::string& name);

/// Noiseless coin-weighing code: a binary matrix injective on {0,1}^width
/// together with an exact decoder.
///
/// identity:        I_d, height d, every width supported.
/// recursive-split: seeded doubling. A small set of searched seed matrices
///   (widths 1..7, 9, 10 at heights 1,2,3,3,4,5,5,6,7) is extended by
///   M(2w) = [M(w) M(w); M(w) 0], which doubles the height per width
///   doubling. height(w) = min over factorizations w = s * 2^t of
///   2^t * height(s); a width counts as supported when that value is at
///   most 2 + (3/4) * w. Rounding a request up to the next supported width
///   inflates it by at most a factor 4/3 (attained nowhere below width 20;
///   typical slack is under 1.15).
struct NoiselessCode {
  int width = 0;  // supported width actually built (>= requested)
  NoiselessScheme scheme = NoiselessScheme::identity;
  BinaryMatrix matrix;

  int height() const { return static_cast<int>(matrix.rows()); }
};

/// Height the scheme would achieve at exactly `width`; nullopt when the
/// width is unsupported.
std::optional<int> noiselessHeightForWidth(int width, NoiselessScheme scheme);

/// Smallest supported width >= d (the paper-style ceiling rounding).
int noiselessSupportedWidth(int d, NoiselessScheme scheme);

/// Builds a code for the smallest supported width >= d.
NoiselessCode buildNoiseless(int d, NoiselessScheme scheme);

/// y = matrix * x for binary x of length `width` (test/measurement helper).
IntVec encodeNoiseless(const NoiselessCode& code, const IntVec& x);

/// Unique binary preimage of y, or nullopt when none exists.
std::optional<IntVec> tryDecodeNoiseless(const NoiselessCode& code,
                                         const IntVec& y);

/// As tryDecodeNoiseless but throws InfeasibleMeasurement on failure.
IntVec decodeNoiseless(const NoiselessCode& code, const IntVec& y);

struct InjectivityResult {
  bool injective = false;
  std::optional<IntVec> witness;  // nonzero ternary t with m*t = 0
};

/// Brute force: m is injective on binary vectors iff m*t != 0 for every
/// nonzero ternary t. Width capped at 22.
InjectivityResult verifyInjective(const BinaryMatrix& m);

}  // namespace qgt
