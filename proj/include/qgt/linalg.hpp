#pragma once

#include <cassert>
#include <utility>

#include "qgt/types.hpp"

namespace qgt {

/// Sylvester-type Hadamard matrix H_{2^m} = H_2 kron ... kron H_2.
/// Entry (i,j) is (-1)^popcount(i & j). Satisfies H * H^T = 2^m * I.
TernaryMatrix sylvesterHadamard(int log2_size);

/// In-place fast Walsh-Hadamard transform: v <- H_len * v. Length must be a
/// power of two. Integer input stays in exact integer arithmetic.
template <class Scalar>
void fwhtInPlace(Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& v) {
  const Eigen::Index n = v.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw DomainError("fwht: length is not a power of two");
  Scalar* d = v.data();
  for (Eigen::Index h = 1; h < n; h <<= 1) {
    for (Eigen::Index i = 0; i < n; i += h << 1) {
      for (Eigen::Index j = i; j < i + h; ++j) {
        const Scalar a = d[j];
        const Scalar b = d[j + h];
        if constexpr (std::is_integral_v<Scalar>) {
          assert(a < (Scalar{1} << 62) && a > -(Scalar{1} << 62));
          assert(b < (Scalar{1} << 62) && b > -(Scalar{1} << 62));
        }
        d[j] = a + b;
        d[j + h] = a - b;
      }
    }
  }
}

inline IntVec fwht(IntVec v) {
  fwhtInPlace(v);
  return v;
}

inline RealVec fwht(RealVec v) {
  fwhtInPlace(v);
  return v;
}

/// Kronecker product. Guarded against outputs above 2^26 entries.
TernaryMatrix kronecker(const TernaryMatrix& a, const TernaryMatrix& b);

/// Positive-part / negative-part split: returns (Q1, Q2) with Q1 - Q2 = P
/// and disjoint supports.
std::pair<BinaryMatrix, BinaryMatrix> splitSigned(const TernaryMatrix& p);

/// Exact integer matrix-vector products.
IntVec matVec(const BinaryMatrix& a, const IntVec& x);
IntVec matVec(const TernaryMatrix& a, const IntVec& x);
RealVec matVec(const TernaryMatrix& a, const RealVec& x);

inline bool isPowerOfTwo(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

/// Smallest m with 2^m >= v (v >= 1).
int ceilLog2(std::int64_t v);

}  // namespace qgt
