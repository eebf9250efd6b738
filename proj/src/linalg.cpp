#include "qgt/linalg.hpp"

#include <bit>

namespace qgt {

namespace {
constexpr std::int64_t kMaxMaterializedEntries = std::int64_t{1} << 26;
}

TernaryMatrix sylvesterHadamard(int log2_size) {
  if (log2_size < 0) throw DomainError("sylvesterHadamard: negative size");
  if (log2_size > 20)
    throw DomainError("sylvesterHadamard: size overflow (log2_size > 20)");
  const std::int64_t n = std::int64_t{1} << log2_size;
  if (n * n > kMaxMaterializedEntries)
    throw DomainError(
        "sylvesterHadamard: size overflow (dense matrix above 2^26 entries)");
  TernaryStorage h(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      h(i, j) = (std::popcount(static_cast<std::uint64_t>(i & j)) & 1) ? -1 : 1;
  return ternaryUnchecked(std::move(h));
}

TernaryMatrix kronecker(const TernaryMatrix& a, const TernaryMatrix& b) {
  const std::int64_t rows = a.rows() * b.rows();
  const std::int64_t cols = a.cols() * b.cols();
  if (rows * cols > kMaxMaterializedEntries)
    throw DomainError("kronecker: size overflow (above 2^26 entries)");
  TernaryStorage out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const std::int8_t f = static_cast<std::int8_t>(a(i, j));
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          f == 0 ? TernaryStorage::Zero(b.rows(), b.cols()).eval()
                 : (f * b.mat().array()).matrix().eval();
    }
  return ternaryUnchecked(std::move(out));
}

std::pair<BinaryMatrix, BinaryMatrix> splitSigned(const TernaryMatrix& p) {
  BinaryMatrix q1(p.rows(), p.cols());
  BinaryMatrix q2(p.rows(), p.cols());
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      const int v = p(i, j);
      if (v > 0)
        q1.set(i, j, true);
      else if (v < 0)
        q2.set(i, j, true);
    }
  return {std::move(q1), std::move(q2)};
}

IntVec matVec(const BinaryMatrix& a, const IntVec& x) {
  if (a.cols() != x.size()) throw DomainError("matVec: dimension mismatch");
  IntVec y(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    std::int64_t acc = 0;
    const std::uint64_t* words = a.rowWords(i);
    for (Eigen::Index k = 0; k < a.wordsPerRow(); ++k) {
      std::uint64_t w = words[k];
      while (w) {
        const int bit = std::countr_zero(w);
        acc += x[(k << 6) + bit];
        w &= w - 1;
      }
    }
    y[i] = acc;
  }
  return y;
}

IntVec matVec(const TernaryMatrix& a, const IntVec& x) {
  if (a.cols() != x.size()) throw DomainError("matVec: dimension mismatch");
  return a.mat().cast<std::int64_t>() * x;
}

RealVec matVec(const TernaryMatrix& a, const RealVec& x) {
  if (a.cols() != x.size()) throw DomainError("matVec: dimension mismatch");
  return a.mat().cast<double>() * x;
}

int ceilLog2(std::int64_t v) {
  if (v < 1) throw DomainError("ceilLog2: value below 1");
  int m = 0;
  while ((std::int64_t{1} << m) < v) ++m;
  return m;
}

}  // namespace qgt
