#include "qgt/types.hpp"

#include <bit>

namespace qgt {

BinaryMatrix::BinaryMatrix(Eigen::Index rows, Eigen::Index cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64) {
  if (rows < 0 || cols < 0) throw DomainError("BinaryMatrix: negative shape");
  words_.assign(static_cast<std::size_t>(rows_ * words_per_row_), 0);
}

BinaryMatrix BinaryMatrix::fromDense(const DenseIntMat& m) {
  BinaryMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const std::int64_t v = m(i, j);
      if (v != 0 && v != 1)
        throw DomainError("BinaryMatrix: entry outside {0,1}");
      if (v) out.set(i, j, true);
    }
  return out;
}

Eigen::Index BinaryMatrix::rowWeight(Eigen::Index i) const {
  Eigen::Index w = 0;
  const std::uint64_t* words = rowWords(i);
  for (Eigen::Index k = 0; k < words_per_row_; ++k) w += std::popcount(words[k]);
  return w;
}

Eigen::Index BinaryMatrix::columnWeight(Eigen::Index j) const {
  Eigen::Index w = 0;
  for (Eigen::Index i = 0; i < rows_; ++i) w += get(i, j) ? 1 : 0;
  return w;
}

TernaryMatrix BinaryMatrix::toTernary() const {
  TernaryStorage m = TernaryStorage::Zero(rows_, cols_);
  for (Eigen::Index i = 0; i < rows_; ++i)
    for (Eigen::Index j = 0; j < cols_; ++j)
      if (get(i, j)) m(i, j) = 1;
  return ternaryUnchecked(std::move(m));
}

DenseIntMat BinaryMatrix::toDense() const {
  DenseIntMat m = DenseIntMat::Zero(rows_, cols_);
  for (Eigen::Index i = 0; i < rows_; ++i)
    for (Eigen::Index j = 0; j < cols_; ++j)
      if (get(i, j)) m(i, j) = 1;
  return m;
}

TernaryMatrix TernaryMatrix::fromDense(const TernaryStorage& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) < -1 || m(i, j) > 1)
        throw DomainError("TernaryMatrix: entry outside {-1,0,1}");
  return TernaryMatrix(m);
}

TernaryMatrix TernaryMatrix::zero(Eigen::Index rows, Eigen::Index cols) {
  return TernaryMatrix(TernaryStorage::Zero(rows, cols));
}

TernaryMatrix ternaryUnchecked(TernaryStorage&& m) {
  return TernaryMatrix(std::move(m));
}

}  // namespace qgt
