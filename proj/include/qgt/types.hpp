#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "qgt/errors.hpp"

namespace qgt {

/// Exact integer measurement vectors. All arithmetic stays below 2^62.
using IntVec = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Real-valued vectors (noise, half-sum intermediates).
using RealVec = Eigen::VectorXd;

/// Dense scalar storage used behind TernaryMatrix.
using TernaryStorage = Eigen::Matrix<std::int8_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense int64 matrix, the common currency of the brute-force oracle.
using DenseIntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

class TernaryMatrix;

/// {0,1} pooling matrix with bit-packed rows. This is the object actually
/// measured; columns index items, rows index pools.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(Eigen::Index rows, Eigen::Index cols);

  /// Builds from any dense integer matrix; entries must be 0 or 1.
  static BinaryMatrix fromDense(const DenseIntMat& m);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  bool get(Eigen::Index i, Eigen::Index j) const {
    return (words_[i * words_per_row_ + (j >> 6)] >> (j & 63)) & 1u;
  }
  void set(Eigen::Index i, Eigen::Index j, bool v) {
    std::uint64_t& w = words_[i * words_per_row_ + (j >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (j & 63);
    if (v)
      w |= bit;
    else
      w &= ~bit;
  }

  Eigen::Index rowWeight(Eigen::Index i) const;
  Eigen::Index columnWeight(Eigen::Index j) const;

  TernaryMatrix toTernary() const;
  DenseIntMat toDense() const;

  /// Packed words of row i; the last word's padding bits are zero.
  const std::uint64_t* rowWords(Eigen::Index i) const {
    return words_.data() + i * words_per_row_;
  }
  Eigen::Index wordsPerRow() const { return words_per_row_; }

  bool operator==(const BinaryMatrix& other) const = default;

 private:
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
  Eigen::Index words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

/// {-1,0,+1} matrix (Hadamard products, difference-space detecting matrices).
class TernaryMatrix {
 public:
  TernaryMatrix() = default;

  /// Validates the alphabet; throws DomainError on any entry outside {-1,0,1}.
  static TernaryMatrix fromDense(const TernaryStorage& m);
  static TernaryMatrix zero(Eigen::Index rows, Eigen::Index cols);

  Eigen::Index rows() const { return m_.rows(); }
  Eigen::Index cols() const { return m_.cols(); }
  int operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  const TernaryStorage& mat() const { return m_; }
  DenseIntMat toDense() const { return m_.cast<std::int64_t>(); }

  bool operator==(const TernaryMatrix& other) const {
    return m_.rows() == other.m_.rows() && m_.cols() == other.m_.cols() &&
           m_ == other.m_;
  }

 private:
  friend TernaryMatrix ternaryUnchecked(TernaryStorage&& m);
  explicit TernaryMatrix(TernaryStorage m) : m_(std::move(m)) {}
  TernaryStorage m_;
};

/// Internal constructor for matrices whose alphabet is valid by construction.
TernaryMatrix ternaryUnchecked(TernaryStorage&& m);

}  // namespace qgt
