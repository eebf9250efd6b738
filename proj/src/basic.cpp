#include "qgt/basic.hpp"

#include <cassert>
#include <cmath>

#include "qgt/linalg.hpp"

namespace qgt {

namespace {
constexpr std::int64_t kMaterializeEntryCap = std::int64_t{1} << 24;

// Shared structured measurement: returns [Q1 v ; Q2 v] for any integer v
// of length n, using P = H kron M and |P| = J kron M.
IntVec measureStructured(const BasicCode& code, const IntVec& v) {
  const std::int64_t h_size = code.hadamardSize();
  const int w = code.inner.width;
  const int mh = code.inner.height();
  IntVec padded = IntVec::Zero(code.n_bar);
  padded.head(v.size()) = v;

  // Inner products per segment; column r collects (M x_j)[r] across j.
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> g(h_size, mh);
  IntVec col_sums = IntVec::Zero(mh);
  for (std::int64_t j = 0; j < h_size; ++j) {
    const IntVec mj = matVec(code.inner.matrix, padded.segment(j * w, w));
    g.row(j) = mj.transpose();
    col_sums += mj;
  }

  const std::int64_t rows_p = code.rowsP();
  IntVec out(2 * rows_p);
  IntVec column(h_size);
  for (int r = 0; r < mh; ++r) {
    column = g.col(r);
    fwhtInPlace(column);
    for (std::int64_t i = 0; i < h_size; ++i) {
      const std::int64_t px = column[i];
      const std::int64_t tot = col_sums[r];
      assert(((px + tot) & 1) == 0);
      out[i * mh + r] = (px + tot) / 2;           // Q1 slice
      out[rows_p + i * mh + r] = (tot - px) / 2;  // Q2 slice
    }
  }
  return out;
}

}  // namespace

double BasicCode::segmentNoiseBudget() const {
  const double mh = inner.height();
  const double w = inner.width;
  return std::sqrt(static_cast<double>(params.d0) / (16.0 * mh * w));
}

double BasicCode::advertisedNoiseBound() const {
  const double budget = segmentNoiseBudget();
  return params.e > 0 ? std::min(params.e, budget) : budget;
}

BasicCode buildBasic(const CodeParams& params, NoiselessScheme inner_scheme,
                     std::optional<int> inner_width,
                     std::optional<int> hadamard_log2) {
  BasicCode code;
  code.params = params;

  int w_req;
  if (inner_width) {
    w_req = *inner_width;
  } else if (params.hasExponents()) {
    w_req = static_cast<int>(
        std::ceil(std::pow(static_cast<double>(params.n), params.epsilon / 2) -
                  1e-9));
  } else {
    w_req = 2;
  }
  if (w_req < 1) w_req = 1;
  code.inner = buildNoiseless(w_req, inner_scheme);
  const int w = code.inner.width;

  if (hadamard_log2) {
    code.hadamard_log2 = *hadamard_log2;
  } else if (params.hasExponents() && !inner_width) {
    const double target =
        std::pow(static_cast<double>(params.n), 1.0 - params.epsilon / 2);
    code.hadamard_log2 = ceilLog2(
        static_cast<std::int64_t>(std::ceil(target - 1e-9)));
  } else {
    code.hadamard_log2 = ceilLog2((params.n + w - 1) / w);
  }
  if (code.hadamard_log2 < 0 || code.hadamard_log2 > 26)
    throw DomainError("buildBasic: hadamard size out of range");

  code.n_bar = code.hadamardSize() * w;
  if (code.n_bar < params.n)
    throw DomainError("buildBasic: factors too small (n_bar < n)");
  code.height = 2 * code.rowsP();

  if (code.rowsP() * params.n <= kMaterializeEntryCap) {
    const TernaryMatrix p = basicDifferenceMatrix(code);
    auto [q1, q2] = splitSigned(p);
    code.q1 = std::move(q1);
    code.q2 = std::move(q2);
  }
  return code;
}

IntVec encodeBasic(const BasicCode& code, const IntVec& x) {
  if (x.size() != code.params.n)
    throw DomainError("encodeBasic: dimension mismatch");
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x[i] != 0 && x[i] != 1)
      throw DomainError("encodeBasic: input is not binary");
  return measureStructured(code, x);
}

IntVec measureDiffBasic(const BasicCode& code, const IntVec& d) {
  if (d.size() != code.params.n)
    throw DomainError("measureDiffBasic: dimension mismatch");
  return measureStructured(code, d);
}

RealVec deconstructLevel(const RealVec& y, int n_levels) {
  if (n_levels < 0) throw DomainError("deconstructLevel: negative level");
  const Eigen::Index len = y.size();
  if (n_levels > 0 &&
      (len % (std::int64_t{1} << n_levels) != 0 || len == 0))
    throw DomainError("deconstructLevel: length not divisible by 2^levels");
  RealVec v = y;
  for (int lev = 0; lev < n_levels; ++lev) {
    const Eigen::Index block = len >> lev;
    const Eigen::Index half = block / 2;
    for (Eigen::Index base = 0; base < len; base += block) {
      for (Eigen::Index i = 0; i < half; ++i) {
        const double u = v[base + i];
        const double l = v[base + half + i];
        v[base + i] = (u + l) / 2;
        v[base + half + i] = (u - l) / 2;
      }
    }
  }
  return v;
}

IntVec decodeBasic(const BasicCode& code, const RealVec& y,
                   BasicDecodeStats* stats) {
  if (y.size() != code.height)
    throw DomainError("decodeBasic: measurement length mismatch");
  const std::int64_t rows_p = code.rowsP();
  const RealVec diff = y.head(rows_p) - y.tail(rows_p);
  const RealVec z = deconstructLevel(diff, code.hadamard_log2);

  const int w = code.inner.width;
  const int mh = code.inner.height();
  const std::int64_t h_size = code.hadamardSize();
  IntVec x_bar = IntVec::Zero(code.n_bar);
  IntVec segment(mh);
  if (stats) *stats = BasicDecodeStats{h_size, 0};
  for (std::int64_t i = 0; i < h_size; ++i) {
    for (int r = 0; r < mh; ++r)
      segment[r] = static_cast<std::int64_t>(std::round(z[i * mh + r]));
    if (const auto xi = tryDecodeNoiseless(code.inner, segment)) {
      x_bar.segment(i * w, w) = *xi;
    } else if (stats) {
      ++stats->segments_infeasible;  // erased to zero
    }
  }
  return x_bar.head(code.params.n);
}

TernaryMatrix basicDifferenceMatrix(const BasicCode& code) {
  const TernaryMatrix h = sylvesterHadamard(code.hadamard_log2);
  const TernaryMatrix p_full = kronecker(h, code.inner.matrix.toTernary());
  TernaryStorage truncated =
      p_full.mat().leftCols(code.params.n);
  return ternaryUnchecked(std::move(truncated));
}

BinaryMatrix basicPoolingMatrix(const BasicCode& code) {
  const std::int64_t rows_p = code.rowsP();
  BinaryMatrix out(2 * rows_p, code.params.n);
  const BinaryMatrix* q1 = code.q1 ? &*code.q1 : nullptr;
  BinaryMatrix q1_local, q2_local;
  if (!q1) {
    auto [a, b] = splitSigned(basicDifferenceMatrix(code));
    q1_local = std::move(a);
    q2_local = std::move(b);
  }
  const BinaryMatrix& top = q1 ? *code.q1 : q1_local;
  const BinaryMatrix& bottom = q1 ? *code.q2 : q2_local;
  for (std::int64_t i = 0; i < rows_p; ++i)
    for (std::int64_t j = 0; j < code.params.n; ++j) {
      if (top.get(i, j)) out.set(i, j, true);
      if (bottom.get(i, j)) out.set(rows_p + i, j, true);
    }
  return out;
}

}  // namespace qgt
