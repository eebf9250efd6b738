#include "qgt/params.hpp"

#include <algorithm>

namespace qgt {

CodeParams CodeParams::fromExponents(std::int64_t n, double kappa,
                                     double delta, double lambda) {
  if (n < 2) throw DomainError("params: n must be at least 2");
  if (!(delta >= 0 && 2 * delta <= kappa))
    throw DomainError("params: need 0 <= 2*delta <= kappa");
  if (!(kappa > 0 && kappa < lambda && lambda <= 1))
    throw DomainError("params: need 0 < kappa < lambda <= 1");
  CodeParams p;
  p.n = n;
  p.kappa = kappa;
  p.delta = delta;
  p.lambda = lambda;
  p.epsilon = kappa - 2 * delta;
  p.boundary_regime = (p.epsilon == 0);
  const double nd = static_cast<double>(n);
  p.d0 = static_cast<std::int64_t>(std::ceil(std::pow(nd, kappa) - 1e-9));
  p.e = std::pow(nd, delta);
  p.k = std::min<std::int64_t>(
      n, static_cast<std::int64_t>(std::ceil(std::pow(nd, lambda) - 1e-9)));
  p.d0 = std::max<std::int64_t>(1, std::min(p.d0, n));
  return p;
}

CodeParams CodeParams::fromDirect(std::int64_t n, std::int64_t d0, double e,
                                  std::int64_t k) {
  if (n < 1) throw DomainError("params: n must be at least 1");
  if (d0 < 1 || d0 > n) throw DomainError("params: d0 out of [1, n]");
  if (!(e >= 0)) throw DomainError("params: noise bound must be >= 0");
  if (k < 1 || k > n) throw DomainError("params: k out of [1, n]");
  CodeParams p;
  p.n = n;
  p.d0 = d0;
  p.e = e;
  p.k = k;
  return p;
}

}  // namespace qgt
