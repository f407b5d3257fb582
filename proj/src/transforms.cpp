#include "gwtqft/transforms.hpp"

#include "gwtqft/error.hpp"

namespace gwtqft {

BivariateSeries::BivariateSeries(std::size_t qdeg, std::size_t order) : rows_(qdeg + 1, Series(order)) {}

BivariateSeries::BivariateSeries(std::vector<Series> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::DomainError, "bivariate series needs a q^0 row");
  for (const auto& r : rows_) require_same_order(rows_.front(), r);
}

BivariateSeries disconnected_from_connected(const BivariateSeries& connected) {
  if (!connected[0].is_zero()) throw Error(ErrorCode::DomainError, "exp in q requires a zero q^0 term");
  const std::size_t top = connected.qdeg();
  const std::size_t order = connected.order();
  // Z' = N' Z in q:  n Z_n = sum_{k=1}^{n} k N_k Z_{n-k}
  std::vector<Series> z(top + 1, Series(order));
  z[0] = Series::constant(1, order);
  for (std::size_t n = 1; n <= top; ++n) {
    Series acc(order);
    for (std::size_t k = 1; k <= n; ++k) acc += (connected[k] * z[n - k]) * Rational(static_cast<long>(k));
    z[n] = acc * Rational(1, static_cast<long>(n));
  }
  return BivariateSeries(std::move(z));
}

BivariateSeries connected_from_disconnected(const BivariateSeries& disconnected) {
  if (disconnected[0] != Series::constant(1, disconnected.order()))
    throw Error(ErrorCode::DomainError, "log in q requires the q^0 term to be 1");
  const std::size_t top = disconnected.qdeg();
  const std::size_t order = disconnected.order();
  // n N_n = n Z_n - sum_{k=1}^{n-1} k N_k Z_{n-k}
  std::vector<Series> c(top + 1, Series(order));
  for (std::size_t n = 1; n <= top; ++n) {
    Series acc = disconnected[n] * Rational(static_cast<long>(n));
    for (std::size_t k = 1; k < n; ++k) acc -= (c[k] * disconnected[n - k]) * Rational(static_cast<long>(k));
    c[n] = acc * Rational(1, static_cast<long>(n));
  }
  return BivariateSeries(std::move(c));
}

Rational domain_genus(long d, long g, long b) {
  Rational h((2 * g - 2) * d + b + 2, 2);
  h.canonicalize();
  return h;
}

}  // namespace gwtqft
