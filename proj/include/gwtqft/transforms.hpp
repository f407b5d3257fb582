#pragma once

#include <cstddef>
#include <vector>

#include "gwtqft/series.hpp"

namespace gwtqft {

/// Series in q (degrees 0..D) whose coefficients are series in t mod t^N.
/// Connected data has a zero q^0 row; disconnected data has q^0 row 1.
class BivariateSeries {
 public:
  BivariateSeries(std::size_t qdeg, std::size_t order);
  /// rows[d] is the coefficient of q^d, d = 0..rows.size()-1.
  explicit BivariateSeries(std::vector<Series> rows);

  std::size_t qdeg() const noexcept { return rows_.size() - 1; }
  std::size_t order() const noexcept { return rows_.front().order(); }
  const Series& operator[](std::size_t d) const { return rows_[d]; }
  const Rational& coeff(std::size_t d, std::size_t b) const { return rows_[d][b]; }
  const std::vector<Series>& rows() const noexcept { return rows_; }

  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

 private:
  std::vector<Series> rows_;
};

/// exp in q: requires a zero q^0 row (DomainError); the result has q^0 row 1.
BivariateSeries disconnected_from_connected(const BivariateSeries& connected);

/// log in q: requires q^0 row equal to 1 (DomainError); result has q^0 row 0.
BivariateSeries connected_from_disconnected(const BivariateSeries& disconnected);

/// Domain genus h from 2h - 2 = (2g - 2) d + b.
Rational domain_genus(long d, long g, long b);

}  // namespace gwtqft
