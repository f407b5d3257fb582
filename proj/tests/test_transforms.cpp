#include <doctest.h>

#include "gwtqft/error.hpp"
#include "gwtqft/tqft.hpp"
#include "gwtqft/transforms.hpp"
#include "helpers.hpp"

using namespace gwtqft;

TEST_CASE("domain genus") {
  CHECK(domain_genus(1, 5, 0) == 5);
  CHECK(domain_genus(2, 1, 2) == 2);
  CHECK(domain_genus(3, 0, 4) == 0);
  CHECK(domain_genus(1, 0, 1) == Rational(1, 2));
}

TEST_CASE("connected genus-one counts") {
  const std::size_t order = 4;
  std::vector<Series> rows = {Series::constant(1, order)};
  for (int d = 1; d <= 6; ++d) rows.push_back(Series::constant(gauge_invariant({d, 1, {}}), order));
  const BivariateSeries n = connected_from_disconnected(BivariateSeries(rows));
  CHECK(n[1] == Series::constant(1, order));
  CHECK(n[2] == Series::constant(Rational(3, 2), order));
  CHECK(n[4] == Series::constant(Rational(7, 4), order));
  CHECK(n[6] == Series::constant(Rational(2), order));
  CHECK(disconnected_from_connected(n) == BivariateSeries(rows));
}

TEST_CASE("exp and log in q are inverse on random data") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t qdeg = 1 + trial % 6, order = 1 + (3 * trial) % 16;
    std::vector<Series> rows = {Series(order)};
    for (std::size_t d = 1; d <= qdeg; ++d) rows.push_back(testing::random_series(rng, order));
    const BivariateSeries c(rows);
    CHECK(connected_from_disconnected(disconnected_from_connected(c)) == c);
    rows[0] = Series::constant(1, order);
    const BivariateSeries z(rows);
    CHECK(disconnected_from_connected(connected_from_disconnected(z)) == z);
  }
}

TEST_CASE("row constraints") {
  const BivariateSeries bad({Series::constant(2, 3), Series(3)});
  CHECK_THROWS_AS(connected_from_disconnected(bad), Error);
  CHECK_THROWS_AS(disconnected_from_connected(bad), Error);
}
