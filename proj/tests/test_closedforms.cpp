#include <doctest.h>

#include "gwtqft/closedforms.hpp"
#include "gwtqft/error.hpp"
#include "gwtqft/tqft.hpp"
#include "helpers.hpp"

using namespace gwtqft;
using testing::series;

TEST_CASE("degree-one closed genus 0 to order 16") {
  CHECK(d1_relative(0, 0, 16) == series({"1", "0", "1/12", "0", "1/240", "0", "1/6048", "0", "1/172800", "0",
                                         "1/5322240", "0", "691/118879488000", "0", "1/5748019200", "0"}));
  CHECK(d1_relative(1, 0, 8) == Series::constant(1, 8));
  CHECK_THROWS_AS(d1_relative(-1, 0, 4), Error);
}

TEST_CASE("caps") {
  CHECK(cap(1, Partition({1}), 8) == series({"1", "0", "1/24", "0", "7/5760", "0", "31/967680", "0"}));
  CHECK(cap(2, Partition({2}), 8) == series({"0", "-1/4", "0", "-1/24", "0", "-7/1440", "0", "-31/60480"}));
  CHECK(cap(2, Partition({1, 1}), 8)[0] == Rational(1, 2));
  CHECK(cap(3, Partition({3}), 8).valuation() == 2);
  CHECK_THROWS_AS(cap(3, Partition({2}), 8), Error);
}

TEST_CASE("genus-zero closed series") {
  CHECK(fp_genus0(2, 8) == series({"1/2", "0", "5/24", "0", "71/1440", "0", "107/12096", "0"}));
  CHECK(fp_genus0(1, 16) == d1_relative(0, 0, 16));
}

TEST_CASE("degree-two eigenvalues") {
  const auto [plus, minus] = d2_eigenvalues(8);
  CHECK(minus == series({"4", "-2", "-2/3", "5/12", "1/20", "-23/576", "-17/7560", "227/96768"}));
  CHECK(plus == series({"4", "2", "-2/3", "-5/12", "1/20", "23/576", "-17/7560", "-227/96768"}));
  CHECK(sqrt(minus) ==
        series({"2", "-1/2", "-11/48", "3/64", "511/46080", "-113/61440", "-3103/10321920", "1007/24772608"}));
  CHECK(d2_closed(2, 8) == series({"8", "0", "-4/3", "0", "1/10", "0", "-17/3780", "0"}));
  CHECK(d2_closed(1, 8) == Series::constant(2, 8));
  CHECK(d2_closed(0, 8) == fp_genus0(2, 8));
}

TEST_CASE("closed forms reduce to the gauge theory at t = 0") {
  for (int g = 0; g <= 4; ++g) {
    CHECK(d2_closed(g, 4)[0] == gauge_invariant({2, g, {}}));
    CHECK(d1_relative(g, 0, 4)[0] == gauge_invariant({1, g, {}}));
  }
  for (int d = 1; d <= 5; ++d) CHECK(fp_genus0(d, 4)[0] == gauge_invariant({d, 0, {}}));
}

TEST_CASE("only even powers appear when (2g-2)d is even") {
  for (int g = 0; g <= 3; ++g) {
    const Series z = d2_closed(g, 12);
    for (std::size_t k = 1; k < 12; k += 2) CHECK(z[k] == 0);
  }
}
