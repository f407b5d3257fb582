#include <doctest.h>

#include "gwtqft/error.hpp"
#include "gwtqft/partition.hpp"
#include "gwtqft/permutation.hpp"
#include "gwtqft/symchar.hpp"

using namespace gwtqft;

namespace {

// Trace of the standard representation of S_3: (number of fixed points) - 1.
long standard_trace(const Permutation& p) {
  long fixed = 0;
  for (std::size_t i = 0; i < p.size(); ++i) fixed += p[i] == i;
  return fixed - 1;
}

}  // namespace

TEST_CASE("S_3 table") {
  const CharacterTable& t = character_table(3);
  CHECK(t.values == std::vector<std::vector<long>>{{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}});
  const SymmetricGroup g(3);
  for (std::size_t a = 0; a < g.order(); ++a) CHECK(t(1, g.class_of(a)) == standard_trace(g.element(a)));
}

TEST_CASE("individual characters") {
  CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
  CHECK(character(Partition({3, 1}), Partition({2, 1, 1})) == 1);
  CHECK(character(Partition({2, 1, 1}), Partition({4})) == 1);
  CHECK(character(Partition({3, 2}), Partition({1, 1, 1, 1, 1})) == 5);
  CHECK(character(Partition({3, 2}), Partition({5})) == 0);
  CHECK_THROWS_AS(character(Partition({2, 1}), Partition({2, 2})), Error);
}

TEST_CASE("orthogonality up to d = 8") {
  for (int d = 1; d <= 8; ++d) {
    const CharacterTable& t = character_table(d);
    const auto& parts = enumerate_partitions(d);
    const std::size_t n = parts.size();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        Rational sum = 0;
        for (std::size_t c = 0; c < n; ++c) sum += Rational(t(r, c) * t(s, c)) / Rational(centralizer_order(parts[c]));
        CHECK(sum == (r == s ? 1 : 0));
      }
    for (std::size_t r = 0; r < n; ++r) CHECK(Integer(t(r, n - 1)) == hook_dimension(parts[r]));
  }
}

TEST_CASE("class sum products") {
  const ClassConstants k = class_product_constants(3);
  // K_(2,1)^2 = 3 K_(1,1,1) + 3 K_(3)
  CHECK(k(1, 1, 0) == 3);
  CHECK(k(1, 1, 1) == 0);
  CHECK(k(1, 1, 2) == 3);
  for (int d = 1; d <= 5; ++d) CHECK(class_product_constants(d) == class_product_constants_by_convolution(d));
}
