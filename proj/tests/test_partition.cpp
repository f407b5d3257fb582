#include <doctest.h>

#include <map>

#include "gwtqft/error.hpp"
#include "gwtqft/partition.hpp"
#include "gwtqft/permutation.hpp"

using namespace gwtqft;

TEST_CASE("canonical order is reverse lexicographic") {
  std::vector<std::string> labels;
  for (const auto& p : enumerate_partitions(4)) labels.push_back(p.label());
  CHECK(labels == std::vector<std::string>{"(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"});
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0).front().label() == "()");
  CHECK_THROWS_AS(enumerate_partitions(-1), Error);
}

TEST_CASE("partition counts p(d)") {
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int d = 0; d < static_cast<int>(p.size()); ++d) CHECK(enumerate_partitions(d).size() == p[d]);
  for (int d = 1; d <= 10; ++d) {
    const auto& parts = enumerate_partitions(d);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      CHECK(partition_index(parts[i]) == i);
      if (i) CHECK(parts[i - 1] > parts[i]);
    }
  }
}

TEST_CASE("construction canonicalizes and validates") {
  CHECK(Partition({1, 3, 1}).parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition({1, 3, 1}).multiplicity(1) == 2);
  CHECK(Partition({2, 1}).spec() == "2,1");
  CHECK_THROWS_AS(Partition({2, 0}), Error);
  CHECK(Partition::ones(3).label() == "(1,1,1)");
}

TEST_CASE("centralizer orders against brute force in S_5") {
  const SymmetricGroup group(5);
  std::map<std::size_t, long> counts;
  for (std::size_t i = 0; i < group.order(); ++i) ++counts[group.class_of(i)];
  const auto& parts = enumerate_partitions(5);
  for (std::size_t c = 0; c < parts.size(); ++c) {
    CHECK(Integer(counts[c]) == class_size(parts[c]));
    CHECK(centralizer_order(parts[c]) * counts[c] == 120);
  }
  CHECK(centralizer_order(Partition({2, 2, 1})) == 8);
  CHECK(centralizer_order(Partition({3})) == 3);
}

TEST_CASE("hook dimensions") {
  CHECK(hook_dimension(Partition({2, 1})) == 2);
  CHECK(hook_dimension(Partition({3, 2})) == 5);
  CHECK(hook_dimension(Partition({3, 2, 1})) == 16);
  for (int d = 1; d <= 8; ++d) {
    Integer sum = 0;
    for (const auto& p : enumerate_partitions(d)) sum += hook_dimension(p) * hook_dimension(p);
    CHECK(sum == factorial(d));
  }
}

TEST_CASE("parse_partition offsets") {
  CHECK(parse_partition(" 1, 2 ") == Partition({2, 1}));
  auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_partition(text, 10);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 0;
  };
  CHECK(offset_of("2,,1") == 12);
  CHECK(offset_of("2,0") == 12);
  CHECK(offset_of("2,-1") == 12);
  CHECK(offset_of("2;1") == 11);
  CHECK(offset_of("") == 10);
}

TEST_CASE("symmetric group tables") {
  CHECK_THROWS_AS(SymmetricGroup(10), Error);
  for (int d = 1; d <= 5; ++d) {
    const SymmetricGroup g(d);
    CHECK(g.order() == factorial(d).get_ui());
    for (std::size_t a = 0; a < g.order(); ++a) {
      CHECK(g.multiply(a, g.inverse_of(a)) == g.identity());
      CHECK(g.index_of(g.element(a)) == a);
      CHECK(partition_index(cycle_type(g.element(a))) == g.class_of(a));
    }
  }
  const Permutation p = {1, 2, 0}, q = {1, 0, 2};
  CHECK(compose(p, q) == Permutation{2, 1, 0});
  CHECK(compose(p, inverse(p)) == Permutation{0, 1, 2});
}
