#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gwtqft/frobenius.hpp"
#include "gwtqft/series.hpp"
#include "gwtqft/tqft.hpp"

namespace gwtqft {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int max_d = 5;
  std::size_t order = kDefaultOrder;
  std::uint64_t budget = kDefaultHurwitzBudget;
  std::size_t lifting_fixtures = 100;
};

/// annulus, d1, caps, hurwitz, structure, lifting, d2, connected,
/// concatenation; "all" runs every one in that order.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);

/// A semisimple algebra with known eigenvalues, hidden behind a random change
/// of basis M = U + t K (U unit lower triangular, K arbitrary), together with
/// mod-t idempotent seeds in the new basis.
struct LiftingFixture {
  FrobeniusAlgebra algebra;
  std::vector<AlgebraElement> seeds;
  std::vector<Series> eigenvalues;
};

LiftingFixture random_lifting_fixture(std::mt19937_64& rng, std::size_t rank, std::size_t order);

/// Multiset equality of series lists.
bool same_multiset(std::vector<Series> a, std::vector<Series> b);

}  // namespace gwtqft
