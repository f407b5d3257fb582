#include <doctest.h>

#include "gwtqft/closedforms.hpp"
#include "gwtqft/error.hpp"
#include "gwtqft/frobenius.hpp"
#include "gwtqft/io.hpp"
#include "gwtqft/verify.hpp"
#include "helpers.hpp"

using namespace gwtqft;
using testing::series;

namespace {

AlgebraElement constant_element(std::initializer_list<long> xs, std::size_t order) {
  std::vector<Series> c;
  for (long x : xs) c.push_back(Series::constant(x, order));
  return AlgebraElement(std::move(c));
}

}  // namespace

TEST_CASE("class algebras satisfy the Frobenius axioms") {
  for (int d = 1; d <= 5; ++d) CHECK(check_axioms(class_algebra(d, 4)).empty());
}

TEST_CASE("class algebra of S_3") {
  const FrobeniusAlgebra a = class_algebra(3, 4);
  CHECK(a.labels() == std::vector<std::string>{"(3)", "(2,1)", "(1,1,1)"});
  const AlgebraElement k21 = AlgebraElement::basis_vector(1, 3, 4);
  CHECK(multiply(a, k21, k21) == constant_element({3, 0, 3}, 4));
  CHECK(a.unit() == constant_element({0, 0, 1}, 4));
  CHECK(counit(a, a.unit()) == Series::constant(Rational(1, 6), 4));
}

TEST_CASE("central idempotents are orthogonal idempotents summing to 1") {
  for (int d = 1; d <= 5; ++d) {
    const FrobeniusAlgebra a = class_algebra(d, 3);
    const auto e = central_idempotents(d, 3);
    AlgebraElement sum = AlgebraElement::zero(a.rank(), 3);
    for (std::size_t i = 0; i < e.size(); ++i) {
      sum += e[i];
      for (std::size_t j = 0; j < e.size(); ++j)
        CHECK(multiply(a, e[i], e[j]) == (i == j ? e[i] : AlgebraElement::zero(a.rank(), 3)));
    }
    CHECK(sum == a.unit());
  }
}

TEST_CASE("semisimple algebras") {
  const std::vector<Series> lambdas = {series({"2", "1", "0"}), series({"-3", "0", "5"})};
  const FrobeniusAlgebra a = semisimple_algebra(lambdas);
  CHECK(check_axioms(a).empty());
  CHECK(a.labels() == std::vector<std::string>{"f1", "f2"});
  CHECK(same_multiset(eigenvalues(a, default_seeds(a)), lambdas));
  // Handle element is sum lambda_i f_i.
  CHECK(handle_element(a) == AlgebraElement(lambdas));
  CHECK(closed_value(lambdas, 1) == Series::constant(2, 3));
  CHECK(closed_value(lambdas, 2) == lambdas[0] + lambdas[1]);
}

TEST_CASE("comultiplication of the unit pairs back to the handle") {
  const FrobeniusAlgebra a = class_algebra(3, 4);
  const SeriesMatrix eta_inv = invert(pairing_matrix(a));
  const SeriesMatrix delta = comultiply(a, eta_inv, a.unit());
  AlgebraElement h = AlgebraElement::zero(3, 4);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s)
      h += delta(r, s) * multiply(a, AlgebraElement::basis_vector(r, 3, 4), AlgebraElement::basis_vector(s, 3, 4));
  CHECK(h == handle_element(a));
}

TEST_CASE("lifting converges quadratically and recovers eigenvalues") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rank = 1 + trial % 5;
    const LiftingFixture f = random_lifting_fixture(rng, rank, 16);
    CHECK(check_axioms(f.algebra).empty());
    const LiftResult r = lift_idempotents(f.algebra, f.seeds);
    for (std::size_t k = 0; k < r.residual_valuations.size(); ++k)
      CHECK(r.residual_valuations[k] >= std::min<std::size_t>(std::size_t{1} << k, 16));
    CHECK(r.residual_valuations.back() == 16);
    CHECK(same_multiset(eigenvalues_of_lifted(f.algebra, r), f.eigenvalues));
  }
}

TEST_CASE("eigenvalues survive a change of basis") {
  std::mt19937_64 rng(5);
  const std::size_t order = 8;
  const FrobeniusAlgebra a = class_algebra(3, order);
  SeriesMatrix m = SeriesMatrix::identity(3, order);
  m(1, 0) = series({"2", "1", "0", "0", "0", "0", "0", "0"});
  m(2, 1) = series({"-1", "0", "1/3", "0", "0", "0", "0", "0"});
  const FrobeniusAlgebra b = conjugate_basis(a, m);
  CHECK(check_axioms(b).empty());
  std::vector<AlgebraElement> seeds;
  for (const auto& e : central_idempotents(3, order)) seeds.push_back(to_conjugated_coordinates(m, e));
  CHECK(same_multiset(eigenvalues(b, seeds), eigenvalues(a, central_idempotents(3, order))));
}

TEST_CASE("errors") {
  const FrobeniusAlgebra a = class_algebra(2, 4);
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidAlgebra;
  };
  // Not idempotent mod t.
  CHECK(code_of([&] { lift_idempotents(a, {a.unit(), a.unit()}); }) == ErrorCode::SeedError);
  // Wrong count.
  CHECK(code_of([&] { lift_idempotents(a, {a.unit()}); }) == ErrorCode::SeedError);
  SeriesMatrix singular(2, 4);
  singular(0, 0) = Series::constant(1, 4);
  singular(1, 0) = Series::constant(1, 4);
  CHECK(code_of([&] { conjugate_basis(a, singular); }) == ErrorCode::SingularChangeOfBasis);
  SeriesMatrix nilpotent = SeriesMatrix::identity(2, 4);
  nilpotent(0, 0) = series({"0", "1", "0", "0"});
  nilpotent(1, 1) = series({"0", "1", "0", "0"});
  CHECK(code_of([&] { (void)invert(nilpotent); }) == ErrorCode::NotAUnit);
  CHECK_THROWS_AS(semisimple_algebra({series({"0", "1"})}), Error);
}

TEST_CASE("degree-one algebra") {
  const FrobeniusAlgebra a = d1_algebra(8);
  CHECK(check_axioms(a).empty());
  const Series s = sine_quotient(8);
  CHECK(a.mult(0, 0, 0) == s);
  CHECK(a.counit(0) == invert(s));
  CHECK(eigenvalues(a, default_seeds(a)) == std::vector<Series>{int_pow(s, 2)});
}

TEST_CASE("JSON round trips") {
  const FrobeniusAlgebra a = d1_algebra(6);
  const FrobeniusAlgebra b = algebra_from_json(algebra_to_json(a));
  CHECK(algebra_to_json(b) == algebra_to_json(a));
  const Series s = series({"1", "-1/2", "0"});
  CHECK(series_to_json(s).dump() == R"({"order":3,"coeffs":["1","-1/2","0"]})");
  CHECK(series_from_json(series_to_json(s)) == s);
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"order":2,"coeffs":["1"]})")), ParseError);
  CHECK_THROWS_AS(series_from_json(Json::parse(R"({"coeffs":[0.5]})")), ParseError);
}
