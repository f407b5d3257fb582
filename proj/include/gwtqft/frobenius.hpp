#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gwtqft/series.hpp"

namespace gwtqft {

/// Coordinates of an element of a free module over the truncated series ring.
class AlgebraElement {
 public:
  explicit AlgebraElement(std::vector<Series> coords);

  static AlgebraElement zero(std::size_t rank, std::size_t order);
  static AlgebraElement basis_vector(std::size_t i, std::size_t rank, std::size_t order);

  std::size_t rank() const noexcept { return coords_.size(); }
  std::size_t order() const noexcept { return coords_.front().order(); }
  const Series& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Series> coords() const noexcept { return coords_; }

  /// Minimum valuation over the coordinates.
  std::size_t valuation() const;
  /// Every coordinate reduced to its constant term.
  AlgebraElement constant_part() const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Series& s, const AlgebraElement& x);
  friend AlgebraElement operator*(const Rational& s, const AlgebraElement& x);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  std::vector<Series> coords_;
};

/// Square matrix over the truncated series ring.
class SeriesMatrix {
 public:
  SeriesMatrix(std::size_t n, std::size_t order);
  static SeriesMatrix identity(std::size_t n, std::size_t order);

  std::size_t size() const noexcept { return n_; }
  std::size_t order() const noexcept { return data_.front().order(); }
  Series& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Series& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix&, const SeriesMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Series> data_;
};

/// Gauss-Jordan inverse over Q[[t]]/t^N; throws NotAUnit when the
/// determinant is not a unit.
SeriesMatrix invert(const SeriesMatrix& m);

/// A commutative Frobenius algebra, free of finite rank over Q[[t]]/t^N.
/// The comultiplication is not stored; it is derived from the pairing
/// eta(x, y) = counit(x y) whenever needed.
class FrobeniusAlgebra {
 public:
  /// mult holds m_{ij}^k at index (i * n + j) * n + k.
  FrobeniusAlgebra(std::vector<std::string> labels, std::vector<Series> mult, std::vector<Series> unit,
                   std::vector<Series> counit);

  std::size_t rank() const noexcept { return labels_.size(); }
  std::size_t order() const noexcept { return unit_.front().order(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Series& mult(std::size_t i, std::size_t j, std::size_t k) const { return mult_[(i * rank() + j) * rank() + k]; }
  std::span<const Series> mult_tensor() const noexcept { return mult_; }
  AlgebraElement unit() const { return AlgebraElement(unit_); }
  const Series& counit(std::size_t i) const { return counit_[i]; }
  std::span<const Series> counit_vector() const noexcept { return counit_; }

 private:
  friend AlgebraElement multiply(const FrobeniusAlgebra&, const AlgebraElement&, const AlgebraElement&);

  std::vector<std::string> labels_;
  std::vector<Series> mult_;
  // mult_ as integer numerators over one denominator, for multiply().
  std::vector<Integer> mult_num_;
  Integer mult_den_;
  std::vector<Series> unit_;
  std::vector<Series> counit_;
};

AlgebraElement multiply(const FrobeniusAlgebra& a, const AlgebraElement& x, const AlgebraElement& y);
Series counit(const FrobeniusAlgebra& a, const AlgebraElement& x);
/// Matrix of y -> x y in the algebra's basis (column j is x b_j).
SeriesMatrix multiplication_matrix(const FrobeniusAlgebra& a, const AlgebraElement& x);
/// Multiplicative inverse inside the algebra; throws NotAUnit.
AlgebraElement inverse(const FrobeniusAlgebra& a, const AlgebraElement& x);

/// eta_{ij} = counit(b_i b_j).
SeriesMatrix pairing_matrix(const FrobeniusAlgebra& a);
/// Delta(x) as the coefficient matrix of b_r (x) b_s, using eta^{-1}.
SeriesMatrix comultiply(const FrobeniusAlgebra& a, const SeriesMatrix& eta_inverse, const AlgebraElement& x);
/// The handle element m(Delta(1)); throws NotAUnit if eta is degenerate.
AlgebraElement handle_element(const FrobeniusAlgebra& a);

/// Every violated axiom, one human-readable line each; empty means valid.
std::vector<std::string> check_axioms(const FrobeniusAlgebra& a);

/// The centre of Q[S_d] in the class-sum basis e_alpha, as constant series.
FrobeniusAlgebra class_algebra(int d, std::size_t order = kDefaultOrder);

/// E_R = (dim R / d!) sum_alpha chi_R(alpha) e_alpha, in canonical
/// representation order.
std::vector<AlgebraElement> central_idempotents(int d, std::size_t order = kDefaultOrder);

/// R_{lambda_1} (+) ... (+) R_{lambda_n} in its idempotent basis.
FrobeniusAlgebra semisimple_algebra(const std::vector<Series>& lambdas);

struct LiftResult {
  std::vector<AlgebraElement> idempotents;
  /// residual_valuations[k]: valuation of the idempotency/orthogonality
  /// defect after k refinement steps (k = 0 is the seed set).
  std::vector<std::size_t> residual_valuations;
};

/// Refines mod-t orthogonal idempotents to exact ones with
/// e <- e + (e^2 - e)(1 - 2e)^{-1}, run ceil(log2 N) + 1 times.
LiftResult lift_idempotents(const FrobeniusAlgebra& a, const std::vector<AlgebraElement>& seeds);

/// Residual used by lift_idempotents: minimum valuation of e_i^2 - e_i and
/// of e_i e_j (i != j).
std::size_t idempotent_residual(const FrobeniusAlgebra& a, const std::vector<AlgebraElement>& elements);

/// lambda_i = counit(lifted e_i)^{-1}; throws NotSemisimple.
std::vector<Series> eigenvalues(const FrobeniusAlgebra& a, const std::vector<AlgebraElement>& seeds);
/// The same from an already lifted set.
std::vector<Series> eigenvalues_of_lifted(const FrobeniusAlgebra& a, const LiftResult& lifted);

/// Seeds used when none are supplied: the class-algebra idempotents for a
/// partition-labelled basis, else the basis itself if it is idempotent mod t.
std::vector<AlgebraElement> default_seeds(const FrobeniusAlgebra& a);

/// sum_i lambda_i^{g-1}.
Series closed_value(std::span<const Series> lambdas, int genus);

/// The same algebra in the basis b'_i = sum_j M_{ij} b_j; throws
/// SingularChangeOfBasis when det M is not a unit.
FrobeniusAlgebra conjugate_basis(const FrobeniusAlgebra& a, const SeriesMatrix& change);

/// Coordinates of x in the basis produced by conjugate_basis(a, change).
AlgebraElement to_conjugated_coordinates(const SeriesMatrix& change, const AlgebraElement& x);

}  // namespace gwtqft
