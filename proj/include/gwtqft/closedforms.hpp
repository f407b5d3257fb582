#pragma once

#include <cstddef>
#include <utility>

#include "gwtqft/frobenius.hpp"
#include "gwtqft/partition.hpp"
#include "gwtqft/series.hpp"

namespace gwtqft {

/// sin(t/2) / (t/2).
Series sine_quotient(std::size_t order = kDefaultOrder);

/// Degree-d invariant of the disc with boundary condition alpha:
/// (-1)^{d-l} t^d / z(alpha) * prod_i (2 sin(alpha_i t / 2))^{-1}.
Series cap(int d, const Partition& alpha, std::size_t order = kDefaultOrder);

/// Genus-0 closed invariant:
/// sum_alpha t^{2d} / z(alpha) * prod_i (2 sin(alpha_i t / 2))^{-2}.
Series fp_genus0(int d, std::size_t order = kDefaultOrder);

/// Degree-1 relative invariant (sin(t/2)/(t/2))^{2g-2+r}.
Series d1_relative(int genus, int boundaries, std::size_t order = kDefaultOrder);

/// The two degree-2 eigenvalues (lambda_+, lambda_-) =
/// (sin(t/2)/(t/2))^4 (4 +- 4 sin(t/2)).
std::pair<Series, Series> d2_eigenvalues(std::size_t order = kDefaultOrder);

/// lambda_+^{g-1} + lambda_-^{g-1}.
Series d2_closed(int genus, std::size_t order = kDefaultOrder);

/// The rank-one degree-1 algebra in the basis e_(1) = s f, where f is the
/// idempotent and s = sin(t/2)/(t/2): e e = s e, 1 = s^{-1} e,
/// counit(e) = s^{-1}.
FrobeniusAlgebra d1_algebra(std::size_t order = kDefaultOrder);

}  // namespace gwtqft
