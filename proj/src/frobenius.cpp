#include "gwtqft/frobenius.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gwtqft/error.hpp"
#include "gwtqft/partition.hpp"
#include "gwtqft/symchar.hpp"

namespace gwtqft {

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(std::vector<Series> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw Error(ErrorCode::DomainError, "algebra element needs at least one coordinate");
  for (const auto& c : coords_) require_same_order(coords_.front(), c);
}

AlgebraElement AlgebraElement::zero(std::size_t rank, std::size_t order) {
  return AlgebraElement(std::vector<Series>(rank, Series(order)));
}

AlgebraElement AlgebraElement::basis_vector(std::size_t i, std::size_t rank, std::size_t order) {
  std::vector<Series> c(rank, Series(order));
  c.at(i) = Series::constant(1, order);
  return AlgebraElement(std::move(c));
}

std::size_t AlgebraElement::valuation() const {
  std::size_t v = order();
  for (const auto& c : coords_) v = std::min(v, c.valuation());
  return v;
}

AlgebraElement AlgebraElement::constant_part() const {
  std::vector<Series> c;
  c.reserve(rank());
  for (const auto& s : coords_) c.push_back(Series::constant(s[0], s.order()));
  return AlgebraElement(std::move(c));
}

static void require_same_shape(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.rank() != b.rank())
    throw Error(ErrorCode::DomainError, "algebra elements have different ranks");
  require_same_order(a[0], b[0]);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < rank(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same_shape(*this, rhs);
  for (std::size_t i = 0; i < rank(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

AlgebraElement operator*(const Series& s, const AlgebraElement& x) {
  std::vector<Series> c;
  c.reserve(x.rank());
  for (const auto& v : x.coords_) c.push_back(s * v);
  return AlgebraElement(std::move(c));
}

AlgebraElement operator*(const Rational& s, const AlgebraElement& x) {
  std::vector<Series> c;
  c.reserve(x.rank());
  for (const auto& v : x.coords_) c.push_back(s * v);
  return AlgebraElement(std::move(c));
}

// ---------------------------------------------------------------------------
// SeriesMatrix

SeriesMatrix::SeriesMatrix(std::size_t n, std::size_t order) : n_(n), data_(n * n, Series(order)) {
  if (n == 0) throw Error(ErrorCode::DomainError, "matrix size must be positive");
}

SeriesMatrix SeriesMatrix::identity(std::size_t n, std::size_t order) {
  SeriesMatrix m(n, order);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Series::constant(1, order);
  return m;
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DomainError, "matrix sizes differ");
  SeriesMatrix r(a.size(), a.order());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.size(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

SeriesMatrix invert(const SeriesMatrix& m) {
  const std::size_t n = m.size();
  SeriesMatrix work = m;
  SeriesMatrix inv = SeriesMatrix::identity(n, m.order());
  for (std::size_t col = 0; col < n; ++col) {
    // In a local ring the determinant is a unit iff some remaining entry of
    // each pivot column is.
    std::size_t pivot = col;
    while (pivot < n && !work(pivot, col).is_unit()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::NotAUnit, "matrix determinant is not a unit");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const Series p = invert(work(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) = p * work(col, j);
      inv(col, j) = p * inv(col, j);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Series f = work(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// FrobeniusAlgebra

FrobeniusAlgebra::FrobeniusAlgebra(std::vector<std::string> labels, std::vector<Series> mult,
                                   std::vector<Series> unit, std::vector<Series> counit)
    : labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)), counit_(std::move(counit)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::DomainError, "algebra rank must be positive");
  if (mult_.size() != n * n * n || unit_.size() != n || counit_.size() != n)
    throw Error(ErrorCode::DomainError, "structure tensors do not match rank " + std::to_string(n));
  const Series& ref = unit_.front();
  for (const auto& s : mult_) require_same_order(ref, s);
  for (const auto& s : unit_) require_same_order(ref, s);
  for (const auto& s : counit_) require_same_order(ref, s);
  mult_den_ = common_numerators(mult_, mult_num_);
}

static void require_member(const FrobeniusAlgebra& a, const AlgebraElement& x) {
  if (x.rank() != a.rank())
    throw Error(ErrorCode::DomainError, "element of rank " + std::to_string(x.rank()) + " used in algebra of rank " +
                                            std::to_string(a.rank()));
  if (x.order() != a.order())
    throw Error(ErrorCode::OrderMismatch, "element order differs from algebra order");
}

AlgebraElement multiply(const FrobeniusAlgebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  require_member(a, x);
  require_member(a, y);
  // Everything over common denominators: out_k = sum_ij x_i y_j m_ij^k is
  // accumulated in integers and reduced once per coefficient.
  const std::size_t n = a.rank();
  const std::size_t order = a.order();
  std::vector<Integer> xs, ys;
  const Integer den = common_numerators(x.coords(), xs) * common_numerators(y.coords(), ys) * a.mult_den_;
  auto nonzero = [order](const std::vector<Integer>& v, std::size_t i) {
    for (std::size_t k = 0; k < order; ++k)
      if (sgn(v[i * order + k]) != 0) return true;
    return false;
  };
  std::vector<Integer> w(order), acc(n * order);
  for (std::size_t i = 0; i < n; ++i) {
    if (!nonzero(xs, i)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!nonzero(ys, j)) continue;
      for (std::size_t p = 0; p < order; ++p) {
        w[p] = 0;
        for (std::size_t q = 0; q <= p; ++q)
          mpz_addmul(w[p].get_mpz_t(), xs[i * order + q].get_mpz_t(), ys[j * order + p - q].get_mpz_t());
      }
      for (std::size_t k = 0; k < n; ++k) {
        const Integer* m = &a.mult_num_[((i * n + j) * n + k) * order];
        Integer* out = &acc[k * order];
        for (std::size_t p = 0; p < order; ++p) {
          if (sgn(w[p]) == 0) continue;
          for (std::size_t q = 0; p + q < order; ++q)
            if (sgn(m[q]) != 0) mpz_addmul(out[p + q].get_mpz_t(), w[p].get_mpz_t(), m[q].get_mpz_t());
        }
      }
    }
  }
  std::vector<Series> coords;
  coords.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> c(order);
    for (std::size_t p = 0; p < order; ++p) {
      if (sgn(acc[k * order + p]) == 0) continue;
      c[p].get_num() = acc[k * order + p];
      c[p].get_den() = den;
      c[p].canonicalize();
    }
    coords.emplace_back(std::move(c));
  }
  return AlgebraElement(std::move(coords));
}

Series counit(const FrobeniusAlgebra& a, const AlgebraElement& x) {
  require_member(a, x);
  Series s(a.order());
  for (std::size_t i = 0; i < a.rank(); ++i) s += x[i] * a.counit(i);
  return s;
}

SeriesMatrix multiplication_matrix(const FrobeniusAlgebra& a, const AlgebraElement& x) {
  require_member(a, x);
  const std::size_t n = a.rank();
  SeriesMatrix m(n, a.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) += x[i] * a.mult(i, j, k);
  }
  return m;
}

AlgebraElement inverse(const FrobeniusAlgebra& a, const AlgebraElement& x) {
  const SeriesMatrix inv = invert(multiplication_matrix(a, x));
  const AlgebraElement one = a.unit();
  std::vector<Series> out(a.rank(), Series(a.order()));
  for (std::size_t r = 0; r < a.rank(); ++r)
    for (std::size_t c = 0; c < a.rank(); ++c) out[r] += inv(r, c) * one[c];
  return AlgebraElement(std::move(out));
}

SeriesMatrix pairing_matrix(const FrobeniusAlgebra& a) {
  const std::size_t n = a.rank();
  SeriesMatrix eta(n, a.order());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) eta(i, j) += a.mult(i, j, k) * a.counit(k);
  return eta;
}

SeriesMatrix comultiply(const FrobeniusAlgebra& a, const SeriesMatrix& eta_inverse, const AlgebraElement& x) {
  // Delta(x) = sum_{p,q} eta^{pq} (x b_p) (x) b_q
  const std::size_t n = a.rank();
  SeriesMatrix delta(n, a.order());
  for (std::size_t p = 0; p < n; ++p) {
    const AlgebraElement xb = multiply(a, x, AlgebraElement::basis_vector(p, n, a.order()));
    for (std::size_t r = 0; r < n; ++r) {
      if (xb[r].is_zero()) continue;
      for (std::size_t s = 0; s < n; ++s) delta(r, s) += eta_inverse(p, s) * xb[r];
    }
  }
  return delta;
}

AlgebraElement handle_element(const FrobeniusAlgebra& a) {
  const SeriesMatrix eta_inv = invert(pairing_matrix(a));
  const std::size_t n = a.rank();
  AlgebraElement h = AlgebraElement::zero(n, a.order());
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (eta_inv(p, q).is_zero()) continue;
      std::vector<Series> prod(n, Series(a.order()));
      for (std::size_t k = 0; k < n; ++k) prod[k] = eta_inv(p, q) * a.mult(p, q, k);
      h += AlgebraElement(std::move(prod));
    }
  return h;
}

std::vector<std::string> check_axioms(const FrobeniusAlgebra& a) {
  const std::size_t n = a.rank();
  const std::size_t order = a.order();
  const auto& L = a.labels();
  std::vector<std::string> report;
  auto basis = [&](std::size_t i) { return AlgebraElement::basis_vector(i, n, order); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (a.mult(i, j, k) != a.mult(j, i, k)) {
          report.push_back("commutativity fails for (" + L[i] + ", " + L[j] + ")");
          k = n;
        }

  std::vector<AlgebraElement> products;  // b_i b_j at i * n + j
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Series> c(n, Series(order));
      for (std::size_t k = 0; k < n; ++k) c[k] = a.mult(i, j, k);
      products.emplace_back(std::move(c));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const AlgebraElement left = multiply(a, products[i * n + j], basis(k));
        const AlgebraElement right = multiply(a, basis(i), products[j * n + k]);
        if (left != right)
          report.push_back("associativity fails for (" + L[i] + ", " + L[j] + ", " + L[k] + ")");
      }

  const AlgebraElement one = a.unit();
  for (std::size_t i = 0; i < n; ++i)
    if (multiply(a, one, basis(i)) != basis(i)) report.push_back("unit axiom fails on " + L[i]);

  SeriesMatrix eta_inv(n, order);
  try {
    eta_inv = invert(pairing_matrix(a));
  } catch (const Error&) {
    report.push_back("pairing is degenerate (determinant is not a unit)");
    return report;
  }

  std::vector<SeriesMatrix> deltas;
  deltas.reserve(n);
  for (std::size_t i = 0; i < n; ++i) deltas.push_back(comultiply(a, eta_inv, basis(i)));

  for (std::size_t i = 0; i < n; ++i) {
    // (counit (x) Id) Delta(b_i) = b_i
    std::vector<Series> c(n, Series(order));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) c[s] += a.counit(r) * deltas[i](r, s);
    if (AlgebraElement(std::move(c)) != basis(i)) report.push_back("counit axiom fails on " + L[i]);
  }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const SeriesMatrix target = comultiply(a, eta_inv, products[i * n + j]);
      // (m (x) Id)(b_i (x) Delta(b_j)) and (Id (x) m)(Delta(b_i) (x) b_j)
      SeriesMatrix left(n, order), right(n, order);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const Series& dl = deltas[j](r, s);
          if (!dl.is_zero())
            for (std::size_t u = 0; u < n; ++u) left(u, s) += dl * a.mult(i, r, u);
          const Series& dr = deltas[i](r, s);
          if (!dr.is_zero())
            for (std::size_t u = 0; u < n; ++u) right(r, u) += dr * a.mult(s, j, u);
        }
      if (left != target || right != target)
        report.push_back("Frobenius relation fails for (" + L[i] + ", " + L[j] + ")");
    }
  return report;
}

// ---------------------------------------------------------------------------
// The class algebra of S_d

FrobeniusAlgebra class_algebra(int d, std::size_t order) {
  const auto& classes = enumerate_partitions(d);
  const ClassConstants constants = class_product_constants(d);
  const std::size_t n = classes.size();
  std::vector<std::string> labels;
  for (const auto& p : classes) labels.push_back(p.label());
  std::vector<Series> mult;
  mult.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mult.push_back(Series::constant(constants(i, j, k), order));
  std::vector<Series> unit(n, Series(order)), co(n, Series(order));
  // (1^d) is last in canonical order; mu(sum a_g g) = a_Id / d!.
  unit[n - 1] = Series::constant(1, order);
  co[n - 1] = Series::constant(Rational(1) / Rational(factorial(d)), order);
  return FrobeniusAlgebra(std::move(labels), std::move(mult), std::move(unit), std::move(co));
}

std::vector<AlgebraElement> central_idempotents(int d, std::size_t order) {
  const CharacterTable& table = character_table(d);
  const std::size_t n = table.order.size();
  const Integer group_order = factorial(d);
  std::vector<AlgebraElement> out;
  out.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Rational scale = Rational(hook_dimension(table.order[r])) / Rational(group_order);
    std::vector<Series> c;
    c.reserve(n);
    for (std::size_t cls = 0; cls < n; ++cls) c.push_back(Series::constant(scale * table(r, cls), order));
    out.emplace_back(std::move(c));
  }
  return out;
}

FrobeniusAlgebra semisimple_algebra(const std::vector<Series>& lambdas) {
  if (lambdas.empty()) throw Error(ErrorCode::DomainError, "semisimple algebra needs at least one eigenvalue");
  const std::size_t n = lambdas.size();
  const std::size_t order = lambdas.front().order();
  std::vector<std::string> labels;
  std::vector<Series> mult(n * n * n, Series(order));
  std::vector<Series> unit(n, Series::constant(1, order));
  std::vector<Series> co;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("f" + std::to_string(i + 1));
    mult[(i * n + i) * n + i] = Series::constant(1, order);
    co.push_back(invert(lambdas[i]));
  }
  return FrobeniusAlgebra(std::move(labels), std::move(mult), std::move(unit), std::move(co));
}

// ---------------------------------------------------------------------------
// Idempotent lifting

std::size_t idempotent_residual(const FrobeniusAlgebra& a, const std::vector<AlgebraElement>& elements) {
  std::size_t v = a.order();
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i; j < elements.size(); ++j) {
      AlgebraElement prod = multiply(a, elements[i], elements[j]);
      if (i == j) prod -= elements[i];
      v = std::min(v, prod.valuation());
    }
  return v;
}

static void check_seeds(const FrobeniusAlgebra& a, const std::vector<AlgebraElement>& seeds) {
  if (seeds.size() != a.rank())
    throw Error(ErrorCode::SeedError, "expected " + std::to_string(a.rank()) + " seeds, got " +
                                          std::to_string(seeds.size()));
  for (const auto& s : seeds) {
    require_member(a, s);
    if (s.valuation() > 0) throw Error(ErrorCode::SeedError, "a seed vanishes mod t");
  }
  if (idempotent_residual(a, seeds) == 0)
    throw Error(ErrorCode::SeedError, "seeds are not orthogonal idempotents mod t");
}

namespace {

// (1 - 2e)^{-1} without a matrix inversion: (1 - 2e)^2 = 1 + 4 delta with
// delta = e^2 - e of positive valuation, so the inverse is
// (1 - 2e) sum_k (-4 delta)^k, a finite sum mod t^N.
AlgebraElement idempotent_step_inverse(const FrobeniusAlgebra& a, const AlgebraElement& one,
                                       const AlgebraElement& e, const AlgebraElement& delta) {
  const AlgebraElement u = one - Rational(2) * e;
  const std::size_t v = delta.valuation();
  if (v == 0) return inverse(a, u);
  AlgebraElement sum = one;
  AlgebraElement power = one;
  const AlgebraElement step = Rational(-4) * delta;
  for (std::size_t reached = v; reached < a.order() + v; reached += v) {
    power = multiply(a, power, step);
    if (power.valuation() >= a.order()) break;
    sum += power;
  }
  return multiply(a, u, sum);
}

}  // namespace

LiftResult lift_idempotents(const FrobeniusAlgebra& a, const std::vector<AlgebraElement>& seeds) {
  check_seeds(a, seeds);
  const std::size_t steps = static_cast<std::size_t>(std::bit_width(a.order() - 1)) + 1;  // ceil(log2 N) + 1
  LiftResult result{seeds, {idempotent_residual(a, seeds)}};
  const AlgebraElement one = a.unit();
  for (std::size_t step = 0; step < steps; ++step) {
    for (auto& e : result.idempotents) {
      const AlgebraElement defect = multiply(a, e, e) - e;
      e += multiply(a, defect, idempotent_step_inverse(a, one, e, defect));
    }
    result.residual_valuations.push_back(idempotent_residual(a, result.idempotents));
  }
  return result;
}

std::vector<Series> eigenvalues(const FrobeniusAlgebra& a, const std::vector<AlgebraElement>& seeds) {
  return eigenvalues_of_lifted(a, lift_idempotents(a, seeds));
}

std::vector<Series> eigenvalues_of_lifted(const FrobeniusAlgebra& a, const LiftResult& lifted) {
  std::vector<Series> out;
  for (const auto& e : lifted.idempotents) {
    const Series mu = counit(a, e);
    if (!mu.is_unit()) throw Error(ErrorCode::NotSemisimple, "counit of a lifted idempotent is not a unit");
    out.push_back(invert(mu));
  }
  return out;
}

std::vector<AlgebraElement> default_seeds(const FrobeniusAlgebra& a) {
  for (int d = 1; d <= 12; ++d) {
    const auto& parts = enumerate_partitions(d);
    if (parts.size() > a.rank()) break;
    if (parts.size() != a.rank()) continue;
    bool labelled = true;
    for (std::size_t i = 0; i < parts.size(); ++i) labelled = labelled && a.labels()[i] == parts[i].label();
    if (labelled) return central_idempotents(d, a.order());
  }
  std::vector<AlgebraElement> basis;
  for (std::size_t i = 0; i < a.rank(); ++i) basis.push_back(AlgebraElement::basis_vector(i, a.rank(), a.order()));
  if (idempotent_residual(a, basis) > 0) return basis;
  throw Error(ErrorCode::SeedError, "no default seeds: basis is neither partition-labelled nor idempotent mod t");
}

Series closed_value(std::span<const Series> lambdas, int genus) {
  if (lambdas.empty()) throw Error(ErrorCode::DomainError, "closed_value needs at least one eigenvalue");
  if (genus < 0) throw Error(ErrorCode::DomainError, "genus must be nonnegative");
  Series total(lambdas.front().order());
  for (const auto& l : lambdas) total += int_pow(l, genus - 1);
  return total;
}

static AlgebraElement coordinates_in(const SeriesMatrix& inv, const AlgebraElement& x);

FrobeniusAlgebra conjugate_basis(const FrobeniusAlgebra& a, const SeriesMatrix& change) {
  const std::size_t n = a.rank();
  if (change.size() != n) throw Error(ErrorCode::DomainError, "change of basis has the wrong size");
  if (change.order() != a.order()) throw Error(ErrorCode::OrderMismatch, "change of basis order differs");
  SeriesMatrix inv(n, a.order());
  try {
    inv = invert(change);
  } catch (const Error&) {
    throw Error(ErrorCode::SingularChangeOfBasis, "determinant of the change of basis is not a unit");
  }
  std::vector<AlgebraElement> new_basis;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Series> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(change(i, j));
    new_basis.emplace_back(std::move(row));
  }
  std::vector<Series> mult(n * n * n, Series(a.order()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const AlgebraElement prod = coordinates_in(inv, multiply(a, new_basis[i], new_basis[j]));
      for (std::size_t k = 0; k < n; ++k) mult[(i * n + j) * n + k] = prod[k];
    }
  const AlgebraElement unit = coordinates_in(inv, a.unit());
  std::vector<Series> unit_coords(unit.coords().begin(), unit.coords().end());
  std::vector<Series> co;
  for (std::size_t i = 0; i < n; ++i) co.push_back(counit(a, new_basis[i]));
  return FrobeniusAlgebra(a.labels(), std::move(mult), std::move(unit_coords), std::move(co));
}

static AlgebraElement coordinates_in(const SeriesMatrix& inv, const AlgebraElement& x) {
  const std::size_t n = inv.size();
  std::vector<Series> out(n, Series(inv.order()));
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t l = 0; l < n; ++l) out[l] += x[j] * inv(j, l);
  }
  return AlgebraElement(std::move(out));
}

AlgebraElement to_conjugated_coordinates(const SeriesMatrix& change, const AlgebraElement& x) {
  return coordinates_in(invert(change), x);
}

}  // namespace gwtqft
