// Exact linear algebra over the rationals.
//
// Everything here is arbitrary precision (GMP). SubspaceBasis keeps its rows
// in reduced row-echelon form with unit pivots, which is unique for a given
// subspace, so equality and hashing of bases is equality of subspaces.

#ifndef FLAGBOUND_EXACTLIN_HPP
#define FLAGBOUND_EXACTLIN_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace flagbound {

using Integer = mpz_class;
using Rational = mpq_class;

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got);
};

class IntegerVector {
 public:
  IntegerVector() = default;
  explicit IntegerVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  IntegerVector(std::initializer_list<long> coords);

  std::size_t size() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }
  bool is_zero() const;

  friend bool operator==(const IntegerVector&, const IntegerVector&) = default;

 private:
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const IntegerVector& v);

class SubspaceBasis {
 public:
  // The zero subspace of Q^ambient_dim.
  explicit SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  // Column of the leading 1 in each row, strictly increasing.
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_full() const { return rows_.size() == ambient_dim_; }

  bool contains(const IntegerVector& v) const;

  // Canonical basis of span(this, v). Returns *this when v is already inside.
  SubspaceBasis joined(const IntegerVector& v) const;

  // Coefficients c with v = sum_k c_k * rows()[k]. For a vector inside the
  // subspace these are just the entries of v at the pivot columns.
  std::vector<Integer> coordinates(const IntegerVector& v) const;

  std::size_t hash() const;

  friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

 private:
  // Residual of v after eliminating it against the pivots; zero iff v is inside.
  std::vector<Rational> residual(const IntegerVector& v) const;

  std::size_t ambient_dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

// An empty list spans the zero subspace of Q^0; use the two-argument form to
// fix the ambient dimension.
SubspaceBasis span(std::span<const IntegerVector> vectors);
SubspaceBasis span(std::span<const IntegerVector> vectors, std::size_t ambient_dim);
bool contains(const SubspaceBasis& s, const IntegerVector& v);
std::size_t rank(std::span<const IntegerVector> vectors);

// Fraction-free integer echelon form used to test independence while growing
// a list one vector at a time. Rows are kept primitive (content 1).
class EliminationState {
 public:
  explicit EliminationState(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }

  // Absorbs v; second is true iff v was independent of everything absorbed.
  std::pair<EliminationState, bool> extended(const IntegerVector& v) const;

  // In-place form of extended(), for hot backtracking loops.
  bool absorb(const IntegerVector& v);

 private:
  std::size_t ambient_dim_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace flagbound

template <>
struct std::hash<flagbound::SubspaceBasis> {
  std::size_t operator()(const flagbound::SubspaceBasis& s) const noexcept { return s.hash(); }
};

#endif  // FLAGBOUND_EXACTLIN_HPP
