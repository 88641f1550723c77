// Reduced homology ranks of the complex K^H whose simplices are the vertex
// sets spanning a proper subspace.
//
// Only the three chain groups around the requested degree are built. The
// chain complex is augmented by the empty simplex, so the degree -1 group is
// one-dimensional and the empty complex has rank 1 there.

#ifndef FLAGBOUND_HOMOLOGY_HPP
#define FLAGBOUND_HOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flagbound/arrangement.hpp"

namespace flagbound {

// GF(p) for a prime p, or the rationals.
class Field {
 public:
  static Field gf(std::uint32_t p);
  static Field rationals() { return Field(0); }

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

using Simplex = std::vector<std::uint32_t>;  // sorted vertex indices

struct ComplexSlice {
  int degree = 0;
  std::vector<Simplex> lower;   // degree - 1
  std::vector<Simplex> middle;  // degree
  std::vector<Simplex> upper;   // degree + 1
};

// Sparse column: (row, coefficient) sorted by row. Coefficients are the
// integer signs +-1 of the simplicial boundary.
using SparseColumn = std::vector<std::pair<std::uint32_t, int>>;

// Boundary of each simplex in `cells` expressed in the basis `faces`.
// Degree-0 cells map to the single empty simplex.
std::vector<SparseColumn> boundary_matrix(const std::vector<Simplex>& faces, const std::vector<Simplex>& cells);

inline constexpr std::size_t kMaxStoredSimplices = 10'000'000;

ComplexSlice build_slice(const VectorSet& h, int degree, std::size_t max_simplices = kMaxStoredSimplices);

// Rank of a sparse integer matrix over the field.
std::size_t matrix_rank(const std::vector<SparseColumn>& columns, Field field);

std::size_t homology_rank(const VectorSet& h, int degree, Field field = Field::gf(2));

// Members of flat u in coordinates of u's canonical basis.
VectorSet restrict_to_flat(const VectorSet& h, const Flat& u);

// rank of reduced H_{dim u - 2} of K^{H ∩ u}.
std::size_t mobius_via_homology(const VectorSet& h, const Flat& u, Field field = Field::gf(2));

}  // namespace flagbound

#endif  // FLAGBOUND_HOMOLOGY_HPP
