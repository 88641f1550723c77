// Central hyperplane arrangements given by their normal vectors: the vector
// set E of +-1 points, the intersection lattice of flats with its Moebius
// function, and two independent chamber counts (Zaslavsky and
// deletion-restriction).

#ifndef FLAGBOUND_ARRANGEMENT_HPP
#define FLAGBOUND_ARRANGEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagbound/exactlin.hpp"

namespace flagbound {

// Thrown when an input exceeds one of the documented size guards.
class GuardViolation : public std::runtime_error {
 public:
  GuardViolation(std::string guard, long long limit, long long got);
  const std::string& guard() const { return guard_; }
  long long limit() const { return limit_; }

 private:
  std::string guard_;
  long long limit_;
};

// Set of indices 0..size-1 packed into 64-bit words.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const;
  bool is_subset_of(const IndexSet& other) const;
  std::vector<std::size_t> elements() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

class VectorSet {
 public:
  // Validates: common length d >= 1, no zero vector, no two parallel vectors,
  // and the vectors span Q^d (which forces T >= d).
  explicit VectorSet(std::vector<IntegerVector> vectors);

  std::size_t size() const { return vectors_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<IntegerVector>& vectors() const { return vectors_; }
  const IntegerVector& operator[](std::size_t i) const { return vectors_[i]; }

 private:
  std::vector<IntegerVector> vectors_;
  std::size_t ambient_dim_ = 0;
};

// The 2^n vectors (1, b_1, ..., b_n), b_j = +-1. Vector k has b_{j+1} = -1
// exactly when bit j of k, counted from the most significant of n bits, is 1.
VectorSet generate_e(int n);

// Vector-set text format: "T d" header, then T lines of d integers; lines
// starting with '#' are comments.
VectorSet read_vector_set(std::istream& in);
void write_vector_set(std::ostream& out, const VectorSet& h);

struct Flat {
  SubspaceBasis subspace;
  IndexSet members;
  std::size_t member_count = 0;
};

class IntersectionLattice {
 public:
  using FlatId = std::uint32_t;

  std::size_t size() const { return flats_.size(); }
  const Flat& flat(FlatId id) const { return flats_[id]; }
  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t vector_count() const { return vector_count_; }
  std::size_t ambient_dim() const { return ambient_dim_; }

  FlatId bottom() const { return 0; }
  FlatId top() const { return static_cast<FlatId>(flats_.size() - 1); }
  std::size_t dim(FlatId id) const { return flats_[id].subspace.dim(); }
  const Integer& mobius(FlatId id) const { return mobius_[id]; }

  // Flat spanned by `id` together with vector i.
  FlatId join(FlatId id, std::size_t i) const { return join_[static_cast<std::size_t>(id) * vector_count_ + i]; }
  FlatId atom(std::size_t i) const { return join(bottom(), i); }
  std::optional<FlatId> find(const SubspaceBasis& s) const;
  bool leq(FlatId a, FlatId b) const { return flats_[a].members.is_subset_of(flats_[b].members); }

  // Flat ids grouped by dimension; flats are stored in nondecreasing dimension.
  std::size_t dim_begin(std::size_t k) const { return dim_offsets_[k]; }
  std::size_t dim_end(std::size_t k) const { return dim_offsets_[k + 1]; }

 private:
  friend IntersectionLattice build_lattice(const VectorSet& h, unsigned threads);

  std::size_t vector_count_ = 0;
  std::size_t ambient_dim_ = 0;
  std::vector<Flat> flats_;
  std::vector<FlatId> join_;
  std::vector<Integer> mobius_;
  std::vector<std::size_t> dim_offsets_;
  std::unordered_map<SubspaceBasis, FlatId> index_;
};

// All flats by closure from the atoms, plus mu(0, t) for every flat t.
IntersectionLattice build_lattice(const VectorSet& h, unsigned threads = 0);

// Sum of |mu(0, t)| over all flats.
Integer chamber_count(const IntersectionLattice& lattice);
Integer chamber_count(const VectorSet& h);

// Region count by deletion-restriction; shares no code with the lattice.
// The list form accepts any normals: zero vectors are dropped and parallel
// ones merged.
Integer chamber_count_dr(const VectorSet& h);
Integer chamber_count_dr(std::span<const IntegerVector> normals, std::size_t ambient_dim);

// 2 * sum_{i=0}^{n} C(2^n - 1, i).
Integer schlafli_bound(int n);

}  // namespace flagbound

#endif  // FLAGBOUND_ARRANGEMENT_HPP
