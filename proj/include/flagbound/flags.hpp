// Ordered independent tuples, their combinatorial flags, and the counts built
// from them: the weighted flag sum, the order-minimal tuple count, the
// order-dependent basis, and the permutation counts behind the flag sum.
//
// Indices are 0-based throughout. A tuple (i_1, ..., i_n) determines the
// nested spans L_l = span(w_{i_{n-l+1}}, ..., w_{i_n}), l = 1..n, and its flag
// is q_l = |L_l ∩ H|.

#ifndef FLAGBOUND_FLAGS_HPP
#define FLAGBOUND_FLAGS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <vector>

#include "flagbound/arrangement.hpp"
#include "flagbound/exactlin.hpp"

namespace flagbound {

struct IndexTuple {
  std::vector<std::size_t> indices;  // i_1, ..., i_n

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;
};

struct FullFlag {
  std::vector<std::size_t> q;  // q_n, q_{n-1}, ..., q_1
  Integer product;             // q_n * ... * q_1
  IndexSet top_members;        // L_n ∩ H
};

// Real weights on the vectors summing to exactly 1. Entries may be negative.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> weights);
  static WeightVector uniform(std::size_t count);

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<Rational>& weights() const { return weights_; }
  bool has_negative() const;

 private:
  std::vector<Rational> weights_;
};

// First count-1 entries a/b with 1 <= b <= 100 and |a/b| <= 2; the last is
// 1 minus their sum, redrawn until it also lies in [-2, 2].
WeightVector random_weight_vector(std::size_t count, std::mt19937_64& rng);

// One rational ("a/b" or integer) per line; '#' comments allowed.
WeightVector read_weight_vector(std::istream& in);

// A total order on the vectors: index_at(0) is the first vector in the order.
class OrderPermutation {
 public:
  explicit OrderPermutation(std::vector<std::size_t> order);
  static OrderPermutation identity(std::size_t count);
  static OrderPermutation random(std::size_t count, std::mt19937_64& rng);

  std::size_t size() const { return order_.size(); }
  std::size_t index_at(std::size_t position) const { return order_[position]; }
  std::size_t position_of(std::size_t index) const { return inverse_[index]; }
  const std::vector<std::size_t>& order() const { return order_; }

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> inverse_;
};

// Every ordered independent n-tuple (n = ambient_dim - 1) exactly once, with
// its flag. Depth-first from i_n outward; i runs in increasing order at each
// level.
void enumerate_tuples(const IntersectionLattice& lattice,
                      const std::function<void(const IndexTuple&, const FullFlag&)>& visit);

// Sum over independent n-tuples of (1 - sum_{j in L_n ∩ H} p_j) / prod q_l.
// Tuples are grouped by (top flat, product) before any rational arithmetic.
Rational theorem1_sum(const IntersectionLattice& lattice, const WeightVector& p, unsigned threads = 0);
Rational theorem1_sum(const VectorSet& h, const WeightVector& p, unsigned threads = 0);

// Same sum, one rational term per enumerated tuple.
Rational theorem1_sum_reference(const IntersectionLattice& lattice, const WeightVector& p);

// 2 * theorem1_sum over E_n.
Rational corollary_bound(int n, const WeightVector& p, unsigned threads = 0);

// Tuples whose every suffix span L_l has the tuple entry i_{n-l+1} as its
// first member in the order, and whose top span avoids the first vector.
Integer lambda_count(const IntersectionLattice& lattice, const OrderPermutation& order);
Integer lambda_count(const VectorSet& h, const OrderPermutation& order);

// Tuples (sigma(j_1), ..., sigma(j_n)) with j_1 < ... < j_n satisfying the
// same two conditions, found by direct span computations.
std::vector<IndexTuple> basis_bsigma(const VectorSet& h, const OrderPermutation& sigma);

// Exhaustive count of orders starting with vector i under which tuple w is
// counted by lambda_count. Requires T <= 8 and w_i outside span(w).
Integer count_admissible_orders(const VectorSet& h, const IndexTuple& w, std::size_t i);

struct MonteCarloResult {
  Rational mean;
  double standard_error = 0.0;  // approximate; 0 for a single sample
  Integer min_sample;
  Integer max_sample;
  std::size_t samples = 0;
};

// Samples orders with the first vector drawn from p and the rest uniformly
// shuffled, and evaluates the order-minimal tuple count under each.
MonteCarloResult monte_carlo_expectation(const IntersectionLattice& lattice, const WeightVector& p,
                                         std::size_t samples, std::uint64_t seed);

}  // namespace flagbound

#endif  // FLAGBOUND_FLAGS_HPP
