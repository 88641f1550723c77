#include "flagbound/flags.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "flagbound/parallel.hpp"

namespace flagbound {

using FlatId = IntersectionLattice::FlatId;

namespace {

std::size_t tuple_length(const IntersectionLattice& lattice) { return lattice.ambient_dim() - 1; }

std::uint64_t checked_product(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("flag product exceeds 64 bits");
  return r;
}

void check_weights(const IntersectionLattice& lattice, const WeightVector& p) {
  if (p.size() != lattice.vector_count()) {
    throw std::invalid_argument("weight vector has " + std::to_string(p.size()) + " entries, expected " +
                                std::to_string(lattice.vector_count()));
  }
}

Rational weight_of(const IndexSet& members, const WeightVector& p) {
  Rational sum = 0;
  for (std::size_t j : members.elements()) sum += p[j];
  return sum;
}

struct GroupKey {
  FlatId top;
  std::uint64_t product;
  friend bool operator==(const GroupKey&, const GroupKey&) = default;
  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

struct GroupKeyHash {
  std::size_t operator()(const GroupKey& k) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{k.top} << 40) ^ k.product);
  }
};

using GroupCounts = std::unordered_map<GroupKey, std::uint64_t, GroupKeyHash>;

void group_walk(const IntersectionLattice& lat, FlatId flat, std::size_t depth, std::size_t n,
                std::uint64_t product, GroupCounts& counts) {
  const std::size_t t_count = lat.vector_count();
  for (std::size_t i = 0; i < t_count; ++i) {
    const FlatId next = lat.join(flat, i);
    if (next == flat) continue;
    const std::uint64_t p = checked_product(product, lat.flat(next).member_count);
    if (depth + 1 == n) {
      ++counts[GroupKey{next, p}];
    } else {
      group_walk(lat, next, depth + 1, n, p, counts);
    }
  }
}

// Flags of length n grouped by (L_n, product), over all tuples.
std::map<GroupKey, std::uint64_t> grouped_flags(const IntersectionLattice& lat, unsigned threads) {
  const std::size_t n = tuple_length(lat);
  std::map<GroupKey, std::uint64_t> merged;
  if (n == 0) {
    merged[GroupKey{lat.bottom(), 1}] = 1;
    return merged;
  }
  const unsigned workers = resolve_threads(threads);
  std::vector<GroupCounts> partial(workers);
  parallel_chunks(lat.vector_count(), workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const FlatId line = lat.atom(i);
      const std::uint64_t q1 = lat.flat(line).member_count;
      if (n == 1) {
        ++partial[w][GroupKey{line, q1}];
      } else {
        group_walk(lat, line, 1, n, q1, partial[w]);
      }
    }
  });
  for (const auto& part : partial) {
    for (const auto& [key, count] : part) merged[key] += count;
  }
  return merged;
}

class LambdaWalker {
 public:
  LambdaWalker(const IntersectionLattice& lat, const OrderPermutation& order)
      : lat_(lat), order_(order), n_(tuple_length(lat)), first_(order.index_at(0)) {
    // First member of each flat in the order.
    min_position_.resize(lat.size());
    for (std::size_t id = 0; id < lat.size(); ++id) {
      std::size_t best = lat.vector_count();
      for (std::size_t j : lat.flat(static_cast<FlatId>(id)).members.elements()) {
        best = std::min(best, order.position_of(j));
      }
      min_position_[id] = best;
    }
  }

  Integer count() {
    if (n_ == 0) return 1;
    walk(lat_.bottom(), 0);
    return Integer(static_cast<unsigned long>(total_));
  }

 private:
  void walk(FlatId flat, std::size_t depth) {
    for (std::size_t i = 0; i < lat_.vector_count(); ++i) {
      const FlatId next = lat_.join(flat, i);
      if (next == flat) continue;
      if (min_position_[next] != order_.position_of(i)) continue;
      if (depth + 1 == n_) {
        if (!lat_.flat(next).members.contains(first_)) ++total_;
      } else {
        walk(next, depth + 1);
      }
    }
  }

  const IntersectionLattice& lat_;
  const OrderPermutation& order_;
  std::size_t n_;
  std::size_t first_;
  std::vector<std::size_t> min_position_;
  std::uint64_t total_ = 0;
};

}  // namespace

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight vector is empty");
  Rational sum = 0;
  for (const auto& w : weights_) sum += w;
  if (sum != 1) throw std::invalid_argument("weights sum to " + sum.get_str() + ", expected exactly 1");
}

WeightVector WeightVector::uniform(std::size_t count) {
  if (count == 0) throw std::invalid_argument("weight vector is empty");
  Rational w(1, static_cast<unsigned long>(count));
  w.canonicalize();
  return WeightVector(std::vector<Rational>(count, w));
}

bool WeightVector::has_negative() const {
  return std::any_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w < 0; });
}

WeightVector random_weight_vector(std::size_t count, std::mt19937_64& rng) {
  if (count == 0) throw std::invalid_argument("weight vector is empty");
  std::uniform_int_distribution<long> den_dist(1, 100);
  for (;;) {
    std::vector<Rational> w;
    w.reserve(count);
    Rational sum = 0;
    for (std::size_t k = 0; k + 1 < count; ++k) {
      const long den = den_dist(rng);
      std::uniform_int_distribution<long> num_dist(-2 * den, 2 * den);
      Rational x(num_dist(rng), den);
      x.canonicalize();
      sum += x;
      w.push_back(std::move(x));
    }
    Rational last = 1 - sum;
    if (last < -2 || last > 2) continue;
    w.push_back(std::move(last));
    return WeightVector(std::move(w));
  }
}

WeightVector read_weight_vector(std::istream& in) {
  std::vector<Rational> w;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    Rational x;
    if (token.find_first_of(" \t") != std::string::npos || x.set_str(token, 10) != 0 || x.get_den() == 0) {
      throw std::invalid_argument("weight file line " + std::to_string(line_no) + ": bad rational '" + token + "'");
    }
    x.canonicalize();
    w.push_back(std::move(x));
  }
  return WeightVector(std::move(w));
}

OrderPermutation::OrderPermutation(std::vector<std::size_t> order) : order_(std::move(order)) {
  inverse_.assign(order_.size(), order_.size());
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    const std::size_t idx = order_[pos];
    if (idx >= order_.size() || inverse_[idx] != order_.size()) {
      throw std::invalid_argument("order is not a permutation");
    }
    inverse_[idx] = pos;
  }
}

OrderPermutation OrderPermutation::identity(std::size_t count) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return OrderPermutation(std::move(order));
}

OrderPermutation OrderPermutation::random(std::size_t count, std::mt19937_64& rng) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  return OrderPermutation(std::move(order));
}

void enumerate_tuples(const IntersectionLattice& lattice,
                      const std::function<void(const IndexTuple&, const FullFlag&)>& visit) {
  const std::size_t n = tuple_length(lattice);
  IndexTuple tuple{std::vector<std::size_t>(n)};
  std::vector<FlatId> spans(n + 1, lattice.bottom());  // spans[l] = L_l

  const std::function<void(std::size_t)> walk = [&](std::size_t l) {
    if (l == n) {
      FullFlag flag;
      flag.product = 1;
      for (std::size_t k = n; k >= 1; --k) {
        const std::size_t q = lattice.flat(spans[k]).member_count;
        flag.q.push_back(q);
        flag.product *= static_cast<unsigned long>(q);
      }
      flag.top_members = lattice.flat(spans[n]).members;
      visit(tuple, flag);
      return;
    }
    for (std::size_t i = 0; i < lattice.vector_count(); ++i) {
      const FlatId next = lattice.join(spans[l], i);
      if (next == spans[l]) continue;
      spans[l + 1] = next;
      tuple.indices[n - 1 - l] = i;
      walk(l + 1);
    }
  };
  walk(0);
}

Rational theorem1_sum(const IntersectionLattice& lattice, const WeightVector& p, unsigned threads) {
  check_weights(lattice, p);
  const auto groups = grouped_flags(lattice, threads);
  std::unordered_map<FlatId, Rational> outside;
  Rational total = 0;
  for (const auto& [key, count] : groups) {
    auto it = outside.find(key.top);
    if (it == outside.end()) it = outside.emplace(key.top, 1 - weight_of(lattice.flat(key.top).members, p)).first;
    Rational term(Integer(static_cast<unsigned long>(count)), Integer(static_cast<unsigned long>(key.product)));
    term.canonicalize();
    total += term * it->second;
  }
  return total;
}

Rational theorem1_sum(const VectorSet& h, const WeightVector& p, unsigned threads) {
  return theorem1_sum(build_lattice(h, threads), p, threads);
}

Rational theorem1_sum_reference(const IntersectionLattice& lattice, const WeightVector& p) {
  check_weights(lattice, p);
  Rational total = 0;
  enumerate_tuples(lattice, [&](const IndexTuple&, const FullFlag& flag) {
    Rational numerator = 1 - weight_of(flag.top_members, p);
    total += numerator / Rational(flag.product);
  });
  return total;
}

Rational corollary_bound(int n, const WeightVector& p, unsigned threads) {
  return 2 * theorem1_sum(generate_e(n), p, threads);
}

Integer lambda_count(const IntersectionLattice& lattice, const OrderPermutation& order) {
  if (order.size() != lattice.vector_count()) throw DimensionMismatch(lattice.vector_count(), order.size());
  return LambdaWalker(lattice, order).count();
}

Integer lambda_count(const VectorSet& h, const OrderPermutation& order) {
  return lambda_count(build_lattice(h), order);
}

std::vector<IndexTuple> basis_bsigma(const VectorSet& h, const OrderPermutation& sigma) {
  if (sigma.size() != h.size()) throw DimensionMismatch(h.size(), sigma.size());
  const std::size_t t_count = h.size();
  const std::size_t n = h.ambient_dim() - 1;
  const std::size_t first = sigma.index_at(0);
  std::vector<IndexTuple> out;
  std::vector<std::size_t> positions(n);

  // Choose positions j_n > j_{n-1} > ... > j_1. After choosing j at level l
  // the span L_l must have no member at a position before j.
  const std::function<void(std::size_t, const SubspaceBasis&, std::size_t)> choose =
      [&](std::size_t l, const SubspaceBasis& span_so_far, std::size_t bound) {
        if (l == n) {
          if (span_so_far.contains(h[first])) return;
          IndexTuple tuple;
          for (std::size_t k = 0; k < n; ++k) tuple.indices.push_back(sigma.index_at(positions[k]));
          out.push_back(std::move(tuple));
          return;
        }
        for (std::size_t j = 0; j < bound; ++j) {
          const std::size_t idx = sigma.index_at(j);
          if (span_so_far.contains(h[idx])) continue;
          const SubspaceBasis next = span_so_far.joined(h[idx]);
          bool minimal = true;
          for (std::size_t pos = 0; pos < j && minimal; ++pos) {
            if (next.contains(h[sigma.index_at(pos)])) minimal = false;
          }
          if (!minimal) continue;
          positions[n - 1 - l] = j;
          choose(l + 1, next, j);
        }
      };
  choose(0, SubspaceBasis(h.ambient_dim()), t_count);
  std::sort(out.begin(), out.end());
  return out;
}

Integer count_admissible_orders(const VectorSet& h, const IndexTuple& w, std::size_t i) {
  const std::size_t t_count = h.size();
  if (t_count > 8) throw GuardViolation("count_admissible_orders.T", 8, static_cast<long long>(t_count));
  const std::size_t n = w.indices.size();
  if (n + 1 != h.ambient_dim()) throw DimensionMismatch(h.ambient_dim() - 1, n);
  if (i >= t_count) throw std::invalid_argument("index out of range");
  for (std::size_t idx : w.indices) {
    if (idx >= t_count) throw std::invalid_argument("tuple index out of range");
  }

  // members[l] = indices of H inside L_l, l = 1..n.
  std::vector<std::vector<std::size_t>> members(n + 1);
  SubspaceBasis span_so_far(h.ambient_dim());
  for (std::size_t l = 1; l <= n; ++l) {
    const std::size_t before = span_so_far.dim();
    span_so_far = span_so_far.joined(h[w.indices[n - l]]);
    if (span_so_far.dim() != before + 1) throw std::invalid_argument("tuple is not linearly independent");
    for (std::size_t j = 0; j < t_count; ++j) {
      if (span_so_far.contains(h[j])) members[l].push_back(j);
    }
  }
  if (span_so_far.contains(h[i])) throw std::invalid_argument("first vector lies in the span of the tuple");

  std::vector<std::size_t> rest;
  for (std::size_t j = 0; j < t_count; ++j) {
    if (j != i) rest.push_back(j);
  }
  std::vector<std::size_t> position(t_count);
  unsigned long admissible = 0;
  do {
    position[i] = 0;
    for (std::size_t k = 0; k < rest.size(); ++k) position[rest[k]] = k + 1;

    bool ok = true;
    for (std::size_t k = 0; k + 1 < n && ok; ++k) ok = position[w.indices[k]] < position[w.indices[k + 1]];
    for (std::size_t l = 1; l <= n && ok; ++l) {
      std::size_t first_pos = t_count;
      for (std::size_t j : members[l]) first_pos = std::min(first_pos, position[j]);
      ok = first_pos == position[w.indices[n - l]];
    }
    if (ok) ++admissible;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return Integer(admissible);
}

MonteCarloResult monte_carlo_expectation(const IntersectionLattice& lattice, const WeightVector& p,
                                         std::size_t samples, std::uint64_t seed) {
  check_weights(lattice, p);
  if (samples == 0) throw std::invalid_argument("monte carlo: samples must be positive");
  if (p.has_negative()) throw std::invalid_argument("monte carlo: weights must be nonnegative to sample");

  std::vector<double> probs;
  probs.reserve(p.size());
  for (const auto& w : p.weights()) probs.push_back(w.get_d());
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> first_dist(probs.begin(), probs.end());

  MonteCarloResult result;
  result.samples = samples;
  Integer sum = 0;
  Integer sum_sq = 0;
  std::vector<std::size_t> order(p.size());
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t first = first_dist(rng);
    order[0] = first;
    std::size_t k = 1;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j != first) order[k++] = j;
    }
    std::shuffle(order.begin() + 1, order.end(), rng);
    const Integer value = lambda_count(lattice, OrderPermutation(order));
    if (s == 0 || value < result.min_sample) result.min_sample = value;
    if (s == 0 || value > result.max_sample) result.max_sample = value;
    sum += value;
    sum_sq += value * value;
  }
  const Integer count(static_cast<unsigned long>(samples));
  result.mean = Rational(sum, count);
  result.mean.canonicalize();
  if (samples > 1) {
    // Unbiased sample variance, exact until the final square root.
    Rational variance(count * sum_sq - sum * sum, count * (count - 1));
    variance.canonicalize();
    result.standard_error = std::sqrt(variance.get_d() / static_cast<double>(samples));
  }
  return result;
}

}  // namespace flagbound
