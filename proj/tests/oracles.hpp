// Brute-force reference computations for the unit and acceptance tests.
// Nothing here calls into the library's elimination, lattice or enumeration
// code; inputs are plain integer matrices.

#ifndef FLAGBOUND_TESTS_ORACLES_HPP
#define FLAGBOUND_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "flagbound/arrangement.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<long>>;

inline Matrix to_matrix(const flagbound::VectorSet& h) {
  Matrix m;
  for (const auto& v : h.vectors()) {
    std::vector<long> row;
    for (const auto& x : v.coords()) row.push_back(x.get_si());
    m.push_back(row);
  }
  return m;
}

inline Matrix to_matrix(const std::vector<flagbound::IntegerVector>& vs) {
  Matrix m;
  for (const auto& v : vs) {
    std::vector<long> row;
    for (const auto& x : v.coords()) row.push_back(x.get_si());
    m.push_back(row);
  }
  return m;
}

// Textbook Gaussian elimination on fractions, column by column.
inline std::size_t rank(const Matrix& rows, std::size_t cols) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < a.size(); ++c) {
    std::size_t piv = rk;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rk]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rk || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[rk][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[rk][k];
    }
    ++rk;
  }
  return rk;
}

inline std::size_t rank_of(const Matrix& h, const std::vector<std::size_t>& idx, std::size_t cols) {
  Matrix rows;
  for (auto i : idx) rows.push_back(h[i]);
  return rank(rows, cols);
}

inline bool in_span(const Matrix& basis, const std::vector<long>& v, std::size_t cols) {
  Matrix with = basis;
  with.push_back(v);
  return rank(with, cols) == rank(basis, cols);
}

// Closure {j : w_j in span(S)} as a bitmask, T <= 64.
inline std::uint64_t closure(const Matrix& h, std::uint64_t subset, std::size_t cols) {
  Matrix rows;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (subset >> i & 1) rows.push_back(h[i]);
  }
  const std::size_t base = rank(rows, cols);
  std::uint64_t out = 0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    rows.push_back(h[j]);
    if (rank(rows, cols) == base) out |= std::uint64_t{1} << j;
    rows.pop_back();
  }
  return out;
}

// Flats as closed member sets from all 2^T subsets, and sum |mu| by the
// defining recursion over member-set inclusion.
struct SubsetLattice {
  std::vector<std::uint64_t> flats;  // sorted by popcount, then value
  std::map<std::uint64_t, long> mobius;
  long chambers = 0;
};

inline SubsetLattice subset_lattice(const Matrix& h, std::size_t cols) {
  std::set<std::uint64_t> found;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.size()); ++s) found.insert(closure(h, s, cols));
  SubsetLattice out;
  out.flats.assign(found.begin(), found.end());
  std::sort(out.flats.begin(), out.flats.end(), [](auto a, auto b) {
    const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (auto t : out.flats) {
    long sum = 0;
    for (auto s : out.flats) {
      if (s != t && (s & ~t) == 0) sum += out.mobius.at(s);
    }
    out.mobius[t] = (t == 0) ? 1 : -sum;
    out.chambers += std::labs(out.mobius[t]);
  }
  return out;
}

// Lambda in the "positions >= 2" reading: ordered tuples avoiding the first
// vector in the order, each entry minimal among H in its suffix span.
inline long lambda_by_positions(const Matrix& h, const std::vector<std::size_t>& order, std::size_t cols) {
  const std::size_t t = h.size();
  const std::size_t n = cols - 1;
  std::vector<std::size_t> pos(t);
  for (std::size_t p = 0; p < t; ++p) pos[order[p]] = p;
  long count = 0;
  std::vector<std::size_t> tuple(n);
  const auto check = [&]() {
    for (auto i : tuple) {
      if (pos[i] == 0) return false;
    }
    if (rank_of(h, tuple, cols) != n) return false;
    for (std::size_t l = 0; l < n; ++l) {
      Matrix suffix;
      for (std::size_t k = l; k < n; ++k) suffix.push_back(h[tuple[k]]);
      for (std::size_t j = 0; j < t; ++j) {
        if (pos[j] < pos[tuple[l]] && in_span(suffix, h[j], cols)) return false;
      }
    }
    return true;
  };
  const auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      count += check();
      return;
    }
    for (std::size_t i = 0; i < t; ++i) {
      if (std::find(tuple.begin(), tuple.begin() + static_cast<long>(k), i) != tuple.begin() + static_cast<long>(k)) continue;
      tuple[k] = i;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// Exhaustive search for integer weights alpha in [-bound, bound]^(n+1) with
// f(x) = 1 iff <alpha, (1, x)> >= 0. Inputs follow the canonical E order.
inline bool separable_by_small_weights(int n, std::uint64_t table, long bound) {
  const std::size_t vars = static_cast<std::size_t>(n) + 1;
  const std::size_t inputs = std::size_t{1} << n;
  std::vector<std::vector<long>> points(inputs, std::vector<long>(vars, 1));
  for (std::size_t k = 0; k < inputs; ++k) {
    for (int j = 0; j < n; ++j) points[k][static_cast<std::size_t>(j) + 1] = ((k >> (n - 1 - j)) & 1) ? -1 : 1;
  }
  std::vector<long> alpha(vars, -bound);
  for (;;) {
    bool ok = true;
    for (std::size_t k = 0; k < inputs && ok; ++k) {
      long s = 0;
      for (std::size_t c = 0; c < vars; ++c) s += alpha[c] * points[k][c];
      ok = (s >= 0) == static_cast<bool>((table >> k) & 1);
    }
    if (ok) return true;
    std::size_t c = 0;
    while (c < vars && alpha[c] == bound) alpha[c++] = -bound;
    if (c == vars) return false;
    ++alpha[c];
  }
}

// Random spanning set of pairwise non-parallel nonzero integer vectors with
// entries in [-range, range].
inline flagbound::VectorSet random_vector_set(std::size_t count, std::size_t dim, long range, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> entry(-range, range);
  for (;;) {
    std::vector<flagbound::IntegerVector> vs;
    Matrix m;
    for (int attempts = 0; vs.size() < count && attempts < 1000; ++attempts) {
      std::vector<long> v(dim);
      for (auto& x : v) x = entry(rng);
      if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) continue;
      bool parallel = false;
      for (const auto& w : m) parallel = parallel || rank({w, v}, dim) < 2;
      if (parallel) continue;
      m.push_back(v);
      std::vector<mpz_class> coords(v.begin(), v.end());
      vs.emplace_back(std::move(coords));
    }
    if (vs.size() == count && rank(m, dim) == dim) return flagbound::VectorSet(std::move(vs));
  }
}

}  // namespace oracle

#endif  // FLAGBOUND_TESTS_ORACLES_HPP
