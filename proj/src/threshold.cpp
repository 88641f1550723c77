#include "flagbound/threshold.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "flagbound/arrangement.hpp"
#include "flagbound/parallel.hpp"

namespace flagbound {

BooleanFunction::BooleanFunction(int n, std::vector<bool> truth) : n_(n), truth_(std::move(truth)) {
  if (n < 0 || n > 20) throw GuardViolation("boolean_function.n", 20, n);
  if (truth_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("truth table has " + std::to_string(truth_.size()) + " entries, expected 2^" +
                                std::to_string(n));
  }
}

BooleanFunction BooleanFunction::from_table(int n, std::uint64_t table) {
  if (n < 0 || n > 6) throw GuardViolation("boolean_function.table_n", 6, n);
  const std::size_t size = std::size_t{1} << n;
  std::vector<bool> truth(size);
  for (std::size_t k = 0; k < size; ++k) truth[k] = (table >> k) & 1;
  return BooleanFunction(n, std::move(truth));
}

BooleanFunction BooleanFunction::negated() const {
  std::vector<bool> flipped(truth_.size());
  for (std::size_t k = 0; k < truth_.size(); ++k) flipped[k] = !truth_[k];
  return BooleanFunction(n_, std::move(flipped));
}

namespace {

std::int64_t checked_lin(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
  std::int64_t l, r, s;
  if (__builtin_mul_overflow(a, x, &l) || __builtin_mul_overflow(b, y, &r) || __builtin_add_overflow(l, r, &s)) {
    throw std::overflow_error("fourier-motzkin: 64-bit overflow");
  }
  return s;
}

using Dominance = std::map<std::vector<std::int64_t>, Rational>;

// Adds a / g . x >= b / g with g the content of a; keeps only the tightest
// bound per direction. Returns false if the row is 0 >= b with b > 0.
bool add_row(Dominance& rows, std::vector<std::int64_t> a, Rational b) {
  std::int64_t g = 0;
  for (auto x : a) g = std::gcd(g, x);
  if (g == 0) return b <= 0;
  if (g != 1) {
    for (auto& x : a) x /= g;
    b /= Rational(static_cast<long>(g));
  }
  auto [it, inserted] = rows.try_emplace(std::move(a), b);
  if (!inserted && it->second < b) it->second = b;
  return true;
}

}  // namespace

bool fourier_motzkin_feasible(std::vector<LinearInequality> system, std::size_t variables) {
  Dominance rows;
  for (auto& row : system) {
    if (row.coeffs.size() != variables) throw DimensionMismatch(variables, row.coeffs.size());
    if (!add_row(rows, std::move(row.coeffs), std::move(row.bound))) return false;
  }
  for (std::size_t var = variables; var-- > 0;) {
    std::vector<const Dominance::value_type*> pos, neg;
    Dominance next;
    for (const auto& entry : rows) {
      const auto c = entry.first[var];
      if (c > 0) pos.push_back(&entry);
      else if (c < 0) neg.push_back(&entry);
      else next.insert(entry);
    }
    for (const auto* p : pos) {
      for (const auto* q : neg) {
        const std::int64_t cp = p->first[var];
        const std::int64_t cq = -q->first[var];
        std::vector<std::int64_t> a(variables);
        for (std::size_t k = 0; k < variables; ++k) a[k] = checked_lin(cq, p->first[k], cp, q->first[k]);
        Rational b = Rational(static_cast<long>(cq)) * p->second + Rational(static_cast<long>(cp)) * q->second;
        if (!add_row(next, std::move(a), std::move(b))) return false;
      }
    }
    rows = std::move(next);
  }
  return true;
}

bool is_threshold(const BooleanFunction& f) {
  const int n = f.arity();
  if (n > 10) throw GuardViolation("is_threshold.n", 10, n);
  const std::size_t inputs = std::size_t{1} << n;
  const std::size_t vars = static_cast<std::size_t>(n) + 1;
  std::vector<LinearInequality> system;
  system.reserve(inputs);
  for (std::size_t k = 0; k < inputs; ++k) {
    std::vector<std::int64_t> point(vars);
    point[0] = 1;
    for (int j = 0; j < n; ++j) point[static_cast<std::size_t>(j) + 1] = ((k >> (n - 1 - j)) & 1) ? -1 : 1;
    if (f.value(k)) {
      system.push_back({std::move(point), Rational(0)});
    } else {
      // <alpha, x> < 0 is, up to scaling alpha, <alpha, x> <= -1.
      for (auto& c : point) c = -c;
      system.push_back({std::move(point), Rational(1)});
    }
  }
  return fourier_motzkin_feasible(std::move(system), vars);
}

Integer count_threshold_functions(int n, unsigned threads) {
  if (n < 1 || n > 4) throw GuardViolation("count_threshold_functions.n", 4, n);
  const std::uint64_t tables = std::uint64_t{1} << (std::uint64_t{1} << n);
  const unsigned workers = resolve_threads(threads);
  std::vector<std::uint64_t> partial(workers, 0);
  parallel_chunks(tables, workers, [&](unsigned w, std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      if (is_threshold(BooleanFunction::from_table(n, t))) ++partial[w];
    }
  });
  return Integer(static_cast<unsigned long>(std::accumulate(partial.begin(), partial.end(), std::uint64_t{0})));
}

bool BoundsReport::chain_holds() const {
  if (corollary_lower_bound != Rational(two_lambda)) return false;
  if (two_lambda > chamber_count || chamber_count > schlafli_upper_bound) return false;
  return !brute_force_count || *brute_force_count == chamber_count;
}

BoundsReport bounds_report(int n, const WeightVector& p, bool with_brute_force, unsigned threads) {
  if (n < 1 || n > 5) throw GuardViolation("bounds_report.n", 5, n);
  const VectorSet e = generate_e(n);
  const IntersectionLattice lattice = build_lattice(e, threads);
  BoundsReport report;
  report.n = n;
  report.corollary_lower_bound = 2 * theorem1_sum(lattice, p, threads);
  report.two_lambda = 2 * lambda_count(lattice, OrderPermutation::identity(e.size()));
  report.chamber_count = chamber_count(lattice);
  if (with_brute_force && n <= 4) report.brute_force_count = count_threshold_functions(n, threads);
  report.schlafli_upper_bound = schlafli_bound(n);
  return report;
}

BoundsReport bounds_report(int n, bool with_brute_force, unsigned threads) {
  if (n < 1 || n > 5) throw GuardViolation("bounds_report.n", 5, n);
  return bounds_report(n, WeightVector::uniform(std::size_t{1} << n), with_brute_force, threads);
}

}  // namespace flagbound
