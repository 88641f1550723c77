#include "flagbound/exactlin.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace flagbound {

namespace {

void check_dim(std::size_t expected, std::size_t got) {
  if (expected != got) throw DimensionMismatch(expected, got);
}

std::size_t hash_mpz(const mpz_t x) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(x)) + 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(x);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(x, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t got)
    : std::invalid_argument("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                            std::to_string(got)) {}

IntegerVector::IntegerVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool IntegerVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

std::ostream& operator<<(std::ostream& os, const IntegerVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

std::vector<Rational> SubspaceBasis::residual(const IntegerVector& v) const {
  check_dim(ambient_dim_, v.size());
  std::vector<Rational> r(v.coords().begin(), v.coords().end());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational factor = r[pivots_[k]];
    if (factor == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t c = pivots_[k]; c < ambient_dim_; ++c) {
      if (row[c] != 0) r[c] -= factor * row[c];
    }
  }
  return r;
}

bool SubspaceBasis::contains(const IntegerVector& v) const {
  const auto r = residual(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

SubspaceBasis SubspaceBasis::joined(const IntegerVector& v) const {
  auto r = residual(v);
  const auto lead = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
  if (lead == r.end()) return *this;

  const auto col = static_cast<std::size_t>(lead - r.begin());
  const Rational inv = 1 / r[col];
  for (std::size_t c = col; c < ambient_dim_; ++c) {
    if (r[c] != 0) r[c] *= inv;
  }

  SubspaceBasis out = *this;
  for (auto& row : out.rows_) {
    const Rational factor = row[col];
    if (factor == 0) continue;
    for (std::size_t c = col; c < ambient_dim_; ++c) {
      if (r[c] != 0) row[c] -= factor * r[c];
    }
  }
  const auto pos = std::lower_bound(out.pivots_.begin(), out.pivots_.end(), col) - out.pivots_.begin();
  out.pivots_.insert(out.pivots_.begin() + pos, col);
  out.rows_.insert(out.rows_.begin() + pos, std::move(r));
  return out;
}

std::vector<Integer> SubspaceBasis::coordinates(const IntegerVector& v) const {
  check_dim(ambient_dim_, v.size());
  if (!contains(v)) throw std::invalid_argument("coordinates: vector is not in the subspace");
  std::vector<Integer> out;
  out.reserve(pivots_.size());
  for (std::size_t p : pivots_) out.push_back(v[p]);
  return out;
}

std::size_t SubspaceBasis::hash() const {
  std::size_t h = ambient_dim_;
  for (std::size_t p : pivots_) hash_combine(h, p);
  for (const auto& row : rows_) {
    for (const auto& x : row) {
      hash_combine(h, hash_mpz(x.get_num_mpz_t()));
      hash_combine(h, hash_mpz(x.get_den_mpz_t()));
    }
  }
  return h;
}

SubspaceBasis span(std::span<const IntegerVector> vectors) {
  return span(vectors, vectors.empty() ? 0 : vectors.front().size());
}

SubspaceBasis span(std::span<const IntegerVector> vectors, std::size_t ambient_dim) {
  SubspaceBasis s(ambient_dim);
  for (const auto& v : vectors) s = s.joined(v);
  return s;
}

bool contains(const SubspaceBasis& s, const IntegerVector& v) { return s.contains(v); }

std::size_t rank(std::span<const IntegerVector> vectors) {
  if (vectors.empty()) return 0;
  EliminationState state(vectors.front().size());
  for (const auto& v : vectors) state.absorb(v);
  return state.rank();
}

std::pair<EliminationState, bool> EliminationState::extended(const IntegerVector& v) const {
  EliminationState next = *this;
  const bool increased = next.absorb(v);
  return {std::move(next), increased};
}

bool EliminationState::absorb(const IntegerVector& v) {
  check_dim(ambient_dim_, v.size());
  std::vector<Integer> r = v.coords();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (r[p] == 0) continue;
    const Integer a = rows_[k][p];
    const Integer b = r[p];
    for (std::size_t c = 0; c < ambient_dim_; ++c) r[c] = a * r[c] - b * rows_[k][c];
  }
  const auto lead = std::find_if(r.begin(), r.end(), [](const Integer& x) { return x != 0; });
  if (lead == r.end()) return false;

  Integer g = 0;
  for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  const auto col = static_cast<std::size_t>(lead - r.begin());
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, col);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

}  // namespace flagbound
