#include "flagbound/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace flagbound {

Field Field::gf(std::uint32_t p) {
  if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("field characteristic must be a prime below 2^31");
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")"; }

std::vector<SparseColumn> boundary_matrix(const std::vector<Simplex>& faces, const std::vector<Simplex>& cells) {
  std::vector<SparseColumn> columns;
  columns.reserve(cells.size());
  Simplex face;
  for (const auto& cell : cells) {
    SparseColumn col;
    col.reserve(cell.size());
    for (std::size_t j = 0; j < cell.size(); ++j) {
      face.assign(cell.begin(), cell.end());
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
      const auto it = std::lower_bound(faces.begin(), faces.end(), face);
      if (it == faces.end() || *it != face) throw std::logic_error("boundary face missing from complex slice");
      col.emplace_back(static_cast<std::uint32_t>(it - faces.begin()), (j % 2 == 0) ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
    columns.push_back(std::move(col));
  }
  return columns;
}

ComplexSlice build_slice(const VectorSet& h, int degree, std::size_t max_simplices) {
  if (degree < -1) throw std::invalid_argument("homology degree must be >= -1");
  ComplexSlice slice;
  slice.degree = degree;
  const std::size_t d = h.ambient_dim();
  const std::size_t t_count = h.size();
  // Layers hold simplices with degree, degree+1 and degree+2 vertices.
  const std::size_t mid_size = static_cast<std::size_t>(degree) + 1;
  const std::size_t max_size = mid_size + 1;

  std::size_t stored = 0;
  Simplex current;
  // Depth-first over increasing vertex lists, so each layer comes out sorted.
  // A vertex set is a simplex iff its rank stays below d; supersets of a
  // full-rank set are never simplices.
  auto visit = [&](auto&& self, std::size_t start, const EliminationState& state) -> void {
    const std::size_t size = current.size();
    std::vector<Simplex>* layer = nullptr;
    if (size == max_size) layer = &slice.upper;
    else if (size == mid_size) layer = &slice.middle;
    else if (size + 1 == mid_size && degree >= 0) layer = &slice.lower;
    if (layer) {
      layer->push_back(current);
      if (++stored > max_simplices) {
        throw GuardViolation("homology.max_simplices", static_cast<long long>(max_simplices),
                             static_cast<long long>(stored));
      }
    }
    if (size == max_size) return;
    for (std::size_t v = start; v < t_count; ++v) {
      auto [next, increased] = state.extended(h[v]);
      if (increased && next.rank() == d) continue;
      current.push_back(static_cast<std::uint32_t>(v));
      self(self, v + 1, next);
      current.pop_back();
    }
  };
  visit(visit, 0, EliminationState(d));
  return slice;
}

namespace {

std::uint32_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  for (std::uint64_t e = p - 2; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

std::size_t rank_mod_p(const std::vector<SparseColumn>& columns, std::uint32_t p) {
  using Entry = std::pair<std::uint32_t, std::uint32_t>;
  using Column = std::vector<Entry>;
  const auto to_mod = [p](int c) {
    const long long r = c % static_cast<long long>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  };
  // Pivot columns normalized to a trailing coefficient of 1, keyed by last row.
  std::vector<Column> pivots;
  std::vector<std::int64_t> owner;
  Column work;
  Column merged;
  for (const auto& src : columns) {
    work.clear();
    for (const auto& [row, c] : src) {
      const auto v = to_mod(c);
      if (v) work.emplace_back(row, v);
    }
    while (!work.empty()) {
      const auto low = work.back().first;
      if (low >= owner.size()) owner.resize(low + 1, -1);
      if (owner[low] < 0) break;
      const Column& piv = pivots[static_cast<std::size_t>(owner[low])];
      const std::uint64_t factor = work.back().second;  // piv trailing entry is 1
      merged.clear();
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < work.size() || b < piv.size()) {
        if (b == piv.size() || (a < work.size() && work[a].first < piv[b].first)) {
          merged.push_back(work[a++]);
        } else if (a == work.size() || piv[b].first < work[a].first) {
          const auto v = static_cast<std::uint32_t>((p - factor * piv[b].second % p) % p);
          if (v) merged.emplace_back(piv[b].first, v);
          ++b;
        } else {
          const auto v = static_cast<std::uint32_t>((work[a].second + p - factor * piv[b].second % p) % p);
          if (v) merged.emplace_back(work[a].first, v);
          ++a;
          ++b;
        }
      }
      work.swap(merged);
    }
    if (work.empty()) continue;
    const std::uint64_t inv = mod_inverse(work.back().second, p);
    for (auto& e : work) e.second = static_cast<std::uint32_t>(e.second * inv % p);
    const auto low = work.back().first;
    if (low >= owner.size()) owner.resize(low + 1, -1);
    owner[low] = static_cast<std::int64_t>(pivots.size());
    pivots.push_back(work);
  }
  return pivots.size();
}

std::size_t rank_rational(const std::vector<SparseColumn>& columns) {
  using Entry = std::pair<std::uint32_t, Rational>;
  using Column = std::vector<Entry>;
  std::vector<Column> pivots;
  std::vector<std::int64_t> owner;
  Column work;
  Column merged;
  for (const auto& src : columns) {
    work.clear();
    for (const auto& [row, c] : src) {
      if (c) work.emplace_back(row, Rational(c));
    }
    while (!work.empty()) {
      const auto low = work.back().first;
      if (low >= owner.size()) owner.resize(low + 1, -1);
      if (owner[low] < 0) break;
      const Column& piv = pivots[static_cast<std::size_t>(owner[low])];
      const Rational factor = work.back().second;
      merged.clear();
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < work.size() || b < piv.size()) {
        if (b == piv.size() || (a < work.size() && work[a].first < piv[b].first)) {
          merged.push_back(std::move(work[a++]));
        } else if (a == work.size() || piv[b].first < work[a].first) {
          merged.emplace_back(piv[b].first, -factor * piv[b].second);
          ++b;
        } else {
          Rational v = work[a].second - factor * piv[b].second;
          if (v != 0) merged.emplace_back(work[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      work.swap(merged);
    }
    if (work.empty()) continue;
    const Rational inv = 1 / work.back().second;
    for (auto& e : work) e.second *= inv;
    const auto low = work.back().first;
    if (low >= owner.size()) owner.resize(low + 1, -1);
    owner[low] = static_cast<std::int64_t>(pivots.size());
    pivots.push_back(std::move(work));
    work = Column{};
  }
  return pivots.size();
}

}  // namespace

std::size_t matrix_rank(const std::vector<SparseColumn>& columns, Field field) {
  return field.is_rational() ? rank_rational(columns) : rank_mod_p(columns, field.characteristic());
}

std::size_t homology_rank(const VectorSet& h, int degree, Field field) {
  const ComplexSlice slice = build_slice(h, degree);
  // Reduced H_m = C_m / (ker bd_m)^c / im bd_{m+1}; bd_{-1} = 0.
  const std::size_t rank_down = degree >= 0 ? matrix_rank(boundary_matrix(slice.lower, slice.middle), field) : 0;
  const std::size_t rank_up = matrix_rank(boundary_matrix(slice.middle, slice.upper), field);
  return slice.middle.size() - rank_down - rank_up;
}

VectorSet restrict_to_flat(const VectorSet& h, const Flat& u) {
  if (u.subspace.dim() == 0) throw std::invalid_argument("cannot restrict to the zero flat");
  std::vector<IntegerVector> coords;
  for (std::size_t j : u.members.elements()) coords.emplace_back(u.subspace.coordinates(h[j]));
  return VectorSet(std::move(coords));
}

std::size_t mobius_via_homology(const VectorSet& h, const Flat& u, Field field) {
  const VectorSet restricted = restrict_to_flat(h, u);
  return homology_rank(restricted, static_cast<int>(u.subspace.dim()) - 2, field);
}

}  // namespace flagbound
