#include "flagbound/arrangement.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "flagbound/parallel.hpp"

namespace flagbound {

GuardViolation::GuardViolation(std::string guard, long long limit, long long got)
    : std::runtime_error("guard '" + guard + "' violated: limit " + std::to_string(limit) + ", got " +
                         std::to_string(got)),
      guard_(std::move(guard)),
      limit_(limit) {}

std::size_t IndexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] & ~other.words_[k]) return false;
  }
  return true;
}

std::vector<std::size_t> IndexSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    for (auto w = words_[k]; w; w &= w - 1) out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }
  return out;
}

namespace {

bool parallel(const IntegerVector& a, const IntegerVector& b) {
  // a, b nonzero: parallel iff every 2x2 minor vanishes.
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

}  // namespace

VectorSet::VectorSet(std::vector<IntegerVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw std::invalid_argument("vector set is empty");
  ambient_dim_ = vectors_.front().size();
  if (ambient_dim_ == 0) throw std::invalid_argument("vector set has ambient dimension 0");
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].size() != ambient_dim_) throw DimensionMismatch(ambient_dim_, vectors_[i].size());
    if (vectors_[i].is_zero()) throw std::invalid_argument("vector " + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (parallel(vectors_[i], vectors_[j])) {
        throw std::invalid_argument("vectors " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                    " are parallel");
      }
    }
  }
  if (rank(vectors_) != ambient_dim_) throw std::invalid_argument("vector set does not span the ambient space");
}

VectorSet generate_e(int n) {
  if (n < 1 || n > 20) throw GuardViolation("generate_e.n", 20, n);
  const std::size_t count = std::size_t{1} << n;
  std::vector<IntegerVector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Integer> coords(static_cast<std::size_t>(n) + 1);
    coords[0] = 1;
    for (int j = 0; j < n; ++j) {
      const bool bit = (k >> (n - 1 - j)) & 1;
      coords[static_cast<std::size_t>(j) + 1] = bit ? -1 : 1;
    }
    out.emplace_back(std::move(coords));
  }
  return VectorSet(std::move(out));
}

std::optional<IntersectionLattice::FlatId> IntersectionLattice::find(const SubspaceBasis& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IntersectionLattice build_lattice(const VectorSet& h, unsigned threads) {
  const std::size_t t_count = h.size();
  const std::size_t d = h.ambient_dim();
  if (t_count >= (std::size_t{1} << 16)) throw GuardViolation("build_lattice.T", (1 << 16) - 1, static_cast<long long>(t_count));

  IntersectionLattice lat;
  lat.vector_count_ = t_count;
  lat.ambient_dim_ = d;
  lat.flats_.push_back(Flat{SubspaceBasis(d), IndexSet(t_count), 0});
  lat.index_.emplace(lat.flats_.front().subspace, 0);

  // Breadth-first closure under joining with atoms. Every join raises the
  // dimension by one, so flats come out in nondecreasing dimension.
  for (std::size_t f = 0; f < lat.flats_.size(); ++f) {
    lat.join_.resize((f + 1) * t_count);
    for (std::size_t i = 0; i < t_count; ++i) {
      const auto self = static_cast<IntersectionLattice::FlatId>(f);
      if (lat.flats_[f].members.contains(i)) {
        lat.join_[f * t_count + i] = self;
        continue;
      }
      SubspaceBasis joined = lat.flats_[f].subspace.joined(h[i]);
      const auto it = lat.index_.find(joined);
      if (it != lat.index_.end()) {
        lat.join_[f * t_count + i] = it->second;
        continue;
      }
      IndexSet members = lat.flats_[f].members;
      members.insert(i);
      for (std::size_t j = 0; j < t_count; ++j) {
        if (!members.contains(j) && joined.contains(h[j])) members.insert(j);
      }
      const auto id = static_cast<IntersectionLattice::FlatId>(lat.flats_.size());
      if (lat.flats_.size() >= 0xffffffffULL) throw GuardViolation("build_lattice.flats", 0xfffffffeLL, static_cast<long long>(lat.flats_.size()));
      const std::size_t count = members.count();
      lat.index_.emplace(joined, id);
      lat.flats_.push_back(Flat{std::move(joined), std::move(members), count});
      lat.join_[f * t_count + i] = id;
    }
  }
  if (!lat.flats_.back().subspace.is_full()) throw std::invalid_argument("vector set does not span the ambient space");

  lat.dim_offsets_.assign(d + 2, 0);
  for (const auto& flat : lat.flats_) ++lat.dim_offsets_[flat.subspace.dim() + 1];
  std::partial_sum(lat.dim_offsets_.begin(), lat.dim_offsets_.end(), lat.dim_offsets_.begin());

  // mu(0, t) = -sum_{s < t} mu(0, s). Flats below t are reached from the
  // bottom by joining atoms of t only; dependencies have smaller dimension, so
  // each dimension layer can be filled in parallel.
  lat.mobius_.assign(lat.flats_.size(), Integer(0));
  lat.mobius_[0] = 1;
  const unsigned workers = resolve_threads(threads);
  for (std::size_t k = 1; k <= d; ++k) {
    const std::size_t begin = lat.dim_begin(k);
    const std::size_t layer = lat.dim_end(k) - begin;
    parallel_chunks(layer, workers, [&](unsigned, std::size_t lo, std::size_t hi) {
      std::vector<std::uint32_t> stamp(lat.flats_.size(), 0);
      std::vector<IntersectionLattice::FlatId> stack;
      std::uint32_t generation = 0;
      for (std::size_t idx = begin + lo; idx < begin + hi; ++idx) {
        const auto target = static_cast<IntersectionLattice::FlatId>(idx);
        const auto atoms = lat.flats_[target].members.elements();
        ++generation;
        Integer sum = 0;
        stack.assign(1, lat.bottom());
        stamp[lat.bottom()] = generation;
        while (!stack.empty()) {
          const auto s = stack.back();
          stack.pop_back();
          if (s == target) continue;
          sum += lat.mobius_[s];
          for (std::size_t a : atoms) {
            const auto next = lat.join(s, a);
            if (stamp[next] != generation) {
              stamp[next] = generation;
              stack.push_back(next);
            }
          }
        }
        lat.mobius_[target] = -sum;
      }
    });
  }
  return lat;
}

Integer chamber_count(const IntersectionLattice& lattice) {
  Integer total = 0;
  for (std::size_t id = 0; id < lattice.size(); ++id) total += abs(lattice.mobius(static_cast<IntersectionLattice::FlatId>(id)));
  return total;
}

Integer chamber_count(const VectorSet& h) { return chamber_count(build_lattice(h)); }

namespace {

using Vec64 = std::vector<std::int64_t>;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("deletion-restriction: 64-bit overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("deletion-restriction: 64-bit overflow");
  return r;
}

// Scale to a primitive vector whose first nonzero entry is positive; returns
// false for the zero vector.
bool normalize(Vec64& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g == 0) return false;
  const auto lead = std::find_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; });
  if (*lead < 0) g = -g;
  for (auto& x : v) x /= g;
  return true;
}

class RegionCounter {
 public:
  Integer count(std::vector<Vec64> normals, std::size_t dim) {
    std::vector<Vec64> clean;
    clean.reserve(normals.size());
    for (auto& v : normals) {
      if (normalize(v)) clean.push_back(std::move(v));
    }
    std::sort(clean.begin(), clean.end());
    clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
    return regions(clean, dim);
  }

 private:
  // `normals` is primitive, sign-normalized, sorted and duplicate-free.
  Integer regions(const std::vector<Vec64>& normals, std::size_t dim) {
    const std::size_t m = normals.size();
    if (m == 0) return 1;
    if (dim == 1 || m == 1) return 2;
    if (dim == 2) return Integer(static_cast<unsigned long>(2 * m));

    const auto key = std::make_pair(dim, normals);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    const Vec64& h = normals.back();
    std::vector<Vec64> rest(normals.begin(), normals.end() - 1);
    Integer result = regions(rest, dim);

    // Coordinates on h-perp: basis b_j = h[p] e_j - h[j] e_p for j != p,
    // with p a column of smallest nonzero |h|.
    std::size_t p = 0;
    for (std::size_t c = 0; c < dim; ++c) {
      if (h[c] != 0 && (h[p] == 0 || std::llabs(h[c]) < std::llabs(h[p]))) p = c;
    }
    std::vector<Vec64> restricted;
    restricted.reserve(rest.size());
    for (const auto& w : rest) {
      Vec64 r;
      r.reserve(dim - 1);
      for (std::size_t j = 0; j < dim; ++j) {
        if (j == p) continue;
        r.push_back(checked_add(checked_mul(h[p], w[j]), -checked_mul(h[j], w[p])));
      }
      if (normalize(r)) restricted.push_back(std::move(r));
    }
    std::sort(restricted.begin(), restricted.end());
    restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
    result += regions(restricted, dim - 1);

    memo_.emplace(key, result);
    return result;
  }

  std::map<std::pair<std::size_t, std::vector<Vec64>>, Integer> memo_;
};

}  // namespace

Integer chamber_count_dr(const VectorSet& h) { return chamber_count_dr(h.vectors(), h.ambient_dim()); }

Integer chamber_count_dr(std::span<const IntegerVector> normals_in, std::size_t ambient_dim) {
  if (ambient_dim == 0) throw std::invalid_argument("ambient dimension must be positive");
  std::vector<Vec64> normals;
  normals.reserve(normals_in.size());
  for (const auto& v : normals_in) {
    if (v.size() != ambient_dim) throw DimensionMismatch(ambient_dim, v.size());
    Vec64 w;
    for (const auto& x : v.coords()) {
      if (!x.fits_slong_p()) throw std::overflow_error("deletion-restriction: coordinate exceeds 64 bits");
      w.push_back(x.get_si());
    }
    normals.push_back(std::move(w));
  }
  return RegionCounter{}.count(std::move(normals), ambient_dim);
}

Integer schlafli_bound(int n) {
  if (n < 1 || n > 62) throw GuardViolation("schlafli_bound.n", 62, n);
  Integer top = 1;
  mpz_mul_2exp(top.get_mpz_t(), top.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  top -= 1;
  Integer sum = 0;
  Integer binom;
  for (int i = 0; i <= n; ++i) {
    mpz_bin_ui(binom.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(i));
    sum += binom;
  }
  return 2 * sum;
}

}  // namespace flagbound
