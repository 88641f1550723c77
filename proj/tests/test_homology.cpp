#include <doctest.h>

#include <map>
#include <random>

#include "flagbound/flags.hpp"
#include "flagbound/homology.hpp"
#include "oracles.hpp"

using namespace flagbound;

TEST_CASE("reduced homology of E_n in the top degree") {
  CHECK(homology_rank(generate_e(1), 0) == 1);
  CHECK(homology_rank(generate_e(2), 1) == 3);
  CHECK(homology_rank(generate_e(3), 2) == 23);
}

TEST_CASE("Moebius values through homology of restrictions") {
  const auto e2 = generate_e(2);
  const auto l2 = build_lattice(e2);
  CHECK(mobius_via_homology(e2, l2.flat(l2.atom(0))) == 1);
  CHECK(mobius_via_homology(e2, l2.flat(l2.top())) == 3);
  const auto e1 = generate_e(1);
  const auto l1 = build_lattice(e1);
  CHECK(mobius_via_homology(e1, l1.flat(l1.top())) == 1);
  CHECK_THROWS(mobius_via_homology(e1, l1.flat(l1.bottom())));
}

TEST_CASE("|mu| equals reduced homology rank on every flat") {
  std::mt19937_64 rng(3);
  std::vector<VectorSet> sets = {generate_e(1), generate_e(2), generate_e(3)};
  for (int k = 0; k < 4; ++k) sets.push_back(oracle::random_vector_set(5 + k % 2, 3 + k % 2, 2, rng));
  for (const auto& h : sets) {
    const auto lat = build_lattice(h);
    for (IntersectionLattice::FlatId t = 1; t < lat.size(); ++t) {
      CHECK(Integer(static_cast<unsigned long>(mobius_via_homology(h, lat.flat(t)))) == abs(lat.mobius(t)));
    }
  }
}

TEST_CASE("restriction keeps the member count and fills the flat") {
  const auto h = generate_e(3);
  const auto lat = build_lattice(h);
  for (IntersectionLattice::FlatId t = 1; t < lat.size(); ++t) {
    const auto r = restrict_to_flat(h, lat.flat(t));
    CHECK(r.size() == lat.flat(t).member_count);
    CHECK(r.ambient_dim() == lat.dim(t));
  }
}

TEST_CASE("boundary of a boundary vanishes") {
  const auto h = generate_e(3);
  for (int degree = 0; degree <= 2; ++degree) {
    const auto slice = build_slice(h, degree);
    const auto down = boundary_matrix(slice.lower, slice.middle);
    const auto up = boundary_matrix(slice.middle, slice.upper);
    for (const auto& col : up) {
      std::map<std::uint32_t, long> acc;
      for (const auto& [row, c] : col) {
        for (const auto& [r2, c2] : down[row]) acc[r2] += static_cast<long>(c) * c2;
      }
      for (const auto& [r, v] : acc) CHECK(v == 0);
    }
  }
}

TEST_CASE("slice layers have the requested sizes") {
  const auto e2 = generate_e(2);
  const auto s0 = build_slice(e2, 0);
  CHECK(s0.lower.size() == 1);
  CHECK(s0.middle.size() == 4);
  CHECK(s0.upper.size() == 6);
  const auto s1 = build_slice(e2, 1);
  CHECK(s1.upper.empty());  // any three vectors of E_2 span R^3
  const auto sm = build_slice(e2, -1);
  CHECK(sm.lower.empty());
  CHECK(sm.middle.size() == 1);
  CHECK_THROWS(build_slice(e2, -2));
  CHECK_THROWS_AS(build_slice(generate_e(3), 2, 10), GuardViolation);
}

TEST_CASE("unreduced and reduced ranks agree above degree 0") {
  const auto h = generate_e(3);
  const auto s0 = build_slice(h, 0);
  const std::size_t rank_up0 = matrix_rank(boundary_matrix(s0.middle, s0.upper), Field::gf(2));
  CHECK(homology_rank(h, 0) + 1 == s0.middle.size() - rank_up0);
  for (int degree = 1; degree <= 2; ++degree) {
    const auto s = build_slice(h, degree);
    const std::size_t unreduced = s.middle.size() - matrix_rank(boundary_matrix(s.lower, s.middle), Field::gf(2)) -
                                  matrix_rank(boundary_matrix(s.middle, s.upper), Field::gf(2));
    CHECK(homology_rank(h, degree) == unreduced);
  }
  CHECK(homology_rank(h, 1) == 0);
  CHECK(homology_rank(h, 0) == 0);
}

TEST_CASE("ranks agree across fields and match lambda") {
  std::mt19937_64 rng(7);
  std::vector<VectorSet> sets = {generate_e(1), generate_e(2), generate_e(3)};
  for (int k = 0; k < 6; ++k) sets.push_back(oracle::random_vector_set(4 + k % 3, 3 + k % 2, 3, rng));
  for (const auto& h : sets) {
    const int top = static_cast<int>(h.ambient_dim()) - 2;
    const auto lambda = lambda_count(h, OrderPermutation::identity(h.size()));
    for (const auto field : {Field::gf(2), Field::gf(3), Field::gf(101), Field::rationals()}) {
      CAPTURE(field.name());
      CHECK(Integer(static_cast<unsigned long>(homology_rank(h, top, field))) == lambda);
    }
  }
}

TEST_CASE("matrix rank over different fields") {
  // Columns (1,1) and (1,-1) are dependent only in characteristic 2.
  const std::vector<SparseColumn> cols = {{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}};
  CHECK(matrix_rank(cols, Field::gf(2)) == 1);
  CHECK(matrix_rank(cols, Field::gf(3)) == 2);
  CHECK(matrix_rank(cols, Field::rationals()) == 2);
  CHECK(matrix_rank({}, Field::rationals()) == 0);
}

TEST_CASE("field construction") {
  CHECK(Field::gf(2).name() == "GF(2)");
  CHECK(Field::rationals().name() == "Q");
  CHECK(Field::rationals().is_rational());
  CHECK_THROWS(Field::gf(4));
  CHECK_THROWS(Field::gf(1));
  CHECK_THROWS(Field::gf(0));
}
