#include <doctest.h>

#include "mpc/errors.hpp"
#include "mpc/gfmatrix.hpp"
#include "mpc/simulate.hpp"

using namespace mpc;

namespace {

GfMatrix random_matrix(FieldSpec f, std::size_t r, std::size_t c, SplitMix64& rng) {
  GfMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<std::int64_t>(rng.below(f.modulus())));
  return m;
}

bool is_rref(const GfMatrix& m, std::size_t rank) {
  std::size_t last_pivot = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t c = 0;
    while (c < m.cols() && m(r, c) == 0) ++c;
    if (r >= rank) {
      if (c != m.cols()) return false;
      continue;
    }
    if (c == m.cols() || m(r, c) != 1) return false;
    if (r > 0 && c <= last_pivot) return false;
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (k != r && m(k, c) != 0) return false;
    last_pivot = c;
  }
  return true;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  const FieldSpec f3(3);
  const auto r = rref(GfMatrix::identity(f3, 3));
  CHECK(r.rank == 3);
  CHECK(r.reduced == GfMatrix::identity(f3, 3));
  CHECK(rank(GfMatrix(f3, {{1, 1}, {2, 2}})) == 1);
  CHECK(rank(GfMatrix(f3, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}})) == 3);
  CHECK(rank(GfMatrix(f3, 2, 4)) == 0);
}

TEST_CASE("rref output is reduced and preserves the row space") {
  SplitMix64 rng(7);
  for (Residue p : {2u, 3u, 5u}) {
    const FieldSpec f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const GfMatrix m = random_matrix(f, 1 + rng.below(4), 1 + rng.below(5), rng);
      const auto r = rref(m);
      CHECK(is_rref(r.reduced, r.rank));
      CHECK(r.pivot_columns.size() == r.rank);
      // Every original row is a combination of the reduced rows: stacking does not raise the rank.
      std::vector<GfVector> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
      for (std::size_t i = 0; i < r.reduced.rows(); ++i) rows.push_back(r.reduced.row(i));
      CHECK(rank(GfMatrix::from_rows(f, rows, m.cols())) == r.rank);
    }
  }
}

TEST_CASE("solve") {
  const FieldSpec f3(3);
  const GfMatrix a(f3, {{1, 1, 1}, {0, 1, 2}, {1, 0, 1}});
  const auto x = solve(a, GfVector(f3, {0, 0, 1}));
  REQUIRE(x);
  CHECK(*x == GfVector(f3, {2, 2, 2}));

  CHECK(*solve(GfMatrix::identity(f3, 2), GfVector(f3, {1, 0})) == GfVector(f3, {1, 0}));

  // Two-column systems from the row pair (1,1,1), (0,1,2).
  CHECK(*solve(GfMatrix(f3, {{1, 1}, {0, 1}}), GfVector(f3, {0, 1})) == GfVector(f3, {2, 1}));
  CHECK(*solve(GfMatrix(f3, {{1, 1}, {0, 2}}), GfVector(f3, {0, 1})) == GfVector(f3, {1, 2}));
  CHECK(*solve(GfMatrix(f3, {{1, 1}, {1, 2}}), GfVector(f3, {0, 1})) == GfVector(f3, {2, 1}));

  CHECK_FALSE(solve(GfMatrix(f3, {{1, 1}, {2, 2}}), GfVector(f3, {1, 0})));
  // Underdetermined: free variables are zero.
  CHECK(*solve(GfMatrix(f3, {{1, 2, 0}}), GfVector(f3, {2})) == GfVector(f3, {2, 0, 0}));
  CHECK_THROWS_AS(solve(a, GfVector(f3, {1, 1})), ShapeError);
}

TEST_CASE("solve returns an exact solution whenever one exists") {
  SplitMix64 rng(11);
  for (Residue p : {2u, 3u, 7u}) {
    const FieldSpec f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const GfMatrix m = random_matrix(f, 1 + rng.below(4), 1 + rng.below(4), rng);
      GfVector x0(f, m.cols());
      for (std::size_t i = 0; i < x0.size(); ++i) x0.set(i, static_cast<std::int64_t>(rng.below(p)));
      const GfVector b = m * x0;
      const auto x = solve(m, b);
      REQUIRE(x);
      CHECK(m * *x == b);
    }
  }
}

TEST_CASE("right inverse") {
  const FieldSpec f3(3);
  const GfMatrix a(f3, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}});
  const GfMatrix b = right_inverse(a);
  CHECK(b == GfMatrix(f3, {{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(a * b == GfMatrix::identity(f3, 3));

  const GfMatrix w(f3, {{1, 1, 1}, {0, 1, 2}});
  CHECK(w * right_inverse(w) == GfMatrix::identity(f3, 2));
  CHECK_THROWS_AS(right_inverse(GfMatrix(f3, {{1, 1, 1}, {2, 2, 2}})), RankDeficient);
  CHECK_THROWS_AS(right_inverse(GfMatrix(f3, {{1}, {1}})), RankDeficient);

  SplitMix64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldSpec f(5);
    const std::size_t s = 1 + rng.below(3);
    const GfMatrix m = random_matrix(f, s, s + rng.below(3), rng);
    if (rank(m) != s) continue;
    CHECK(m * right_inverse(m) == GfMatrix::identity(f, s));
  }
}

TEST_CASE("determinant") {
  const FieldSpec f3(3), f5(5);
  CHECK(determinant(GfMatrix(f3, {{1, 1, 1}, {0, 1, 2}, {1, 0, 1}})) == 2);
  CHECK(determinant(GfMatrix(f5, {{1, 2}, {3, 4}})) == 3);  // -2 mod 5
  CHECK(determinant(GfMatrix(f5, {{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(determinant(GfMatrix(f5, 2, 3)), ShapeError);
}

TEST_CASE("column submatrix") {
  const FieldSpec f3(3);
  const GfMatrix a(f3, {{1, 1, 1}, {0, 1, 2}, {1, 0, 1}});
  const std::vector<std::size_t> j{0, 2};
  CHECK(column_submatrix(a, 2, j) == GfMatrix(f3, {{1, 1}, {0, 2}}));
  const std::vector<std::size_t> bad{0, 3};
  CHECK_THROWS_AS(column_submatrix(a, 2, bad), ShapeError);
  CHECK_THROWS_AS(column_submatrix(a, 4, j), ShapeError);
}

TEST_CASE("non-singular by columns") {
  const FieldSpec f2(2), f3(3);
  CHECK(is_nonsingular_by_columns(GfMatrix(f3, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}})));
  CHECK(is_nonsingular_by_columns(GfMatrix(f3, {{1, 1, 1}, {0, 1, 2}, {1, 0, 1}})));
  CHECK(is_nonsingular_by_columns(GfMatrix(f2, {{1, 1}, {0, 1}})));
  CHECK_FALSE(is_nonsingular_by_columns(GfMatrix(f3, {{1, 0, 1}, {0, 1, 2}, {0, 0, 1}})));
  // First row fine, but a 2x2 minor from rows 1-2 vanishes.
  CHECK_FALSE(is_nonsingular_by_columns(GfMatrix(f3, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})));
  CHECK_FALSE(is_nonsingular_by_columns(GfMatrix(f2, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})));
  CHECK_THROWS_AS(is_nonsingular_by_columns(GfMatrix(f3, 3, 2)), ShapeError);
}

TEST_CASE("nullspace") {
  const FieldSpec f3(3);
  const GfMatrix m(f3, {{1, 1, 1}, {0, 1, 2}});
  const GfMatrix n = nullspace(m);
  CHECK(n.rows() == 1);
  CHECK(m * n.transposed() == GfMatrix(f3, 2, 1));
  CHECK(nullspace(GfMatrix::identity(f3, 3)).rows() == 0);

  SplitMix64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldSpec f(3);
    const GfMatrix a = random_matrix(f, 1 + rng.below(4), 2 + rng.below(5), rng);
    const GfMatrix k = nullspace(a);
    CHECK(k.rows() + rank(a) == a.cols());
    if (k.rows()) {
      CHECK(rank(k) == k.rows());
      CHECK(a * k.transposed() == GfMatrix(f, a.rows(), k.rows()));
    }
  }
}

TEST_CASE("row span minimum weight") {
  const FieldSpec f3(3);
  const GfMatrix a(f3, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}});
  CHECK(row_span_min_weight(a.top_rows(1)) == 3);
  CHECK(row_span_min_weight(a.top_rows(2)) == 2);
  CHECK(row_span_min_weight(a) == 1);
  const GfMatrix b(f3, {{1, 1, 1}, {0, 1, 2}, {1, 0, 1}});
  CHECK(row_span_min_weight(b.top_rows(2)) == 2);
  CHECK(row_span_min_weight(b) == 1);
  CHECK_THROWS_AS(row_span_min_weight(GfMatrix(f3, 2, 3)), ShapeError);
  CHECK_THROWS_AS(row_span_min_weight(GfMatrix(f3, 20, 3), 1000), BudgetExceeded);
}

TEST_CASE("NSC matrices have D_i = l - i + 1") {
  SplitMix64 rng(99);
  std::size_t found = 0;
  for (int trial = 0; trial < 400 && found < 30; ++trial) {
    const FieldSpec f(5);
    const std::size_t l = 2 + rng.below(3);
    const std::size_t s = 1 + rng.below(l);
    const GfMatrix a = random_matrix(f, s, l, rng);
    if (!is_nonsingular_by_columns(a)) continue;
    ++found;
    for (std::size_t i = 1; i <= s; ++i) CHECK(row_span_min_weight(a.top_rows(i)) == l - i + 1);
  }
  CHECK(found >= 10);
}

TEST_CASE("subset enumeration") {
  std::vector<std::vector<std::size_t>> seen;
  for_each_subset(4, 2, [&](std::span<const std::size_t> s) { seen.emplace_back(s.begin(), s.end()); });
  CHECK(seen == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::size_t count = 0;
  for_each_subset(3, 0, [&](std::span<const std::size_t>) { ++count; });
  CHECK(count == 1);
  for_each_subset(2, 3, [&](std::span<const std::size_t>) { ++count; });
  CHECK(count == 1);
  CHECK(binomial(26, 3) == 2600);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("vector helpers") {
  const FieldSpec f3(3), f5(5);
  const GfVector a(f3, {1, 2, 0, 1});
  const GfVector b(f3, {1, 0, 0, 2});
  CHECK(a.weight() == 3);
  CHECK(hamming_distance(a, b) == 2);
  CHECK((a + b) == GfVector(f3, {2, 2, 0, 0}));
  CHECK((a - b) == GfVector(f3, {0, 2, 0, 2}));
  CHECK(a.scaled(2) == GfVector(f3, {2, 1, 0, 2}));
  CHECK(to_string(a) == "1 2 0 1");
  CHECK_THROWS_AS(a + GfVector(f5, {1, 2, 0, 1}), FieldMismatch);
  CHECK_THROWS_AS(a + GfVector(f3, {1, 2}), ShapeError);
  CHECK_THROWS_AS(GfMatrix(f3, 2, 3) * GfMatrix(f3, 2, 3), ShapeError);
}
