#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpc/field.hpp"

namespace mpc {

/// Dense vector over one GF(p).
class GfVector {
 public:
  GfVector(FieldSpec spec, std::size_t n) : spec_(spec), values_(n, 0) {}
  GfVector(FieldSpec spec, std::vector<Residue> values);
  GfVector(FieldSpec spec, std::initializer_list<std::int64_t> values);

  static GfVector unit(FieldSpec spec, std::size_t n, std::size_t index);

  FieldSpec spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Residue> values() const noexcept { return values_; }

  Residue operator[](std::size_t i) const { return values_[i]; }
  FieldElement element(std::size_t i) const { return {spec_, values_.at(i)}; }
  void set(std::size_t i, std::int64_t v) { values_.at(i) = spec_.reduce(v); }
  void set(std::size_t i, FieldElement v);

  /// this += c * other
  GfVector& add_scaled(const GfVector& other, Residue c);
  GfVector& operator+=(const GfVector& other) { return add_scaled(other, 1); }
  GfVector& operator-=(const GfVector& other);
  GfVector scaled(Residue c) const;

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;

  friend GfVector operator+(GfVector a, const GfVector& b) { return a += b; }
  friend GfVector operator-(GfVector a, const GfVector& b) { return a -= b; }
  friend bool operator==(const GfVector& a, const GfVector& b) {
    return a.spec_ == b.spec_ && a.values_ == b.values_;
  }

 private:
  FieldSpec spec_;
  std::vector<Residue> values_;
};

std::size_t hamming_distance(const GfVector& a, const GfVector& b);
std::string to_string(const GfVector& v);

/// Dense row-major matrix over one GF(p).
class GfMatrix {
 public:
  GfMatrix(FieldSpec spec, std::size_t rows, std::size_t cols)
      : spec_(spec), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}
  GfMatrix(FieldSpec spec, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  /// All rows must share one length and one field.
  static GfMatrix from_rows(FieldSpec spec, std::span<const GfVector> rows, std::size_t cols);
  static GfMatrix identity(FieldSpec spec, std::size_t n);

  FieldSpec spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  FieldElement element(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::int64_t v);

  GfVector row(std::size_t r) const;
  GfVector column(std::size_t c) const;
  GfMatrix transposed() const;
  /// The first `count` rows.
  GfMatrix top_rows(std::size_t count) const;

  friend GfMatrix operator*(const GfMatrix& a, const GfMatrix& b);
  /// M * x for a column vector x.
  friend GfVector operator*(const GfMatrix& m, const GfVector& x);
  friend bool operator==(const GfMatrix& a, const GfMatrix& b) = default;

 private:
  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> entries_;
};

/// x * M for a row vector x.
GfVector row_times(const GfVector& x, const GfMatrix& m);

std::string to_string(const GfMatrix& m);

struct RrefResult {
  GfMatrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const GfMatrix& m);
std::size_t rank(const GfMatrix& m);

/// Square matrices only.
Residue determinant(const GfMatrix& m);

/// One solution of M x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<GfVector> solve(const GfMatrix& m, const GfVector& b);

/// B with M B = I; requires rank(M) = rows(M), else RankDeficient.
GfMatrix right_inverse(const GfMatrix& m);

/// Rows 0..t-1 restricted to `columns` (0-based, strictly increasing).
GfMatrix column_submatrix(const GfMatrix& m, std::size_t t, std::span<const std::size_t> columns);

/// True iff for every t <= rows, every t x t minor taken from the first t
/// rows is invertible. Brute-force enumeration of all column subsets.
bool is_nonsingular_by_columns(const GfMatrix& m);

/// Basis of {x : M x = 0}, one basis vector per row of the result.
GfMatrix nullspace(const GfMatrix& m);

inline constexpr std::uint64_t kRowSpanBudget = 10'000'000;

/// Minimum Hamming weight over nonzero combinations of the rows of m.
/// Throws BudgetExceeded when p^rows > budget.
std::size_t row_span_min_weight(const GfMatrix& m, std::uint64_t budget = kRowSpanBudget);

/// Calls `visit(subset)` for each strictly increasing k-subset of {0..n-1}
/// in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

}  // namespace mpc
