#include "mpc/gfmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace mpc {

namespace {

void require_field(FieldSpec a, FieldSpec b) {
  if (!(a == b)) throw FieldMismatch();
}

void require_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw ShapeError(std::string(what) + ": length " + std::to_string(a) + " vs " +
                     std::to_string(b));
  }
}

}  // namespace

// ---------------------------------------------------------------- GfVector

GfVector::GfVector(FieldSpec spec, std::vector<Residue> values)
    : spec_(spec), values_(std::move(values)) {
  for (auto& v : values_) v %= spec_.modulus();
}

GfVector::GfVector(FieldSpec spec, std::initializer_list<std::int64_t> values) : spec_(spec) {
  values_.reserve(values.size());
  for (auto v : values) values_.push_back(spec_.reduce(v));
}

GfVector GfVector::unit(FieldSpec spec, std::size_t n, std::size_t index) {
  GfVector v(spec, n);
  v.values_.at(index) = 1;
  return v;
}

void GfVector::set(std::size_t i, FieldElement v) {
  require_field(spec_, v.spec());
  values_.at(i) = v.value();
}

GfVector& GfVector::add_scaled(const GfVector& other, Residue c) {
  require_field(spec_, other.spec_);
  require_length(size(), other.size(), "vector add");
  if (c == 0) return *this;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] = spec_.add(values_[i], spec_.mul(c, other.values_[i]));
  }
  return *this;
}

GfVector& GfVector::operator-=(const GfVector& other) {
  return add_scaled(other, spec_.neg(1));
}

GfVector GfVector::scaled(Residue c) const {
  GfVector out(*this);
  for (auto& v : out.values_) v = spec_.mul(v, c);
  return out;
}

std::size_t GfVector::weight() const noexcept {
  return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(),
                                                [](Residue v) { return v != 0; }));
}

bool GfVector::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](Residue v) { return v == 0; });
}

std::size_t hamming_distance(const GfVector& a, const GfVector& b) {
  require_field(a.spec(), b.spec());
  require_length(a.size(), b.size(), "hamming distance");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::string to_string(const GfVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

// ---------------------------------------------------------------- GfMatrix

GfMatrix::GfMatrix(FieldSpec spec, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : spec_(spec), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require_length(r.size(), cols_, "matrix row");
    for (auto v : r) entries_.push_back(spec_.reduce(v));
  }
}

GfMatrix GfMatrix::from_rows(FieldSpec spec, std::span<const GfVector> rows, std::size_t cols) {
  GfMatrix m(spec, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_field(spec, rows[r].spec());
    require_length(rows[r].size(), cols, "matrix row");
    std::copy(rows[r].values().begin(), rows[r].values().end(), m.entries_.begin() + r * cols);
  }
  return m;
}

GfMatrix GfMatrix::identity(FieldSpec spec, std::size_t n) {
  GfMatrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

FieldElement GfMatrix::element(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
  return {spec_, (*this)(r, c)};
}

void GfMatrix::set(std::size_t r, std::size_t c, std::int64_t v) {
  if (r >= rows_ || c >= cols_) throw ShapeError("matrix index out of range");
  entries_[r * cols_ + c] = spec_.reduce(v);
}

GfVector GfMatrix::row(std::size_t r) const {
  if (r >= rows_) throw ShapeError("row index out of range");
  return {spec_, std::vector<Residue>(entries_.begin() + r * cols_,
                                      entries_.begin() + (r + 1) * cols_)};
}

GfVector GfMatrix::column(std::size_t c) const {
  if (c >= cols_) throw ShapeError("column index out of range");
  GfVector v(spec_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, (*this)(r, c));
  return v;
}

GfMatrix GfMatrix::transposed() const {
  GfMatrix t(spec_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
  return t;
}

GfMatrix GfMatrix::top_rows(std::size_t count) const {
  if (count > rows_) throw ShapeError("top_rows: count exceeds row count");
  GfMatrix t(spec_, count, cols_);
  std::copy(entries_.begin(), entries_.begin() + count * cols_, t.entries_.begin());
  return t;
}

GfMatrix operator*(const GfMatrix& a, const GfMatrix& b) {
  require_field(a.spec_, b.spec_);
  require_length(a.cols_, b.rows_, "matrix product");
  const FieldSpec f = a.spec_;
  GfMatrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Residue aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        auto& e = out.entries_[i * b.cols_ + j];
        e = f.add(e, f.mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

GfVector operator*(const GfMatrix& m, const GfVector& x) {
  require_field(m.spec_, x.spec());
  require_length(m.cols_, x.size(), "matrix-vector product");
  const FieldSpec f = m.spec_;
  GfVector out(f, m.rows_);
  for (std::size_t r = 0; r < m.rows_; ++r) {
    Residue acc = 0;
    for (std::size_t c = 0; c < m.cols_; ++c) acc = f.add(acc, f.mul(m(r, c), x[c]));
    out.set(r, acc);
  }
  return out;
}

GfVector row_times(const GfVector& x, const GfMatrix& m) {
  require_field(m.spec(), x.spec());
  require_length(x.size(), m.rows(), "vector-matrix product");
  GfVector out(m.spec(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (x[r] != 0) out.add_scaled(m.row(r), x[r]);
  }
  return out;
}

std::string to_string(const GfMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "\n" : "") << to_string(m.row(r));
  }
  return os.str();
}

// ------------------------------------------------------------- elimination

RrefResult rref(const GfMatrix& m) {
  const FieldSpec f = m.spec();
  GfMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Residue tmp = a(r, j);
        a.set(r, j, a(piv, j));
        a.set(piv, j, tmp);
      }
    }
    const Residue scale = f.inv(a(r, c));
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(r, j, f.mul(a(r, j), scale));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Residue factor = a(i, c);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a.set(i, j, f.sub(a(i, j), f.mul(factor, a(r, j))));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const GfMatrix& m) { return rref(m).rank; }

Residue determinant(const GfMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
  const FieldSpec f = m.spec();
  GfMatrix a = m;
  const std::size_t n = a.rows();
  Residue det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        const Residue tmp = a(c, j);
        a.set(c, j, a(piv, j));
        a.set(piv, j, tmp);
      }
      det = f.neg(det);
    }
    det = f.mul(det, a(c, c));
    const Residue inv_pivot = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      const Residue factor = f.mul(a(i, c), inv_pivot);
      if (factor == 0) continue;
      for (std::size_t j = c; j < n; ++j) a.set(i, j, f.sub(a(i, j), f.mul(factor, a(c, j))));
    }
  }
  return det;
}

std::optional<GfVector> solve(const GfMatrix& m, const GfVector& b) {
  require_field(m.spec(), b.spec());
  require_length(m.rows(), b.size(), "solve");
  GfMatrix aug(m.spec(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
    aug.set(r, m.cols(), b[r]);
  }
  const RrefResult red = rref(aug);
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == m.cols()) return std::nullopt;
  GfVector x(m.spec(), m.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    x.set(red.pivot_columns[i], red.reduced(i, m.cols()));
  }
  return x;
}

GfMatrix right_inverse(const GfMatrix& m) {
  const std::size_t rk = rank(m);
  if (rk < m.rows()) {
    throw RankDeficient("right inverse needs full row rank: rank " + std::to_string(rk) +
                        " < " + std::to_string(m.rows()));
  }
  GfMatrix b(m.spec(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto x = solve(m, GfVector::unit(m.spec(), m.rows(), i));
    for (std::size_t r = 0; r < m.cols(); ++r) b.set(r, i, (*x)[r]);
  }
  return b;
}

GfMatrix column_submatrix(const GfMatrix& m, std::size_t t, std::span<const std::size_t> columns) {
  if (t > m.rows()) throw ShapeError("column_submatrix: t exceeds row count");
  GfMatrix out(m.spec(), t, columns.size());
  for (std::size_t u = 0; u < columns.size(); ++u) {
    if (columns[u] >= m.cols()) throw ShapeError("column_submatrix: column index out of range");
    if (u > 0 && columns[u] <= columns[u - 1]) {
      throw ShapeError("column_submatrix: columns must be strictly increasing");
    }
    for (std::size_t k = 0; k < t; ++k) out.set(k, u, m(k, columns[u]));
  }
  return out;
}

bool is_nonsingular_by_columns(const GfMatrix& m) {
  if (m.rows() > m.cols()) throw ShapeError("non-singular by columns needs rows <= cols");
  for (std::size_t t = 1; t <= m.rows(); ++t) {
    bool ok = true;
    for_each_subset(m.cols(), t, [&](std::span<const std::size_t> cols) {
      if (ok && determinant(column_submatrix(m, t, cols)) == 0) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

GfMatrix nullspace(const GfMatrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;
  const FieldSpec f = m.spec();
  GfMatrix basis(f, m.cols() - red.rank, m.cols());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(out, free, 1);
    for (std::size_t i = 0; i < red.rank; ++i) {
      basis.set(out, red.pivot_columns[i], f.neg(red.reduced(i, free)));
    }
    ++out;
  }
  return basis;
}

std::size_t row_span_min_weight(const GfMatrix& m, std::uint64_t budget) {
  if (m.rows() == 0) throw ShapeError("row_span_min_weight of an empty row set");
  const std::uint64_t p = m.spec().modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    total *= p;
    if (total > budget) {
      throw BudgetExceeded("row span enumeration exceeds budget of " + std::to_string(budget));
    }
  }
  // Odometer over coefficient vectors: every digit step adds one row (p * row = 0).
  std::vector<Residue> digits(m.rows(), 0);
  GfVector acc(m.spec(), m.cols());
  std::size_t best = m.cols() + 1;
  for (std::uint64_t step = 1; step < total; ++step) {
    for (std::size_t d = 0; d < m.rows(); ++d) {
      acc.add_scaled(m.row(d), 1);
      digits[d] = (digits[d] + 1) % static_cast<Residue>(p);
      if (digits[d] != 0) break;
    }
    const std::size_t w = acc.weight();
    if (w > 0) best = std::min(best, w);
  }
  if (best > m.cols()) throw ShapeError("rows span only the zero vector");
  return best;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace mpc
