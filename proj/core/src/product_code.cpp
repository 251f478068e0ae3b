#include "mpc/product_code.hpp"

#include <algorithm>

namespace mpc {

MpcWord::MpcWord(FieldSpec f, std::size_t m, std::size_t l) : columns_(l, GfVector(f, m)) {
  if (l == 0) throw ShapeError("word needs at least one column");
}

MpcWord::MpcWord(std::vector<GfVector> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw ShapeError("word needs at least one column");
  for (const auto& c : columns_) {
    if (!(c.spec() == columns_.front().spec())) throw FieldMismatch();
    if (c.size() != columns_.front().size()) throw ShapeError("ragged word columns");
  }
}

std::size_t MpcWord::weight() const {
  std::size_t w = 0;
  for (const auto& c : columns_) w += c.weight();
  return w;
}

bool MpcWord::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const GfVector& c) { return c.is_zero(); });
}

GfVector MpcWord::contract(const GfVector& v) const {
  if (v.size() != l()) throw ShapeError("contraction vector length must equal l");
  GfVector out(spec(), m());
  for (std::size_t j = 0; j < l(); ++j) out.add_scaled(columns_[j], v[j]);
  return out;
}

MpcWord& MpcWord::operator+=(const MpcWord& other) {
  if (other.l() != l()) throw ShapeError("word column count mismatch");
  for (std::size_t j = 0; j < l(); ++j) columns_[j] += other.columns_[j];
  return *this;
}

MpcWord& MpcWord::operator-=(const MpcWord& other) {
  if (other.l() != l()) throw ShapeError("word column count mismatch");
  for (std::size_t j = 0; j < l(); ++j) columns_[j] -= other.columns_[j];
  return *this;
}

std::size_t hamming_distance(const MpcWord& a, const MpcWord& b) {
  if (a.l() != b.l()) throw ShapeError("word column count mismatch");
  std::size_t d = 0;
  for (std::size_t j = 0; j < a.l(); ++j) d += hamming_distance(a.column(j), b.column(j));
  return d;
}

GfVector flatten(const MpcWord& w) {
  std::vector<Residue> out;
  out.reserve(w.m() * w.l());
  for (const auto& c : w.columns()) out.insert(out.end(), c.values().begin(), c.values().end());
  return {w.spec(), std::move(out)};
}

MpcWord unflatten(const GfVector& v, std::size_t m) {
  if (m == 0 || v.size() == 0 || v.size() % m != 0) {
    throw ShapeError("word length " + std::to_string(v.size()) + " is not a multiple of m = " +
                     std::to_string(m));
  }
  std::vector<GfVector> cols;
  for (std::size_t j = 0; j < v.size() / m; ++j) {
    cols.emplace_back(v.spec(), std::vector<Residue>(v.values().begin() + j * m,
                                                     v.values().begin() + (j + 1) * m));
  }
  return MpcWord(std::move(cols));
}

// ------------------------------------------------------------------ MPC

MatrixProductCode::MatrixProductCode(std::vector<LinearCode> codes, GfMatrix a)
    : codes_(std::move(codes)), a_(std::move(a)), designed_{0, {}, std::nullopt} {
  if (codes_.empty()) throw ShapeError("matrix-product code needs at least one component");
  for (const auto& c : codes_) {
    if (!(c.spec() == a_.spec())) throw FieldMismatch("component codes and A use different fields");
    if (c.length() != codes_.front().length()) {
      throw ShapeError("component codes must share one length");
    }
  }
  if (a_.rows() != codes_.size()) {
    throw ShapeError("A has " + std::to_string(a_.rows()) + " rows but there are " +
                     std::to_string(codes_.size()) + " component codes");
  }
  if (a_.rows() > a_.cols()) throw ShapeError("A must satisfy s <= l");
  const std::size_t rk = rank(a_);
  if (rk != a_.rows()) {
    throw RankDeficient("A has rank " + std::to_string(rk) + " < s = " + std::to_string(a_.rows()));
  }

  nsc_ = is_nonsingular_by_columns(a_);
  for (std::size_t i = 1; i <= s(); ++i) {
    row_distances_.push_back(row_span_min_weight(a_.top_rows(i)));
  }

  std::size_t best = static_cast<std::size_t>(-1);
  std::size_t nsc_best = static_cast<std::size_t>(-1);
  for (std::size_t i = 0; i < s(); ++i) {
    const std::size_t term = codes_[i].distance() * row_distances_[i];
    designed_.terms.push_back(term);
    best = std::min(best, term);
    nsc_best = std::min(nsc_best, (l() - i) * codes_[i].distance());
  }
  designed_.value = best;
  if (nsc_) designed_.nsc_formula = nsc_best;
}

std::size_t MatrixProductCode::dimension() const noexcept {
  std::size_t k = 0;
  for (const auto& c : codes_) k += c.dimension();
  return k;
}

MpcWord MatrixProductCode::combine(std::span<const GfVector> parts) const {
  if (parts.size() != s()) {
    throw ShapeError("expected " + std::to_string(s()) + " component words, got " +
                     std::to_string(parts.size()));
  }
  MpcWord out(spec(), m(), l());
  for (std::size_t col = 0; col < l(); ++col) {
    for (std::size_t j = 0; j < s(); ++j) out.column(col).add_scaled(parts[j], a_(j, col));
  }
  return out;
}

MpcWord MatrixProductCode::encode(std::span<const GfVector> parts) const {
  if (parts.size() != s()) {
    throw ShapeError("expected " + std::to_string(s()) + " component words, got " +
                     std::to_string(parts.size()));
  }
  for (std::size_t i = 0; i < s(); ++i) {
    if (!codes_[i].contains(parts[i])) {
      throw NotInComponentCode(i, "component word " + std::to_string(i + 1) +
                                      " is not a codeword of C" + std::to_string(i + 1));
    }
  }
  return combine(parts);
}

std::vector<GfVector> MatrixProductCode::encode_parts(const GfVector& message) const {
  if (message.size() != dimension()) {
    throw ShapeError("message length " + std::to_string(message.size()) + " != sum of k_i = " +
                     std::to_string(dimension()));
  }
  std::vector<GfVector> parts;
  std::size_t offset = 0;
  for (const auto& c : codes_) {
    std::vector<Residue> info(message.values().begin() + offset,
                              message.values().begin() + offset + c.dimension());
    offset += c.dimension();
    parts.push_back(c.encode(GfVector(spec(), std::move(info))));
  }
  return parts;
}

std::vector<BoundedDecoder> default_decoders(const MatrixProductCode& c) {
  std::vector<BoundedDecoder> out;
  out.reserve(c.s());
  for (const auto& code : c.codes()) out.emplace_back(code);
  return out;
}

}  // namespace mpc
