#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mpc/code.hpp"
#include "mpc/gfmatrix.hpp"

namespace mpc {

/// An m x l word of a matrix-product code, stored as its l column blocks
/// p_1..p_l (each of length m). Also used for received words and errors.
class MpcWord {
 public:
  MpcWord(FieldSpec f, std::size_t m, std::size_t l);
  explicit MpcWord(std::vector<GfVector> columns);

  FieldSpec spec() const noexcept { return columns_.front().spec(); }
  std::size_t m() const noexcept { return columns_.front().size(); }
  std::size_t l() const noexcept { return columns_.size(); }

  const GfVector& column(std::size_t i) const { return columns_.at(i); }
  GfVector& column(std::size_t i) { return columns_.at(i); }
  std::span<const GfVector> columns() const noexcept { return columns_; }

  std::size_t weight() const;
  bool is_zero() const;

  /// this * v = sum_j v_j p_j, the contraction onto one length-m block.
  GfVector contract(const GfVector& v) const;

  MpcWord& operator+=(const MpcWord& other);
  MpcWord& operator-=(const MpcWord& other);
  friend MpcWord operator+(MpcWord a, const MpcWord& b) { return a += b; }
  friend MpcWord operator-(MpcWord a, const MpcWord& b) { return a -= b; }
  friend bool operator==(const MpcWord&, const MpcWord&) = default;

 private:
  std::vector<GfVector> columns_;
};

std::size_t hamming_distance(const MpcWord& a, const MpcWord& b);

/// Column-major serialisation: p_1 followed by p_2 ... p_l.
GfVector flatten(const MpcWord& w);
/// Inverse of flatten; throws ShapeError unless m divides the length.
MpcWord unflatten(const GfVector& v, std::size_t m);

struct DesignedDistance {
  std::size_t value;                        // min_i d_i D_i
  std::vector<std::size_t> terms;           // d_i D_i
  std::optional<std::size_t> nsc_formula;   // min_i (l - i + 1) d_i, when A is NSC
};

/// [C_1 ... C_s] . A with A an s x l matrix of rank s.
class MatrixProductCode {
 public:
  MatrixProductCode(std::vector<LinearCode> codes, GfMatrix a);

  FieldSpec spec() const noexcept { return a_.spec(); }
  std::size_t s() const noexcept { return codes_.size(); }
  std::size_t l() const noexcept { return a_.cols(); }
  std::size_t m() const noexcept { return codes_.front().length(); }
  std::size_t length() const noexcept { return m() * l(); }
  /// sum of k_i
  std::size_t dimension() const noexcept;

  const std::vector<LinearCode>& codes() const noexcept { return codes_; }
  const LinearCode& code(std::size_t i) const { return codes_.at(i); }
  const GfMatrix& matrix() const noexcept { return a_; }
  bool nonsingular_by_columns() const noexcept { return nsc_; }
  /// D_i: minimum distance of the span of the first i rows of A.
  const std::vector<std::size_t>& row_distances() const noexcept { return row_distances_; }
  std::size_t designed_distance() const noexcept { return designed_.value; }
  const DesignedDistance& designed_distance_breakdown() const noexcept { return designed_; }
  /// floor((d_C - 1) / 2)
  std::size_t designed_radius() const noexcept { return (designed_.value - 1) / 2; }

  /// Column i of the result is sum_j a_{j,i} c_j. Throws NotInComponentCode.
  MpcWord encode(std::span<const GfVector> parts) const;
  /// Encodes without membership checks; for candidates already known to lie in C_i.
  MpcWord combine(std::span<const GfVector> parts) const;
  /// Splits a length sum(k_i) message into information vectors u_1..u_s and
  /// returns (u_1 G_1, ..., u_s G_s).
  std::vector<GfVector> encode_parts(const GfVector& message) const;

 private:
  std::vector<LinearCode> codes_;
  GfMatrix a_;
  bool nsc_ = false;
  std::vector<std::size_t> row_distances_;
  DesignedDistance designed_;
};

/// Builds one default-radius decoder per component.
std::vector<BoundedDecoder> default_decoders(const MatrixProductCode& c);

}  // namespace mpc
