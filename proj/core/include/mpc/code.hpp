#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mpc/gfmatrix.hpp"

namespace mpc {

/// Polynomials are coefficient vectors in ascending order (constant first).
using Polynomial = std::vector<Residue>;

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;  // trimmed; empty means zero
};

/// Long division in GF(p)[x]. Throws DivisionByZero for a zero divisor.
PolyDivision poly_divmod(FieldSpec f, const Polynomial& num, const Polynomial& den);

enum class CodeOrigin { Generator, Cyclic };

inline constexpr std::uint64_t kMinDistanceBudget = 100'000'000;

/// A linear [m, k, d] code over GF(p) with generator G (k x m, full rank)
/// and parity check H ((m - k) x m) such that G H^T = 0.
class LinearCode {
 public:
  /// d is computed with min_distance() unless declared. A declared d is
  /// trusted, apart from the cheap check that no generator row is lighter.
  static LinearCode from_generator(GfMatrix generator,
                                   std::optional<std::size_t> declared_distance = {});

  /// Cyclic code of length n generated by g (ascending). g must divide
  /// x^n - 1, otherwise NotADivisor.
  static LinearCode cyclic(FieldSpec f, std::size_t n, const Polynomial& generator_poly,
                           std::optional<std::size_t> declared_distance = {});

  FieldSpec spec() const noexcept { return generator_.spec(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return generator_.rows(); }
  std::size_t distance() const noexcept { return distance_; }
  /// floor((d - 1) / 2)
  std::size_t correction_capability() const noexcept { return (distance_ - 1) / 2; }
  const GfMatrix& generator() const noexcept { return generator_; }
  const GfMatrix& parity_check() const noexcept { return parity_check_; }
  CodeOrigin origin() const noexcept { return origin_; }
  /// Empty for codes built from an explicit generator matrix.
  const Polynomial& generator_polynomial() const noexcept { return generator_poly_; }

  bool contains(const GfVector& w) const;
  GfVector syndrome(const GfVector& w) const;
  /// info (length k) times G.
  GfVector encode(const GfVector& info) const;

 private:
  LinearCode(GfMatrix g, GfMatrix h, CodeOrigin origin, Polynomial poly)
      : generator_(std::move(g)), parity_check_(std::move(h)), origin_(origin),
        generator_poly_(std::move(poly)) {}
  void settle_distance(std::optional<std::size_t> declared);

  GfMatrix generator_;
  GfMatrix parity_check_;
  CodeOrigin origin_;
  Polynomial generator_poly_;
  std::size_t distance_ = 0;
};

/// Exact minimum distance by enumerating all p^k codewords.
std::size_t min_distance_by_enumeration(const LinearCode& c, std::uint64_t budget = kMinDistanceBudget);
/// Exact minimum distance by searching error patterns of increasing weight
/// for a nonzero vector with zero syndrome.
std::size_t min_distance_by_weight_search(const LinearCode& c,
                                          std::uint64_t budget = kMinDistanceBudget);
/// Picks enumeration when p^k fits the budget, weight search otherwise.
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kMinDistanceBudget);

/// Calls visit(codeword) for every codeword (including zero), in odometer
/// order over information vectors. Returns false if visit asked to stop.
template <typename Visit>
bool for_each_codeword(const LinearCode& c, Visit&& visit);

enum class DecodeStrategy { Auto, CodewordScan, ErrorPatternScan };

inline constexpr std::uint64_t kCodewordScanBudget = 1'000'000;
inline constexpr std::uint64_t kPatternScanBudget = 100'000'000;

/// Bounded-distance decoder: returns the unique codeword within `radius`
/// of the input, or nullopt. The radius is capped at floor((d - 1) / 2).
class BoundedDecoder {
 public:
  explicit BoundedDecoder(LinearCode code, std::optional<std::size_t> radius = {},
                          DecodeStrategy strategy = DecodeStrategy::Auto);
  BoundedDecoder(const BoundedDecoder& other);
  BoundedDecoder(BoundedDecoder&& other) noexcept;
  BoundedDecoder& operator=(const BoundedDecoder&) = delete;
  BoundedDecoder& operator=(BoundedDecoder&&) = delete;

  std::optional<GfVector> decode(const GfVector& w) const;

  const LinearCode& code() const noexcept { return code_; }
  std::size_t radius() const noexcept { return radius_; }
  DecodeStrategy strategy() const noexcept { return strategy_; }
  std::uint64_t calls() const noexcept { return calls_.load(std::memory_order_relaxed); }
  void reset_calls() noexcept { calls_.store(0, std::memory_order_relaxed); }

 private:
  std::optional<GfVector> scan_codewords(const GfVector& w) const;
  std::optional<GfVector> scan_error_patterns(const GfVector& w) const;

  LinearCode code_;
  std::size_t radius_;
  DecodeStrategy strategy_;
  // Column j of H, flattened: h_columns_[j * (m - k) + r] = H(r, j).
  std::vector<Residue> h_columns_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

/// Number of weight-w error patterns for w = 0..radius over length m.
std::uint64_t pattern_count(std::uint64_t p, std::size_t m, std::size_t radius);

// ------------------------------------------------------------------ inline

template <typename Visit>
bool for_each_codeword(const LinearCode& c, Visit&& visit) {
  const GfMatrix& g = c.generator();
  const Residue p = c.spec().modulus();
  std::vector<GfVector> rows;
  rows.reserve(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i) rows.push_back(g.row(i));
  std::vector<Residue> digits(g.rows(), 0);
  GfVector acc(c.spec(), g.cols());
  while (true) {
    if (!visit(static_cast<const GfVector&>(acc))) return false;
    std::size_t d = 0;
    for (; d < rows.size(); ++d) {
      acc += rows[d];
      digits[d] = (digits[d] + 1) % p;
      if (digits[d] != 0) break;
    }
    if (d == rows.size()) return true;
  }
}

}  // namespace mpc
