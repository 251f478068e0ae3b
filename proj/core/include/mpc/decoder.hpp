#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpc/product_code.hpp"

namespace mpc {

enum class Algorithm { Uuv, Ext1, Ext2 };
enum class DecodeMode { Unique, List };

std::string to_string(Algorithm a);
std::string to_string(DecodeMode m);
std::optional<Algorithm> parse_algorithm(const std::string& s);
std::optional<DecodeMode> parse_mode(const std::string& s);

struct DecodedWord {
  MpcWord word;
  std::vector<GfVector> parts;  // c_1..c_s
  std::size_t distance;         // d(r, word)
};

struct DecodeStats {
  std::vector<std::uint64_t> component_calls;  // invocations of DC_i, per component
  std::size_t radius = 0;                      // acceptance radius of the mode used
  bool ambiguous = false;                      // unique mode saw several passing candidates
  std::vector<std::string> warnings;
};

enum class OutcomeKind { Unique, List, Failure };

struct DecodeOutcome {
  OutcomeKind kind = OutcomeKind::Failure;
  std::vector<DecodedWord> words;  // one for Unique, closest first for List
  DecodeStats stats;
  std::string failure_reason;

  bool ok() const noexcept { return kind != OutcomeKind::Failure; }
  bool contains(const MpcWord& w) const;
};

/// One invocation of a component decoder, recorded when a trace is requested.
struct ComponentCall {
  std::size_t component;             // i, 0-based
  std::size_t candidate;             // candidate being extended (second extension)
  std::vector<std::size_t> columns;  // support J of the contraction vector, 0-based
  GfVector contraction;              // v, length l
  GfVector input;                    // r v passed to DC_i
  std::optional<GfVector> result;    // nullopt on failure
};

struct DecodeTrace {
  std::optional<GfMatrix> right_inverse;
  std::vector<ComponentCall> calls;
};

/// Right inverse B of A and its columns v_i = B w_i.
struct Ext1Plan {
  GfMatrix right_inverse;
  std::vector<GfVector> contractions;
};
Ext1Plan make_ext1_plan(const MatrixProductCode& c);

/// The weight <= i contraction vector v^{i)}_J: the unique solution of
/// A_J x = w_i embedded at the columns J. `size` is i (1-based level).
struct SubsetContraction {
  std::vector<std::size_t> columns;
  GfVector vector;
};
std::vector<SubsetContraction> subset_contractions(const MatrixProductCode& c, std::size_t size);

/// Empty when the algorithm's preconditions hold; otherwise one message per
/// failed hypothesis.
std::vector<std::string> hypothesis_violations(const MatrixProductCode& c, Algorithm alg,
                                               DecodeMode mode);

/// floor((l d_1 - 1) / 2) in unique mode, l t_1 + l/2 in list mode.
std::size_t acceptance_radius(const MatrixProductCode& c, DecodeMode mode);

/// First extension: right-inverse contractions recover c_s..c_2, then each
/// block r'_j / a_{1,j} is tried for c_1. Calls DC_i once for i >= 2 and DC_1
/// at most l times.
DecodeOutcome decode_ext1(const MatrixProductCode& c, std::span<const BoundedDecoder> decoders,
                          const MpcWord& received, DecodeMode mode, DecodeTrace* trace = nullptr);

/// Second extension: for i = s..1 every i-subset J of columns yields a
/// contraction vector; successful DC_i outputs extend a value-deduplicated
/// candidate set.
DecodeOutcome decode_ext2(const MatrixProductCode& c, std::span<const BoundedDecoder> decoders,
                          const MpcWord& received, DecodeMode mode, DecodeTrace* trace = nullptr);

/// (u|u+v) decoder. For s = l = 2 both extensions coincide; this checks the
/// s = l = 2 hypotheses and delegates to decode_ext1.
DecodeOutcome decode_uuv(const MatrixProductCode& c, std::span<const BoundedDecoder> decoders,
                         const MpcWord& received, DecodeMode mode, DecodeTrace* trace = nullptr);

DecodeOutcome decode(Algorithm alg, const MatrixProductCode& c,
                     std::span<const BoundedDecoder> decoders, const MpcWord& received,
                     DecodeMode mode, DecodeTrace* trace = nullptr);

inline constexpr std::uint64_t kBruteForceBudget = 1'000'000;

/// Every codeword of the MPC, materialised once for repeated exhaustive
/// nearest-codeword queries.
class Codebook {
 public:
  explicit Codebook(const MatrixProductCode& c, std::uint64_t budget = kBruteForceBudget);

  std::size_t size() const noexcept { return count_; }
  /// All codewords within `radius` of r, sorted by distance (enumeration
  /// order on ties).
  std::vector<DecodedWord> within(const MpcWord& r, std::size_t radius) const;
  /// Codeword number `index` of the enumeration.
  DecodedWord at(std::size_t index) const;

 private:
  MatrixProductCode code_;
  std::size_t count_ = 0;
  std::size_t length_ = 0;
  std::vector<Residue> flat_;                         // count_ x length_
  std::vector<std::vector<GfVector>> component_words_;  // per component, all codewords
};

/// Exhaustive oracle. Throws BudgetExceeded when p^(sum k_i) > budget.
std::vector<DecodedWord> brute_force_nearest(const MatrixProductCode& c, const MpcWord& received,
                                             std::size_t radius,
                                             std::uint64_t budget = kBruteForceBudget);

/// A column subset J with |J| = size and sum_{j in J} wt(e_j) < d/2, if any.
std::optional<std::vector<std::size_t>> find_good_subset(const MpcWord& error, std::size_t size,
                                                         std::size_t d);

}  // namespace mpc
