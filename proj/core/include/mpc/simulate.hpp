#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mpc/decoder.hpp"

namespace mpc {

/// splitmix64
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() noexcept;
  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

/// Independent per-trial stream seed derived from (master seed, trial index).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept;

struct Trial {
  std::vector<GfVector> parts;
  MpcWord sent;
  MpcWord error;
};

/// Uniform codeword (uniform information vectors) plus a uniform error of
/// exact weight: uniform support of that size, uniform nonzero values.
Trial sample_trial(const MatrixProductCode& c, std::size_t weight, std::uint64_t seed,
                   std::uint64_t trial);

struct SimulationSpec {
  Algorithm algorithm = Algorithm::Ext1;
  DecodeMode mode = DecodeMode::Unique;
  std::size_t weight = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct SimReport {
  Algorithm algorithm;
  DecodeMode mode;
  std::size_t weight;
  std::uint64_t trials;
  std::uint64_t unique_ok = 0;   // exactly one codeword returned, the sent one
  std::uint64_t list_ok = 0;     // sent codeword among the returned ones
  std::uint64_t multi_list = 0;  // two or more codewords returned
  std::uint64_t failures = 0;    // trials - list_ok
  std::vector<std::uint64_t> component_calls;  // totals per component
  std::uint64_t seed;

  double mean_calls(std::size_t component) const;
  /// Mean of sum_{i >= 2} DC_i calls per trial.
  double mean_higher_calls() const;
};

/// Runs the trials on `spec.threads` workers. Results depend only on the
/// code, the spec fields other than `threads`, and the seed.
SimReport simulate(const MatrixProductCode& c, std::span<const BoundedDecoder> decoders,
                   const SimulationSpec& spec);

std::string csv_header();
std::string csv_row(const SimReport& r);

}  // namespace mpc
