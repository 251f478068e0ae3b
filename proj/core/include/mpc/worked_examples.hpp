#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mpc/decoder.hpp"

// The two ternary length-26 worked examples: the first extension on
// [26,20,4] x [26,7,14] x [26,3,18] with a triangular A, and the second
// extension on [26,16,6] x [26,7,14] x [26,3,18].
namespace mpc::examples {

extern const std::string_view kFirstExtensionConfig;
extern const std::string_view kSecondExtensionConfig;

struct ExampleRun {
  std::string title;
  MatrixProductCode code;
  MpcWord received;
  DecodeOutcome outcome;
  DecodeTrace trace;
  std::vector<std::size_t> computed_distances;  // empty unless verified
};

ExampleRun run_first_extension(bool verify_distances = true);
ExampleRun run_second_extension(bool verify_distances = true);

struct Check {
  std::string label;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

std::vector<Check> check_first_extension(const ExampleRun& run);
std::vector<Check> check_second_extension(const ExampleRun& run);

/// Prints one line per check; returns true when all pass. The first
/// mismatch is called out by label.
bool print_checks(std::ostream& os, const std::string& title, const std::vector<Check>& checks);

/// Runs both examples and prints the transcript. Returns the number reproduced.
std::size_t write_transcript(std::ostream& os);

/// Polynomial notation: {{coefficient, exponent}, ...} as a length-m vector.
GfVector polynomial_word(FieldSpec f, std::size_t m,
                         std::initializer_list<std::pair<std::int64_t, std::size_t>> terms);

}  // namespace mpc::examples
