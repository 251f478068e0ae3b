#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mpc/decoder.hpp"
#include "mpc/simulate.hpp"

namespace mpc::cli {

enum ExitCode : int { kOk = 0, kDecodeFailure = 1, kHypothesisFailure = 2, kInputError = 3 };

std::string read_text(const std::string& path);
MatrixProductCode load_code(const std::string& config_path, bool verify_distance);

int cmd_info(const MatrixProductCode& c, std::ostream& out);
int cmd_encode(const MatrixProductCode& c, const std::string& message, std::ostream& out);
int cmd_decode(const MatrixProductCode& c, Algorithm alg, DecodeMode mode, const std::string& received,
               std::ostream& out, std::ostream& err);
/// Writes the CSV header and one row.
int cmd_simulate(const MatrixProductCode& c, const SimulationSpec& spec, std::ostream& csv);
int cmd_worked_examples(std::ostream& out);

/// Full command line; `in` supplies words when no file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mpc::cli
