#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mpc/code.hpp"
#include "mpc/product_code.hpp"

namespace mpc {

/// Input error with a 1-based source location (0 when not applicable).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class CodeKind { Cyclic, Generator };

struct CodeDefinition {
  std::string name;
  CodeKind kind = CodeKind::Cyclic;
  std::size_t length = 0;
  Polynomial generator_poly;   // cyclic, ascending coefficients
  std::size_t dimension = 0;   // generator
  std::vector<Residue> rows;   // generator, k x m row-major
  std::size_t line = 0;        // not part of equality

  friend bool operator==(const CodeDefinition& a, const CodeDefinition& b) {
    return a.name == b.name && a.kind == b.kind && a.length == b.length &&
           a.generator_poly == b.generator_poly && a.dimension == b.dimension && a.rows == b.rows;
  }
};

struct CodeConfig {
  Residue modulus = 0;
  std::vector<CodeDefinition> codes;                // C_1..C_s in declaration order
  std::map<std::string, std::size_t> distances;     // declared d, by code name
  std::map<std::string, std::size_t> distance_lines;
  std::size_t matrix_rows = 0;
  std::size_t matrix_cols = 0;
  std::vector<Residue> matrix;                      // s x l row-major

  friend bool operator==(const CodeConfig& a, const CodeConfig& b) {
    return a.modulus == b.modulus && a.codes == b.codes && a.distances == b.distances &&
           a.matrix_rows == b.matrix_rows && a.matrix_cols == b.matrix_cols && a.matrix == b.matrix;
  }
};

/// Parses and validates the line-oriented config format:
///
///   field P
///   code NAME cyclic N genpoly g0 g1 ... gdeg     (rest of the line)
///   code NAME generator M K rows v11 ... vKM      (K*M tokens, may span lines)
///   distance NAME D
///   matrix S L
///   a11 ... aSL                                    (S*L tokens)
///
/// '#' starts a comment. Codes become C_1..C_s in declaration order.
CodeConfig parse_config(std::string_view text);

std::string render_config(const CodeConfig& config);

/// Builds the matrix-product code. Codes without a declared distance get it
/// computed; with `verify_distance`, declared distances are recomputed and
/// must agree.
MatrixProductCode build_code(const CodeConfig& config, bool verify_distance = false);

/// Whitespace-separated decimal symbols in 0..p-1.
GfVector parse_symbols(std::string_view text, FieldSpec f);

}  // namespace mpc
