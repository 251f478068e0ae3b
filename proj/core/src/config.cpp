#include "mpc/config.hpp"

#include <charconv>
#include <optional>
#include <set>
#include <sstream>

namespace mpc {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(line ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                       message
                 : message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++i;
      ++col;
    } else {
      const std::size_t start = i, start_col = col;
      while (i < text.size() && text[i] != '\n' && text[i] != '#' && text[i] != ' ' &&
             text[i] != '\t' && text[i] != '\r') {
        ++i;
        ++col;
      }
      out.push_back({text.substr(start, i - start), line, start_col});
    }
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  std::size_t last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }

  const Token& next(const char* what) {
    if (done()) throw ParseError(last_line(), 1, std::string("unexpected end of input, expected ") + what);
    return tokens_[pos_++];
  }

  std::uint64_t number(const char* what) {
    const Token& t = next(what);
    return to_number(t, what);
  }

  void keyword(const char* kw) {
    const Token& t = next(kw);
    if (t.text != kw) {
      throw ParseError(t.line, t.column, "expected '" + std::string(kw) + "', found '" +
                                             std::string(t.text) + "'");
    }
  }

  bool at_line(std::size_t line) const { return !done() && peek().line == line; }

  static std::uint64_t to_number(const Token& t, const char* what) {
    std::uint64_t v = 0;
    const auto* end = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(t.text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      throw ParseError(t.line, t.column,
                       std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
    }
    return v;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Residue symbol(const Token& t, Residue p, const char* what) {
  const std::uint64_t v = Cursor::to_number(t, what);
  if (v >= p) {
    throw ParseError(t.line, t.column,
                     std::string(what) + " " + std::to_string(v) + " is not in 0.." + std::to_string(p - 1));
  }
  return static_cast<Residue>(v);
}

}  // namespace

CodeConfig parse_config(std::string_view text) {
  Cursor cur(tokenize(text));
  CodeConfig cfg;
  std::optional<FieldSpec> field;
  bool have_matrix = false;
  std::size_t matrix_line = 0;
  std::set<std::string> names;

  while (!cur.done()) {
    const Token& kw = cur.next("directive");
    if (kw.text == "field") {
      if (field) throw ParseError(kw.line, kw.column, "duplicate 'field' directive");
      const Token& t = cur.next("field modulus");
      const std::uint64_t p = Cursor::to_number(t, "field modulus");
      if (p > FieldSpec::kMaxModulus) throw ParseError(t.line, t.column, "modulus exceeds 2^16");
      try {
        field.emplace(static_cast<Residue>(p));
      } catch (const InvalidModulus&) {
        throw ParseError(t.line, t.column, "modulus not prime: " + std::to_string(p));
      }
      cfg.modulus = static_cast<Residue>(p);
    } else if (kw.text == "code") {
      if (!field) throw ParseError(kw.line, kw.column, "'field' must precede 'code'");
      const Residue p = field->modulus();
      CodeDefinition def;
      def.line = kw.line;
      const Token& name = cur.next("code name");
      def.name = std::string(name.text);
      if (!names.insert(def.name).second) {
        throw ParseError(name.line, name.column, "duplicate code name '" + def.name + "'");
      }
      const Token& kind = cur.next("'cyclic' or 'generator'");
      if (kind.text == "cyclic") {
        def.kind = CodeKind::Cyclic;
        def.length = cur.number("code length");
        cur.keyword("genpoly");
        const std::size_t line = kw.line;
        while (cur.at_line(line)) def.generator_poly.push_back(symbol(cur.next("coefficient"), p, "coefficient"));
        if (def.generator_poly.empty()) {
          throw ParseError(kw.line, kw.column, "cyclic code '" + def.name + "' has no genpoly coefficients");
        }
        try {
          Polynomial xn1(def.length + 1, 0);
          xn1[0] = p - 1;
          xn1[def.length] = 1;
          const auto div = poly_divmod(*field, xn1, def.generator_poly);
          Polynomial g = def.generator_poly;
          while (!g.empty() && g.back() == 0) g.pop_back();
          if (g.empty() || g.size() - 1 >= def.length || !div.remainder.empty()) {
            throw NotADivisor("");
          }
        } catch (const Error&) {
          throw ParseError(kw.line, kw.column, "genpoly of '" + def.name + "' does not divide x^" +
                                                   std::to_string(def.length) + " - 1");
        }
      } else if (kind.text == "generator") {
        def.kind = CodeKind::Generator;
        def.length = cur.number("code length");
        def.dimension = cur.number("code dimension");
        if (def.dimension == 0 || def.dimension > def.length) {
          throw ParseError(kind.line, kind.column, "generator dimension must be in 1..length");
        }
        cur.keyword("rows");
        for (std::size_t i = 0; i < def.dimension * def.length; ++i) {
          def.rows.push_back(symbol(cur.next("generator entry"), p, "generator entry"));
        }
        const std::size_t rk = rank([&] {
          GfMatrix g(*field, def.dimension, def.length);
          for (std::size_t i = 0; i < def.rows.size(); ++i) g.set(i / def.length, i % def.length, def.rows[i]);
          return g;
        }());
        if (rk != def.dimension) {
          throw ParseError(kw.line, kw.column, "generator of '" + def.name + "' has rank " +
                                                   std::to_string(rk) + " < " + std::to_string(def.dimension));
        }
      } else {
        throw ParseError(kind.line, kind.column, "expected 'cyclic' or 'generator', found '" +
                                                     std::string(kind.text) + "'");
      }
      if (!cfg.codes.empty() && cfg.codes.front().length != def.length) {
        throw ParseError(kw.line, kw.column, "code '" + def.name + "' has length " +
                                                 std::to_string(def.length) + ", expected " +
                                                 std::to_string(cfg.codes.front().length));
      }
      cfg.codes.push_back(std::move(def));
    } else if (kw.text == "distance") {
      const Token& name = cur.next("code name");
      const std::size_t d = cur.number("distance");
      if (d == 0) throw ParseError(name.line, name.column, "distance must be at least 1");
      const std::string n(name.text);
      if (!cfg.distances.emplace(n, d).second) {
        throw ParseError(name.line, name.column, "duplicate distance for '" + n + "'");
      }
      cfg.distance_lines[n] = kw.line;
    } else if (kw.text == "matrix") {
      if (!field) throw ParseError(kw.line, kw.column, "'field' must precede 'matrix'");
      if (have_matrix) throw ParseError(kw.line, kw.column, "duplicate 'matrix' directive");
      have_matrix = true;
      matrix_line = kw.line;
      cfg.matrix_rows = cur.number("matrix rows");
      cfg.matrix_cols = cur.number("matrix columns");
      if (cfg.matrix_rows == 0 || cfg.matrix_cols == 0) {
        throw ParseError(kw.line, kw.column, "matrix dimensions must be positive");
      }
      for (std::size_t i = 0; i < cfg.matrix_rows * cfg.matrix_cols; ++i) {
        cfg.matrix.push_back(symbol(cur.next("matrix entry"), field->modulus(), "matrix entry"));
      }
    } else {
      throw ParseError(kw.line, kw.column, "unknown directive '" + std::string(kw.text) + "'");
    }
  }

  if (!field) throw ParseError(1, 1, "missing 'field' directive");
  if (cfg.codes.empty()) throw ParseError(cur.last_line(), 1, "no 'code' directives");
  if (!have_matrix) throw ParseError(cur.last_line(), 1, "missing 'matrix' directive");
  for (const auto& [name, d] : cfg.distances) {
    if (!names.count(name)) {
      throw ParseError(cfg.distance_lines[name], 1, "distance for unknown code '" + name + "'");
    }
  }
  if (cfg.matrix_rows != cfg.codes.size()) {
    throw ParseError(matrix_line, 1, "matrix has " + std::to_string(cfg.matrix_rows) +
                                         " rows but " + std::to_string(cfg.codes.size()) +
                                         " codes are defined");
  }
  if (cfg.matrix_rows > cfg.matrix_cols) throw ParseError(matrix_line, 1, "matrix needs s <= l");
  GfMatrix a(*field, cfg.matrix_rows, cfg.matrix_cols);
  for (std::size_t i = 0; i < cfg.matrix.size(); ++i) a.set(i / cfg.matrix_cols, i % cfg.matrix_cols, cfg.matrix[i]);
  if (rank(a) != cfg.matrix_rows) throw ParseError(matrix_line, 1, "matrix does not have full row rank");
  return cfg;
}

std::string render_config(const CodeConfig& cfg) {
  std::ostringstream os;
  os << "field " << cfg.modulus << "\n";
  for (const auto& def : cfg.codes) {
    os << "code " << def.name;
    if (def.kind == CodeKind::Cyclic) {
      os << " cyclic " << def.length << " genpoly";
      for (auto c : def.generator_poly) os << ' ' << c;
      os << "\n";
    } else {
      os << " generator " << def.length << ' ' << def.dimension << " rows\n";
      for (std::size_t r = 0; r < def.dimension; ++r) {
        os << " ";
        for (std::size_t c = 0; c < def.length; ++c) os << ' ' << def.rows[r * def.length + c];
        os << "\n";
      }
    }
  }
  for (const auto& def : cfg.codes) {
    auto it = cfg.distances.find(def.name);
    if (it != cfg.distances.end()) os << "distance " << def.name << ' ' << it->second << "\n";
  }
  os << "matrix " << cfg.matrix_rows << ' ' << cfg.matrix_cols << "\n";
  for (std::size_t r = 0; r < cfg.matrix_rows; ++r) {
    for (std::size_t c = 0; c < cfg.matrix_cols; ++c) {
      os << (c ? " " : "") << cfg.matrix[r * cfg.matrix_cols + c];
    }
    os << "\n";
  }
  return os.str();
}

MatrixProductCode build_code(const CodeConfig& cfg, bool verify_distance) {
  const FieldSpec f(cfg.modulus);
  std::vector<LinearCode> codes;
  for (const auto& def : cfg.codes) {
    std::optional<std::size_t> declared;
    if (auto it = cfg.distances.find(def.name); it != cfg.distances.end()) declared = it->second;
    try {
      LinearCode code = [&] {
        if (def.kind == CodeKind::Cyclic) return LinearCode::cyclic(f, def.length, def.generator_poly, declared);
        GfMatrix g(f, def.dimension, def.length);
        for (std::size_t i = 0; i < def.rows.size(); ++i) g.set(i / def.length, i % def.length, def.rows[i]);
        return LinearCode::from_generator(std::move(g), declared);
      }();
      if (declared && verify_distance) {
        const std::size_t actual = min_distance(code);
        if (actual != *declared) {
          throw ParseError(cfg.distance_lines.count(def.name) ? cfg.distance_lines.at(def.name) : def.line, 1,
                           "declared distance of '" + def.name + "' is " + std::to_string(*declared) +
                               " but the code has minimum distance " + std::to_string(actual));
        }
      }
      codes.push_back(std::move(code));
    } catch (const ParseError&) {
      throw;
    } catch (const BudgetExceeded& e) {
      throw ParseError(def.line, 1, "cannot compute the distance of '" + def.name + "' (" + e.what() +
                                        "); declare it with 'distance " + def.name + " D'");
    } catch (const Error& e) {
      throw ParseError(def.line, 1, "code '" + def.name + "': " + e.what());
    }
  }
  GfMatrix a(f, cfg.matrix_rows, cfg.matrix_cols);
  for (std::size_t i = 0; i < cfg.matrix.size(); ++i) a.set(i / cfg.matrix_cols, i % cfg.matrix_cols, cfg.matrix[i]);
  return MatrixProductCode(std::move(codes), std::move(a));
}

GfVector parse_symbols(std::string_view text, FieldSpec f) {
  std::vector<Residue> out;
  for (const Token& t : tokenize(text)) out.push_back(symbol(t, f.modulus(), "symbol"));
  return {f, std::move(out)};
}

}  // namespace mpc
