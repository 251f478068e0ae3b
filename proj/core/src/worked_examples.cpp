#include "mpc/worked_examples.hpp"

#include <ostream>

#include "mpc/config.hpp"

namespace mpc::examples {

// Generator polynomials are written with ascending coefficients.
const std::string_view kFirstExtensionConfig = R"(# [26,20,4] x [26,7,14] x [26,3,18] over F_3, triangular A
field 3
code C1 cyclic 26 genpoly 2 1 1 2 2 1 1
code C2 cyclic 26 genpoly 2 0 0 1 1 0 1 2 2 0 0 1 2 1 2 1 0 1 1 1
code C3 cyclic 26 genpoly 1 0 1 1 1 2 2 0 1 2 1 0 0 1 0 1 1 1 2 2 0 1 2 1
distance C1 4
distance C2 14
distance C3 18
matrix 3 3
1 1 1
0 1 2
0 0 1
)";

const std::string_view kSecondExtensionConfig = R"(# [26,16,6] x [26,7,14] x [26,3,18] over F_3
field 3
code C1 cyclic 26 genpoly 2 1 2 1 2 0 0 2 0 0 1
code C2 cyclic 26 genpoly 2 0 0 1 1 0 1 2 2 0 0 1 2 1 2 1 0 1 1 1
code C3 cyclic 26 genpoly 1 0 1 1 1 2 2 0 1 2 1 0 0 1 0 1 1 1 2 2 0 1 2 1
distance C1 6
distance C2 14
distance C3 18
matrix 3 3
1 1 1
0 1 2
1 0 1
)";

GfVector polynomial_word(FieldSpec f, std::size_t m,
                         std::initializer_list<std::pair<std::int64_t, std::size_t>> terms) {
  GfVector v(f, m);
  for (const auto& [coef, exp] : terms) v.set(exp, f.add(v[exp], f.reduce(coef)));
  return v;
}

namespace {

ExampleRun run(std::string title, std::string_view config, MpcWord error, Algorithm alg,
               bool verify) {
  MatrixProductCode code = build_code(parse_config(config));
  std::vector<std::size_t> distances;
  if (verify) {
    for (const auto& c : code.codes()) distances.push_back(min_distance(c));
  }
  const auto decoders = default_decoders(code);
  DecodeTrace trace;
  const MpcWord received = code.combine(std::vector<GfVector>(code.s(), GfVector(code.spec(), code.m()))) + error;
  DecodeOutcome outcome = decode(alg, code, decoders, received, DecodeMode::Unique, &trace);
  return {std::move(title), std::move(code), received, std::move(outcome), std::move(trace),
          std::move(distances)};
}

std::string str(std::size_t v) { return std::to_string(v); }

std::string list(const std::vector<std::size_t>& v, std::size_t offset = 0) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i] + offset);
  return out + ")";
}

std::string vec(const GfVector& v) {
  std::vector<std::size_t> tmp(v.values().begin(), v.values().end());
  return list(tmp);
}

std::string mat(const GfMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) out += (r ? "," : "") + vec(m.row(r));
  return out + "]";
}

std::string result(const std::optional<GfVector>& r) {
  if (!r) return "failure";
  return r->is_zero() ? "zero codeword" : "codeword " + to_string(*r);
}

std::string set_label(const std::vector<std::size_t>& cols) {
  std::string out = "{";
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + std::to_string(cols[i] + 1);
  return out + "}";
}

void outcome_checks(std::vector<Check>& checks, const ExampleRun& r, std::size_t corrected) {
  const bool unique = r.outcome.kind == OutcomeKind::Unique;
  checks.push_back({"outcome", "unique", unique ? "unique" : r.outcome.failure_reason});
  checks.push_back({"decoded codeword", "zero",
                    unique && r.outcome.words[0].word.is_zero() ? "zero" : "nonzero"});
  checks.push_back({"corrected symbols", str(corrected),
                    unique ? str(r.outcome.words[0].distance) : "n/a"});
}

void distance_checks(std::vector<Check>& checks, const ExampleRun& r,
                     const std::vector<std::size_t>& expected) {
  if (r.computed_distances.empty()) return;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    checks.push_back({"min distance of C" + str(i + 1), str(expected[i]), str(r.computed_distances[i])});
  }
}

void call_check(std::vector<Check>& checks, const ExampleRun& r, std::size_t index,
                std::size_t component, const std::vector<std::size_t>& columns,
                const GfVector& contraction, const GfVector& input,
                const std::optional<GfVector>& expected_result) {
  const std::string prefix = "DC" + str(component + 1) + " call, J=" + set_label(columns);
  if (index >= r.trace.calls.size()) {
    checks.push_back({prefix, "present", "missing"});
    return;
  }
  const ComponentCall& call = r.trace.calls[index];
  checks.push_back({prefix + " component", "C" + str(component + 1), "C" + str(call.component + 1)});
  checks.push_back({prefix + " subset", set_label(columns), set_label(call.columns)});
  checks.push_back({prefix + " contraction vector", vec(contraction), vec(call.contraction)});
  checks.push_back({prefix + " input", to_string(input), to_string(call.input)});
  checks.push_back({prefix + " result", result(expected_result), result(call.result)});
}

}  // namespace

ExampleRun run_first_extension(bool verify_distances) {
  const FieldSpec f(3);
  MpcWord e({polynomial_word(f, 26, {{1, 0}, {1, 1}}), polynomial_word(f, 26, {{2, 2}, {1, 7}}),
             polynomial_word(f, 26, {{2, 11}})});
  return run("first extension example", kFirstExtensionConfig, std::move(e), Algorithm::Ext1,
             verify_distances);
}

ExampleRun run_second_extension(bool verify_distances) {
  const FieldSpec f(3);
  MpcWord e({polynomial_word(f, 26, {{1, 0}, {1, 1}, {1, 2}}),
             polynomial_word(f, 26, {{1, 0}, {2, 2}, {1, 7}}),
             polynomial_word(f, 26, {{1, 5}, {2, 11}})});
  return run("second extension example", kSecondExtensionConfig, std::move(e), Algorithm::Ext2,
             verify_distances);
}

std::vector<Check> check_first_extension(const ExampleRun& r) {
  const FieldSpec f(3);
  const std::size_t m = 26;
  const GfVector zero(f, m);
  std::vector<Check> checks;
  distance_checks(checks, r, {4, 14, 18});
  checks.push_back({"row distances D", "(3,2,1)", list(r.code.row_distances())});
  checks.push_back({"A non-singular by columns", "yes", r.code.nonsingular_by_columns() ? "yes" : "no"});
  checks.push_back({"designed distance d_C", "12", str(r.code.designed_distance())});
  checks.push_back({"designed radius t", "5", str(r.code.designed_radius())});
  const GfMatrix b(f, {{1, 2, 1}, {0, 1, 1}, {0, 0, 1}});
  checks.push_back({"right inverse B", mat(b),
                    r.trace.right_inverse ? mat(*r.trace.right_inverse) : "missing"});

  const GfVector rv3 = polynomial_word(f, m, {{1, 0}, {1, 1}, {2, 2}, {1, 7}, {2, 11}});
  const GfVector rv2 = polynomial_word(f, m, {{2, 0}, {2, 1}, {2, 2}, {1, 7}});
  call_check(checks, r, 0, 2, {0, 1, 2}, GfVector(f, {1, 1, 1}), rv3, zero);
  call_check(checks, r, 1, 1, {0, 1}, GfVector(f, {2, 1, 0}), rv2, zero);
  call_check(checks, r, 2, 0, {0}, GfVector(f, {1, 0, 0}), r.received.column(0), std::nullopt);
  call_check(checks, r, 3, 0, {1}, GfVector(f, {0, 1, 0}), r.received.column(1), std::nullopt);
  call_check(checks, r, 4, 0, {2}, GfVector(f, {0, 0, 1}), r.received.column(2), zero);
  checks.push_back({"component decoder calls", "(3,1,1)",
                    list(std::vector<std::size_t>(r.outcome.stats.component_calls.begin(),
                                                  r.outcome.stats.component_calls.end()))});
  outcome_checks(checks, r, 5);
  return checks;
}

std::vector<Check> check_second_extension(const ExampleRun& r) {
  const FieldSpec f(3);
  const std::size_t m = 26;
  const GfVector zero(f, m);
  std::vector<Check> checks;
  distance_checks(checks, r, {6, 14, 18});
  checks.push_back({"A non-singular by columns", "yes", r.code.nonsingular_by_columns() ? "yes" : "no"});
  checks.push_back({"designed distance d_C", "18", str(r.code.designed_distance())});
  checks.push_back({"designed radius t", "8", str(r.code.designed_radius())});

  const MpcWord& e = r.received;  // the sent codeword is zero
  call_check(checks, r, 0, 2, {0, 1, 2}, GfVector(f, {2, 2, 2}), e.contract(GfVector(f, {2, 2, 2})), zero);
  call_check(checks, r, 1, 1, {0, 1}, GfVector(f, {2, 1, 0}), e.contract(GfVector(f, {2, 1, 0})), zero);
  call_check(checks, r, 2, 1, {0, 2}, GfVector(f, {1, 0, 2}), e.contract(GfVector(f, {1, 0, 2})), zero);
  call_check(checks, r, 3, 1, {1, 2}, GfVector(f, {0, 2, 1}), e.contract(GfVector(f, {0, 2, 1})), zero);
  call_check(checks, r, 4, 0, {0}, GfVector(f, {1, 0, 0}), e.column(0), std::nullopt);
  call_check(checks, r, 5, 0, {1}, GfVector(f, {0, 1, 0}), e.column(1), std::nullopt);
  call_check(checks, r, 6, 0, {2}, GfVector(f, {0, 0, 1}), e.column(2), zero);
  checks.push_back({"component decoder calls", "(3,3,1)",
                    list(std::vector<std::size_t>(r.outcome.stats.component_calls.begin(),
                                                  r.outcome.stats.component_calls.end()))});
  outcome_checks(checks, r, 8);
  return checks;
}

bool print_checks(std::ostream& os, const std::string& title, const std::vector<Check>& checks) {
  os << "== " << title << " ==\n";
  const Check* first_bad = nullptr;
  for (const auto& c : checks) {
    if (c.ok()) {
      os << "[ok]   " << c.label << ": " << c.actual << "\n";
    } else {
      os << "[FAIL] " << c.label << ": expected " << c.expected << ", got " << c.actual << "\n";
      if (!first_bad) first_bad = &c;
    }
  }
  if (first_bad) {
    os << "first divergence: " << first_bad->label << "\n";
  } else {
    os << "reproduced\n";
  }
  return first_bad == nullptr;
}

std::size_t write_transcript(std::ostream& os) {
  std::size_t ok = 0;
  const ExampleRun first = run_first_extension();
  ok += print_checks(os, first.title, check_first_extension(first));
  const ExampleRun second = run_second_extension();
  ok += print_checks(os, second.title, check_second_extension(second));
  os << ok << "/2 examples reproduced\n";
  return ok;
}

}  // namespace mpc::examples
