#include "mpc/decoder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mpc {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Uuv: return "uuv";
    case Algorithm::Ext1: return "ext1";
    case Algorithm::Ext2: return "ext2";
  }
  return "?";
}

std::string to_string(DecodeMode m) { return m == DecodeMode::Unique ? "unique" : "list"; }

std::optional<Algorithm> parse_algorithm(const std::string& s) {
  if (s == "uuv") return Algorithm::Uuv;
  if (s == "ext1") return Algorithm::Ext1;
  if (s == "ext2") return Algorithm::Ext2;
  return std::nullopt;
}

std::optional<DecodeMode> parse_mode(const std::string& s) {
  if (s == "unique") return DecodeMode::Unique;
  if (s == "list") return DecodeMode::List;
  return std::nullopt;
}

bool DecodeOutcome::contains(const MpcWord& w) const {
  return std::any_of(words.begin(), words.end(), [&](const DecodedWord& d) { return d.word == w; });
}

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

std::vector<std::size_t> support(const GfVector& v) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) out.push_back(j);
  return out;
}

void require_inputs(const MatrixProductCode& c, std::span<const BoundedDecoder> decoders,
                    const MpcWord& r) {
  if (decoders.size() != c.s()) {
    throw ShapeError("expected " + num(c.s()) + " component decoders, got " + num(decoders.size()));
  }
  for (std::size_t i = 0; i < c.s(); ++i) {
    if (!(decoders[i].code().generator() == c.code(i).generator())) {
      throw ShapeError("decoder " + num(i + 1) + " does not belong to C" + num(i + 1));
    }
  }
  if (!(r.spec() == c.spec())) throw FieldMismatch();
  if (r.m() != c.m() || r.l() != c.l()) {
    throw ShapeError("received word is " + num(r.m()) + "x" + num(r.l()) + ", code expects " +
                     num(c.m()) + "x" + num(c.l()));
  }
}

void require_hypotheses(const MatrixProductCode& c, Algorithm alg, DecodeMode mode) {
  const auto violations = hypothesis_violations(c, alg, mode);
  if (violations.empty()) return;
  std::string msg = to_string(alg) + " (" + to_string(mode) + ") hypotheses fail: ";
  for (std::size_t i = 0; i < violations.size(); ++i) msg += (i ? "; " : "") + violations[i];
  throw HypothesisViolation(msg);
}

// Applies the final acceptance check and shapes the outcome for `mode`.
DecodeOutcome finish(const MatrixProductCode& c, const MpcWord& r, DecodeMode mode,
                     const std::vector<std::vector<GfVector>>& candidates, DecodeStats stats) {
  DecodeOutcome out;
  for (const auto& parts : candidates) {
    bool member = true;
    for (std::size_t i = 0; i < c.s() && member; ++i) member = c.code(i).contains(parts[i]);
    if (!member) continue;
    MpcWord p = c.combine(parts);
    const std::size_t dist = hamming_distance(r, p);
    if (dist > stats.radius) continue;
    if (out.contains(p)) continue;
    out.words.push_back({std::move(p), parts, dist});
  }
  std::stable_sort(out.words.begin(), out.words.end(),
                   [](const DecodedWord& a, const DecodedWord& b) { return a.distance < b.distance; });
  if (out.words.empty()) {
    out.kind = OutcomeKind::Failure;
    out.failure_reason = "no candidate within distance " + num(stats.radius);
  } else if (mode == DecodeMode::Unique) {
    out.kind = OutcomeKind::Unique;
    stats.ambiguous = out.words.size() > 1;
    out.words.erase(out.words.begin() + 1, out.words.end());
  } else {
    out.kind = OutcomeKind::List;
  }
  out.stats = std::move(stats);
  return out;
}

DecodeOutcome failure(DecodeStats stats, std::string reason) {
  DecodeOutcome out;
  out.kind = OutcomeKind::Failure;
  out.stats = std::move(stats);
  out.failure_reason = std::move(reason);
  return out;
}

}  // namespace

// ------------------------------------------------------------- hypotheses

std::vector<std::string> hypothesis_violations(const MatrixProductCode& c, Algorithm alg,
                                               DecodeMode mode) {
  std::vector<std::string> v;
  const std::size_t s = c.s(), l = c.l();
  const std::size_t d1 = c.code(0).distance();
  const bool list = mode == DecodeMode::List;

  if (alg == Algorithm::Uuv && (s != 2 || l != 2)) {
    v.push_back("(u|u+v) needs s = l = 2, got s = " + num(s) + ", l = " + num(l));
    return v;
  }
  if (d1 < 3) v.push_back("d1 = " + num(d1) + " < 3");
  if (list) {
    if (l % 2 != 0) v.push_back("list mode needs l even, got l = " + num(l));
    if (d1 % 2 == 0) v.push_back("list mode needs d1 odd, got d1 = " + num(d1));
  }

  if (alg == Algorithm::Ext2) {
    if (!c.nonsingular_by_columns()) v.push_back("A is not non-singular by columns");
    for (std::size_t i = 1; i < s; ++i) {
      const std::size_t di = c.code(i).distance();
      const std::size_t need = (i + 1) * d1;
      if (list ? di <= need : di < need) {
        v.push_back("d" + num(i + 1) + " = " + num(di) + (list ? " <= " : " < ") + num(i + 1) +
                    "*d1 = " + num(need));
      }
    }
    return v;
  }

  // First extension (and (u|u+v)).
  for (std::size_t j = 0; j < l; ++j) {
    if (c.matrix()(0, j) == 0) v.push_back("a_{1," + num(j + 1) + "} = 0");
  }
  for (std::size_t i = 1; i < s; ++i) {
    const std::size_t di = c.code(i).distance();
    const std::size_t need = l * d1;
    if (list ? di <= need : di < need) {
      v.push_back("d" + num(i + 1) + " = " + num(di) + (list ? " <= " : " < ") + num(l) +
                  "*d1 = " + num(need));
    }
  }
  return v;
}

std::size_t acceptance_radius(const MatrixProductCode& c, DecodeMode mode) {
  const std::size_t l = c.l();
  const std::size_t d1 = c.code(0).distance();
  if (mode == DecodeMode::Unique) return (l * d1 - 1) / 2;
  return l * c.code(0).correction_capability() + l / 2;
}

// ------------------------------------------------------------ first ext.

Ext1Plan make_ext1_plan(const MatrixProductCode& c) {
  GfMatrix b = right_inverse(c.matrix());
  std::vector<GfVector> cols;
  for (std::size_t i = 0; i < c.s(); ++i) cols.push_back(b.column(i));
  return {std::move(b), std::move(cols)};
}

DecodeOutcome decode_ext1(const MatrixProductCode& c, std::span<const BoundedDecoder> decoders,
                          const MpcWord& received, DecodeMode mode, DecodeTrace* trace) {
  require_inputs(c, decoders, received);
  require_hypotheses(c, Algorithm::Ext1, mode);
  const FieldSpec f = c.spec();
  const std::size_t s = c.s(), l = c.l();

  DecodeStats stats;
  stats.component_calls.assign(s, 0);
  stats.radius = acceptance_radius(c, mode);
  if (!c.nonsingular_by_columns()) stats.warnings.push_back("A is not non-singular by columns");

  const Ext1Plan plan = make_ext1_plan(c);
  if (trace) trace->right_inverse = plan.right_inverse;

  std::vector<GfVector> parts(s, GfVector(f, c.m()));
  for (std::size_t i = s; i-- > 1;) {
    const GfVector& v = plan.contractions[i];
    GfVector input = received.contract(v);
    auto result = decoders[i].decode(input);
    ++stats.component_calls[i];
    if (trace) trace->calls.push_back({i, 0, support(v), v, input, result});
    if (!result) return failure(std::move(stats), "DC" + num(i + 1) + " failed");
    parts[i] = std::move(*result);
  }

  // r'_j = a_{1,j} c_1 + e_j
  const MpcWord residual = received - c.combine(parts);
  std::vector<std::vector<GfVector>> candidates;
  for (std::size_t j = 0; j < l; ++j) {
    const Residue scale = f.inv(c.matrix()(0, j));
    GfVector v(f, l);
    v.set(j, scale);
    GfVector input = residual.column(j).scaled(scale);
    auto result = decoders[0].decode(input);
    ++stats.component_calls[0];
    if (trace) trace->calls.push_back({0, 0, {j}, v, input, result});
    if (!result) continue;
    auto cand = parts;
    cand[0] = std::move(*result);
    candidates.push_back(std::move(cand));
  }
  return finish(c, received, mode, candidates, std::move(stats));
}

// ----------------------------------------------------------- second ext.

std::vector<SubsetContraction> subset_contractions(const MatrixProductCode& c, std::size_t size) {
  if (size == 0 || size > c.s()) throw ShapeError("subset size must be in 1..s");
  std::vector<SubsetContraction> out;
  const GfVector target = GfVector::unit(c.spec(), size, size - 1);
  for_each_subset(c.l(), size, [&](std::span<const std::size_t> cols) {
    const auto x = solve(column_submatrix(c.matrix(), size, cols), target);
    if (!x) throw RankDeficient("A_J is singular for a column subset; A is not NSC");
    GfVector v(c.spec(), c.l());
    for (std::size_t k = 0; k < cols.size(); ++k) v.set(cols[k], (*x)[k]);
    out.push_back({std::vector<std::size_t>(cols.begin(), cols.end()), std::move(v)});
  });
  return out;
}

DecodeOutcome decode_ext2(const MatrixProductCode& c, std::span<const BoundedDecoder> decoders,
                          const MpcWord& received, DecodeMode mode, DecodeTrace* trace) {
  require_inputs(c, decoders, received);
  require_hypotheses(c, Algorithm::Ext2, mode);
  const FieldSpec f = c.spec();
  const std::size_t s = c.s();

  DecodeStats stats;
  stats.component_calls.assign(s, 0);
  stats.radius = acceptance_radius(c, mode);

  std::vector<std::vector<GfVector>> candidates{std::vector<GfVector>(s, GfVector(f, c.m()))};
  for (std::size_t i = s; i-- > 0;) {
    const auto contractions = subset_contractions(c, i + 1);
    std::vector<std::vector<GfVector>> next;
    for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
      const auto& cand = candidates[ci];
      // Components <= i are still zero in cand, so this is r^{i)}.
      const MpcWord residual = received - c.combine(cand);
      for (const auto& sc : contractions) {
        GfVector input = residual.contract(sc.vector);
        auto result = decoders[i].decode(input);
        ++stats.component_calls[i];
        if (trace) trace->calls.push_back({i, ci, sc.columns, sc.vector, input, result});
        if (!result) continue;
        auto extended = cand;
        extended[i] = std::move(*result);
        if (std::find(next.begin(), next.end(), extended) == next.end()) {
          next.push_back(std::move(extended));
        }
      }
    }
    if (next.empty()) {
      return failure(std::move(stats), "no candidate for c" + num(i + 1));
    }
    candidates = std::move(next);
  }
  return finish(c, received, mode, candidates, std::move(stats));
}

DecodeOutcome decode_uuv(const MatrixProductCode& c, std::span<const BoundedDecoder> decoders,
                         const MpcWord& received, DecodeMode mode, DecodeTrace* trace) {
  require_hypotheses(c, Algorithm::Uuv, mode);
  return decode_ext1(c, decoders, received, mode, trace);
}

DecodeOutcome decode(Algorithm alg, const MatrixProductCode& c,
                     std::span<const BoundedDecoder> decoders, const MpcWord& received,
                     DecodeMode mode, DecodeTrace* trace) {
  switch (alg) {
    case Algorithm::Uuv: return decode_uuv(c, decoders, received, mode, trace);
    case Algorithm::Ext1: return decode_ext1(c, decoders, received, mode, trace);
    case Algorithm::Ext2: return decode_ext2(c, decoders, received, mode, trace);
  }
  throw Error("unknown algorithm");
}

// ---------------------------------------------------------------- oracle

Codebook::Codebook(const MatrixProductCode& c, std::uint64_t budget) : code_(c), length_(c.length()) {
  std::uint64_t total = 1;
  for (const auto& code : c.codes()) {
    for (std::size_t k = 0; k < code.dimension(); ++k) {
      total *= code.spec().modulus();
      if (total > budget) {
        throw BudgetExceeded("codebook size p^(sum k_i) exceeds budget " + std::to_string(budget));
      }
    }
  }
  for (const auto& code : c.codes()) {
    std::vector<GfVector> words;
    for_each_codeword(code, [&](const GfVector& w) {
      words.push_back(w);
      return true;
    });
    component_words_.push_back(std::move(words));
  }
  count_ = static_cast<std::size_t>(total);
  flat_.reserve(count_ * length_);
  for (std::size_t idx = 0; idx < count_; ++idx) {
    const GfVector w = flatten(at(idx).word);
    flat_.insert(flat_.end(), w.values().begin(), w.values().end());
  }
}

DecodedWord Codebook::at(std::size_t index) const {
  std::vector<GfVector> parts;
  std::size_t rest = index;
  for (const auto& words : component_words_) {
    parts.push_back(words[rest % words.size()]);
    rest /= words.size();
  }
  MpcWord w = code_.combine(parts);
  return {std::move(w), std::move(parts), 0};
}

std::vector<DecodedWord> Codebook::within(const MpcWord& r, std::size_t radius) const {
  const GfVector flat_r = flatten(r);
  if (flat_r.size() != length_) throw ShapeError("received word has the wrong length");
  const auto rv = flat_r.values();
  std::vector<DecodedWord> out;
  for (std::size_t idx = 0; idx < count_; ++idx) {
    const Residue* row = flat_.data() + idx * length_;
    std::size_t dist = 0;
    for (std::size_t j = 0; j < length_ && dist <= radius; ++j) dist += row[j] != rv[j];
    if (dist > radius) continue;
    DecodedWord w = at(idx);
    w.distance = dist;
    out.push_back(std::move(w));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const DecodedWord& a, const DecodedWord& b) { return a.distance < b.distance; });
  return out;
}

std::vector<DecodedWord> brute_force_nearest(const MatrixProductCode& c, const MpcWord& received,
                                             std::size_t radius, std::uint64_t budget) {
  return Codebook(c, budget).within(received, radius);
}

std::optional<std::vector<std::size_t>> find_good_subset(const MpcWord& error, std::size_t size,
                                                         std::size_t d) {
  std::vector<std::size_t> weights;
  for (const auto& col : error.columns()) weights.push_back(col.weight());
  std::optional<std::vector<std::size_t>> found;
  for_each_subset(error.l(), size, [&](std::span<const std::size_t> cols) {
    if (found) return;
    std::size_t sum = 0;
    for (auto j : cols) sum += weights[j];
    if (2 * sum < d) found = std::vector<std::size_t>(cols.begin(), cols.end());
  });
  return found;
}

}  // namespace mpc
