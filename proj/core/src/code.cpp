#include "mpc/code.hpp"

#include <algorithm>
#include <limits>

namespace mpc {

namespace {

void trim(Polynomial& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Saturating p^k.
std::uint64_t power_capped(std::uint64_t p, std::size_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > cap / p) return cap + 1;
    r *= p;
  }
  return r;
}

void require_word(const LinearCode& c, const GfVector& w) {
  if (!(w.spec() == c.spec())) throw FieldMismatch();
  if (w.size() != c.length()) {
    throw ShapeError("word length " + std::to_string(w.size()) + " != code length " +
                     std::to_string(c.length()));
  }
}

// Depth-first walk over error patterns of a fixed weight, accumulating the
// syndrome column by column. `first_unit` pins the leading nonzero value to
// 1, which enumerates patterns up to scalar multiples.
class PatternWalker {
 public:
  PatternWalker(FieldSpec f, std::size_t m, std::size_t syndrome_len,
                const std::vector<Residue>& h_columns)
      : f_(f), m_(m), len_(syndrome_len), h_(h_columns) {}

  // Calls leaf(positions, values, syndrome) for each pattern; stops when leaf
  // returns true, and reports whether it stopped.
  template <typename Leaf>
  bool walk(std::size_t weight, bool first_unit, Leaf&& leaf) {
    positions_.assign(weight, 0);
    values_.assign(weight, 0);
    stack_.assign((weight + 1) * len_, 0);
    return step(0, 0, weight, first_unit, leaf);
  }

 private:
  template <typename Leaf>
  bool step(std::size_t depth, std::size_t start, std::size_t weight, bool first_unit,
            Leaf& leaf) {
    const Residue* acc = stack_.data() + depth * len_;
    if (depth == weight) {
      return leaf(positions_, values_, std::span<const Residue>(acc, len_));
    }
    Residue* next = stack_.data() + (depth + 1) * len_;
    const Residue last_value = (first_unit && depth == 0) ? 1 : f_.modulus() - 1;
    for (std::size_t pos = start; pos + (weight - depth) <= m_; ++pos) {
      const Residue* col = h_.data() + pos * len_;
      positions_[depth] = pos;
      for (Residue v = 1; v <= last_value; ++v) {
        values_[depth] = v;
        for (std::size_t r = 0; r < len_; ++r) next[r] = f_.add(acc[r], f_.mul(v, col[r]));
        if (step(depth + 1, pos + 1, weight, first_unit, leaf)) return true;
      }
    }
    return false;
  }

  FieldSpec f_;
  std::size_t m_;
  std::size_t len_;
  const std::vector<Residue>& h_;
  std::vector<std::size_t> positions_;
  std::vector<Residue> values_;
  std::vector<Residue> stack_;
};

std::vector<Residue> flatten_columns(const GfMatrix& h) {
  std::vector<Residue> out(h.rows() * h.cols());
  for (std::size_t j = 0; j < h.cols(); ++j)
    for (std::size_t r = 0; r < h.rows(); ++r) out[j * h.rows() + r] = h(r, j);
  return out;
}

}  // namespace

PolyDivision poly_divmod(FieldSpec f, const Polynomial& num, const Polynomial& den) {
  Polynomial d = den;
  trim(d);
  if (d.empty()) throw DivisionByZero();
  Polynomial r = num;
  trim(r);
  if (r.size() < d.size()) return {{}, r};
  Polynomial q(r.size() - d.size() + 1, 0);
  const Residue lead_inv = f.inv(d.back());
  for (std::size_t i = q.size(); i-- > 0;) {
    const Residue coef = f.mul(r[i + d.size() - 1], lead_inv);
    q[i] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] = f.sub(r[i + j], f.mul(coef, d[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

// ---------------------------------------------------------------- LinearCode

LinearCode LinearCode::from_generator(GfMatrix generator,
                                      std::optional<std::size_t> declared_distance) {
  if (generator.rows() == 0) throw ShapeError("generator matrix has no rows");
  if (generator.rows() > generator.cols()) throw ShapeError("generator has more rows than columns");
  const std::size_t rk = rank(generator);
  if (rk != generator.rows()) {
    throw RankDeficient("generator rank " + std::to_string(rk) + " < " +
                        std::to_string(generator.rows()));
  }
  GfMatrix h = nullspace(generator);
  LinearCode code(std::move(generator), std::move(h), CodeOrigin::Generator, {});
  code.settle_distance(declared_distance);
  return code;
}

LinearCode LinearCode::cyclic(FieldSpec f, std::size_t n, const Polynomial& generator_poly,
                              std::optional<std::size_t> declared_distance) {
  Polynomial g;
  g.reserve(generator_poly.size());
  for (auto c : generator_poly) g.push_back(c % f.modulus());
  trim(g);
  if (g.empty()) throw NotADivisor("generator polynomial is zero");
  const std::size_t deg = g.size() - 1;
  if (deg >= n) throw NotADivisor("generator degree must be below the length");

  Polynomial xn1(n + 1, 0);
  xn1[0] = f.neg(1);
  xn1[n] = 1;
  const PolyDivision div = poly_divmod(f, xn1, g);
  if (!div.remainder.empty()) {
    throw NotADivisor("generator polynomial does not divide x^" + std::to_string(n) + " - 1");
  }
  const Polynomial& h = div.quotient;  // check polynomial, degree k
  const std::size_t k = n - deg;

  GfMatrix gm(f, k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j <= deg; ++j) gm.set(r, r + j, g[j]);

  GfMatrix hm(f, n - k, n);
  for (std::size_t r = 0; r < n - k; ++r)
    for (std::size_t j = 0; j <= k; ++j) hm.set(r, r + j, h[k - j]);

  LinearCode code(std::move(gm), std::move(hm), CodeOrigin::Cyclic, g);
  code.settle_distance(declared_distance);
  return code;
}

void LinearCode::settle_distance(std::optional<std::size_t> declared) {
  const GfMatrix check = generator_ * parity_check_.transposed();
  for (std::size_t r = 0; r < check.rows(); ++r) {
    if (!check.row(r).is_zero()) throw Error("internal: G H^T != 0");
  }
  if (declared) {
    if (*declared == 0) throw Error("declared minimum distance must be at least 1");
    for (std::size_t r = 0; r < generator_.rows(); ++r) {
      if (generator_.row(r).weight() < *declared) {
        throw Error("declared minimum distance " + std::to_string(*declared) +
                    " exceeds the weight of generator row " + std::to_string(r + 1));
      }
    }
    distance_ = *declared;
  } else {
    distance_ = min_distance(*this);
  }
}

GfVector LinearCode::syndrome(const GfVector& w) const {
  require_word(*this, w);
  return parity_check_ * w;
}

bool LinearCode::contains(const GfVector& w) const { return syndrome(w).is_zero(); }

GfVector LinearCode::encode(const GfVector& info) const {
  if (!(info.spec() == spec())) throw FieldMismatch();
  if (info.size() != dimension()) {
    throw ShapeError("information vector length " + std::to_string(info.size()) +
                     " != dimension " + std::to_string(dimension()));
  }
  return row_times(info, generator_);
}

// ---------------------------------------------------------- min distance

std::size_t min_distance_by_enumeration(const LinearCode& c, std::uint64_t budget) {
  if (power_capped(c.spec().modulus(), c.dimension(), budget) > budget) {
    throw BudgetExceeded("codeword enumeration p^k exceeds budget " + std::to_string(budget));
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_codeword(c, [&](const GfVector& w) {
    const std::size_t wt = w.weight();
    if (wt > 0) best = std::min(best, wt);
    return true;
  });
  return best;
}

std::size_t min_distance_by_weight_search(const LinearCode& c, std::uint64_t budget) {
  const FieldSpec f = c.spec();
  const std::size_t m = c.length();
  const std::size_t len = c.parity_check().rows();
  const std::vector<Residue> h_columns = flatten_columns(c.parity_check());
  PatternWalker walker(f, m, len, h_columns);

  std::uint64_t spent = 0;
  for (std::size_t w = 1; w <= m; ++w) {
    std::uint64_t here = binomial(m, w);
    for (std::size_t i = 1; i < w; ++i) here *= (f.modulus() - 1);
    spent += here;
    if (spent > budget) {
      throw BudgetExceeded("weight-limited search exceeds budget " + std::to_string(budget) +
                           " at weight " + std::to_string(w));
    }
    const bool found = walker.walk(w, true, [](auto&, auto&, std::span<const Residue> syn) {
      return std::all_of(syn.begin(), syn.end(), [](Residue v) { return v == 0; });
    });
    if (found) return w;
  }
  throw Error("code has no nonzero codeword");
}

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
  if (power_capped(c.spec().modulus(), c.dimension(), budget) <= budget) {
    return min_distance_by_enumeration(c, budget);
  }
  return min_distance_by_weight_search(c, budget);
}

// ---------------------------------------------------------- BoundedDecoder

std::uint64_t pattern_count(std::uint64_t p, std::size_t m, std::size_t radius) {
  std::uint64_t total = 0;
  for (std::size_t w = 0; w <= radius && w <= m; ++w) {
    std::uint64_t here = binomial(m, w);
    for (std::size_t i = 0; i < w; ++i) {
      if (here > std::numeric_limits<std::uint64_t>::max() / p) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      here *= (p - 1);
    }
    total += here;
  }
  return total;
}

BoundedDecoder::BoundedDecoder(LinearCode code, std::optional<std::size_t> radius,
                               DecodeStrategy strategy)
    : code_(std::move(code)), radius_(code_.correction_capability()), strategy_(strategy) {
  if (radius) radius_ = std::min(*radius, code_.correction_capability());
  const std::uint64_t p = code_.spec().modulus();
  const bool codewords_fit =
      power_capped(p, code_.dimension(), kCodewordScanBudget) <= kCodewordScanBudget;
  const bool patterns_fit = pattern_count(p, code_.length(), radius_) <= kPatternScanBudget;
  if (strategy_ == DecodeStrategy::Auto) {
    strategy_ = codewords_fit ? DecodeStrategy::CodewordScan : DecodeStrategy::ErrorPatternScan;
  }
  if (strategy_ == DecodeStrategy::CodewordScan && !codewords_fit) {
    throw BudgetExceeded("codeword scan: p^k exceeds " + std::to_string(kCodewordScanBudget));
  }
  if (strategy_ == DecodeStrategy::ErrorPatternScan && !patterns_fit) {
    throw BudgetExceeded("error-pattern scan exceeds " + std::to_string(kPatternScanBudget) +
                         " patterns");
  }
  h_columns_ = flatten_columns(code_.parity_check());
}

BoundedDecoder::BoundedDecoder(const BoundedDecoder& other)
    : code_(other.code_), radius_(other.radius_), strategy_(other.strategy_),
      h_columns_(other.h_columns_), calls_(other.calls()) {}

BoundedDecoder::BoundedDecoder(BoundedDecoder&& other) noexcept
    : code_(std::move(other.code_)), radius_(other.radius_), strategy_(other.strategy_),
      h_columns_(std::move(other.h_columns_)), calls_(other.calls()) {}

std::optional<GfVector> BoundedDecoder::decode(const GfVector& w) const {
  require_word(code_, w);
  calls_.fetch_add(1, std::memory_order_relaxed);
  return strategy_ == DecodeStrategy::CodewordScan ? scan_codewords(w) : scan_error_patterns(w);
}

// Any codeword within radius <= floor((d-1)/2) is the unique closest one, so
// the first hit is the answer.
std::optional<GfVector> BoundedDecoder::scan_codewords(const GfVector& w) const {
  std::optional<GfVector> hit;
  for_each_codeword(code_, [&](const GfVector& c) {
    if (hamming_distance(c, w) <= radius_) {
      hit = c;
      return false;
    }
    return true;
  });
  return hit;
}

std::optional<GfVector> BoundedDecoder::scan_error_patterns(const GfVector& w) const {
  const GfVector syn = code_.syndrome(w);
  if (syn.is_zero()) return w;
  const FieldSpec f = code_.spec();
  PatternWalker walker(f, code_.length(), syn.size(), h_columns_);
  std::optional<GfVector> hit;
  for (std::size_t weight = 1; weight <= radius_ && !hit; ++weight) {
    walker.walk(weight, false,
                [&](const std::vector<std::size_t>& pos, const std::vector<Residue>& val,
                    std::span<const Residue> s) {
                  if (!std::equal(s.begin(), s.end(), syn.values().begin())) return false;
                  GfVector c = w;
                  for (std::size_t i = 0; i < pos.size(); ++i) {
                    c.set(pos[i], f.sub(c[pos[i]], val[i]));
                  }
                  hit = std::move(c);
                  return true;
                });
  }
  return hit;
}

}  // namespace mpc
