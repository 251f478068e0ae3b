#include <doctest.h>

#include <sstream>

#include "harness.hpp"
#include "mpc/errors.hpp"
#include "mpc/worked_examples.hpp"

using namespace mpc;
using fixtures::repetition;

namespace {

void require_all_ok(const std::vector<examples::Check>& checks) {
  for (const auto& c : checks) {
    CAPTURE(c.label);
    CHECK(c.expected == c.actual);
  }
}

MpcWord zero_word(const MatrixProductCode& c) { return MpcWord(c.spec(), c.m(), c.l()); }

}  // namespace

TEST_CASE("first extension on the ternary length-26 example") {
  const auto run = examples::run_first_extension(false);
  require_all_ok(examples::check_first_extension(run));
  const FieldSpec f3(3);
  REQUIRE(run.trace.right_inverse);
  CHECK(*run.trace.right_inverse == GfMatrix(f3, {{1, 2, 1}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(run.trace.calls.at(1).input == examples::polynomial_word(f3, 26, {{2, 0}, {2, 1}, {2, 2}, {1, 7}}));
  CHECK(run.trace.calls.at(0).input ==
        examples::polynomial_word(f3, 26, {{1, 0}, {1, 1}, {2, 2}, {1, 7}, {2, 11}}));
  CHECK(run.outcome.kind == OutcomeKind::Unique);
  CHECK(run.outcome.words[0].word.is_zero());
  CHECK(run.outcome.words[0].distance == 5);
  CHECK(run.outcome.stats.warnings.empty());
}

TEST_CASE("second extension on the ternary length-26 example") {
  const auto run = examples::run_second_extension(false);
  require_all_ok(examples::check_second_extension(run));
  const FieldSpec f3(3);
  CHECK(run.trace.calls.at(0).contraction == GfVector(f3, {2, 2, 2}));
  CHECK(run.trace.calls.at(1).contraction == GfVector(f3, {2, 1, 0}));
  CHECK(run.trace.calls.at(2).contraction == GfVector(f3, {1, 0, 2}));
  CHECK(run.trace.calls.at(3).contraction == GfVector(f3, {0, 2, 1}));
  CHECK_FALSE(run.trace.calls.at(4).result);
  CHECK_FALSE(run.trace.calls.at(5).result);
  CHECK(run.trace.calls.at(6).result);
  CHECK(run.outcome.words[0].distance == 8);
  CHECK_THROWS_AS(decode_ext1(run.code, default_decoders(run.code), run.received, DecodeMode::Unique),
                  HypothesisViolation);
}

TEST_CASE("a tampered intermediate is pinpointed") {
  auto run = examples::run_second_extension(false);
  // The misprinted solution (0,1) of the first two-column system, embedded at J = {1,2}.
  run.trace.calls.at(1).contraction = GfVector(FieldSpec(3), {0, 1, 0});
  std::ostringstream os;
  CHECK_FALSE(examples::print_checks(os, run.title, examples::check_second_extension(run)));
  CHECK(os.str().find("first divergence: DC2 call, J={1,2} contraction vector") != std::string::npos);
  CHECK(os.str().find("expected (2,1,0), got (0,1,0)") != std::string::npos);

  auto first = examples::run_first_extension(false);
  first.trace.calls.at(2).result = GfVector(FieldSpec(3), 26);
  std::ostringstream os1;
  CHECK_FALSE(examples::print_checks(os1, first.title, examples::check_first_extension(first)));
  CHECK(os1.str().find("first divergence: DC1 call, J={1} result") != std::string::npos);
}

TEST_CASE("zero error decodes to the sent word with no corrections") {
  for (const auto& inst : fixtures::two_by_two()) {
    CAPTURE(inst.name);
    const auto decoders = default_decoders(inst.code);
    for (Algorithm alg : {Algorithm::Uuv, Algorithm::Ext1, Algorithm::Ext2}) {
      const auto o = decode(alg, inst.code, decoders, zero_word(inst.code), DecodeMode::Unique);
      REQUIRE(o.kind == OutcomeKind::Unique);
      CHECK(o.words[0].word.is_zero());
      CHECK(o.words[0].distance == 0);
    }
  }
  const auto c = fixtures::ternary_ext2_nsc();
  DecodeTrace trace;
  const auto o = decode_ext2(c, default_decoders(c), zero_word(c), DecodeMode::Unique, &trace);
  CHECK(o.kind == OutcomeKind::Unique);
  // One surviving candidate per level: C(3,3) + C(3,2) + C(3,1) calls.
  CHECK(o.stats.component_calls == std::vector<std::uint64_t>{3, 3, 1});
  for (const auto& call : trace.calls) CHECK(call.candidate == 0);
}

TEST_CASE("unique decoding matches the oracle on two-by-two instances") {
  for (const auto& inst : fixtures::two_by_two()) {
    for (Algorithm alg : {Algorithm::Uuv, Algorithm::Ext1, Algorithm::Ext2}) {
      CAPTURE(inst.name);
      CAPTURE(to_string(alg));
      CHECK(acceptance_radius(inst.code, DecodeMode::Unique) == inst.code.designed_radius());
      const auto t = harness::run(alg, DecodeMode::Unique, inst.code,
                                  harness::up_to(inst.code.designed_radius()));
      INFO(harness::describe(t));
      CHECK(t.exhaustive_errors);
      CHECK(t.clean());
    }
  }
}

TEST_CASE("three-level instances match the oracle") {
  struct Case {
    const char* name;
    MatrixProductCode code;
    Algorithm alg;
  };
  const std::vector<Case> cases{
      {"binary triangular", fixtures::binary_three_level(), Algorithm::Ext1},
      {"ternary triangular", fixtures::ternary_ext1_triangular(), Algorithm::Ext1},
      {"ternary triangular", fixtures::ternary_ext1_triangular(), Algorithm::Ext2},
      {"ternary nsc", fixtures::ternary_ext2_nsc(), Algorithm::Ext1},
      {"ternary nsc", fixtures::ternary_ext2_nsc(), Algorithm::Ext2},
      {"ternary 2x3", fixtures::ternary_ext2_only(), Algorithm::Ext2},
  };
  for (const auto& k : cases) {
    CAPTURE(k.name);
    CAPTURE(to_string(k.alg));
    harness::Options opt;
    opt.samples_per_weight = 300;
    opt.sampled_codewords = 3;
    const auto t = harness::run(k.alg, DecodeMode::Unique, k.code, harness::up_to(k.code.designed_radius()), opt);
    INFO(harness::describe(t));
    CHECK(t.clean());
  }
}

TEST_CASE("list mode keeps the sent word one symbol beyond capability") {
  for (const auto& inst : fixtures::list_capable()) {
    CAPTURE(inst.name);
    const std::size_t radius = acceptance_radius(inst.code, DecodeMode::List);
    CHECK(radius == inst.code.designed_radius() + 1);
    for (Algorithm alg : {Algorithm::Uuv, Algorithm::Ext1, Algorithm::Ext2}) {
      CAPTURE(to_string(alg));
      const auto t = harness::run(alg, DecodeMode::List, inst.code, harness::up_to(radius));
      INFO(harness::describe(t));
      CHECK(t.clean());
    }
  }
}

TEST_CASE("all three decoders agree on two-by-two instances") {
  SplitMix64 rng(17);
  for (const auto& inst : fixtures::list_capable()) {
    const auto& c = inst.code;
    const auto decoders = default_decoders(c);
    for (int i = 0; i < 300; ++i) {
      const MpcWord r = fixtures::random_error(c, rng.below(c.length() / 2), rng);
      for (DecodeMode mode : {DecodeMode::Unique, DecodeMode::List}) {
        const auto a = decode_uuv(c, decoders, r, mode);
        const auto b = decode_ext1(c, decoders, r, mode);
        const auto e = decode_ext2(c, decoders, r, mode);
        REQUIRE(a.kind == b.kind);
        REQUIRE(a.kind == e.kind);
        REQUIRE(a.words.size() == b.words.size());
        REQUIRE(a.words.size() == e.words.size());
        for (std::size_t w = 0; w < a.words.size(); ++w) {
          CHECK(a.words[w].word == b.words[w].word);
          CHECK(e.contains(a.words[w].word));
        }
      }
    }
  }
}

TEST_CASE("hypothesis checks") {
  const auto ex5 = examples::run_second_extension(false).code;
  const auto v = hypothesis_violations(ex5, Algorithm::Ext1, DecodeMode::Unique);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "d2 = 14 < 3*d1 = 18");
  CHECK(hypothesis_violations(ex5, Algorithm::Ext2, DecodeMode::Unique).empty());
  CHECK_FALSE(hypothesis_violations(ex5, Algorithm::Uuv, DecodeMode::Unique).empty());
  CHECK_FALSE(hypothesis_violations(ex5, Algorithm::Ext2, DecodeMode::List).empty());

  const auto bin = fixtures::binary_three_level();
  CHECK(hypothesis_violations(bin, Algorithm::Ext1, DecodeMode::Unique).empty());
  CHECK_FALSE(hypothesis_violations(bin, Algorithm::Ext2, DecodeMode::Unique).empty());
  const auto o = decode_ext1(bin, default_decoders(bin), zero_word(bin), DecodeMode::Unique);
  CHECK(o.ok());
  CHECK(o.stats.warnings.size() == 1);
  CHECK_THROWS_AS(decode_ext2(bin, default_decoders(bin), zero_word(bin), DecodeMode::Unique), HypothesisViolation);

  // Extended Hamming has even d1: unique mode fine, list mode refused.
  const auto eh = fixtures::two_by_two()[1].code;
  CHECK(hypothesis_violations(eh, Algorithm::Uuv, DecodeMode::Unique).empty());
  CHECK_THROWS_AS(decode_uuv(eh, default_decoders(eh), zero_word(eh), DecodeMode::List), HypothesisViolation);

  // d2 = 2 d1 exactly: unique mode holds, list mode needs strict inequality.
  const FieldSpec f2(2);
  const auto tight = fixtures::uuv(fixtures::hamming7(), LinearCode::from_generator(GfMatrix(f2, {{1, 1, 1, 1, 1, 1, 0}})));
  CHECK(hypothesis_violations(tight, Algorithm::Ext1, DecodeMode::Unique).empty());
  CHECK_FALSE(hypothesis_violations(tight, Algorithm::Ext1, DecodeMode::List).empty());

  // d1 < 3
  const auto weak = fixtures::uuv(LinearCode::cyclic(f2, 7, {1, 1}), repetition(f2, 7));
  CHECK_FALSE(hypothesis_violations(weak, Algorithm::Ext1, DecodeMode::Unique).empty());

  // A zero in the first row.
  const auto zero_lead = fixtures::uuv(fixtures::hamming7(), repetition(f2, 7), {{1, 0}, {0, 1}});
  CHECK_FALSE(hypothesis_violations(zero_lead, Algorithm::Ext1, DecodeMode::Unique).empty());
}

TEST_CASE("acceptance radii") {
  const auto ex4 = examples::run_first_extension(false).code;
  CHECK(acceptance_radius(ex4, DecodeMode::Unique) == 5);
  const auto u = fixtures::list_capable()[0].code;
  CHECK(acceptance_radius(u, DecodeMode::Unique) == 2);
  CHECK(acceptance_radius(u, DecodeMode::List) == 3);  // l t1 + l/2
}

TEST_CASE("uncorrectable words are reported as failures") {
  const auto c = fixtures::list_capable()[0].code;
  const auto decoders = default_decoders(c);
  // Flip all of column one and one symbol of column two: far from every codeword.
  MpcWord r = zero_word(c);
  r.column(0) = GfVector(FieldSpec(2), {1, 1, 1, 1, 0, 0, 0});
  const auto o = decode_ext1(c, decoders, r, DecodeMode::Unique);
  const auto oracle = brute_force_nearest(c, r, 2);
  CHECK(o.ok() == !oracle.empty());
  if (!o.ok()) CHECK_FALSE(o.failure_reason.empty());
}

TEST_CASE("brute force oracle") {
  const auto c = fixtures::list_capable()[0].code;
  const auto words = fixtures::all_codewords(c);
  REQUIRE(words.size() == 32);
  const auto& w = words[17].word;
  const auto exact = brute_force_nearest(c, w, 0);
  REQUIRE(exact.size() == 1);
  CHECK(exact[0].word == w);
  CHECK(brute_force_nearest(c, w, c.length()).size() == 32);

  MpcWord r = w;
  r.column(0).set(0, 1 - r.column(0)[0]);
  r.column(1).set(3, 1 - r.column(1)[3]);
  const auto near = brute_force_nearest(c, r, 2);
  REQUIRE(near.size() == 1);
  CHECK(near[0].word == w);

  const auto all = brute_force_nearest(c, r, c.length());
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].distance <= all[i].distance);
  CHECK_THROWS_AS(brute_force_nearest(examples::run_first_extension(false).code, r, 1), Error);
}

TEST_CASE("good subsets") {
  const FieldSpec f3(3);
  MpcWord e(f3, 26, 3);
  e.column(0) = examples::polynomial_word(f3, 26, {{1, 0}, {1, 1}, {1, 2}});
  e.column(1) = examples::polynomial_word(f3, 26, {{1, 0}, {2, 2}, {1, 7}});
  e.column(2) = examples::polynomial_word(f3, 26, {{1, 5}, {2, 11}});
  CHECK(find_good_subset(e, 1, 6) == std::vector<std::size_t>{2});
  CHECK(find_good_subset(e, 2, 14));
  CHECK(find_good_subset(e, 3, 18));
  CHECK_FALSE(find_good_subset(e, 1, 4));
}

TEST_CASE("subset contractions pick out one component") {
  const auto c = fixtures::ternary_ext2_nsc();
  for (std::size_t i = 1; i <= c.s(); ++i) {
    const auto list = subset_contractions(c, i);
    CHECK(list.size() == binomial(c.l(), i));
    for (const auto& sc : list) {
      CHECK(sc.vector.weight() <= i);
      const GfVector av = c.matrix().top_rows(i) * sc.vector;
      CHECK(av == GfVector::unit(c.spec(), i, i - 1));
    }
  }
  const auto plan = make_ext1_plan(fixtures::ternary_ext1_triangular());
  CHECK(fixtures::ternary_ext1_triangular().matrix() * plan.right_inverse == GfMatrix::identity(FieldSpec(3), 3));
}

TEST_CASE("algorithm and mode names") {
  CHECK(parse_algorithm("ext2") == Algorithm::Ext2);
  CHECK_FALSE(parse_algorithm("ext3"));
  CHECK(parse_mode("list") == DecodeMode::List);
  CHECK(to_string(Algorithm::Uuv) == "uuv");
  CHECK(to_string(DecodeMode::Unique) == "unique");
}
