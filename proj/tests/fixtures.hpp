#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mpc/decoder.hpp"
#include "mpc/simulate.hpp"

namespace fixtures {

using namespace mpc;

inline LinearCode generator_code(FieldSpec f, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  return LinearCode::from_generator(GfMatrix(f, rows));
}

inline LinearCode repetition(FieldSpec f, std::size_t n) {
  GfMatrix g(f, 1, n);
  for (std::size_t j = 0; j < n; ++j) g.set(0, j, 1);
  return LinearCode::from_generator(g);
}

inline LinearCode hamming7() {
  return generator_code(FieldSpec(2), {{1, 0, 0, 0, 1, 1, 0},
                                       {0, 1, 0, 0, 0, 1, 1},
                                       {0, 0, 1, 0, 1, 1, 1},
                                       {0, 0, 0, 1, 1, 0, 1}});
}

inline LinearCode extended_hamming8() {
  return generator_code(FieldSpec(2), {{1, 0, 0, 0, 1, 1, 0, 1},
                                       {0, 1, 0, 0, 0, 1, 1, 1},
                                       {0, 0, 1, 0, 1, 1, 1, 0},
                                       {0, 0, 0, 1, 1, 0, 1, 1}});
}

inline LinearCode ternary_6_3_3() {
  return generator_code(FieldSpec(3), {{1, 0, 0, 2, 0, 1}, {0, 1, 0, 1, 2, 0}, {0, 0, 1, 2, 2, 1}});
}

inline LinearCode quinary_6_3_3() {
  return generator_code(FieldSpec(5), {{1, 0, 0, 1, 2, 4}, {0, 1, 0, 4, 0, 3}, {0, 0, 1, 1, 3, 4}});
}

inline LinearCode ternary_7_3_3() {
  return generator_code(FieldSpec(3), {{1, 0, 0, 0, 2, 0, 1}, {0, 1, 0, 0, 1, 1, 1}, {0, 0, 1, 2, 1, 0, 0}});
}

inline LinearCode binary_9_5_3() {
  return generator_code(FieldSpec(2), {{1, 0, 0, 0, 0, 1, 0, 0, 1},
                                       {0, 1, 0, 0, 0, 0, 1, 1, 0},
                                       {0, 0, 1, 0, 0, 0, 0, 1, 1},
                                       {0, 0, 0, 1, 0, 1, 1, 0, 0},
                                       {0, 0, 0, 0, 1, 1, 1, 0, 1}});
}

inline LinearCode ternary_9_4_3() {
  return generator_code(FieldSpec(3), {{1, 0, 0, 0, 1, 1, 0, 0, 0},
                                       {0, 1, 0, 0, 0, 0, 2, 2, 1},
                                       {0, 0, 1, 0, 0, 0, 2, 1, 1},
                                       {0, 0, 0, 1, 2, 2, 1, 0, 2}});
}

inline LinearCode ternary_9_2_6() {
  return generator_code(FieldSpec(3), {{1, 0, 0, 2, 2, 0, 1, 2, 1}, {0, 1, 2, 2, 0, 2, 0, 1, 1}});
}

struct Instance {
  std::string name;
  MatrixProductCode code;
};

inline MatrixProductCode uuv(LinearCode c1, LinearCode c2, std::initializer_list<std::initializer_list<std::int64_t>> a = {{1, 1}, {0, 1}}) {
  const FieldSpec f = c1.spec();
  return MatrixProductCode({std::move(c1), std::move(c2)}, GfMatrix(f, a));
}

// s = l = 2 instances; every algorithm's unique-mode hypotheses hold.
inline std::vector<Instance> two_by_two() {
  return {
      {"hamming7+rep7/F2", uuv(hamming7(), repetition(FieldSpec(2), 7))},
      {"ext-hamming8+rep8/F2", uuv(extended_hamming8(), repetition(FieldSpec(2), 8))},
      {"[6,3,3]+rep6/F3", uuv(ternary_6_3_3(), repetition(FieldSpec(3), 6), {{1, 1}, {1, 2}})},
      {"[6,3,3]+rep6/F5", uuv(quinary_6_3_3(), repetition(FieldSpec(5), 6), {{1, 1}, {0, 1}})},
  };
}

// List-mode instances: d1 odd, l even, d2 > 2 d1.
inline std::vector<Instance> list_capable() {
  return {
      {"hamming7+rep7/F2", uuv(hamming7(), repetition(FieldSpec(2), 7))},
      {"[7,3,3]+rep7/F3", uuv(ternary_7_3_3(), repetition(FieldSpec(3), 7), {{1, 1}, {2, 1}})},
  };
}

inline MatrixProductCode binary_three_level() {
  const FieldSpec f(2);
  // Upper triangular with an all-ones first row: rank 3, not NSC.
  return MatrixProductCode({binary_9_5_3(), repetition(f, 9), repetition(f, 9)},
                           GfMatrix(f, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
}

inline MatrixProductCode ternary_ext1_triangular() {
  const FieldSpec f(3);
  return MatrixProductCode({ternary_9_4_3(), repetition(f, 9), repetition(f, 9)},
                           GfMatrix(f, {{1, 1, 1}, {0, 1, 2}, {0, 0, 1}}));
}

inline MatrixProductCode ternary_ext2_nsc() {
  const FieldSpec f(3);
  return MatrixProductCode({ternary_9_4_3(), repetition(f, 9), repetition(f, 9)},
                           GfMatrix(f, {{1, 1, 1}, {0, 1, 2}, {1, 0, 1}}));
}

// ext2 hypotheses hold (d2 = 6 = 2 d1) but ext1's (d2 >= 3 d1) do not.
inline MatrixProductCode ternary_ext2_only() {
  const FieldSpec f(3);
  return MatrixProductCode({ternary_9_4_3(), ternary_9_2_6()}, GfMatrix(f, {{1, 1, 1}, {0, 1, 2}}));
}

// Calls visit(error) for every error word of weight exactly w; stops early when visit returns false.
inline bool for_each_error(FieldSpec f, std::size_t m, std::size_t l, std::size_t w,
                           const std::function<bool(const MpcWord&)>& visit) {
  const std::size_t n = m * l;
  const Residue p = f.modulus();
  bool go = true;
  for_each_subset(n, w, [&](std::span<const std::size_t> support) {
    if (!go) return;
    std::vector<Residue> vals(w, 1);
    while (go) {
      GfVector flat(f, n);
      for (std::size_t i = 0; i < w; ++i) flat.set(support[i], vals[i]);
      go = visit(unflatten(flat, m));
      std::size_t i = 0;
      for (; i < w; ++i) {
        if (++vals[i] < p) break;
        vals[i] = 1;
      }
      if (i == w) break;
    }
  });
  return go;
}

inline MpcWord random_error(const MatrixProductCode& c, std::size_t w, SplitMix64& rng) {
  const std::size_t n = c.length();
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = i;
  GfVector flat(c.spec(), n);
  for (std::size_t i = 0; i < w; ++i) {
    std::swap(pos[i], pos[i + rng.below(n - i)]);
    flat.set(pos[i], 1 + rng.below(c.spec().modulus() - 1));
  }
  return unflatten(flat, c.m());
}

inline std::vector<DecodedWord> all_codewords(const MatrixProductCode& c) {
  Codebook book(c);
  std::vector<DecodedWord> out;
  for (std::size_t i = 0; i < book.size(); ++i) out.push_back(book.at(i));
  return out;
}

}  // namespace fixtures
