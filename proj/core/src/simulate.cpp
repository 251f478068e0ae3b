#include "mpc/simulate.hpp"

#include <cstdio>
#include <exception>
#include <numeric>
#include <thread>

namespace mpc {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t x = next();
    if (x >= limit) return x % bound;
  }
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) noexcept {
  SplitMix64 a(seed);
  SplitMix64 b(a.next() ^ (trial * 0xd1b54a32d192ed03ULL));
  return b.next();
}

Trial sample_trial(const MatrixProductCode& c, std::size_t weight, std::uint64_t seed,
                   std::uint64_t trial) {
  const FieldSpec f = c.spec();
  const std::size_t n = c.length();
  if (weight > n) {
    throw ShapeError("error weight " + std::to_string(weight) + " exceeds length " + std::to_string(n));
  }
  SplitMix64 rng(trial_seed(seed, trial));
  GfVector message(f, c.dimension());
  for (std::size_t i = 0; i < message.size(); ++i) message.set(i, static_cast<std::int64_t>(rng.below(f.modulus())));
  auto parts = c.encode_parts(message);
  MpcWord sent = c.combine(parts);

  // Partial Fisher-Yates picks the support.
  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), 0);
  GfVector flat_error(f, n);
  for (std::size_t i = 0; i < weight; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(positions[i], positions[j]);
    flat_error.set(positions[i], static_cast<std::int64_t>(1 + rng.below(f.modulus() - 1)));
  }
  return {std::move(parts), std::move(sent), unflatten(flat_error, c.m())};
}

double SimReport::mean_calls(std::size_t component) const {
  return trials ? static_cast<double>(component_calls.at(component)) / static_cast<double>(trials) : 0.0;
}

double SimReport::mean_higher_calls() const {
  if (!trials) return 0.0;
  const std::uint64_t total =
      std::accumulate(component_calls.begin() + 1, component_calls.end(), std::uint64_t{0});
  return static_cast<double>(total) / static_cast<double>(trials);
}

namespace {

struct Tally {
  std::uint64_t unique_ok = 0, list_ok = 0, multi_list = 0;
  std::vector<std::uint64_t> calls;
};

void run_range(const MatrixProductCode& c, std::span<const BoundedDecoder> decoders,
               const SimulationSpec& spec, std::uint64_t begin, std::uint64_t end, Tally& tally) {
  tally.calls.assign(c.s(), 0);
  for (std::uint64_t t = begin; t < end; ++t) {
    const Trial trial = sample_trial(c, spec.weight, spec.seed, t);
    const DecodeOutcome out = decode(spec.algorithm, c, decoders, trial.sent + trial.error, spec.mode);
    for (std::size_t i = 0; i < c.s(); ++i) tally.calls[i] += out.stats.component_calls[i];
    const bool hit = out.contains(trial.sent);
    tally.list_ok += hit;
    tally.unique_ok += hit && out.words.size() == 1;
    tally.multi_list += out.words.size() >= 2;
  }
}

}  // namespace

SimReport simulate(const MatrixProductCode& c, std::span<const BoundedDecoder> decoders,
                   const SimulationSpec& spec) {
  if (const auto v = hypothesis_violations(c, spec.algorithm, spec.mode); !v.empty()) {
    throw HypothesisViolation(to_string(spec.algorithm) + " (" + to_string(spec.mode) +
                              ") hypotheses fail: " + v.front());
  }
  if (spec.weight > c.length()) throw ShapeError("error weight exceeds code length");

  const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(
                                                                             std::max<std::uint64_t>(spec.trials, 1))));
  std::vector<Tally> tallies(workers);
  if (workers == 1) {
    run_range(c, decoders, spec, 0, spec.trials, tallies[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = spec.trials * w / workers;
      const std::uint64_t end = spec.trials * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          run_range(c, decoders, spec, begin, end, tallies[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  SimReport r{spec.algorithm, spec.mode, spec.weight, spec.trials, 0, 0, 0, 0,
              std::vector<std::uint64_t>(c.s(), 0), spec.seed};
  for (const auto& t : tallies) {
    r.unique_ok += t.unique_ok;
    r.list_ok += t.list_ok;
    r.multi_list += t.multi_list;
    for (std::size_t i = 0; i < c.s(); ++i) r.component_calls[i] += t.calls[i];
  }
  r.failures = r.trials - r.list_ok;
  return r;
}

std::string csv_header() {
  return "algorithm,mode,weight,trials,unique_ok,list_ok,multi_list,failures,mean_dc1_calls,"
         "mean_dci_calls,seed";
}

std::string csv_row(const SimReport& r) {
  char means[64];
  std::snprintf(means, sizeof means, "%.6f,%.6f", r.mean_calls(0), r.mean_higher_calls());
  return to_string(r.algorithm) + "," + to_string(r.mode) + "," + std::to_string(r.weight) + "," +
         std::to_string(r.trials) + "," + std::to_string(r.unique_ok) + "," +
         std::to_string(r.list_ok) + "," + std::to_string(r.multi_list) + "," +
         std::to_string(r.failures) + "," + means + "," + std::to_string(r.seed);
}

}  // namespace mpc
