#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rsspredict/trace.hpp"

namespace rsspredict {

/// Match-length statistics of a level sequence.
///
/// lambdas[i] is one more than the length of the longest prefix of
/// levels[i..] that occurs wholly inside levels[0..i), i.e. the length of the
/// shortest string starting at i that has not been seen before. When the
/// whole suffix has been seen, lambdas[i] = (n - i) + 1. lambdas[0] = 1.
struct LzParse {
  std::vector<std::size_t> lambdas;

  bool operator==(const LzParse&) const = default;
};

/// log2(q). Throws InvalidConfig for q < 1.
double random_entropy(std::int32_t q);

/// -sum p log2 p with 0 log 0 = 0, clamped into [0, log2 q].
double shannon_entropy(const LevelDistribution& dist);

/// Reference parse by direct longest-common-extension scan, O(n^2) time.
LzParse lz_parse(std::span<const std::int32_t> levels);

/// Same output as lz_parse, linear amortized time. Grows a suffix automaton
/// over the past window and slides the match one symbol per step, which works
/// because lambdas[i+1] >= lambdas[i] - 1.
LzParse lz_parse_fast(std::span<const std::int32_t> levels);

/// Entropy-rate estimate n log2(n) / sum(lambdas), bits per symbol.
/// Throws SequenceTooShort for n < 2.
double lz_entropy_estimate(std::span<const std::int32_t> levels);

/// H_k / k over the empirical distribution of overlapping length-k windows.
/// Throws BlockTooLong when k > n.
double block_entropy_rate(std::span<const std::int32_t> levels, std::size_t k);

EntropyReport entropy_report(const QuantizedTrace& qt);

}  // namespace rsspredict
