#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "rsspredict/trace.hpp"

namespace rsspredict {

/// Deterministic random source used by every generator.
///
/// The engine is std::mt19937_64, whose output sequence the C++ standard pins
/// down. The standard distributions are implementation-defined, so the
/// mappings to integers, reals and normals are written out here: unbiased
/// rejection for bounded integers, the top 53 bits for [0, 1) reals and the
/// Marsaglia polar method for normals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on {0, ..., bound - 1}; bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1).
  double uniform();
  /// Standard normal.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

struct MarkovSpec {
  /// Row-stochastic q x q matrix, transition[s][t] = P(next = t | current = s).
  std::vector<std::vector<double>> transition;
  std::vector<double> initial;
  std::uint64_t seed = 1;

  bool operator==(const MarkovSpec&) const = default;
};

/// Label and frequency given to generated traces unless the caller passes one.
BandMetadata synthetic_band();

/// Throws InvalidStochasticMatrix unless rows and the initial distribution are
/// non-negative and sum to 1 within 1e-12.
void validate_markov(const MarkovSpec& spec);

/// Two-state chain that flips with probability `flip`.
MarkovSpec binary_symmetric_chain(double flip, std::uint64_t seed);

QuantizedTrace gen_iid_uniform(std::int32_t q, std::size_t n, std::uint64_t seed,
                               const BandMetadata& band = synthetic_band());

QuantizedTrace gen_markov(const MarkovSpec& spec, std::size_t n,
                          const BandMetadata& band = synthetic_band());

/// -sum_s pi_s sum_t P_st log2 P_st with pi solving pi P = pi, sum pi = 1.
/// Throws NotIrreducible when the stationary distribution is not unique.
double markov_entropy_rate(const MarkovSpec& spec);

std::vector<double> stationary_distribution(const MarkovSpec& spec);

PsdTrace gen_gaussian_psd(std::size_t n, double mean_dbm, double sigma_db, std::uint64_t seed,
                          const BandMetadata& band = synthetic_band());

/// `pattern` repeated `repeats` times. q defaults to max(pattern) + 1.
QuantizedTrace gen_periodic(std::span<const std::int32_t> pattern, std::size_t repeats,
                            std::int32_t q = 0, const BandMetadata& band = synthetic_band());

/// Renders levels as PSD values floor_dbm + level * step_db.
PsdTrace levels_to_psd(const QuantizedTrace& qt, double floor_dbm, double step_db);

MarkovSpec parse_markov_spec(std::string_view json_text);
MarkovSpec load_markov_spec(const std::filesystem::path& path);

}  // namespace rsspredict
