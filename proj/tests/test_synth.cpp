#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "rsspredict/entropy.hpp"
#include "rsspredict/error.hpp"
#include "rsspredict/quantize.hpp"
#include "rsspredict/serialize.hpp"
#include "rsspredict/synth.hpp"

using namespace rsspredict;

TEST_CASE("Rng is reproducible and maps ranges without bias") {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  Rng rng(9);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 30000; ++i) ++counts[rng.below(3)];
  for (int c : counts) CHECK(std::abs(c - 10000) < 400);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("gen_iid_uniform") {
  const auto ones = gen_iid_uniform(1, 50, 3);
  CHECK(std::all_of(ones.levels.begin(), ones.levels.end(), [](int v) { return v == 0; }));
  CHECK(gen_iid_uniform(8, 1000, 11) == gen_iid_uniform(8, 1000, 11));
  CHECK(gen_iid_uniform(8, 1000, 11) != gen_iid_uniform(8, 1000, 12));

  const auto qt = gen_iid_uniform(8, 100000, 13);
  CHECK(qt.q == 8);
  for (double p : level_distribution(qt).probabilities) CHECK(std::abs(p - 0.125) <= 0.01);
}

TEST_CASE("gen_markov") {
  MarkovSpec identity;
  identity.transition = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  identity.initial = {0.2, 0.3, 0.5};
  identity.seed = 4;
  const auto frozen = gen_markov(identity, 200);
  CHECK(std::all_of(frozen.levels.begin(), frozen.levels.end(),
                    [&](int v) { return v == frozen.levels.front(); }));

  MarkovSpec flip;
  flip.transition = {{0, 1}, {1, 0}};
  flip.initial = {1, 0};
  const auto alternating = gen_markov(flip, 6);
  CHECK(alternating.levels == std::vector<std::int32_t>{0, 1, 0, 1, 0, 1});

  const auto chain = gen_markov(binary_symmetric_chain(0.1, 17), 100000);
  std::size_t flips = 0;
  for (std::size_t i = 1; i < chain.levels.size(); ++i) flips += chain.levels[i] != chain.levels[i - 1];
  CHECK(std::abs(static_cast<double>(flips) / 99999.0 - 0.1) <= 0.01);

  CHECK(gen_markov(binary_symmetric_chain(0.3, 5), 500) == gen_markov(binary_symmetric_chain(0.3, 5), 500));
}

TEST_CASE("gen_markov rejects non-stochastic specs") {
  MarkovSpec bad;
  bad.transition = {{0.5, 0.6}, {0.5, 0.5}};
  bad.initial = {1, 0};
  try {
    gen_markov(bad, 10);
    FAIL("accepted a non-stochastic matrix");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidStochasticMatrix);
  }
  bad.transition = {{1.0, 0.0}, {-0.5, 1.5}};
  CHECK_THROWS_AS(gen_markov(bad, 10), Error);
  bad.transition = {{1.0, 0.0}, {0.0, 1.0}};
  bad.initial = {1.0};
  CHECK_THROWS_AS(gen_markov(bad, 10), Error);
}

TEST_CASE("markov_entropy_rate") {
  MarkovSpec cycle;
  cycle.transition = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  cycle.initial = {1, 0, 0};
  CHECK(markov_entropy_rate(cycle) == 0.0);
  const auto pi = stationary_distribution(cycle);
  for (double p : pi) CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  MarkovSpec iid;
  const std::vector<double> row{0.5, 0.25, 0.125, 0.125};
  iid.transition.assign(4, row);
  iid.initial = row;
  CHECK(std::abs(markov_entropy_rate(iid) - shannon_entropy({row})) <= 1e-10);

  CHECK(markov_entropy_rate(binary_symmetric_chain(0.1, 1)) ==
        doctest::Approx(oracle::binary_entropy(0.1)).epsilon(1e-12));

  // Asymmetric two-state chain: pi = (b, a) / (a + b).
  MarkovSpec asym;
  asym.transition = {{0.8, 0.2}, {0.6, 0.4}};
  asym.initial = {1, 0};
  const double expected = 0.75 * oracle::binary_entropy(0.2) + 0.25 * oracle::binary_entropy(0.4);
  CHECK(markov_entropy_rate(asym) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("markov_entropy_rate rejects chains without a unique stationary law") {
  MarkovSpec identity;
  identity.transition = {{1, 0}, {0, 1}};
  identity.initial = {0.5, 0.5};
  try {
    markov_entropy_rate(identity);
    FAIL("identity chain accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotIrreducible);
  }
}

TEST_CASE("property: i.i.d.-row chains have the row's Shannon entropy") {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t q = 1 + rng.below(12);
    std::vector<double> row(q);
    for (auto& p : row) p = rng.uniform() + 0.01;
    const double total = std::accumulate(row.begin(), row.end(), 0.0);
    for (auto& p : row) p /= total;
    // Force an exact unit sum.
    row.back() = 1.0 - std::accumulate(row.begin(), row.end() - 1, 0.0);
    MarkovSpec spec;
    spec.transition.assign(q, row);
    spec.initial = row;
    CHECK(std::abs(markov_entropy_rate(spec) - shannon_entropy({row})) <= 1e-10);
  }
}

TEST_CASE("gen_gaussian_psd") {
  const auto trace = gen_gaussian_psd(3360, -110.0, 3.0, 7);
  CHECK(trace.samples.size() == 3360);
  const double mean = std::accumulate(trace.samples.begin(), trace.samples.end(), 0.0) / 3360.0;
  CHECK(std::abs(mean + 110.0) <= 5.0 * 3.0 / std::sqrt(3360.0));
  CHECK(gen_gaussian_psd(100, 0.0, 1.0, 8) == gen_gaussian_psd(100, 0.0, 1.0, 8));
  CHECK_THROWS_AS(gen_gaussian_psd(10, 0.0, 0.0, 1), Error);
}

TEST_CASE("gen_periodic") {
  const std::vector<std::int32_t> zero{0};
  CHECK(gen_periodic(zero, 5).levels == std::vector<std::int32_t>(5, 0));
  const std::vector<std::int32_t> ramp{0, 1, 2, 3, 4, 5, 6, 7};
  const auto cycle = gen_periodic(ramp, 1000);
  CHECK(cycle.levels.size() == 8000);
  CHECK(cycle.q == 8);
  CHECK(lz_entropy_estimate(cycle.levels) < 0.1);
  CHECK(gen_periodic(ramp, 1, 16).q == 16);
  CHECK_THROWS_AS(gen_periodic(std::vector<std::int32_t>{}, 3), Error);
  CHECK_THROWS_AS(gen_periodic(ramp, 1, 4), Error);
}

TEST_CASE("Markov specs load from JSON") {
  const auto spec = parse_markov_spec(R"({"transition": [[0.9, 0.1], [0.1, 0.9]], "initial": [1, 0], "seed": 7})");
  CHECK(spec.seed == 7);
  CHECK(spec.transition[0][1] == 0.1);
  const nlohmann::json j = spec;
  CHECK(j.get<MarkovSpec>() == spec);

  const auto defaults = parse_markov_spec(R"({"transition": [[0.5, 0.5], [0.5, 0.5]]})");
  CHECK(defaults.initial == std::vector<double>{0.5, 0.5});

  CHECK_THROWS_AS(parse_markov_spec(R"({"transition": [[0.9, 0.2], [0.1, 0.9]]})"), Error);
  CHECK_THROWS_AS(parse_markov_spec("{"), Error);
}
