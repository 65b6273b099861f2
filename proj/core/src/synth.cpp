#include "rsspredict/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "rsspredict/error.hpp"

namespace rsspredict {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject the low residue class so every value is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * scale;
  have_spare_ = true;
  return u * scale;
}

BandMetadata synthetic_band() {
  BandMetadata band;
  band.center_freq_hz = 600e6;
  band.label = "synthetic";
  return band;
}

namespace {

bool is_distribution(const std::vector<double>& row, std::size_t size) {
  if (row.size() != size) return false;
  double sum = 0.0;
  for (double p : row) {
    if (!(p >= 0.0) || !std::isfinite(p)) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= 1e-12;
}

std::int32_t draw(Rng& rng, const std::vector<double>& dist) {
  const double u = rng.uniform();
  double cumulative = 0.0;
  std::int32_t last_positive = 0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    if (dist[k] <= 0.0) continue;
    last_positive = static_cast<std::int32_t>(k);
    cumulative += dist[k];
    if (u < cumulative) return last_positive;
  }
  // Rounding left u above the final cumulative sum.
  return last_positive;
}

}  // namespace

void validate_markov(const MarkovSpec& spec) {
  const std::size_t q = spec.transition.size();
  if (q == 0) throw Error(Errc::InvalidStochasticMatrix, "empty transition matrix");
  for (std::size_t s = 0; s < q; ++s) {
    if (!is_distribution(spec.transition[s], q)) {
      throw Error(Errc::InvalidStochasticMatrix, "row " + std::to_string(s) +
                                                     " is not a probability distribution");
    }
  }
  if (!is_distribution(spec.initial, q)) {
    throw Error(Errc::InvalidStochasticMatrix, "initial distribution is invalid");
  }
}

MarkovSpec binary_symmetric_chain(double flip, std::uint64_t seed) {
  MarkovSpec spec;
  spec.transition = {{1.0 - flip, flip}, {flip, 1.0 - flip}};
  spec.initial = {0.5, 0.5};
  spec.seed = seed;
  return spec;
}

QuantizedTrace gen_iid_uniform(std::int32_t q, std::size_t n, std::uint64_t seed,
                               const BandMetadata& band) {
  if (q < 1) throw Error(Errc::InvalidConfig, "q must be at least 1");
  Rng rng(seed);
  QuantizedTrace out;
  out.band = band;
  out.q = q;
  out.levels.resize(n);
  for (auto& level : out.levels) {
    level = static_cast<std::int32_t>(rng.below(static_cast<std::uint64_t>(q)));
  }
  return out;
}

QuantizedTrace gen_markov(const MarkovSpec& spec, std::size_t n, const BandMetadata& band) {
  validate_markov(spec);
  Rng rng(spec.seed);
  QuantizedTrace out;
  out.band = band;
  out.q = static_cast<std::int32_t>(spec.transition.size());
  out.levels.reserve(n);
  if (n == 0) return out;
  std::int32_t state = draw(rng, spec.initial);
  out.levels.push_back(state);
  while (out.levels.size() < n) {
    state = draw(rng, spec.transition[static_cast<std::size_t>(state)]);
    out.levels.push_back(state);
  }
  return out;
}

std::vector<double> stationary_distribution(const MarkovSpec& spec) {
  const std::size_t q = spec.transition.size();
  for (std::size_t s = 0; s < q; ++s) {
    if (!is_distribution(spec.transition[s], q)) {
      throw Error(Errc::InvalidStochasticMatrix,
                  "row " + std::to_string(s) + " is not a probability distribution");
    }
  }
  if (q == 0) throw Error(Errc::InvalidStochasticMatrix, "empty transition matrix");

  const auto dim = static_cast<Eigen::Index>(q);
  Eigen::MatrixXd p(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    for (Eigen::Index t = 0; t < dim; ++t) p(s, t) = spec.transition[s][t];
  }
  // pi P = pi  <=>  (P^T - I) pi = 0; a unique solution needs rank q - 1.
  Eigen::MatrixXd system = p.transpose() - Eigen::MatrixXd::Identity(dim, dim);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  lu.setThreshold(1e-10);
  if (lu.rank() != dim - 1) {
    throw Error(Errc::NotIrreducible, "stationary distribution is not unique");
  }

  system.row(dim - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
  rhs(dim - 1) = 1.0;
  Eigen::VectorXd pi = system.fullPivLu().solve(rhs);

  const Eigen::RowVectorXd residual = pi.transpose() * p - pi.transpose();
  if (residual.cwiseAbs().maxCoeff() > 1e-10 || pi.minCoeff() < -1e-10) {
    throw Error(Errc::NotIrreducible, "stationary solve did not converge");
  }
  std::vector<double> out(q);
  for (std::size_t s = 0; s < q; ++s) out[s] = std::max(0.0, pi(static_cast<Eigen::Index>(s)));
  return out;
}

double markov_entropy_rate(const MarkovSpec& spec) {
  const auto pi = stationary_distribution(spec);
  double rate = 0.0;
  for (std::size_t s = 0; s < pi.size(); ++s) {
    double row_entropy = 0.0;
    for (double p : spec.transition[s]) {
      if (p > 0.0) row_entropy -= p * std::log2(p);
    }
    rate += pi[s] * row_entropy;
  }
  return std::max(0.0, rate);
}

PsdTrace gen_gaussian_psd(std::size_t n, double mean_dbm, double sigma_db, std::uint64_t seed,
                          const BandMetadata& band) {
  if (!(sigma_db > 0.0)) throw Error(Errc::InvalidConfig, "sigma must be positive");
  Rng rng(seed);
  PsdTrace trace;
  trace.band = band;
  trace.samples.resize(n);
  for (auto& v : trace.samples) v = mean_dbm + sigma_db * rng.normal();
  return trace;
}

QuantizedTrace gen_periodic(std::span<const std::int32_t> pattern, std::size_t repeats,
                            std::int32_t q, const BandMetadata& band) {
  if (pattern.empty()) throw Error(Errc::EmptySequence, "empty pattern");
  if (repeats == 0) throw Error(Errc::InvalidConfig, "repeats must be at least 1");
  const auto [lo, hi] = std::minmax_element(pattern.begin(), pattern.end());
  if (*lo < 0) throw Error(Errc::DomainError, "pattern levels must be non-negative");
  if (q == 0) q = *hi + 1;
  if (*hi >= q) throw Error(Errc::DomainError, "pattern level exceeds alphabet");

  QuantizedTrace out;
  out.band = band;
  out.q = q;
  out.levels.reserve(pattern.size() * repeats);
  for (std::size_t r = 0; r < repeats; ++r) {
    out.levels.insert(out.levels.end(), pattern.begin(), pattern.end());
  }
  return out;
}

PsdTrace levels_to_psd(const QuantizedTrace& qt, double floor_dbm, double step_db) {
  PsdTrace trace;
  trace.band = qt.band;
  trace.samples.reserve(qt.levels.size());
  for (auto level : qt.levels) trace.samples.push_back(floor_dbm + step_db * level);
  return trace;
}

MarkovSpec parse_markov_spec(std::string_view json_text) {
  MarkovSpec spec;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    spec.transition = doc.at("transition").get<std::vector<std::vector<double>>>();
    const std::size_t q = spec.transition.size();
    if (doc.contains("initial")) {
      spec.initial = doc.at("initial").get<std::vector<double>>();
    } else {
      spec.initial.assign(q, q ? 1.0 / static_cast<double>(q) : 0.0);
    }
    if (doc.contains("seed")) spec.seed = doc.at("seed").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidStochasticMatrix, std::string("markov spec: ") + e.what());
  }
  validate_markov(spec);
  return spec;
}

MarkovSpec load_markov_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_markov_spec(text.str());
}

}  // namespace rsspredict
