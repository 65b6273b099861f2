#include "rsspredict/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rsspredict/error.hpp"
#include "rsspredict/quantize.hpp"

namespace rsspredict {

double random_entropy(std::int32_t q) {
  if (q < 1) throw Error(Errc::InvalidConfig, "q must be at least 1");
  return std::log2(static_cast<double>(q));
}

double shannon_entropy(const LevelDistribution& dist) {
  double h = 0.0;
  for (double p : dist.probabilities) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  const double cap = std::log2(static_cast<double>(std::max<std::size_t>(1, dist.probabilities.size())));
  return std::clamp(h, 0.0, cap);
}

LzParse lz_parse(std::span<const std::int32_t> levels) {
  const std::size_t n = levels.size();
  if (n == 0) throw Error(Errc::EmptySequence, "cannot parse an empty sequence");

  // ext[j] = length of the common prefix of levels[j..] and levels[i..],
  // rolled from i+1 to i so only one row is kept.
  std::vector<std::size_t> ext(n + 1, 0);
  std::vector<std::size_t> next(n + 1, 0);
  LzParse parse;
  parse.lambdas.assign(n, 1);
  for (std::size_t i = n; i-- > 0;) {
    std::size_t longest = 0;
    for (std::size_t j = 0; j < i; ++j) {
      next[j] = levels[j] == levels[i] ? 1 + ext[j + 1] : 0;
      longest = std::max(longest, std::min(next[j], i - j));
    }
    parse.lambdas[i] = longest + 1;
    std::swap(ext, next);
  }
  return parse;
}

namespace {

// Online suffix automaton; transitions are kept in per-state linked lists
// because level alphabets are small.
class SuffixAutomaton {
 public:
  static constexpr std::int32_t kNone = -1;

  explicit SuffixAutomaton(std::size_t expected_len) {
    states_.reserve(2 * expected_len + 2);
    edges_.reserve(3 * expected_len + 4);
    states_.push_back({0, kNone, kNone});
  }

  std::int32_t root() const { return 0; }
  std::size_t len(std::int32_t v) const { return states_[v].len; }
  std::int32_t link(std::int32_t v) const { return states_[v].link; }

  std::int32_t next(std::int32_t v, std::int32_t symbol) const {
    for (auto e = states_[v].first_edge; e != kNone; e = edges_[e].next) {
      if (edges_[e].symbol == symbol) return edges_[e].target;
    }
    return kNone;
  }

  void extend(std::int32_t symbol) {
    const auto cur = add_state(states_[last_].len + 1, kNone);
    auto p = last_;
    while (p != kNone && next(p, symbol) == kNone) {
      add_edge(p, symbol, cur);
      p = states_[p].link;
    }
    if (p == kNone) {
      states_[cur].link = root();
    } else {
      const auto q = next(p, symbol);
      if (states_[p].len + 1 == states_[q].len) {
        states_[cur].link = q;
      } else {
        const auto clone = add_state(states_[p].len + 1, states_[q].link);
        for (auto e = states_[q].first_edge; e != kNone; e = edges_[e].next) {
          add_edge(clone, edges_[e].symbol, edges_[e].target);
        }
        while (p != kNone && next(p, symbol) == q) {
          redirect(p, symbol, clone);
          p = states_[p].link;
        }
        states_[q].link = clone;
        states_[cur].link = clone;
      }
    }
    last_ = cur;
  }

 private:
  struct State {
    std::size_t len;
    std::int32_t link;
    std::int32_t first_edge;
  };
  struct Edge {
    std::int32_t symbol;
    std::int32_t target;
    std::int32_t next;
  };

  std::int32_t add_state(std::size_t length, std::int32_t suffix_link) {
    states_.push_back({length, suffix_link, kNone});
    return static_cast<std::int32_t>(states_.size() - 1);
  }

  void add_edge(std::int32_t from, std::int32_t symbol, std::int32_t to) {
    edges_.push_back({symbol, to, states_[from].first_edge});
    states_[from].first_edge = static_cast<std::int32_t>(edges_.size() - 1);
  }

  void redirect(std::int32_t from, std::int32_t symbol, std::int32_t to) {
    for (auto e = states_[from].first_edge; e != kNone; e = edges_[e].next) {
      if (edges_[e].symbol == symbol) {
        edges_[e].target = to;
        return;
      }
    }
  }

  std::vector<State> states_;
  std::vector<Edge> edges_;
  std::int32_t last_ = 0;
};

}  // namespace

LzParse lz_parse_fast(std::span<const std::int32_t> levels) {
  const std::size_t n = levels.size();
  if (n == 0) throw Error(Errc::EmptySequence, "cannot parse an empty sequence");

  SuffixAutomaton sam(n);
  LzParse parse;
  parse.lambdas.resize(n);

  // Invariant: levels[i, i + matched) is a substring of levels[0, i) and is
  // recognised by automaton state `state`.
  std::int32_t state = sam.root();
  std::size_t matched = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      if (matched > 0) {
        --matched;
        if (matched <= sam.len(sam.link(state))) state = sam.link(state);
      }
      sam.extend(levels[i - 1]);
      // extend() may have split `state`; the shorter strings move to its link.
      while (state != sam.root() && matched <= sam.len(sam.link(state))) {
        state = sam.link(state);
      }
    }
    while (i + matched < n) {
      const auto to = sam.next(state, levels[i + matched]);
      if (to == SuffixAutomaton::kNone) break;
      state = to;
      ++matched;
    }
    parse.lambdas[i] = matched + 1;
  }
  return parse;
}

double lz_entropy_estimate(std::span<const std::int32_t> levels) {
  const std::size_t n = levels.size();
  if (n < 2) {
    throw Error(Errc::SequenceTooShort,
                "entropy estimate needs at least 2 symbols, got " + std::to_string(n));
  }
  const auto parse = lz_parse_fast(levels);
  const double total = std::accumulate(parse.lambdas.begin(), parse.lambdas.end(), 0.0);
  const auto nd = static_cast<double>(n);
  return nd * std::log2(nd) / total;
}

double block_entropy_rate(std::span<const std::int32_t> levels, std::size_t k) {
  const std::size_t n = levels.size();
  if (k == 0) throw Error(Errc::InvalidConfig, "block length must be at least 1");
  if (k > n) {
    throw Error(Errc::BlockTooLong,
                "block length " + std::to_string(k) + " exceeds " + std::to_string(n));
  }
  const std::size_t windows = n - k + 1;
  std::vector<std::size_t> starts(windows);
  std::iota(starts.begin(), starts.end(), std::size_t{0});
  auto window_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(levels.begin() + a, levels.begin() + a + k,
                                        levels.begin() + b, levels.begin() + b + k);
  };
  std::sort(starts.begin(), starts.end(), window_less);

  double h = 0.0;
  const auto total = static_cast<double>(windows);
  for (std::size_t run = 0; run < windows;) {
    std::size_t end = run + 1;
    while (end < windows && !window_less(starts[run], starts[end])) ++end;
    const double p = static_cast<double>(end - run) / total;
    h -= p * std::log2(p);
    run = end;
  }
  return std::max(0.0, h) / static_cast<double>(k);
}

EntropyReport entropy_report(const QuantizedTrace& qt) {
  EntropyReport report;
  report.q = qt.q;
  report.n = qt.levels.size();
  report.e_rand = random_entropy(qt.q);
  report.e_actual = lz_entropy_estimate(qt.levels);
  report.e_unc = shannon_entropy(level_distribution(qt));
  return report;
}

}  // namespace rsspredict
