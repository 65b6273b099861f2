#pragma once

// Test-only reference computations. Nothing here calls into the library
// routine it is used to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

// Match lengths straight from the definition: the longest l such that
// s[i, i+l) equals some s[j, j+l) with j + l <= i. Roughly cubic; keep n small.
inline std::vector<std::size_t> lambdas_by_definition(const std::vector<std::int32_t>& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    for (std::size_t l = 1; i + l <= n && l <= i; ++l) {
      bool found = false;
      for (std::size_t j = 0; j + l <= i && !found; ++j) {
        found = std::equal(s.begin() + j, s.begin() + j + l, s.begin() + i);
      }
      if (!found) break;
      best = l;
    }
    out[i] = best + 1;
  }
  return out;
}

inline double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -(p * std::log2(p) + (1 - p) * std::log2(1 - p));
}

inline double fano(double pi, int q) {
  return binary_entropy(pi) + (1 - pi) * std::log2(static_cast<double>(q - 1));
}

// First grid point on [1/q, 1] where the Fano bound drops to e or below.
inline double fano_root_by_grid(double e, int q, double step) {
  for (double pi = 1.0 / q; pi <= 1.0; pi += step) {
    if (fano(pi, q) <= e) return pi;
  }
  return 1.0;
}

inline double plug_in_entropy(const std::vector<std::int32_t>& s) {
  std::map<std::int32_t, std::size_t> counts;
  for (auto v : s) ++counts[v];
  double h = 0.0;
  for (const auto& [v, c] : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(s.size());
    h -= p * std::log2(p);
  }
  return h;
}

// Random level sequence for property tests; uses its own engine.
inline std::vector<std::int32_t> random_levels(std::mt19937_64& rng, std::size_t n, int q) {
  std::uniform_int_distribution<int> pick(0, q - 1);
  std::vector<std::int32_t> s(n);
  for (auto& v : s) v = pick(rng);
  return s;
}

}  // namespace oracle
