#pragma once

// Brute-force reference computations used as independent oracles: they only
// touch membership on explicit point windows, never the residue algebra.

#include <cstdint>
#include <functional>
#include <set>
#include <utility>

#include "ers/coset_lattice.hpp"

namespace ers::testing {

using Point = std::pair<std::int64_t, std::int64_t>;

inline std::set<Point> window_points(const ResidueSet& s, int bound) {
  std::set<Point> out;
  for (std::int64_t m = -bound; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) {
      if (s.contains({m, n})) out.insert({m, n});
    }
  }
  return out;
}

inline std::set<Point> window_points(const std::function<bool(std::int64_t, std::int64_t)>& pred,
                                     int bound) {
  std::set<Point> out;
  for (std::int64_t m = -bound; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) {
      if (pred(m, n)) out.insert({m, n});
    }
  }
  return out;
}

inline std::int64_t mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

// Residue mask at (n, n) from a membership predicate on one period.
inline std::uint64_t mask_from(const std::function<bool(std::int64_t, std::int64_t)>& pred, int n) {
  std::uint64_t out = 0;
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      if (pred(m, k)) out |= std::uint64_t{1} << (m * n + k);
    }
  }
  return out;
}

}  // namespace ers::testing
