#pragma once

// Bit tricks on residue masks of (Z/N)^2, N in {1, 2, 4, 8}, bit r_a * N + r_b.
// Shared by the orbit and search code, which work at one square modulus.

#include <bit>
#include <cstdint>

#include "ers/coset_lattice.hpp"

namespace ers::square {

inline int floor_mod(std::int64_t x, int n) {
  std::int64_t r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

inline std::uint64_t bit(int n, std::int64_t m, std::int64_t k) {
  return std::uint64_t{1} << (floor_mod(m, n) * n + floor_mod(k, n));
}

inline std::uint64_t translate(int n, std::uint64_t mask, std::int64_t dm, std::int64_t dn) {
  int sa = floor_mod(dm, n);
  int sb = floor_mod(dn, n);
  if (sa == 0 && sb == 0) return mask;
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    out |= bit(n, b / n + sa, b % n + sb);
  }
  return out;
}

/// {k v : v in mask}.
inline std::uint64_t scale(int n, std::uint64_t mask, int k) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    out |= bit(n, std::int64_t{k} * (b / n), std::int64_t{k} * (b % n));
  }
  return out;
}

inline std::uint64_t negate(int n, std::uint64_t mask) { return scale(n, mask, -1); }

/// The subgroup of p with mask + p = mask.
inline std::uint64_t periods(int n, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (int b = 0; b < n * n; ++b) {
    if (translate(n, mask, b / n, b % n) == mask) out |= std::uint64_t{1} << b;
  }
  return out;
}

/// Image under (m, k) -> (e00 m + e01 k, e10 m + e11 k) mod n.
inline std::uint64_t map(int n, std::uint64_t mask, const RadicalMap::Entries& e) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    std::int64_t m = b / n;
    std::int64_t k = b % n;
    out |= bit(n, e[0][0] * m + e[0][1] * k, e[1][0] * m + e[1][1] * k);
  }
  return out;
}

/// Every set of the given modulus viewed at (n, n); throws InputError if
/// the modulus does not divide n.
inline std::uint64_t at(int n, const ResidueSet& s) { return s.empty() ? 0 : s.mask_at({n, n}); }

}  // namespace ers::square
