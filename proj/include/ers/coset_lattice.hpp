#pragma once

/**
 * @file coset_lattice.hpp
 * @brief Exact arithmetic on translation sets in the radical lattice.
 *
 * Every translation set attached to a root-length class is a subset of
 * Za + Zb that is a finite union of cosets of a product sublattice
 * M_a Z a + M_b Z b. A ResidueSet stores such a set as the modulus pair
 * (M_a, M_b) together with a bitmask over the residues (r_a, r_b),
 * 0 <= r_a < M_a, 0 <= r_b < M_b. Moduli are divisors of 8 on each axis, so
 * the mask always fits in 64 bits.
 *
 * Values are kept in canonical form: the modulus is the smallest product
 * period of the set, hence structural equality is set equality.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ers {

/// Coefficient vector (m, n) of the radical element m*a + n*b.
struct RadicalVector {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend auto operator<=>(const RadicalVector&, const RadicalVector&) = default;
};

struct Modulus {
  int a = 1;
  int b = 1;

  friend auto operator<=>(const Modulus&, const Modulus&) = default;
};

struct Residue {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// Largest modulus supported on either axis.
inline constexpr int kMaxModulus = 8;

class ResidueSet {
 public:
  /// The empty set.
  ResidueSet() = default;

  /// Throws InputError if a modulus component does not divide 8 or a residue
  /// is out of range.
  static ResidueSet make(Modulus modulus, std::span<const Residue> residues);
  static ResidueSet make(Modulus modulus, std::initializer_list<Residue> residues);

  /// The set of vectors whose residue mod `modulus` has its bit set in
  /// `mask` (bit index r_a * modulus.b + r_b).
  static ResidueSet from_mask(Modulus modulus, std::uint64_t mask);

  /// step_a Z a + step_b Z b.
  static ResidueSet lattice(int step_a, int step_b);
  static ResidueSet full() { return lattice(1, 1); }

  Modulus modulus() const { return modulus_; }
  std::uint64_t mask() const { return mask_; }
  std::vector<Residue> residues() const;
  int residue_count() const;
  bool empty() const { return mask_ == 0; }

  bool contains(RadicalVector v) const;

  /// Mask of this set viewed at the finer modulus `target`, which
  /// must be a componentwise multiple of modulus().
  std::uint64_t mask_at(Modulus target) const;

  ResidueSet translated(RadicalVector v) const;
  bool is_subset_of(const ResidueSet& other) const;

  /// The translations p with S + p = S, as a set (always a subgroup).
  ResidueSet periods() const;

  std::string to_string() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  ResidueSet(Modulus modulus, std::uint64_t mask) : modulus_(modulus), mask_(mask) {}

  // Shrinks the modulus to the smallest product period of the set.
  static ResidueSet canonical(Modulus m, std::uint64_t mask);

  Modulus modulus_{1, 1};
  std::uint64_t mask_ = 0;
};

ResidueSet set_union(const ResidueSet& s, const ResidueSet& t);
ResidueSet intersect(const ResidueSet& s, const ResidueSet& t);
ResidueSet negate(const ResidueSet& s);
inline bool equals(const ResidueSet& s, const ResidueSet& t) { return s == t; }

/// {w - k*v : w in t2, v in t1}, the translation part of reflecting a root
/// with translation in t2 by a root with translation in t1 when the finite
/// pairing is k. For k = 0 the result is t2; otherwise an empty operand
/// gives the empty set.
ResidueSet scale_subtract(const ResidueSet& t2, std::int64_t k, const ResidueSet& t1);

/// L_{i,j} = {ma + nb | (m-i)(n-j) = 0 mod 2}.
ResidueSet l_set(int i, int j);
/// L^{s1,s2}_{i,j} = {s2*m a + s1*n b | (m-i)(n-j) = 0 mod 2}.
ResidueSet l_set_scaled(int i, int j, int s1, int s2);

/// Image of the set under the projection ma + nb -> n (a-modulus 1).
ResidueSet project_to_b(const ResidueSet& s);
/// Image of the set under the projection ma + nb -> m (b-modulus 1).
ResidueSet project_to_a(const ResidueSet& s);

/// Linear map of Za + Zb with determinant +-1, acting on coefficient
/// columns: (m, n) -> (e00*m + e01*n, e10*m + e11*n).
class RadicalMap {
 public:
  using Entries = std::array<std::array<std::int64_t, 2>, 2>;

  RadicalMap() : entries_{{{1, 0}, {0, 1}}} {}
  /// Throws InputError unless the determinant is +-1.
  explicit RadicalMap(const Entries& entries);

  static RadicalMap identity() { return RadicalMap(); }
  /// a <-> b.
  static RadicalMap swap();
  /// a -> a + b, b -> b.
  static RadicalMap shear_a_to_a_plus_b();

  const Entries& entries() const { return entries_; }
  std::int64_t determinant() const;
  RadicalVector apply(RadicalVector v) const;
  RadicalMap inverse() const;

  /// (this * other)(v) = this(other(v)).
  RadicalMap operator*(const RadicalMap& other) const;

  friend bool operator==(const RadicalMap&, const RadicalMap&) = default;

 private:
  Entries entries_;
};

/// {M v : v in S}. The result is again a union of cosets of a product
/// lattice because N Z^2 (N the larger modulus) is M-invariant.
ResidueSet apply_map(const RadicalMap& map, const ResidueSet& s);

/// Subgroup of (Z/N)^2 generated by `generators` (bit r_a * N + r_b),
/// N in {1, 2, 4, 8}.
std::uint64_t generated_subgroup(int n, std::uint64_t generators);

}  // namespace ers
