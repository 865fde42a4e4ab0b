#pragma once

/**
 * @file isomorphy.hpp
 * @brief Isomorphisms between BC-shaped systems and orbit canonical forms.
 *
 * An isomorphism of BC-shaped systems induces a signed permutation on the
 * finite part and a unimodular map on the radical lattice. Signed
 * permutations preserve every class-uniform system, so up to them an
 * isomorphism is a pair (shift, map): first eps_i -> eps_i + x_i with x_i in
 * the radical lattice, then the radical map. The marked group keeps the
 * line Ra, i.e. its radical maps are upper triangular.
 */

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ers/coset_lattice.hpp"
#include "ers/ers_catalog.hpp"

namespace ers {

enum class IsoGroupKind { kMarked, kUnmarked };

struct IsoGroupSpec {
  IsoGroupKind kind = IsoGroupKind::kUnmarked;
  int modulus = 4;  // working modulus, 4 or 8
};

/// eps_i -> eps_i + shift for every i, then `map` on the radical.
struct RootIsomorphism {
  RadicalMap map;
  RadicalVector shift;
};

/// Applies a radical map; the finite part is untouched.
MarkedErs apply_iso(const RadicalMap& map, const MarkedErs& r);

/// Throws InputError if the shift does not keep translations uniform within
/// each length class (then the image is not BC-shaped in this basis).
MarkedErs apply_iso(const RootIsomorphism& iso, const MarkedErs& r);

/// Radical maps of the group reduced mod the working modulus, with entries
/// in [0, N). Every element lifts to an integer matrix of determinant +-1.
std::vector<RadicalMap::Entries> group_elements(const IsoGroupSpec& group);

using CanonicalKey = std::string;

/// Lexicographically smallest (short, middle, long) mask triple over the
/// orbit of r, serialized. Throws InputError when a translation set does not
/// live at the working modulus.
CanonicalKey canonical_form(const MarkedErs& r, const IsoGroupSpec& group);

struct IsoClass {
  CanonicalKey key;
  std::vector<MarkedErs> members;
};

/// Groups by canonical key, classes ordered by first appearance.
std::vector<IsoClass> dedup(std::span<const MarkedErs> entries, const IsoGroupSpec& group);

struct ListedIsomorphism {
  std::string lhs;
  std::string rhs;
  RootIsomorphism iso;  // sends lhs onto rhs
  std::string via;
};

/// The fourteen isomorphisms between non-reduced catalog types.
const std::vector<ListedIsomorphism>& listed_isomorphisms();

struct IsoCheck {
  ListedIsomorphism entry;
  bool verified = false;
  std::string detail;
};

struct IsoReport {
  int rank = 0;
  std::vector<IsoCheck> checks;

  int verified_count() const;
  bool all_verified() const { return verified_count() == static_cast<int>(checks.size()); }
};

/// Checks every listed isomorphism whose endpoints exist at this rank.
IsoReport verify_listed_isomorphisms(int rank);

}  // namespace ers
