#pragma once

/**
 * @file affine_quotient.hpp
 * @brief The quotient R/G by the marking G = Ra and its affine type.
 *
 * The quotient only remembers, per length class, which b-coefficients
 * occur. Each profile is stored as a ResidueSet with a-modulus 1.
 */

#include <array>

#include "ers/coset_lattice.hpp"
#include "ers/ers_catalog.hpp"

namespace ers {

struct AffineProfile {
  int rank = 1;
  std::array<ResidueSet, 3> classes;  // indexed by LengthClass

  const ResidueSet& profile(LengthClass c) const { return classes[static_cast<std::size_t>(c)]; }

  friend bool operator==(const AffineProfile&, const AffineProfile&) = default;
};

AffineProfile quotient(const MarkedErs& r);

/// Matches (short, middle, long) against (Z,Z,Z) BCC, (Z,2Z,4Z) C^vBC,
/// (Z,Z,2Z) BB^v and (Z,2Z,2Z) C^vC. At rank 1 the middle profile is absent
/// and a long profile 2Z is read as C^vC (BB^v needs rank >= 2).
AffineType identify_affine_type(const AffineProfile& profile);

/// Some short b-coefficient v has 2v among the long b-coefficients.
bool is_quotient_non_reduced(const AffineProfile& profile);

std::string to_string(const AffineProfile& profile);

}  // namespace ers
