#pragma once

/**
 * @file ers_catalog.hpp
 * @brief Marked elliptic root systems of BC-shape and the named catalog.
 *
 * A marked system of rank l is stored as
 *
 *     R = (R(BC_l)_s + S) u (R(BC_l)_m + L) u (R(BC_l)_l + E)
 *
 * with S, L, E subsets of the radical lattice Za + Zb, each a ResidueSet.
 * The marking is the line Ra. At rank 1 there are no middle roots and L is
 * the empty set.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ers/coset_lattice.hpp"
#include "ers/finite_roots.hpp"

namespace ers {

/// The four non-reduced affine root systems built on BC_l, plus a catch-all.
enum class AffineType : std::uint8_t { kBCC, kCvBC, kBBv, kCvC, kReducedOrOther };

std::string_view to_string(AffineType t);

class MarkedErs {
 public:
  /// Throws InputError for rank < 1.
  MarkedErs(int rank, ResidueSet short_set, ResidueSet middle_set, ResidueSet long_set,
            std::string name = {});

  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const ResidueSet& translation(LengthClass c) const {
    return translations_[static_cast<std::size_t>(c)];
  }
  const std::array<ResidueSet, 3>& translations() const { return translations_; }

  /// Whether a vector (finite coordinates followed by m, n) lies in R.
  bool contains(std::span<const std::int64_t> vector) const;

  /// Same root set and rank; names are ignored.
  friend bool operator==(const MarkedErs& x, const MarkedErs& y) {
    return x.rank_ == y.rank_ && x.translations_ == y.translations_;
  }

 private:
  int rank_;
  std::array<ResidueSet, 3> translations_;
  std::string name_;
};

/// Static description of a catalog label.
struct TypeInfo {
  std::string_view name;     // ASCII label, e.g. "CvC(2)*1'"
  std::string_view display;  // label in the usual notation
  AffineType quotient;       // affine type of R/G
  bool reduced;              // R itself reduced
  int min_rank;
  int exact_rank;  // 0 unless the type exists at a single rank only
};

const std::vector<TypeInfo>& type_table();
/// Throws InputError for unknown labels.
const TypeInfo& type_info(std::string_view name);
bool admissible(const TypeInfo& info, int rank);

/// Builds a named type; throws InputError for unknown names or ranks outside
/// the type's admissible range.
MarkedErs build(std::string_view name, int rank);

enum class CatalogFilter { kAll, kReduced, kNonReduced };

/// All admissible catalog entries at this rank in table order.
std::vector<MarkedErs> catalog(int rank, CatalogFilter filter = CatalogFilter::kAll);

/// Roots alpha + m a + n b with |m|, |n| <= bound, as vectors of length
/// rank + 2; ordered by class, finite root, m, n.
std::vector<std::vector<std::int64_t>> roots_in_window(const MarkedErs& r, int bound);

struct CheckResult {
  bool passed = true;
  std::string witness;

  void fail(std::string why) {
    if (passed) witness = std::move(why);
    passed = false;
  }
};

struct AxiomReport {
  /// Class shape: short and long non-empty, middle empty iff rank 1.
  CheckResult shape;
  /// axioms[i] is axiom i + 1: full lattice, anisotropy, integrality,
  /// reflection closure, irreducibility.
  std::array<CheckResult, 5> axioms;
  /// G n Q(R) full in G for G = Ra.
  CheckResult marking;

  bool passed() const;
  std::string summary() const;
};

/// Exact verification on the infinite set via coset algebra.
AxiomReport check_axioms_symbolic(const MarkedErs& r);

/// Literal verification on roots_in_window(r, bound).
AxiomReport check_axioms_windowed(const MarkedErs& r, int bound);

/// The radical part Q(R) n (Ra + Rb) of the root lattice as a subgroup mask
/// of (Z/N)^2; it always contains N Z^2. Empty short class gives 0.
std::uint64_t radical_lattice_mask(const MarkedErs& r, int n);

/// No root has its double in R.
bool is_reduced(const MarkedErs& r);

struct TierNumbers {
  int t1 = 1;  // b-direction
  int t2 = 1;  // a-direction

  friend bool operator==(const TierNumbers&, const TierNumbers&) = default;
};

/// nullopt when a direction profile is not a coset of a subgroup.
std::optional<TierNumbers> tier_numbers(const MarkedErs& r);

}  // namespace ers
