#pragma once

/**
 * @file classifier_search.hpp
 * @brief Exhaustive search for BC-shaped systems R(S, L, E) at a fixed modulus.
 *
 * Pipeline: per-class candidate lists, joint reflection closure across
 * classes, lattice/marking/irreducibility checks, a filter on reducedness,
 * then deduplication under the marked group and matching against the
 * catalog by canonical key.
 */

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ers/ers_catalog.hpp"
#include "ers/isomorphy.hpp"

namespace ers {

enum class SearchFilter { kNonReduced, kReducedNonReducedQuotient, kAll };
enum class MiddleMode { kFull, kGuided };

std::string_view to_string(SearchFilter f);
/// Accepts "non-reduced", "reduced" (reduced R with non-reduced quotient)
/// and "all"; throws InputError otherwise.
SearchFilter parse_search_filter(std::string_view s);

struct SearchConfig {
  int rank = 2;
  int modulus = 4;  // 2, 4 or 8
  SearchFilter filter = SearchFilter::kNonReduced;
  MiddleMode middle_mode = MiddleMode::kFull;
  int threads = 1;
  /// Upper bound on |S candidates| * |L candidates| * |E candidates|.
  std::uint64_t max_combinations = 400'000'000;
};

/// Thrown when the candidate product exceeds SearchConfig::max_combinations.
class SearchLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-empty, negation-symmetric sets at the working modulus that pass every
/// closure condition internal to the class. Middle at rank 1 gives the single
/// empty set. Guided middle keeps d Za + e Zb (d, e in {1, 2}) and, at rank
/// 2, L_{0,0}.
std::vector<ResidueSet> enumerate_class_candidates(int rank, LengthClass c,
                                                   const SearchConfig& config);

struct FoundClass {
  MarkedErs representative;
  CanonicalKey key;  // marked group, working modulus
  std::string catalog_name;  // empty when no catalog entry has this key
};

struct SearchStats {
  std::array<std::size_t, 3> candidates{};
  std::uint64_t combinations = 0;
  std::uint64_t closed = 0;       // passed the joint closure stage
  std::uint64_t systems = 0;      // also passed lattice/marking/irreducibility
  std::uint64_t kept = 0;         // also passed the filter
};

struct SearchResult {
  SearchConfig config;
  std::vector<FoundClass> classes;  // sorted by key
  SearchStats stats;
};

/// Throws InputError for bad configs and SearchLimitError on the guard.
SearchResult search(const SearchConfig& config);

struct MatchReport {
  std::vector<std::pair<CanonicalKey, std::string>> matched;
  std::vector<CanonicalKey> extra;     // found, not in the catalog
  std::vector<std::string> missing;    // catalog names not found
  std::vector<std::string> collisions; // catalog names sharing a key

  bool bijection() const { return extra.empty() && missing.empty() && collisions.empty(); }
};

MatchReport match_report(std::span<const FoundClass> found, std::span<const MarkedErs> catalog,
                         const IsoGroupSpec& group);

}  // namespace ers
