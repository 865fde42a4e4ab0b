#include "ers/classifier_search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "ers/affine_quotient.hpp"
#include "ers/error.hpp"
#include "square_mask.hpp"

namespace ers {

namespace {

void validate(const SearchConfig& config) {
  if (config.rank < 1 || config.rank > 4) {
    throw InputError("search rank must be in 1..4, got " + std::to_string(config.rank));
  }
  if (config.modulus != 2 && config.modulus != 4 && config.modulus != 8) {
    throw InputError("search modulus must be 2, 4 or 8, got " + std::to_string(config.modulus));
  }
  if (config.threads < 1) throw InputError("threads must be >= 1");
}

std::uint64_t all_bits(int n) {
  return n * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1;
}

std::vector<std::uint64_t> subgroups(int n) {
  std::set<std::uint64_t> found;
  for (int g1 = 0; g1 < n * n; ++g1) {
    for (int g2 = g1; g2 < n * n; ++g2) {
      found.insert(generated_subgroup(n, (std::uint64_t{1} << g1) | (std::uint64_t{1} << g2)));
    }
  }
  return {found.begin(), found.end()};
}

// Nonzero |k| over closure conditions between the given classes.
std::vector<int> pairings(int rank, LengthClass reflecting, LengthClass reflected) {
  std::set<int> ks;
  for (const ClosureCondition& c : closure_conditions(rank)) {
    if (c.reflecting_class == reflecting && c.reflected_class == reflected && c.k != 0) {
      ks.insert(c.k < 0 ? -c.k : c.k);
    }
  }
  return {ks.begin(), ks.end()};
}

bool guided_middle(int rank, const ResidueSet& s) {
  for (int d : {1, 2}) {
    for (int e : {1, 2}) {
      if (s == ResidueSet::lattice(d, e)) return true;
    }
  }
  return rank == 2 && s == l_set(0, 0);
}

struct Candidate {
  std::uint64_t mask = 0;
  std::uint64_t periods = 0;
  std::array<std::uint64_t, 5> scaled{};  // scaled[k] = k * mask for k in {1, 2, 4}
};

Candidate prepare(int n, const ResidueSet& s) {
  Candidate c;
  c.mask = square::at(n, s);
  c.periods = square::periods(n, c.mask);
  for (int k : {1, 2, 4}) c.scaled[static_cast<std::size_t>(k)] = square::scale(n, c.mask, k);
  return c;
}

// Every cross-class condition T2 - k T1 c T2, i.e. k T1 c Per(T2).
struct CrossCondition {
  std::size_t reflecting;
  std::size_t reflected;
  int k;
};

bool holds(const CrossCondition& cond, const std::array<const Candidate*, 3>& t) {
  return (t[cond.reflecting]->scaled[static_cast<std::size_t>(cond.k)] &
          ~t[cond.reflected]->periods) == 0;
}

bool lattice_full(int n, std::uint64_t s, std::uint64_t m, std::uint64_t l) {
  std::uint64_t gens = m | l;
  for (std::uint64_t rest = s; rest != 0; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    gens |= square::translate(n, s, -(b / n), -(b % n));
    gens |= square::translate(n, s, b / n, b % n);
  }
  return generated_subgroup(n, gens) == all_bits(n);
}

bool passes_filter(SearchFilter f, const MarkedErs& r) {
  switch (f) {
    case SearchFilter::kAll:
      return true;
    case SearchFilter::kNonReduced:
      return !is_reduced(r);
    case SearchFilter::kReducedNonReducedQuotient:
      return is_reduced(r) && is_quotient_non_reduced(quotient(r));
  }
  return false;
}

struct ChunkResult {
  std::vector<std::pair<CanonicalKey, MarkedErs>> firsts;  // in enumeration order
  SearchStats stats;
};

}  // namespace

std::string_view to_string(SearchFilter f) {
  switch (f) {
    case SearchFilter::kNonReduced:
      return "non-reduced";
    case SearchFilter::kReducedNonReducedQuotient:
      return "reduced";
    case SearchFilter::kAll:
      return "all";
  }
  return "?";
}

SearchFilter parse_search_filter(std::string_view s) {
  if (s == "non-reduced") return SearchFilter::kNonReduced;
  if (s == "reduced") return SearchFilter::kReducedNonReducedQuotient;
  if (s == "all") return SearchFilter::kAll;
  throw InputError("unknown filter '" + std::string(s) + "' (use non-reduced, reduced or all)");
}

std::vector<ResidueSet> enumerate_class_candidates(int rank, LengthClass c,
                                                   const SearchConfig& config) {
  SearchConfig checked = config;
  checked.rank = rank;
  validate(checked);
  if (c == LengthClass::kMiddle && rank == 1) return {ResidueSet()};
  int n = config.modulus;
  std::vector<int> ks = pairings(rank, c, c);

  std::vector<std::uint64_t> masks;
  for (std::uint64_t p : subgroups(n)) {
    // T - k T c T for every k forces k T c Per(T); so with Per(T) = P the
    // set T is a union of P-cosets inside {v : k v in P for all k}.
    std::vector<std::uint64_t> cosets;
    std::uint64_t covered = 0;
    for (int b = 0; b < n * n; ++b) {
      if (covered >> b & 1U) continue;
      bool inside = true;
      for (int k : ks) {
        if ((square::bit(n, std::int64_t{k} * (b / n), std::int64_t{k} * (b % n)) & p) == 0) {
          inside = false;
        }
      }
      if (!inside) continue;
      std::uint64_t coset = square::translate(n, p, b / n, b % n);
      covered |= coset;
      cosets.push_back(coset);
    }
    if (cosets.size() > 20) throw std::logic_error("unexpectedly many cosets");
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << cosets.size()); ++pick) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < cosets.size(); ++i) {
        if (pick >> i & 1U) mask |= cosets[i];
      }
      if (square::negate(n, mask) != mask) continue;
      if (square::periods(n, mask) != p) continue;
      masks.push_back(mask);
    }
  }
  std::sort(masks.begin(), masks.end());

  std::vector<ResidueSet> out;
  for (std::uint64_t mask : masks) {
    ResidueSet s = ResidueSet::from_mask({n, n}, mask);
    if (c == LengthClass::kMiddle && config.middle_mode == MiddleMode::kGuided &&
        !guided_middle(rank, s)) {
      continue;
    }
    out.push_back(s);
  }
  return out;
}

SearchResult search(const SearchConfig& config) {
  validate(config);
  const int n = config.modulus;
  const int rank = config.rank;
  SearchResult result;
  result.config = config;

  std::array<std::vector<ResidueSet>, 3> sets;
  std::array<std::vector<Candidate>, 3> cands;
  for (LengthClass c : kLengthClasses) {
    auto i = static_cast<std::size_t>(c);
    sets[i] = enumerate_class_candidates(rank, c, config);
    for (const ResidueSet& s : sets[i]) cands[i].push_back(prepare(n, s));
    result.stats.candidates[i] = sets[i].size();
  }
  std::uint64_t combos = 1;
  for (const auto& v : cands) {
    std::uint64_t size = v.size();
    if (size != 0 && combos > config.max_combinations / size) {
      throw SearchLimitError("candidate product exceeds the limit of " +
                             std::to_string(config.max_combinations) +
                             "; use guided middle mode or a smaller modulus");
    }
    combos *= size;
  }
  result.stats.combinations = combos;

  std::vector<CrossCondition> short_long;
  std::vector<CrossCondition> with_middle;
  for (LengthClass x : kLengthClasses) {
    for (LengthClass y : kLengthClasses) {
      if (x == y) continue;
      for (int k : pairings(rank, x, y)) {
        CrossCondition cond{static_cast<std::size_t>(x), static_cast<std::size_t>(y), k};
        bool middle = x == LengthClass::kMiddle || y == LengthClass::kMiddle;
        (middle ? with_middle : short_long).push_back(cond);
      }
    }
  }

  IsoGroupSpec group{IsoGroupKind::kMarked, n};
  auto run_chunk = [&](std::size_t begin, std::size_t end, ChunkResult& out) {
    std::set<CanonicalKey> seen;
    std::array<const Candidate*, 3> t{};
    for (std::size_t is = begin; is < end; ++is) {
      t[0] = &cands[0][is];
      for (std::size_t il = 0; il < cands[2].size(); ++il) {
        t[2] = &cands[2][il];
        if (!std::all_of(short_long.begin(), short_long.end(),
                         [&](const CrossCondition& c) { return holds(c, t); })) {
          continue;
        }
        for (std::size_t im = 0; im < cands[1].size(); ++im) {
          t[1] = &cands[1][im];
          if (!std::all_of(with_middle.begin(), with_middle.end(),
                           [&](const CrossCondition& c) { return holds(c, t); })) {
            continue;
          }
          ++out.stats.closed;
          if (!lattice_full(n, t[0]->mask, t[1]->mask, t[2]->mask)) continue;
          MarkedErs r(rank, sets[0][is], sets[1][im], sets[2][il]);
          if (!check_axioms_symbolic(r).passed()) continue;
          ++out.stats.systems;
          if (!passes_filter(config.filter, r)) continue;
          ++out.stats.kept;
          CanonicalKey key = canonical_form(r, group);
          if (seen.insert(key).second) out.firsts.emplace_back(std::move(key), std::move(r));
        }
      }
    }
  };

  std::size_t outer = cands[0].size();
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(config.threads),
                                              std::max<std::size_t>(outer, 1));
  std::vector<ChunkResult> chunks(workers);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t begin = outer * w / workers;
      std::size_t end = outer * (w + 1) / workers;
      pool.emplace_back([&, begin, end, w] { run_chunk(begin, end, chunks[w]); });
    }
  }

  std::map<CanonicalKey, std::string> catalog_names;
  for (const MarkedErs& r : catalog(rank)) {
    catalog_names.emplace(canonical_form(r, group), r.name());
  }
  std::map<CanonicalKey, MarkedErs> merged;
  for (ChunkResult& chunk : chunks) {
    result.stats.closed += chunk.stats.closed;
    result.stats.systems += chunk.stats.systems;
    result.stats.kept += chunk.stats.kept;
    for (auto& [key, r] : chunk.firsts) merged.emplace(key, std::move(r));
  }
  for (auto& [key, r] : merged) {
    auto it = catalog_names.find(key);
    std::string name = it == catalog_names.end() ? std::string() : it->second;
    r.set_name(name);
    result.classes.push_back({std::move(r), key, name});
  }
  return result;
}

MatchReport match_report(std::span<const FoundClass> found, std::span<const MarkedErs> catalog,
                         const IsoGroupSpec& group) {
  MatchReport report;
  std::map<CanonicalKey, std::vector<std::string>> by_key;
  for (const MarkedErs& r : catalog) by_key[canonical_form(r, group)].push_back(r.name());
  std::set<CanonicalKey> found_keys;
  for (const FoundClass& f : found) {
    found_keys.insert(f.key);
    auto it = by_key.find(f.key);
    if (it == by_key.end()) {
      report.extra.push_back(f.key);
    } else {
      report.matched.emplace_back(f.key, it->second.front());
    }
  }
  for (const auto& [key, names] : by_key) {
    if (names.size() > 1) {
      for (const std::string& name : names) report.collisions.push_back(name);
    }
    if (!found_keys.contains(key)) {
      for (const std::string& name : names) report.missing.push_back(name);
    }
  }
  return report;
}

}  // namespace ers
