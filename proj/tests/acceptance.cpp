// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ers/affine_quotient.hpp"
#include "ers/classifier_search.hpp"
#include "ers/ers_catalog.hpp"
#include "ers/isomorphy.hpp"
#include "mutants.hpp"

using namespace ers;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

int failures = 0;

void report(int id, const char* title, const std::function<Verdict()>& body) {
  auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  if (!v.pass) ++failures;
  std::printf("%s %d %s (%.2f s)%s%s\n", v.pass ? "PASS" : "FAIL", id, title, seconds_since(start),
              v.detail.empty() ? "" : ": ", v.detail.c_str());
  std::fflush(stdout);
}

Verdict axiom_suite() {
  Verdict v;
  auto start = Clock::now();
  int entries = 0;
  for (int rank = 1; rank <= 3; ++rank) {
    for (const MarkedErs& r : catalog(rank)) {
      ++entries;
      AxiomReport sym = check_axioms_symbolic(r);
      AxiomReport win = check_axioms_windowed(r, 3);
      v.require(sym.passed(), r.name() + " rank " + std::to_string(rank) + " symbolic " + sym.summary());
      v.require(win.passed(), r.name() + " rank " + std::to_string(rank) + " windowed " + win.summary());
    }
  }
  double t = seconds_since(start);
  v.require(t < 10.0, "runtime " + std::to_string(t) + " s exceeds 10 s");
  if (v.pass) v.detail = std::to_string(entries) + " entries, symbolic and B=3 windowed agree";
  return v;
}

Verdict reducedness_partition() {
  Verdict v;
  const std::map<int, std::pair<int, int>> expected{{1, {5, 27}}, {2, {6, 35}}};
  for (auto [rank, counts] : expected) {
    int reduced = 0;
    int non_reduced = 0;
    for (const MarkedErs& r : catalog(rank)) {
      bool listed_reduced = type_info(r.name()).reduced;
      v.require(is_reduced(r) == listed_reduced, r.name() + " reducedness differs from its listing");
      (is_reduced(r) ? reduced : non_reduced)++;
    }
    v.require(reduced == counts.first && non_reduced == counts.second,
              "rank " + std::to_string(rank) + ": " + std::to_string(reduced) + " reduced, " +
                  std::to_string(non_reduced) + " non-reduced");
  }
  if (v.pass) v.detail = "rank 2: 6/35, rank 1: 5/27";
  return v;
}

Verdict quotient_typing() {
  Verdict v;
  const std::map<std::string, AffineType> reduced_table{
      {"BC(1,2)", AffineType::kBCC},       {"BC(1,1)*", AffineType::kBCC},
      {"BC(4,2)", AffineType::kCvBC},      {"BC(4,4)*", AffineType::kCvBC},
      {"BC(2,2)sigma1", AffineType::kBBv}, {"BC(2,2)sigma2", AffineType::kCvC},
  };
  std::map<AffineType, int> families;
  for (const MarkedErs& r : catalog(2)) {
    AffineProfile q = quotient(r);
    AffineType t = identify_affine_type(q);
    v.require(is_quotient_non_reduced(q), r.name() + " has a reduced quotient");
    if (type_info(r.name()).reduced) {
      auto it = reduced_table.find(r.name());
      v.require(it != reduced_table.end() && it->second == t,
                r.name() + " quotient " + std::string(to_string(t)));
    } else {
      v.require(t == type_info(r.name()).quotient, r.name() + " quotient " + std::string(to_string(t)));
      families[t]++;
    }
  }
  v.require(families[AffineType::kBCC] == 8 && families[AffineType::kCvBC] == 8 &&
                families[AffineType::kBBv] == 5 && families[AffineType::kCvC] == 14,
            "family sizes differ from 8/8/5/14");
  if (v.pass) v.detail = "BCC 8, CvBC 8, BBv 5, CvC 14; 6 reduced entries match";
  return v;
}

Verdict isomorphisms() {
  Verdict v;
  auto start = Clock::now();
  const std::map<int, int> expected{{1, 11}, {2, 14}, {3, 14}};
  std::ostringstream summary;
  for (auto [rank, count] : expected) {
    IsoReport rep = verify_listed_isomorphisms(rank);
    v.require(rep.verified_count() == count && static_cast<int>(rep.checks.size()) == count,
              "rank " + std::to_string(rank) + ": " + std::to_string(rep.verified_count()) + "/" +
                  std::to_string(rep.checks.size()));
    summary << (rank > 1 ? ", " : "") << rep.verified_count() << "/" << rep.checks.size();
  }
  for (int rank = 2; rank <= 3; ++rank) {
    int chain = 0;
    for (const IsoCheck& c : verify_listed_isomorphisms(rank).checks) {
      bool link = (c.entry.lhs == "BCC(4)" && c.entry.rhs == "CvBC(1)") ||
                  (c.entry.lhs == "CvBC(1)" && c.entry.rhs == "CvC(2)diamond");
      if (link && c.verified) ++chain;
    }
    v.require(chain == 2, "exotic chain incomplete at rank " + std::to_string(rank));
  }
  double t = seconds_since(start);
  v.require(t < 1.0, "runtime " + std::to_string(t) + " s exceeds 1 s");
  if (v.pass) v.detail = summary.str() + " at ranks 1, 2, 3; exotic chain holds";
  return v;
}

Verdict class_counts() {
  Verdict v;
  const IsoGroupSpec unmarked{IsoGroupKind::kUnmarked, 4};
  const IsoGroupSpec marked{IsoGroupKind::kMarked, 4};
  const std::vector<std::tuple<int, IsoGroupSpec, std::size_t>> cases{
      {2, unmarked, 21}, {3, unmarked, 20}, {2, marked, 35}, {3, marked, 34}};
  for (const auto& [rank, group, count] : cases) {
    auto entries = catalog(rank, CatalogFilter::kNonReduced);
    std::size_t got = dedup(entries, group).size();
    v.require(got == count, "rank " + std::to_string(rank) +
                                (group.kind == IsoGroupKind::kMarked ? " marked " : " unmarked ") +
                                std::to_string(got));
  }
  if (v.pass) v.detail = "unmarked 21/20, marked 35/34";
  return v;
}

Verdict classification() {
  Verdict v;
  std::ostringstream summary;
  const IsoGroupSpec marked{IsoGroupKind::kMarked, 4};
  struct Case {
    int rank;
    SearchFilter filter;
    MiddleMode mode;
    std::size_t expected;
    double budget;
  };
  const std::vector<Case> cases{
      {2, SearchFilter::kNonReduced, MiddleMode::kFull, 35, 600.0},
      {2, SearchFilter::kReducedNonReducedQuotient, MiddleMode::kFull, 6, 600.0},
      {1, SearchFilter::kNonReduced, MiddleMode::kFull, 27, 600.0},
      {1, SearchFilter::kReducedNonReducedQuotient, MiddleMode::kFull, 5, 600.0},
      {2, SearchFilter::kNonReduced, MiddleMode::kGuided, 35, 30.0},
  };
  for (const Case& c : cases) {
    SearchConfig config;
    config.rank = c.rank;
    config.filter = c.filter;
    config.middle_mode = c.mode;
    auto start = Clock::now();
    SearchResult res = search(config);
    double t = seconds_since(start);
    auto want = catalog(c.rank, c.filter == SearchFilter::kNonReduced ? CatalogFilter::kNonReduced
                                                                       : CatalogFilter::kReduced);
    MatchReport match = match_report(res.classes, want, marked);
    std::string label = "rank " + std::to_string(c.rank) + " " + std::string(to_string(c.filter)) +
                        (c.mode == MiddleMode::kGuided ? " guided" : "");
    v.require(res.classes.size() == c.expected && match.bijection(),
              label + ": " + std::to_string(res.classes.size()) + " classes, " +
                  (match.bijection() ? "bijection" : "no bijection"));
    v.require(t < c.budget, label + ": runtime " + std::to_string(t) + " s");
    summary << (summary.tellp() > 0 ? ", " : "") << label << " " << res.classes.size();
  }
  if (v.pass) v.detail = summary.str() + "; all in bijection with the catalog";
  return v;
}

Verdict mutation_robustness() {
  Verdict v;
  auto mutants = ers::testing::single_bit_mutants(20241019, 1000);
  int rejected = 0;
  int unwitnessed = 0;
  for (const auto& m : mutants) {
    bool sym = check_axioms_symbolic(m.system).passed();
    bool win = check_axioms_windowed(m.system, 3).passed();
    if (!sym) ++rejected;
    if (!win) v.require(!sym, "windowed rejects but symbolic accepts " + m.origin);
    if (!sym && win) ++unwitnessed;
  }
  v.require(rejected >= 950, std::to_string(rejected) + "/1000 rejected");
  if (v.pass) {
    v.detail = std::to_string(rejected) + "/1000 rejected, no disagreement on window-witnessed failures (" +
               std::to_string(unwitnessed) + " failures lie outside the window)";
  }
  return v;
}

}  // namespace

int main() {
  report(1, "axiom suite", axiom_suite);
  report(2, "reducedness partition", reducedness_partition);
  report(3, "quotient typing", quotient_typing);
  report(4, "isomorphism verification", isomorphisms);
  report(5, "class counts", class_counts);
  report(6, "classification re-derivation", classification);
  report(7, "mutation robustness", mutation_robustness);
  return failures == 0 ? 0 : 1;
}
