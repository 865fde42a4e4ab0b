#include "ers/ers_catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "ers/error.hpp"

namespace ers {

std::string_view to_string(AffineType t) {
  switch (t) {
    case AffineType::kBCC:
      return "BCC";
    case AffineType::kCvBC:
      return "CvBC";
    case AffineType::kBBv:
      return "BBv";
    case AffineType::kCvC:
      return "CvC";
    case AffineType::kReducedOrOther:
      return "reduced-or-other";
  }
  return "?";
}

MarkedErs::MarkedErs(int rank, ResidueSet short_set, ResidueSet middle_set, ResidueSet long_set,
                     std::string name)
    : rank_(rank),
      translations_{std::move(short_set), std::move(middle_set), std::move(long_set)},
      name_(std::move(name)) {
  if (rank < 1) throw InputError("rank must be >= 1, got " + std::to_string(rank));
}

bool MarkedErs::contains(std::span<const std::int64_t> vector) const {
  if (vector.size() != static_cast<std::size_t>(rank_) + 2) return false;
  std::optional<LengthClass> cls = classify_finite(vector.first(static_cast<std::size_t>(rank_)));
  if (!cls) return false;
  return translation(*cls).contains({vector[vector.size() - 2], vector[vector.size() - 1]});
}

namespace {

struct Triple {
  ResidueSet s;
  ResidueSet m;
  ResidueSet l;
};

struct Entry {
  TypeInfo info;
  Triple (*make)();
};

// b-steps of the short/middle/long translations of the four affine types.
struct AffineSteps {
  int s, m, l;
};

constexpr AffineSteps steps(AffineType t) {
  switch (t) {
    case AffineType::kBCC:
      return {1, 1, 1};
    case AffineType::kBBv:
      return {1, 1, 2};
    case AffineType::kCvC:
      return {1, 2, 2};
    case AffineType::kCvBC:
      return {1, 2, 4};
    case AffineType::kReducedOrOther:
      break;
  }
  return {1, 1, 1};
}

ResidueSet lat(int step_a, int step_b) { return ResidueSet::lattice(step_a, step_b); }

// X + a_s Za on short, + a_m Za on middle, + a_l Za on long.
template <AffineType X, int As, int Am, int Al>
Triple classical() {
  constexpr AffineSteps st = steps(X);
  return {lat(As, st.s), lat(Am, st.m), lat(Al, st.l)};
}

// Reduced classical: long translations shifted to odd multiples of a.
template <AffineType X>
Triple reduced_classical() {
  constexpr AffineSteps st = steps(X);
  return {lat(1, st.s), lat(1, st.m), ResidueSet::make({2, st.l}, {{1, 0}})};
}

AffineType family_of_tier(int t1) {
  switch (t1) {
    case 1:
      return AffineType::kBCC;
    case 4:
      return AffineType::kCvBC;
    default:
      return AffineType::kCvC;
  }
}

// The *_i types for a tier pair (t1, t2).
template <int T1, int T2, int I>
Triple star() {
  AffineSteps st = steps(family_of_tier(T1));
  ResidueSet middle = lat(std::min(2, T2), st.m);
  if (T1 <= 2 && T2 <= 2 && !(T1 == 2 && T2 == 2)) {
    return {lat(1, st.s), middle, l_set_scaled(I, I, T1, T2)};
  }
  if (T1 == 2 && T2 == 2) return {l_set(0, 0), middle, l_set_scaled(I, I, 2, 2)};
  return {l_set(I, I), middle, lat(T2, st.l)};
}

const std::vector<Entry>& entries() {
  using A = AffineType;
  static const std::vector<Entry> table = {
      // Reduced systems with non-reduced quotient.
      {{"BC(1,2)", "BC_l^{(1,2)}", A::kBCC, true, 1, 0}, reduced_classical<A::kBCC>},
      {{"BC(1,1)*", "BC_l^{(1,1)*}", A::kBCC, true, 1, 0}, star<1, 1, 1>},
      {{"BC(4,2)", "BC_l^{(4,2)}", A::kCvBC, true, 1, 0}, reduced_classical<A::kCvBC>},
      {{"BC(4,4)*", "BC_l^{(4,4)*}", A::kCvBC, true, 1, 0}, star<4, 4, 1>},
      {{"BC(2,2)sigma2", "BC_l^{(2,2)σ}(2)", A::kCvC, true, 1, 0}, reduced_classical<A::kCvC>},
      {{"BC(2,2)sigma1", "BC_l^{(2,2)σ}(1)", A::kBBv, true, 2, 0}, reduced_classical<A::kBBv>},

      // Quotient BCC_l.
      {{"BCC(1)", "BCC_l^{(1)}", A::kBCC, false, 1, 0}, classical<A::kBCC, 1, 1, 1>},
      {{"BCC(1)*0", "BCC_l^{(1)*_0}", A::kBCC, false, 1, 0}, star<1, 1, 0>},
      {{"BCC(1)*0'", "BCC_l^{(1)*_{0'}}", A::kBCC, false, 1, 0},
       [] { return Triple{lat(1, 1), lat(1, 1), l_set(0, 1)}; }},
      {{"BCC(2)(1)", "BCC_l^{(2)}(1)", A::kBCC, false, 2, 0}, classical<A::kBCC, 1, 1, 2>},
      {{"BCC(2)(2)", "BCC_l^{(2)}(2)", A::kBCC, false, 1, 0}, classical<A::kBCC, 1, 2, 2>},
      {{"BCC(2)*0", "BCC_l^{(2)*_0}", A::kBCC, false, 1, 0}, star<1, 2, 0>},
      {{"BCC(2)*1", "BCC_l^{(2)*_1}", A::kBCC, false, 1, 0}, star<1, 2, 1>},
      {{"BCC(4)", "BCC_l^{(4)}", A::kBCC, false, 1, 0}, classical<A::kBCC, 1, 2, 4>},

      // Quotient C^vBC_l.
      {{"CvBC(1)", "C^∨BC_l^{(1)}", A::kCvBC, false, 1, 0}, classical<A::kCvBC, 1, 1, 1>},
      {{"CvBC(2)(1)", "C^∨BC_l^{(2)}(1)", A::kCvBC, false, 2, 0}, classical<A::kCvBC, 1, 1, 2>},
      {{"CvBC(2)(2)", "C^∨BC_l^{(2)}(2)", A::kCvBC, false, 1, 0}, classical<A::kCvBC, 1, 2, 2>},
      {{"CvBC(2)*0", "C^∨BC_l^{(2)*_0}", A::kCvBC, false, 1, 0}, star<4, 2, 0>},
      {{"CvBC(2)*1", "C^∨BC_l^{(2)*_1}", A::kCvBC, false, 1, 0}, star<4, 2, 1>},
      {{"CvBC(4)", "C^∨BC_l^{(4)}", A::kCvBC, false, 1, 0}, classical<A::kCvBC, 1, 2, 4>},
      {{"CvBC(4)*0", "C^∨BC_l^{(4)*_0}", A::kCvBC, false, 1, 0}, star<4, 4, 0>},
      {{"CvBC(4)*0'", "C^∨BC_l^{(4)*_{0'}}", A::kCvBC, false, 1, 0},
       [] { return Triple{l_set(0, 1), lat(2, 2), lat(4, 4)}; }},

      // Quotient BB^v_l.
      {{"BBv(1)", "BB_l^{∨(1)}", A::kBBv, false, 2, 0}, classical<A::kBBv, 1, 1, 1>},
      {{"BBv(2)(1)", "BB_l^{∨(2)}(1)", A::kBBv, false, 2, 0}, classical<A::kBBv, 1, 1, 2>},
      {{"BBv(2)(2)", "BB_l^{∨(2)}(2)", A::kBBv, false, 2, 0}, classical<A::kBBv, 1, 2, 2>},
      {{"BBv(4)", "BB_l^{∨(4)}", A::kBBv, false, 2, 0}, classical<A::kBBv, 1, 2, 4>},
      {{"BBv(2)*", "BB_2^{∨(2)*}", A::kBBv, false, 2, 2},
       [] { return Triple{lat(1, 1), l_set(0, 0), lat(2, 2)}; }},

      // Quotient C^vC_l.
      {{"CvC(1)", "C^∨C_l^{(1)}", A::kCvC, false, 1, 0}, classical<A::kCvC, 1, 1, 1>},
      {{"CvC(1)*0", "C^∨C_l^{(1)*_0}", A::kCvC, false, 1, 0}, star<2, 1, 0>},
      {{"CvC(1)*1", "C^∨C_l^{(1)*_1}", A::kCvC, false, 1, 0}, star<2, 1, 1>},
      {{"CvC(2)(1)", "C^∨C_l^{(2)}(1)", A::kCvC, false, 2, 0}, classical<A::kCvC, 1, 1, 2>},
      {{"CvC(2)(2)", "C^∨C_l^{(2)}(2)", A::kCvC, false, 1, 0}, classical<A::kCvC, 1, 2, 2>},
      {{"CvC(2)*s", "C^∨C_l^{(2)*_s}", A::kCvC, false, 1, 0},
       [] { return Triple{l_set(0, 0), lat(2, 2), lat(2, 2)}; }},
      {{"CvC(2)*l", "C^∨C_l^{(2)*_l}", A::kCvC, false, 1, 0},
       [] { return Triple{lat(1, 1), lat(2, 2), l_set_scaled(0, 0, 2, 2)}; }},
      {{"CvC(2)*0", "C^∨C_l^{(2)*_0}", A::kCvC, false, 1, 0}, star<2, 2, 0>},
      {{"CvC(2)*1", "C^∨C_l^{(2)*_1}", A::kCvC, false, 1, 0}, star<2, 2, 1>},
      {{"CvC(2)*1'", "C^∨C_l^{(2)*_{1'}}", A::kCvC, false, 1, 0},
       [] { return Triple{l_set(0, 0), lat(2, 2), l_set_scaled(1, 0, 2, 2)}; }},
      {{"CvC(2)diamond", "C^∨C_l^{(2)◇}", A::kCvC, false, 1, 0},
       // {m a + 2n b | m - n even}
       [] { return Triple{lat(1, 1), lat(1, 2), ResidueSet::make({2, 4}, {{0, 0}, {1, 2}})}; }},
      {{"CvC(4)", "C^∨C_l^{(4)}", A::kCvC, false, 1, 0}, classical<A::kCvC, 1, 2, 4>},
      {{"CvC(4)*0", "C^∨C_l^{(4)*_0}", A::kCvC, false, 1, 0}, star<2, 4, 0>},
      {{"CvC(4)*1", "C^∨C_l^{(4)*_1}", A::kCvC, false, 1, 0}, star<2, 4, 1>},
  };
  return table;
}

// Alternate spellings accepted on input.
std::string_view canonical_name(std::string_view name) {
  if (name == "BBv(2)iso") return "BBv(2)*";
  if (name == "CvC(2)◇" || name == "CvC(2)diam") return "CvC(2)diamond";
  return name;
}

const Entry& entry(std::string_view name) {
  std::string_view key = canonical_name(name);
  for (const Entry& e : entries()) {
    if (e.info.name == key) return e;
  }
  throw InputError("unknown type '" + std::string(name) + "'");
}

}  // namespace

const std::vector<TypeInfo>& type_table() {
  static const std::vector<TypeInfo> infos = [] {
    std::vector<TypeInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const TypeInfo& type_info(std::string_view name) { return entry(name).info; }

bool admissible(const TypeInfo& info, int rank) {
  if (info.exact_rank != 0) return rank == info.exact_rank;
  return rank >= info.min_rank;
}

MarkedErs build(std::string_view name, int rank) {
  const Entry& e = entry(name);
  if (rank < 1) throw InputError("rank must be >= 1, got " + std::to_string(rank));
  if (!admissible(e.info, rank)) {
    std::string constraint = e.info.exact_rank != 0
                                 ? "rank = " + std::to_string(e.info.exact_rank)
                                 : "rank >= " + std::to_string(e.info.min_rank);
    throw InputError("type " + std::string(e.info.name) + " requires " + constraint + ", got " +
                     std::to_string(rank));
  }
  Triple t = e.make();
  ResidueSet middle = rank == 1 ? ResidueSet() : t.m;
  return MarkedErs(rank, t.s, middle, t.l, std::string(e.info.name));
}

std::vector<MarkedErs> catalog(int rank, CatalogFilter filter) {
  std::vector<MarkedErs> out;
  for (const Entry& e : entries()) {
    if (!admissible(e.info, rank)) continue;
    if (filter == CatalogFilter::kReduced && !e.info.reduced) continue;
    if (filter == CatalogFilter::kNonReduced && e.info.reduced) continue;
    out.push_back(build(e.info.name, rank));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> roots_in_window(const MarkedErs& r, int bound) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<FiniteRoot> roots = finite_roots(r.rank());
  for (LengthClass c : kLengthClasses) {
    const ResidueSet& t = r.translation(c);
    for (const FiniteRoot& alpha : roots) {
      if (alpha.length_class != c) continue;
      for (std::int64_t m = -bound; m <= bound; ++m) {
        for (std::int64_t n = -bound; n <= bound; ++n) {
          if (!t.contains({m, n})) continue;
          std::vector<std::int64_t> v(alpha.coords.begin(), alpha.coords.end());
          v.push_back(m);
          v.push_back(n);
          out.push_back(std::move(v));
        }
      }
    }
  }
  return out;
}

bool AxiomReport::passed() const {
  return shape.passed && marking.passed &&
         std::all_of(axioms.begin(), axioms.end(), [](const CheckResult& c) { return c.passed; });
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  auto item = [&os](std::string_view label, const CheckResult& c) {
    os << label << ":" << (c.passed ? "ok" : "FAIL");
    if (!c.passed) os << " [" << c.witness << "]";
    os << " ";
  };
  item("shape", shape);
  for (std::size_t i = 0; i < axioms.size(); ++i) item("A" + std::to_string(i + 1), axioms[i]);
  item("marking", marking);
  std::string s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

namespace {

int common_axis_modulus(const MarkedErs& r) {
  int n = 1;
  for (const ResidueSet& t : r.translations()) {
    n = std::max({n, t.modulus().a, t.modulus().b});
  }
  return n;
}

void check_shape(const MarkedErs& r, CheckResult& out) {
  if (r.translation(LengthClass::kShort).empty()) out.fail("short translation set is empty");
  if (r.translation(LengthClass::kLong).empty()) out.fail("long translation set is empty");
  bool middle_empty = r.translation(LengthClass::kMiddle).empty();
  if (r.rank() == 1 && !middle_empty) out.fail("middle translations given at rank 1");
  if (r.rank() > 1 && middle_empty) out.fail("middle translation set is empty at rank > 1");
}

std::string describe(const FiniteRoot& alpha) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < alpha.coords.size(); ++i) os << (i ? "," : "") << alpha.coords[i];
  os << ")";
  return os.str();
}

}  // namespace

std::uint64_t radical_lattice_mask(const MarkedErs& r, int n) {
  const ResidueSet& s = r.translation(LengthClass::kShort);
  if (s.empty()) return 0;
  Modulus sq{n, n};
  std::uint64_t gens = 0;
  std::vector<RadicalVector> shorts;
  for (int ra = 0; ra < n; ++ra) {
    for (int rb = 0; rb < n; ++rb) {
      if (s.contains({ra, rb})) shorts.push_back({ra, rb});
    }
  }
  auto set_bit = [&](std::int64_t a, std::int64_t b) {
    int ra = static_cast<int>(((a % n) + n) % n);
    int rb = static_cast<int>(((b % n) + n) % n);
    gens |= std::uint64_t{1} << (ra * n + rb);
  };
  for (const RadicalVector& x : shorts) {
    for (const RadicalVector& y : shorts) {
      set_bit(x.m + y.m, x.n + y.n);
      set_bit(x.m - y.m, x.n - y.n);
    }
  }
  gens |= r.translation(LengthClass::kMiddle).mask_at(sq);
  gens |= r.translation(LengthClass::kLong).mask_at(sq);
  return generated_subgroup(n, gens);
}

AxiomReport check_axioms_symbolic(const MarkedErs& r) {
  AxiomReport report;
  check_shape(r, report.shape);

  std::vector<FiniteRoot> roots = finite_roots(r.rank());
  std::vector<FiniteRoot> present;
  for (const FiniteRoot& alpha : roots) {
    if (!r.translation(alpha.length_class).empty()) present.push_back(alpha);
  }

  // Axiom 1: finite parts span R^l and the radical part of Q(R) is Za + Zb.
  {
    bool spans = !r.translation(LengthClass::kShort).empty() ||
                 !r.translation(LengthClass::kLong).empty() ||
                 (r.rank() >= 2 && !r.translation(LengthClass::kMiddle).empty());
    if (!spans) report.axioms[0].fail("finite parts do not span R^l");
    int n = common_axis_modulus(r);
    std::uint64_t full = n * n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n * n)) - 1;
    std::uint64_t lattice = radical_lattice_mask(r, n);
    if (lattice != full) {
      report.axioms[0].fail("radical part of Q(R) is a proper sublattice of Za+Zb (index " +
                            std::to_string(n * n / std::popcount(lattice == 0 ? 1 : lattice)) +
                            ")");
    }
  }

  // Axiom 2: radical translations are isotropic, so I(alpha, alpha) is the
  // finite squared length.
  for (const FiniteRoot& alpha : present) {
    if (inner(alpha, alpha) == 0) report.axioms[1].fail("isotropic root " + describe(alpha));
  }

  // Axiom 3: I(alpha^vee, beta) only sees finite parts.
  for (const FiniteRoot& alpha : present) {
    for (const FiniteRoot& beta : present) {
      if ((2 * inner(alpha, beta)) % inner(alpha, alpha) != 0) {
        report.axioms[2].fail("I(" + describe(alpha) + "^vee, " + describe(beta) +
                              ") not integral");
      }
    }
  }

  // Axiom 4: w_{alpha+v}(beta+w) = (beta - k alpha) + (w - k v).
  for (const ClosureCondition& cc : closure_conditions(r.rank())) {
    const ResidueSet& t1 = r.translation(cc.reflecting_class);
    const ResidueSet& t2 = r.translation(cc.reflected_class);
    const ResidueSet& t3 = r.translation(cc.image_class);
    if (t1.empty() || t2.empty()) continue;
    ResidueSet image = scale_subtract(t2, cc.k, t1);
    if (image.is_subset_of(t3)) continue;
    Modulus m{std::max(image.modulus().a, t3.modulus().a),
               std::max(image.modulus().b, t3.modulus().b)};
    int bit = std::countr_zero(image.mask_at(m) & ~t3.mask_at(m));
    int mb = m.b;
    std::ostringstream os;
    os << "reflecting " << to_string(cc.reflecting_class) << " by k=" << cc.k << " sends "
       << to_string(cc.reflected_class) << " translations to (" << bit / mb << "," << bit % mb
       << ") not in the " << to_string(cc.image_class) << " set";
    report.axioms[3].fail(os.str());
  }

  // Axiom 5: the finite parts present form one connected component under
  // non-orthogonality (radical parts never change I).
  if (!present.empty()) {
    std::vector<bool> seen(present.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < present.size(); ++j) {
        if (!seen[j] && inner(present[i], present[j]) != 0) {
          seen[j] = true;
          ++reached;
          stack.push_back(j);
        }
      }
    }
    if (reached != present.size()) {
      report.axioms[4].fail("roots decompose into orthogonal parts (" + std::to_string(reached) +
                            " of " + std::to_string(present.size()) +
                            " finite parts reachable)");
    }
  } else {
    report.axioms[4].fail("no roots");
  }

  // Marking: Q(R) n Ra must have rank 1. The radical lattice contains N Z^2
  // whenever the short set is non-empty.
  if (radical_lattice_mask(r, common_axis_modulus(r)) == 0) {
    report.marking.fail("root lattice meets Ra trivially");
  }
  return report;
}

namespace {

// Integer row echelon form; returns the reduced basis (rows).
std::vector<std::vector<std::int64_t>> echelon(std::vector<std::vector<std::int64_t>> rows,
                                               std::size_t width) {
  std::vector<std::vector<std::int64_t>> basis;
  std::size_t col = 0;
  while (col < width && !rows.empty()) {
    // Euclid on column `col` across all rows until at most one is nonzero.
    while (true) {
      std::size_t pivot = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][col] != 0 &&
            (pivot == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[pivot][col]))) {
          pivot = i;
        }
      }
      if (pivot == rows.size()) break;
      bool reduced_any = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pivot || rows[i][col] == 0) continue;
        std::int64_t q = rows[i][col] / rows[pivot][col];
        for (std::size_t c = 0; c < width; ++c) rows[i][c] -= q * rows[pivot][c];
        reduced_any = true;
      }
      if (!reduced_any) {
        basis.push_back(rows[pivot]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        break;
      }
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const std::vector<std::int64_t>& v) {
                                return std::all_of(v.begin(), v.end(),
                                                   [](std::int64_t x) { return x == 0; });
                              }),
               rows.end());
    ++col;
  }
  return basis;
}

std::int64_t dot_finite(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y,
                        std::size_t rank) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank; ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

AxiomReport check_axioms_windowed(const MarkedErs& r, int bound) {
  AxiomReport report;
  const std::size_t rank = static_cast<std::size_t>(r.rank());
  const std::size_t width = rank + 2;
  std::vector<std::vector<std::int64_t>> window = roots_in_window(r, bound);

  // Shape, read off the window.
  {
    bool seen[3] = {false, false, false};
    for (const auto& v : window) {
      seen[static_cast<int>(*classify_finite(std::span(v).first(rank)))] = true;
    }
    if (!seen[0]) report.shape.fail("no short roots in window");
    if (!seen[2]) report.shape.fail("no long roots in window");
    if (rank == 1 && seen[1]) report.shape.fail("middle roots at rank 1");
    if (rank > 1 && !seen[1]) report.shape.fail("no middle roots in window");
  }
  if (window.empty()) {
    report.axioms[0].fail("empty window");
    report.axioms[4].fail("empty window");
    report.marking.fail("empty window");
    return report;
  }

  // Axiom 1 and marking: echelon basis of the lattice spanned by the window;
  // rows with pivot in the radical columns span Q n rad.
  {
    std::vector<std::vector<std::int64_t>> basis = echelon(window, width);
    std::vector<std::vector<std::int64_t>> radical_rows;
    std::size_t finite_rows = 0;
    for (const auto& row : basis) {
      bool finite_zero = std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(rank),
                                     [](std::int64_t x) { return x == 0; });
      if (finite_zero) {
        radical_rows.push_back(row);
      } else {
        ++finite_rows;
      }
    }
    if (finite_rows != rank) report.axioms[0].fail("window roots do not span the finite part");
    if (radical_rows.size() != 2) {
      report.axioms[0].fail("radical part of the window lattice has rank " +
                            std::to_string(radical_rows.size()));
      if (radical_rows.empty()) report.marking.fail("root lattice meets Ra trivially");
    } else {
      std::int64_t det = radical_rows[0][rank] * radical_rows[1][rank + 1] -
                         radical_rows[0][rank + 1] * radical_rows[1][rank];
      if (std::llabs(det) != 1) {
        report.axioms[0].fail("radical part of the window lattice has index " +
                              std::to_string(std::llabs(det)) + " in Za+Zb");
      }
    }
  }

  std::vector<std::int64_t> norms(window.size());
  for (std::size_t i = 0; i < window.size(); ++i) norms[i] = dot_finite(window[i], window[i], rank);

  // Axiom 2.
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (norms[i] == 0) {
      report.axioms[1].fail("isotropic root in window");
      break;
    }
  }

  // Axioms 3 and 4, pair by pair.
  std::vector<std::int64_t> image(width);
  for (std::size_t i = 0; i < window.size() && report.axioms[3].passed; ++i) {
    const auto& alpha = window[i];
    if (norms[i] == 0) continue;
    for (std::size_t j = 0; j < window.size(); ++j) {
      const auto& beta = window[j];
      std::int64_t twice = 2 * dot_finite(alpha, beta, rank);
      if (twice % norms[i] != 0) {
        report.axioms[2].fail("non-integral pairing in window");
        continue;
      }
      std::int64_t k = twice / norms[i];
      for (std::size_t c = 0; c < width; ++c) image[c] = beta[c] - k * alpha[c];
      if (!r.contains(image)) {
        std::ostringstream os;
        os << "w_alpha(beta) = (";
        for (std::size_t c = 0; c < width; ++c) os << (c ? "," : "") << image[c];
        os << ") not in R";
        report.axioms[3].fail(os.str());
        break;
      }
    }
  }

  // Axiom 5: union-find on non-orthogonality.
  {
    std::vector<std::size_t> parent(window.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = window.size();
    for (std::size_t i = 0; i < window.size() && components > 1; ++i) {
      for (std::size_t j = i + 1; j < window.size(); ++j) {
        if (dot_finite(window[i], window[j], rank) == 0) continue;
        std::size_t x = find(i);
        std::size_t y = find(j);
        if (x != y) {
          parent[x] = y;
          --components;
        }
      }
    }
    if (components != 1) {
      report.axioms[4].fail("window splits into " + std::to_string(components) +
                            " orthogonal components");
    }
  }
  return report;
}

bool is_reduced(const MarkedErs& r) {
  const ResidueSet& s = r.translation(LengthClass::kShort);
  const ResidueSet& e = r.translation(LengthClass::kLong);
  int n = std::max({s.modulus().a, s.modulus().b, e.modulus().a, e.modulus().b});
  for (std::int64_t ra = 0; ra < n; ++ra) {
    for (std::int64_t rb = 0; rb < n; ++rb) {
      if (s.contains({ra, rb}) && e.contains({2 * ra, 2 * rb})) return false;
    }
  }
  return true;
}

namespace {

// Step d when the set is a single coset of dZ (stored at a-modulus 1 or
// b-modulus 1).
std::optional<int> coset_step(const ResidueSet& projected) {
  if (projected.residue_count() != 1) return std::nullopt;
  return projected.modulus().a * projected.modulus().b;
}

}  // namespace

std::optional<TierNumbers> tier_numbers(const MarkedErs& r) {
  const ResidueSet& s = r.translation(LengthClass::kShort);
  const ResidueSet& e = r.translation(LengthClass::kLong);
  if (s.empty() || e.empty()) return std::nullopt;
  auto sb = coset_step(project_to_b(s));
  auto sa = coset_step(project_to_a(s));
  auto eb = coset_step(project_to_b(e));
  auto ea = coset_step(project_to_a(e));
  if (!sb || !sa || !eb || !ea) return std::nullopt;
  if (*eb % *sb != 0 || *ea % *sa != 0) return std::nullopt;
  return TierNumbers{*eb / *sb, *ea / *sa};
}

}  // namespace ers
