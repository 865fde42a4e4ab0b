#include "ers/isomorphy.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "ers/error.hpp"
#include "square_mask.hpp"

namespace ers {

namespace {

using Masks = std::array<std::uint64_t, 3>;

// A root with coordinates c gets the shift c_1 x_1 + c_2 x_2 + (c_3 + ...) x_1.
// Tying x_i to x_1 for i >= 3 loses no orbit element: for a valid shift,
// uniformity forces x_i - x_1 into Per(S) n Per(L) and 2(x_i - x_1) into
// Per(E), so replacing x_i by x_1 leaves the image unchanged.
struct ShiftPattern {
  int c1 = 0;
  int c2 = 0;

  friend auto operator<=>(const ShiftPattern&, const ShiftPattern&) = default;
};

std::array<std::vector<ShiftPattern>, 3> shift_patterns(int rank) {
  std::array<std::vector<ShiftPattern>, 3> out;
  for (const FiniteRoot& root : finite_roots(rank)) {
    ShiftPattern p{root.coords[0], 0};
    if (rank >= 2) p.c2 = root.coords[1];
    for (int i = 2; i < rank; ++i) p.c1 += root.coords[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(root.length_class)].push_back(p);
  }
  for (auto& v : out) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return out;
}

// Image of the masks under the shift (x1, x2), or false if some class stops
// being uniform.
bool shifted(int n, const Masks& in, const std::array<std::vector<ShiftPattern>, 3>& patterns,
             RadicalVector x1, RadicalVector x2, Masks& out) {
  for (std::size_t c = 0; c < 3; ++c) {
    if (in[c] == 0) {
      out[c] = 0;
      continue;
    }
    bool first = true;
    for (const ShiftPattern& p : patterns[c]) {
      std::uint64_t image = square::translate(n, in[c], p.c1 * x1.m + p.c2 * x2.m,
                                              p.c1 * x1.n + p.c2 * x2.n);
      if (first) {
        out[c] = image;
        first = false;
      } else if (image != out[c]) {
        return false;
      }
    }
  }
  return true;
}

std::string hex_key(int rank, int n, const Masks& m) {
  std::ostringstream os;
  os << "r" << rank << "/N" << n << ":" << std::hex;
  for (std::size_t c = 0; c < 3; ++c) os << (c == 0 ? "" : ".") << m[c];
  return os.str();
}

std::string describe_difference(const MarkedErs& got, const MarkedErs& want) {
  for (LengthClass c : kLengthClasses) {
    const ResidueSet& x = got.translation(c);
    const ResidueSet& y = want.translation(c);
    if (x == y) continue;
    int n = std::max({x.modulus().a, x.modulus().b, y.modulus().a, y.modulus().b});
    std::uint64_t diff = square::at(n, x) ^ square::at(n, y);
    int b = std::countr_zero(diff);
    bool in_image = (square::at(n, x) >> b) & 1U;
    std::ostringstream os;
    os << to_string(c) << " class differs at residue (" << b / n << "," << b % n << ") mod " << n
       << ": " << (in_image ? "present in image only" : "missing from image") << "; image "
       << x.to_string() << " vs " << y.to_string();
    return os.str();
  }
  return "rank differs";
}

}  // namespace

MarkedErs apply_iso(const RadicalMap& map, const MarkedErs& r) {
  return MarkedErs(r.rank(), apply_map(map, r.translation(LengthClass::kShort)),
                   apply_map(map, r.translation(LengthClass::kMiddle)),
                   apply_map(map, r.translation(LengthClass::kLong)), r.name());
}

MarkedErs apply_iso(const RootIsomorphism& iso, const MarkedErs& r) {
  std::array<ResidueSet, 3> moved;
  std::array<bool, 3> seen{};
  for (const FiniteRoot& root : finite_roots(r.rank())) {
    auto c = static_cast<std::size_t>(root.length_class);
    const ResidueSet& t = r.translations()[c];
    if (t.empty()) continue;
    std::int64_t total = 0;
    for (int v : root.coords) total += v;
    ResidueSet image = t.translated({total * iso.shift.m, total * iso.shift.n});
    if (!seen[c]) {
      moved[c] = image;
      seen[c] = true;
    } else if (!(moved[c] == image)) {
      throw InputError("shift (" + std::to_string(iso.shift.m) + "," +
                       std::to_string(iso.shift.n) + ") breaks uniformity of the " +
                       std::string(to_string(root.length_class)) + " class");
    }
  }
  MarkedErs shifted_r(r.rank(), moved[0], moved[1], moved[2], r.name());
  return apply_iso(iso.map, shifted_r);
}

std::vector<RadicalMap::Entries> group_elements(const IsoGroupSpec& group) {
  int n = group.modulus;
  if (n != 1 && n != 2 && n != 4 && n != 8) {
    throw InputError("working modulus must be 1, 2, 4 or 8, got " + std::to_string(n));
  }
  std::vector<RadicalMap::Entries> out;
  auto unit = [n](std::int64_t d) {
    int r = square::floor_mod(d, n);
    return r == 1 % n || r == square::floor_mod(-1, n);
  };
  for (int e00 = 0; e00 < n; ++e00) {
    for (int e01 = 0; e01 < n; ++e01) {
      for (int e10 = 0; e10 < n; ++e10) {
        for (int e11 = 0; e11 < n; ++e11) {
          if (group.kind == IsoGroupKind::kMarked && (e10 != 0 || !unit(e00) || !unit(e11))) {
            continue;
          }
          if (!unit(std::int64_t{e00} * e11 - std::int64_t{e01} * e10)) continue;
          out.push_back(RadicalMap::Entries{{{e00, e01}, {e10, e11}}});
        }
      }
    }
  }
  return out;
}

CanonicalKey canonical_form(const MarkedErs& r, const IsoGroupSpec& group) {
  int n = group.modulus;
  std::vector<RadicalMap::Entries> elements = group_elements(group);
  Masks base{};
  for (std::size_t c = 0; c < 3; ++c) {
    const ResidueSet& t = r.translations()[c];
    if (n % t.modulus().a != 0 || n % t.modulus().b != 0) {
      throw InputError("translation set " + t.to_string() + " does not fit working modulus " +
                       std::to_string(n) + "; use a larger modulus");
    }
    base[c] = square::at(n, t);
  }

  auto patterns = shift_patterns(r.rank());
  std::vector<Masks> images;
  int x2_count = r.rank() >= 2 ? n * n : 1;
  for (int b1 = 0; b1 < n * n; ++b1) {
    for (int b2 = 0; b2 < x2_count; ++b2) {
      Masks out{};
      if (!shifted(n, base, patterns, {b1 / n, b1 % n}, {b2 / n, b2 % n}, out)) continue;
      images.push_back(out);
    }
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());

  Masks best{~std::uint64_t{0}, ~std::uint64_t{0}, ~std::uint64_t{0}};
  for (const Masks& m : images) {
    for (const RadicalMap::Entries& e : elements) {
      Masks cand{square::map(n, m[0], e), square::map(n, m[1], e), square::map(n, m[2], e)};
      if (cand < best) best = cand;
    }
  }
  return hex_key(r.rank(), n, best);
}

std::vector<IsoClass> dedup(std::span<const MarkedErs> entries, const IsoGroupSpec& group) {
  std::vector<IsoClass> out;
  std::map<CanonicalKey, std::size_t> index;
  for (const MarkedErs& r : entries) {
    CanonicalKey key = canonical_form(r, group);
    auto [it, inserted] = index.emplace(key, out.size());
    if (inserted) out.push_back({key, {}});
    out[it->second].members.push_back(r);
  }
  return out;
}

const std::vector<ListedIsomorphism>& listed_isomorphisms() {
  static const std::vector<ListedIsomorphism> list = [] {
    RadicalMap swap = RadicalMap::swap();
    RadicalMap shear = RadicalMap::shear_a_to_a_plus_b();
    // (a + 2b, b) -> (a, b): the coordinates (m, n) become (m, n + 2m).
    RadicalMap exotic(RadicalMap::Entries{{{1, 0}, {2, 1}}});
    auto by = [](RadicalMap m, RadicalVector shift = {}) { return RootIsomorphism{m, shift}; };
    return std::vector<ListedIsomorphism>{
        {"BCC(2)(1)", "BBv(1)", by(swap), "a <-> b"},
        {"CvBC(2)(1)", "BBv(4)", by(swap), "a <-> b"},
        {"BCC(2)(2)", "CvC(1)", by(swap), "a <-> b"},
        {"CvBC(2)(2)", "CvC(4)", by(swap), "a <-> b"},
        {"BCC(2)*0", "CvC(1)*0", by(swap), "a <-> b"},
        {"BCC(2)*1", "CvC(1)*1", by(swap), "a <-> b"},
        {"CvBC(2)*0", "CvC(4)*0", by(swap), "a <-> b"},
        {"CvBC(2)*1", "CvC(4)*1", by(swap), "a <-> b"},
        {"BBv(2)(2)", "CvC(2)(1)", by(swap), "a <-> b"},
        {"BCC(1)*0'", "BCC(1)*0", by(shear), "a -> a + b"},
        {"CvBC(4)*0'", "CvBC(4)*0", by(shear), "a -> a + b"},
        // The shear alone moves the long set onto the wrong coset; shifting
        // every eps_i by b first fixes it.
        {"CvC(2)*1'", "CvC(2)*1", by(shear, {0, 1}), "eps_i -> eps_i + b, then a -> a + b"},
        {"BCC(4)", "CvBC(1)", by(swap), "a <-> b"},
        {"CvBC(1)", "CvC(2)diamond", by(exotic), "(a + 2b, b) -> (a, b)"},
    };
  }();
  return list;
}

int IsoReport::verified_count() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const IsoCheck& c) { return c.verified; }));
}

IsoReport verify_listed_isomorphisms(int rank) {
  if (rank < 1) throw InputError("rank must be >= 1, got " + std::to_string(rank));
  IsoReport report;
  report.rank = rank;
  for (const ListedIsomorphism& entry : listed_isomorphisms()) {
    if (!admissible(type_info(entry.lhs), rank) || !admissible(type_info(entry.rhs), rank)) {
      continue;
    }
    IsoCheck check{entry, false, {}};
    MarkedErs lhs = build(entry.lhs, rank);
    MarkedErs rhs = build(entry.rhs, rank);
    try {
      MarkedErs image = apply_iso(entry.iso, lhs);
      check.verified = image == rhs;
      check.detail = check.verified ? "equal" : describe_difference(image, rhs);
    } catch (const InputError& e) {
      check.detail = e.what();
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace ers
