#include "ers/coset_lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "ers/error.hpp"

namespace ers {

namespace {

bool valid_axis_modulus(int m) { return m == 1 || m == 2 || m == 4 || m == 8; }

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

int bit_index(Modulus m, int ra, int rb) { return ra * m.b + rb; }

std::uint64_t translate_mask(Modulus m, std::uint64_t mask, std::int64_t va, std::int64_t vb) {
  int sa = static_cast<int>(floor_mod(va, m.a));
  int sb = static_cast<int>(floor_mod(vb, m.b));
  if (sa == 0 && sb == 0) return mask;
  std::uint64_t out = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    int bit = std::countr_zero(rest);
    int ra = (bit / m.b + sa) % m.a;
    int rb = (bit % m.b + sb) % m.b;
    out |= std::uint64_t{1} << bit_index(m, ra, rb);
  }
  return out;
}

std::uint64_t lift_mask(Modulus from, std::uint64_t mask, Modulus to) {
  if (from == to) return mask;
  std::uint64_t out = 0;
  for (int ra = 0; ra < to.a; ++ra) {
    for (int rb = 0; rb < to.b; ++rb) {
      if (mask >> bit_index(from, ra % from.a, rb % from.b) & 1U) {
        out |= std::uint64_t{1} << bit_index(to, ra, rb);
      }
    }
  }
  return out;
}

Modulus common_modulus(Modulus x, Modulus y) {
  return {std::max(x.a, y.a), std::max(x.b, y.b)};
}

}  // namespace

ResidueSet ResidueSet::make(Modulus modulus, std::span<const Residue> residues) {
  if (!valid_axis_modulus(modulus.a) || !valid_axis_modulus(modulus.b)) {
    throw InputError("modulus components must divide " + std::to_string(kMaxModulus) +
                     ", got (" + std::to_string(modulus.a) + "," + std::to_string(modulus.b) +
                     ")");
  }
  std::uint64_t mask = 0;
  for (const Residue& r : residues) {
    if (r.a < 0 || r.a >= modulus.a || r.b < 0 || r.b >= modulus.b) {
      throw InputError("residue (" + std::to_string(r.a) + "," + std::to_string(r.b) +
                       ") out of range for modulus (" + std::to_string(modulus.a) + "," +
                       std::to_string(modulus.b) + ")");
    }
    mask |= std::uint64_t{1} << bit_index(modulus, r.a, r.b);
  }
  return canonical(modulus, mask);
}

ResidueSet ResidueSet::make(Modulus modulus, std::initializer_list<Residue> residues) {
  return make(modulus, std::span<const Residue>(residues.begin(), residues.size()));
}

ResidueSet ResidueSet::from_mask(Modulus modulus, std::uint64_t mask) {
  if (!valid_axis_modulus(modulus.a) || !valid_axis_modulus(modulus.b)) {
    throw InputError("modulus components must divide 8");
  }
  int width = modulus.a * modulus.b;
  if (width < 64 && (mask >> width) != 0) {
    throw InputError("mask has bits beyond the modulus");
  }
  return canonical(modulus, mask);
}

ResidueSet ResidueSet::lattice(int step_a, int step_b) {
  return make({step_a, step_b}, {{0, 0}});
}

std::vector<Residue> ResidueSet::residues() const {
  std::vector<Residue> out;
  for (std::uint64_t rest = mask_; rest != 0; rest &= rest - 1) {
    int bit = std::countr_zero(rest);
    out.push_back({bit / modulus_.b, bit % modulus_.b});
  }
  return out;
}

int ResidueSet::residue_count() const { return std::popcount(mask_); }

bool ResidueSet::contains(RadicalVector v) const {
  int ra = static_cast<int>(floor_mod(v.m, modulus_.a));
  int rb = static_cast<int>(floor_mod(v.n, modulus_.b));
  return (mask_ >> bit_index(modulus_, ra, rb)) & 1U;
}

std::uint64_t ResidueSet::mask_at(Modulus target) const {
  if (target.a % modulus_.a != 0 || target.b % modulus_.b != 0 || !valid_axis_modulus(target.a) ||
      !valid_axis_modulus(target.b)) {
    throw InputError("cannot view set of modulus (" + std::to_string(modulus_.a) + "," +
                     std::to_string(modulus_.b) + ") at modulus (" + std::to_string(target.a) +
                     "," + std::to_string(target.b) + ")");
  }
  return lift_mask(modulus_, mask_, target);
}

ResidueSet ResidueSet::translated(RadicalVector v) const {
  return ResidueSet(modulus_, translate_mask(modulus_, mask_, v.m, v.n));
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
  Modulus m = common_modulus(modulus_, other.modulus_);
  return (mask_at(m) & ~other.mask_at(m)) == 0;
}

ResidueSet ResidueSet::periods() const {
  std::uint64_t out = 0;
  for (int ra = 0; ra < modulus_.a; ++ra) {
    for (int rb = 0; rb < modulus_.b; ++rb) {
      if (translate_mask(modulus_, mask_, ra, rb) == mask_) {
        out |= std::uint64_t{1} << bit_index(modulus_, ra, rb);
      }
    }
  }
  return canonical(modulus_, out);
}

std::string ResidueSet::to_string() const {
  std::ostringstream os;
  os << "mod(" << modulus_.a << "," << modulus_.b << "){";
  bool first = true;
  for (const Residue& r : residues()) {
    os << (first ? "" : ",") << "(" << r.a << "," << r.b << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

ResidueSet ResidueSet::canonical(Modulus m, std::uint64_t mask) {
  if (mask == 0) return ResidueSet();
  // Smallest a-period, then restrict; periods along one axis form a subgroup
  // so the smallest divisor that works is the generator.
  int da = m.a;
  for (int d = 1; d < m.a; d *= 2) {
    if (translate_mask(m, mask, d, 0) == mask) {
      da = d;
      break;
    }
  }
  int db = m.b;
  for (int d = 1; d < m.b; d *= 2) {
    if (translate_mask(m, mask, 0, d) == mask) {
      db = d;
      break;
    }
  }
  std::uint64_t out = 0;
  Modulus small{da, db};
  for (int ra = 0; ra < da; ++ra) {
    for (int rb = 0; rb < db; ++rb) {
      if (mask >> bit_index(m, ra, rb) & 1U) out |= std::uint64_t{1} << bit_index(small, ra, rb);
    }
  }
  return ResidueSet(small, out);
}

ResidueSet set_union(const ResidueSet& s, const ResidueSet& t) {
  Modulus m = common_modulus(s.modulus(), t.modulus());
  return ResidueSet::from_mask(m, s.mask_at(m) | t.mask_at(m));
}

ResidueSet intersect(const ResidueSet& s, const ResidueSet& t) {
  Modulus m = common_modulus(s.modulus(), t.modulus());
  return ResidueSet::from_mask(m, s.mask_at(m) & t.mask_at(m));
}

ResidueSet negate(const ResidueSet& s) {
  std::vector<Residue> out;
  Modulus m = s.modulus();
  for (const Residue& r : s.residues()) out.push_back({(m.a - r.a) % m.a, (m.b - r.b) % m.b});
  return ResidueSet::make(m, out);
}

ResidueSet scale_subtract(const ResidueSet& t2, std::int64_t k, const ResidueSet& t1) {
  if (k == 0) return t2;
  if (t1.empty() || t2.empty()) return ResidueSet();
  // k*v mod the modulus of t2 depends only on v mod that modulus, and the
  // result is periodic with the period lattice of t2.
  Modulus m = common_modulus(t1.modulus(), t2.modulus());
  std::uint64_t base = t2.mask_at(m);
  std::uint64_t out = 0;
  for (std::uint64_t rest = t1.mask_at(m); rest != 0; rest &= rest - 1) {
    int bit = std::countr_zero(rest);
    std::int64_t va = bit / m.b;
    std::int64_t vb = bit % m.b;
    out |= translate_mask(m, base, -k * va, -k * vb);
  }
  return ResidueSet::from_mask(m, out);
}

ResidueSet l_set(int i, int j) { return l_set_scaled(i, j, 1, 1); }

ResidueSet l_set_scaled(int i, int j, int s1, int s2) {
  auto tier = [](int s) { return s == 1 || s == 2 || s == 4; };
  if ((i != 0 && i != 1) || (j != 0 && j != 1) || !tier(s1) || !tier(s2)) {
    throw InputError("l_set parameters must satisfy i,j in {0,1} and s1,s2 in {1,2,4}");
  }
  std::vector<Residue> residues;
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      if (((m - i) * (n - j)) % 2 == 0) residues.push_back({s2 * m, s1 * n});
    }
  }
  return ResidueSet::make({2 * s2, 2 * s1}, residues);
}

ResidueSet project_to_b(const ResidueSet& s) {
  std::vector<Residue> out;
  for (const Residue& r : s.residues()) out.push_back({0, r.b});
  return ResidueSet::make({1, s.modulus().b}, out);
}

ResidueSet project_to_a(const ResidueSet& s) {
  std::vector<Residue> out;
  for (const Residue& r : s.residues()) out.push_back({r.a, 0});
  return ResidueSet::make({s.modulus().a, 1}, out);
}

RadicalMap::RadicalMap(const Entries& entries) : entries_(entries) {
  std::int64_t det = determinant();
  if (det != 1 && det != -1) {
    throw InputError("radical map must have determinant +-1, got " + std::to_string(det));
  }
}

RadicalMap RadicalMap::swap() { return RadicalMap(Entries{{{0, 1}, {1, 0}}}); }

RadicalMap RadicalMap::shear_a_to_a_plus_b() {
  // m a + n b -> m (a + b) + n b, i.e. (m, n) -> (m, m + n).
  return RadicalMap(Entries{{{1, 0}, {1, 1}}});
}

std::int64_t RadicalMap::determinant() const {
  return entries_[0][0] * entries_[1][1] - entries_[0][1] * entries_[1][0];
}

RadicalVector RadicalMap::apply(RadicalVector v) const {
  return {entries_[0][0] * v.m + entries_[0][1] * v.n, entries_[1][0] * v.m + entries_[1][1] * v.n};
}

RadicalMap RadicalMap::inverse() const {
  std::int64_t det = determinant();
  return RadicalMap(Entries{{{entries_[1][1] * det, -entries_[0][1] * det},
                             {-entries_[1][0] * det, entries_[0][0] * det}}});
}

RadicalMap RadicalMap::operator*(const RadicalMap& other) const {
  Entries out{};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out[r][c] = entries_[r][0] * other.entries_[0][c] + entries_[r][1] * other.entries_[1][c];
    }
  }
  return RadicalMap(out);
}

ResidueSet apply_map(const RadicalMap& map, const ResidueSet& s) {
  if (map.determinant() != 1 && map.determinant() != -1) {
    throw InputError("apply_map requires a unimodular matrix");
  }
  int n = std::max(s.modulus().a, s.modulus().b);
  Modulus square{n, n};
  std::uint64_t out = 0;
  for (std::uint64_t rest = s.mask_at(square); rest != 0; rest &= rest - 1) {
    int bit = std::countr_zero(rest);
    RadicalVector image = map.apply({bit / n, bit % n});
    out |= std::uint64_t{1} << bit_index(square, static_cast<int>(floor_mod(image.m, n)),
                                         static_cast<int>(floor_mod(image.n, n)));
  }
  return ResidueSet::from_mask(square, out);
}

std::uint64_t generated_subgroup(int n, std::uint64_t generators) {
  Modulus m{n, n};
  std::uint64_t group = 1;  // the identity (0,0)
  std::uint64_t frontier = generators | 1U;
  while (true) {
    std::uint64_t next = group;
    for (std::uint64_t g = frontier; g != 0; g &= g - 1) {
      int bit = std::countr_zero(g);
      next |= translate_mask(m, group, bit / n, bit % n);
    }
    if (next == group) return group;
    group = next;
  }
}

}  // namespace ers
