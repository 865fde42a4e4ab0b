#include "ers/affine_quotient.hpp"

#include <algorithm>
#include <sstream>

namespace ers {

AffineProfile quotient(const MarkedErs& r) {
  AffineProfile out;
  out.rank = r.rank();
  for (LengthClass c : kLengthClasses) {
    out.classes[static_cast<std::size_t>(c)] = project_to_b(r.translation(c));
  }
  return out;
}

AffineType identify_affine_type(const AffineProfile& profile) {
  const ResidueSet& s = profile.profile(LengthClass::kShort);
  const ResidueSet& m = profile.profile(LengthClass::kMiddle);
  const ResidueSet& l = profile.profile(LengthClass::kLong);
  auto step = [](int d) { return ResidueSet::lattice(1, d); };
  if (s != step(1)) return AffineType::kReducedOrOther;
  if (profile.rank == 1) {
    if (!m.empty()) return AffineType::kReducedOrOther;
    if (l == step(1)) return AffineType::kBCC;
    if (l == step(2)) return AffineType::kCvC;
    if (l == step(4)) return AffineType::kCvBC;
    return AffineType::kReducedOrOther;
  }
  if (m == step(1) && l == step(1)) return AffineType::kBCC;
  if (m == step(2) && l == step(4)) return AffineType::kCvBC;
  if (m == step(1) && l == step(2)) return AffineType::kBBv;
  if (m == step(2) && l == step(2)) return AffineType::kCvC;
  return AffineType::kReducedOrOther;
}

bool is_quotient_non_reduced(const AffineProfile& profile) {
  const ResidueSet& s = profile.profile(LengthClass::kShort);
  const ResidueSet& l = profile.profile(LengthClass::kLong);
  int n = std::max(s.modulus().b, l.modulus().b);
  for (std::int64_t v = 0; v < n; ++v) {
    if (s.contains({0, v}) && l.contains({0, 2 * v})) return true;
  }
  return false;
}

std::string to_string(const AffineProfile& profile) {
  std::ostringstream os;
  bool first = true;
  for (LengthClass c : kLengthClasses) {
    const ResidueSet& p = profile.profile(c);
    os << (first ? "" : " ") << to_string(c) << ":";
    first = false;
    if (p.empty()) {
      os << "-";
      continue;
    }
    int d = p.modulus().b;
    std::vector<Residue> res = p.residues();
    if (res.size() == 1 && res[0].b == 0) {
      os << (d == 1 ? "Z" : std::to_string(d) + "Z");
    } else {
      os << "{";
      for (std::size_t i = 0; i < res.size(); ++i) os << (i ? "," : "") << res[i].b;
      os << "}+" << d << "Z";
    }
  }
  return os.str();
}

}  // namespace ers
