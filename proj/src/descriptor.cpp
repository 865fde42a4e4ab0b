#include "ers/descriptor.hpp"

#include <string>
#include <vector>

#include "ers/error.hpp"

namespace ers {

namespace {

int require_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  auto v = j.get<std::int64_t>();
  if (v < -1000000 || v > 1000000) throw InputError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

Json check(const CheckResult& c) {
  Json out = {{"passed", c.passed}};
  if (!c.passed) out["witness"] = c.witness;
  return out;
}

constexpr const char* kAxiomNames[] = {"full_lattice", "anisotropy", "integrality",
                                       "reflection_closure", "irreducibility"};

}  // namespace

Json to_json(const ResidueSet& s) {
  Json residues = Json::array();
  for (const Residue& r : s.residues()) residues.push_back({r.a, r.b});
  return {{"modulus", {s.modulus().a, s.modulus().b}}, {"residues", residues}};
}

ResidueSet residue_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("modulus") || !j.contains("residues")) {
    throw InputError("translation set needs \"modulus\" and \"residues\"");
  }
  const Json& m = j.at("modulus");
  if (!m.is_array() || m.size() != 2) throw InputError("modulus must be a pair");
  Modulus modulus{require_int(m[0], "modulus"), require_int(m[1], "modulus")};
  const Json& rs = j.at("residues");
  if (!rs.is_array()) throw InputError("residues must be an array");
  std::vector<Residue> residues;
  for (const Json& r : rs) {
    if (!r.is_array() || r.size() != 2) throw InputError("residue must be a pair");
    residues.push_back({require_int(r[0], "residue"), require_int(r[1], "residue")});
  }
  return ResidueSet::make(modulus, residues);
}

Json to_json(const MarkedErs& r) {
  Json classes = Json::object();
  for (LengthClass c : kLengthClasses) {
    if (c == LengthClass::kMiddle && r.rank() == 1) {
      classes[std::string(to_string(c))] = nullptr;
    } else {
      classes[std::string(to_string(c))] = to_json(r.translation(c));
    }
  }
  return {{"name", r.name()}, {"rank", r.rank()}, {"classes", classes}};
}

MarkedErs ers_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("descriptor must be a JSON object");
  if (!j.contains("rank")) throw InputError("descriptor lacks \"rank\"");
  int rank = require_int(j.at("rank"), "rank");
  if (rank < 1) throw InputError("rank must be >= 1, got " + std::to_string(rank));
  std::string name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw InputError("name must be a string");
    name = j.at("name").get<std::string>();
  }
  if (!j.contains("classes") || !j.at("classes").is_object()) {
    throw InputError("descriptor lacks a \"classes\" object");
  }
  const Json& classes = j.at("classes");
  std::array<ResidueSet, 3> sets;
  for (LengthClass c : kLengthClasses) {
    std::string key(to_string(c));
    bool present = classes.contains(key) && !classes.at(key).is_null();
    if (c == LengthClass::kMiddle) {
      if (rank == 1 && present) throw InputError("middle class must be null at rank 1");
      if (rank > 1 && !present) throw InputError("middle class missing at rank > 1");
      if (!present) continue;
    } else if (!present) {
      throw InputError(key + " class missing");
    }
    sets[static_cast<std::size_t>(c)] = residue_set_from_json(classes.at(key));
  }
  return MarkedErs(rank, sets[0], sets[1], sets[2], name);
}

Json to_json(const AxiomReport& report) {
  Json axioms = Json::object();
  for (std::size_t i = 0; i < report.axioms.size(); ++i) axioms[kAxiomNames[i]] = check(report.axioms[i]);
  return {{"passed", report.passed()},
          {"shape", check(report.shape)},
          {"axioms", axioms},
          {"marking", check(report.marking)}};
}

Json to_json(const AffineProfile& profile) {
  Json classes = Json::object();
  for (LengthClass c : kLengthClasses) {
    const ResidueSet& p = profile.profile(c);
    if (p.empty()) {
      classes[std::string(to_string(c))] = nullptr;
      continue;
    }
    Json residues = Json::array();
    for (const Residue& r : p.residues()) residues.push_back(r.b);
    classes[std::string(to_string(c))] = {{"modulus", p.modulus().b}, {"residues", residues}};
  }
  AffineType type = identify_affine_type(profile);
  return {{"rank", profile.rank},
          {"classes", classes},
          {"type", std::string(to_string(type))},
          {"non_reduced", is_quotient_non_reduced(profile)}};
}

Json to_json(const RadicalMap& map) {
  const auto& e = map.entries();
  return {{e[0][0], e[0][1]}, {e[1][0], e[1][1]}};
}

Json to_json(const IsoReport& report) {
  Json checks = Json::array();
  for (const IsoCheck& c : report.checks) {
    checks.push_back({{"lhs", c.entry.lhs},
                      {"rhs", c.entry.rhs},
                      {"matrix", to_json(c.entry.iso.map)},
                      {"shift", {c.entry.iso.shift.m, c.entry.iso.shift.n}},
                      {"via", c.entry.via},
                      {"verified", c.verified},
                      {"detail", c.detail}});
  }
  return {{"rank", report.rank},
          {"verified", report.verified_count()},
          {"total", report.checks.size()},
          {"checks", checks}};
}

Json to_json(const IsoClass& cls) {
  Json members = Json::array();
  for (const MarkedErs& r : cls.members) members.push_back(r.name());
  return {{"key", cls.key}, {"members", members}};
}

}  // namespace ers
