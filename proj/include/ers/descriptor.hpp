#pragma once

/**
 * @file descriptor.hpp
 * @brief JSON encoding of translation sets, systems and reports.
 *
 * System descriptor:
 *
 *     {"name": "CvC(1)", "rank": 2,
 *      "classes": {"short":  {"modulus": [1, 1], "residues": [[0, 0]]},
 *                  "middle": {"modulus": [1, 2], "residues": [[0, 0]]},
 *                  "long":   {"modulus": [1, 2], "residues": [[0, 0]]}}}
 *
 * "middle" is null at rank 1.
 */

#include "json.hpp"

#include "ers/affine_quotient.hpp"
#include "ers/coset_lattice.hpp"
#include "ers/ers_catalog.hpp"
#include "ers/isomorphy.hpp"

namespace ers {

using Json = nlohmann::ordered_json;

Json to_json(const ResidueSet& s);
/// Throws InputError on anything malformed.
ResidueSet residue_set_from_json(const Json& j);

Json to_json(const MarkedErs& r);
/// Throws InputError on anything malformed, including a middle class that is
/// present at rank 1 or missing at rank > 1.
MarkedErs ers_from_json(const Json& j);

Json to_json(const AxiomReport& report);
Json to_json(const AffineProfile& profile);
Json to_json(const RadicalMap& map);
Json to_json(const IsoReport& report);
Json to_json(const IsoClass& cls);

}  // namespace ers
