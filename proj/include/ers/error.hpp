#pragma once

#include <stdexcept>

namespace ers {

/// Raised for malformed or inadmissible caller input (bad residues, unknown
/// type names, ranks outside a type's admissible range, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ers
