#pragma once

/**
 * @file finite_roots.hpp
 * @brief The finite root system BC_l in the orthonormal basis eps_1..eps_l.
 *
 * Short roots +-eps_i (squared length 1), middle roots +-(eps_i +- eps_j)
 * (squared length 2, the D_l subsystem) and long roots +-2 eps_i (squared
 * length 4). Everything is integral; coroots are kept doubled so they stay
 * integral too.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ers {

enum class LengthClass : std::uint8_t { kShort = 0, kMiddle = 1, kLong = 2 };

inline constexpr LengthClass kLengthClasses[] = {LengthClass::kShort, LengthClass::kMiddle,
                                                 LengthClass::kLong};

std::string_view to_string(LengthClass c);
/// Squared length I(alpha, alpha) of roots in the class: 1, 2 or 4.
int squared_length(LengthClass c);

struct FiniteRoot {
  std::vector<int> coords;
  LengthClass length_class = LengthClass::kShort;

  int rank() const { return static_cast<int>(coords.size()); }

  friend bool operator==(const FiniteRoot&, const FiniteRoot&) = default;
};

/// 4 alpha / I(alpha, alpha); the coroot is this vector divided by 2.
struct Coroot {
  std::vector<int> doubled;
};

struct FiniteReflection {
  FiniteRoot image;
  int k = 0;  // I(beta, alpha^vee)
};

struct ClosureCondition {
  LengthClass reflecting_class;
  LengthClass reflected_class;
  LengthClass image_class;
  int k;

  friend auto operator<=>(const ClosureCondition&, const ClosureCondition&) = default;
};

/// All roots of BC_l: 2l short, 2l(l-1) middle, 2l long, in that order.
/// Throws InputError for rank < 1.
std::vector<FiniteRoot> finite_roots(int rank);

/// Length class of an integer vector if it is a root of BC_l.
std::optional<LengthClass> classify_finite(std::span<const std::int64_t> coords);

int inner(const FiniteRoot& alpha, const FiniteRoot& beta);
Coroot coroot(const FiniteRoot& alpha);

/// I(beta, alpha^vee) = 2 I(beta, alpha) / I(alpha, alpha); throws
/// std::logic_error if not integral.
int pairing(const FiniteRoot& beta, const FiniteRoot& alpha);

/// w_alpha(beta) = beta - I(beta, alpha^vee) alpha.
FiniteReflection reflect_finite(const FiniteRoot& alpha, const FiniteRoot& beta);

/// Distinct (class(alpha), class(beta), class(w_alpha beta), k) over all
/// pairs of roots of BC_l, sorted.
std::vector<ClosureCondition> closure_conditions(int rank);

}  // namespace ers
