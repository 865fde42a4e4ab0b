#include "ers/finite_roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ers/error.hpp"

namespace ers {

std::string_view to_string(LengthClass c) {
  switch (c) {
    case LengthClass::kShort:
      return "short";
    case LengthClass::kMiddle:
      return "middle";
    case LengthClass::kLong:
      return "long";
  }
  return "?";
}

int squared_length(LengthClass c) {
  switch (c) {
    case LengthClass::kShort:
      return 1;
    case LengthClass::kMiddle:
      return 2;
    case LengthClass::kLong:
      return 4;
  }
  return 0;
}

std::vector<FiniteRoot> finite_roots(int rank) {
  if (rank < 1) throw InputError("rank must be >= 1, got " + std::to_string(rank));
  std::vector<FiniteRoot> roots;
  auto unit = [rank](int i, int value) {
    std::vector<int> v(static_cast<std::size_t>(rank), 0);
    v[static_cast<std::size_t>(i)] = value;
    return v;
  };
  for (int i = 0; i < rank; ++i) {
    roots.push_back({unit(i, 1), LengthClass::kShort});
    roots.push_back({unit(i, -1), LengthClass::kShort});
  }
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      for (int sign_j : {1, -1}) {
        for (int overall : {1, -1}) {
          std::vector<int> v(static_cast<std::size_t>(rank), 0);
          v[static_cast<std::size_t>(i)] = overall;
          v[static_cast<std::size_t>(j)] = overall * sign_j;
          roots.push_back({std::move(v), LengthClass::kMiddle});
        }
      }
    }
  }
  for (int i = 0; i < rank; ++i) {
    roots.push_back({unit(i, 2), LengthClass::kLong});
    roots.push_back({unit(i, -2), LengthClass::kLong});
  }
  return roots;
}

std::optional<LengthClass> classify_finite(std::span<const std::int64_t> coords) {
  int nonzero = 0;
  std::int64_t first = 0;
  std::int64_t second = 0;
  for (std::int64_t c : coords) {
    if (c == 0) continue;
    if (++nonzero == 1) {
      first = c;
    } else {
      second = c;
    }
  }
  if (nonzero == 1) {
    if (std::abs(first) == 1) return LengthClass::kShort;
    if (std::abs(first) == 2) return LengthClass::kLong;
  }
  if (nonzero == 2 && std::abs(first) == 1 && std::abs(second) == 1) return LengthClass::kMiddle;
  return std::nullopt;
}

int inner(const FiniteRoot& alpha, const FiniteRoot& beta) {
  if (alpha.rank() != beta.rank()) throw InputError("inner: rank mismatch");
  int sum = 0;
  for (std::size_t i = 0; i < alpha.coords.size(); ++i) sum += alpha.coords[i] * beta.coords[i];
  return sum;
}

Coroot coroot(const FiniteRoot& alpha) {
  int norm = inner(alpha, alpha);
  if (norm == 0) throw InputError("coroot of the zero vector");
  Coroot out;
  for (int c : alpha.coords) {
    if ((4 * c) % norm != 0) throw std::logic_error("coroot is not half-integral");
    out.doubled.push_back(4 * c / norm);
  }
  return out;
}

int pairing(const FiniteRoot& beta, const FiniteRoot& alpha) {
  Coroot cv = coroot(alpha);
  if (cv.doubled.size() != beta.coords.size()) throw InputError("pairing: rank mismatch");
  int twice = 0;
  for (std::size_t i = 0; i < beta.coords.size(); ++i) twice += beta.coords[i] * cv.doubled[i];
  if (twice % 2 != 0) throw std::logic_error("non-integral pairing I(beta, alpha^vee)");
  return twice / 2;
}

FiniteReflection reflect_finite(const FiniteRoot& alpha, const FiniteRoot& beta) {
  int k = pairing(beta, alpha);
  std::vector<std::int64_t> image(beta.coords.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = beta.coords[i] - k * alpha.coords[i];
  std::optional<LengthClass> cls = classify_finite(image);
  if (!cls) throw std::logic_error("finite reflection left BC_l");
  FiniteRoot out{{image.begin(), image.end()}, *cls};
  return {std::move(out), k};
}

std::vector<ClosureCondition> closure_conditions(int rank) {
  std::vector<FiniteRoot> roots = finite_roots(rank);
  std::vector<ClosureCondition> out;
  for (const FiniteRoot& alpha : roots) {
    for (const FiniteRoot& beta : roots) {
      FiniteReflection r = reflect_finite(alpha, beta);
      out.push_back({alpha.length_class, beta.length_class, r.image.length_class, r.k});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ers
