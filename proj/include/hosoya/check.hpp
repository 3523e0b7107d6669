#pragma once

#include "hosoya/scalar.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hosoya {

enum class Verdict { kEqual, kMismatch };

const char* to_string(Verdict verdict);

// One evaluated instance of an identity: both sides computed exactly.
struct IdentityCheck {
  std::string identity;
  std::vector<std::pair<std::string, std::int64_t>> params;
  Rational lhs;
  Rational rhs;
  Verdict verdict = Verdict::kMismatch;
  // Operand dump, filled for mismatches.
  std::string detail;

  bool equal() const { return verdict == Verdict::kEqual; }
};

IdentityCheck make_check(std::string identity,
                         std::vector<std::pair<std::string, std::int64_t>> params,
                         Rational lhs, Rational rhs, std::string detail = {});

}  // namespace hosoya
