#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace tdsolve {

using Vertex = std::int32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = -1;
/// Distance of an unreachable vertex.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

/// Caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed or semantically invalid input (files, graphs, forests).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic left the representable range.
class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential routine was asked to handle an instance above its size cap.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("weight overflow in addition");
  return r;
}

inline Weight checked_sub(Weight a, Weight b) {
  Weight r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("weight overflow in subtraction");
  return r;
}

inline Weight checked_mul(Weight a, Weight b) {
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("weight overflow in multiplication");
  return r;
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ContractViolation(what);
}

}  // namespace tdsolve
