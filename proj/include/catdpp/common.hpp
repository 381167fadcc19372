#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace catdpp {

// Exact integer type used for all counts and polynomial coefficients.
// Counts such as the order-n descending plane partition numbers outgrow
// 64 bits quickly, so nothing here may wrap.
using BigInt = boost::multiprecision::cpp_int;

// A located invariant violation produced by a validator.  `row`/`col` are
// 0-based indices into the offending structure; -1 means "not applicable".
struct Violation {
  std::string code;
  int row = -1;
  int col = -1;
  std::string detail;
};

// Result of a validating constructor: either the validated value or the
// first violation encountered.
template <typename T>
class Validated {
 public:
  Validated(T value) : v_(std::move(value)) {}
  Validated(Violation violation) : v_(std::move(violation)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  const T& value() const { return std::get<T>(v_); }
  const Violation& violation() const { return std::get<Violation>(v_); }

 private:
  std::variant<T, Violation> v_;
};

// Thrown when a polynomial quotient that must be exact leaves a remainder.
struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration is requested beyond its configured cap.
struct OrderTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a tree level beyond the configured depth cap is requested.
struct DepthTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace catdpp
