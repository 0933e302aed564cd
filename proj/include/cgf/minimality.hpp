#pragma once

#include "cgf/complex2d.hpp"
#include "cgf/pwl.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cgf {

enum class ViolationKind { value_at_0, range, symmetry, subadditivity };
const char* violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  Rational x, y;  // y unused for value_at_0, range and symmetry
  Eps eps;        // eps.x is the limit side for range and symmetry records
  std::optional<Face> face;
  Rational slack;
  std::string str() const;
};

struct MinimalityReport {
  bool is_minimal = false;
  Rational f_used;
  std::vector<Violation> violations;
  std::vector<std::string> log;
};

struct MinimalityOptions {
  std::optional<Rational> f;
  bool fail_fast = false;
};

Rational find_f(const PiecewiseFunction& pi);
MinimalityReport minimality_test(const PiecewiseFunction& pi, const MinimalityOptions& opts = {});
// q such that pi is (1/q)Z-periodic, derived from zeros of pi at non-integer breakpoints.
std::optional<long> detect_zero_period(const PiecewiseFunction& pi);

Rational find_f(const DiscreteFunction& pi);
MinimalityReport minimality_test(const DiscreteFunction& pi, const MinimalityOptions& opts = {});

}  // namespace cgf
