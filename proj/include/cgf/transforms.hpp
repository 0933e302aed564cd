#pragma once

#include "cgf/pwl.hpp"

#include <optional>

namespace cgf {

// x -> pi(lambda x) for a nonzero integer lambda.
PiecewiseFunction multiplicative_homomorphism(const PiecewiseFunction& pi, long lambda);
// Infinite group: lambda must be 1 or -1.
PiecewiseFunction automorphism(const PiecewiseFunction& pi, long lambda = -1);
// Finite group: lambda must be coprime with the order.
DiscreteFunction automorphism(const DiscreteFunction& pi, long lambda);

struct RestrictOptions {
  std::optional<Rational> f;
  std::optional<long> oversampling;
  std::optional<long> order;
};

DiscreteFunction restrict_to_finite_group(const PiecewiseFunction& pi, const RestrictOptions& opts = {});
PiecewiseFunction interpolate_to_infinite_group(const DiscreteFunction& pi);

}  // namespace cgf
