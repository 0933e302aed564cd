#pragma once

#include "cgf/complex2d.hpp"
#include "cgf/covering.hpp"
#include "cgf/extremality.hpp"
#include "cgf/minimality.hpp"
#include "cgf/pwl.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace cgf {

using json = nlohmann::ordered_json;
using AnyFunction = std::variant<PiecewiseFunction, DiscreteFunction>;

// Rationals travel as "p/q" strings; JSON integers are accepted, floats are not.
Rational rational_from_json(const json& j);

json to_json(const Interval& iv);
json to_json(const PiecewiseFunction& pi);
json to_json(const DiscreteFunction& pi);
json to_json(const AnyFunction& pi);
json to_json(const Face& F);
json to_json(const AdditiveFaceSet& s);
json to_json(const Violation& v);
json to_json(const MinimalityReport& r);
json to_json(const CoveredComponentSet& c);
json to_json(const EquationSystem& s);
json to_json(const ExtremalityReport& r);

PiecewiseFunction piecewise_from_json(const json& j);
DiscreteFunction discrete_from_json(const json& j);
AnyFunction function_from_json(const json& j);
AnyFunction read_function_file(const std::string& path);

}  // namespace cgf
