#pragma once

#include "cgf/covering.hpp"
#include "cgf/linalg.hpp"
#include "cgf/minimality.hpp"
#include "cgf/pwl.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cgf {

struct JumpPoint {
  Rational x;
  int side;  // -1: pi~(x) - pi~(x-), +1: pi~(x+) - pi~(x)
};

// Vector-valued g with pi~(x) = g(x) . (s_1..s_k, d_1..d_m).
class SymbolicPerturbation {
 public:
  size_t k = 0;
  std::vector<JumpPoint> jumps;
  std::vector<Rational> bkpt;                  // refined breakpoints in [0,1]
  std::vector<std::array<Vec, 3>> limits;      // value, right, left (g is not periodic)
  std::vector<size_t> interval_component;      // component of each refined interval

  size_t dim() const { return k + jumps.size(); }
  // g extended to R by g(z + 1) = g(z) + g(1).
  Vec at(const Rational& z, int eps) const;
  // pi~ for a coefficient vector with g(1) . v = 0.
  PiecewiseFunction evaluate(const Vec& v, std::optional<Rational> f = std::nullopt) const;
  // Slopes of pi on the components followed by pi's jumps.
  Vec own_coefficients(const PiecewiseFunction& pi) const;
};

SymbolicPerturbation generate_symbolic(const PiecewiseFunction& pi, const CoveredComponentSet& components);

struct EquationSystem {
  Matrix matrix;
  std::vector<std::string> provenance;
  size_t normalization_rows = 3;  // pi~(0), pi~(f), pi~(1) come first
};

EquationSystem build_equation_system(const PiecewiseFunction& pi, const SymbolicPerturbation& g, const Rational& f);

struct Perturbation {
  PiecewiseFunction perturbation;
  Rational epsilon;
};

struct ExtremalityReport {
  bool is_extreme = false;
  bool is_minimal = false;
  MinimalityReport minimality;
  std::optional<CoveredComponentSet> covered;
  std::optional<SymbolicPerturbation> symbolic;
  EquationSystem system;
  size_t kernel_dimension = 0;
  std::vector<Vec> kernel_basis;
  std::optional<Perturbation> perturbation;
  std::optional<DiscreteFunction> discrete_perturbation;
  std::vector<std::string> notes;
  std::vector<std::string> log;
};

struct ExtremalityOptions {
  std::optional<Rational> f;
  bool construct_perturbation = true;
};

ExtremalityReport extremality_test(const PiecewiseFunction& pi, const ExtremalityOptions& opts = {});
Rational find_epsilon(const PiecewiseFunction& pi, const PiecewiseFunction& perturbation,
                      std::optional<Rational> f = std::nullopt);
ExtremalityReport extremality_test_discrete(const DiscreteFunction& pi, std::optional<Rational> f = std::nullopt);

}  // namespace cgf
