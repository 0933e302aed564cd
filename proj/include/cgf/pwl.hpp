#pragma once

#include "cgf/interval.hpp"
#include "cgf/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cgf {

// (pi(x), pi(x+), pi(x-)).
struct LimitTriple {
  Rational value, right, left;

  const Rational& at(int eps) const { return eps == 0 ? value : (eps > 0 ? right : left); }
  bool is_continuous() const { return value == right && value == left; }
  friend bool operator==(const LimitTriple&, const LimitTriple&) = default;
};

struct AffinePiece {
  Rational slope, intercept;
  Interval face;
  Rational operator()(const Rational& x) const { return slope * x + intercept; }
};

// Z-periodic piecewise linear function, possibly discontinuous, given on [0,1].
class PiecewiseFunction {
 public:
  static PiecewiseFunction from_breakpoints_and_values(const std::vector<Rational>& bkpt,
                                                       const std::vector<Rational>& values,
                                                       std::optional<Rational> f = std::nullopt,
                                                       bool merge = true);
  static PiecewiseFunction from_breakpoints_and_limits(const std::vector<Rational>& bkpt,
                                                       const std::vector<LimitTriple>& limits,
                                                       std::optional<Rational> f = std::nullopt,
                                                       bool merge = true);

  const std::vector<Rational>& end_points() const { return bkpt_; }
  const std::vector<LimitTriple>& limits_list() const { return limits_; }
  const std::optional<Rational>& f() const { return f_; }
  PiecewiseFunction with_f(std::optional<Rational> f) const;

  Rational operator()(const Rational& x) const { return limit(x, 0); }
  // One-sided limit: eps = +1 right, -1 left, 0 value.
  Rational limit(const Rational& x, int eps) const;
  LimitTriple limits_at(const Rational& x) const;
  AffinePiece which_function(const Rational& x) const;

  size_t num_intervals() const { return bkpt_.size() - 1; }
  Interval interval(size_t i) const { return Interval(bkpt_[i], bkpt_[i + 1]); }
  Rational slope(size_t i) const;
  // Index of the open interval containing frac(x), or nullopt at a breakpoint.
  std::optional<size_t> interval_index(const Rational& x) const;
  bool is_breakpoint(const Rational& x) const;

  bool is_continuous() const;
  bool is_continuous_at(const Rational& x) const { return limits_at(x).is_continuous(); }
  int number_of_slopes() const;
  Rational max_limit() const;
  Rational min_limit() const;
  // Least common multiple of breakpoint denominators.
  mpz_class grid_order() const;

  friend bool operator==(const PiecewiseFunction& a, const PiecewiseFunction& b) {
    return a.bkpt_ == b.bkpt_ && a.limits_ == b.limits_;
  }

 private:
  PiecewiseFunction() = default;
  size_t locate(const Rational& r, bool& exact) const;

  std::vector<Rational> bkpt_;
  std::vector<LimitTriple> limits_;
  std::optional<Rational> f_;
};

PiecewiseFunction operator+(const PiecewiseFunction& a, const PiecewiseFunction& b);
PiecewiseFunction operator-(const PiecewiseFunction& a, const PiecewiseFunction& b);
PiecewiseFunction operator*(const Rational& c, const PiecewiseFunction& a);

// Function on the cyclic group (1/q)Z / Z, stored on the full grid 0, 1/q, ..., 1.
class DiscreteFunction {
 public:
  static DiscreteFunction from_points_and_values(const std::vector<Rational>& points,
                                                 const std::vector<Rational>& values,
                                                 std::optional<Rational> f = std::nullopt);

  long order() const { return q_; }
  std::vector<Rational> points() const;
  const std::vector<Rational>& values() const { return values_; }
  const std::optional<Rational>& f() const { return f_; }
  DiscreteFunction with_f(std::optional<Rational> f) const;
  // x must lie on the grid (mod 1).
  Rational operator()(const Rational& x) const;
  const Rational& at(long i) const;  // value at ((i mod q) / q)
  bool on_grid(const Rational& x) const;
  long index_of(const Rational& x) const;

  friend bool operator==(const DiscreteFunction&, const DiscreteFunction&) = default;

 private:
  DiscreteFunction() = default;
  long q_ = 1;
  std::vector<Rational> values_;
  std::optional<Rational> f_;
};

struct RandomOptions {
  int xgrid = 10;
  int ygrid = 10;
  Rational continuous_proba = 1;
  bool symmetry = true;
  std::uint64_t seed = 0;
};

PiecewiseFunction random_piecewise_function(const RandomOptions& opts);

}  // namespace cgf
