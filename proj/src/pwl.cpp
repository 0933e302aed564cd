#include "cgf/pwl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cgf {

namespace {

void check_breakpoints(const std::vector<Rational>& bkpt, size_t n_data) {
  if (bkpt.size() != n_data) throw std::invalid_argument("breakpoints and data have different lengths");
  if (bkpt.size() < 2) throw std::invalid_argument("need at least the breakpoints 0 and 1");
  if (bkpt.front() != 0 || bkpt.back() != 1) throw std::invalid_argument("breakpoints must start at 0 and end at 1");
  for (size_t i = 1; i < bkpt.size(); ++i)
    if (!(bkpt[i - 1] < bkpt[i])) throw std::invalid_argument("breakpoints must be strictly increasing");
}

void check_f(const std::optional<Rational>& f) {
  if (f && (*f <= 0 || *f >= 1)) throw std::invalid_argument("f must lie in (0,1), got " + f->str());
}

}  // namespace

PiecewiseFunction PiecewiseFunction::from_breakpoints_and_values(const std::vector<Rational>& bkpt,
                                                                 const std::vector<Rational>& values,
                                                                 std::optional<Rational> f, bool merge) {
  check_breakpoints(bkpt, values.size());
  std::vector<LimitTriple> limits;
  limits.reserve(values.size());
  for (const auto& v : values) limits.push_back({v, v, v});
  return from_breakpoints_and_limits(bkpt, limits, std::move(f), merge);
}

PiecewiseFunction PiecewiseFunction::from_breakpoints_and_limits(const std::vector<Rational>& bkpt,
                                                                 const std::vector<LimitTriple>& limits,
                                                                 std::optional<Rational> f, bool merge) {
  check_breakpoints(bkpt, limits.size());
  check_f(f);
  std::vector<LimitTriple> lim = limits;
  LimitTriple origin{lim.front().value, lim.front().right, lim.back().left};
  lim.front() = origin;
  lim.back() = origin;

  PiecewiseFunction pf;
  pf.f_ = std::move(f);
  if (!merge) {
    pf.bkpt_ = bkpt;
    pf.limits_ = std::move(lim);
    return pf;
  }
  pf.bkpt_.push_back(bkpt.front());
  pf.limits_.push_back(lim.front());
  for (size_t i = 1; i + 1 < bkpt.size(); ++i) {
    const LimitTriple& t = lim[i];
    if (t.is_continuous()) {
      Rational before = (t.left - pf.limits_.back().right) / (bkpt[i] - pf.bkpt_.back());
      Rational after = (lim[i + 1].left - t.right) / (bkpt[i + 1] - bkpt[i]);
      if (before == after) continue;
    }
    pf.bkpt_.push_back(bkpt[i]);
    pf.limits_.push_back(t);
  }
  pf.bkpt_.push_back(bkpt.back());
  pf.limits_.push_back(lim.back());
  return pf;
}

PiecewiseFunction PiecewiseFunction::with_f(std::optional<Rational> f) const {
  check_f(f);
  PiecewiseFunction r = *this;
  r.f_ = std::move(f);
  return r;
}

size_t PiecewiseFunction::locate(const Rational& r, bool& exact) const {
  auto it = std::lower_bound(bkpt_.begin(), bkpt_.end(), r);
  size_t i = static_cast<size_t>(it - bkpt_.begin());
  exact = it != bkpt_.end() && *it == r;
  return exact ? i : i - 1;
}

Rational PiecewiseFunction::slope(size_t i) const {
  return (limits_[i + 1].left - limits_[i].right) / (bkpt_[i + 1] - bkpt_[i]);
}

Rational PiecewiseFunction::limit(const Rational& x, int eps) const {
  Rational r = frac(x);
  bool exact;
  size_t i = locate(r, exact);
  if (exact) return limits_[i].at(eps);
  return limits_[i].right + (r - bkpt_[i]) * slope(i);
}

LimitTriple PiecewiseFunction::limits_at(const Rational& x) const {
  Rational r = frac(x);
  bool exact;
  size_t i = locate(r, exact);
  if (exact) return limits_[i];
  Rational v = limits_[i].right + (r - bkpt_[i]) * slope(i);
  return {v, v, v};
}

std::optional<size_t> PiecewiseFunction::interval_index(const Rational& x) const {
  bool exact;
  size_t i = locate(frac(x), exact);
  if (exact) return std::nullopt;
  return i;
}

bool PiecewiseFunction::is_breakpoint(const Rational& x) const {
  bool exact;
  locate(frac(x), exact);
  return exact;
}

AffinePiece PiecewiseFunction::which_function(const Rational& x) const {
  Rational t = floor(x);
  Rational r = x - t;
  bool exact;
  size_t i = locate(r, exact);
  if (exact) return {Rational(0), limits_[i].value, Interval::point(x)};
  Rational s = slope(i);
  Rational intercept = limits_[i].right - s * bkpt_[i] - s * t;
  return {s, intercept, Interval(bkpt_[i] + t, bkpt_[i + 1] + t)};
}

bool PiecewiseFunction::is_continuous() const {
  return std::all_of(limits_.begin(), limits_.end(), [](const LimitTriple& t) { return t.is_continuous(); });
}

int PiecewiseFunction::number_of_slopes() const {
  std::set<Rational> slopes;
  for (size_t i = 0; i < num_intervals(); ++i) slopes.insert(slope(i));
  return static_cast<int>(slopes.size());
}

Rational PiecewiseFunction::max_limit() const {
  Rational m = limits_[0].value;
  for (const auto& t : limits_) m = max(max(m, t.value), max(t.left, t.right));
  return m;
}

Rational PiecewiseFunction::min_limit() const {
  Rational m = limits_[0].value;
  for (const auto& t : limits_) m = min(min(m, t.value), min(t.left, t.right));
  return m;
}

mpz_class PiecewiseFunction::grid_order() const {
  mpz_class q = 1;
  for (const auto& b : bkpt_) q = lcm(q, b.den());
  return q;
}

namespace {

PiecewiseFunction combine(const PiecewiseFunction& a, const PiecewiseFunction& b, const Rational& cb) {
  std::vector<Rational> pts;
  std::set_union(a.end_points().begin(), a.end_points().end(), b.end_points().begin(), b.end_points().end(),
                 std::back_inserter(pts));
  std::vector<LimitTriple> lim;
  lim.reserve(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    LimitTriple ta = a.limits_at(pts[i]);
    LimitTriple tb = b.limits_at(pts[i]);
    lim.push_back({ta.value + cb * tb.value, ta.right + cb * tb.right, ta.left + cb * tb.left});
  }
  return PiecewiseFunction::from_breakpoints_and_limits(pts, lim, a.f());
}

}  // namespace

PiecewiseFunction operator+(const PiecewiseFunction& a, const PiecewiseFunction& b) { return combine(a, b, 1); }
PiecewiseFunction operator-(const PiecewiseFunction& a, const PiecewiseFunction& b) { return combine(a, b, -1); }

PiecewiseFunction operator*(const Rational& c, const PiecewiseFunction& a) {
  std::vector<LimitTriple> lim;
  for (const auto& t : a.limits_list()) lim.push_back({c * t.value, c * t.right, c * t.left});
  return PiecewiseFunction::from_breakpoints_and_limits(a.end_points(), lim, a.f());
}

}  // namespace cgf
