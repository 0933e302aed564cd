#pragma once

#include "cgf/rational.hpp"

#include <string>
#include <vector>

namespace cgf {

// Closed interval [lo, hi]; lo == hi is a single point.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(Rational a, Rational b);
  static Interval point(const Rational& a) { return Interval(a, a); }

  bool is_point() const { return lo == hi; }
  Rational length() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool interior_contains(const Rational& x) const { return lo < x && x < hi; }
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval& a, const Interval& b) {
    if (auto c = a.lo <=> b.lo; c != 0) return c;
    return a.hi <=> b.hi;
  }
};

// Union of open intervals, kept sorted with pairwise disjoint members.
// Touching members (a,b),(b,c) stay separate since b is not covered.
class OpenIntervalSet {
 public:
  OpenIntervalSet() = default;
  explicit OpenIntervalSet(std::vector<Interval> parts);

  void add(const Interval& iv);
  void add(const OpenIntervalSet& other);
  OpenIntervalSet intersect(const Interval& iv) const;
  bool overlaps(const OpenIntervalSet& other) const;
  bool contains(const OpenIntervalSet& other) const;
  Rational measure() const;
  bool empty() const { return parts_.empty(); }
  const std::vector<Interval>& parts() const { return parts_; }

  friend bool operator==(const OpenIntervalSet&, const OpenIntervalSet&) = default;

 private:
  std::vector<Interval> parts_;
};

}  // namespace cgf
