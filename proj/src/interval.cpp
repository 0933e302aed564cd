#include "cgf/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgf {

Interval::Interval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
  if (hi < lo) throw std::invalid_argument("malformed interval [" + lo.str() + ", " + hi.str() + "]");
}

std::string Interval::str() const {
  if (is_point()) return "{" + lo.str() + "}";
  return "[" + lo.str() + ", " + hi.str() + "]";
}

OpenIntervalSet::OpenIntervalSet(std::vector<Interval> parts) {
  for (auto& p : parts) add(p);
}

void OpenIntervalSet::add(const Interval& iv) {
  if (iv.is_point()) return;
  Interval merged = iv;
  std::vector<Interval> out;
  out.reserve(parts_.size() + 1);
  for (const auto& p : parts_) {
    if (p.lo < merged.hi && merged.lo < p.hi) {
      merged = Interval(min(p.lo, merged.lo), max(p.hi, merged.hi));
    } else {
      out.push_back(p);
    }
  }
  out.insert(std::upper_bound(out.begin(), out.end(), merged), merged);
  parts_ = std::move(out);
}

void OpenIntervalSet::add(const OpenIntervalSet& other) {
  for (const auto& p : other.parts_) add(p);
}

OpenIntervalSet OpenIntervalSet::intersect(const Interval& iv) const {
  OpenIntervalSet r;
  for (const auto& p : parts_) {
    Rational lo = max(p.lo, iv.lo), hi = min(p.hi, iv.hi);
    if (lo < hi) r.parts_.emplace_back(lo, hi);
  }
  return r;
}

bool OpenIntervalSet::overlaps(const OpenIntervalSet& other) const {
  for (const auto& a : parts_)
    for (const auto& b : other.parts_)
      if (a.lo < b.hi && b.lo < a.hi) return true;
  return false;
}

bool OpenIntervalSet::contains(const OpenIntervalSet& other) const {
  return std::all_of(other.parts_.begin(), other.parts_.end(), [&](const Interval& b) {
    return std::any_of(parts_.begin(), parts_.end(),
                       [&](const Interval& a) { return a.lo <= b.lo && b.hi <= a.hi; });
  });
}

Rational OpenIntervalSet::measure() const {
  Rational m = 0;
  for (const auto& p : parts_) m += p.length();
  return m;
}

}  // namespace cgf
