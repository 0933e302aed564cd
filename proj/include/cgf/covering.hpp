#pragma once

#include "cgf/complex2d.hpp"
#include "cgf/interval.hpp"
#include "cgf/pwl.hpp"

#include <string>
#include <vector>

namespace cgf {

enum class MoveKind { translation, reflection };

struct EdgeMove {
  Face edge;
  MoveKind kind;
  Interval from, to;
};

struct CoveredComponentSet {
  // Closed-interval semantics (continuous pi); otherwise open intervals.
  bool closed = false;
  // Each component is a union of open intervals; closures are reported when `closed`.
  std::vector<OpenIntervalSet> components;
  std::vector<Interval> uncovered;
  std::vector<EdgeMove> edges_used;
};

CoveredComponentSet directly_covered_components(const PiecewiseFunction& pi, const AdditiveFaceSet& additive);
CoveredComponentSet generate_covered_components(const PiecewiseFunction& pi);
std::vector<Interval> uncovered_intervals(const PiecewiseFunction& pi);

// Merge touching intervals of a component at points where pi is continuous.
OpenIntervalSet join_at_continuity(const PiecewiseFunction& pi, const OpenIntervalSet& s);

}  // namespace cgf
