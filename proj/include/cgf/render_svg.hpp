#pragma once

#include "cgf/pwl.hpp"

#include <string>
#include <vector>

namespace cgf {

enum class PlotKind { function, cones, additive_faces, covered_steps, perturbation };
const char* plot_kind_name(PlotKind k);
PlotKind parse_plot_kind(const std::string& s);

// Fixed role colors.
inline constexpr const char* kColorFunction = "#1f4fd8";
inline constexpr const char* kColorAdditive = "#1a9e3a";
inline constexpr const char* kColorViolated = "#d62728";
inline constexpr const char* kColorShadow = "#9a9a9a";

struct DiagramSpec {
  PlotKind kind = PlotKind::function;
  int size = 600;
  bool colored_slopes = true;
};

// Distinct colors for the distinct slope values of pi, in increasing slope order.
std::vector<std::pair<Rational, std::string>> slope_palette(const PiecewiseFunction& pi);

std::string plot_function(const PiecewiseFunction& pi, bool colored_slopes = true, int size = 600);
std::string plot_2d_diagram_with_cones(const PiecewiseFunction& pi, int size = 600);
std::string plot_2d_diagram(const PiecewiseFunction& pi, int size = 600);
// Frame 0 shows phase one; frame i adds the i-th edge move.
std::vector<std::string> plot_covered_steps(const PiecewiseFunction& pi, int size = 600);
// pi with pi +- eps pi~ from the extremality report; pi must be minimal and not extreme.
std::string plot_perturbation(const PiecewiseFunction& pi, int size = 600);

// One document per frame; only covered_steps yields more than one.
std::vector<std::string> render(const PiecewiseFunction& pi, const DiagramSpec& spec);

}  // namespace cgf
