#include "cgf/render_svg.hpp"

#include "cgf/complex2d.hpp"
#include "cgf/covering.hpp"
#include "cgf/extremality.hpp"
#include "cgf/minimality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cgf {

namespace {

const char* const kBasePalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4",
                                    "#f032e6", "#9a6324", "#469990", "#800000", "#808000", "#000075"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

class Svg {
 public:
  Svg(double w, double h) : w_(w), h_(h) {}

  void line(double x1, double y1, double x2, double y2, const std::string& color, double width,
            const std::string& extra = "") {
    out_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y2)
         << "\" stroke=\"" << color << "\" stroke-width=\"" << num(width) << "\"" << extra << "/>\n";
  }
  void circle(double cx, double cy, double r, const std::string& fill, const std::string& stroke,
              const std::string& extra = "") {
    out_ << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r) << "\" fill=\"" << fill
         << "\" stroke=\"" << stroke << "\"" << extra << "/>\n";
  }
  void rect(double x, double y, double w, double h, const std::string& fill, const std::string& extra = "") {
    out_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
         << "\" fill=\"" << fill << "\"" << extra << "/>\n";
  }
  void polygon(const std::vector<std::pair<double, double>>& pts, const std::string& fill, const std::string& extra) {
    out_ << "<polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) out_ << (i ? " " : "") << num(pts[i].first) << "," << num(pts[i].second);
    out_ << "\" fill=\"" << fill << "\"" << extra << "/>\n";
  }
  void path(const std::string& d, const std::string& fill, const std::string& extra) {
    out_ << "<path d=\"" << d << "\" fill=\"" << fill << "\"" << extra << "/>\n";
  }
  void text(double x, double y, const std::string& s, int size = 12) {
    out_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-family=\"sans-serif\" font-size=\"" << size
         << "\">" << s << "</text>\n";
  }
  void raw(const std::string& s) { out_ << s; }

  std::string str() const {
    std::ostringstream doc;
    doc << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w_) << "\" height=\""
        << num(h_) << "\" viewBox=\"0 0 " << num(w_) << " " << num(h_) << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << num(w_) << "\" height=\"" << num(h_) << "\" fill=\"white\"/>\n"
        << out_.str() << "</svg>\n";
    return doc.str();
  }

 private:
  double w_, h_;
  std::ostringstream out_;
};

std::string hsl_color(size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "hsl(%zu,70%%,45%%)", (i * 47) % 360);
  return buf;
}

// Affine map from function coordinates to a pixel box.
struct GraphBox {
  double x0, y0, w, h;
  double lo, hi;  // value range
  double px(const Rational& x) const { return x0 + x.to_double() * w; }
  double py(const Rational& v) const { return y0 + h - (v.to_double() - lo) / (hi - lo) * h; }
};

GraphBox graph_box(const std::vector<const PiecewiseFunction*>& fs, double x0, double y0, double w, double h) {
  double lo = 0, hi = 1;
  for (auto* f : fs) {
    lo = std::min(lo, f->min_limit().to_double());
    hi = std::max(hi, f->max_limit().to_double());
  }
  return {x0, y0, w, h, lo, hi};
}

std::string slope_color(const std::vector<std::pair<Rational, std::string>>& pal, const Rational& s) {
  for (const auto& [v, c] : pal)
    if (v == s) return c;
  return kColorFunction;
}

void draw_graph(Svg& svg, const PiecewiseFunction& pi, const GraphBox& g, bool colored, double width,
                const std::string& color, const std::string& tag) {
  auto pal = slope_palette(pi);
  const auto& b = pi.end_points();
  const auto& lim = pi.limits_list();
  for (size_t i = 0; i + 1 < b.size(); ++i) {
    std::string c = colored ? slope_color(pal, pi.slope(i)) : color;
    svg.line(g.px(b[i]), g.py(lim[i].right), g.px(b[i + 1]), g.py(lim[i + 1].left), c, width,
             " class=\"" + tag + "\" data-slope=\"" + pi.slope(i).str() + "\"");
  }
  const double r = std::max(2.0, width * 1.5);
  for (size_t i = 0; i < b.size(); ++i) {
    const LimitTriple& t = lim[i];
    if (t.is_continuous()) continue;
    std::string c = colored ? kColorFunction : color;
    svg.circle(g.px(b[i]), g.py(t.value), r, c, c, " class=\"closed-end\"");
    if (i > 0 && t.left != t.value) svg.circle(g.px(b[i]), g.py(t.left), r, "white", c, " class=\"open-end\"");
    if (i + 1 < b.size() && t.right != t.value)
      svg.circle(g.px(b[i]), g.py(t.right), r, "white", c, " class=\"open-end\"");
  }
}

void draw_axes(Svg& svg, const GraphBox& g) {
  svg.line(g.x0, g.py(0), g.x0 + g.w, g.py(0), "black", 1);
  svg.line(g.x0, g.y0, g.x0, g.y0 + g.h, "black", 1);
  svg.text(g.x0 + g.w - 8, g.py(0) + 14, "1");
  svg.text(g.x0 - 14, g.py(1) + 4, "1");
  svg.text(g.x0 - 14, g.py(0) + 4, "0");
}

// Layout of a 2D diagram: square [0,1]^2 with pi drawn above the top and left of the left border.
struct Square {
  double x0, y0, w, band;
  double px(const Rational& x) const { return x0 + x.to_double() * w; }
  double py(const Rational& y) const { return y0 + (1 - y.to_double()) * w; }
  double dpx(double x) const { return x0 + x * w; }
  double dpy(double y) const { return y0 + (1 - y) * w; }
};

Square square_layout(int size) {
  double band = size * 0.15;
  double margin = size * 0.04;
  double w = size - band - 2 * margin;
  return {margin + band, margin + band, w, band};
}

void draw_complex(Svg& svg, const Square& sq, const std::vector<Rational>& b) {
  svg.rect(sq.x0, sq.y0, sq.w, sq.w, "none", " stroke=\"black\"");
  for (const auto& t : b) {
    svg.line(sq.px(t), sq.y0, sq.px(t), sq.y0 + sq.w, "#c8c8c8", 0.6);
    svg.line(sq.x0, sq.py(t), sq.x0 + sq.w, sq.py(t), "#c8c8c8", 0.6);
  }
  for (const auto& c : doubled_breakpoints(b)) {
    if (c <= 0 || c >= 2) continue;
    double cc = c.to_double();
    double xa = std::max(0.0, cc - 1), xb = std::min(1.0, cc);
    svg.line(sq.dpx(xa), sq.dpy(cc - xa), sq.dpx(xb), sq.dpy(cc - xb), "#c8c8c8", 0.6);
  }
}

// pi along the top border (x axis) and along the left border (y axis).
void draw_border_functions(Svg& svg, const Square& sq, const PiecewiseFunction& pi) {
  double lo = std::min(0.0, pi.min_limit().to_double()), hi = std::max(1.0, pi.max_limit().to_double());
  const double gap = sq.band * 0.1, h = sq.band * 0.8;
  auto val = [&](const Rational& v) { return (v.to_double() - lo) / (hi - lo) * h; };
  const auto& b = pi.end_points();
  const auto& lim = pi.limits_list();
  for (size_t i = 0; i + 1 < b.size(); ++i) {
    svg.line(sq.px(b[i]), sq.y0 - gap - val(lim[i].right), sq.px(b[i + 1]), sq.y0 - gap - val(lim[i + 1].left),
             kColorFunction, 1.5, " class=\"border-x\"");
    svg.line(sq.x0 - gap - val(lim[i].right), sq.py(b[i]), sq.x0 - gap - val(lim[i + 1].left), sq.py(b[i + 1]),
             kColorFunction, 1.5, " class=\"border-y\"");
  }
}

// Angles (degrees, counterclockwise in function coordinates) of the cone or ray for eps.
std::pair<double, double> eps_angles(const Eps& e) {
  static const std::map<std::array<int, 3>, std::pair<double, double>> table = {
      {{1, 0, 1}, {0, 0}},        {{0, 1, 1}, {90, 90}},     {{-1, 1, 0}, {135, 135}},
      {{-1, 0, -1}, {180, 180}},  {{0, -1, -1}, {270, 270}}, {{1, -1, 0}, {315, 315}},
      {{1, 1, 1}, {0, 90}},       {{-1, 1, 1}, {90, 135}},   {{-1, 1, -1}, {135, 180}},
      {{-1, -1, -1}, {180, 270}}, {{1, -1, -1}, {270, 315}}, {{1, -1, 1}, {315, 360}},
  };
  return table.at({e.x, e.y, e.z});
}

void draw_cone(Svg& svg, double cx, double cy, double r, const Eps& e, const std::string& color,
               const std::string& extra) {
  constexpr double kPi = 3.14159265358979323846;
  auto [a, b] = eps_angles(e);
  auto pt = [&](double deg) {
    double t = deg * kPi / 180;
    return std::make_pair(cx + r * std::cos(t), cy - r * std::sin(t));
  };
  if (a == b) {
    auto p = pt(a);
    svg.line(cx, cy, p.first, p.second, color, 2, extra);
    return;
  }
  auto p = pt(a), q = pt(b);
  std::string d = "M " + num(cx) + " " + num(cy) + " L " + num(p.first) + " " + num(p.second) + " A " + num(r) + " " +
                  num(r) + " 0 0 0 " + num(q.first) + " " + num(q.second) + " Z";
  svg.path(d, color, " fill-opacity=\"0.8\"" + extra);
}

std::vector<std::pair<double, double>> face_polygon(const Face& F, const Square& sq) {
  std::vector<std::pair<double, double>> pts;
  double cx = 0, cy = 0;
  for (const auto& v : F.vertices()) {
    pts.emplace_back(sq.px(v.x), sq.py(v.y));
    cx += pts.back().first;
    cy += pts.back().second;
  }
  cx /= pts.size();
  cy /= pts.size();
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
  });
  return pts;
}

std::string point_attr(const Point& v) { return " data-vertex=\"" + v.x.str() + "," + v.y.str() + "\""; }

std::string interval_color(size_t comp) { return comp < 12 ? kBasePalette[comp] : hsl_color(comp); }

std::optional<size_t> component_of(const CoveredComponentSet& cs, const Interval& iv) {
  for (size_t c = 0; c < cs.components.size(); ++c)
    for (const auto& p : cs.components[c].parts())
      if (p.lo <= iv.lo && iv.hi <= p.hi) return c;
  return std::nullopt;
}

}  // namespace

const char* plot_kind_name(PlotKind k) {
  switch (k) {
    case PlotKind::function: return "function";
    case PlotKind::cones: return "2d_cones";
    case PlotKind::additive_faces: return "2d_additive_faces";
    case PlotKind::covered_steps: return "covered_steps";
    default: return "perturbation";
  }
}

PlotKind parse_plot_kind(const std::string& s) {
  for (PlotKind k : {PlotKind::function, PlotKind::cones, PlotKind::additive_faces, PlotKind::covered_steps,
                     PlotKind::perturbation})
    if (s == plot_kind_name(k)) return k;
  throw std::invalid_argument("unknown plot kind \"" + s + "\"");
}

std::vector<std::pair<Rational, std::string>> slope_palette(const PiecewiseFunction& pi) {
  std::set<Rational> slopes;
  for (size_t i = 0; i < pi.num_intervals(); ++i) slopes.insert(pi.slope(i));
  std::vector<std::pair<Rational, std::string>> out;
  size_t i = 0;
  for (const auto& s : slopes) {
    out.emplace_back(s, i < 12 ? kBasePalette[i] : hsl_color(i));
    ++i;
  }
  return out;
}

std::string plot_function(const PiecewiseFunction& pi, bool colored_slopes, int size) {
  Svg svg(size, size * 0.75);
  GraphBox g = graph_box({&pi}, size * 0.08, size * 0.05, size * 0.86, size * 0.6);
  draw_axes(svg, g);
  draw_graph(svg, pi, g, colored_slopes, 2, kColorFunction, "piece");
  return svg.str();
}

std::string plot_2d_diagram_with_cones(const PiecewiseFunction& pi, int size) {
  Svg svg(size, size);
  Square sq = square_layout(size);
  const auto& b = pi.end_points();
  draw_complex(svg, sq, b);
  draw_border_functions(svg, sq, pi);
  svg.raw("<clipPath id=\"square\"><rect x=\"" + num(sq.x0) + "\" y=\"" + num(sq.y0) + "\" width=\"" + num(sq.w) +
          "\" height=\"" + num(sq.w) + "\"/></clipPath>\n<g clip-path=\"url(#square)\">\n");
  const double r = size * 0.018;
  const bool cont = pi.is_continuous();
  for (const auto& v : enumerate_complex_vertices(b, false)) {
    const bool mirror = v.x > v.y;
    for (const Eps& e : kAllEps) {
      Rational d = delta_pi_eps(pi, v.x, v.y, e);
      if (d > 0) {
        if (cont) break;
        continue;
      }
      std::string color = d == 0 ? kColorAdditive : kColorViolated;
      std::string extra = " class=\"" + std::string(d == 0 ? "additive" : "violated") + "\"" + point_attr(v) +
                          " data-eps=\"" + std::to_string(e.x) + "," + std::to_string(e.y) + "," +
                          std::to_string(e.z) + "\"" + (mirror ? " data-mirror=\"1\"" : "");
      if (e == Eps{}) {
        svg.circle(sq.px(v.x), sq.py(v.y), size * 0.006, color, color, extra);
      } else {
        draw_cone(svg, sq.px(v.x), sq.py(v.y), r, e, color, extra);
      }
      if (cont) break;
    }
  }
  svg.raw("</g>\n");
  return svg.str();
}

std::string plot_2d_diagram(const PiecewiseFunction& pi, int size) {
  for (const auto& v : enumerate_complex_vertices(pi.end_points(), true))
    for (const Eps& e : kAllEps)
      if (delta_pi_eps(pi, v.x, v.y, e) < 0)
        throw std::invalid_argument("pi is not subadditive at (" + v.x.str() + ", " + v.y.str() + ")");
  AdditiveFaceSet add = generate_additive_faces(pi);
  Svg svg(size, size);
  Square sq = square_layout(size);
  const double sh = sq.band * 0.08;
  // Projection shadows of additive 2-faces: p1 above the top, p2 left of the left, p3 along bottom then right.
  for (const auto& F : add.faces_of_dimension(2, true)) {
    const Interval &p1 = F.proj(0), &p2 = F.proj(1), &p3 = F.proj(2);
    const std::string op = " fill-opacity=\"0.35\" class=\"shadow\"";
    svg.rect(sq.px(p1.lo), sq.y0 - sh, sq.px(p1.hi) - sq.px(p1.lo), sh, kColorShadow, op);
    svg.rect(sq.x0 - sh, sq.py(p2.hi), sh, sq.py(p2.lo) - sq.py(p2.hi), kColorShadow, op);
    if (p3.lo < 1) {
      Rational hi = min(p3.hi, Rational(1));
      svg.rect(sq.px(p3.lo), sq.y0 + sq.w, sq.px(hi) - sq.px(p3.lo), sh, kColorShadow, op);
    }
    if (p3.hi > 1) {
      Rational lo = max(p3.lo, Rational(1)) - 1, hi = p3.hi - 1;
      svg.rect(sq.x0 + sq.w, sq.py(hi), sh, sq.py(lo) - sq.py(hi), kColorShadow, op);
    }
  }
  for (const auto& F : add.faces_of_dimension(2, true))
    svg.polygon(face_polygon(F, sq), kColorAdditive, " fill-opacity=\"0.6\" class=\"additive-face\"");
  draw_complex(svg, sq, pi.end_points());
  for (const auto& E : add.faces_of_dimension(1, true)) {
    const auto& vs = E.vertices();
    svg.line(sq.px(vs.front().x), sq.py(vs.front().y), sq.px(vs.back().x), sq.py(vs.back().y), kColorAdditive, 2.5,
             " class=\"additive-edge\"");
  }
  for (const auto& V : add.faces_of_dimension(0, true)) {
    const Point& v = V.vertices().front();
    svg.circle(sq.px(v.x), sq.py(v.y), size * 0.006, kColorAdditive, kColorAdditive,
               " class=\"additive-vertex\"" + point_attr(v));
  }
  draw_border_functions(svg, sq, pi);
  return svg.str();
}

std::vector<std::string> plot_covered_steps(const PiecewiseFunction& pi, int size) {
  CoveredComponentSet final_cs = generate_covered_components(pi);
  CoveredComponentSet phase_one = directly_covered_components(pi, generate_additive_faces(pi));
  std::vector<std::pair<Interval, size_t>> covered;
  for (const auto& c : phase_one.components)
    for (const auto& p : c.parts()) covered.emplace_back(p, component_of(final_cs, p).value_or(0));

  auto frame = [&](const EdgeMove* move) {
    Svg svg(size, size * 0.8);
    GraphBox g = graph_box({&pi}, size * 0.08, size * 0.05, size * 0.86, size * 0.55);
    draw_axes(svg, g);
    draw_graph(svg, pi, g, false, 1.5, kColorFunction, "piece");
    const double base = g.y0 + g.h + size * 0.05;
    for (const auto& [iv, c] : covered)
      svg.line(g.px(iv.lo), base, g.px(iv.hi), base, interval_color(c), 6,
               " class=\"covered\" data-component=\"" + std::to_string(c) + "\"");
    for (const auto& u : final_cs.uncovered)
      svg.line(g.px(u.lo), base + 12, g.px(u.hi), base + 12, kColorViolated, 3, " class=\"uncovered\"");
    if (move) {
      const double y = base + 24;
      svg.line(g.px(move->from.lo), y, g.px(move->from.hi), y, "black", 3, " stroke-dasharray=\"4 2\" class=\"from\"");
      svg.line(g.px(move->to.lo), y, g.px(move->to.hi), y, "black", 3, " class=\"to\"");
      svg.text(g.x0, y + 24,
               std::string(move->kind == MoveKind::translation ? "translation" : "reflection") + " along " +
                   move->edge.str());
    } else {
      svg.text(g.x0, base + 36, "phase one: directly covered intervals");
    }
    return svg.str();
  };

  std::vector<std::string> frames{frame(nullptr)};
  for (const auto& m : final_cs.edges_used) {
    covered.emplace_back(m.to, component_of(final_cs, m.to).value_or(0));
    frames.push_back(frame(&m));
  }
  return frames;
}

std::string plot_perturbation(const PiecewiseFunction& pi, int size) {
  ExtremalityReport rep = extremality_test(pi);
  if (!rep.perturbation) {
    if (rep.is_extreme) throw std::invalid_argument("pi is extreme; there is no perturbation to plot");
    if (!rep.is_minimal) throw std::invalid_argument("pi is not minimal");
    throw std::invalid_argument("perturbation unavailable: uncovered case");
  }
  const Rational& eps = rep.perturbation->epsilon;
  PiecewiseFunction plus = pi + eps * rep.perturbation->perturbation;
  PiecewiseFunction minus = pi - eps * rep.perturbation->perturbation;
  Svg svg(size, size * 0.75);
  GraphBox g = graph_box({&pi, &plus, &minus}, size * 0.08, size * 0.05, size * 0.86, size * 0.6);
  draw_axes(svg, g);
  draw_graph(svg, plus, g, false, 1.5, kColorFunction, "plus");
  draw_graph(svg, minus, g, false, 1.5, kColorViolated, "minus");
  draw_graph(svg, pi, g, false, 2, "black", "pi");
  svg.text(g.x0, g.y0 + g.h + 30, "epsilon = " + eps.str());
  return svg.str();
}

std::vector<std::string> render(const PiecewiseFunction& pi, const DiagramSpec& spec) {
  if (spec.size < 100 || spec.size > 10000) throw std::invalid_argument("size must be between 100 and 10000");
  switch (spec.kind) {
    case PlotKind::function: return {plot_function(pi, spec.colored_slopes, spec.size)};
    case PlotKind::cones: return {plot_2d_diagram_with_cones(pi, spec.size)};
    case PlotKind::additive_faces: return {plot_2d_diagram(pi, spec.size)};
    case PlotKind::covered_steps: return plot_covered_steps(pi, spec.size);
    default: return {plot_perturbation(pi, spec.size)};
  }
}

}  // namespace cgf
