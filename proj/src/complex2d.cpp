#include "cgf/complex2d.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cgf {

const std::array<Eps, 13> kAllEps = {{
    {0, 0, 0},
    {-1, -1, -1}, {-1, 1, -1}, {-1, 1, 1}, {-1, 1, 0}, {-1, 0, -1},
    {1, -1, -1}, {1, -1, 1}, {1, -1, 0}, {1, 1, 1}, {1, 0, 1},
    {0, -1, -1}, {0, 1, 1},
}};

const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::horizontal: return "horizontal";
    case EdgeKind::vertical: return "vertical";
    case EdgeKind::diagonal: return "diagonal";
    default: return "none";
  }
}

namespace {

void finish_projections(std::vector<Point>& verts, std::array<Interval, 3>& proj) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.empty()) return;
  Rational lo[3] = {verts[0].x, verts[0].y, verts[0].x + verts[0].y};
  Rational hi[3] = {lo[0], lo[1], lo[2]};
  for (const auto& v : verts) {
    Rational c[3] = {v.x, v.y, v.x + v.y};
    for (int i = 0; i < 3; ++i) {
      lo[i] = min(lo[i], c[i]);
      hi[i] = max(hi[i], c[i]);
    }
  }
  for (int i = 0; i < 3; ++i) proj[i] = Interval(lo[i], hi[i]);
}

}  // namespace

Face Face::from_triple(const Interval& I, const Interval& J, const Interval& K) {
  if (I.lo < 0 || I.hi > 1 || J.lo < 0 || J.hi > 1 || K.lo < 0 || K.hi > 2)
    throw std::invalid_argument("face intervals must satisfy I, J in [0,1] and K in [0,2]");
  Face F;
  F.I_ = I;
  F.J_ = J;
  F.K_ = K;
  const Rational is[2] = {I.lo, I.hi}, js[2] = {J.lo, J.hi}, ks[2] = {K.lo, K.hi};
  for (const auto& x : is)
    for (const auto& y : js)
      if (K.contains(x + y)) F.vertices_.push_back({x, y});
  for (const auto& x : is)
    for (const auto& z : ks)
      if (J.contains(z - x)) F.vertices_.push_back({x, z - x});
  for (const auto& y : js)
    for (const auto& z : ks)
      if (I.contains(z - y)) F.vertices_.push_back({z - y, y});
  finish_projections(F.vertices_, F.proj_);
  return F;
}

Face Face::from_vertices(std::vector<Point> vertices) {
  if (vertices.empty()) throw std::invalid_argument("face needs at least one vertex");
  Face F;
  finish_projections(vertices, F.proj_);
  F.vertices_ = std::move(vertices);
  F.I_ = F.proj_[0];
  F.J_ = F.proj_[1];
  F.K_ = F.proj_[2];
  return F;
}

int Face::dimension() const {
  if (vertices_.empty()) return -1;
  if (vertices_.size() == 1) return 0;
  if (vertices_.size() == 2) return 1;
  return 2;
}

EdgeKind Face::edge_kind() const {
  if (dimension() != 1) return EdgeKind::none;
  if (proj_[0].is_point()) return EdgeKind::vertical;
  if (proj_[1].is_point()) return EdgeKind::horizontal;
  return EdgeKind::diagonal;
}

bool Face::contains(const Point& v) const {
  if (empty()) return false;
  return proj_[0].contains(v.x) && proj_[1].contains(v.y) && proj_[2].contains(v.x + v.y);
}

Face Face::swapped() const {
  std::vector<Point> sw;
  for (const auto& v : vertices_) sw.push_back({v.y, v.x});
  Face F = from_vertices(std::move(sw));
  F.I_ = J_;
  F.J_ = I_;
  F.K_ = K_;
  return F;
}

std::string Face::str() const {
  if (empty()) return "F(empty)";
  return "F(" + proj_[0].str() + ", " + proj_[1].str() + ", " + proj_[2].str() + ")";
}

Rational delta_pi(const PiecewiseFunction& pi, const Rational& x, const Rational& y) {
  return pi(x) + pi(y) - pi(x + y);
}

Rational delta_pi_eps(const PiecewiseFunction& pi, const Rational& x, const Rational& y, const Eps& e) {
  return pi.limit(x, e.x) + pi.limit(y, e.y) - pi.limit(x + y, e.z);
}

Eps inward_eps(const Face& F, const Point& v) {
  if (!F.contains(v)) throw std::invalid_argument("vertex is not in " + F.str());
  auto side = [](const Interval& P, const Rational& c) {
    if (P.is_point()) return 0;
    if (c == P.lo) return 1;
    if (c == P.hi) return -1;
    return 0;
  };
  return {side(F.proj(0), v.x), side(F.proj(1), v.y), side(F.proj(2), v.x + v.y)};
}

Rational delta_pi_limit(const PiecewiseFunction& pi, const Face& F, const Point& v) {
  return delta_pi_eps(pi, v.x, v.y, inward_eps(F, v));
}

Face cone_face(const std::vector<Rational>& bkpt, const Point& v, const Eps& e) {
  Rational x = v.x, y = v.y;
  if (e.x < 0 && x == 0) x = 1;
  if (e.x > 0 && x == 1) x = 0;
  if (e.y < 0 && y == 0) y = 1;
  if (e.y > 0 && y == 1) y = 0;
  auto side = [](const std::vector<Rational>& b, const Rational& t, int s) {
    if (s == 0) return Interval::point(t);
    auto it = std::lower_bound(b.begin(), b.end(), t);
    if (it != b.end() && *it == t) return s > 0 ? Interval(t, *(it + 1)) : Interval(*(it - 1), t);
    return Interval(*(it - 1), *it);
  };
  auto b2 = doubled_breakpoints(bkpt);
  return Face::from_triple(side(bkpt, x, e.x), side(bkpt, y, e.y), side(b2, x + y, e.z));
}

std::vector<Rational> doubled_breakpoints(const std::vector<Rational>& bkpt) {
  std::vector<Rational> b2(bkpt.begin(), bkpt.end() - 1);
  for (const auto& b : bkpt) b2.push_back(b + 1);
  return b2;
}

std::vector<Point> enumerate_complex_vertices(const std::vector<Rational>& bkpt, bool upper_triangle) {
  std::set<Point> pts;
  auto in01 = [](const Rational& t) { return t >= 0 && t <= 1; };
  for (const auto& a : bkpt)
    for (const auto& b : bkpt) pts.insert({a, b});
  for (const auto& c : doubled_breakpoints(bkpt))
    for (const auto& a : bkpt) {
      if (in01(c - a)) {
        pts.insert({a, c - a});
        pts.insert({c - a, a});
      }
    }
  std::vector<Point> out;
  for (const auto& p : pts)
    if (!upper_triangle || p.x <= p.y) out.push_back(p);
  return out;
}

std::vector<Point> enumerate_complex_vertices(const PiecewiseFunction& pi, bool upper_triangle) {
  return enumerate_complex_vertices(pi.end_points(), upper_triangle);
}

namespace {

std::vector<Interval> intervals_of(const std::vector<Rational>& b) {
  std::vector<Interval> out;
  for (size_t i = 0; i + 1 < b.size(); ++i) out.emplace_back(b[i], b[i + 1]);
  return out;
}

bool interiors_meet(const Interval& a, const Interval& b) { return a.lo < b.hi && b.lo < a.hi; }

}  // namespace

std::vector<Face> enumerate_2d_faces_upper(const std::vector<Rational>& bkpt) {
  auto I = intervals_of(bkpt);
  auto K = intervals_of(doubled_breakpoints(bkpt));
  std::vector<Face> out;
  for (size_t i = 0; i < I.size(); ++i)
    for (size_t j = i; j < I.size(); ++j) {
      Interval sum(I[i].lo + I[j].lo, I[i].hi + I[j].hi);
      for (const auto& k : K)
        if (interiors_meet(sum, k)) out.push_back(Face::from_triple(I[i], I[j], k));
    }
  return out;
}

std::vector<Face> enumerate_faces(const std::vector<Rational>& bkpt) {
  auto I = intervals_of(bkpt);
  auto b2 = doubled_breakpoints(bkpt);
  auto K = intervals_of(b2);
  std::set<Face> faces;
  for (const auto& a : I)
    for (const auto& b : I) {
      Interval sum(a.lo + b.lo, a.hi + b.hi);
      for (const auto& k : K)
        if (interiors_meet(sum, k)) faces.insert(Face::from_triple(a, b, k));
      for (const auto& c : b2)
        if (sum.interior_contains(c)) faces.insert(Face::from_triple(a, b, Interval::point(c)));
    }
  for (const auto& x : bkpt)
    for (const auto& b : I)
      for (const auto& k : K) {
        if (interiors_meet(Interval(x + b.lo, x + b.hi), k)) {
          faces.insert(Face::from_triple(Interval::point(x), b, k));
          faces.insert(Face::from_triple(b, Interval::point(x), k));
        }
      }
  for (const auto& v : enumerate_complex_vertices(bkpt))
    faces.insert(Face::from_triple(Interval::point(v.x), Interval::point(v.y), Interval::point(v.x + v.y)));
  return {faces.begin(), faces.end()};
}

bool is_additive_face(const PiecewiseFunction& pi, const Face& F) {
  const int d = F.dimension();
  if (d == 2) {
    for (const auto& v : F.vertices())
      if (delta_pi_limit(pi, F, v) != 0) return false;
    return true;
  }
  if (d == 1) {
    // the face itself or one of the two 2-faces on either side of it
    for (int side : {0, 1, -1}) {
      bool ok = true;
      for (const auto& v : F.vertices()) {
        Eps e = inward_eps(F, v);
        if (F.proj(0).is_point()) e.x = side;
        else if (F.proj(1).is_point()) e.y = side;
        else e.z = side;
        if (delta_pi_eps(pi, v.x, v.y, e) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  }
  if (d == 0) {
    const Point& v = F.vertices().front();
    return std::any_of(kAllEps.begin(), kAllEps.end(),
                       [&](const Eps& e) { return delta_pi_eps(pi, v.x, v.y, e) == 0; });
  }
  return false;
}

std::vector<Face> AdditiveFaceSet::maximal_faces() const {
  std::vector<Face> out;
  for (size_t i = 0; i < faces.size(); ++i)
    if (maximal[i]) out.push_back(faces[i]);
  return out;
}

std::vector<Face> AdditiveFaceSet::faces_of_dimension(int d, bool only_maximal) const {
  std::vector<Face> out;
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dimension() == d && (!only_maximal || maximal[i])) out.push_back(faces[i]);
  return out;
}

}  // namespace cgf
