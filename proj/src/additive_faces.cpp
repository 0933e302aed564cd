#include "cgf/complex2d.hpp"
#include "cgf/minimality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cgf {

namespace {

struct Grid {
  std::vector<Interval> I;  // intervals of [0,1]
  std::vector<Interval> K;  // intervals of [0,2]

  explicit Grid(const std::vector<Rational>& bkpt) {
    for (size_t i = 0; i + 1 < bkpt.size(); ++i) I.emplace_back(bkpt[i], bkpt[i + 1]);
    auto b2 = doubled_breakpoints(bkpt);
    for (size_t i = 0; i + 1 < b2.size(); ++i) K.emplace_back(b2[i], b2[i + 1]);
  }

  // Indices of the intervals that contain t (one, or two at a breakpoint).
  static std::vector<size_t> containing(const std::vector<Interval>& ivs, const Rational& t) {
    std::vector<size_t> out;
    for (size_t i = 0; i < ivs.size(); ++i)
      if (ivs[i].contains(t)) out.push_back(i);
    return out;
  }

  std::optional<Face> face2d(long i, long j, long k) const {
    if (i < 0 || j < 0 || k < 0 || i >= (long)I.size() || j >= (long)I.size() || k >= (long)K.size())
      return std::nullopt;
    Face F = Face::from_triple(I[i], I[j], K[k]);
    if (F.dimension() != 2) return std::nullopt;
    return F;
  }
};

bool all_vertices_additive(const PiecewiseFunction& pi, const Face& F) {
  return std::all_of(F.vertices().begin(), F.vertices().end(),
                     [&](const Point& v) { return delta_pi(pi, v.x, v.y) == 0; });
}

// Two vertices of a 2-face span one of its edges iff they lie on a common boundary line.
bool spans_edge(const Face& F, const Point& a, const Point& b) {
  if (a.x == b.x) return a.x == F.proj(0).lo || a.x == F.proj(0).hi;
  if (a.y == b.y) return a.y == F.proj(1).lo || a.y == F.proj(1).hi;
  Rational s = a.x + a.y;
  if (s == b.x + b.y) return s == F.proj(2).lo || s == F.proj(2).hi;
  return false;
}

class Recorder {
 public:
  void record(const Face& F) {
    if (seen_.insert(F.vertices()).second) {
      faces_.push_back(F);
      for (const auto& v : F.vertices()) vertices_.insert(v);
    }
  }
  void record_with_mirror(const Face& F) {
    record(F);
    record(F.swapped());
  }
  bool is_recorded_vertex(const Point& v) const { return vertices_.count(v) > 0; }
  std::vector<Face> take() { return std::move(faces_); }

 private:
  std::set<std::vector<Point>> seen_;
  std::set<Point> vertices_;
  std::vector<Face> faces_;
};

}  // namespace

AdditiveFaceSet generate_maximal_additive_faces_continuous(const PiecewiseFunction& pi) {
  if (!pi.is_continuous()) throw std::invalid_argument("function is not continuous");
  const auto& bkpt = pi.end_points();
  for (const auto& v : enumerate_complex_vertices(bkpt, true))
    if (delta_pi(pi, v.x, v.y) < 0)
      throw std::invalid_argument("function is not subadditive at (" + v.x.str() + ", " + v.y.str() + ")");

  const Grid g(bkpt);
  Recorder rec;
  const long n = static_cast<long>(g.I.size());
  for (long i = 0; i < n; ++i) {
    for (long j = i; j < n; ++j) {
      Interval sum(g.I[i].lo + g.I[j].lo, g.I[i].hi + g.I[j].hi);
      for (long k = 0; k < (long)g.K.size(); ++k) {
        // fast path: int(I+J) must meet int(K)
        if (!(sum.lo < g.K[k].hi && g.K[k].lo < sum.hi)) continue;
        Face F = Face::from_triple(g.I[i], g.I[j], g.K[k]);
        std::vector<Point> add;
        for (const auto& v : F.vertices())
          if (delta_pi(pi, v.x, v.y) == 0) add.push_back(v);

        if (add.size() > 2) {
          rec.record_with_mirror(F);
        } else if (add.size() == 2) {
          if (!spans_edge(F, add[0], add[1])) continue;
          // the other 2-face across the edge
          long ni = i, nj = j, nk = k;
          const Point& a = add[0];
          if (a.x == add[1].x) ni += a.x == g.I[i].lo ? -1 : 1;
          else if (a.y == add[1].y) nj += a.y == g.I[j].lo ? -1 : 1;
          else nk += a.x + a.y == g.K[k].lo ? -1 : 1;
          auto other = g.face2d(ni, nj, nk);
          if (other && all_vertices_additive(pi, *other)) continue;
          rec.record_with_mirror(Face::from_vertices(add));
        } else if (add.size() == 1) {
          const Point v = add[0];
          if (rec.is_recorded_vertex(v)) continue;
          // Every 2-face around v must have no additive neighbour of v along an edge.
          bool isolated = true;
          for (size_t a : Grid::containing(g.I, v.x))
            for (size_t b : Grid::containing(g.I, v.y))
              for (size_t c : Grid::containing(g.K, v.x + v.y)) {
                auto G = g.face2d(a, b, c);
                if (!G || !G->contains(v)) continue;
                for (const auto& w : G->vertices())
                  if (!(w == v) && spans_edge(*G, v, w) && delta_pi(pi, w.x, w.y) == 0) isolated = false;
              }
          if (isolated) rec.record_with_mirror(Face::from_vertices({v}));
        }
      }
    }
  }
  AdditiveFaceSet out;
  out.faces = rec.take();
  out.maximal.assign(out.faces.size(), true);
  return out;
}

AdditiveFaceSet generate_additive_faces_discontinuous(const PiecewiseFunction& pi) {
  AdditiveFaceSet out;
  for (const auto& F : enumerate_faces(pi.end_points()))
    if (is_additive_face(pi, F)) out.faces.push_back(F);
  out.maximal.assign(out.faces.size(), true);
  for (size_t a = 0; a < out.faces.size(); ++a)
    for (size_t b = 0; b < out.faces.size() && out.maximal[a]; ++b) {
      const Face& A = out.faces[a];
      const Face& B = out.faces[b];
      if (a == b || B.dimension() <= A.dimension()) continue;
      if (std::all_of(A.vertices().begin(), A.vertices().end(), [&](const Point& v) { return B.contains(v); }))
        out.maximal[a] = false;
    }
  return out;
}

AdditiveFaceSet generate_additive_faces(const PiecewiseFunction& pi) {
  return pi.is_continuous() ? generate_maximal_additive_faces_continuous(pi) : generate_additive_faces_discontinuous(pi);
}

namespace {

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Vertices come lexicographically sorted; monotone chain gives the boundary order.
Rational polygon_area(const std::vector<Point>& pts) {
  if (pts.size() < 3) return 0;
  std::vector<Point> hull;
  for (int pass = 0; pass < 2; ++pass) {
    size_t base = hull.size();
    for (size_t t = 0; t < pts.size(); ++t) {
      const Point& p = pass == 0 ? pts[t] : pts[pts.size() - 1 - t];
      while (hull.size() >= base + 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
  }
  Rational twice = 0;
  for (size_t t = 0; t < hull.size(); ++t) {
    const Point& p = hull[t];
    const Point& q = hull[(t + 1) % hull.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice.abs() / 2;
}

}  // namespace

Rational merit_index(const PiecewiseFunction& pi) {
  if (!minimality_test(pi).is_minimal) throw std::invalid_argument("merit index requires a minimal valid function");
  const Grid g(pi.end_points());
  Rational area = 0;
  for (const auto& a : g.I)
    for (const auto& b : g.I)
      for (const auto& k : g.K) {
        if (!(a.lo + b.lo < k.hi && k.lo < a.hi + b.hi)) continue;
        Face F = Face::from_triple(a, b, k);
        if (F.dimension() == 2 && is_additive_face(pi, F)) area += polygon_area(F.vertices());
      }
  return 2 * area;
}

}  // namespace cgf
