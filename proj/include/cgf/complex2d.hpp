#pragma once

#include "cgf/interval.hpp"
#include "cgf/pwl.hpp"

#include <array>
#include <string>
#include <vector>

namespace cgf {

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

// Approach directions for x, y and x+y: each of -1, 0, +1.
struct Eps {
  int x = 0, y = 0, z = 0;
  friend bool operator==(const Eps&, const Eps&) = default;
};

// (0,0,0) followed by the twelve cones and rays around a vertex.
extern const std::array<Eps, 13> kAllEps;

enum class EdgeKind { none, horizontal, vertical, diagonal };
const char* edge_kind_name(EdgeKind k);

// F(I,J,K) = {(x,y) : x in I, y in J, x+y in K}.
class Face {
 public:
  static Face from_triple(const Interval& I, const Interval& J, const Interval& K);
  static Face from_vertices(std::vector<Point> vertices);

  const Interval& I() const { return I_; }
  const Interval& J() const { return J_; }
  const Interval& K() const { return K_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  // Projections p1, p2, p3 (only meaningful when non-empty).
  const Interval& proj(int i) const { return proj_[i]; }
  bool empty() const { return vertices_.empty(); }
  int dimension() const;
  EdgeKind edge_kind() const;
  bool contains(const Point& v) const;
  Face swapped() const;
  std::string str() const;

  // Faces are identified by their point sets; ordered by projections.
  friend bool operator==(const Face& a, const Face& b) { return a.vertices_ == b.vertices_; }
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    for (int i = 0; i < 3; ++i)
      if (auto c = a.proj_[i] <=> b.proj_[i]; c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }

 private:
  Interval I_, J_, K_;
  std::vector<Point> vertices_;
  std::array<Interval, 3> proj_;
};

Rational delta_pi(const PiecewiseFunction& pi, const Rational& x, const Rational& y);
Rational delta_pi_eps(const PiecewiseFunction& pi, const Rational& x, const Rational& y, const Eps& e);
// Direction pointing from v into the relative interior of F.
Eps inward_eps(const Face& F, const Point& v);
Rational delta_pi_limit(const PiecewiseFunction& pi, const Face& F, const Point& v);
// Smallest face of the complex entered from v in direction e, translated into [0,1]^2.
Face cone_face(const std::vector<Rational>& bkpt, const Point& v, const Eps& e);

// Breakpoints of pi and of pi shifted by one, covering [0,2].
std::vector<Rational> doubled_breakpoints(const std::vector<Rational>& bkpt);
std::vector<Point> enumerate_complex_vertices(const std::vector<Rational>& bkpt, bool upper_triangle = false);
std::vector<Point> enumerate_complex_vertices(const PiecewiseFunction& pi, bool upper_triangle = false);

// All non-empty faces of the complex inside [0,1]^2, sorted.
std::vector<Face> enumerate_faces(const std::vector<Rational>& bkpt);
// The two-dimensional faces F(I,J,K) with I <= J, in lexicographic order.
std::vector<Face> enumerate_2d_faces_upper(const std::vector<Rational>& bkpt);

bool is_additive_face(const PiecewiseFunction& pi, const Face& F);

struct AdditiveFaceSet {
  std::vector<Face> faces;
  std::vector<bool> maximal;

  std::vector<Face> maximal_faces() const;
  std::vector<Face> faces_of_dimension(int d, bool only_maximal) const;
};

AdditiveFaceSet generate_maximal_additive_faces_continuous(const PiecewiseFunction& pi);
AdditiveFaceSet generate_additive_faces_discontinuous(const PiecewiseFunction& pi);
// Dispatches on continuity.
AdditiveFaceSet generate_additive_faces(const PiecewiseFunction& pi);
Rational merit_index(const PiecewiseFunction& pi);

}  // namespace cgf
