#include "cgf/compendium.hpp"
#include "cgf/complex2d.hpp"
#include "cgf/minimality.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

using namespace cgf;
using oracle::R;

namespace {

std::set<std::vector<Point>> library_maximal(const PiecewiseFunction& pi) {
  std::set<std::vector<Point>> out;
  for (const auto& F : generate_additive_faces(pi).maximal_faces()) out.insert(F.vertices());
  return out;
}

std::vector<PiecewiseFunction> small_functions() {
  std::vector<PiecewiseFunction> fns;
  auto cont = oracle::random_subadditive(13, 7, 1, 500);
  auto disc = oracle::random_subadditive(12, 7, R(1, 2), 900);
  fns.insert(fns.end(), cont.begin(), cont.end());
  fns.insert(fns.end(), disc.begin(), disc.end());
  return fns;
}

}  // namespace

TEST_CASE("subadditivity slack examples") {
  auto nm = PiecewiseFunction::from_breakpoints_and_values({0, R(1, 5), R(3, 5), R(4, 5), 1},
                                                           {0, R(1, 5), R(4, 5), 1, 0});
  CHECK(delta_pi(nm, R(1, 5), R(3, 5)) == 0);
  auto g = gmic(R(4, 5));
  CHECK(delta_pi(g, R(2, 5), R(2, 5)) == 0);
  auto e = equiv5_random_discont_1();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Rational y = oracle::random_rational(rng);
    CHECK(delta_pi(e, 0, y) == e(0));
  }
}

TEST_CASE("delta pi is symmetric on 1000 random rational pairs") {
  std::mt19937_64 rng(2024);
  std::vector<PiecewiseFunction> fns = {gmic(R(4, 5)), equiv5_random_discont_1(), hildebrand_discont_3_slope_1()};
  for (int i = 0; i < 1000; ++i) {
    const auto& pi = fns[i % fns.size()];
    Rational x = oracle::random_rational(rng), y = oracle::random_rational(rng);
    CHECK(delta_pi(pi, x, y) == delta_pi(pi, y, x));
    CHECK(delta_pi(pi, x, y) == oracle::delta(pi, x, y));
  }
}

TEST_CASE("face construction from a triple") {
  auto F = Face::from_triple({R(1, 5), R(3, 10)}, {R(3, 4), R(17, 20)}, {1, R(6, 5)});
  std::set<Point> expected = {{R(1, 5), R(17, 20)}, {R(3, 10), R(3, 4)}, {R(3, 10), R(17, 20)},
                              {R(1, 5), R(4, 5)},   {R(1, 4), R(3, 4)}};
  CHECK(std::set<Point>(F.vertices().begin(), F.vertices().end()) == expected);
  CHECK(F.proj(0) == Interval(R(1, 5), R(3, 10)));
  CHECK(F.proj(1) == Interval(R(3, 4), R(17, 20)));
  CHECK(F.proj(2) == Interval(1, R(23, 20)));
  CHECK(F.dimension() == 2);

  auto P = Face::from_triple(Interval::point(0), Interval::point(0), Interval::point(0));
  CHECK(P.vertices() == std::vector<Point>{{0, 0}});
  CHECK(P.dimension() == 0);

  auto E = Face::from_triple({0, R(1, 5)}, {0, R(1, 5)}, {R(3, 5), R(4, 5)});
  CHECK(E.empty());
}

TEST_CASE("face vertices agree with the basic-solution oracle") {
  std::mt19937_64 rng(17);
  auto grid = [&] { return Rational(std::uniform_int_distribution<long>(0, 10)(rng), 10); };
  for (int t = 0; t < 400; ++t) {
    Rational a = grid(), b = grid(), c = grid(), d = grid();
    Rational k0 = Rational(std::uniform_int_distribution<long>(0, 20)(rng), 10);
    Rational k1 = min(k0 + Rational(std::uniform_int_distribution<long>(0, 3)(rng), 10), Rational(2));
    Interval I(min(a, b), max(a, b)), J(min(c, d), max(c, d)), K(k0, k1);
    auto F = Face::from_triple(I, J, K);
    auto expected = oracle::face_vertices(I, J, K);
    CHECK(F.vertices() == expected);
    if (F.empty()) continue;
    CHECK(K.contains(F.proj(2).lo));
    CHECK(K.contains(F.proj(2).hi));
    for (const auto& v : F.vertices()) {
      CHECK(I.contains(v.x));
      CHECK(J.contains(v.y));
      CHECK(K.contains(v.x + v.y));
      CHECK(F.contains(v));
    }
  }
}

TEST_CASE("limits of delta pi at a vertex from a containing face") {
  auto pi = equiv5_random_discont_1();
  Point v{R(2, 5), R(4, 5)};
  auto F = Face::from_triple({R(1, 5), R(2, 5)}, {R(4, 5), 1}, {1, R(6, 5)});
  auto Fp = Face::from_triple({R(1, 5), R(2, 5)}, Interval::point(R(4, 5)), {1, R(6, 5)});
  CHECK(delta_pi_limit(pi, F, v) == 0);
  CHECK(delta_pi_limit(pi, Fp, v) == R(-2, 5));
  CHECK(Fp.edge_kind() == EdgeKind::horizontal);
  // Independent: extrapolate the affine slack from the face interior.
  CHECK(oracle::limit_from_relint(pi, F.vertices(), v) == 0);
  CHECK(oracle::limit_from_relint(pi, Fp.vertices(), v) == R(-2, 5));

  auto g = gmic(R(4, 5));
  for (const auto& H : enumerate_faces(g.end_points()))
    for (const auto& w : H.vertices()) CHECK(delta_pi_limit(g, H, w) == delta_pi(g, w.x, w.y));
}

TEST_CASE("limits from every face agree with the interior extrapolation oracle") {
  for (const auto& pi : {equiv5_random_discont_1(), hildebrand_discont_3_slope_1()})
    for (const auto& F : enumerate_faces(pi.end_points()))
      for (const auto& v : F.vertices()) CHECK(delta_pi_limit(pi, F, v) == oracle::limit_from_relint(pi, F.vertices(), v));
}

TEST_CASE("vertex enumeration") {
  auto g = gmic(R(4, 5));
  auto vs = enumerate_complex_vertices(g);
  std::set<Point> s(vs.begin(), vs.end());
  CHECK(s.count(Point{R(4, 5), R(4, 5)}) == 1);
  // (2/5, 2/5) lies on the diagonal x + y = 4/5 only, so it is not a vertex.
  CHECK(s.count(Point{R(2, 5), R(2, 5)}) == 0);
  CHECK(s.count(Point{R(4, 5), 0}) == 1);
  CHECK(s.count(Point{R(4, 5), 1}) == 1);
  auto z = enumerate_complex_vertices(std::vector<Rational>{0, 1});
  CHECK(std::set<Point>(z.begin(), z.end()) == std::set<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  std::vector<Rational> fifths = {0, R(1, 5), R(2, 5), R(3, 5), R(4, 5), 1};
  auto f5 = enumerate_complex_vertices(fifths);
  CHECK(std::set<Point>(f5.begin(), f5.end()) == oracle::arrangement_vertices(fifths));
  for (const auto& pi : small_functions()) {
    auto v = enumerate_complex_vertices(pi);
    CHECK(std::set<Point>(v.begin(), v.end()) == oracle::arrangement_vertices(pi.end_points()));
    auto up = enumerate_complex_vertices(pi, true);
    for (const auto& p : up) CHECK(p.x <= p.y);
  }
}

TEST_CASE("delta pi is affine on the relative interior of each face") {
  std::mt19937_64 rng(31);
  for (const auto& pi : {gmic(R(4, 5)), equiv5_random_discont_1(), hildebrand_discont_3_slope_1()})
    for (const auto& F : enumerate_faces(pi.end_points())) {
      if (F.dimension() == 0) continue;
      Rational cx = 0, cy = 0;
      for (const auto& p : F.vertices()) { cx += p.x; cy += p.y; }
      cx /= Rational(static_cast<long>(F.vertices().size()));
      cy /= Rational(static_cast<long>(F.vertices().size()));
      const Point& v = F.vertices()[rng() % F.vertices().size()];
      // Three collinear points strictly between the centroid and a vertex.
      auto at = [&](const Rational& t) { return delta_pi(pi, cx + t * (v.x - cx), cy + t * (v.y - cy)); };
      Rational a = at(R(1, 4)), b = at(R(1, 2)), c = at(R(3, 4));
      CHECK(b - a == c - b);
    }
}

TEST_CASE("maximal additive faces of gmic and the zero function") {
  auto g = gmic(R(4, 5));
  auto faces = generate_maximal_additive_faces_continuous(g).maximal_faces();
  auto lower = Face::from_triple({0, R(4, 5)}, {0, R(4, 5)}, {0, R(4, 5)});
  bool found = false;
  for (const auto& F : faces) found = found || F == lower;
  CHECK(found);
  for (const auto& F : faces)
    for (const auto& G : faces)
      if (!(F == G)) {
        bool contained = true;
        for (const auto& v : F.vertices()) contained = contained && G.contains(v);
        CHECK_FALSE(contained);
      }
  CHECK(library_maximal(g) == oracle::maximal_additive_faces(g));

  auto z = PiecewiseFunction::from_breakpoints_and_values({0, 1}, {0, 0});
  auto zf = generate_additive_faces(z).maximal_faces();
  for (const auto& F : zf) CHECK(F.dimension() == 2);
  CHECK(library_maximal(z) == oracle::maximal_additive_faces(z));
  CHECK_THROWS_AS(merit_index(z), std::invalid_argument);
}

TEST_CASE("appendix enumeration equals the brute-force maximal-face oracle") {
  std::vector<PiecewiseFunction> fns = small_functions();
  for (const auto& e : compendium_entries()) {
    if (e.status == EntryStatus::unsourced) continue;
    auto pi = construct(e.name);
    bool sub = true;
    for (const auto& v : minimality_test(pi).violations) sub = sub && v.kind != ViolationKind::subadditivity;
    if (sub) fns.push_back(pi);
  }
  for (const auto& pi : fns) {
    INFO("breakpoints: " << pi.end_points().size());
    CHECK(library_maximal(pi) == oracle::maximal_additive_faces(pi));
  }
}

TEST_CASE("continuous dispatch agrees with the discontinuous enumeration") {
  for (const auto& pi : oracle::random_subadditive(10, 7, 1, 40)) {
    std::set<std::vector<Point>> a, b;
    for (const auto& F : generate_maximal_additive_faces_continuous(pi).maximal_faces()) a.insert(F.vertices());
    for (const auto& F : generate_additive_faces_discontinuous(pi).maximal_faces()) b.insert(F.vertices());
    CHECK(a == b);
  }
}

TEST_CASE("subface closure of additive 2-faces") {
  for (const auto& pi : {gmic(R(4, 5)), gmic(R(1, 5)), gj_2_slope(R(3, 5), R(1, 3))}) {
    for (const auto& F : generate_additive_faces(pi).faces_of_dimension(2, true))
      for (const auto& G : enumerate_faces(pi.end_points())) {
        bool sub = true;
        for (const auto& v : G.vertices()) sub = sub && F.contains(v);
        if (sub) CHECK(is_additive_face(pi, G));
      }
  }
}

TEST_CASE("additive faces of discontinuous functions") {
  auto h = hildebrand_discont_3_slope_1();
  auto edge = Face::from_triple(Interval::point(R(3, 8)), {R(1, 8), R(1, 4)}, {R(1, 2), R(5, 8)});
  CHECK(edge.edge_kind() == EdgeKind::vertical);
  auto faces = generate_additive_faces(h);
  bool found = false;
  for (const auto& F : faces.faces) found = found || F == edge;
  CHECK(found);

  auto e = equiv5_random_discont_1();
  Point v{R(2, 5), R(4, 5)};
  CHECK(delta_pi(e, v.x, v.y) == 0);
  bool vertex_additive = false;
  for (const auto& F : generate_additive_faces(e).faces) vertex_additive = vertex_additive || F.contains(v);
  CHECK(vertex_additive);
}

TEST_CASE("merit index") {
  CHECK(merit_index(gmic(R(4, 5))) == R(17, 25));
  CHECK(merit_index(gmic(R(1, 2))) == R(1, 2));
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    Rational f = oracle::random_unit(rng);
    CHECK(merit_index(gmic(f)) == 2 * f * f - 2 * f + 1);
  }
}
