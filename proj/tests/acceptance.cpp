// One line per acceptance criterion; exit code is the number of failures.
#include "cgf/compendium.hpp"
#include "cgf/complex2d.hpp"
#include "cgf/covering.hpp"
#include "cgf/extremality.hpp"
#include "cgf/minimality.hpp"
#include "cgf/transforms.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace cgf;
using oracle::R;

namespace {

// Pinned tolerances: all comparisons are exact; only criterion 1 has a runtime bound.
constexpr double kGmicSeconds = 1.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool has_subadditivity_violation(const PiecewiseFunction& pi) {
  for (const auto& v : minimality_test(pi).violations)
    if (v.kind == ViolationKind::subadditivity) return true;
  return false;
}

std::set<std::vector<Point>> library_maximal(const PiecewiseFunction& pi) {
  std::set<std::vector<Point>> out;
  for (const auto& F : generate_additive_faces(pi).maximal_faces()) out.insert(F.vertices());
  return out;
}

Matrix permuted(const Matrix& m, std::mt19937_64& rng) {
  std::vector<Vec> rows = m.data();
  std::shuffle(rows.begin(), rows.end(), rng);
  Matrix out(m.cols());
  for (auto& r : rows) out.add_row(r);
  return out;
}

bool same_components(const std::vector<OpenIntervalSet>& a, const std::vector<OpenIntervalSet>& b) {
  return a.size() == b.size() && std::is_permutation(a.begin(), a.end(), b.begin());
}

void criterion1(Outcome& o) {
  auto start = std::chrono::steady_clock::now();
  auto g = gmic(R(4, 5));
  bool minimal = minimality_test(g).is_minimal;
  auto c = generate_covered_components(g);
  auto r = extremality_test(g);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(minimal, "minimal");
  o.expect(c.components.size() == 2, "two components");
  OpenIntervalSet all;
  Rational total;
  for (const auto& comp : c.components) {
    all.add(comp);
    total += comp.measure();
  }
  o.expect(c.uncovered.empty() && all.measure() == 1 && total == 1, "components tile [0,1]");
  o.expect(r.is_extreme && r.kernel_dimension == 0, "extreme with kernel dimension 0");
  o.expect(secs < kGmicSeconds, "runtime below 1 s");
  o.detail << " runtime " << secs << " s";
}

void criterion2(Outcome& o) { o.expect(extremality_test(gmic(R(1, 5))).is_extreme, "gmic(1/5) extreme"); }

void criterion3(Outcome& o) {
  auto pi = equiv5_random_discont_1();
  std::vector<LimitTriple> triples = {{0, 0, 0},         {1, 1, 1}, {R(2, 5), R(2, 5), 0}, {R(1, 2), R(3, 5), R(2, 5)},
                                      {R(3, 5), 1, R(3, 5)}, {0, 0, 0}};
  o.expect(pi.end_points() == std::vector<Rational>{0, R(1, 5), R(2, 5), R(3, 5), R(4, 5), 1}, "breakpoints");
  o.expect(pi.limits_list() == triples, "limit triples");
  Point v{R(2, 5), R(4, 5)};
  auto F = Face::from_triple({R(1, 5), R(2, 5)}, {R(4, 5), 1}, {1, R(6, 5)});
  auto E = Face::from_triple({R(1, 5), R(2, 5)}, Interval::point(R(4, 5)), {1, R(6, 5)});
  o.expect(delta_pi_limit(pi, F, v) == 0, "limit 0 from the 2-face");
  o.expect(E.edge_kind() == EdgeKind::horizontal && delta_pi_limit(pi, E, v) == R(-2, 5),
           "limit -2/5 from the horizontal edge");
  auto r = minimality_test(pi);
  bool witness = false;
  for (const auto& w : r.violations)
    witness = witness || (w.kind == ViolationKind::subadditivity && w.eps != Eps{0, 0, 0} && w.slack < 0);
  o.expect(!r.is_minimal && witness, "not minimal with a limit witness");
}

void criterion4(Outcome& o) {
  auto F = Face::from_triple({R(1, 5), R(3, 10)}, {R(3, 4), R(17, 20)}, {1, R(6, 5)});
  std::set<Point> expected = {{R(1, 5), R(17, 20)}, {R(3, 10), R(3, 4)}, {R(3, 10), R(17, 20)},
                              {R(1, 5), R(4, 5)},   {R(1, 4), R(3, 4)}};
  o.expect(std::set<Point>(F.vertices().begin(), F.vertices().end()) == expected, "five vertices");
  o.expect(F.proj(2) == Interval(1, R(23, 20)), "p3 = [1, 23/20]");
  o.expect(std::set<Point>(F.vertices().begin(), F.vertices().end()) ==
               [] {
                 auto v = oracle::face_vertices({R(1, 5), R(3, 10)}, {R(3, 4), R(17, 20)}, {1, R(6, 5)});
                 return std::set<Point>(v.begin(), v.end());
               }(),
           "basic-solution oracle");
}

void criterion5(Outcome& o) {
  std::mt19937_64 rng(2024);
  int n = 0;
  std::set<Rational> seen;
  while (n < 20) {
    Rational f = oracle::random_unit(rng);
    if (!seen.insert(f).second) continue;
    ++n;
    o.expect(merit_index(gmic(f)) == 2 * f * f - 2 * f + 1, "merit of gmic(" + f.str() + ")");
  }
  o.detail << " " << n << " values of f";
}

void criterion6(Outcome& o) {
  auto r = minimality_test(gomory_fractional(R(4, 5)));
  bool range = false;
  for (const auto& v : r.violations) range = range || v.kind == ViolationKind::range;
  o.expect(!r.is_minimal && range, "range violation");
}

void criterion7(Outcome& o) {
  auto d = restrict_to_finite_group(gmic(R(4, 5)));
  o.expect(d.points() == std::vector<Rational>{0, R(1, 5), R(2, 5), R(3, 5), R(4, 5), 1}, "points");
  o.expect(d.values() == std::vector<Rational>{0, R(1, 4), R(1, 2), R(3, 4), 1, 0}, "values");
  o.expect(extremality_test_discrete(d).is_extreme, "discrete extreme");
}

void criterion8(Outcome& o) {
  std::vector<PiecewiseFunction> fns = {gmic(R(4, 5))};
  const int ygrids[] = {3, 4, 6, 8};
  int found = 0;
  for (std::uint64_t s = 1; found < 10 && s < 5000; ++s) {
    RandomOptions opts;
    opts.xgrid = 5;
    opts.ygrid = ygrids[s % 4];
    opts.seed = s;
    auto pi = random_piecewise_function(opts);
    if (!minimality_test(pi, {std::nullopt, true}).is_minimal) continue;
    fns.push_back(pi);
    ++found;
  }
  o.expect(found == 10, "ten random minimal functions");
  int extreme = 0;
  for (const auto& pi : fns) {
    bool inf = extremality_test(pi).is_extreme;
    bool fin = extremality_test_discrete(restrict_to_finite_group(pi, {std::nullopt, 3, std::nullopt})).is_extreme;
    o.expect(inf == fin, "agreement");
    extreme += inf;
  }
  o.detail << " " << fns.size() << " functions, " << extreme << " extreme";
}

void criterion9(Outcome& o) {
  std::mt19937_64 rng(99);
  auto base = oracle::random_functions(10, 8, R(1, 2), 123);
  base.push_back(equiv5_random_discont_1());
  for (int i = 0; i < 1000; ++i) {
    const auto& pi = base[i % base.size()];
    Rational x = oracle::random_rational(rng), y = oracle::random_rational(rng);
    if (delta_pi(pi, x, y) != delta_pi(pi, y, x) || delta_pi(pi, x, y) != oracle::delta(pi, x, y)) {
      o.expect(false, "symmetry of delta pi");
      break;
    }
  }

  std::vector<PiecewiseFunction> fns;
  for (const auto& e : compendium_entries()) {
    if (e.status == EntryStatus::unsourced) continue;
    auto pi = construct(e.name);
    if (!has_subadditivity_violation(pi)) fns.push_back(pi);
  }
  size_t compendium = fns.size();
  auto cont = oracle::random_subadditive(13, 7, 1, 500);
  auto disc = oracle::random_subadditive(12, 7, R(1, 2), 900);
  fns.insert(fns.end(), cont.begin(), cont.end());
  fns.insert(fns.end(), disc.begin(), disc.end());
  for (const auto& pi : fns) o.expect(library_maximal(pi) == oracle::maximal_additive_faces(pi), "appendix oracle");
  o.detail << " faces: " << compendium << " compendium + " << fns.size() - compendium << " random;";

  int perturbed = 0;
  for (const auto& s : oracle::perturbable_seeds()) {
    auto pi = oracle::random_instance(s[0], s[1], s[2]);
    auto r = extremality_test(pi);
    if (r.is_extreme || !r.covered || !r.covered->uncovered.empty()) continue;
    if (!r.perturbation) {
      o.expect(false, "perturbation reported");
      continue;
    }
    const auto& p = *r.perturbation;
    auto plus = pi + p.epsilon * p.perturbation, minus = pi - p.epsilon * p.perturbation;
    o.expect(minimality_test(plus, {pi.f()}).is_minimal && minimality_test(minus, {pi.f()}).is_minimal,
             "pi +- eps pi~ minimal");
    o.expect(R(1, 2) * (plus + minus) == pi, "average is pi");
    ++perturbed;
  }
  o.expect(perturbed >= 10, "perturbed instances");
  o.detail << " " << perturbed << " perturbations;";

  std::vector<PiecewiseFunction> kfns = {gmic(R(4, 5)), hildebrand_discont_3_slope_1()};
  for (const auto& s : oracle::perturbable_seeds()) kfns.push_back(oracle::random_instance(s[0], s[1], s[2]));
  for (const auto& pi : kfns) {
    auto r = extremality_test(pi);
    for (int t = 0; t < 5; ++t)
      o.expect(permuted(r.system.matrix, rng).kernel_basis().size() == r.kernel_dimension, "kernel invariance");
  }
  o.detail << " kernel permutations on " << kfns.size() << " systems";
}

void criterion10(Outcome& o) {
  for (const char* name : {"gj_2_slope", "drlm_backward_3_slope", "hildebrand_discont_3_slope_1"})
    o.expect(compendium_entry(name).status == EntryStatus::sourced, std::string(name) + " sourced");
  auto gj = generate_covered_components(gj_2_slope(R(3, 5), R(1, 3)));
  o.expect(same_components(gj.components, {OpenIntervalSet({{0, R(7, 30)}, {R(11, 30), R(3, 5)}}),
                                           OpenIntervalSet({{R(7, 30), R(11, 30)}, {R(3, 5), 1}})}),
           "gj components");

  auto h = hildebrand_discont_3_slope_1();
  std::vector<OpenIntervalSet> hexp;
  for (const auto& s :
       {OpenIntervalSet({{0, R(1, 8)}, {R(3, 8), R(1, 2)}}),
        OpenIntervalSet({{R(1, 8), R(1, 4)}, {R(1, 4), R(3, 8)}, {R(1, 2), R(5, 8)}, {R(7, 8), 1}}),
        OpenIntervalSet({{R(5, 8), R(3, 4)}, {R(3, 4), R(7, 8)}})})
    hexp.push_back(join_at_continuity(h, s));
  o.expect(same_components(generate_covered_components(h).components, hexp), "hildebrand components");
  auto hr = extremality_test(h);
  o.expect(hr.kernel_dimension == 0 && hr.is_extreme, "hildebrand trivial kernel");

  auto d = drlm_backward_3_slope(R(1, 12), R(4, 12));
  o.expect(uncovered_intervals(d) == std::vector<Interval>{{R(5, 12), R(2, 3)}}, "drlm uncovered (5/12, 2/3)");
  o.expect(!extremality_test(d).is_extreme, "drlm not extreme");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"gmic(4/5) minimal, two components, extreme, kernel 0", criterion1},
      {"gmic(1/5) extreme", criterion2},
      {"equiv5 limits, directional limits, limit witness", criterion3},
      {"face from triple: vertices and p3", criterion4},
      {"merit index of gmic", criterion5},
      {"gomory_fractional range violation", criterion6},
      {"restriction of gmic(4/5) to the group of order 5", criterion7},
      {"oversampling agreement on (1/5)Z", criterion8},
      {"property suite", criterion9},
      {"sourced examples: components, kernel, uncovered interval", criterion10},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failures += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " - " << criteria[i].first
              << o.detail.str() << std::endl;
  }
  return failures;
}
