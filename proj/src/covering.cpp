#include "cgf/covering.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgf {

namespace {

constexpr int kMaxRounds = 100000;

void require_one_sided_continuity_at_origin(const PiecewiseFunction& pi) {
  const LimitTriple& t = pi.limits_list().front();
  if (t.right != t.value && t.left != t.value)
    throw std::invalid_argument("unsupported case: pi is discontinuous on both sides of the origin");
}

// (intr(P) mod 1) for P within [0,2].
OpenIntervalSet open_mod1(const Interval& P) {
  OpenIntervalSet s;
  if (P.is_point()) return s;
  if (P.hi <= 1) {
    s.add(P);
  } else if (P.lo >= 1) {
    s.add(Interval(P.lo - 1, P.hi - 1));
  } else {
    s.add(Interval(P.lo, Rational(1)));
    s.add(Interval(Rational(0), P.hi - 1));
  }
  return s;
}

// t -> sign * t + shift, restricted to `dom`.
struct AffineMap {
  Interval dom;
  int sign;
  Rational shift;

  Interval image(const Interval& iv) const {
    return sign > 0 ? Interval(iv.lo + shift, iv.hi + shift) : Interval(shift - iv.hi, shift - iv.lo);
  }
  Interval preimage(const Interval& iv) const {
    return sign > 0 ? Interval(iv.lo - shift, iv.hi - shift) : Interval(shift - iv.hi, shift - iv.lo);
  }
  Interval range() const { return image(dom); }
};

// Pieces of the correspondence induced by an additive edge, each mapping into [0,1].
std::vector<AffineMap> edge_maps(const Face& E, MoveKind& kind) {
  std::vector<AffineMap> maps;
  auto translation = [&](const Interval& src, const Rational& t) {
    kind = MoveKind::translation;
    Rational cut = 1 - t;  // src points above cut wrap around
    if (src.lo < cut) maps.push_back({Interval(src.lo, min(src.hi, cut)), 1, t});
    if (src.hi > cut) maps.push_back({Interval(max(src.lo, cut), src.hi), 1, t - 1});
  };
  switch (E.edge_kind()) {
    case EdgeKind::vertical: translation(E.proj(1), E.proj(0).lo); break;
    case EdgeKind::horizontal: translation(E.proj(0), E.proj(1).lo); break;
    case EdgeKind::diagonal:
      kind = MoveKind::reflection;
      maps.push_back({E.proj(0), -1, E.proj(2).lo});
      break;
    default: break;
  }
  return maps;
}

Rational union_measure(const std::vector<OpenIntervalSet>& comps) {
  OpenIntervalSet all;
  for (const auto& c : comps) all.add(c);
  return all.measure();
}

size_t part_count(const std::vector<OpenIntervalSet>& comps) {
  size_t n = 0;
  for (const auto& c : comps) n += c.parts().size();
  return n;
}

void merge_components(const PiecewiseFunction& pi, std::vector<OpenIntervalSet>& comps) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (size_t a = 0; a < comps.size() && !merged; ++a)
      for (size_t b = a + 1; b < comps.size() && !merged; ++b)
        if (comps[a].overlaps(comps[b])) {
          comps[a].add(comps[b]);
          comps.erase(comps.begin() + b);
          merged = true;
        }
  }
  for (auto& c : comps) c = join_at_continuity(pi, c);
  std::sort(comps.begin(), comps.end(), [](const OpenIntervalSet& x, const OpenIntervalSet& y) {
    return x.parts().front() < y.parts().front();
  });
}

std::vector<Interval> complement_of_closures(const std::vector<OpenIntervalSet>& comps) {
  std::vector<Interval> closed;
  for (const auto& c : comps)
    for (const auto& p : c.parts()) closed.push_back(p);
  std::sort(closed.begin(), closed.end());
  std::vector<Interval> gaps;
  Rational reach = 0;
  for (const auto& p : closed) {
    if (p.lo > reach) gaps.emplace_back(reach, p.lo);
    reach = max(reach, p.hi);
  }
  if (reach < 1) gaps.emplace_back(reach, Rational(1));
  return gaps;
}

}  // namespace

OpenIntervalSet join_at_continuity(const PiecewiseFunction& pi, const OpenIntervalSet& s) {
  std::vector<Interval> out;
  for (const auto& p : s.parts()) {
    if (!out.empty() && out.back().hi == p.lo && pi.is_continuous_at(p.lo)) {
      out.back().hi = p.hi;
    } else {
      out.push_back(p);
    }
  }
  OpenIntervalSet r;
  for (const auto& p : out) r.add(p);
  return r;
}

CoveredComponentSet directly_covered_components(const PiecewiseFunction& pi, const AdditiveFaceSet& additive) {
  CoveredComponentSet cs;
  cs.closed = pi.is_continuous();
  for (const auto& F : additive.faces) {
    if (F.dimension() != 2) continue;
    OpenIntervalSet c;
    c.add(F.proj(0));
    c.add(F.proj(1));
    c.add(open_mod1(F.proj(2)));
    cs.components.push_back(std::move(c));
  }
  merge_components(pi, cs.components);
  cs.uncovered = complement_of_closures(cs.components);
  return cs;
}

CoveredComponentSet generate_covered_components(const PiecewiseFunction& pi) {
  require_one_sided_continuity_at_origin(pi);
  AdditiveFaceSet additive = generate_additive_faces(pi);
  CoveredComponentSet cs = directly_covered_components(pi, additive);

  std::vector<Face> edges = additive.faces_of_dimension(1, false);
  std::sort(edges.begin(), edges.end());
  std::vector<std::pair<std::vector<AffineMap>, MoveKind>> moves;
  for (const auto& E : edges) {
    MoveKind kind = MoveKind::translation;
    auto maps = edge_maps(E, kind);
    moves.emplace_back(std::move(maps), kind);
  }

  auto& comps = cs.components;
  for (int round = 0;; ++round) {
    if (round >= kMaxRounds) throw std::runtime_error("covered component propagation did not converge");
    bool changed = false;
    const Rational before_measure = union_measure(comps);
    const size_t before_count = comps.size();
    const size_t before_parts = part_count(comps);
    for (size_t e = 0; e < edges.size() && !changed; ++e) {
      for (const auto& m : moves[e].first) {
        for (auto& C : comps) {
          // forward along the map, then backward
          for (int dir = 0; dir < 2 && !changed; ++dir) {
            Interval src = dir == 0 ? m.dom : m.range();
            const OpenIntervalSet hit = C.intersect(src);
            for (const auto& part : hit.parts()) {
              Interval dst = dir == 0 ? m.image(part) : m.preimage(part);
              OpenIntervalSet img;
              img.add(dst);
              if (C.contains(img)) continue;
              C.add(dst);
              cs.edges_used.push_back({edges[e], moves[e].second, part, dst});
              changed = true;
              break;
            }
          }
          if (changed) break;
        }
        if (changed) break;
      }
    }
    if (!changed) break;
    merge_components(pi, comps);
    if (!(union_measure(comps) > before_measure || comps.size() < before_count || part_count(comps) < before_parts))
      throw std::logic_error("covered component propagation made no progress");
  }
  cs.uncovered = complement_of_closures(comps);
  return cs;
}

std::vector<Interval> uncovered_intervals(const PiecewiseFunction& pi) {
  return generate_covered_components(pi).uncovered;
}

}  // namespace cgf
