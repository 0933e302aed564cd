#include "cgf/extremality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cgf {

namespace {

constexpr int kMaxHalvings = 64;

Vec zeros(size_t n) { return Vec(n, Rational(0)); }

Vec unit(size_t n, size_t i) {
  Vec v = zeros(n);
  v[i] = 1;
  return v;
}

Vec sub(const Vec& a, const Vec& b) { return axpy(Rational(-1), b, a); }

std::string eps_str(const Eps& e) {
  return "(" + std::to_string(e.x) + ", " + std::to_string(e.y) + ", " + std::to_string(e.z) + ")";
}

std::vector<Rational> merged_breakpoints(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::set<Rational> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return {s.begin(), s.end()};
}

}  // namespace

Vec SymbolicPerturbation::at(const Rational& z, int eps) const {
  const size_t n = dim();
  Rational t = z.floor();
  Rational r = z - t;
  if (r == 0 && eps < 0) {
    t -= 1;
    r = 1;
  }
  Vec base = t.is_zero() ? zeros(n) : axpy(t, limits.back()[0], zeros(n));
  auto it = std::lower_bound(bkpt.begin(), bkpt.end(), r);
  size_t i = static_cast<size_t>(it - bkpt.begin());
  Vec local;
  if (it != bkpt.end() && *it == r) {
    const auto& tr = limits[i];
    local = eps == 0 ? tr[0] : (eps > 0 ? tr[1] : tr[2]);
  } else {
    // r lies in the open interval (bkpt[i-1], bkpt[i])
    size_t c = interval_component[i - 1];
    local = axpy(r - bkpt[i - 1], unit(n, c), limits[i - 1][1]);
  }
  return axpy(Rational(1), local, base);
}

PiecewiseFunction SymbolicPerturbation::evaluate(const Vec& v, std::optional<Rational> f) const {
  if (v.size() != dim()) throw std::invalid_argument("coefficient vector has wrong length");
  if (dot(limits.back()[0], v) != 0) throw std::invalid_argument("coefficients do not satisfy g(1) . v = 0");
  std::vector<LimitTriple> lim;
  for (const auto& tr : limits) lim.push_back({dot(tr[0], v), dot(tr[1], v), dot(tr[2], v)});
  return PiecewiseFunction::from_breakpoints_and_limits(bkpt, lim, f);
}

Vec SymbolicPerturbation::own_coefficients(const PiecewiseFunction& pi) const {
  Vec v = zeros(dim());
  std::vector<bool> seen(k, false);
  for (size_t i = 0; i + 1 < bkpt.size(); ++i) {
    size_t c = interval_component[i];
    Rational mid = (bkpt[i] + bkpt[i + 1]) / 2;
    Rational s = pi.which_function(mid).slope;
    if (!seen[c]) {
      v[c] = s;
      seen[c] = true;
    }
  }
  for (size_t j = 0; j < jumps.size(); ++j) {
    const JumpPoint& p = jumps[j];
    LimitTriple t = p.x == 1 ? LimitTriple{pi.limit(1, 0), pi.limit(1, 1), pi.limit(1, -1)} : pi.limits_at(p.x);
    v[k + j] = p.side < 0 ? t.value - t.left : t.right - t.value;
  }
  return v;
}

SymbolicPerturbation generate_symbolic(const PiecewiseFunction& pi, const CoveredComponentSet& components) {
  if (!components.uncovered.empty()) throw std::invalid_argument("uncovered intervals present");
  const LimitTriple& origin = pi.limits_list().front();
  if (origin.right != origin.value && origin.left != origin.value)
    throw std::invalid_argument("unsupported case: pi is discontinuous on both sides of the origin");

  SymbolicPerturbation g;
  g.k = components.components.size();
  std::vector<Rational> ends;
  for (const auto& c : components.components)
    for (const auto& p : c.parts()) {
      ends.push_back(p.lo);
      ends.push_back(p.hi);
    }
  g.bkpt = merged_breakpoints(pi.end_points(), ends);

  for (size_t i = 0; i + 1 < g.bkpt.size(); ++i) {
    const Rational &a = g.bkpt[i], &b = g.bkpt[i + 1];
    std::optional<size_t> found;
    for (size_t c = 0; c < g.k && !found; ++c)
      for (const auto& p : components.components[c].parts())
        if (p.lo <= a && b <= p.hi) {
          found = c;
          break;
        }
    if (!found) throw std::invalid_argument("interval [" + a.str() + ", " + b.str() + "] is not covered");
    g.interval_component.push_back(*found);
  }

  // Jump variables in walk order; pi~ can only jump where pi does.
  const auto& b = g.bkpt;
  const Rational one(1);
  for (const auto& x : b) {
    LimitTriple t = pi.limits_at(x);
    if (x == one) t = {pi.limits_list().back().value, pi.limits_list().back().right, pi.limits_list().back().left};
    if (x != 0 && t.left != t.value) g.jumps.push_back({x, -1});
    if (x != one && t.right != t.value) g.jumps.push_back({x, 1});
  }

  const size_t n = g.dim();
  size_t next_jump = 0;
  Vec right = zeros(n);  // g(x+) at the previous breakpoint
  for (size_t i = 0; i < b.size(); ++i) {
    Vec left, value;
    if (i == 0) {
      left = value = zeros(n);
    } else {
      left = axpy(b[i] - b[i - 1], unit(n, g.interval_component[i - 1]), right);
      value = left;
      if (next_jump < g.jumps.size() && g.jumps[next_jump].x == b[i] && g.jumps[next_jump].side < 0)
        value = axpy(Rational(1), unit(n, g.k + next_jump++), value);
    }
    right = value;
    if (next_jump < g.jumps.size() && g.jumps[next_jump].x == b[i] && g.jumps[next_jump].side > 0)
      right = axpy(Rational(1), unit(n, g.k + next_jump++), right);
    g.limits.push_back({value, right, left});
  }
  return g;
}

EquationSystem build_equation_system(const PiecewiseFunction& pi, const SymbolicPerturbation& g, const Rational& f) {
  EquationSystem sys;
  sys.matrix = Matrix(g.dim());
  std::set<Vec> seen;
  auto add = [&](Vec row, std::string why, bool always) {
    if (!always && (is_zero(row) || seen.count(row))) return;
    seen.insert(row);
    sys.matrix.add_row(std::move(row));
    sys.provenance.push_back(std::move(why));
  };
  add(g.at(0, 0), "pi~(0) = 0", true);
  add(g.at(f, 0), "pi~(f) = 0", true);
  add(g.at(1, 0), "pi~(1) = 0", true);
  sys.normalization_rows = 3;

  const bool cont = pi.is_continuous();
  for (const auto& v : enumerate_complex_vertices(g.bkpt, true)) {
    for (const Eps& e : kAllEps) {
      if (delta_pi_eps(pi, v.x, v.y, e) == 0) {
        Vec row = sub(axpy(Rational(1), g.at(v.x, e.x), g.at(v.y, e.y)), g.at(v.x + v.y, e.z));
        add(std::move(row), "Delta pi(" + v.x.str() + ", " + v.y.str() + ") = 0 with limits " + eps_str(e), false);
      }
      if (cont) break;
    }
  }
  return sys;
}

Rational find_epsilon(const PiecewiseFunction& pi, const PiecewiseFunction& perturbation, std::optional<Rational> f) {
  bool nonzero = false;
  for (const auto& t : perturbation.limits_list())
    if (!t.value.is_zero() || !t.right.is_zero() || !t.left.is_zero()) nonzero = true;
  if (!nonzero) throw std::invalid_argument("perturbation is identically zero");
  const Rational f_used = f ? *f : (pi.f() ? *pi.f() : find_f(pi));

  std::optional<Rational> min_slack, max_delta;
  auto b = merged_breakpoints(pi.end_points(), perturbation.end_points());
  for (const auto& v : enumerate_complex_vertices(b, true))
    for (const Eps& e : kAllEps) {
      Rational s = delta_pi_eps(pi, v.x, v.y, e);
      if (s > 0 && (!min_slack || s < *min_slack)) min_slack = s;
      Rational d = delta_pi_eps(perturbation, v.x, v.y, e).abs();
      if (!max_delta || d > *max_delta) max_delta = d;
    }
  Rational eps = 1;
  if (max_delta && !max_delta->is_zero()) eps = (min_slack ? *min_slack : Rational(1)) / *max_delta;

  MinimalityOptions opts{f_used, true};
  for (int i = 0; i <= kMaxHalvings; ++i) {
    if (minimality_test(pi + eps * perturbation, opts).is_minimal &&
        minimality_test(pi - eps * perturbation, opts).is_minimal)
      return eps;
    eps /= 2;
  }
  throw std::runtime_error("no epsilon found for which pi +- epsilon * pi~ is minimal");
}

ExtremalityReport extremality_test(const PiecewiseFunction& pi, const ExtremalityOptions& opts) {
  ExtremalityReport r;
  r.minimality = minimality_test(pi, {opts.f ? opts.f : pi.f(), false});
  r.log = r.minimality.log;
  r.is_minimal = r.minimality.is_minimal;
  if (!r.is_minimal) {
    r.log.push_back("Thus the function is NOT extreme.");
    return r;
  }
  const Rational f = r.minimality.f_used;
  r.covered = generate_covered_components(pi);
  if (!r.covered->uncovered.empty()) {
    std::string s = "Uncovered intervals: (";
    for (size_t i = 0; i < r.covered->uncovered.size(); ++i)
      s += (i ? ", " : "") + std::string("[") + r.covered->uncovered[i].lo.str() + ", " +
           r.covered->uncovered[i].hi.str() + "]";
    r.log.push_back(s + ")");
    r.notes.push_back("perturbation unavailable: uncovered case");
    r.log.push_back("Thus the function is NOT extreme.");
    return r;
  }
  r.log.push_back("All intervals are covered (or connected-to-covered). " +
                  std::to_string(r.covered->components.size()) + " components.");
  r.symbolic = generate_symbolic(pi, *r.covered);
  r.system = build_equation_system(pi, *r.symbolic, f);
  r.kernel_basis = r.system.matrix.kernel_basis();
  r.kernel_dimension = r.kernel_basis.size();
  r.log.push_back("Solution space has dimension " + std::to_string(r.kernel_dimension));
  if (r.kernel_dimension == 0) {
    r.is_extreme = true;
    r.log.push_back("Thus the function is extreme.");
    return r;
  }
  if (opts.construct_perturbation) {
    PiecewiseFunction pert = r.symbolic->evaluate(r.kernel_basis.front());
    Rational eps = find_epsilon(pi, pert, f);
    r.perturbation = Perturbation{pert, eps};
  }
  r.log.push_back("Thus the function is NOT extreme.");
  return r;
}

ExtremalityReport extremality_test_discrete(const DiscreteFunction& pi, std::optional<Rational> f) {
  ExtremalityReport r;
  r.minimality = minimality_test(pi, {f, false});
  r.log = r.minimality.log;
  r.is_minimal = r.minimality.is_minimal;
  if (!r.is_minimal) {
    r.log.push_back("Thus the function is NOT extreme.");
    return r;
  }
  const long q = pi.order();
  const long fi = pi.index_of(r.minimality.f_used);
  const size_t n = static_cast<size_t>(q - 1);
  // Variable i-1 is pi~(i/q) for 0 < i < q.
  auto e = [&](long i) {
    Vec v = zeros(n);
    long m = ((i % q) + q) % q;
    if (m != 0) v[m - 1] = 1;
    return v;
  };
  r.system.matrix = Matrix(n);
  std::set<Vec> seen;
  auto add = [&](Vec row, std::string why, bool always) {
    if (!always && (is_zero(row) || seen.count(row))) return;
    seen.insert(row);
    r.system.matrix.add_row(std::move(row));
    r.system.provenance.push_back(std::move(why));
  };
  add(e(0), "pi~(0) = 0", true);
  add(e(fi), "pi~(f) = 0", true);
  add(e(q), "pi~(1) = 0", true);
  for (long i = 0; i < q; ++i) {
    long j = ((fi - i) % q + q) % q;
    if (j < i) continue;
    add(axpy(Rational(1), e(i), e(j)), "pi~(" + Rational(i, q).str() + ") + pi~(f - " + Rational(i, q).str() + ") = 0",
        false);
  }
  for (long i = 0; i < q; ++i)
    for (long j = i; j < q; ++j)
      if (pi.at(i) + pi.at(j) == pi.at(i + j))
        add(sub(axpy(Rational(1), e(i), e(j)), e(i + j)),
            "Delta pi(" + Rational(i, q).str() + ", " + Rational(j, q).str() + ") = 0", false);
  r.kernel_basis = r.system.matrix.kernel_basis();
  r.kernel_dimension = r.kernel_basis.size();
  r.log.push_back("Solution space has dimension " + std::to_string(r.kernel_dimension));
  r.is_extreme = r.kernel_dimension == 0;
  if (!r.is_extreme) {
    const auto& k0 = r.kernel_basis.front();
    std::vector<Rational> vals{Rational(0)};
    vals.insert(vals.end(), k0.begin(), k0.end());
    vals.push_back(0);
    r.discrete_perturbation = DiscreteFunction::from_points_and_values(pi.points(), vals, r.minimality.f_used);
  }
  r.log.push_back(r.is_extreme ? "Thus the function is extreme." : "Thus the function is NOT extreme.");
  return r;
}

}  // namespace cgf
