#include "cgf/minimality.hpp"

#include <set>
#include <stdexcept>

namespace cgf {

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::value_at_0: return "value-at-0";
    case ViolationKind::range: return "range";
    case ViolationKind::symmetry: return "symmetry";
    default: return "subadditivity";
  }
}

namespace {

const char* side_suffix(int eps) { return eps > 0 ? "+" : (eps < 0 ? "-" : ""); }

}  // namespace

std::string Violation::str() const {
  switch (kind) {
    case ViolationKind::value_at_0:
      return "pi(0) = " + slack.str() + " is not 0";
    case ViolationKind::range:
      return "pi(" + x.str() + side_suffix(eps.x) + ") = " + slack.str() + " is outside [0, 1]";
    case ViolationKind::symmetry:
      return "pi(" + x.str() + side_suffix(eps.x) + ") + pi(f - " + x.str() + side_suffix(-eps.x) + ") - 1 = " +
             slack.str();
    default: {
      std::string s = "Delta pi at (" + x.str() + ", " + y.str() + ") with limits (" + std::to_string(eps.x) + ", " +
                      std::to_string(eps.y) + ", " + std::to_string(eps.z) + ") = " + slack.str();
      if (face) s += " on " + face->str();
      return s;
    }
  }
}

Rational find_f(const PiecewiseFunction& pi) {
  const auto& b = pi.end_points();
  const auto& lim = pi.limits_list();
  for (size_t i = 0; i < b.size(); ++i)
    if (lim[i].value == 1) return b[i];
  for (size_t i = 0; i < b.size(); ++i)
    if (lim[i].left == 1 || lim[i].right == 1)
      throw std::invalid_argument("no candidate f: only a one-sided limit equals 1 (at " + b[i].str() + ")");
  throw std::invalid_argument("no candidate f: no breakpoint value equals 1");
}

MinimalityReport minimality_test(const PiecewiseFunction& pi, const MinimalityOptions& opts) {
  MinimalityReport r;
  r.f_used = opts.f ? *opts.f : (pi.f() ? *pi.f() : find_f(pi));
  if (r.f_used <= 0 || r.f_used >= 1) throw std::invalid_argument("invalid f = " + r.f_used.str());
  const Rational& f = r.f_used;
  auto stop = [&] { return opts.fail_fast && !r.violations.empty(); };
  auto done = [&] {
    r.is_minimal = r.violations.empty();
    r.log.push_back(r.is_minimal ? "Thus pi is minimal." : "Thus pi is NOT minimal.");
    return r;
  };

  if (pi(0) != 0) {
    r.violations.push_back({ViolationKind::value_at_0, 0, 0, {}, std::nullopt, pi(0)});
    r.log.push_back("pi is not minimal because pi(0) = " + pi(0).str() + " != 0.");
    if (stop()) return done();
  } else {
    r.log.push_back("pi(0) = 0");
  }

  bool in_range = true;
  const auto& b = pi.end_points();
  for (size_t i = 0; i + 1 < b.size(); ++i) {
    const LimitTriple& t = pi.limits_list()[i];
    for (int e : {0, 1, -1}) {
      const Rational& v = t.at(e);
      if (v < 0 || v > 1) {
        in_range = false;
        r.violations.push_back({ViolationKind::range, b[i], 0, {e, 0, 0}, std::nullopt, v});
        if (stop()) break;
      }
    }
    if (stop()) break;
  }
  if (!in_range) {
    r.log.push_back("pi is not minimal because it does not stay in the range of [0, 1].");
    if (stop()) return done();
  }

  // pi(x) + pi(f - x) is piecewise linear with breakpoints in B and f - B
  std::set<Rational> pts;
  for (size_t i = 0; i + 1 < b.size(); ++i) {
    pts.insert(b[i]);
    pts.insert(frac(f - b[i]));
  }
  std::set<std::pair<Rational, int>> reported;
  bool symmetric = true;
  for (const auto& x : pts) {
    for (int e : {0, 1, -1}) {
      Rational s = pi.limit(x, e) + pi.limit(f - x, -e) - 1;
      if (s == 0) continue;
      symmetric = false;
      Rational partner = frac(f - x);
      auto key = x <= partner ? std::make_pair(x, e) : std::make_pair(partner, -e);
      if (!reported.insert(key).second) continue;
      r.violations.push_back({ViolationKind::symmetry, x, 0, {e, 0, 0}, std::nullopt, s});
      if (stop()) return done();
    }
  }
  r.log.push_back(symmetric ? "pi is symmetric." : "pi is not symmetric.");

  bool subadditive = true;
  const bool cont = pi.is_continuous();
  for (const auto& v : enumerate_complex_vertices(b, true)) {
    for (const Eps& e : kAllEps) {
      Rational d = delta_pi_eps(pi, v.x, v.y, e);
      if (d < 0) {
        subadditive = false;
        r.violations.push_back({ViolationKind::subadditivity, v.x, v.y, e, cone_face(b, v, e), d});
        if (stop()) return done();
      }
      if (cont) break;
    }
  }
  r.log.push_back(subadditive ? "pi is subadditive." : "pi is not subadditive.");
  return done();
}

std::optional<long> detect_zero_period(const PiecewiseFunction& pi) {
  mpz_class q = 1;
  bool found = false;
  const auto& b = pi.end_points();
  for (size_t i = 1; i + 1 < b.size(); ++i)
    if (pi.limits_list()[i].value == 0) {
      q = lcm(q, b[i].den());
      found = true;
    }
  if (!found) return std::nullopt;
  Rational shift(mpq_class(1, q));
  for (const auto& x : b)
    for (const Rational& p : {x, x - shift})
      if (!(pi.limits_at(p) == pi.limits_at(p + shift)))
        throw std::runtime_error("pi is not (1/" + q.get_str() + ")Z-periodic; the input is not minimal");
  return q.get_si();
}

Rational find_f(const DiscreteFunction& pi) {
  for (long i = 0; i <= pi.order(); ++i)
    if (pi.values()[i] == 1) return Rational(i, pi.order());
  throw std::invalid_argument("no candidate f: no value equals 1");
}

MinimalityReport minimality_test(const DiscreteFunction& pi, const MinimalityOptions& opts) {
  MinimalityReport r;
  r.f_used = opts.f ? *opts.f : (pi.f() ? *pi.f() : find_f(pi));
  if (r.f_used <= 0 || r.f_used >= 1 || !pi.on_grid(r.f_used)) throw std::invalid_argument("invalid f = " + r.f_used.str());
  const long q = pi.order();
  const long fi = pi.index_of(r.f_used);
  auto stop = [&] { return opts.fail_fast && !r.violations.empty(); };
  auto done = [&] {
    r.is_minimal = r.violations.empty();
    r.log.push_back(r.is_minimal ? "Thus pi is minimal." : "Thus pi is NOT minimal.");
    return r;
  };
  if (pi.at(0) != 0) {
    r.violations.push_back({ViolationKind::value_at_0, 0, 0, {}, std::nullopt, pi.at(0)});
    if (stop()) return done();
  }
  for (long i = 0; i < q; ++i)
    if (pi.at(i) < 0 || pi.at(i) > 1) {
      r.violations.push_back({ViolationKind::range, Rational(i, q), 0, {}, std::nullopt, pi.at(i)});
      if (stop()) return done();
    }
  for (long i = 0; i < q; ++i) {
    long j = ((fi - i) % q + q) % q;
    if (j < i) continue;
    Rational s = pi.at(i) + pi.at(j) - 1;
    if (s != 0) {
      r.violations.push_back({ViolationKind::symmetry, Rational(i, q), 0, {}, std::nullopt, s});
      if (stop()) return done();
    }
  }
  for (long i = 0; i < q; ++i)
    for (long j = i; j < q; ++j) {
      Rational d = pi.at(i) + pi.at(j) - pi.at(i + j);
      if (d < 0) {
        r.violations.push_back({ViolationKind::subadditivity, Rational(i, q), Rational(j, q), {}, std::nullopt, d});
        if (stop()) return done();
      }
    }
  r.log.push_back(r.violations.empty() ? "pi is subadditive and symmetric." : "pi violates the minimality conditions.");
  return done();
}

}  // namespace cgf
