#include "cgf/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace cgf {

namespace {

json rat(const Rational& r) { return r.str(); }

json rats(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(rat(r));
  return a;
}

json vec(const Vec& v) { return rats(v); }

std::vector<Rational> rats_from(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) throw std::invalid_argument(std::string("missing array \"") + key + "\"");
  std::vector<Rational> out;
  for (const auto& e : j.at(key)) out.push_back(rational_from_json(e));
  return out;
}

std::optional<Rational> optional_f(const json& j) {
  if (!j.contains("f") || j.at("f").is_null()) return std::nullopt;
  return rational_from_json(j.at("f"));
}

json eps_json(const Eps& e) { return json::array({e.x, e.y, e.z}); }

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("rational must be a \"p/q\" string: " + j.dump());
}

json to_json(const Interval& iv) { return json::array({rat(iv.lo), rat(iv.hi)}); }

json to_json(const PiecewiseFunction& pi) {
  json j;
  j["kind"] = "piecewise";
  j["f"] = pi.f() ? rat(*pi.f()) : json(nullptr);
  j["breakpoints"] = rats(pi.end_points());
  json lim = json::array();
  for (const auto& t : pi.limits_list()) lim.push_back(json::array({rat(t.value), rat(t.right), rat(t.left)}));
  j["limits"] = lim;
  return j;
}

json to_json(const DiscreteFunction& pi) {
  json j;
  j["kind"] = "discrete";
  j["f"] = pi.f() ? rat(*pi.f()) : json(nullptr);
  j["points"] = rats(pi.points());
  j["values"] = rats(pi.values());
  return j;
}

json to_json(const AnyFunction& pi) {
  return std::visit([](const auto& p) { return to_json(p); }, pi);
}

json to_json(const Face& F) {
  json j;
  j["I"] = to_json(F.I());
  j["J"] = to_json(F.J());
  j["K"] = to_json(F.K());
  j["dimension"] = F.dimension();
  if (F.dimension() == 1) j["edge_kind"] = edge_kind_name(F.edge_kind());
  json vs = json::array();
  for (const auto& v : F.vertices()) vs.push_back(json::array({rat(v.x), rat(v.y)}));
  j["vertices"] = vs;
  if (!F.empty()) j["projections"] = json::array({to_json(F.proj(0)), to_json(F.proj(1)), to_json(F.proj(2))});
  return j;
}

json to_json(const AdditiveFaceSet& s) {
  json a = json::array();
  for (size_t i = 0; i < s.faces.size(); ++i) {
    json f = to_json(s.faces[i]);
    f["maximal"] = static_cast<bool>(s.maximal[i]);
    a.push_back(f);
  }
  return a;
}

json to_json(const Violation& v) {
  json j;
  j["kind"] = violation_kind_name(v.kind);
  j["x"] = rat(v.x);
  if (v.kind == ViolationKind::subadditivity) {
    j["y"] = rat(v.y);
    j["eps"] = eps_json(v.eps);
  } else if (v.kind != ViolationKind::value_at_0) {
    j["side"] = v.eps.x;
  }
  j["slack"] = rat(v.slack);
  if (v.face) j["face"] = to_json(*v.face);
  j["text"] = v.str();
  return j;
}

json to_json(const MinimalityReport& r) {
  json j;
  j["is_minimal"] = r.is_minimal;
  j["f_used"] = rat(r.f_used);
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back(to_json(v));
  j["violations"] = vs;
  j["log"] = r.log;
  return j;
}

json to_json(const CoveredComponentSet& c) {
  json j;
  j["closed"] = c.closed;
  json comps = json::array();
  for (const auto& comp : c.components) {
    json parts = json::array();
    for (const auto& p : comp.parts()) parts.push_back(to_json(p));
    comps.push_back(parts);
  }
  j["components"] = comps;
  json unc = json::array();
  for (const auto& u : c.uncovered) unc.push_back(to_json(u));
  j["uncovered"] = unc;
  json moves = json::array();
  for (const auto& m : c.edges_used) {
    json e;
    e["edge"] = to_json(m.edge);
    e["kind"] = m.kind == MoveKind::translation ? "translation" : "reflection";
    e["from"] = to_json(m.from);
    e["to"] = to_json(m.to);
    moves.push_back(e);
  }
  j["edges_used"] = moves;
  return j;
}

json to_json(const EquationSystem& s) {
  json j;
  j["columns"] = s.matrix.cols();
  json rows = json::array();
  for (size_t i = 0; i < s.matrix.rows(); ++i) {
    json r;
    r["row"] = vec(s.matrix.row(i));
    r["provenance"] = s.provenance[i];
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

json to_json(const ExtremalityReport& r) {
  json j;
  j["is_extreme"] = r.is_extreme;
  j["is_minimal"] = r.is_minimal;
  j["minimality"] = to_json(r.minimality);
  if (r.covered) j["covered"] = to_json(*r.covered);
  if (r.symbolic) {
    json g;
    g["k"] = r.symbolic->k;
    json jumps = json::array();
    for (const auto& p : r.symbolic->jumps)
      jumps.push_back(json::array({rat(p.x), p.side < 0 ? "left" : "right"}));
    g["jump_points"] = jumps;
    g["breakpoints"] = rats(r.symbolic->bkpt);
    json lim = json::array();
    for (const auto& t : r.symbolic->limits) lim.push_back(json::array({vec(t[0]), vec(t[1]), vec(t[2])}));
    g["limits"] = lim;
    j["symbolic"] = g;
  }
  j["system"] = to_json(r.system);
  j["kernel_dimension"] = r.kernel_dimension;
  json kb = json::array();
  for (const auto& v : r.kernel_basis) kb.push_back(vec(v));
  j["kernel_basis"] = kb;
  if (r.perturbation) {
    j["perturbation"] = to_json(r.perturbation->perturbation);
    j["epsilon"] = rat(r.perturbation->epsilon);
  }
  if (r.discrete_perturbation) j["perturbation"] = to_json(*r.discrete_perturbation);
  j["notes"] = r.notes;
  j["log"] = r.log;
  return j;
}

PiecewiseFunction piecewise_from_json(const json& j) {
  auto b = rats_from(j, "breakpoints");
  if (j.contains("limits")) {
    std::vector<LimitTriple> lim;
    for (const auto& t : j.at("limits")) {
      if (!t.is_array() || t.size() != 3) throw std::invalid_argument("limit triple must have 3 entries");
      lim.push_back({rational_from_json(t[0]), rational_from_json(t[1]), rational_from_json(t[2])});
    }
    return PiecewiseFunction::from_breakpoints_and_limits(b, lim, optional_f(j));
  }
  return PiecewiseFunction::from_breakpoints_and_values(b, rats_from(j, "values"), optional_f(j));
}

DiscreteFunction discrete_from_json(const json& j) {
  return DiscreteFunction::from_points_and_values(rats_from(j, "points"), rats_from(j, "values"), optional_f(j));
}

AnyFunction function_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("function JSON must be an object");
  std::string kind = j.value("kind", "piecewise");
  if (kind == "piecewise") return piecewise_from_json(j);
  if (kind == "discrete") return discrete_from_json(j);
  throw std::invalid_argument("unknown function kind \"" + kind + "\"");
}

AnyFunction read_function_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return function_from_json(j);
}

}  // namespace cgf
