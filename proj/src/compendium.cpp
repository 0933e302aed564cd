#include "cgf/compendium.hpp"

#include "cgf/json_io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef CGF_DATA_DIR
#define CGF_DATA_DIR "data"
#endif

namespace cgf {

namespace {

std::vector<Rational> R(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool file_exists(const std::string& path) { return static_cast<bool>(std::ifstream(path)); }

// Loads the checksummed data file of a sourced entry.
json load_sourced(const std::string& name) {
  const std::string dir = data_directory() + "/compendium/";
  const std::string sidecar = dir + name + ".provenance.json";
  if (!file_exists(sidecar)) throw std::runtime_error("unsourced entry: " + name + " (no provenance sidecar)");
  json prov = json::parse(read_file(sidecar));
  const std::string data_path = dir + prov.value("file", name + ".json");
  std::string bytes = read_file(data_path);
  std::string digest = sha256_hex(bytes);
  if (digest != prov.value("sha256", ""))
    throw std::runtime_error("checksum mismatch for " + data_path + ": " + digest);
  return json::parse(bytes);
}

// Parametric entries pin instances in their data file; a pinned instance must match the closed form.
PiecewiseFunction check_pinned(const std::string& name, const ParamMap& params, PiecewiseFunction pi) {
  json data = load_sourced(name);
  for (const auto& inst : data.at("instances")) {
    bool match = true;
    for (const auto& [k, v] : params)
      if (!inst.at("params").contains(k) || rational_from_json(inst.at("params").at(k)) != v) match = false;
    if (match && !(piecewise_from_json(inst.at("function")) == pi))
      throw std::runtime_error("closed form of " + name + " disagrees with its pinned data");
  }
  return pi;
}

const std::vector<CompendiumEntry> kEntries = {
    {"gmic",
     {{"f", Rational(4, 5)}},
     "Gomory mixed-integer cut: 2-slope function with breakpoints 0, f, 1.",
     "Gomory, An algorithm for integer solutions to linear programs (1960); Gomory and Johnson, Some continuous "
     "functions related to corner polyhedra I, II, Math. Prog. 3 (1972)",
     EntryStatus::builtin,
     "extreme"},
    {"gomory_fractional",
     {{"f", Rational(4, 5)}},
     "Gomory fractional cut frac(x)/f.",
     "Gomory, Outline of an algorithm for integer solutions to linear programs, Bull. AMS 64 (1958)",
     EntryStatus::builtin,
     "not minimal"},
    {"equiv5_random_discont_1",
     {},
     "Discontinuous function on (1/5)Z with a limit violation at (2/5, 4/5).",
     "random example on the 1/5 grid",
     EntryStatus::builtin,
     "not minimal"},
    {"gj_2_slope",
     {{"f", Rational(3, 5)}, {"lambda_1", Rational(1, 6)}},
     "Continuous 2-slope function; requires 0 < f < 1 and 0 < lambda_1 < f/(1-f).",
     "Gomory and Johnson, T-space and cutting planes, Math. Prog. 96 (2003) 341-375; Some continuous functions "
     "related to corner polyhedra II, Math. Prog. 3 (1972) 359-389",
     EntryStatus::sourced,
     "extreme"},
    {"drlm_backward_3_slope",
     {{"f", Rational(1, 12)}, {"bkpt", Rational(2, 12)}},
     "Continuous 3-slope function; requires 0 < f < bkpt < 1 + f - bkpt < 1.",
     "Dey, Richard, Li and Miller, On the extreme inequalities of infinite group problems, Math. Prog. 121 (2010) "
     "145-170",
     EntryStatus::sourced,
     "extreme"},
    {"hildebrand_discont_3_slope_1",
     {},
     "Discontinuous 3-slope function with f = 1/2.",
     "Constructed by R. Hildebrand (2013, unpublished)",
     EntryStatus::sourced,
     "extreme"},
    {"not_minimal_2",
     {},
     "Continuous function on (1/5)Z that is not minimal.",
     "test example of the extreme_functions compendium",
     EntryStatus::sourced,
     "not minimal"},
    {"example7slopecoarse2",
     {},
     "Continuous function on (1/24)Z with 7 slopes.",
     "test example of the extreme_functions compendium",
     EntryStatus::sourced,
     "not extreme"},
    {"bcdsp_arbitrary_slope",
     {},
     "Extreme function with an arbitrary number of slopes.",
     "Basu, Conforti, Di Summa and Paat, Extreme functions with an arbitrary number of slopes, IPCO 2016",
     EntryStatus::unsourced,
     "extreme"},
    {"chen_4_slope",
     {},
     "4-slope extreme function.",
     "Chen, Topics in group methods for integer programming, PhD thesis (2011)",
     EntryStatus::unsourced,
     "extreme"},
};

Rational param(const ParamMap& p, const CompendiumEntry& e, size_t i) {
  auto it = p.find(e.params[i].name);
  return it == p.end() ? e.params[i].default_value : it->second;
}

}  // namespace

const char* entry_status_name(EntryStatus s) {
  switch (s) {
    case EntryStatus::builtin: return "builtin";
    case EntryStatus::sourced: return "sourced";
    default: return "unsourced";
  }
}

std::string data_directory() {
  if (const char* d = std::getenv("CGF_DATA_DIR"); d && *d) return d;
  return CGF_DATA_DIR;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

const std::vector<CompendiumEntry>& compendium_entries() { return kEntries; }

std::vector<CompendiumEntry> sourced_entries() {
  std::vector<CompendiumEntry> out;
  for (const auto& e : kEntries)
    if (e.status != EntryStatus::builtin) out.push_back(e);
  return out;
}

const CompendiumEntry& compendium_entry(const std::string& name) {
  for (const auto& e : kEntries)
    if (e.name == name) return e;
  throw std::invalid_argument("unknown compendium function \"" + name + "\"");
}

PiecewiseFunction construct(const std::string& name, const ParamMap& params) {
  const CompendiumEntry& e = compendium_entry(name);
  for (const auto& [k, v] : params) {
    bool known = false;
    for (const auto& p : e.params) known = known || p.name == k;
    if (!known) throw std::invalid_argument(name + " has no parameter \"" + k + "\"");
  }
  if (e.status == EntryStatus::unsourced) throw std::runtime_error("unsourced entry: " + name);
  if (name == "gmic") return gmic(param(params, e, 0));
  if (name == "gomory_fractional") return gomory_fractional(param(params, e, 0));
  if (name == "equiv5_random_discont_1") return equiv5_random_discont_1();
  if (name == "gj_2_slope") return gj_2_slope(param(params, e, 0), param(params, e, 1));
  if (name == "drlm_backward_3_slope") return drlm_backward_3_slope(param(params, e, 0), param(params, e, 1));
  if (name == "hildebrand_discont_3_slope_1") return hildebrand_discont_3_slope_1();
  if (name == "not_minimal_2") return not_minimal_2();
  if (name == "example7slopecoarse2") return example7slopecoarse2();
  throw std::logic_error("no constructor for " + name);
}

PiecewiseFunction gmic(const Rational& f) {
  if (!(f > 0 && f < 1)) throw std::invalid_argument("Bad parameters: need 0 < f < 1");
  return PiecewiseFunction::from_breakpoints_and_values(R({0, f, 1}), R({0, 1, 0}), f);
}

PiecewiseFunction gomory_fractional(const Rational& f) {
  if (!(f > 0 && f < 1)) throw std::invalid_argument("Bad parameters: need 0 < f < 1");
  return PiecewiseFunction::from_breakpoints_and_values(R({0, 1}), R({0, Rational(1) / f}), f);
}

PiecewiseFunction equiv5_random_discont_1() {
  std::vector<LimitTriple> lim = {{0, 0, 0},
                                  {1, 1, 1},
                                  {Rational(2, 5), Rational(2, 5), 0},
                                  {Rational(1, 2), Rational(3, 5), Rational(2, 5)},
                                  {Rational(3, 5), 1, Rational(3, 5)},
                                  {0, 0, 0}};
  return PiecewiseFunction::from_breakpoints_and_limits(
      R({0, Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5), 1}), lim, Rational(1, 5));
}

PiecewiseFunction gj_2_slope(const Rational& f, const Rational& lambda_1) {
  if (!(f > 0 && f < 1 && lambda_1 > 0 && lambda_1 < f / (1 - f)))
    throw std::invalid_argument("Bad parameters: need 0 < f < 1 and 0 < lambda_1 < f/(1-f)");
  Rational a = (f - lambda_1 * (1 - f)) / 2, b = (f + lambda_1 * (1 - f)) / 2;
  auto pi = PiecewiseFunction::from_breakpoints_and_values(
      R({0, a, b, f, 1}), R({0, (1 + lambda_1) / 2, (1 - lambda_1) / 2, 1, 0}), f);
  return check_pinned("gj_2_slope", {{"f", f}, {"lambda_1", lambda_1}}, pi);
}

PiecewiseFunction drlm_backward_3_slope(const Rational& f, const Rational& bkpt) {
  if (!(f > 0 && f < bkpt && bkpt < 1 + f - bkpt && 1 + f - bkpt < 1))
    throw std::invalid_argument("Bad parameters: need 0 < f < bkpt < 1 + f - bkpt < 1");
  auto pi = PiecewiseFunction::from_breakpoints_and_values(
      R({0, f, bkpt, 1 + f - bkpt, 1}), R({0, 1, bkpt / (1 + f), (1 + f - bkpt) / (1 + f), 0}), f);
  return check_pinned("drlm_backward_3_slope", {{"f", f}, {"bkpt", bkpt}}, pi);
}

PiecewiseFunction hildebrand_discont_3_slope_1() {
  return piecewise_from_json(load_sourced("hildebrand_discont_3_slope_1"));
}

PiecewiseFunction not_minimal_2() { return piecewise_from_json(load_sourced("not_minimal_2")); }

PiecewiseFunction example7slopecoarse2() { return piecewise_from_json(load_sourced("example7slopecoarse2")); }

}  // namespace cgf
