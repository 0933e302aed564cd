#pragma once

#include "cgf/pwl.hpp"

#include <map>
#include <string>
#include <vector>

namespace cgf {

struct CompendiumParam {
  std::string name;
  Rational default_value;
};

enum class EntryStatus { builtin, sourced, unsourced };
const char* entry_status_name(EntryStatus s);

struct CompendiumEntry {
  std::string name;
  std::vector<CompendiumParam> params;
  std::string docstring;
  std::string citation;
  EntryStatus status;
  std::string expected;  // documented property of the default instance
};

using ParamMap = std::map<std::string, Rational>;

const std::vector<CompendiumEntry>& compendium_entries();
std::vector<CompendiumEntry> sourced_entries();
const CompendiumEntry& compendium_entry(const std::string& name);
// Builds a registry function; unknown parameter names are rejected.
PiecewiseFunction construct(const std::string& name, const ParamMap& params = {});

PiecewiseFunction gmic(const Rational& f = Rational(4, 5));
PiecewiseFunction gomory_fractional(const Rational& f = Rational(4, 5));
PiecewiseFunction equiv5_random_discont_1();

PiecewiseFunction gj_2_slope(const Rational& f = Rational(3, 5), const Rational& lambda_1 = Rational(1, 6));
PiecewiseFunction drlm_backward_3_slope(const Rational& f = Rational(1, 12), const Rational& bkpt = Rational(2, 12));
PiecewiseFunction hildebrand_discont_3_slope_1();
PiecewiseFunction not_minimal_2();
PiecewiseFunction example7slopecoarse2();

// CGF_DATA_DIR from the environment, else the configured install location.
std::string data_directory();
std::string sha256_hex(const std::string& bytes);

}  // namespace cgf
