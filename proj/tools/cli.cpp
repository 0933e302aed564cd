// Command-line front end over the C interface.
#include "cgf/cgf.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Failure {
  std::string message;
};

void check(cgf_status s) {
  if (s != CGF_OK) throw Failure{std::string(cgf_status_name(s)) + ": " + cgf_last_error()};
}

// Owns a string returned by the library.
std::string take(char* s) {
  std::unique_ptr<char, void (*)(char*)> guard(s, cgf_string_free);
  return s ? std::string(s) : std::string();
}

using Handle = std::unique_ptr<cgf_function, void (*)(cgf_function*)>;
Handle handle(cgf_function* f) { return Handle(f, cgf_function_free); }

struct Input {
  std::string source;
  std::optional<std::string> f;
  std::vector<std::string> params;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("function", in.source, "compendium name or path to a function JSON file")->required();
  cmd->add_option("--f", in.f, "f as p/q (constructor parameter, or test f for files)");
  cmd->add_option("--param", in.params, "constructor parameter name=p/q (repeatable)");
}

bool is_file_input(const std::string& s) {
  return s.find('/') != std::string::npos || s.size() > 5 && s.substr(s.size() - 5) == ".json" || fs::exists(s);
}

void reject_decimal(const std::string& s) {
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos || s.find('E') != std::string::npos)
    throw Failure{"rationals must be given as p/q, got \"" + s + "\""};
}

Handle load(const Input& in, std::optional<std::string>& test_f) {
  cgf_function* out = nullptr;
  if (is_file_input(in.source)) {
    if (!in.params.empty()) throw Failure{"--param applies to compendium functions only"};
    check(cgf_function_from_file(in.source.c_str(), &out));
    test_f = in.f;
    return handle(out);
  }
  json params = json::object();
  if (in.f) {
    reject_decimal(*in.f);
    params["f"] = *in.f;
  }
  for (const auto& p : in.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw Failure{"--param expects name=value, got \"" + p + "\""};
    std::string v = p.substr(eq + 1);
    reject_decimal(v);
    params[p.substr(0, eq)] = v;
  }
  check(cgf_compendium(in.source.c_str(), params.dump().c_str(), &out));
  return handle(out);
}

void print_lines(const json& a) {
  for (const auto& l : a) std::cout << l.get<std::string>() << "\n";
}

std::string interval_str(const json& iv) {
  const auto a = iv[0].get<std::string>(), b = iv[1].get<std::string>();
  return a == b ? "{" + a + "}" : "[" + a + ", " + b + "]";
}

std::string components_str(const json& comp, bool closed) {
  std::string s;
  for (const auto& p : comp) {
    if (!s.empty()) s += " U ";
    s += closed ? interval_str(p) : "(" + p[0].get<std::string>() + ", " + p[1].get<std::string>() + ")";
  }
  return s;
}

fs::path output_dir() {
  if (const char* d = std::getenv("CGF_OUTPUT_DIR"); d && *d) return d;
  return fs::current_path();
}

void write_file(const fs::path& p, const std::string& content) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Failure{"cannot write " + p.string()};
  out << content;
}

std::string stem_of(const std::string& source) {
  return is_file_input(source) ? fs::path(source).stem().string() : source;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cut-generating functions of the 1-row infinite group problem"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured JSON output");

  Input in;
  std::string x, side = "value", kind, out_path, proba = "1";
  long lambda = -1, oversampling = 0, order = 0;
  int size = 600, xgrid = 10, ygrid = 10;
  bool fail_fast = false, no_symmetry = false;
  std::uint64_t seed = 0;

  auto* list = app.add_subcommand("list", "list the compendium with sourcing status");
  auto* show = app.add_subcommand("show", "print breakpoints, limits and slopes");
  auto* eval = app.add_subcommand("eval", "evaluate at a rational point");
  auto* minimality = app.add_subcommand("minimality", "minimality test");
  auto* extremality = app.add_subcommand("extremality", "extremality test");
  auto* covered = app.add_subcommand("covered", "connected covered components");
  auto* faces = app.add_subcommand("faces", "additive faces of the complex");
  auto* merit = app.add_subcommand("merit", "merit index");
  auto* restrict_ = app.add_subcommand("restrict", "restrict to a finite cyclic group");
  auto* interpolate = app.add_subcommand("interpolate", "interpolate a discrete function");
  auto* transform = app.add_subcommand("transform", "automorphism or multiplicative homomorphism");
  auto* random = app.add_subcommand("random", "random piecewise linear function");
  auto* plot = app.add_subcommand("plot", "write SVG diagrams");

  for (auto* c : {show, eval, minimality, extremality, covered, faces, merit, restrict_, interpolate, transform, plot})
    add_input(c, in);
  for (auto* c : app.get_subcommands({})) c->add_flag("--json", as_json, "structured JSON output");
  eval->add_option("--x", x, "point as p/q")->required();
  eval->add_option("--side", side, "value, right or left")->check(CLI::IsMember({"value", "right", "left"}));
  minimality->add_flag("--fail-fast", fail_fast, "stop at the first violation");
  restrict_->add_option("--oversampling", oversampling, "refine the grid by this factor")->check(CLI::PositiveNumber);
  restrict_->add_option("--order", order, "group order")->check(CLI::PositiveNumber);
  restrict_->add_option("--out", out_path, "write the discrete function JSON here");
  interpolate->add_option("--out", out_path, "write the function JSON here");
  transform->add_option("--kind", kind, "automorphism or multiplicative_homomorphism")
      ->check(CLI::IsMember({"automorphism", "multiplicative_homomorphism"}))
      ->default_val("automorphism");
  transform->add_option("--lambda", lambda, "integer factor")->default_val(-1);
  transform->add_option("--out", out_path, "write the function JSON here");
  random->add_option("--xgrid", xgrid, "breakpoint grid (1/xgrid)Z");
  random->add_option("--ygrid", ygrid, "value grid (1/ygrid)Z");
  random->add_option("--proba", proba, "probability of continuity at a breakpoint, p/q");
  random->add_flag("--no-symmetry", no_symmetry, "do not enforce the symmetry condition");
  random->add_option("--seed", seed, "random seed");
  random->add_option("--out", out_path, "write the function JSON here");
  plot->add_option("--kind", kind, "function, 2d_cones, 2d_additive_faces, covered_steps or perturbation")
      ->default_val("function");
  plot->add_option("--size", size, "image size in pixels")->default_val(600);
  plot->add_option("--out", out_path, "output file (default: $CGF_OUTPUT_DIR/<name>_<kind>.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    std::optional<std::string> test_f;
    const char* tf = nullptr;
    auto emit_function = [&](cgf_function* fn) {
      Handle h = handle(fn);
      char* s = nullptr;
      check(cgf_function_to_json(h.get(), &s));
      std::string text = take(s) + "\n";
      if (!out_path.empty()) {
        write_file(out_path, text);
        std::cout << "wrote " << out_path << "\n";
      } else {
        std::cout << text;
      }
      return kExitYes;
    };

    if (list->parsed()) {
      char* s = nullptr;
      check(cgf_compendium_list(&s));
      json a = json::parse(take(s));
      if (as_json) {
        std::cout << a.dump(2) << "\n";
      } else {
        for (const auto& e : a) {
          std::string params;
          for (auto it = e["params"].begin(); it != e["params"].end(); ++it)
            params += (params.empty() ? "" : ", ") + it.key() + "=" + it.value().get<std::string>();
          std::cout << e["name"].get<std::string>() << "(" << params << ")  [" << e["status"].get<std::string>()
                    << "]  " << e["docstring"].get<std::string>() << "\n";
        }
      }
      return kExitYes;
    }

    if (random->parsed()) {
      reject_decimal(proba);
      cgf_function* fn = nullptr;
      check(cgf_random(xgrid, ygrid, proba.c_str(), no_symmetry ? 0 : 1, seed, &fn));
      return emit_function(fn);
    }

    Handle pi = load(in, test_f);
    if (test_f) {
      reject_decimal(*test_f);
      tf = test_f->c_str();
    }

    if (show->parsed()) {
      char* s = nullptr;
      check(cgf_summary(pi.get(), &s));
      json j = json::parse(take(s));
      if (as_json) {
        std::cout << j.dump(2) << "\n";
        return kExitYes;
      }
      std::cout << "kind: " << j["kind"].get<std::string>() << "\n";
      if (!j["f"].is_null()) std::cout << "f = " << j["f"].get<std::string>() << "\n";
      if (j["kind"] == "piecewise") {
        std::cout << "breakpoints: " << j["breakpoints"].dump() << "\n";
        std::cout << "limits (value, right, left):\n";
        for (size_t i = 0; i < j["breakpoints"].size(); ++i)
          std::cout << "  " << j["breakpoints"][i].get<std::string>() << ": " << j["limits"][i].dump() << "\n";
        std::cout << "slopes: " << j["slopes"].dump() << "\n";
        std::cout << "number of slopes: " << j["number_of_slopes"] << "\n";
        std::cout << "continuous: " << (j["continuous"].get<bool>() ? "yes" : "no") << "\n";
      } else {
        std::cout << "order: " << j["order"] << "\n";
        std::cout << "points: " << j["points"].dump() << "\n";
        std::cout << "values: " << j["values"].dump() << "\n";
      }
      return kExitYes;
    }

    if (eval->parsed()) {
      reject_decimal(x);
      int s = side == "right" ? 1 : (side == "left" ? -1 : 0);
      char* v = nullptr;
      check(cgf_eval(pi.get(), x.c_str(), s, &v));
      std::string value = take(v);
      if (as_json) {
        json j;
        j["x"] = x;
        j["side"] = side;
        j["value"] = value;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << value << "\n";
      }
      return kExitYes;
    }

    if (minimality->parsed()) {
      int ok = 0;
      char* s = nullptr;
      check(cgf_minimality(pi.get(), tf, fail_fast ? 1 : 0, &ok, &s));
      json j = json::parse(take(s));
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& v : j["violations"]) std::cout << "violation: " << v["text"].get<std::string>() << "\n";
        print_lines(j["log"]);
      }
      return ok ? kExitYes : kExitNo;
    }

    if (extremality->parsed()) {
      int ok = 0;
      char* s = nullptr;
      check(cgf_extremality(pi.get(), tf, &ok, &s));
      json j = json::parse(take(s));
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        print_lines(j["log"]);
        for (const auto& n : j["notes"]) std::cout << "note: " << n.get<std::string>() << "\n";
        if (j.contains("epsilon")) std::cout << "perturbation epsilon = " << j["epsilon"].get<std::string>() << "\n";
      }
      return ok ? kExitYes : kExitNo;
    }

    if (covered->parsed()) {
      char* s = nullptr;
      check(cgf_covered(pi.get(), &s));
      json j = json::parse(take(s));
      const bool full = j["uncovered"].empty();
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        const bool closed = j["closed"].get<bool>();
        for (size_t i = 0; i < j["components"].size(); ++i)
          std::cout << "C" << i + 1 << " = " << components_str(j["components"][i], closed) << "\n";
        if (full) {
          std::cout << "All intervals are covered (or connected-to-covered). " << j["components"].size()
                    << " components.\n";
        } else {
          std::string u;
          for (const auto& iv : j["uncovered"]) u += (u.empty() ? "" : ", ") + interval_str(iv);
          std::cout << "Uncovered intervals: " << u << "\n";
        }
      }
      return full ? kExitYes : kExitNo;
    }

    if (faces->parsed()) {
      char* s = nullptr;
      check(cgf_additive_faces(pi.get(), &s));
      json j = json::parse(take(s));
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& F : j) {
          if (!F["maximal"].get<bool>()) continue;
          std::cout << "F(" << interval_str(F["I"]) << ", " << interval_str(F["J"]) << ", " << interval_str(F["K"])
                    << ")  dim " << F["dimension"];
          if (F.contains("edge_kind")) std::cout << " " << F["edge_kind"].get<std::string>();
          std::cout << "\n";
        }
      }
      return kExitYes;
    }

    if (merit->parsed()) {
      char* s = nullptr;
      check(cgf_merit(pi.get(), &s));
      std::string v = take(s);
      if (as_json) {
        json j;
        j["merit_index"] = v;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << v << "\n";
      }
      return kExitYes;
    }

    if (restrict_->parsed()) {
      cgf_function* fn = nullptr;
      check(cgf_restrict(pi.get(), tf, oversampling, order, &fn));
      return emit_function(fn);
    }

    if (interpolate->parsed()) {
      cgf_function* fn = nullptr;
      check(cgf_interpolate(pi.get(), &fn));
      return emit_function(fn);
    }

    if (transform->parsed()) {
      cgf_function* fn = nullptr;
      check(cgf_transform(pi.get(), kind.c_str(), lambda, &fn));
      return emit_function(fn);
    }

    if (plot->parsed()) {
      char** frames = nullptr;
      size_t n = 0;
      check(cgf_plot(pi.get(), kind.c_str(), size, &frames, &n));
      std::vector<std::string> docs(frames, frames + n);
      cgf_strings_free(frames, n);
      fs::path base = out_path.empty() ? output_dir() / (stem_of(in.source) + "_" + kind + ".svg") : fs::path(out_path);
      json written = json::array();
      for (size_t i = 0; i < docs.size(); ++i) {
        fs::path p = base;
        if (docs.size() > 1) {
          char suffix[16];
          std::snprintf(suffix, sizeof suffix, "_%02zu", i);
          p = base.parent_path() / (base.stem().string() + suffix + base.extension().string());
        }
        write_file(p, docs[i]);
        written.push_back(p.string());
      }
      if (as_json) {
        json j;
        j["files"] = written;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& p : written) std::cout << "wrote " << p.get<std::string>() << "\n";
      }
      return kExitYes;
    }
  } catch (const Failure& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
