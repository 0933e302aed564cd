#include "cgf/cgf.h"

#include "cgf/compendium.hpp"
#include "cgf/extremality.hpp"
#include "cgf/json_io.hpp"
#include "cgf/render_svg.hpp"
#include "cgf/transforms.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

struct cgf_function {
  cgf::AnyFunction fn;
};

namespace {

thread_local std::string g_last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

bool starts_with(const std::string& s, const char* prefix) { return s.rfind(prefix, 0) == 0; }

template <class F>
cgf_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return CGF_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    if (starts_with(g_last_error, "unsupported case")) return CGF_ERR_UNSUPPORTED;
    if (starts_with(g_last_error, "cannot open")) return CGF_ERR_IO;
    return CGF_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    if (starts_with(g_last_error, "unsourced entry") || starts_with(g_last_error, "checksum mismatch"))
      return CGF_ERR_UNSOURCED;
    if (starts_with(g_last_error, "cannot open")) return CGF_ERR_IO;
    return CGF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CGF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return CGF_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string("null argument: ") + what);
}

const cgf::PiecewiseFunction& piecewise(const cgf_function* fn) {
  if (auto* p = std::get_if<cgf::PiecewiseFunction>(&fn->fn)) return *p;
  throw std::invalid_argument("this operation requires a piecewise function, not a discrete one");
}

std::optional<cgf::Rational> opt_rational(const char* s) {
  if (!s || !*s) return std::nullopt;
  return cgf::Rational::parse(s);
}

cgf_function* wrap(cgf::AnyFunction f) { return new cgf_function{std::move(f)}; }

}  // namespace

extern "C" {

const char* cgf_version(void) { return "1.0.0"; }

const char* cgf_status_name(cgf_status s) {
  switch (s) {
    case CGF_OK: return "ok";
    case CGF_ERR_NULL: return "null argument";
    case CGF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CGF_ERR_UNSUPPORTED: return "unsupported";
    case CGF_ERR_UNSOURCED: return "unsourced";
    case CGF_ERR_IO: return "io error";
    default: return "internal error";
  }
}

const char* cgf_last_error(void) { return g_last_error.c_str(); }

void cgf_string_free(char* s) { std::free(s); }

void cgf_strings_free(char** s, size_t n) {
  if (!s) return;
  for (size_t i = 0; i < n; ++i) std::free(s[i]);
  std::free(s);
}

#define CGF_REQUIRE(p)                              \
  do {                                              \
    if (!(p)) {                                     \
      g_last_error = "null argument: " #p;          \
      return CGF_ERR_NULL;                          \
    }                                               \
  } while (0)

cgf_status cgf_function_from_json(const char* json, cgf_function** out) {
  CGF_REQUIRE(json);
  CGF_REQUIRE(out);
  return guarded([&] {
    cgf::json j;
    try {
      j = cgf::json::parse(json);
    } catch (const cgf::json::parse_error& e) {
      throw std::invalid_argument(e.what());
    }
    *out = wrap(cgf::function_from_json(j));
  });
}

cgf_status cgf_function_from_file(const char* path, cgf_function** out) {
  CGF_REQUIRE(path);
  CGF_REQUIRE(out);
  return guarded([&] { *out = wrap(cgf::read_function_file(path)); });
}

cgf_status cgf_compendium(const char* name, const char* params_json, cgf_function** out) {
  CGF_REQUIRE(name);
  CGF_REQUIRE(out);
  return guarded([&] {
    cgf::ParamMap params;
    if (params_json && *params_json) {
      cgf::json j = cgf::json::parse(params_json);
      if (!j.is_object()) throw std::invalid_argument("parameters must be a JSON object");
      for (auto it = j.begin(); it != j.end(); ++it) params[it.key()] = cgf::rational_from_json(it.value());
    }
    *out = wrap(cgf::construct(name, params));
  });
}

cgf_status cgf_compendium_list(char** out_json) {
  CGF_REQUIRE(out_json);
  return guarded([&] {
    cgf::json a = cgf::json::array();
    for (const auto& e : cgf::compendium_entries()) {
      cgf::json j;
      j["name"] = e.name;
      j["status"] = cgf::entry_status_name(e.status);
      cgf::json ps = cgf::json::object();
      for (const auto& p : e.params) ps[p.name] = p.default_value.str();
      j["params"] = ps;
      j["docstring"] = e.docstring;
      j["citation"] = e.citation;
      j["expected"] = e.expected;
      a.push_back(j);
    }
    *out_json = dup(a.dump(2));
  });
}

cgf_status cgf_random(int xgrid, int ygrid, const char* continuous_proba, int symmetry, uint64_t seed,
                      cgf_function** out) {
  CGF_REQUIRE(out);
  return guarded([&] {
    cgf::RandomOptions o;
    o.xgrid = xgrid;
    o.ygrid = ygrid;
    if (continuous_proba) o.continuous_proba = cgf::Rational::parse(continuous_proba);
    o.symmetry = symmetry != 0;
    o.seed = seed;
    *out = wrap(cgf::random_piecewise_function(o));
  });
}

void cgf_function_free(cgf_function* fn) { delete fn; }

int cgf_function_is_discrete(const cgf_function* fn) {
  return fn && std::holds_alternative<cgf::DiscreteFunction>(fn->fn) ? 1 : 0;
}

cgf_status cgf_function_to_json(const cgf_function* fn, char** out_json) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(out_json);
  return guarded([&] { *out_json = dup(cgf::to_json(fn->fn).dump(2)); });
}

cgf_status cgf_eval(const cgf_function* fn, const char* x, int side, char** out_value) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(x);
  CGF_REQUIRE(out_value);
  return guarded([&] {
    cgf::Rational r = cgf::Rational::parse(x);
    if (auto* p = std::get_if<cgf::PiecewiseFunction>(&fn->fn)) {
      *out_value = dup(p->limit(r, side).str());
    } else {
      if (side != 0) throw std::invalid_argument("one-sided limits are undefined for discrete functions");
      *out_value = dup(std::get<cgf::DiscreteFunction>(fn->fn)(r).str());
    }
  });
}

cgf_status cgf_describe_point(const cgf_function* fn, const char* x, char** out_json) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(x);
  CGF_REQUIRE(out_json);
  return guarded([&] {
    const auto& pi = piecewise(fn);
    cgf::Rational r = cgf::Rational::parse(x);
    cgf::LimitTriple t = pi.limits_at(r);
    cgf::AffinePiece a = pi.which_function(r);
    cgf::json j;
    j["x"] = r.str();
    j["value"] = t.value.str();
    j["right"] = t.right.str();
    j["left"] = t.left.str();
    j["slope"] = a.slope.str();
    j["intercept"] = a.intercept.str();
    j["face"] = cgf::to_json(a.face);
    *out_json = dup(j.dump(2));
  });
}

cgf_status cgf_summary(const cgf_function* fn, char** out_json) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(out_json);
  return guarded([&] {
    cgf::json j = cgf::to_json(fn->fn);
    if (auto* p = std::get_if<cgf::PiecewiseFunction>(&fn->fn)) {
      j["continuous"] = p->is_continuous();
      j["number_of_slopes"] = p->number_of_slopes();
      cgf::json slopes = cgf::json::array();
      for (size_t i = 0; i < p->num_intervals(); ++i) slopes.push_back(p->slope(i).str());
      j["slopes"] = slopes;
    } else {
      j["order"] = std::get<cgf::DiscreteFunction>(fn->fn).order();
    }
    *out_json = dup(j.dump(2));
  });
}

cgf_status cgf_minimality(const cgf_function* fn, const char* f, int fail_fast, int* is_minimal, char** out_json) {
  CGF_REQUIRE(fn);
  return guarded([&] {
    cgf::MinimalityOptions o{opt_rational(f), fail_fast != 0};
    cgf::MinimalityReport r = std::visit([&](const auto& p) { return cgf::minimality_test(p, o); }, fn->fn);
    if (is_minimal) *is_minimal = r.is_minimal ? 1 : 0;
    if (out_json) *out_json = dup(cgf::to_json(r).dump(2));
  });
}

cgf_status cgf_extremality(const cgf_function* fn, const char* f, int* is_extreme, char** out_json) {
  CGF_REQUIRE(fn);
  return guarded([&] {
    cgf::ExtremalityReport r;
    if (auto* p = std::get_if<cgf::PiecewiseFunction>(&fn->fn)) {
      cgf::ExtremalityOptions o;
      o.f = opt_rational(f);
      r = cgf::extremality_test(*p, o);
    } else {
      r = cgf::extremality_test_discrete(std::get<cgf::DiscreteFunction>(fn->fn), opt_rational(f));
    }
    if (is_extreme) *is_extreme = r.is_extreme ? 1 : 0;
    if (out_json) *out_json = dup(cgf::to_json(r).dump(2));
  });
}

cgf_status cgf_covered(const cgf_function* fn, char** out_json) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(out_json);
  return guarded([&] { *out_json = dup(cgf::to_json(cgf::generate_covered_components(piecewise(fn))).dump(2)); });
}

cgf_status cgf_additive_faces(const cgf_function* fn, char** out_json) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(out_json);
  return guarded([&] { *out_json = dup(cgf::to_json(cgf::generate_additive_faces(piecewise(fn))).dump(2)); });
}

cgf_status cgf_merit(const cgf_function* fn, char** out_value) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(out_value);
  return guarded([&] { *out_value = dup(cgf::merit_index(piecewise(fn)).str()); });
}

cgf_status cgf_restrict(const cgf_function* fn, const char* f, long oversampling, long order, cgf_function** out) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(out);
  return guarded([&] {
    cgf::RestrictOptions o;
    o.f = opt_rational(f);
    if (oversampling != 0) o.oversampling = oversampling;
    if (order != 0) o.order = order;
    *out = wrap(cgf::restrict_to_finite_group(piecewise(fn), o));
  });
}

cgf_status cgf_interpolate(const cgf_function* fn, cgf_function** out) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(out);
  return guarded([&] {
    auto* d = std::get_if<cgf::DiscreteFunction>(&fn->fn);
    if (!d) throw std::invalid_argument("interpolation requires a discrete function");
    *out = wrap(cgf::interpolate_to_infinite_group(*d));
  });
}

cgf_status cgf_transform(const cgf_function* fn, const char* kind, long lambda, cgf_function** out) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(kind);
  CGF_REQUIRE(out);
  return guarded([&] {
    std::string k = kind;
    if (k == "automorphism") {
      *out = wrap(std::visit([&](const auto& p) { return cgf::AnyFunction(cgf::automorphism(p, lambda)); }, fn->fn));
    } else if (k == "multiplicative_homomorphism") {
      *out = wrap(cgf::multiplicative_homomorphism(piecewise(fn), lambda));
    } else {
      throw std::invalid_argument("unknown transform \"" + k + "\"");
    }
  });
}

cgf_status cgf_plot(const cgf_function* fn, const char* kind, int size, char*** out_frames, size_t* n_frames) {
  CGF_REQUIRE(fn);
  CGF_REQUIRE(kind);
  CGF_REQUIRE(out_frames);
  CGF_REQUIRE(n_frames);
  return guarded([&] {
    cgf::DiagramSpec spec;
    spec.kind = cgf::parse_plot_kind(kind);
    spec.size = size;
    std::vector<std::string> frames = cgf::render(piecewise(fn), spec);
    char** arr = static_cast<char**>(std::calloc(frames.size(), sizeof(char*)));
    if (!arr) throw std::bad_alloc();
    for (size_t i = 0; i < frames.size(); ++i) arr[i] = dup(frames[i]);
    *out_frames = arr;
    *n_frames = frames.size();
  });
}

}  // extern "C"
