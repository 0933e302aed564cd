#include "cgf/compendium.hpp"
#include "cgf/extremality.hpp"
#include "cgf/json_io.hpp"
#include "cgf/minimality.hpp"
#include "cgf/transforms.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

using namespace cgf;
using oracle::R;
namespace fs = std::filesystem;

namespace {

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

// Points CGF_DATA_DIR at a scratch copy of the data directory for the lifetime of the object.
struct ScratchData {
  fs::path root;
  std::string saved;
  ScratchData() {
    root = fs::temp_directory_path() / ("cgf_data_" + std::to_string(std::random_device{}()));
    fs::create_directories(root);
    fs::copy(data_directory(), root, fs::copy_options::recursive);
    saved = data_directory();
    setenv("CGF_DATA_DIR", root.c_str(), 1);
  }
  ~ScratchData() {
    setenv("CGF_DATA_DIR", saved.c_str(), 1);
    fs::remove_all(root);
  }
};

}  // namespace

TEST_CASE("registry contents and sourcing status") {
  const auto& gj = compendium_entry("gj_2_slope");
  CHECK(gj.params.size() == 2);
  CHECK(gj.params[0].name == "f");
  CHECK(gj.params[1].name == "lambda_1");
  CHECK_FALSE(gj.citation.empty());
  CHECK(gj.status == EntryStatus::sourced);
  CHECK(compendium_entry("gmic").status == EntryStatus::builtin);
  CHECK(compendium_entry("equiv5_random_discont_1").status == EntryStatus::builtin);
  int unsourced = 0;
  for (const auto& e : compendium_entries()) {
    if (e.status != EntryStatus::unsourced) continue;
    ++unsourced;
    CHECK(message_of([&] { construct(e.name); }).rfind("unsourced entry: " + e.name, 0) == 0);
  }
  CHECK(unsourced >= 1);
  CHECK_THROWS_AS(compendium_entry("no_such_function"), std::invalid_argument);
  CHECK_THROWS_AS(construct("gmic", {{"lambda", R(1, 2)}}), std::invalid_argument);
}

TEST_CASE("named constructors") {
  CHECK(gmic(R(4, 5)).end_points() == std::vector<Rational>{0, R(4, 5), 1});
  CHECK(gmic(R(4, 5))(R(4, 5)) == 1);
  auto half = gmic(R(1, 2));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    Rational x = oracle::random_rational(rng);
    CHECK(half(x) + half(R(1, 2) - x) == 1);
  }
  for (int i = 0; i < 10; ++i) {
    Rational f = oracle::random_unit(rng);
    CHECK(gomory_fractional(f)(f) == 1);
    CHECK(gomory_fractional(f).limit(1, -1) == 1 / f);
  }
  CHECK(construct("gmic", {{"f", R(1, 5)}}) == gmic(R(1, 5)));
  CHECK_THROWS_WITH_AS(gmic(R(3, 2)), doctest::Contains("Bad parameters"), std::invalid_argument);
  CHECK_THROWS_AS(gj_2_slope(R(3, 5), R(2)), std::invalid_argument);
  CHECK_THROWS_AS(drlm_backward_3_slope(R(1, 12), R(1, 24)), std::invalid_argument);
  CHECK(equiv5_random_discont_1().f() == R(1, 5));
}

TEST_CASE("sourced entries reproduce their pinned data") {
  for (const auto& e : sourced_entries()) {
    if (e.status != EntryStatus::sourced) continue;
    fs::path prov = fs::path(data_directory()) / "compendium" / (e.name + ".provenance.json");
    REQUIRE(fs::exists(prov));
    json p = json::parse(std::ifstream(prov));
    CHECK(p.at("name") == e.name);
    CHECK_FALSE(p.at("citation").get<std::string>().empty());
    std::ifstream in(fs::path(data_directory()) / "compendium" / p.at("file").get<std::string>(), std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(sha256_hex(bytes) == p.at("sha256").get<std::string>());
    json data = json::parse(bytes);
    if (data.contains("instances")) {
      for (const auto& inst : data.at("instances")) {
        ParamMap params;
        for (const auto& [k, v] : inst.at("params").items()) params[k] = rational_from_json(v);
        CHECK(construct(e.name, params) == piecewise_from_json(inst.at("function")));
      }
    } else {
      CHECK(construct(e.name) == piecewise_from_json(data));
    }
  }
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("tampered and missing data files are rejected") {
  ScratchData scratch;
  fs::path dir = scratch.root / "compendium";
  {
    std::ofstream out(dir / "hildebrand_discont_3_slope_1.json", std::ios::app);
    out << " ";
  }
  CHECK(message_of([] { hildebrand_discont_3_slope_1(); }).rfind("checksum mismatch", 0) == 0);
  fs::remove(dir / "not_minimal_2.provenance.json");
  CHECK(message_of([] { not_minimal_2(); }).rfind("unsourced entry: not_minimal_2", 0) == 0);
  CHECK(gmic(R(4, 5)).end_points().size() == 3);
}

TEST_CASE("multiplicative homomorphism") {
  auto g = gmic(R(4, 5));
  CHECK(multiplicative_homomorphism(g, 1) == g);
  auto d = multiplicative_homomorphism(g, 2);
  CHECK(d.end_points() == std::vector<Rational>{0, R(2, 5), R(1, 2), R(9, 10), 1});
  CHECK(d.f() == R(2, 5));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 40; ++i) {
    Rational x = oracle::random_rational(rng);
    CHECK(d(x) == g(2 * x));
  }
  CHECK(multiplicative_homomorphism(g, -1) == automorphism(g, -1));
  CHECK_THROWS_AS(multiplicative_homomorphism(g, 0), std::invalid_argument);
}

TEST_CASE("multiplicative homomorphism preserves minimality verdicts") {
  std::vector<PiecewiseFunction> fns = {gmic(R(4, 5)), gmic(R(1, 3)), gj_2_slope(), drlm_backward_3_slope()};
  for (const auto& pi : oracle::random_functions(30, 6, 1, 50000)) fns.push_back(pi);
  int minimal = 0;
  for (const auto& pi : fns) {
    bool m = minimality_test(pi).is_minimal;
    minimal += m;
    for (long lambda : {2L, 3L, -1L, -2L}) {
      PiecewiseFunction t = pi;
      try {
        t = multiplicative_homomorphism(pi, lambda);
      } catch (const std::invalid_argument&) {
        // No f' with value 1 exists; the image cannot be minimal.
        CHECK_FALSE(m);
        continue;
      }
      CHECK(minimality_test(t).is_minimal == m);
      if (lambda == 2) CHECK(minimality_test(multiplicative_homomorphism(t, 3)).is_minimal == m);
    }
  }
  CHECK(minimal > 4);
}

TEST_CASE("automorphisms") {
  auto g = gmic(R(4, 5));
  CHECK(automorphism(g, 1) == g);
  CHECK(automorphism(automorphism(g, -1), -1) == g);
  CHECK(automorphism(g, -1).f() == R(1, 5));
  auto h = hildebrand_discont_3_slope_1();
  CHECK(automorphism(automorphism(h, -1), -1) == h);
  CHECK_THROWS_AS(automorphism(g, 2), std::invalid_argument);

  auto r = restrict_to_finite_group(g);
  auto a = automorphism(r, 2);
  CHECK(minimality_test(a).is_minimal);
  CHECK(a(R(1, 5)) == r(R(2, 5)));
  CHECK(automorphism(r, 1) == r);
  CHECK_THROWS_AS(automorphism(restrict_to_finite_group(g, {std::nullopt, 2, std::nullopt}), 2), std::invalid_argument);
}

TEST_CASE("restriction to a finite group") {
  auto g = gmic(R(4, 5));
  auto r = restrict_to_finite_group(g);
  CHECK(r.order() == 5);
  CHECK(r.values() == std::vector<Rational>{0, R(1, 4), R(1, 2), R(3, 4), 1, 0});
  CHECK(r.f() == R(4, 5));
  CHECK(r == DiscreteFunction::from_points_and_values({0, R(1, 5), R(2, 5), R(3, 5), R(4, 5), 1},
                                                      {0, R(1, 4), R(1, 2), R(3, 4), 1, 0}, R(4, 5)));
  CHECK(restrict_to_finite_group(g, {std::nullopt, 3, std::nullopt}).order() == 15);
  CHECK(restrict_to_finite_group(g, {std::nullopt, std::nullopt, 10}).order() == 10);
  CHECK_THROWS_AS(restrict_to_finite_group(g, {std::nullopt, std::nullopt, 3}), std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_finite_group(g, {std::nullopt, 0, std::nullopt}), std::invalid_argument);
}

TEST_CASE("restriction preserves minimality of continuous functions") {
  int checked = 0;
  for (const auto& pi : oracle::random_functions(60, 8, 1, 60000)) {
    auto r = restrict_to_finite_group(pi);
    CHECK(minimality_test(r).is_minimal == minimality_test(pi).is_minimal);
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("interpolation") {
  auto g = gmic(R(4, 5));
  auto i = interpolate_to_infinite_group(restrict_to_finite_group(g, {std::nullopt, std::nullopt, 5}));
  for (const auto& b : i.end_points()) CHECK((b * 5).is_integer());
  CHECK(i(R(4, 5)) == 1);
  CHECK(i == g);
  auto z = interpolate_to_infinite_group(DiscreteFunction::from_points_and_values({0, 1}, {0, 0}));
  CHECK(z == PiecewiseFunction::from_breakpoints_and_values({0, 1}, {0, 0}));
  for (const auto& pi : oracle::random_functions(20, 8, 1, 70000)) {
    auto d = restrict_to_finite_group(pi);
    CHECK(restrict_to_finite_group(interpolate_to_infinite_group(d), {d.f(), std::nullopt, d.order()}) == d);
  }
}
