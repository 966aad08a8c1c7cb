#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <framespec/scenario.hpp>

using namespace framespec;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string minimal_doc() {
  return "[operator]\n"
         "kind = right_shift\n"
         "[function]\n"
         "kind = polynomial\n"
         "coefficients = 1, 1\n";
}

}  // namespace

TEST_CASE("a minimal scenario document fills every default") {
  const Scenario s = parse_scenario(minimal_doc());
  CHECK(s.operator_kind == "right_shift");
  CHECK(s.function_kind == "polynomial");
  REQUIRE(s.coefficients.size() == 2);
  CHECK(s.coefficients[0] == cx(1.0));
  CHECK(s.coefficients[1] == cx(1.0));
  CHECK(s.sizes == default_sweep_sizes());
  CHECK(s.tol == 1e-9);
  CHECK(s.decay_threshold == kDefaultDecayThreshold);
  CHECK(s.probe_tol == 0.05);
  CHECK(s.max_probe_size == 1600);
  CHECK(s.probe_boundary_points == 16);
  CHECK(s.probe_interior_points == 8);
  CHECK(s.series_eps == 1e-12);
  CHECK(s.format == "text");
  CHECK(s.csv_path.empty());
  CHECK(s.report_path.empty());
  CHECK_FALSE(s.verbose);
}

TEST_CASE("complex literals parse in every supported spelling") {
  auto p = [](const std::string& t) { return detail_sc::parse_complex(t); };
  REQUIRE(p("2").has_value());
  CHECK(*p("2") == cx(2.0, 0.0));
  CHECK(*p("-3.5") == cx(-3.5, 0.0));
  CHECK(*p("i") == cx(0.0, 1.0));
  CHECK(*p("-i") == cx(0.0, -1.0));
  CHECK(*p("+i") == cx(0.0, 1.0));
  CHECK(*p("2i") == cx(0.0, 2.0));
  CHECK(*p("1+2i") == cx(1.0, 2.0));
  CHECK(*p("1 - 2i") == cx(1.0, -2.0));
  CHECK(*p("-1.5e-3+2e+1i") == cx(-1.5e-3, 20.0));
  CHECK(*p("1e+5i") == cx(0.0, 1e5));
  CHECK(*p("0.25-0.75i") == cx(0.25, -0.75));

  CHECK_FALSE(p("").has_value());
  CHECK_FALSE(p("2+").has_value());
  CHECK_FALSE(p("i2").has_value());
  CHECK_FALSE(p("1+2").has_value());
  CHECK_FALSE(p("--2i").has_value());
  CHECK_FALSE(p("nan").has_value());
  CHECK_FALSE(p("inf+2i").has_value());
}

TEST_CASE("every problem in a broken document is reported at once") {
  const std::string doc =
      "[operator]\n"
      "kind = twisty\n"
      "[function]\n"
      "kind = polynomial\n"
      "coefficients = 1, bogus\n"
      "radius = 2\n"
      "[analysis]\n"
      "sizes = 100, 50\n"
      "tol = -1\n"
      "[shipping]\n"
      "box = big\n";
  try {
    parse_scenario(doc);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK_THAT(msg, ContainsSubstring("\"twisty\" is not supported"));
    CHECK_THAT(msg, ContainsSubstring("bogus"));
    CHECK_THAT(msg, ContainsSubstring("function.radius only applies to custom_series"));
    CHECK_THAT(msg, ContainsSubstring("analysis.sizes not increasing"));
    CHECK_THAT(msg, ContainsSubstring("analysis.tol must be positive"));
    CHECK_THAT(msg, ContainsSubstring("unknown section [shipping]"));
  }
}

TEST_CASE("unknown and duplicate keys are named in the error") {
  CHECK_THROWS_WITH(parse_scenario(minimal_doc() + "flavor = mild\n"),
                    ContainsSubstring("unknown key function.flavor"));
  CHECK_THROWS_WITH(parse_scenario(minimal_doc() + "[analysis]\ntol = 1e-9\ntol = 1e-8\n"),
                    ContainsSubstring("duplicate key analysis.tol"));
  CHECK_THROWS_WITH(parse_scenario("kind = right_shift\n" + minimal_doc()),
                    ContainsSubstring("before any section"));
}

TEST_CASE("a custom series without a declared tail is rejected") {
  const std::string doc =
      "[operator]\n"
      "kind = right_shift\n"
      "[function]\n"
      "kind = custom_series\n"
      "coefficients = 1, 0.5, 0.25\n"
      "radius = 2\n";
  CHECK_THROWS_WITH(parse_scenario(doc), ContainsSubstring("tail bound required"));
}

TEST_CASE("a custom series builds a usable function with a certified tail") {
  const std::string doc =
      "[operator]\n"
      "kind = right_shift\n"
      "[function]\n"
      "kind = custom_series\n"
      "coefficients = 1, 0.5, 0.25\n"
      "radius = 2\n"
      "tail_coefficient = 1\n"
      "tail_ratio = 0.5\n";
  const Scenario s = parse_scenario(doc);
  const HoloFunction f = make_function(s);
  CHECK_FALSE(f.is_polynomial());
  CHECK(f.convergence_radius() == 2.0);
  CHECK(std::abs(f.evaluate(cx(1.0)) - cx(1.75)) < 1e-15);

  const auto tr = f.truncate(1.0, 1e-12);
  REQUIRE(tr.coeffs.size() >= 3);
  CHECK(tr.coeffs[1] == cx(0.5));
  CHECK(tr.tail_bound <= 1e-12);

  // a listed coefficient poking above the declared envelope is caught
  const std::string bad =
      "[operator]\n"
      "kind = right_shift\n"
      "[function]\n"
      "kind = custom_series\n"
      "coefficients = 1, 1\n"
      "radius = 2\n"
      "tail_coefficient = 1\n"
      "tail_ratio = 0.5\n";
  CHECK_THROWS_WITH(parse_scenario(bad), ContainsSubstring("exceeds the declared tail envelope"));

  // a declared radius past the envelope's reach is caught
  const std::string far =
      "[operator]\n"
      "kind = right_shift\n"
      "[function]\n"
      "kind = custom_series\n"
      "coefficients = 1\n"
      "radius = 3\n"
      "tail_coefficient = 1\n"
      "tail_ratio = 0.5\n";
  CHECK_THROWS_WITH(parse_scenario(far), ContainsSubstring("function.radius exceeds"));
}

TEST_CASE("toeplitz entries build the matching operator") {
  const std::string doc =
      "[operator]\n"
      "kind = toeplitz\n"
      "entries = 0:1, 1:1, 2:0.5i\n"
      "[function]\n"
      "kind = polynomial\n"
      "coefficients = 0, 1\n";
  const Scenario s = parse_scenario(doc);
  REQUIRE(s.toeplitz_entries.size() == 3);
  CHECK(s.toeplitz_entries.at(2) == cx(0.0, 0.5));
  const OperatorModel t = make_operator(s);
  CHECK(t.describe() ==
        OperatorModel::toeplitz({{0, cx(1.0)}, {1, cx(1.0)}, {2, cx(0.0, 0.5)}}).describe());
  CHECK_FALSE(t.adjoint_ap_fills_spectrum());

  // bands on both sides of the diagonal are rejected when the model is built
  const std::string mixed =
      "[operator]\n"
      "kind = toeplitz\n"
      "entries = 1:1, -1:1\n"
      "[function]\n"
      "kind = exp\n";
  CHECK_THROWS_WITH(make_operator(parse_scenario(mixed)),
                    ContainsSubstring("one sign only"));

  CHECK_THROWS_WITH(parse_scenario("[operator]\nkind = toeplitz\n[function]\nkind = exp\n"),
                    ContainsSubstring("operator.entries is required"));
  CHECK_THROWS_WITH(
      parse_scenario(
          "[operator]\nkind = toeplitz\nentries = 0:1, 0:2\n[function]\nkind = exp\n"),
      ContainsSubstring("duplicate offset 0"));
}

TEST_CASE("diagonal and weighted shift scenarios build certified models") {
  const std::string diag =
      "[operator]\n"
      "kind = diagonal\n"
      "tail = reciprocal\n"
      "offset = 1\n"
      "[function]\n"
      "kind = polynomial\n"
      "coefficients = 0, 1\n";
  CHECK(make_operator(parse_scenario(diag)).adjoint_ap_fills_spectrum());

  const std::string ws =
      "[operator]\n"
      "kind = weighted_shift\n"
      "prefix = 0.5\n"
      "tail = geometric\n"
      "first = 0.5\n"
      "ratio = 0.5\n"
      "[function]\n"
      "kind = polynomial\n"
      "coefficients = 0, 1\n";
  CHECK(make_operator(parse_scenario(ws)).adjoint_ap_fills_spectrum());

  // constant weights do not tend to zero, so the certificate is withheld
  const std::string plain =
      "[operator]\n"
      "kind = weighted_shift\n"
      "tail = constant\n"
      "value = 1\n"
      "[function]\n"
      "kind = polynomial\n"
      "coefficients = 0, 1\n";
  CHECK_FALSE(make_operator(parse_scenario(plain)).adjoint_ap_fills_spectrum());

  CHECK_THROWS_WITH(parse_scenario("[operator]\nkind = diagonal\ntail = geometric\nfirst = 1\n"
                                   "ratio = 1.5\n[function]\nkind = exp\n"),
                    ContainsSubstring("modulus below one"));
  CHECK_THROWS_WITH(parse_scenario("[operator]\nkind = right_shift\ntail = constant\nvalue = 1\n"
                                   "[function]\nkind = exp\n"),
                    ContainsSubstring("only applies to diagonal or weighted shift"));
}

TEST_CASE("carriage returns and full-line comments are tolerated") {
  const std::string doc =
      "# leading comment\r\n"
      "[operator]\r\n"
      "kind = right_shift\r\n"
      "; another comment\r\n"
      "[function]\r\n"
      "kind = polynomial\r\n"
      "coefficients = 1, 1\r\n";
  CHECK(parse_scenario(doc).operator_kind == "right_shift");
}

TEST_CASE("shipped scenarios parse and cover the advertised cases") {
  const auto& list = shipped_scenarios();
  REQUIRE(list.size() == 4);
  std::set<std::string> names;
  for (const auto& sc : list) {
    CHECK_FALSE(sc.summary.empty());
    names.insert(sc.name);
    const Scenario s = parse_scenario(sc.text);
    CHECK(s.operator_kind == "right_shift");
    CHECK(s.function_kind == "polynomial");
  }
  CHECK(names.size() == 4);

  const Scenario first = parse_scenario(list[0].text);
  REQUIRE(first.coefficients.size() == 2);
  CHECK(first.coefficients[0] == cx(1.0));
  CHECK(first.coefficients[1] == cx(1.0));

  const Scenario last = parse_scenario(list[3].text);
  REQUIRE(last.coefficients.size() == 2);
  CHECK(last.coefficients[0] == cx(-2.0));
  CHECK(last.coefficients[1] == cx(1.0));
}

TEST_CASE("arbitrary documents never crash the parser") {
  std::mt19937_64 rng(20260822ull);
  const std::string alphabet = "[]=#;:,.+-ieE0123456789abz \t\r\n\x01\xff";
  const std::vector<std::string> fragments = {
      "[operator]\n", "[function]\n",  "[analysis]\n",      "[output]\n",
      "kind = right_shift\n",          "kind = toeplitz\n", "kind = custom_series\n",
      "entries = ",  "coefficients = ", "sizes = ",         "tail = geometric\n",
      "ratio = ",    "1+2i",            "1e",               "--",
      "=",           "[",               "]",                "offset = 99999999999999999999\n"};
  for (int iter = 0; iter < 500; ++iter) {
    std::string doc;
    const int pieces = static_cast<int>(rng() % 12) + 1;
    for (int k = 0; k < pieces; ++k) {
      if (rng() % 2 == 0) {
        doc += fragments[rng() % fragments.size()];
      } else {
        const int m = static_cast<int>(rng() % 40);
        for (int i = 0; i < m; ++i) doc += alphabet[rng() % alphabet.size()];
      }
    }
    try {
      (void)parse_scenario(doc);
    } catch (const ValidationError&) {
      // malformed documents must fail with the structured error, nothing else
    }
  }
  SUCCEED("parser survived 500 arbitrary documents");
}

TEST_CASE("shipped scenario files on disk match the embedded documents") {
  const std::string dir = FRAMESPEC_SCENARIO_DIR;
  for (const auto& sc : shipped_scenarios()) {
    const std::string path = dir + "/" + sc.name + ".ini";
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == sc.text);
  }
}
