#include <doctest.h>

#include <cmath>
#include <string>

#include "papm/errors.hpp"
#include "papm/fixtures.hpp"
#include "papm/manifold.hpp"

using papm::load_spec;

namespace {

// Minimal valid 2d chart used as a template for the error cases.
std::string chart(const std::string& dim, const std::string& metric,
                  const std::string& structure, const std::string& extra = "") {
  return "{\"dimension\": " + dim +
         ", \"coordinates\": [\"x1\", \"x2\"], \"metric\": " + metric +
         ", \"structure\": " + structure +
         ", \"points\": [[0.5, 0.25]]" + extra + "}";
}

const std::string kId = R"([["1", "0"], ["0", "1"]])";
const std::string kRefl = R"([["1", "0"], ["0", "-1"]])";

} // namespace

TEST_CASE("loading a built-in chart populates every field") {
  papm::ManifoldSpec s = load_spec(papm::fixture("flat_product").json);
  CHECK(s.dimension == 4);
  REQUIRE(s.coordinates.size() == 4);
  CHECK(s.coordinates[2] == "x3");
  REQUIRE(s.metric.size() == 4);
  REQUIRE(s.structure.size() == 4);
  CHECK(s.sample_points.size() == 2);
  CHECK(s.tolerance == doctest::Approx(1e-9));  // default applies
  CHECK(s.structure[2][2]->to_string() == "(-1)");
}

TEST_CASE("explicit tolerance is honored and validated") {
  papm::ManifoldSpec s =
      load_spec(chart("2", kId, kRefl, ", \"tolerance\": 1e-7"));
  CHECK(s.tolerance == doctest::Approx(1e-7));
  CHECK_THROWS_AS(load_spec(chart("2", kId, kRefl, ", \"tolerance\": 0")),
                  papm::FormatError);
  CHECK_THROWS_AS(load_spec(chart("2", kId, kRefl, ", \"tolerance\": -1e-9")),
                  papm::FormatError);
}

TEST_CASE("malformed chart files are rejected with format errors") {
  CHECK_THROWS_AS(load_spec("not json"), papm::FormatError);
  CHECK_THROWS_AS(load_spec("[1, 2, 3]"), papm::FormatError);
  CHECK_THROWS_AS(load_spec("{}"), papm::FormatError);

  // odd dimension names the rule
  try {
    load_spec(
        R"({"dimension": 3, "coordinates": ["a", "b", "c"],
            "metric": [["1","0","0"],["0","1","0"],["0","0","1"]],
            "structure": [["1","0","0"],["0","1","0"],["0","0","1"]],
            "points": [[0, 0, 0]]})");
    FAIL("expected rejection of odd dimension");
  } catch (const papm::OddDimensionError& e) {
    CHECK(std::string(e.what()).find("even-dimensional manifold") !=
          std::string::npos);
  }

  // matrix shape mismatch
  CHECK_THROWS_AS(load_spec(chart("2", R"([["1", "0"]])", kRefl)),
                  papm::FormatError);
  CHECK_THROWS_AS(load_spec(chart("2", R"([["1"], ["0", "1"]])", kRefl)),
                  papm::FormatError);

  // duplicate and empty coordinate names
  CHECK_THROWS_AS(
      load_spec("{\"dimension\": 2, \"coordinates\": [\"x\", \"x\"], "
                "\"metric\": " + kId + ", \"structure\": " + kRefl +
                ", \"points\": [[0, 0]]}"),
      papm::FormatError);

  // wrong point length
  CHECK_THROWS_AS(
      load_spec("{\"dimension\": 2, \"coordinates\": [\"x1\", \"x2\"], "
                "\"metric\": " + kId + ", \"structure\": " + kRefl +
                ", \"points\": [[0, 0, 0]]}"),
      papm::FormatError);

  // no points at all
  CHECK_THROWS_AS(
      load_spec("{\"dimension\": 2, \"coordinates\": [\"x1\", \"x2\"], "
                "\"metric\": " + kId + ", \"structure\": " + kRefl +
                ", \"points\": []}"),
      papm::FormatError);
}

TEST_CASE("expression failures are wrapped with the matrix cell") {
  try {
    load_spec(chart("2", R"j([["1", "sin(q)"], ["0", "1"]])j", kRefl));
    FAIL("expected a wrapped parse failure");
  } catch (const papm::FormatError& e) {
    std::string msg = e.what();
    CHECK(msg.find("metric[0][1]") != std::string::npos);
    CHECK(msg.find("unknown identifier") != std::string::npos);
    CHECK(msg.find("position") != std::string::npos);
  }
  try {
    load_spec(chart("2", kId, R"([["1", ""], ["0", "-1"]])"));
    FAIL("expected a wrapped parse failure");
  } catch (const papm::FormatError& e) {
    CHECK(std::string(e.what()).find("structure[0][1]") != std::string::npos);
  }
}

TEST_CASE("validation measures each axiom separately") {
  double tol = 1e-9;

  papm::ManifoldSpec good = load_spec(chart("2", kId, kRefl));
  papm::ValidationReport v =
      papm::validate_structure(good, good.sample_points[0], tol);
  CHECK(v.pass);
  CHECK(v.p_squared == doctest::Approx(0.0));
  CHECK(v.min_eigenvalue == doctest::Approx(1.0));

  // trace 2: identity structure
  papm::ManifoldSpec tr = load_spec(chart("2", kId, kId));
  v = papm::validate_structure(tr, tr.sample_points[0], tol);
  CHECK_FALSE(v.pass);
  CHECK(v.trace == doctest::Approx(2.0));

  // not an involution
  papm::ManifoldSpec sq =
      load_spec(chart("2", kId, R"([["1", "1"], ["1", "-1"]])"));
  v = papm::validate_structure(sq, sq.sample_points[0], tol);
  CHECK_FALSE(v.pass);
  CHECK(v.p_squared > 0.1);

  // incompatible metric: reflection swaps axes but the metric is anisotropic
  papm::ManifoldSpec inc = load_spec(
      chart("2", R"([["2", "0"], ["0", "1"]])", R"([["0", "1"], ["1", "0"]])"));
  v = papm::validate_structure(inc, inc.sample_points[0], tol);
  CHECK_FALSE(v.pass);
  CHECK(v.compatibility == doctest::Approx(1.0));

  // metric loses positivity where x1 goes negative
  papm::ManifoldSpec neg = load_spec(
      "{\"dimension\": 2, \"coordinates\": [\"x1\", \"x2\"], "
      "\"metric\": [[\"x1\", \"0\"], [\"0\", \"1\"]], \"structure\": " +
      kRefl + ", \"points\": [[-1.0, 0.0]]}");
  v = papm::validate_structure(neg, neg.sample_points[0], tol);
  CHECK_FALSE(v.pass);
  CHECK(v.min_eigenvalue == doctest::Approx(-1.0));
}

TEST_CASE("frame evaluation carries exact first and second derivatives") {
  papm::ManifoldSpec s = load_spec(papm::fixture("sphere_patch").json);
  const double t = 0.7;
  papm::PointFrame f = papm::evaluate_frame(s, {t, 0.3});
  CHECK(f.n == 2);
  CHECK(f.metric.g.at(1, 1) == doctest::Approx(std::sin(t) * std::sin(t)));
  CHECK(f.metric.g_inv.at(1, 1) ==
        doctest::Approx(1.0 / (std::sin(t) * std::sin(t))));
  CHECK(f.dg.at(0, 1, 1) == doctest::Approx(std::sin(2.0 * t)));
  CHECK(f.ddg.at(0, 0, 1, 1) == doctest::Approx(2.0 * std::cos(2.0 * t)));
  CHECK(f.dg.at(1, 1, 1) == doctest::Approx(0.0));
  CHECK(f.P.at(0, 0) == doctest::Approx(1.0));
  CHECK(f.P_lower.at(1, 1) ==
        doctest::Approx(-std::sin(t) * std::sin(t)));
  CHECK(f.dP.max_abs() == doctest::Approx(0.0));

  papm::ManifoldSpec r = load_spec(papm::fixture("rotating_2d").json);
  papm::PointFrame fr = papm::evaluate_frame(r, {0.0, 0.0});
  CHECK(fr.dP.at(0, 0, 1) == doctest::Approx(1.0));
  CHECK(fr.dP.at(0, 1, 0) == doctest::Approx(1.0));
  CHECK(fr.dP.at(0, 0, 0) == doctest::Approx(0.0));
  CHECK(fr.ddP.at(0, 0, 0, 0) == doctest::Approx(-1.0));
}
