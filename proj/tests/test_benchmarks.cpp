#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpbsa/benchmarks.hpp"

using namespace lpbsa;

namespace {

struct Spot {
  const char* id;
  Genome x;
  double value;
};

// Values from an independent implementation of the standard definitions.
const std::vector<Spot> spots = {
    {"TF1", {1.0, 2.0, 3.0}, 14.0},
    {"TF2", {1.0, -2.0, 0.5}, 4.5},
    {"TF3", {1.0, 2.0, -4.0}, 11.0},
    {"TF4", {1.0, -3.0, 2.0}, 3.0},
    {"TF5", {0.5, -1.0, 2.0}, 260.5},
    {"TF6", {0.4, -0.6, 2.5}, 10.0},
    {"TF8", {100.0, -200.0, 300.0}, 554.1382399347829},
    {"TF9", {0.5, 1.2, -2.2}, 40.34966011250106},
    {"TF10", {1.0, -0.5, 2.0}, 5.972029779887098},
    {"TF11", {10.0, -20.0, 30.0}, 1.3498259985114276},
    {"TF12", {0.5, -12.0, 3.0}, 1618.7885921703912},
    {"TF13", {0.5, -6.0, 3.0}, 105.425},
    {"TF14", {0.0, 0.0}, 12.670505812885983},
    {"TF15", {0.25, 0.2, 0.1, 0.15}, 0.014057067372560995},
    {"TF16", {0.5, -0.5}, -0.1260416666666666},
    {"TF17", {1.0, 2.0}, 21.62763539206238},
    {"TF18", {0.5, 0.5}, 1210.6875},
    {"TF19", {0.5, 0.5, 0.5}, -0.6280220961750616},
};

}  // namespace

TEST_CASE("registry holds nineteen functions in order") {
  const auto& reg = bench::registry();
  REQUIRE(reg.size() == 19);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reg[i].id == "TF" + std::to_string(i + 1));
    CHECK(reg[i].scalable == (i < 13));
  }
  CHECK(bench::lookup("tf7").noisy);
  CHECK_THROWS_AS(bench::lookup("TF20"), InvalidInput);
  CHECK_THROWS_AS(bench::lookup(""), InvalidInput);
}

TEST_CASE("spot values agree with an independent implementation") {
  for (const auto& s : spots) {
    CAPTURE(s.id);
    CHECK(bench::evaluate_tf(s.id, s.x) == doctest::Approx(s.value).epsilon(1e-12));
  }
}

TEST_CASE("every function attains its documented optimum at its documented point") {
  for (const auto& f : bench::registry()) {
    if (f.noisy) continue;
    for (std::size_t d : f.scalable ? std::vector<std::size_t>{2, 10, 30} : std::vector<std::size_t>{0}) {
      const std::size_t dim = d ? d : f.default_dimension;
      CAPTURE(f.id);
      CAPTURE(dim);
      const auto x = f.optimum_location(dim);
      REQUIRE(x.size() == dim);
      const double tol = 1e-9 * std::max(1.0, std::abs(f.known_optimum(dim)));
      CHECK(std::abs(bench::evaluate_tf(f.id, x) - f.known_optimum(dim)) <= tol);
    }
  }
}

TEST_CASE("fixed-dimension optima carry the published constants") {
  CHECK(bench::lookup("TF14").known_optimum(2) == doctest::Approx(0.998).epsilon(1e-3));
  CHECK(bench::lookup("TF16").known_optimum(2) == doctest::Approx(-1.0316).epsilon(1e-4));
  CHECK(bench::lookup("TF17").known_optimum(2) == doctest::Approx(0.39789).epsilon(1e-5));
  CHECK(bench::lookup("TF18").known_optimum(2) == 3.0);
  CHECK(bench::lookup("TF19").known_optimum(3) == doctest::Approx(-3.8628).epsilon(1e-4));
}

TEST_CASE("all three Branin minima share the optimum value") {
  const double pi = std::numbers::pi;
  for (const Genome& x : {Genome{-pi, 12.275}, Genome{pi, 2.275}, Genome{9.42478, 2.475}}) {
    CHECK(bench::evaluate_tf("TF17", x) == doctest::Approx(5.0 / (4.0 * pi)).epsilon(1e-6));
  }
}

TEST_CASE("no random point beats the known optimum") {
  Rng rng(2718);
  for (const auto& f : bench::registry()) {
    const std::size_t dim = f.scalable ? 5 : f.default_dimension;
    const auto problem = f.problem(dim);
    Rng noise(1);
    for (int i = 0; i < 2000; ++i) {
      const auto x = problem.random_genome(rng);
      const double v = problem.evaluate(x, f.noisy ? &noise : nullptr);
      REQUIRE(v >= f.known_optimum(dim) - 1e-9);
    }
  }
}

TEST_CASE("noise is drawn from the supplied stream") {
  const Genome zero(30, 0.0);
  CHECK_THROWS_AS(bench::evaluate_tf("TF7", zero), InvalidInput);
  Rng a(4), b(4);
  const double v = bench::evaluate_tf("TF7", zero, &a);
  CHECK(v == bench::evaluate_tf("TF7", zero, &b));
  CHECK(v >= 0.0);
  CHECK(v < 1.0);
}

TEST_CASE("dimension and bound checks") {
  CHECK_THROWS_AS(bench::evaluate_tf("TF14", Genome{0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(bench::evaluate_tf("TF5", Genome{0}), InvalidInput);
  CHECK_THROWS_AS(bench::evaluate_tf("TF1", Genome{}), InvalidInput);
  CHECK_THROWS_AS(bench::evaluate_tf("TF1", Genome{101}), InvalidInput);
  CHECK_THROWS_AS(bench::lookup("TF19").problem(4), InvalidInput);
  CHECK(bench::lookup("TF1").problem().dimension() == 30);
  CHECK(bench::lookup("TF15").problem().dimension() == 4);
  const auto b = bench::lookup("TF17").bounds(2);
  CHECK(b[0] == Bounds{-5, 10});
  CHECK(b[1] == Bounds{0, 15});
}
