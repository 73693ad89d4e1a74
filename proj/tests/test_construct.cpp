#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quadrank/construct.hpp"

using namespace quadrank;

namespace {

void check_certified(const ConstructionResult& res, int r) {
  CHECK(validate(res.surface).valid());
  const auto report = analyze(res.surface);
  CHECK(report.exact);
  CHECK(report.rank_lower == r);
  CHECK(report.rank_upper == r);
  CHECK(report.S1 == res.certificate.S1);
  // Six distinct rational roots, by brute force.
  CHECK(oracle::rational_roots_brute(disc_x(res.surface)).size() == 6);
  for (const auto& x : report.S1) {
    CHECK(oracle::rational_square(res.surface.A().eval(x)));
    CHECK_FALSE(res.surface.B().eval(x).is_zero());
  }
}

}  // namespace

TEST_CASE("base configuration reproduces the fixtures") {
  for (int r = 0; r <= 2; ++r) {
    ConstructionParams p;
    p.r = r;
    const auto res = construct_surface(p);
    CHECK(res.surface == fixture("W" + std::to_string(r)));
    CHECK(res.provenance.scheme == "symmetric-base");
    CHECK(res.provenance.beta == 2);
    CHECK(res.provenance.candidates == 0);
    check_certified(res, r);
  }
  ConstructionParams p;
  p.r = 2;
  const auto w2 = construct_surface(p);
  CHECK(w2.provenance.a == 6);
  CHECK(w2.provenance.s[2] == 24);  // -P(1) = 3 * 8 * 24 = 576
  CHECK(w2.provenance.s[1] == 30);
  CHECK(w2.surface.B() == Poly({30, 22, -30, 2}));
}

TEST_CASE("assembly") {
  const std::vector<Rational> v = {-5, -3, -2, 2, 3, 5};
  const std::array<Rational, 3> w = {-1, 0, 1};
  QuadraticSurface s;
  REQUIRE(assemble_surface(v, -1, w, {-24, 30, 24}, 6, 2, s));
  CHECK(s == fixture("W2"));
  CHECK_FALSE(assemble_surface(v, -1, w, {-24, 30, 25}, 6, 2, s));  // 25^2 != D(1)
  CHECK_FALSE(assemble_surface(v, -1, {0, 0, 1}, {30, 30, 24}, 6, 2, s));
  CHECK_FALSE(assemble_surface(v, -1, w, {-24, 30, 24}, 0, 2, s));
}

TEST_CASE("rank three from the seeded search") {
  ConstructionParams p;
  p.r = 3;
  p.seed = 1;
  const auto res = construct_surface(p);
  CHECK(res.provenance.scheme == "symmetric-search");
  CHECK(res.provenance.candidates <= p.budget);
  check_certified(res, 3);
  // Odd A: the values at v and -v have opposite signs.
  for (const auto& x : res.provenance.v) CHECK(res.surface.A().eval(-x) == -res.surface.A().eval(x));

  const auto again = construct_surface(p);
  CHECK(again.surface == res.surface);
  CHECK(again.provenance.to_json() == res.provenance.to_json());

  for (std::uint64_t seed : {2, 3, 99}) {
    p.seed = seed;
    try {
      check_certified(construct_surface(p), 3);
    } catch (const BudgetExhaustedError& e) {
      CHECK(e.candidates == p.budget);
    }
  }
}

TEST_CASE("rank four from the asymmetric search") {
  ConstructionParams p;
  p.r = 4;
  p.budget = 20000;
  const auto res = construct_surface(p);
  CHECK(res.provenance.scheme == "asymmetric-search");
  check_certified(res, 4);
}

TEST_CASE("budget exhaustion is reported and reproducible") {
  ConstructionParams p;
  p.r = 6;
  p.budget = 300;
  p.seed = 42;
  auto run = [&] {
    try {
      construct_surface(p);
    } catch (const BudgetExhaustedError& e) {
      return std::make_pair(e.candidates, e.seed);
    }
    return std::make_pair<std::uint64_t, std::uint64_t>(0, 0);
  };
  const auto first = run();
  CHECK(first.first == 300);
  CHECK(first.second == 42);
  CHECK(run() == first);
  p.r = 7;
  CHECK_THROWS_AS(construct_surface(p), std::invalid_argument);
}
