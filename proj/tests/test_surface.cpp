#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quadrank/error.hpp"
#include "quadrank/surface.hpp"

using namespace quadrank;

namespace {
const Poly T = Poly::x();
const Poly W2_C = Poly({-1320, 955, -120, 5}) * Rational(1, 24);
}  // namespace

TEST_CASE("fixtures are what they claim") {
  const Poly B({30, 22, -30, 2});
  const Poly cubic({0, -1, 0, 1});
  const Poly C0({-1320, 955, -120, 5});
  const Poly D({900, 0, -361, 0, 38, 0, -1});
  CHECK(D == -(Poly({-4, 0, 1}) * Poly({-9, 0, 1}) * Poly({-25, 0, 1})));
  struct Case { const char* name; long a; long c_den; };
  for (const Case& c : {Case{"W0", 1, 4}, Case{"W1", 30, 120}, Case{"W2", 6, 24}}) {
    const auto s = fixture(c.name);
    CHECK(s.A() == Rational(c.a) * cubic);
    CHECK(s.B() == B);
    CHECK(s.C() == C0 * Rational(1, c.c_den));
    // Independent expansion of B^2 - 4AC, coefficient by coefficient.
    std::vector<Rational> expand(7);
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= 3; ++j)
        expand[static_cast<std::size_t>(i + j)] += B.coeff(i) * B.coeff(j) - Rational(4) * s.A().coeff(i) * s.C().coeff(j);
    CHECK(Poly(expand) == D);
    CHECK(disc_x(s) == D);
  }
}

TEST_CASE("views") {
  const auto g1 = fixture("G1");
  CHECK(g1.A() == Poly({0, -1, 0, 1}));
  CHECK(g1.B() == Poly({1}));
  CHECK(g1.C() == Poly({0, 0, 0, 1}));
  const auto v = views(g1);
  CHECK(v.a[3] == Poly({1, 0, 1}));
  CHECK(v.a[2].is_zero());
  CHECK(v.a[1] == Poly({0, 0, -1}));
  CHECK(v.a[0] == Poly({0, 1}));

  QuadraticSurface corner;
  corner.coeff[3][2] = 1;
  CHECK(corner.A() == Poly({0, 0, 0, 1}));
  CHECK(corner.B().is_zero());
  CHECK(corner.C().is_zero());

  std::mt19937_64 g(1);
  for (int i = 0; i < 200; ++i) {
    const auto s = oracle::random_surface(g);
    const auto vw = views(s);
    CHECK(QuadraticSurface::from_abc(vw.A, vw.B, vw.C) == s);
    CHECK(QuadraticSurface::from_rows(vw.a) == s);
  }
}

TEST_CASE("discriminant in x") {
  CHECK(disc_x(fixture("G1")) == Poly({1, 0, 0, 0, 4, 0, -4}));
  QuadraticSurface corner;
  corner.coeff[3][2] = 1;
  CHECK(disc_x(corner).is_zero());

  std::mt19937_64 g(2);
  for (int i = 0; i < 100; ++i) {
    const auto s = oracle::random_surface(g);
    const Rational lead = s.coeff[3][1] * s.coeff[3][1] - Rational(4) * s.coeff[3][2] * s.coeff[3][0];
    CHECK(disc_x(s).coeff(6) == lead);
  }
}

TEST_CASE("short Weierstrass model") {
  const auto w = weierstrass(fixture("G1"));
  CHECK(w.p == Poly({0, 0, -1, 0, -1}));
  CHECK(w.p == -(T.pow(4)) - T * T);
  CHECK(w.q == T * Poly({1, 0, 1}).pow(2));

  QuadraticSurface s;
  s.coeff[3][0] = 1;
  s.coeff[1][0] = 5;
  s.coeff[0][0] = 7;
  CHECK(weierstrass(s).p == Poly({5}));
  CHECK(weierstrass(s).q == Poly({7}));

  QuadraticSurface t;
  t.coeff[3][0] = 1;
  t.coeff[2][0] = 3;
  CHECK(weierstrass(t).p == Poly({-3}));
  CHECK(weierstrass(t).q == Poly({2}));

  QuadraticSurface zero_lead;
  zero_lead.coeff[0][0] = 1;
  CHECK_THROWS_AS(weierstrass(zero_lead), Error);
}

TEST_CASE("discriminant in T") {
  const Poly d = delta_T(fixture("G1"));
  CHECK(d.degree() == 12);
  CHECK(d.coeff(12) == -4);

  QuadraticSurface s;
  s.coeff[3][0] = 3;
  s.coeff[1][0] = 2;
  CHECK(delta_T(s) == Poly({Rational(9) * Rational(4) * Rational(8) * Rational(3)}));

  std::mt19937_64 g(3);
  for (int i = 0; i < 100; ++i) {
    const auto r = oracle::random_surface(g);
    const auto v = views(r);
    CHECK(delta_T(r) + v.a[3] * v.a[3] * oracle::classical_disc(v.a[3], v.a[2], v.a[1], v.a[0]) == Poly());
  }
}

TEST_CASE("fiber at infinity") {
  const auto g1 = fiber_infinity(fixture("G1"));
  CHECK(g1.cubic == Poly({0, -1, 0, 1}));
  CHECK(g1.elliptic);
  QuadraticSurface corner;
  corner.coeff[3][2] = 1;
  CHECK_FALSE(fiber_infinity(corner).elliptic);
  const auto w2 = fiber_infinity(fixture("W2"));
  CHECK(w2.cubic == Poly({0, -6, 0, 6}));
  CHECK(w2.elliptic);
}

TEST_CASE("specialization") {
  const auto g1 = fixture("G1");
  auto sp = specialize(g1, 0);
  CHECK(sp.cubic == Poly({0, 0, 0, 1}));
  CHECK(sp.singular);
  sp = specialize(g1, 1);
  CHECK(sp.cubic == Poly({1, -1, 0, 2}));
  CHECK_FALSE(sp.singular);
  const auto w2 = fixture("W2");
  sp = specialize(w2, 0);
  CHECK(sp.cubic == W2_C);
  CHECK(sp.singular == (disc_cubic(W2_C) == 0));

  std::mt19937_64 g(4);
  for (int i = 0; i < 100; ++i) {
    const auto s = oracle::random_surface(g, 4, 2);
    const Rational t = oracle::small_rational(g, 4, 3);
    const auto f = specialize(s, t);
    CHECK(f.singular == delta_T(s).eval(t).is_zero());
    const auto v = views(s);
    CHECK(f.cubic == Poly({v.a[0].eval(t), v.a[1].eval(t), v.a[2].eval(t), v.a[3].eval(t)}));
  }
}

TEST_CASE("validation") {
  for (const char* name : {"G1", "W0", "W1", "W2"}) {
    const auto r = validate(fixture(name));
    CHECK_MESSAGE(r.valid(), name);
    CHECK(r.failures.empty());
  }
  const auto bad = validate(fixture("split_family"));
  CHECK_FALSE(bad.valid());
  CHECK_FALSE(bad.a3_irreducible);
  CHECK_FALSE(bad.infinity_fiber_elliptic);
  auto has = [&](const char* code) {
    return std::find(bad.failures.begin(), bad.failures.end(), code) != bad.failures.end();
  };
  CHECK(has("A3Reducible"));
  CHECK(has("InfinityFiberSingular"));
  CHECK(has("SplitFamily"));

  // a3 of degree 1.
  QuadraticSurface lin = fixture("G1");
  lin.coeff[3][2] = 0;
  CHECK(std::find(validate(lin).failures.begin(), validate(lin).failures.end(), "A3DegreeNot2") !=
        validate(lin).failures.end());
}

TEST_CASE("rationality criterion") {
  CHECK(rationality_criterion(weierstrass(fixture("G1"))));
  CHECK(rationality_criterion({T, Poly({1})}));
  CHECK_FALSE(rationality_criterion({Poly({2}), Poly({3})}));
  CHECK_THROWS_AS(rationality_criterion({Poly({-3}), Poly({2})}), Error);

  std::mt19937_64 g(5);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 60; ++i) {
    const auto s = oracle::random_surface(g);
    if (!validate(s).valid()) continue;
    ++checked;
    CHECK(rationality_criterion(weierstrass(s)));
  }
  CHECK(checked > 10);
}

TEST_CASE("integral model") {
  const auto w2 = fixture("W2");
  const auto m = integral_model(w2);
  CHECK(m.surface.is_integral());
  CHECK(m.scale == 12);  // lcd 24 divides 12^2
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m.surface.coeff[i][j] == Rational(144) * w2.coeff[i][j]);
  const auto g1 = integral_model(fixture("G1"));
  CHECK(g1.scale == 1);
}
