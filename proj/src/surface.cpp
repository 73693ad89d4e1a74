#include "quadrank/surface.hpp"

#include "quadrank/error.hpp"
#include "quadrank/integer_factor.hpp"

namespace quadrank {

QuadraticSurface QuadraticSurface::from_abc(const Poly& A, const Poly& B, const Poly& C) {
  if (A.degree() > 3 || B.degree() > 3 || C.degree() > 3)
    throw Error(ErrorCode::WrongDegree, "A, B, C must have degree at most 3");
  QuadraticSurface s;
  for (int i = 0; i < 4; ++i) {
    s.coeff[i][0] = C.coeff(i);
    s.coeff[i][1] = B.coeff(i);
    s.coeff[i][2] = A.coeff(i);
  }
  return s;
}

QuadraticSurface QuadraticSurface::from_rows(const std::array<Poly, 4>& a) {
  QuadraticSurface s;
  for (int i = 0; i < 4; ++i) {
    if (a[i].degree() > 2) throw Error(ErrorCode::WrongDegree, "a_i(T) must have degree at most 2");
    for (int j = 0; j < 3; ++j) s.coeff[i][j] = a[i].coeff(j);
  }
  return s;
}

Poly QuadraticSurface::a(int i) const {
  return Poly({coeff[i][0], coeff[i][1], coeff[i][2]});
}

Poly QuadraticSurface::column(int j) const {
  return Poly({coeff[0][j], coeff[1][j], coeff[2][j], coeff[3][j]});
}

bool QuadraticSurface::is_integral() const {
  for (const auto& row : coeff)
    for (const auto& c : row)
      if (!c.is_integer()) return false;
  return true;
}

SurfaceViews views(const QuadraticSurface& s) {
  return {{s.a(0), s.a(1), s.a(2), s.a(3)}, s.A(), s.B(), s.C()};
}

Poly disc_x(const QuadraticSurface& s) {
  const Poly A = s.A(), B = s.B(), C = s.C();
  return B * B - Rational(4) * (A * C);
}

WeierstrassModel weierstrass(const QuadraticSurface& s) {
  const Poly a0 = s.a(0), a1 = s.a(1), a2 = s.a(2), a3 = s.a(3);
  if (a3.is_zero()) throw Error(ErrorCode::DegenerateLeading, "a3(T) vanishes identically");
  const Rational third = Rational(1, 3), two_27 = Rational(2, 27);
  Poly p = a1 * a3 - third * (a2 * a2);
  Poly q = a0 * a3 * a3 - third * (a1 * a2 * a3) + two_27 * a2.pow(3);
  return {std::move(p), std::move(q)};
}

Poly delta_T(const QuadraticSurface& s) {
  const Poly a0 = s.a(0), a1 = s.a(1), a2 = s.a(2), a3 = s.a(3);
  const Poly bracket = -(a1 * a1 * a2 * a2) + Rational(4) * (a1.pow(3) * a3) -
                       Rational(18) * (a0 * a1 * a2 * a3) +
                       a0 * (Rational(4) * a2.pow(3) + Rational(27) * (a0 * a3 * a3));
  return a3 * a3 * bracket;
}

FiberAtInfinity fiber_infinity(const QuadraticSurface& s) {
  Poly A = s.A();
  const bool elliptic = A.degree() == 3 && !disc_cubic(A).is_zero();
  return {std::move(A), elliptic};
}

Specialization specialize(const QuadraticSurface& s, const Rational& t) {
  std::vector<Rational> c(4);
  for (int i = 0; i < 4; ++i) c[i] = s.a(i).eval(t);
  return {Poly(std::move(c)), delta_T(s).eval(t).is_zero()};
}

namespace {

// u, v != 0 with u = c v for a constant c.
bool proportional(const Poly& u, const Poly& v) {
  if (u.is_zero() || v.is_zero()) return true;
  return u * v.lead() == v * u.lead();
}

// All nonzero a_i are rational multiples of one square (aT + b)^2.
bool multiples_of_one_square(const std::array<Poly, 4>& a) {
  const Poly* ref = nullptr;
  for (const auto& ai : a) {
    if (ai.is_zero()) continue;
    if (!ref) ref = &ai;
    else if (!proportional(*ref, ai)) return false;
  }
  if (!ref) return true;
  if (ref->degree() == 0) return true;  // (0 T + b)^2
  if (ref->degree() == 1) return false;
  const Rational disc = ref->coeff(1) * ref->coeff(1) - Rational(4) * ref->coeff(2) * ref->coeff(0);
  return disc.is_zero();
}

}  // namespace

ValidationReport validate(const QuadraticSurface& s) {
  ValidationReport r;
  const Poly a3 = s.a(3);

  r.a3_degree_ok = a3.degree() == 2;
  if (!r.a3_degree_ok) r.failures.emplace_back("A3DegreeNot2");

  if (r.a3_degree_ok) {
    const Rational disc = s.coeff[3][1] * s.coeff[3][1] - Rational(4) * s.coeff[3][2] * s.coeff[3][0];
    r.a3_irreducible = !disc.is_zero() && !is_nonzero_square(disc);
  }
  if (!r.a3_irreducible) r.failures.emplace_back("A3Reducible");

  r.infinity_fiber_elliptic = fiber_infinity(s).elliptic;
  if (!r.infinity_fiber_elliptic) r.failures.emplace_back("InfinityFiberSingular");

  if (!a3.is_zero()) {
    const WeierstrassModel w = weierstrass(s);
    const Poly p3 = w.p.pow(3);
    const Poly disc = Rational(4) * p3 + Rational(27) * (w.q * w.q);
    // j = 1728 * 4p^3 / (4p^3 + 27q^2) is constant iff p^3 and the
    // discriminant are proportional (this also covers p == 0 and q == 0).
    r.nonsplit_j_nonconstant = !disc.is_zero() && !proportional(p3, disc);
  }
  if (!r.nonsplit_j_nonconstant) r.failures.emplace_back("PossiblySplit");

  const std::array<Poly, 4> rows = {s.a(0), s.a(1), s.a(2), a3};
  r.nonsplit_necessary_conditions = !a3.is_zero() && !multiples_of_one_square(rows);
  if (!r.nonsplit_necessary_conditions) r.failures.emplace_back("SplitFamily");
  return r;
}

bool rationality_criterion(const WeierstrassModel& w) {
  const Poly disc = Rational(4) * w.p.pow(3) + Rational(27) * (w.q * w.q);
  if (disc.is_zero()) throw Error(ErrorCode::SingularSurface, "4p^3 + 27q^2 vanishes identically");
  const int deg_p = w.p.degree(), deg_q = w.q.degree();
  const int m = std::max(deg_p >= 0 ? 3 * deg_p : 0, deg_q >= 0 ? 2 * deg_q : 0);
  if (m > 0 && m < 12) return true;
  return m == 12 && !disc.coeff(12).is_zero();
}

IntegralModel integral_model(const QuadraticSurface& s) {
  Integer lcd = 1;
  for (const auto& row : s.coeff)
    for (const auto& c : row) mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), c.den().get_mpz_t());
  // Smallest u with lcd | u^2.
  Integer u = 1;
  if (lcd != 1)
    for (const auto& [prime, exp] : factor_integer(lcd))
      for (unsigned e = 0; e < (exp + 1) / 2; ++e) u *= prime;
  IntegralModel m{s, u};
  const Rational mult(Integer(u * u));
  for (auto& row : m.surface.coeff)
    for (auto& c : row) c *= mult;
  return m;
}

}  // namespace quadrank
