#pragma once

#include <array>
#include <string>
#include <vector>

#include "quadrank/poly.hpp"

namespace quadrank {

/// y^2 = sum_{i,j} coeff[i][j] x^i T^j, i = 0..3, j = 0..2.
///
/// Row i read along T gives a_i(T); column j read along x gives C (j = 0),
/// B (j = 1) and A (j = 2), so the surface is simultaneously
///   y^2 = a3(T) x^3 + a2(T) x^2 + a1(T) x + a0(T)
///       = A(x) T^2 + B(x) T + C(x).
struct QuadraticSurface {
  std::array<std::array<Rational, 3>, 4> coeff{};

  static QuadraticSurface from_abc(const Poly& A, const Poly& B, const Poly& C);
  static QuadraticSurface from_rows(const std::array<Poly, 4>& a);

  Poly a(int i) const;  ///< a_i(T)
  Poly A() const { return column(2); }
  Poly B() const { return column(1); }
  Poly C() const { return column(0); }
  Poly column(int j) const;

  bool is_integral() const;

  friend bool operator==(const QuadraticSurface&, const QuadraticSurface&) = default;
};

struct SurfaceViews {
  std::array<Poly, 4> a;  ///< a_0(T) .. a_3(T)
  Poly A, B, C;           ///< in x
};

SurfaceViews views(const QuadraticSurface& s);

/// D(x) = B(x)^2 - 4 A(x) C(x).
Poly disc_x(const QuadraticSurface& s);

/// Short Weierstrass form y^2 = x^3 + p(T) x + q(T) reached by x -> x/a3,
/// y -> y/a3 followed by x -> x - a2/3.
struct WeierstrassModel {
  Poly p;
  Poly q;
};

WeierstrassModel weierstrass(const QuadraticSurface& s);

/// a3^2 [-a1^2 a2^2 + 4 a1^3 a3 - 18 a0 a1 a2 a3 + a0 (4 a2^3 + 27 a0 a3^2)],
/// which equals -a3^2 times the classical discriminant of the cubic in x.
Poly delta_T(const QuadraticSurface& s);

struct FiberAtInfinity {
  Poly cubic;  ///< A(x)
  bool elliptic;
};

FiberAtInfinity fiber_infinity(const QuadraticSurface& s);

struct Specialization {
  Poly cubic;  ///< a3(t) x^3 + a2(t) x^2 + a1(t) x + a0(t)
  bool singular;
};

Specialization specialize(const QuadraticSurface& s, const Rational& t);

struct ValidationReport {
  bool a3_degree_ok = false;
  bool a3_irreducible = false;
  bool infinity_fiber_elliptic = false;
  bool nonsplit_j_nonconstant = false;
  bool nonsplit_necessary_conditions = false;
  std::vector<std::string> failures;

  bool valid() const {
    return a3_degree_ok && a3_irreducible && infinity_fiber_elliptic && nonsplit_j_nonconstant &&
           nonsplit_necessary_conditions;
  }
};

/// Checks the defining conditions of a quadratic elliptic surface. Failure
/// codes: A3DegreeNot2, A3Reducible, InfinityFiberSingular, PossiblySplit,
/// SplitFamily.
ValidationReport validate(const QuadraticSurface& s);

/// Degree criterion for a rational elliptic surface, evaluated on the short
/// model: 0 < max{3 deg p, 2 deg q} < 12, or the max equals 12 and the
/// T^12 coefficient of 4p^3 + 27q^2 is nonzero. Throws SingularSurface when
/// 4p^3 + 27q^2 vanishes identically.
bool rationality_criterion(const WeierstrassModel& w);

/// Integral model u^2 (A T^2 + B T + C) with u the smallest positive integer
/// making every coefficient integral.
struct IntegralModel {
  QuadraticSurface surface;
  Integer scale;  ///< u
};

IntegralModel integral_model(const QuadraticSurface& s);

}  // namespace quadrank
