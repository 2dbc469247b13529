// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "ecdescent/curve.hpp"


namespace ecdescent {

Rat RationalPoint::x() const {
  if (kind == Kind::Infinity) throw DomainError("x(): point at infinity");
  Rat v(r, t * t);
  v.canonicalize();
  return v;
}

Rat RationalPoint::y() const {
  if (kind == Kind::Infinity) throw DomainError("y(): point at infinity");
  Rat v(s, t * t * t);
  v.canonicalize();
  return v;
}

std::string theorem_class_name(TheoremClass c) {
  switch (c) {
    case TheoremClass::SelmerOne:
      return "selmer_one";
    case TheoremClass::SelmerZero:
      return "selmer_zero";
    default:
      return "outside_theorem";
  }
}

CurveParams make_curve(const Int& p) {
  if (!is_prime(p)) throw DomainError("make_curve: p must be prime");
  if (p < 7) throw DomainError("make_curve: p must exceed 5");
  CurveParams c;
  c.p = p;
  c.root_a = 9 * p;
  c.root_b = 6 * p;
  c.root_c = 18 * p;
  c.a2 = -21 * p;
  c.a6 = 972 * p * p * p;
  Int m = p % 120;
  if (m == 17 || m == 113)
    c.theorem_class = TheoremClass::SelmerOne;
  else if (m == 53 || m == 77)
    c.theorem_class = TheoremClass::SelmerZero;
  else
    c.theorem_class = TheoremClass::OutsideTheorem;
  return c;
}

Int discriminant(const CurveParams& c) {
  // 16 * ((e1-e2)(e1-e3)(e2-e3))^2 for roots -6p, 9p, 18p.
  Int d = Int(15) * c.p * Int(24) * c.p * Int(9) * c.p;
  return 16 * d * d;
}

RationalPoint make_affine(const Int& r, const Int& t, const Int& s) {
  if (t <= 0) throw DomainError("make_affine: t must be positive");
  if (igcd(r, t) != 1 || igcd(s, t) != 1)
    throw DomainError("make_affine: coordinates not in lowest terms");
  RationalPoint p;
  p.kind = RationalPoint::Kind::Affine;
  p.r = r;
  p.t = t;
  p.s = s;
  return p;
}

RationalPoint point_from_xy(const Rat& x, const Rat& y) {
  Int xden(x.get_den());
  if (!is_perfect_square(xden))
    throw DomainError("point_from_xy: denominator of x is not a square");
  Int t = isqrt(xden);
  Rat s_rat = y * Rat(t * t * t);
  s_rat.canonicalize();
  if (s_rat.get_den() != 1)
    throw DomainError("point_from_xy: y does not have a t^3 denominator");
  Int s(s_rat.get_num());
  if (igcd(s, t) != 1)
    throw DomainError("point_from_xy: y denominator smaller than t^3");
  return make_affine(Int(x.get_num()), t, s);
}

bool on_curve(const RationalPoint& p, const CurveParams& c) {
  if (p.is_infinity()) return true;
  Int t2 = p.t * p.t;
  Int rhs = p.r * p.r * p.r + c.a2 * p.r * p.r * t2 + c.a6 * t2 * t2 * t2;
  return p.s * p.s == rhs;
}

RationalPoint negate(const RationalPoint& p) {
  if (p.is_infinity()) return p;
  RationalPoint q = p;
  q.s = -q.s;
  return q;
}

namespace {

RationalPoint point_from_slope(const Rat& lambda, const Rat& x1, const Rat& y1,
                               const Rat& x2, const CurveParams& c) {
  Rat x3 = lambda * lambda - Rat(c.a2) - x1 - x2;
  x3.canonicalize();
  Rat y3 = lambda * (x1 - x3) - y1;
  y3.canonicalize();
  return point_from_xy(x3, y3);
}

}  // namespace

RationalPoint add(const RationalPoint& p, const RationalPoint& q,
                  const CurveParams& c) {
  if (!on_curve(p, c) || !on_curve(q, c))
    throw DomainError("add: input point not on the curve");
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rat x1 = p.x(), y1 = p.y(), x2 = q.x(), y2 = q.y();
  if (x1 == x2) {
    if (y1 == -y2) return RationalPoint::infinity();
    // Tangent line; the linear coefficient of the model is zero.
    Rat lambda = (3 * x1 * x1 + 2 * Rat(c.a2) * x1) / (2 * y1);
    lambda.canonicalize();
    return point_from_slope(lambda, x1, y1, x2, c);
  }
  Rat lambda = (y2 - y1) / (x2 - x1);
  lambda.canonicalize();
  return point_from_slope(lambda, x1, y1, x2, c);
}

RationalPoint double_point(const RationalPoint& p, const CurveParams& c) {
  if (!on_curve(p, c)) throw DomainError("double_point: point not on the curve");
  if (p.is_infinity() || p.s == 0) return RationalPoint::infinity();
  RationalPoint doubled = add(p, p, c);
  // Closed-form duplication; numerator odd whenever r is odd and t even.
  Int t2 = p.t * p.t;
  Int num = p.r * p.r * p.r * p.r - 8 * c.a6 * p.r * t2 * t2 * t2 -
            4 * c.a2 * c.a6 * t2 * t2 * t2 * t2;
  Rat closed(num, 4 * p.s * p.s * t2);
  closed.canonicalize();
  if (doubled.is_infinity() || doubled.x() != closed)
    throw DomainError("double_point: duplication formula mismatch");
  return doubled;
}

RationalPoint multiply(const Int& n, const RationalPoint& p,
                       const CurveParams& c) {
  if (n < 0) return multiply(-n, negate(p), c);
  RationalPoint acc = RationalPoint::infinity();
  RationalPoint base = p;
  Int k = n;
  while (k > 0) {
    if (k % 2 == 1) acc = add(acc, base, c);
    k /= 2;
    if (k > 0) base = add(base, base, c);
  }
  return acc;
}

Int count_points_mod(const CurveParams& c, const Int& l) {
  if (l < 3 || !is_prime(l) || discriminant(c) % l == 0)
    throw DomainError("count_points_mod: not an odd prime of good reduction");
  Int count = 1;  // point at infinity
  for (Int x = 0; x < l; ++x) {
    Int fx = mod_floor(x * x * x + c.a2 * x * x + c.a6, l);
    if (fx == 0)
      count += 1;
    else if (kronecker_symbol(fx, l) == 1)
      count += 2;
  }
  return count;
}

TorsionDescriptor torsion_structure(const CurveParams& c) {
  TorsionDescriptor td;
  td.points = {RationalPoint::infinity(), make_affine(-c.root_b, 1, 0),
               make_affine(c.root_a, 1, 0), make_affine(c.root_c, 1, 0)};
  for (const RationalPoint& p : td.points)
    if (!on_curve(p, c))
      throw DomainError("torsion_structure: 2-torsion root off curve");
  // Torsion injects into E(F_l) for every odd good l, so its order divides
  // each count; 4 divides every count because the 2-torsion stays distinct.
  // 11 and 13 suffice whenever both are good; otherwise scan further primes.
  Int g = 0;
  auto consume = [&](const Int& l) {
    if (!is_prime(l) || discriminant(c) % l == 0) return false;
    Int n = count_points_mod(c, l);
    td.witness_counts.emplace_back(l, n);
    g = igcd(g, n);
    return g == 4;
  };
  if (consume(11) || consume(13)) return td;
  for (Int l = 7; l < 500; l = l + 2)
    if (l != 11 && l != 13 && consume(l)) return td;
  throw DomainError("torsion_structure: reduction counts did not pin order 4");
}

bool is_torsion(const RationalPoint& p) {
  return p.is_infinity() || p.s == 0;
}

}  // namespace ecdescent
