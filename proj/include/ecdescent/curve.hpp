// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "ecdescent/arith.hpp"

namespace ecdescent {

// Membership of p in the congruence classes the rank theorem covers.
enum class TheoremClass { SelmerOne, SelmerZero, OutsideTheorem };

// E_p: y^2 = (x + 6p)(x - 9p)(x - 18p) = x^3 + a2 x^2 + a6. The linear
// coefficient vanishes because the roots satisfy ab + bc = ac.
struct CurveParams {
  Int p;
  Int root_a;  // 9p
  Int root_b;  // 6p
  Int root_c;  // 18p
  Int a2;      // -21p
  Int a6;      // 972 p^3
  TheoremClass theorem_class = TheoremClass::OutsideTheorem;
};

// Projective rational point stored as x = r/t^2, y = s/t^3 with t > 0 and
// gcd(r, t) = gcd(s, t) = 1; every theorem hypothesis reads off this shape.
struct RationalPoint {
  enum class Kind { Infinity, Affine };
  Kind kind = Kind::Infinity;
  Int r = 0;
  Int t = 1;
  Int s = 0;

  static RationalPoint infinity() { return {}; }
  bool is_infinity() const { return kind == Kind::Infinity; }
  Rat x() const;
  Rat y() const;

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::Infinity) return true;
    return a.r == b.r && a.t == b.t && a.s == b.s;
  }
};

std::string theorem_class_name(TheoremClass c);

CurveParams make_curve(const Int& p);
Int discriminant(const CurveParams& c);

// Validates the normalized shape (t > 0, gcd conditions); DomainError otherwise.
RationalPoint make_affine(const Int& r, const Int& t, const Int& s);
// Minimal-t conversion; DomainError when the denominator of x is not a square
// or y does not have the matching cube denominator.
RationalPoint point_from_xy(const Rat& x, const Rat& y);

bool on_curve(const RationalPoint& p, const CurveParams& c);

RationalPoint negate(const RationalPoint& p);
RationalPoint add(const RationalPoint& p, const RationalPoint& q,
                  const CurveParams& c);
// Chord-tangent doubling cross-asserted against the closed-form duplication
// x(2P) = (r^4 - 8 a6 r t^6 - 4 a2 a6 t^8) / (4 s^2 t^2).
RationalPoint double_point(const RationalPoint& p, const CurveParams& c);
RationalPoint multiply(const Int& n, const RationalPoint& p,
                       const CurveParams& c);

// Exact projective point count of the reduction mod an odd prime of good
// reduction; DomainError at primes dividing the discriminant.
Int count_points_mod(const CurveParams& c, const Int& l);

struct TorsionDescriptor {
  std::array<int, 2> invariants{2, 2};  // Z/2 x Z/2
  std::vector<RationalPoint> points;    // O and the three 2-torsion points
  std::vector<std::pair<Int, Int>> witness_counts;  // (l, #E(F_l)) used
};

// Full rational 2-torsion gives a lower bound; reduction injectivity at two
// odd good primes pins the order to exactly 4.
TorsionDescriptor torsion_structure(const CurveParams& c);

// Valid once torsion_structure has pinned torsion to the 2-torsion set.
bool is_torsion(const RationalPoint& p);

}  // namespace ecdescent
