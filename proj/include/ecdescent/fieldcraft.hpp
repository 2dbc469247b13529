// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#pragma once

#include <string>
#include <vector>

#include "ecdescent/arith.hpp"
#include "ecdescent/curve.hpp"

namespace ecdescent {

// The biquadratic field Q(sqrt(d1), sqrt(d2)) attached to a curve point,
// with d1 the squarefree part of 3p (always 3p itself), d2 the squarefree
// part of r - 21 p t^2, and d3 the class of their product naming the third
// quadratic subfield.
struct BiquadField {
  SquareClass d1;
  SquareClass d2;
  SquareClass d3;
  bool real = false;  // sign of d2; d1 > 0 always
};

struct AlphaChecks {
  bool t_even = false;
  bool gcd_s_3p = false;
  bool norm_identity = false;
  int congruence_class = 0;  // s mod 4, picking the adjustment
};

// Decidable proof obligations for alpha = m(s + 18 p t^3 sqrt(3p)): the
// evenness of t, coprimality of s with 3p, the exact norm identity
// s^2 - 972 p^3 t^6 = r^2 (r - 21 p t^2), and the congruence class of s
// that picks the adjustment m making the adjusted generator admissible.
struct AlphaCertificate {
  Int s, t, r;
  Int u, v;            // adjusted generator u + v sqrt(3p)
  AlphaChecks checks;
  Int adjustment = 1;  // m in {1, -1, 3}

  bool passes() const {
    return checks.t_even && checks.gcd_s_3p && checks.norm_identity;
  }
  // Name of the first failed hypothesis, empty when all pass.
  std::string failed_check() const;
};

// DomainError on torsion or off-curve points and on degenerate d2 (zero or
// a perfect square), where the field collapses below degree 4.
BiquadField build_field(const RationalPoint& pt, const CurveParams& c);

// Evaluates every check; failing hypotheses are recorded, not thrown.
AlphaCertificate alpha_certificate(const RationalPoint& pt,
                                   const CurveParams& c);

struct FamilyEntry {
  RationalPoint point;
  BiquadField field;
  AlphaCertificate cert;
};

// Doubling chain P, 2P, ..., 2^depth P with field and certificate at each
// level.  The theorems promise every level passes and the d2 classes stay
// distinct; a violation raises CrossCheckError naming the level.
std::vector<FamilyEntry> double_family(const RationalPoint& p0,
                                       const CurveParams& c, long depth);

}  // namespace ecdescent
