// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "ecdescent/fieldcraft.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ecdescent {
namespace {

void require_affine_on_curve(const RationalPoint& pt, const CurveParams& c,
                             const char* who) {
  if (pt.is_infinity())
    throw DomainError(std::string(who) + ": point at infinity");
  if (!on_curve(pt, c))
    throw DomainError(std::string(who) + ": point is not on the curve");
}

// Numerator of x - 21p over the denominator t^2; its sign is the sign of
// d2 and its squarefree part is d2 itself.
Int d2_numerator(const RationalPoint& pt, const CurveParams& c) {
  return pt.r + c.a2 * pt.t * pt.t;
}

}  // namespace

std::string AlphaCertificate::failed_check() const {
  if (!checks.t_even) return "t_even";
  if (!checks.gcd_s_3p) return "gcd_s_3p";
  if (!checks.norm_identity) return "norm_identity";
  return "";
}

BiquadField build_field(const RationalPoint& pt, const CurveParams& c) {
  require_affine_on_curve(pt, c, "build_field");
  if (is_torsion(pt))
    throw DomainError("build_field: torsion points give no biquadratic field");
  BiquadField k;
  k.d1 = squarefree_part(3 * c.p);
  Int num = d2_numerator(pt, c);
  if (num == 0)
    throw DomainError("build_field: x = 21p degenerates the field");
  k.d2 = squarefree_part(num);
  if (k.d2.value == 1)
    throw DomainError(
        "build_field: r - 21pt^2 is a square, the field degenerates");
  k.d3 = square_class_mul(k.d1, k.d2);
  if (k.d3.value == 1)
    throw DomainError(
        "build_field: second generator collapses onto sqrt(3p)");
  k.real = k.d2.value > 0;
  return k;
}

AlphaCertificate alpha_certificate(const RationalPoint& pt,
                                   const CurveParams& c) {
  require_affine_on_curve(pt, c, "alpha_certificate");
  AlphaCertificate cert;
  cert.s = pt.s;
  cert.t = pt.t;
  cert.r = pt.r;
  cert.checks.t_even = mod_floor(pt.t, 2) == 0;
  cert.checks.gcd_s_3p = igcd(pt.s, 3 * c.p) == 1;
  // s^2 - 972 p^3 t^6 = r^2 (r - 21 p t^2), recomputed term by term rather
  // than assumed from the curve equation.
  Int t2 = pt.t * pt.t;
  Int num = d2_numerator(pt, c);
  cert.checks.norm_identity =
      pt.s * pt.s - c.a6 * t2 * t2 * t2 == pt.r * pt.r * num;
  cert.checks.congruence_class =
      static_cast<int>(mod_floor(pt.s, 4).get_si());
  // s = 1 mod 4 keeps alpha; s = 3 mod 4 flips by -1 when the field is
  // imaginary, else multiplies by the ramified 3.  Even s only happens
  // with odd t, where the certificate has already failed.
  if (cert.checks.congruence_class == 3)
    cert.adjustment = num < 0 ? Int(-1) : Int(3);
  else
    cert.adjustment = 1;
  cert.u = cert.adjustment * pt.s;
  cert.v = cert.adjustment * 18 * c.p * pt.t * t2;
  return cert;
}

std::vector<FamilyEntry> double_family(const RationalPoint& p0,
                                       const CurveParams& c, long depth) {
  if (depth < 0) throw DomainError("double_family: depth must be >= 0");
  require_affine_on_curve(p0, c, "double_family");
  if (is_torsion(p0))
    throw DomainError("double_family: seed must be non-torsion");
  {
    AlphaCertificate seed = alpha_certificate(p0, c);
    if (!seed.passes())
      throw DomainError("double_family: seed fails hypothesis " +
                        seed.failed_check());
  }
  std::vector<FamilyEntry> out;
  out.reserve(static_cast<std::size_t>(depth) + 1);
  RationalPoint cur = p0;
  Int prev_height = 0;
  for (long i = 0; i <= depth; ++i) {
    FamilyEntry e;
    e.point = cur;
    try {
      e.field = build_field(cur, c);
      e.cert = alpha_certificate(cur, c);
      if (!e.cert.passes())
        throw DomainError("fails hypothesis " + e.cert.failed_check());
    } catch (const DomainError& err) {
      if (i == 0) throw;  // a bad seed is the caller's problem
      // Past the seed the theorems promise success; failure means a bug.
      throw CrossCheckError("double_family: level " + std::to_string(i) +
                            ": " + err.what());
    }
    if (e.field.d1.value != 3 * c.p)
      throw CrossCheckError("double_family: level " + std::to_string(i) +
                            " changed the fixed generator");
    Int height = iabs(d2_numerator(cur, c));
    if (i > 0 && height <= prev_height)
      throw CrossCheckError("double_family: level " + std::to_string(i) +
                            " did not grow the second generator");
    for (long j = 0; j < i; ++j)
      if (out[static_cast<std::size_t>(j)].field.d2 == e.field.d2)
        throw CrossCheckError("double_family: level " + std::to_string(i) +
                              " repeats the field of level " +
                              std::to_string(j));
    prev_height = height;
    out.push_back(std::move(e));
    if (i < depth) cur = double_point(cur, c);
  }
  return out;
}

}  // namespace ecdescent
