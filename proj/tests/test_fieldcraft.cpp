// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include <doctest.h>

#include <vector>

#include "ecdescent/fieldcraft.hpp"
#include "ecdescent/oracle.hpp"

using namespace ecdescent;

namespace {

// Rank-one witness on the p = 17 curve: x = 5257/16, y = 83581/64.
RationalPoint seventeen_seed() {
  return make_affine(5257, 4, 83581);
}

}  // namespace

TEST_SUITE("fieldcraft") {

TEST_CASE("field attached to the p = 17 witness point") {
  CurveParams c = make_curve(17);
  BiquadField k = build_field(seventeen_seed(), c);
  CHECK(k.d1.value == 51);
  CHECK(k.d1.support == std::vector<Int>{3, 17});
  CHECK(k.d2.value == -455);  // 5257 - 21*17*16 = -455 = -5*7*13
  CHECK(k.d2.support == std::vector<Int>{5, 7, 13});
  CHECK(k.d3.value == -23205);
  CHECK_FALSE(k.real);
  // Same class through the factoring route as through support merging.
  CHECK(squarefree_part(k.d1.value * k.d2.value).value == k.d3.value);
}

TEST_CASE("degenerate and out-of-domain points are rejected") {
  CurveParams c = make_curve(17);
  CHECK_THROWS_AS(build_field(RationalPoint{}, c), DomainError);
  CHECK_THROWS_AS(build_field(make_affine(153, 1, 0), c), DomainError);
  CHECK_THROWS_AS(build_field(make_affine(306, 1, 0), c), DomainError);
  // Off-curve input dies on the curve check, not a factoring failure.
  CHECK_THROWS_AS(build_field(make_affine(7, 1, 11), c), DomainError);
}

TEST_CASE("certificate for the p = 17 witness point") {
  CurveParams c = make_curve(17);
  AlphaCertificate cert = alpha_certificate(seventeen_seed(), c);
  CHECK(cert.checks.t_even);
  CHECK(cert.checks.gcd_s_3p);
  CHECK(cert.checks.norm_identity);
  CHECK(cert.checks.congruence_class == 1);
  CHECK(cert.adjustment == 1);
  CHECK(cert.u == 83581);
  CHECK(cert.v == 18 * 17 * 64);  // 18 p t^3
  CHECK(cert.passes());
  CHECK(cert.failed_check().empty());
  // The identity behind the certificate, in plain integers.
  Int lhs = Int(83581) * 83581 - Int(972) * 17 * 17 * 17 * 4096;
  CHECK(lhs == Int(5257) * 5257 * -455);
}

TEST_CASE("adjustment flips by -1 for s = 3 mod 4 imaginary fields") {
  CurveParams c = make_curve(17);
  AlphaCertificate cert = alpha_certificate(negate(seventeen_seed()), c);
  CHECK(cert.passes());
  CHECK(cert.checks.congruence_class == 3);
  CHECK(cert.adjustment == -1);
  CHECK(cert.u == 83581);  // (-s) * (-1)
  CHECK(mod_floor(cert.u, 4) == 1);
  CHECK(cert.v == -(Int(18) * 17 * 64));
}

TEST_CASE("adjustment multiplies by 3 for s = 3 mod 4 real fields") {
  CurveParams c = make_curve(17);
  RationalPoint doubled = double_point(seventeen_seed(), c);
  REQUIRE(doubled.r == Int("388039154408353"));
  REQUIRE(doubled.t == 668648);
  REQUIRE(doubled.s == Int("-5901031756482652354223"));
  // The doubled point itself sits at s = 1 mod 4 over a real field.
  AlphaCertificate plus = alpha_certificate(doubled, c);
  CHECK(plus.passes());
  CHECK(plus.checks.congruence_class == 1);
  CHECK(plus.adjustment == 1);
  // Its negative has s = 3 mod 4 with d2 > 0, forcing the ramified 3.
  AlphaCertificate minus = alpha_certificate(negate(doubled), c);
  CHECK(minus.passes());
  CHECK(minus.checks.congruence_class == 3);
  CHECK(minus.adjustment == 3);
  CHECK(minus.u == 3 * Int("5901031756482652354223"));

  BiquadField k = build_field(doubled, c);
  CHECK(k.real);
  CHECK(k.d2.value == Int("9137118864265"));  // 5*7*29*31*41*751*9431
}

TEST_CASE("certificate failures name the broken hypothesis") {
  CurveParams c = make_curve(17);
  // Torsion points have odd t here, so t_even is the first failure.
  AlphaCertificate cert = alpha_certificate(make_affine(153, 1, 0), c);
  CHECK_FALSE(cert.passes());
  CHECK(cert.failed_check() == "t_even");
  CHECK(cert.checks.norm_identity);  // the identity is unconditional
  // Odd t with nonzero s: the integral point x = 765, y = 15606.
  AlphaCertificate odd = alpha_certificate(make_affine(765, 1, 15606), c);
  CHECK_FALSE(odd.passes());
  CHECK(odd.failed_check() == "t_even");  // first failure wins the name
  CHECK_FALSE(odd.checks.gcd_s_3p);       // 15606 = 2 * 3^3 * 17^2
  CHECK_THROWS_AS(alpha_certificate(RationalPoint{}, c), DomainError);
}

TEST_CASE("norm identity holds for every searched point") {
  CurveParams c = make_curve(17);
  for (const RationalPoint& pt : point_search(c, 6000)) {
    if (pt.is_infinity()) continue;
    CAPTURE(pt.r.get_str());
    CHECK(alpha_certificate(pt, c).checks.norm_identity);
  }
}

TEST_CASE("the p = 113 generator certifies with adjustment -1") {
  CurveParams c = make_curve(113);
  RationalPoint gen = make_affine(Int("103952278736903209"), 6977180,
                                  Int("6066145443591398465996627"));
  BiquadField k = build_field(gen, c);
  CHECK(k.d1.value == 339);
  CHECK(k.d2.value == Int("-11567830968541991"));  // already squarefree
  CHECK(k.d3.value == Int(339) * Int("-11567830968541991"));
  CHECK_FALSE(k.real);

  AlphaCertificate cert = alpha_certificate(gen, c);
  CHECK(cert.passes());
  CHECK(cert.checks.congruence_class == 3);
  CHECK(cert.adjustment == -1);
  CHECK(mod_floor(cert.u, 4) == 1);
}

TEST_CASE("doubling family keeps the hypotheses and separates the fields") {
  CurveParams c = make_curve(17);
  std::vector<FamilyEntry> fam = double_family(seventeen_seed(), c, 2);
  REQUIRE(fam.size() == 3);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    CAPTURE(i);
    CHECK(fam[i].cert.passes());
    CHECK(fam[i].field.d1.value == 51);
    CHECK(mod_floor(fam[i].point.t, 2) == 0);
  }
  CHECK(fam[1].point == double_point(seventeen_seed(), c));
  CHECK(fam[0].field.d2.value == -455);
  CHECK(fam[1].field.d2.value == Int("9137118864265"));
  CHECK(fam[2].field.d2.value ==
        Int("-254793257947729012081759099155871381804659103441230815"));
  CHECK_FALSE(fam[1].field.d2 == fam[2].field.d2);
  CHECK(fam[2].cert.checks.congruence_class == 3);
  CHECK(fam[2].cert.adjustment == -1);  // imaginary again at depth 2
}

TEST_CASE("family construction rejects bad seeds and depths") {
  CurveParams c = make_curve(17);
  CHECK_THROWS_AS(double_family(seventeen_seed(), c, -1), DomainError);
  CHECK_THROWS_AS(double_family(make_affine(153, 1, 0), c, 1), DomainError);
  // Odd-t seed fails its own certificate before any doubling happens.
  CHECK_THROWS_AS(double_family(make_affine(765, 1, 15606), c, 1),
                  DomainError);
  // Depth zero is just the seed.
  std::vector<FamilyEntry> fam = double_family(seventeen_seed(), c, 0);
  CHECK(fam.size() == 1);
  CHECK(fam[0].point == seventeen_seed());
}

}  // TEST_SUITE
