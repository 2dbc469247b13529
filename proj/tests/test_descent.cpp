// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include <doctest.h>

#include <algorithm>
#include <set>

#include "ecdescent/descent.hpp"

using namespace ecdescent;

namespace {

SelmerPair sp(long a, long b) {
  return {squarefree_part(Int(a)), squarefree_part(Int(b))};
}

}  // namespace

TEST_SUITE("descent") {
  TEST_CASE("enumerate_qs2 yields the 32 expected classes") {
    CurveParams c = make_curve(Int(17));
    std::vector<SquareClass> classes = enumerate_qs2(c);
    REQUIRE(classes.size() == 32);
    std::set<Int> values;
    for (const SquareClass& q : classes) values.insert(q.value);
    for (long base : {1L, 2L, 3L, 5L, 6L, 10L, 15L, 30L})
      for (long scale : {1L, 17L}) {
        CHECK(values.count(Int(base * scale)) == 1);
        CHECK(values.count(Int(-base * scale)) == 1);
      }
    CHECK(values.count(Int(510)) == 1);
    CHECK(values.count(Int(-510)) == 1);
    CHECK(values.count(Int(4)) == 0);
    CHECK(std::is_sorted(classes.begin(), classes.end(),
                         [](const SquareClass& a, const SquareClass& b) {
                           return canonical_less(a, b);
                         }));
    CHECK(classes.front().value == 1);
  }

  TEST_CASE("class_in_qs2 recognizes classes without factoring") {
    CurveParams c = make_curve(Int(17));
    CHECK(class_in_qs2(Int(6889), c).value == 1);  // 83^2
    CHECK(class_in_qs2(Int(-15) * 17 * 9, c).value == -255);
    CHECK(class_in_qs2(Int(360) * 17 * 17, c).value == 10);
    CHECK_THROWS_AS(class_in_qs2(Int(7), c), DomainError);
    CHECK_THROWS_AS(class_in_qs2(Int(0), c), DomainError);
  }

  TEST_CASE("phi on the torsion points and the known point") {
    CurveParams c = make_curve(Int(17));
    CHECK(phi(RationalPoint::infinity(), c) == sp(1, 1));
    CHECK(phi(make_affine(Int(-102), Int(1), Int(0)), c) == sp(10, -255));
    CHECK(phi(make_affine(Int(153), Int(1), Int(0)), c) == sp(255, -15));
    CHECK(phi(make_affine(Int(306), Int(1), Int(0)), c) == sp(102, 17));
    RationalPoint g = point_from_xy(Rat(5257, 16), Rat(83581, 64));
    CHECK(phi(g, c) == sp(1, 1));
    CHECK_THROWS_AS(phi(make_affine(Int(1), Int(1), Int(1)), c), DomainError);
  }

  TEST_CASE("phi image of the generic 2-torsion recipe matches the table") {
    // The same images must arise for every admissible prime.
    for (long p : {53L, 113L, 137L}) {
      CurveParams c = make_curve(Int(p));
      CHECK(phi(make_affine(-c.root_b, Int(1), Int(0)), c) ==
            SelmerPair{squarefree_part(Int(10)),
                       squarefree_part(Int(-15) * p)});
      CHECK(phi(make_affine(c.root_a, Int(1), Int(0)), c) ==
            SelmerPair{squarefree_part(Int(15) * p),
                       squarefree_part(Int(-15))});
      CHECK(phi(make_affine(c.root_c, Int(1), Int(0)), c) ==
            SelmerPair{squarefree_part(Int(6) * p), squarefree_part(Int(p))});
    }
  }

  TEST_CASE("pair_mul fixed products") {
    CHECK(pair_mul(sp(1, 1), sp(10, -255)) == sp(10, -255));
    CHECK(pair_mul(sp(10, -255), sp(255, -15)) == sp(102, 17));
    CHECK(pair_mul(sp(3, 17), sp(102, 17)) == sp(34, 1));
  }

  TEST_CASE("torsion image is a subgroup of order 4") {
    CurveParams c = make_curve(Int(17));
    TorsionImage a = torsion_image(c);
    CHECK(a.elements[0] == sp(1, 1));
    CHECK(a.elements[1] == sp(10, -255));
    CHECK(a.elements[2] == sp(255, -15));
    CHECK(a.elements[3] == sp(102, 17));
    for (const SelmerPair& u : a.elements)
      for (const SelmerPair& v : a.elements) {
        SelmerPair w = pair_mul(u, v);
        CHECK(std::count(a.elements.begin(), a.elements.end(), w) == 1);
      }
  }

  TEST_CASE("phi is a homomorphism on sampled points") {
    CurveParams c = make_curve(Int(17));
    RationalPoint g = point_from_xy(Rat(5257, 16), Rat(83581, 64));
    std::vector<RationalPoint> pool = {
        RationalPoint::infinity(), make_affine(Int(-102), Int(1), Int(0)),
        make_affine(Int(153), Int(1), Int(0)),
        make_affine(Int(306), Int(1), Int(0)), g, double_point(g, c),
        add(g, make_affine(Int(153), Int(1), Int(0)), c)};
    for (const RationalPoint& p : pool)
      for (const RationalPoint& q : pool) {
        SelmerPair lhs = phi(add(p, q, c), c);
        SelmerPair rhs = pair_mul(phi(p, c), phi(q, c));
        CHECK(lhs == rhs);
      }
  }

  TEST_CASE("phi images are supported on {-1, 2, 3, 5, p}") {
    CurveParams c = make_curve(Int(17));
    RationalPoint g = point_from_xy(Rat(5257, 16), Rat(83581, 64));
    RationalPoint p = g;
    for (int i = 0; i < 4; ++i) {
      SelmerPair im = phi(p, c);
      for (const SquareClass* side : {&im.b1, &im.b2})
        for (const Int& prime : side->support)
          CHECK((prime == 2 || prime == 3 || prime == 5 || prime == 17));
      p = add(p, g, c);
    }
  }

  TEST_CASE("coset_reduce collapses A and is idempotent") {
    CurveParams c = make_curve(Int(17));
    TorsionImage a = torsion_image(c);
    CHECK(coset_reduce(sp(10, -255), a) == coset_reduce(sp(1, 1), a));
    for (const SelmerPair& pair : all_pairs(c)) {
      SelmerPair rep = coset_reduce(pair, a);
      CHECK(coset_reduce(rep, a) == rep);
      for (const SelmerPair& t : a.elements)
        CHECK(coset_reduce(pair_mul(pair, t), a) == rep);
    }
  }

  TEST_CASE("the coset of (3, p) has the expected four members") {
    CurveParams c = make_curve(Int(17));
    TorsionImage a = torsion_image(c);
    std::set<std::pair<Int, Int>> coset;
    for (const SelmerPair& t : a.elements) {
      SelmerPair m = pair_mul(sp(3, 17), t);
      coset.insert({m.b1.value, m.b2.value});
    }
    std::set<std::pair<Int, Int>> expected = {
        {3, 17}, {30, -15}, {85, -255}, {34, 1}};
    CHECK(coset == expected);
    CHECK(coset_reduce(sp(3, 17), a) == sp(3, 17));
  }

  TEST_CASE("1024 pairs fall into 256 cosets") {
    CurveParams c = make_curve(Int(17));
    CHECK(all_pairs(c).size() == 1024);
    std::vector<SelmerPair> reps = coset_representatives(c);
    CHECK(reps.size() == 256);
    TorsionImage a = torsion_image(c);
    std::set<std::pair<Int, Int>> distinct;
    for (const SelmerPair& pair : all_pairs(c)) {
      SelmerPair rep = coset_reduce(pair, a);
      distinct.insert({rep.b1.value, rep.b2.value});
    }
    CHECK(distinct.size() == 256);
  }
}
