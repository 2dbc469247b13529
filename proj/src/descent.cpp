// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "ecdescent/descent.hpp"

#include <algorithm>
#include <tuple>

namespace ecdescent {

namespace {

std::tuple<int, Int, long> canonical_key(const SquareClass& a) {
  Int odd = iabs(a.value);
  long two = 0;
  while (odd % 2 == 0) {
    odd /= 2;
    ++two;
  }
  return {a.value < 0 ? 1 : 0, odd, two};
}

}  // namespace

bool canonical_less(const SquareClass& a, const SquareClass& b) {
  return canonical_key(a) < canonical_key(b);
}

bool canonical_less(const SelmerPair& a, const SelmerPair& b) {
  if (a.b1 == b.b1) return canonical_less(a.b2, b.b2);
  return canonical_less(a.b1, b.b1);
}

std::vector<SquareClass> enumerate_qs2(const CurveParams& c) {
  std::vector<SquareClass> out;
  const Int primes[] = {Int(2), Int(3), Int(5), c.p};
  for (int sign = 0; sign < 2; ++sign)
    for (int mask = 0; mask < 16; ++mask) {
      SquareClass sc;
      sc.value = sign == 0 ? 1 : -1;
      for (int bit = 0; bit < 4; ++bit)
        if (mask & (1 << bit)) {
          sc.value *= primes[bit];
          sc.support.push_back(primes[bit]);
        }
      out.push_back(std::move(sc));
    }
  std::sort(out.begin(), out.end(),
            [](const SquareClass& a, const SquareClass& b) {
              return canonical_less(a, b);
            });
  return out;
}

SquareClass class_in_qs2(const Int& n, const CurveParams& c) {
  if (n == 0) throw DomainError("class_in_qs2: argument must be nonzero");
  for (const SquareClass& q : enumerate_qs2(c)) {
    if ((q.value < 0) != (n < 0)) continue;
    if (n % q.value != 0) continue;
    if (is_perfect_square(n / q.value)) return q;
  }
  throw DomainError("class_in_qs2: value not supported on {2,3,5,p}");
}

SelmerPair phi(const RationalPoint& point, const CurveParams& c) {
  if (!on_curve(point, c)) throw DomainError("phi: point not on the curve");
  SquareClass one = squarefree_part(Int(1));
  if (point.is_infinity()) return {one, one};
  Int t2 = point.t * point.t;
  Int n1 = point.r + c.root_b * t2;  // (x + 6p) t^2
  Int n2 = point.r - c.root_a * t2;  // (x - 9p) t^2
  // At a 2-torsion point one coordinate vanishes; the recipe replaces it by
  // the product of the differences of the other two roots.
  if (n1 == 0)
    return {squarefree_part(Int(-15) * c.p * Int(-24) * c.p),
            squarefree_part(Int(-15) * c.p)};
  if (n2 == 0)
    return {squarefree_part(Int(15) * c.p),
            squarefree_part(Int(15) * c.p * Int(-9) * c.p)};
  return {class_in_qs2(n1, c), class_in_qs2(n2, c)};
}

SelmerPair pair_mul(const SelmerPair& u, const SelmerPair& v) {
  return {square_class_mul(u.b1, v.b1), square_class_mul(u.b2, v.b2)};
}

TorsionImage torsion_image(const CurveParams& c) {
  TorsionImage a;
  a.elements = {phi(RationalPoint::infinity(), c),
                phi(make_affine(-c.root_b, 1, 0), c),
                phi(make_affine(c.root_a, 1, 0), c),
                phi(make_affine(c.root_c, 1, 0), c)};
  return a;
}

SelmerPair coset_reduce(const SelmerPair& pair, const TorsionImage& a) {
  SelmerPair best = pair_mul(pair, a.elements[0]);
  for (int i = 1; i < 4; ++i) {
    SelmerPair candidate = pair_mul(pair, a.elements[i]);
    if (canonical_less(candidate, best)) best = candidate;
  }
  return best;
}

std::vector<SelmerPair> all_pairs(const CurveParams& c) {
  std::vector<SquareClass> classes = enumerate_qs2(c);
  std::vector<SelmerPair> out;
  out.reserve(classes.size() * classes.size());
  for (const SquareClass& b1 : classes)
    for (const SquareClass& b2 : classes) out.push_back({b1, b2});
  return out;
}

std::vector<SelmerPair> coset_representatives(const CurveParams& c) {
  TorsionImage a = torsion_image(c);
  std::vector<SelmerPair> reps;
  for (const SelmerPair& pair : all_pairs(c)) {
    SelmerPair rep = coset_reduce(pair, a);
    if (rep == pair) reps.push_back(rep);
  }
  return reps;
}

}  // namespace ecdescent
