// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#pragma once

#include <array>
#include <vector>

#include "ecdescent/arith.hpp"
#include "ecdescent/curve.hpp"

namespace ecdescent {

// Element of Q(S,2) x Q(S,2) for S = {2, 3, 5, p, infinity}.
struct SelmerPair {
  SquareClass b1;
  SquareClass b2;

  friend bool operator==(const SelmerPair& a, const SelmerPair& b) {
    return a.b1 == b.b1 && a.b2 == b.b2;
  }
};

// Fixed total order on square classes: sign, then odd part, then 2-content.
// Any deterministic order works; golden tests depend on this one.
bool canonical_less(const SquareClass& a, const SquareClass& b);
bool canonical_less(const SelmerPair& a, const SelmerPair& b);

// The 32 classes {+-1, +-2, +-3, +-5, +-6, +-10, +-15, +-30} x {1, p},
// canonically ordered.
std::vector<SquareClass> enumerate_qs2(const CurveParams& c);

// Reduces an integer known to represent a class of Q(S,2) by testing the 32
// candidates for a perfect-square quotient; never factors its argument.
SquareClass class_in_qs2(const Int& n, const CurveParams& c);

// Descent map (x + 6p, x - 9p) mod squares, with vanishing coordinates
// replaced via the root-difference recipe at the three 2-torsion points.
SelmerPair phi(const RationalPoint& p, const CurveParams& c);

SelmerPair pair_mul(const SelmerPair& u, const SelmerPair& v);

// Image of the torsion subgroup: {(1,1), (10,-15p), (15p,-15), (6p,p)}.
struct TorsionImage {
  std::array<SelmerPair, 4> elements;
};
TorsionImage torsion_image(const CurveParams& c);

// Canonically least member of pair * A; constant exactly on cosets.
SelmerPair coset_reduce(const SelmerPair& pair, const TorsionImage& a);

std::vector<SelmerPair> all_pairs(const CurveParams& c);               // 1024
std::vector<SelmerPair> coset_representatives(const CurveParams& c);  // 256

}  // namespace ecdescent
