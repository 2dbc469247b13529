// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#pragma once

#include <vector>

#include "ecdescent/arith.hpp"
#include "ecdescent/fieldcraft.hpp"

namespace ecdescent {

enum class ClassMethod {
  DefiniteFormsCount,    // d < 0: reduced positive definite forms
  IndefiniteCycleCount,  // d > 0: cycles of reduced indefinite forms
};

struct QuadClassData {
  Int d;  // fundamental discriminant
  Int h;  // class number, >= 1
  ClassMethod method;
};

// Exact class number of the quadratic field of discriminant d.  Accepts a
// fundamental discriminant directly, or a squarefree m (converted to its
// fundamental discriminant m or 4m by residue mod 4).  Anything else is a
// DomainError, as is |d| beyond the supported enumeration range (~10^7).
QuadClassData h_quadratic(const Int& n);

struct BiquadClassEstimate {
  Int h1, h2, h3;  // class numbers of the three quadratic subfields
  // Admissible h(K) by the product formula h = Q h1 h2 h3 / 2 (imaginary)
  // or Q h1 h2 h3 / 4 (real) over the unit indices Q the formula allows;
  // non-integral combinations are dropped.  Ascending, duplicate-free.
  std::vector<Int> candidates;
  bool parity_even_certain = false;  // true iff every candidate is even
};

// Class-number audit for a biquadratic field via its quadratic subfields.
// The unit index is not computed; all admissible values are returned.
BiquadClassEstimate biquad_estimate(const BiquadField& k);

}  // namespace ecdescent
