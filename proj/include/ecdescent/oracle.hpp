// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecdescent/arith.hpp"
#include "ecdescent/curve.hpp"
#include "ecdescent/descent.hpp"
#include "ecdescent/localsolve.hpp"

namespace ecdescent {

// Residue triple found by exhaustive search.  pole_depth j > 0 means the
// search ran on the cleared system with z_i = u_i / l^j and all u_i units;
// pattern "shared-five" clears only z3 = u3/5.  Certification is triangular:
// z1 is taken exactly, and each equation lifts its own second variable when
// v_l(F) > 2 v_l(dF) or F vanishes exactly.
struct BruteWitness {
  std::string pattern;
  long pole_depth = 0;
  Int z1, z2, z3;
  Int modulus;
  long f1_val = 0, df1_val = 0;
  long f2_val = 0, df2_val = 0;
  bool f1_exact = false, f2_exact = false;
};

// Recomputes the cleared congruences and Hensel margins from scratch.
bool verify_brute_witness(const BruteWitness& w, const HomSpace& h,
                          const Int& l);

struct SearchReport {
  enum class Outcome { WitnessFound, CertifiedEmpty, Inconclusive, Skipped };
  std::string target;
  Int place;
  long bound = 0;
  Outcome outcome = Outcome::Inconclusive;
  std::optional<BruteWitness> found;
  unsigned long long elapsed_units = 0;
};

// Escalating depth ladder for searches that must resolve a place: deeper
// tables at the places with more coefficient valuation, capped so the
// residue table stays within budget.
std::vector<long> depth_schedule(const Int& l);

// Exhaustive residue search mod l^k over every admissible valuation
// pattern.  CertifiedEmpty means no residue triple satisfies the cleared
// congruences in any pattern, which refutes solvability outright;
// WitnessFound carries a certificate that lifts to an exact solution;
// Inconclusive means residues survive at this depth but none certified.
// Pairs refuted at the real place are skipped with the refutation cited.
SearchReport brute_local(const HomSpace& h, const Int& l, long k);

// All affine points with numerator |r| <= height_bound and denominator t
// drawn from `denominators`, verified on-curve, sorted by (t, r, s), and
// closed under negation.
std::vector<RationalPoint> point_search(
    const CurveParams& c, const Int& height_bound,
    const std::vector<Int>& denominators = {Int(1), Int(2), Int(4), Int(8)});

struct PlaceDisagreement {
  SelmerPair pair;
  Int place;
  std::string detail;
};

struct CrossCheckReport {
  Int p;
  unsigned long pairs_checked = 0;
  unsigned long verdicts_compared = 0;
  std::vector<PlaceDisagreement> disagreements;
  std::vector<PlaceDisagreement> unresolved;
  unsigned long coset_violations = 0;

  bool all_clear() const {
    return disagreements.empty() && unresolved.empty() &&
           coset_violations == 0;
  }
};

// Runs every pair in Q(S,2)^2 against every finite S-place three ways:
// analytic filters, the decision procedure, and the brute residue search
// (escalating depth until the search resolves; pairs dead at the real place
// cite that refutation instead).  Records any disagreement, any pair/place
// the search could not resolve, and any coset of the torsion image whose
// members differ in solvability at some place.
CrossCheckReport cross_check_filters(const CurveParams& c);

}  // namespace ecdescent
