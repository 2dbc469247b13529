// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#pragma once

#include <optional>
#include <vector>

#include "ecdescent/arith.hpp"
#include "ecdescent/curve.hpp"
#include "ecdescent/descent.hpp"
#include "ecdescent/localsolve.hpp"

namespace ecdescent {

// Elimination record for one coset of the torsion image.  Surviving cosets
// carry verified witnesses at every place; eliminated ones name the rule
// and place that killed them.  CosetEvenB2 marks cosets whose invariant b2
// parity is even, eliminated through their doubly-even member.
struct CosetTrace {
  SelmerPair representative;
  bool survives = false;
  std::optional<LocalRule> rule;
  Int place = 0;
  std::vector<LocalVerdict> verdicts;
};

struct SelmerGroup {
  std::vector<SelmerPair> elements;  // canonically sorted, all coset members
  int rank_s = 0;                    // |elements| = 2^(2 + rank_s)
  std::vector<CosetTrace> trace;     // one entry per coset, in order
  bool complete = true;              // false only on an undecided verdict
};

// Full descent pipeline: evaluates the 256 coset representatives through
// the requested mode, expands survivors to all members, and checks the
// subgroup axioms on the result (CrossCheckError on violation).
SelmerGroup compute_selmer(const CurveParams& c,
                           DecisionMode mode = DecisionMode::Both);

struct RankBounds {
  int lower = 0;
  int upper = 0;
};

// lower = 1 when a supplied point is non-torsion (the 2-torsion is the full
// torsion subgroup, so any other point has infinite order); upper is the
// 2-Selmer rank.  Off-curve points raise DomainError; a non-torsion point
// on a Selmer-rank-0 curve raises CrossCheckError.
RankBounds rank_bounds(const CurveParams& c,
                       const std::vector<RationalPoint>& known_points);

// Upper bound on dim_2 of the 2-torsion of the Tate-Shafarevich group:
// rank_s minus the certified rank lower bound.
int sha_two_bound(const CurveParams& c,
                  const std::vector<RationalPoint>& known_points);

}  // namespace ecdescent
