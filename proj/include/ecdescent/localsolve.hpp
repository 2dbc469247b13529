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

namespace ecdescent {

// Pair of quadrics attached to a descent pair (b1, b2):
//   b1 z1^2 - b2 z2^2    = rhs1   (= 15p)
//   b1 z1^2 - b1 b2 z3^2 = rhs2   (= 24p)
// A point with one coordinate zero is allowed; it sits over a 2-torsion x.
struct HomSpace {
  SelmerPair pair;
  Int p;
  Int rhs1;
  Int rhs2;
};

HomSpace make_homspace(const SelmerPair& pair, const CurveParams& curve);

enum class Solvability { Solvable, Unsolvable, Undecided };

enum class LocalRule {
  RealSign,
  EvenGcd2,
  CosetEvenB2,
  B1NonResidue3,
  B2NonResidue3,
  B1NonResidueP,
  B2NonResidueP,
  Shared5Residue,
  B2NonResidue5,
  Pair3NegP,
  HenselWitness,
  ExhaustedRefutation,
};

std::string rule_name(LocalRule rule);

// Square class of a nonzero element of Q_l: valuation parity plus a unit
// class (the Legendre value of the unit part for odd l, its residue mod 8
// for l = 2).  Two elements are equal up to Q_l squares iff classes match.
struct QlClass {
  int parity = 0;
  int unit = 1;
  friend bool operator==(const QlClass&, const QlClass&) = default;
};

QlClass ql_class(const Rat& x, const Int& l);

// Certificate that `target` is a square in Q_l: either approx^2 == target
// exactly, or v_l(approx^2 - target) > 2 v_l(2 approx), which lets Newton's
// iteration converge to an exact square root from approx.
struct SquareRootCert {
  Rat target = 0;
  Rat approx = 0;
  long f_val = 0;
  long df_val = 0;
  bool exact = false;
};

// Solvability witness at an odd place: w plays the role of b1 z1^2, and the
// three certified squares are w/b1, (w - rhs1)/b2, (w - rhs2)/(b1 b2).
struct LocalWitness {
  Int place;
  Rat w = 0;
  SquareRootCert z1;
  SquareRootCert z2;
  SquareRootCert z3;
};

struct LocalVerdict {
  Int place;  // 0 denotes the real place
  Solvability solvability = Solvability::Undecided;
  LocalRule rule = LocalRule::ExhaustedRefutation;
  std::optional<LocalWitness> witness;
  std::optional<long> refutation_depth;
};

bool verify_square_cert(const SquareRootCert& cert, const Int& l);
bool verify_witness(const LocalWitness& wit, const HomSpace& h);

// Valuation triples a genuine local solution can have: all coordinates of
// nonnegative valuation; all three valuations equal and negative; or, when
// 5 divides both b1 and b2, the pattern v(z3) = -1 with v(z1), v(z2) >= 0.
bool valuation_pattern_admissible(const LocalWitness& wit, const HomSpace& h);

// Exact decision at the real place: solvable iff b1 > 0.
LocalVerdict verdict_real(const HomSpace& h);

// Residue filters.  Each returns a verdict only when its congruence
// obstruction applies; absence means the filter abstains, never solvable.
// All residue conditions are recomputed from the actual p at call time.
std::optional<LocalVerdict> filter_2adic(const HomSpace& h);
std::optional<LocalVerdict> filter_3adic(const HomSpace& h);
std::optional<LocalVerdict> filter_padic(const HomSpace& h);
std::optional<LocalVerdict> filter_5adic(const HomSpace& h);
std::optional<LocalVerdict> filter_3p_special(const HomSpace& h);
std::optional<LocalVerdict> filters_at(const HomSpace& h, const Int& l);

// Canonical coset member used before filtering.  The parity of b2 and the
// sign of b1 are constant on cosets of the torsion image; a coset with even
// b2 is returned as its member with both coordinates even, which exposes
// the 2-adic gcd obstruction.  Otherwise the least member whose gcd is
// coprime to 3 and p is returned.
HomSpace reduce_by_coset_parity(const HomSpace& h, const TorsionImage& a);

// Complete decision procedure at a finite prime l.  Stratifies w = b1 z1^2
// by valuation: four closed-form regimes (w near 0, 15p, 24p, and deep
// negative valuation) plus a finite residue scan over the critical window,
// refining unit digits until every branch's square classes are pinned.
// Solvable verdicts carry a verified witness; unsolvable ones report the
// refutation depth of the emptied residue tree.
LocalVerdict decide_local(const HomSpace& h, const Int& l,
                          std::optional<long> depth_limit = std::nullopt);

enum class DecisionMode { FiltersPlusDecide, DecideOnly, Both };

struct LocalOptions {
  DecisionMode mode = DecisionMode::Both;
  std::optional<long> depth_limit;
  int spot_check_places = 0;
};

// Verdicts at the real place and the finite places {2, 3, 5, p}, in that
// order, followed by spot checks at the first `spot_check_places` good odd
// primes below 100.  Mode Both runs filters and the decision procedure,
// raises CrossCheckError on any disagreement, and reports the filter's
// obstruction name on verdicts where both agree.
std::vector<LocalVerdict> verdict_all_places(const HomSpace& h,
                                             const LocalOptions& opt = {});

}  // namespace ecdescent
