// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "ecdescent/selmer.hpp"

#include <algorithm>
#include <utility>

namespace ecdescent {

namespace {

bool contains_pair(const std::vector<SelmerPair>& sorted,
                   const SelmerPair& q) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), q,
                             [](const SelmerPair& a, const SelmerPair& b) {
                               return canonical_less(a, b);
                             });
  return it != sorted.end() && *it == q;
}

}  // namespace

SelmerGroup compute_selmer(const CurveParams& c, DecisionMode mode) {
  SelmerGroup g;
  const TorsionImage timg = torsion_image(c);
  const auto reps = coset_representatives(c);
  std::vector<SelmerPair> survivors;

  for (const auto& rep : reps) {
    CosetTrace tr;
    tr.representative = rep;
    const HomSpace h =
        reduce_by_coset_parity(make_homspace(rep, c), timg);
    LocalOptions opt;
    opt.mode = mode;
    std::vector<LocalVerdict> verdicts = verdict_all_places(h, opt);

    bool alive = true;
    for (const auto& v : verdicts) {
      if (v.solvability == Solvability::Undecided) {
        g.complete = false;
        alive = false;
        tr.rule = v.rule;
        tr.place = v.place;
        break;
      }
      if (v.solvability == Solvability::Unsolvable) {
        alive = false;
        // The doubly-even member dies by the gcd obstruction; as a trace
        // entry that elimination is a property of the whole even-b2 coset.
        tr.rule = v.rule == LocalRule::EvenGcd2 ? LocalRule::CosetEvenB2
                                                : v.rule;
        tr.place = v.place;
        break;
      }
    }
    tr.survives = alive;
    tr.verdicts = std::move(verdicts);
    if (alive) survivors.push_back(rep);
    g.trace.push_back(std::move(tr));
  }

  std::vector<SelmerPair> elems;
  for (const auto& rep : survivors)
    for (const auto& t : timg.elements) elems.push_back(pair_mul(rep, t));
  std::sort(elems.begin(), elems.end(),
            [](const SelmerPair& a, const SelmerPair& b) {
              return canonical_less(a, b);
            });
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  g.elements = std::move(elems);

  const std::size_t n = g.elements.size();
  if (n < 4 || (n & (n - 1)) != 0)
    throw CrossCheckError(
        "selmer element count is not a power of two at least 4");
  int s = -2;
  for (std::size_t m = n; m > 1; m >>= 1) ++s;
  g.rank_s = s;

  for (const auto& t : timg.elements)
    if (!contains_pair(g.elements, t))
      throw CrossCheckError("torsion image escaped the selmer set");
  for (const auto& a : g.elements)
    for (const auto& b : g.elements)
      if (!contains_pair(g.elements, pair_mul(a, b)))
        throw CrossCheckError("selmer set is not closed under pair products");

  return g;
}

RankBounds rank_bounds(const CurveParams& c,
                       const std::vector<RationalPoint>& known_points) {
  for (const auto& pt : known_points)
    if (!on_curve(pt, c))
      throw DomainError("rank bounds require points on the curve");
  const bool nontorsion =
      std::any_of(known_points.begin(), known_points.end(),
                  [](const RationalPoint& q) { return !is_torsion(q); });
  const SelmerGroup g = compute_selmer(c);
  RankBounds rb;
  rb.lower = nontorsion ? 1 : 0;
  rb.upper = g.rank_s;
  if (rb.lower > rb.upper)
    throw CrossCheckError(
        "non-torsion point found on a curve whose Selmer rank is 0");
  return rb;
}

int sha_two_bound(const CurveParams& c,
                  const std::vector<RationalPoint>& known_points) {
  const RankBounds rb = rank_bounds(c, known_points);
  return rb.upper - rb.lower;
}

}  // namespace ecdescent
