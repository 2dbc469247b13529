// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "ecdescent/localsolve.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecdescent {

namespace {

long vmod2(long v) { return ((v % 2) + 2) % 2; }

// l^m as an exact rational, m of either sign.
Rat rat_power(const Int& l, long m) {
  if (m >= 0) return Rat(ipow(l, static_cast<unsigned long>(m)));
  Rat r(1, ipow(l, static_cast<unsigned long>(-m)));
  r.canonicalize();
  return r;
}

// Residue mod l^e of the unit part x / l^{v(x)}, x != 0.
Int unit_residue(const Rat& x, const Int& l, long e) {
  Int num = x.get_num();
  Int den = x.get_den();
  while (num % l == 0) num /= l;
  while (den % l == 0) den /= l;
  Int m = ipow(l, static_cast<unsigned long>(e));
  return mod_floor(num * invmod(den, m), m);
}

}  // namespace

HomSpace make_homspace(const SelmerPair& pair, const CurveParams& curve) {
  const std::vector<Int> allowed = {Int(2), Int(3), Int(5), curve.p};
  for (const SquareClass* c : {&pair.b1, &pair.b2})
    for (const Int& q : c->support)
      if (std::find(allowed.begin(), allowed.end(), q) == allowed.end())
        throw DomainError("make_homspace: pair not supported on {2,3,5,p}");
  return HomSpace{pair, curve.p, 15 * curve.p, 24 * curve.p};
}

std::string rule_name(LocalRule rule) {
  switch (rule) {
    case LocalRule::RealSign: return "real-sign";
    case LocalRule::EvenGcd2: return "2adic-even-gcd";
    case LocalRule::CosetEvenB2: return "coset-even-b2";
    case LocalRule::B1NonResidue3: return "3adic-b1-nonresidue";
    case LocalRule::B2NonResidue3: return "3adic-b2-nonresidue";
    case LocalRule::B1NonResidueP: return "padic-b1-nonresidue";
    case LocalRule::B2NonResidueP: return "padic-b2-nonresidue";
    case LocalRule::Shared5Residue: return "5adic-shared5-residue";
    case LocalRule::B2NonResidue5: return "5adic-b2-nonresidue";
    case LocalRule::Pair3NegP: return "3adic-pair-3-negp";
    case LocalRule::HenselWitness: return "hensel-witness";
    case LocalRule::ExhaustedRefutation: return "exhausted-refutation";
  }
  throw DomainError("rule_name: unknown rule");
}

QlClass ql_class(const Rat& x, const Int& l) {
  if (x == 0) throw DomainError("ql_class: zero has no square class");
  QlClass c;
  c.parity = static_cast<int>(vmod2(valuation(x, l)));
  if (l == 2) {
    c.unit = static_cast<int>(unit_residue(x, l, 3).get_si());
  } else {
    Int u = unit_residue(x, l, 1);
    c.unit = legendre(u, l);
  }
  return c;
}

bool verify_square_cert(const SquareRootCert& cert, const Int& l) {
  if (cert.target == 0) return cert.exact && cert.approx == 0;
  if (cert.exact) return cert.approx * cert.approx == cert.target;
  if (cert.approx == 0) return false;
  Rat diff = cert.approx * cert.approx - cert.target;
  if (diff == 0) return false;  // must be flagged exact instead
  return valuation(diff, l) == cert.f_val &&
         valuation(Rat(2) * cert.approx, l) == cert.df_val &&
         cert.f_val > 2 * cert.df_val;
}

bool verify_witness(const LocalWitness& wit, const HomSpace& h) {
  const Int& l = wit.place;
  if (l < 2 || !is_prime(l)) return false;
  Rat b1(h.pair.b1.value);
  Rat b2(h.pair.b2.value);
  // Tying the three targets to one w makes the two quadric identities
  // b1 t1 - b2 t2 = rhs1 and b1 t1 - b1 b2 t3 = rhs2 exact by construction,
  // so a valid triple of square certificates lifts to an exact solution.
  if (wit.z1.target != wit.w / b1) return false;
  if (wit.z2.target != (wit.w - Rat(h.rhs1)) / b2) return false;
  if (wit.z3.target != (wit.w - Rat(h.rhs2)) / (b1 * b2)) return false;
  return verify_square_cert(wit.z1, l) && verify_square_cert(wit.z2, l) &&
         verify_square_cert(wit.z3, l);
}

bool valuation_pattern_admissible(const LocalWitness& wit, const HomSpace& h) {
  const Int& l = wit.place;
  auto vz = [&](const SquareRootCert& c) -> std::optional<long> {
    if (c.approx == 0) return std::nullopt;  // zero coordinate: no pole
    return valuation(c.approx, l);
  };
  std::optional<long> v1 = vz(wit.z1);
  std::optional<long> v2 = vz(wit.z2);
  std::optional<long> v3 = vz(wit.z3);
  auto nonneg = [](const std::optional<long>& v) { return !v || *v >= 0; };
  if (nonneg(v1) && nonneg(v2) && nonneg(v3)) return true;
  if (l == 5 && h.pair.b1.value % 5 == 0 && h.pair.b2.value % 5 == 0)
    return v3 && *v3 == -1 && nonneg(v1) && nonneg(v2);
  return v1 && v2 && v3 && *v1 == *v2 && *v2 == *v3 && *v1 < 0;
}

LocalVerdict verdict_real(const HomSpace& h) {
  LocalVerdict v;
  v.place = 0;
  v.rule = LocalRule::RealSign;
  // With b1 > 0 pick w in (0, 15p) or (24p, oo) according to the sign of b2;
  // with b1 < 0 the two equations force incompatible signs on b2.
  v.solvability =
      h.pair.b1.value > 0 ? Solvability::Solvable : Solvability::Unsolvable;
  return v;
}

namespace {

LocalVerdict refuted(const Int& place, LocalRule rule) {
  LocalVerdict v;
  v.place = place;
  v.solvability = Solvability::Unsolvable;
  v.rule = rule;
  return v;
}

}  // namespace

std::optional<LocalVerdict> filter_2adic(const HomSpace& h) {
  // 2 | gcd(b1, b2): the first equation keeps v_2 >= 1 while v_2(15p) = 0.
  if (h.pair.b1.value % 2 == 0 && h.pair.b2.value % 2 == 0)
    return refuted(2, LocalRule::EvenGcd2);
  return std::nullopt;
}

std::optional<LocalVerdict> filter_3adic(const HomSpace& h) {
  const Int& b1 = h.pair.b1.value;
  const Int& b2 = h.pair.b2.value;
  bool d1 = b1 % 3 == 0;
  bool d2 = b2 % 3 == 0;
  Int three(3);
  // Applies only when 3 divides exactly one coordinate; with 3 | gcd both
  // equations lose a factor of 3 and the congruence argument says nothing.
  if (d1 && !d2) {
    if (legendre(b1 / 3, three) != legendre(2 * h.p, three))
      return refuted(3, LocalRule::B1NonResidue3);
  } else if (d2 && !d1) {
    if (legendre(-(b2 / 3), three) != legendre(2 * h.p, three))
      return refuted(3, LocalRule::B2NonResidue3);
  }
  return std::nullopt;
}

std::optional<LocalVerdict> filter_padic(const HomSpace& h) {
  const Int& b1 = h.pair.b1.value;
  const Int& b2 = h.pair.b2.value;
  const Int& p = h.p;
  bool d1 = b1 % p == 0;
  bool d2 = b2 % p == 0;
  if (d1 && !d2) {
    // Every p-adic branch needs b1/p a residue exactly when 15 is.
    if (legendre(b1 / p, p) != legendre(Int(15), p))
      return refuted(p, LocalRule::B1NonResidueP);
  } else if (d2 && !d1) {
    // Every branch needs (-b2/p | p) = (15 | p); comparing against the
    // recomputed (15 | p) keeps the test valid outside the theorem classes,
    // where (15 | p) = 1 is not guaranteed.
    if (legendre(-(b2 / p), p) != legendre(Int(15), p))
      return refuted(p, LocalRule::B2NonResidueP);
  }
  return std::nullopt;
}

std::optional<LocalVerdict> filter_5adic(const HomSpace& h) {
  const Int& b1 = h.pair.b1.value;
  const Int& b2 = h.pair.b2.value;
  Int five(5);
  bool d1 = b1 % 5 == 0;
  bool d2 = b2 % 5 == 0;
  if (d1 && d2) {
    // With 5 | gcd every surviving branch forces (p | 5) = 1 when
    // (b1 b2 / 25 | 5) = 1, so the pair dies whenever (p | 5) = -1.  The
    // second symbol is recomputed because primes outside the theorem
    // classes may have (p | 5) = 1.
    if (legendre((b1 / 5) * (b2 / 5), five) == 1 &&
        legendre(h.p, five) == -1)
      return refuted(5, LocalRule::Shared5Residue);
  } else if (!d1 && d2) {
    if (legendre(b2 / 5, five) != legendre(3 * h.p, five))
      return refuted(5, LocalRule::B2NonResidue5);
  }
  return std::nullopt;
}

std::optional<LocalVerdict> filter_3p_special(const HomSpace& h) {
  // (3, -p): the first equation mod 9 forces z2^2 = -(unit)^2 mod 3.
  if (h.pair.b1.value == 3 && h.pair.b2.value == -h.p)
    return refuted(3, LocalRule::Pair3NegP);
  return std::nullopt;
}

std::optional<LocalVerdict> filters_at(const HomSpace& h, const Int& l) {
  if (l == 2) return filter_2adic(h);
  if (l == 3) {
    if (auto v = filter_3p_special(h)) return v;
    return filter_3adic(h);
  }
  if (l == 5) return filter_5adic(h);
  if (l == h.p) return filter_padic(h);
  return std::nullopt;
}

HomSpace reduce_by_coset_parity(const HomSpace& h, const TorsionImage& a) {
  std::vector<SelmerPair> members;
  members.reserve(a.elements.size());
  for (const SelmerPair& t : a.elements) members.push_back(pair_mul(h.pair, t));
  std::sort(members.begin(), members.end(),
            [](const SelmerPair& x, const SelmerPair& y) {
              return canonical_less(x, y);
            });
  auto with_pair = [&](const SelmerPair& m) {
    return HomSpace{m, h.p, h.rhs1, h.rhs2};
  };
  if (h.pair.b2.value % 2 == 0) {
    // b2-parity is coset-constant, so this coset cannot reach odd b2; the
    // member with both coordinates even exposes the 2-adic obstruction.
    for (const SelmerPair& m : members)
      if (m.b1.value % 2 == 0) return with_pair(m);
    throw DomainError("reduce_by_coset_parity: no even-b1 member");
  }
  for (const SelmerPair& m : members) {
    bool bad3 = m.b1.value % 3 == 0 && m.b2.value % 3 == 0;
    bool badp = m.b1.value % h.p == 0 && m.b2.value % h.p == 0;
    if (!bad3 && !badp) return with_pair(m);
  }
  throw DomainError("reduce_by_coset_parity: no normalized member");
}

namespace {

// Bundled data for the residue scan at one finite prime.
struct LocalCtx {
  Int l;
  long delta = 1;  // unit classes are pinned once known mod l^delta
  Rat b1, b2, b12;
  Rat r1, r2, r9;  // 15p, 24p, 9p
  QlClass c1, c2, c3;
  long vb1 = 0, vmin = 0, vstar = 0;
  long depth = 0;  // modulus exponent at which unresolved branches prune
};

enum class Fit { Match, Mismatch, Unresolved };

// Whether e + l^freedom * t lands in target-or-zero for every t (Match for
// all, Mismatch for all), or depends on digits of t not yet fixed.
Fit fit_against(const LocalCtx& ctx, const Rat& e, long freedom,
                const QlClass& target) {
  if (e == 0) return Fit::Match;  // a vanishing coordinate is a valid point
  long v = valuation(e, ctx.l);
  if (freedom - v >= ctx.delta)
    return ql_class(e, ctx.l) == target ? Fit::Match : Fit::Mismatch;
  return Fit::Unresolved;
}

// Searches units u == u0 (mod l^j) for w = l^k u meeting both conditions.
// Branches whose difference cancels beyond ctx.depth are pruned: such w sit
// deeper than vstar + delta around 15p or 24p, where solvability reduces to
// the closed-form regime checks the caller has already performed.
std::optional<Rat> refine(const LocalCtx& ctx, long k, const Int& u0, long j) {
  if (k + j > ctx.depth) return std::nullopt;
  Rat w = Rat(u0) * rat_power(ctx.l, k);
  Fit f1 = fit_against(ctx, w - ctx.r1, k + j, ctx.c2);
  if (f1 == Fit::Mismatch) return std::nullopt;
  Fit f2 = fit_against(ctx, w - ctx.r2, k + j, ctx.c3);
  if (f2 == Fit::Mismatch) return std::nullopt;
  if (f1 == Fit::Match && f2 == Fit::Match) return w;
  Int step = ipow(ctx.l, static_cast<unsigned long>(j));
  for (Int t = 0; t < ctx.l; ++t)
    if (auto res = refine(ctx, k, u0 + t * step, j + 1)) return res;
  return std::nullopt;
}

std::optional<Rat> scan_valuation(const LocalCtx& ctx, long k) {
  if (vmod2(k) != ctx.c1.parity) return std::nullopt;
  Int base = ipow(ctx.l, static_cast<unsigned long>(ctx.delta));
  for (Int u0 = 1; u0 < base; ++u0) {
    if (u0 % ctx.l == 0) continue;
    Rat w = Rat(u0) * rat_power(ctx.l, k);
    if (!(ql_class(w, ctx.l) == ctx.c1)) continue;
    if (auto res = refine(ctx, k, u0, ctx.delta)) return res;
  }
  return std::nullopt;
}

SquareRootCert make_sqrt_cert(const Rat& target, const Int& l) {
  SquareRootCert cert;
  cert.target = target;
  if (target == 0) {
    cert.exact = true;
    return cert;
  }
  long v = valuation(target, l);
  if (vmod2(v) != 0)
    throw DomainError("make_sqrt_cert: target has odd valuation");
  long m = v / 2;
  long e = (l == 2) ? 5 : 3;
  Int u = unit_residue(target, l, e);
  std::optional<Int> y = sqrt_mod_prime_power(u, l, e);
  if (!y || *y == 0)
    throw DomainError("make_sqrt_cert: unit part is not a square residue");
  cert.approx = Rat(*y) * rat_power(l, m);
  if (cert.approx * cert.approx == target) {
    cert.exact = true;
    return cert;
  }
  cert.f_val = valuation(cert.approx * cert.approx - target, l);
  cert.df_val = valuation(Rat(2) * cert.approx, l);
  if (cert.f_val <= 2 * cert.df_val)
    throw DomainError("make_sqrt_cert: lifting margin violated");
  return cert;
}

LocalWitness build_witness(const HomSpace& h, const Int& l, const Rat& w) {
  Rat b1(h.pair.b1.value);
  Rat b2(h.pair.b2.value);
  LocalWitness wit;
  wit.place = l;
  wit.w = w;
  wit.z1 = make_sqrt_cert(w / b1, l);
  wit.z2 = make_sqrt_cert((w - Rat(h.rhs1)) / b2, l);
  wit.z3 = make_sqrt_cert((w - Rat(h.rhs2)) / (b1 * b2), l);
  if (!verify_witness(wit, h))
    throw DomainError("build_witness: constructed witness failed checks");
  return wit;
}

}  // namespace

LocalVerdict decide_local(const HomSpace& h, const Int& l,
                          std::optional<long> depth_limit) {
  if (l < 2 || !is_prime(l))
    throw DomainError("decide_local: place must be a finite prime");
  if (depth_limit && *depth_limit < 1)
    throw DomainError("decide_local: depth limit must be positive");

  LocalCtx ctx;
  ctx.l = l;
  ctx.delta = (l == 2) ? 3 : 1;
  ctx.b1 = Rat(h.pair.b1.value);
  ctx.b2 = Rat(h.pair.b2.value);
  ctx.b12 = ctx.b1 * ctx.b2;
  ctx.r1 = Rat(h.rhs1);
  ctx.r2 = Rat(h.rhs2);
  ctx.r9 = ctx.r2 - ctx.r1;
  ctx.c1 = ql_class(ctx.b1, l);
  ctx.c2 = ql_class(ctx.b2, l);
  ctx.c3 = ql_class(ctx.b12, l);
  long v15 = valuation(ctx.r1, l);
  long v24 = valuation(ctx.r2, l);
  long v9 = valuation(ctx.r9, l);
  ctx.vb1 = valuation(ctx.b1, l);
  ctx.vmin = std::min(v15, v24);
  ctx.vstar = std::max({v15, v24, v9});
  long dflt = 2 * valuation(Rat(4) * ctx.b12 * ctx.r1 * ctx.r2, l) + 3;
  ctx.depth = std::max({depth_limit.value_or(dflt), dflt,
                        ctx.vstar + 2 * ctx.delta + 2});

  auto solvable = [&](const Rat& w) {
    LocalVerdict v;
    v.place = l;
    v.solvability = Solvability::Solvable;
    v.rule = LocalRule::HenselWitness;
    v.witness = build_witness(h, l, w);
    return v;
  };
  auto cls = [&](const Rat& x) { return ql_class(x, l); };

  // Closed-form regimes: w = 0, w = 15p, w = 24p, and w of deep negative
  // valuation.  Together with the window scan below these cover Q_l: any w
  // beyond the window valuations or cancelling deeply against 15p or 24p
  // has all three square classes pinned to one of these four patterns.
  if (cls(-ctx.r1) == ctx.c2 && cls(-ctx.r2) == ctx.c3) return solvable(0);
  if (cls(ctx.r1) == ctx.c1 && cls(-ctx.r9) == ctx.c3) return solvable(ctx.r1);
  if (cls(ctx.r2) == ctx.c1 && cls(ctx.r9) == ctx.c2) return solvable(ctx.r2);
  if (ctx.c1 == ctx.c2 && ctx.c2 == ctx.c3) {
    long need = ctx.vb1 - ctx.vmin + ctx.delta;
    long steps = std::max(1L, need / 2 + 1);
    return solvable(ctx.b1 * rat_power(l, -2 * steps));
  }

  for (long k = ctx.vmin - ctx.delta - 1; k <= ctx.vstar + ctx.delta + 1; ++k)
    if (auto w = scan_valuation(ctx, k)) return solvable(*w);

  LocalVerdict v;
  v.place = l;
  v.solvability = Solvability::Unsolvable;
  v.rule = LocalRule::ExhaustedRefutation;
  v.refutation_depth = ctx.depth;
  return v;
}

std::vector<LocalVerdict> verdict_all_places(const HomSpace& h,
                                             const LocalOptions& opt) {
  std::vector<LocalVerdict> out;
  out.push_back(verdict_real(h));
  for (const Int& l : {Int(2), Int(3), Int(5), h.p}) {
    std::optional<LocalVerdict> f;
    if (opt.mode != DecisionMode::DecideOnly) f = filters_at(h, l);
    if (opt.mode == DecisionMode::FiltersPlusDecide && f) {
      out.push_back(*f);
      continue;
    }
    LocalVerdict d = decide_local(h, l, opt.depth_limit);
    if (f && opt.mode == DecisionMode::Both) {
      if (f->solvability != d.solvability)
        throw CrossCheckError("filter and decision disagree at place " +
                              l.get_str() + " for pair (" +
                              h.pair.b1.value.get_str() + ", " +
                              h.pair.b2.value.get_str() + ")");
      // Keep the decision's certificate but report the filter's more
      // specific obstruction name.
      d.rule = f->rule;
    }
    out.push_back(d);
  }
  int done = 0;
  for (Int l = 7; l <= 100 && done < opt.spot_check_places; ++l) {
    if (!is_prime(l) || l == h.p) continue;
    // Good reduction outside {2, 3, 5, p}: a smooth genus-one curve over
    // F_l always has a point, so these must come back solvable.
    LocalVerdict d = decide_local(h, l, opt.depth_limit);
    if (d.solvability != Solvability::Solvable)
      throw CrossCheckError("good-reduction place " + l.get_str() +
                            " came back unsolvable for pair (" +
                            h.pair.b1.value.get_str() + ", " +
                            h.pair.b2.value.get_str() + ")");
    out.push_back(d);
    ++done;
  }
  return out;
}

}  // namespace ecdescent
