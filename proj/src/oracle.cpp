// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "ecdescent/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace ecdescent {

// Residue tables are dense arrays; one entry per residue class mod l^k.
constexpr long kMaxTable = 1L << 26;

// Depth ladder for the escalating search, capped by the table budget.
std::vector<long> depth_schedule(const Int& l) {
  std::vector<long> raw;
  if (l == 2)
    raw = {8, 12, 16};
  else if (l == 3)
    raw = {5, 8, 11};
  else if (l == 5)
    raw = {4, 6, 8};
  else
    raw = {3, 4, 5, 6};
  std::vector<long> out;
  for (long k : raw)
    if (ipow(l, static_cast<unsigned long>(k)) <= kMaxTable) out.push_back(k);
  if (out.empty()) out.push_back(2);
  return out;
}

namespace {

// Candidate z1 residues put through exact certification before giving up.
constexpr int kMaxCertCandidates = 64;
// Matching preimages tried per equation while certifying one candidate.
constexpr int kMaxPreimageTests = 16;

long mulmod(long a, long b, long m) {
  return static_cast<long>((static_cast<unsigned long long>(a) *
                            static_cast<unsigned long long>(b)) %
                           static_cast<unsigned long long>(m));
}

long to_mod(const Int& x, long m) { return mod_floor(x, Int(m)).get_si(); }

// One valuation stratum of the search space, as a cleared integral system
//   c1 u1^2 - c2 u2^2 = r1,  c1 u1^2 - c3 u3^2 = r2
// with per-variable unit restrictions.
struct Pattern {
  std::string name;
  long pole_depth;
  Int c1, c2, c3;
  Int r1, r2;
  bool unit1, unit2, unit3;
};

// Integral solutions; common poles z_i = u_i / l^j (all u_i units), where
// depths with 2j >= k collapse to the same congruences and are searched
// once; and for l = 5 with 25 | b1 b2 the lone-pole shape z3 = u3 / 5.
std::vector<Pattern> make_patterns(const HomSpace& h, const Int& l, long k) {
  const Int b1 = h.pair.b1.value;
  const Int b2 = h.pair.b2.value;
  const Int b12 = b1 * b2;
  std::vector<Pattern> out;
  out.push_back(
      {"integral", 0, b1, b2, b12, h.rhs1, h.rhs2, false, false, false});
  for (long j = 1;; ++j) {
    const Int scale = ipow(l, static_cast<unsigned long>(2 * j));
    out.push_back({"pole-" + std::to_string(j), j, b1, b2, b12,
                   h.rhs1 * scale, h.rhs2 * scale, true, true, true});
    if (2 * j >= k) break;
  }
  if (l == 5 && b1 % 5 == 0 && b2 % 5 == 0)
    out.push_back({"shared-five", 0, b1, b2, b12 / 25, h.rhs1, h.rhs2, false,
                   false, true});
  return out;
}

// presence[v] = 1 iff v = coef * u^2 mod m for an admissible u.
std::vector<std::uint8_t> square_value_table(long coef, long m, long l,
                                             bool units_only) {
  std::vector<std::uint8_t> table(static_cast<std::size_t>(m), 0);
  for (long u = 0; u < m; ++u) {
    if (units_only && u % l == 0) continue;
    table[static_cast<std::size_t>(mulmod(coef, mulmod(u, u, m), m))] = 1;
  }
  return table;
}

struct EqCert {
  Int u;
  long f_val = 0, df_val = 0;
  bool exact = false;
};

// Scans admissible u with coef * u^2 = key (mod m) for one whose exact
// residual F = lead - coef u^2 - rhs vanishes or clears the Hensel margin
// v(F) > 2 v(2 coef u); such a u lifts to an exact root with u1 held fixed.
std::optional<EqCert> certify_equation(const Int& lead, const Int& coef,
                                       const Int& rhs, long key, long coefm,
                                       long m, const Int& l, bool units_only,
                                       long lsmall,
                                       unsigned long long* units) {
  int tested = 0;
  for (long u = 0; u < m && tested < kMaxPreimageTests; ++u) {
    if (units_only && u % lsmall == 0) continue;
    ++*units;
    if (mulmod(coefm, mulmod(u, u, m), m) != key) continue;
    ++tested;
    const Int uu(u);
    const Int f = lead - coef * uu * uu - rhs;
    if (f == 0) return EqCert{uu, 0, 0, true};
    const Int df = 2 * coef * uu;
    if (df == 0) continue;
    const long vf = valuation(f, l);
    const long vd = valuation(df, l);
    if (vf > 2 * vd) return EqCert{uu, vf, vd, false};
  }
  return std::nullopt;
}

struct PatternResult {
  bool any_candidate = false;
  std::optional<BruteWitness> witness;
};

PatternResult search_pattern(const Pattern& pat, const Int& l, long lsmall,
                             long m, const Int& modulus,
                             unsigned long long* units) {
  const long c1m = to_mod(pat.c1, m);
  const long c2m = to_mod(pat.c2, m);
  const long c3m = to_mod(pat.c3, m);
  const long r1m = to_mod(pat.r1, m);
  const long r2m = to_mod(pat.r2, m);
  const auto t2 = square_value_table(c2m, m, lsmall, pat.unit2);
  const auto t3 = square_value_table(c3m, m, lsmall, pat.unit3);
  *units += 2 * static_cast<unsigned long long>(m);

  PatternResult res;
  int attempts = 0;
  for (long u1 = 0; u1 < m; ++u1) {
    if (pat.unit1 && u1 % lsmall == 0) continue;
    ++*units;
    const long lead = mulmod(c1m, mulmod(u1, u1, m), m);
    long key1 = lead - r1m;
    if (key1 < 0) key1 += m;
    if (!t2[static_cast<std::size_t>(key1)]) continue;
    long key2 = lead - r2m;
    if (key2 < 0) key2 += m;
    if (!t3[static_cast<std::size_t>(key2)]) continue;
    res.any_candidate = true;
    if (attempts >= kMaxCertCandidates) continue;
    ++attempts;
    const Int z1(u1);
    const Int lead_exact = pat.c1 * z1 * z1;
    const auto e1 = certify_equation(lead_exact, pat.c2, pat.r1, key1, c2m, m,
                                     l, pat.unit2, lsmall, units);
    if (!e1) continue;
    const auto e2 = certify_equation(lead_exact, pat.c3, pat.r2, key2, c3m, m,
                                     l, pat.unit3, lsmall, units);
    if (!e2) continue;
    BruteWitness w;
    w.pattern = pat.name;
    w.pole_depth = pat.pole_depth;
    w.z1 = z1;
    w.z2 = e1->u;
    w.z3 = e2->u;
    w.modulus = modulus;
    w.f1_val = e1->f_val;
    w.df1_val = e1->df_val;
    w.f1_exact = e1->exact;
    w.f2_val = e2->f_val;
    w.df2_val = e2->df_val;
    w.f2_exact = e2->exact;
    res.witness = std::move(w);
    return res;
  }
  return res;
}

std::string pair_label(const HomSpace& h) {
  std::ostringstream os;
  os << "(" << h.pair.b1.value << ", " << h.pair.b2.value << ")";
  return os.str();
}

std::optional<bool> brute_resolve(const HomSpace& h, const Int& l,
                                  unsigned long long* units) {
  for (long k : depth_schedule(l)) {
    const SearchReport rep = brute_local(h, l, k);
    *units += rep.elapsed_units;
    if (rep.outcome == SearchReport::Outcome::WitnessFound) return true;
    if (rep.outcome == SearchReport::Outcome::CertifiedEmpty) return false;
  }
  return std::nullopt;
}

}  // namespace

bool verify_brute_witness(const BruteWitness& w, const HomSpace& h,
                          const Int& l) {
  if (w.modulus < 2) return false;
  const long k = valuation(w.modulus, l);
  if (ipow(l, static_cast<unsigned long>(k)) != w.modulus) return false;
  const Int b1 = h.pair.b1.value;
  const Int b2 = h.pair.b2.value;
  Int c3 = b1 * b2;
  Int r1 = h.rhs1;
  Int r2 = h.rhs2;
  bool unit1 = false, unit2 = false, unit3 = false;
  if (w.pattern == "integral") {
    if (w.pole_depth != 0) return false;
  } else if (w.pattern == "shared-five") {
    if (w.pole_depth != 0 || l != 5) return false;
    if (b1 % 5 != 0 || b2 % 5 != 0) return false;
    c3 /= 25;
    unit3 = true;
  } else {
    if (w.pole_depth < 1) return false;
    const Int scale = ipow(l, static_cast<unsigned long>(2 * w.pole_depth));
    r1 *= scale;
    r2 *= scale;
    unit1 = unit2 = unit3 = true;
  }
  const auto admissible = [&](const Int& z, bool unit) {
    if (z < 0 || z >= w.modulus) return false;
    return !unit || z % l != 0;
  };
  if (!admissible(w.z1, unit1) || !admissible(w.z2, unit2) ||
      !admissible(w.z3, unit3))
    return false;
  const Int f1 = b1 * w.z1 * w.z1 - b2 * w.z2 * w.z2 - r1;
  const Int f2 = b1 * w.z1 * w.z1 - c3 * w.z3 * w.z3 - r2;
  if (mod_floor(f1, w.modulus) != 0 || mod_floor(f2, w.modulus) != 0)
    return false;
  const auto equation_ok = [&](const Int& f, const Int& coef, const Int& z,
                               bool exact, long f_val, long df_val) {
    if (exact) return f == 0;
    if (f == 0) return false;
    const Int df = 2 * coef * z;
    if (df == 0) return false;
    return valuation(f, l) == f_val && valuation(df, l) == df_val &&
           f_val > 2 * df_val;
  };
  return equation_ok(f1, b2, w.z2, w.f1_exact, w.f1_val, w.df1_val) &&
         equation_ok(f2, c3, w.z3, w.f2_exact, w.f2_val, w.df2_val);
}

SearchReport brute_local(const HomSpace& h, const Int& l, long k) {
  if (k < 1) throw DomainError("search depth must be at least 1");
  if (!is_prime(l)) throw DomainError("search place must be prime");
  SearchReport rep;
  rep.place = l;
  rep.bound = k;
  {
    std::ostringstream os;
    os << pair_label(h) << " mod " << l << "^" << k;
    rep.target = os.str();
  }
  if (verdict_real(h).solvability == Solvability::Unsolvable) {
    rep.outcome = SearchReport::Outcome::Skipped;
    rep.target += " [skipped: refuted at the real place]";
    return rep;
  }
  const Int modulus = ipow(l, static_cast<unsigned long>(k));
  if (modulus > kMaxTable)
    throw DomainError("residue table too large at this depth");
  const long m = modulus.get_si();
  const long lsmall = l.get_si();

  bool any_candidate = false;
  for (const auto& pat : make_patterns(h, l, k)) {
    auto pr = search_pattern(pat, l, lsmall, m, modulus, &rep.elapsed_units);
    if (pr.witness) {
      if (!verify_brute_witness(*pr.witness, h, l))
        throw CrossCheckError("brute witness failed exact re-verification");
      rep.outcome = SearchReport::Outcome::WitnessFound;
      rep.found = std::move(pr.witness);
      return rep;
    }
    any_candidate = any_candidate || pr.any_candidate;
  }
  rep.outcome = any_candidate ? SearchReport::Outcome::Inconclusive
                              : SearchReport::Outcome::CertifiedEmpty;
  return rep;
}

std::vector<RationalPoint> point_search(const CurveParams& c,
                                        const Int& height_bound,
                                        const std::vector<Int>& denominators) {
  if (height_bound < 1) throw DomainError("height bound must be at least 1");
  std::vector<RationalPoint> out;
  for (const Int& t : denominators) {
    if (t < 1) throw DomainError("denominators must be positive");
    const Int t2 = t * t;
    const Int t6 = t2 * t2 * t2;
    const Int a2t = c.a2 * t2;
    const Int a6t = c.a6 * t6;
    for (Int r = -height_bound; r <= height_bound; ++r) {
      if (igcd(r, t) != 1) continue;
      const Int s2 = r * r * (r + a2t) + a6t;
      if (s2 < 0 || !is_perfect_square(s2)) continue;
      const Int s = isqrt(s2);
      out.push_back(make_affine(r, t, s));
      if (s != 0) out.push_back(make_affine(r, t, -s));
    }
  }
  for (const auto& pt : out)
    if (!on_curve(pt, c))
      throw CrossCheckError("searched point fails the curve equation");
  std::sort(out.begin(), out.end(),
            [](const RationalPoint& a, const RationalPoint& b) {
              if (a.t != b.t) return a.t < b.t;
              if (a.r != b.r) return a.r < b.r;
              return a.s < b.s;
            });
  return out;
}

CrossCheckReport cross_check_filters(const CurveParams& c) {
  CrossCheckReport rep;
  rep.p = c.p;
  const auto pairs = all_pairs(c);
  const TorsionImage timg = torsion_image(c);
  const std::array<Int, 4> finite{Int(2), Int(3), Int(5), c.p};

  // coset key -> per-place set of observed solvability bits (index 0 = real)
  std::map<std::string, std::array<std::set<int>, 5>> cosets;
  const auto coset_key = [&](const SelmerPair& q) {
    const SelmerPair r = coset_reduce(q, timg);
    return r.b1.value.get_str() + "," + r.b2.value.get_str();
  };
  unsigned long long units = 0;

  for (const auto& pr : pairs) {
    const HomSpace h = make_homspace(pr, c);
    ++rep.pairs_checked;
    const std::string key = coset_key(pr);
    const bool real_ok =
        verdict_real(h).solvability == Solvability::Solvable;
    ++rep.verdicts_compared;
    cosets[key][0].insert(real_ok ? 1 : 0);

    for (std::size_t i = 0; i < finite.size(); ++i) {
      const Int& l = finite[i];
      const LocalVerdict dec = decide_local(h, l);
      if (dec.solvability == Solvability::Undecided) {
        rep.unresolved.push_back({pr, l, "decision procedure undecided"});
        continue;
      }
      const bool dec_ok = dec.solvability == Solvability::Solvable;
      cosets[key][i + 1].insert(dec_ok ? 1 : 0);

      const auto filt = filters_at(h, l);
      if (filt) {
        ++rep.verdicts_compared;
        const bool filt_ok = filt->solvability == Solvability::Solvable;
        if (filt_ok != dec_ok)
          rep.disagreements.push_back(
              {pr, l, "filter contradicts decision procedure"});
      }

      // Pairs dead at the real place skip the residue search; the real
      // refutation already settles the homogeneous space.
      if (!real_ok) continue;
      const auto brute_ok = brute_resolve(h, l, &units);
      if (!brute_ok) {
        rep.unresolved.push_back(
            {pr, l, "residue search unresolved at maximum depth"});
        continue;
      }
      ++rep.verdicts_compared;
      if (*brute_ok != dec_ok)
        rep.disagreements.push_back(
            {pr, l, "residue search contradicts decision procedure"});
      if (filt) {
        ++rep.verdicts_compared;
        const bool filt_ok = filt->solvability == Solvability::Solvable;
        if (filt_ok != *brute_ok)
          rep.disagreements.push_back(
              {pr, l, "residue search contradicts filter"});
      }
    }
  }

  for (const auto& [key, places] : cosets) {
    (void)key;
    for (const auto& seen : places)
      if (seen.size() > 1) ++rep.coset_violations;
  }
  return rep;
}

}  // namespace ecdescent
