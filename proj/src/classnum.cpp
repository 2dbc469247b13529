// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "ecdescent/classnum.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace ecdescent {
namespace {

// Enumeration is quadratic in sqrt(|d|); beyond this the module is not a
// sensible tool and the caller should hear that, not wait.
const long kMaxAbsDisc = 10000000;

// Fundamental discriminant for n, where n is either already fundamental or
// a squarefree m whose field has discriminant m or 4m by residue mod 4.
Int to_fundamental(const Int& n) {
  if (n == 0 || n == 1)
    throw DomainError("no quadratic field has discriminant " + n.get_str());
  if (iabs(n) > kMaxAbsDisc)
    throw DomainError("discriminant out of supported range: " + n.get_str());
  Int r = mod_floor(n, 4);
  if (r == 1) {
    if (squarefree_part(n).value != n)
      throw DomainError("neither fundamental nor squarefree: " + n.get_str());
    return n;
  }
  if (r == 0) {
    Int q = n / 4;
    Int rq = mod_floor(q, 4);
    if ((rq == 2 || rq == 3) && squarefree_part(q).value == q) return n;
    throw DomainError("not a fundamental discriminant: " + n.get_str());
  }
  // n = 2 or 3 mod 4: a squarefree m here means discriminant 4m.
  if (squarefree_part(n).value != n)
    throw DomainError("neither fundamental nor squarefree: " + n.get_str());
  Int d = 4 * n;
  if (iabs(d) > kMaxAbsDisc)
    throw DomainError("discriminant out of supported range: " + d.get_str());
  return d;
}

// d < 0: reduced positive definite forms (a, b, c), b^2 - 4ac = d, with
// |b| <= a <= c and b >= 0 whenever |b| = a or a = c, one per class.
Int count_definite_forms(const Int& d) {
  Int count = 0;
  Int amax = isqrt(iabs(d) / 3);  // a <= c forces 3a^2 <= |d|
  for (Int a = 1; a <= amax; ++a) {
    Int fa = 4 * a;
    Int b = -a;
    if ((b - d) % 2 != 0) b += 1;  // b must match d's parity
    for (; b <= a; b += 2) {
      Int num = b * b - d;
      if (num % fa != 0) continue;
      Int c = num / fa;
      if (c < a) continue;
      if (b == -a || (a == c && b < 0)) continue;  // count the b >= 0 twin
      ++count;
    }
  }
  return count;
}

struct IForm {
  Int a, b, c;
  bool operator==(const IForm& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
};

// d > 0 non-square: reduced means 0 < b < sqrt(d) < b + 2|a| and
// 2|a| < sqrt(d) + b, tested exactly on squares.
std::vector<IForm> reduced_indefinite_forms(const Int& d) {
  std::vector<IForm> out;
  Int s = isqrt(d);
  Int b = (mod_floor(d, 2) == 0) ? Int(2) : Int(1);
  for (; b <= s; b += 2) {
    Int num = b * b - d;  // negative: reduced indefinite forms have ac < 0
    Int alim = (s + b) / 2 + 1;
    for (Int aa = 1; aa <= alim; ++aa) {
      Int e = 2 * aa;
      if ((e + b) * (e + b) <= d) continue;       // e > sqrt(d) - b
      if (e > b && (e - b) * (e - b) >= d) break;  // e < sqrt(d) + b
      if (num % (4 * aa) != 0) continue;
      Int c = num / (4 * aa);
      out.push_back({aa, b, c});
      out.push_back({-aa, b, -c});
    }
  }
  return out;
}

// Right-neighbor step; maps a reduced indefinite form to the next one on
// its cycle.  b' is the representative of -b mod 2|c| in (sqrt(d)-2|c|, sqrt(d)].
IForm rho_reduced(const IForm& f, const Int& d, const Int& s) {
  Int m = 2 * iabs(f.c);
  Int bp = s - mod_floor(s + f.b, m);
  return {f.c, bp, (bp * bp - d) / (4 * f.c)};
}

// Wide class count: cycles of reduced forms, merged under the involution
// (a, b, c) -> (-a, b, -c).  The merge keys a cycle by the minimum (|a|, b)
// over its members; c is determined by (|a|, b, d), and the involution maps
// cycles to cycles member-wise, so the key is constant exactly on merged
// pairs.  Unmerged cycles count the narrow group instead, which is twice
// too big whenever the fundamental unit has norm +1.
Int count_indefinite_cycles_merged(const Int& d) {
  std::vector<IForm> forms = reduced_indefinite_forms(d);
  Int s = isqrt(d);
  std::set<std::tuple<Int, Int, Int>> visited;
  std::set<std::pair<Int, Int>> keys;
  long cap = 4 * static_cast<long>(forms.size()) + 16;
  for (const IForm& f0 : forms) {
    if (visited.count({f0.a, f0.b, f0.c})) continue;
    std::pair<Int, Int> key{iabs(f0.a), f0.b};
    IForm g = f0;
    long steps = 0;
    do {
      visited.insert({g.a, g.b, g.c});
      key = std::min(key, {iabs(g.a), g.b});
      g = rho_reduced(g, d, s);
      if (++steps > cap)
        throw CrossCheckError("indefinite cycle failed to close at d = " +
                              d.get_str());
    } while (!(g == f0));
    keys.insert(key);
  }
  return Int(static_cast<long>(keys.size()));
}

}  // namespace

QuadClassData h_quadratic(const Int& n) {
  Int d = to_fundamental(n);
  QuadClassData out;
  out.d = d;
  if (d < 0) {
    out.method = ClassMethod::DefiniteFormsCount;
    out.h = count_definite_forms(d);
  } else {
    out.method = ClassMethod::IndefiniteCycleCount;
    out.h = count_indefinite_cycles_merged(d);
  }
  if (out.h < 1)
    throw CrossCheckError("class enumeration found no classes at d = " +
                          d.get_str());
  return out;
}

BiquadClassEstimate biquad_estimate(const BiquadField& k) {
  BiquadClassEstimate out;
  out.h1 = h_quadratic(k.d1.value).h;
  out.h2 = h_quadratic(k.d2.value).h;
  out.h3 = h_quadratic(k.d3.value).h;
  Int prod = out.h1 * out.h2 * out.h3;
  // h(K) = Q h1 h2 h3 / 2 (imaginary) or / 4 (real); the unit index Q is
  // not computed, so keep every value the formula allows.
  Int denom = k.real ? Int(4) : Int(2);
  std::vector<Int> qs =
      k.real ? std::vector<Int>{1, 2, 4} : std::vector<Int>{1, 2};
  for (const Int& q : qs) {
    Int num = q * prod;
    if (mod_floor(num, denom) != 0) continue;
    out.candidates.push_back(num / denom);
  }
  std::sort(out.candidates.begin(), out.candidates.end());
  out.candidates.erase(
      std::unique(out.candidates.begin(), out.candidates.end()),
      out.candidates.end());
  out.parity_even_certain = !out.candidates.empty();
  for (const Int& h : out.candidates)
    if (mod_floor(h, 2) != 0) out.parity_even_certain = false;
  return out;
}

}  // namespace ecdescent
