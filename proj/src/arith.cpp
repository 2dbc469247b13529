// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include "ecdescent/arith.hpp"

#include <algorithm>
#include <map>

namespace ecdescent {

Int igcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

Int mod_floor(const Int& a, const Int& m) {
  if (m <= 0) throw DomainError("mod_floor: modulus must be positive");
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int powmod(const Int& base, const Int& e, const Int& m) {
  if (e < 0) throw DomainError("powmod: exponent must be nonnegative");
  if (m <= 0) throw DomainError("powmod: modulus must be positive");
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int invmod(const Int& a, const Int& m) {
  if (m <= 0) throw DomainError("invmod: modulus must be positive");
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DomainError("invmod: argument not invertible");
  return r;
}

bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt: argument must be nonnegative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

constexpr int kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin_composite(const Int& n, const Int& base, const Int& d, long s) {
  Int x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return false;
  for (long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (int q : kSmallPrimes) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  static const Int kTwo64 = Int(1) << 64;
  if (n < kTwo64) {
    // The 12 bases below are a deterministic witness set for every n < 2^64.
    Int d = n - 1;
    long s = 0;
    while (d % 2 == 0) {
      d /= 2;
      ++s;
    }
    for (int base : kSmallPrimes)
      if (miller_rabin_composite(n, base, d, s)) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

struct RhoBudget {
  unsigned long remaining;
  void spend(unsigned long amount) {
    if (remaining < amount)
      throw FactorBudgetError("factor: rho iteration budget exhausted");
    remaining -= amount;
  }
};

// Brent-cycle rho; returns a nontrivial factor of an odd composite n coprime
// to 30. Deterministic: the random state is seeded per factor() call.
Int pollard_brent(const Int& n, RhoBudget& budget, gmp_randstate_t rng) {
  for (;;) {
    Int y, c;
    mpz_urandomm(y.get_mpz_t(), rng, Int(n - 3).get_mpz_t());
    y += 2;
    mpz_urandomm(c.get_mpz_t(), rng, Int(n - 2).get_mpz_t());
    c += 1;
    const long batch = 128;
    Int g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      budget.spend(mpz_fits_ulong_p(r.get_mpz_t()) ? mpz_get_ui(r.get_mpz_t())
                                                   : budget.remaining + 1);
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int lim = r - k < batch ? Int(r - k) : Int(batch);
        for (Int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * iabs(x - y) % n;
        }
        g = igcd(q, n);
        k += lim;
        budget.spend(mpz_get_ui(lim.get_mpz_t()));
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = igcd(iabs(x - ys), n);
        budget.spend(1);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace

Factorization factor(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw DomainError("factor: argument must be nonzero");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;
  Int m = iabs(n);
  std::map<Int, int> acc;
  for (int small : {2, 3, 5})
    while (m % small == 0) {
      ++acc[small];
      m /= small;
    }
  Int d = 7;
  int step = 4;
  while (mpz_cmp_ui(d.get_mpz_t(), budget.trial_bound) <= 0 && d * d <= m) {
    while (m % d == 0) {
      ++acc[d];
      m /= d;
    }
    d += step;
    step = 6 - step;
  }
  if (m > 1) {
    RhoBudget rho_budget{budget.rho_iterations};
    gmp_randstate_t rng;
    gmp_randinit_mt(rng);
    gmp_randseed_ui(rng, 0xecde5ce0UL);
    std::vector<std::pair<Int, int>> stack{{m, 1}};
    try {
      while (!stack.empty()) {
        auto [v, mult] = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_prime(v)) {
          acc[v] += mult;
          continue;
        }
        if (mpz_perfect_power_p(v.get_mpz_t())) {
          unsigned long max_exp = mpz_sizeinbase(v.get_mpz_t(), 2);
          bool split = false;
          for (unsigned long e = 2; e <= max_exp && !split; ++e) {
            Int root, rem;
            mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), e);
            if (rem == 0) {
              stack.emplace_back(root, mult * static_cast<int>(e));
              split = true;
            }
          }
          if (split) continue;
        }
        Int f = pollard_brent(v, rho_budget, rng);
        stack.emplace_back(f, mult);
        stack.emplace_back(v / f, mult);
      }
    } catch (...) {
      gmp_randclear(rng);
      throw;
    }
    gmp_randclear(rng);
  }
  out.factors.assign(acc.begin(), acc.end());
  return out;
}

Int factorization_value(const Factorization& f) {
  Int v = f.sign;
  for (const auto& [prime, e] : f.factors) v *= ipow(prime, e);
  return v;
}

SquareClass squarefree_part(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw DomainError("squarefree_part: argument must be nonzero");
  Factorization f = factor(n, budget);
  SquareClass sc;
  sc.value = f.sign;
  for (const auto& [prime, e] : f.factors)
    if (e % 2 != 0) {
      sc.value *= prime;
      sc.support.push_back(prime);
    }
  return sc;
}

SquareClass square_class_mul(const SquareClass& a, const SquareClass& b) {
  SquareClass out;
  out.value = (a.value < 0) == (b.value < 0) ? 1 : -1;
  std::set_symmetric_difference(a.support.begin(), a.support.end(),
                                b.support.begin(), b.support.end(),
                                std::back_inserter(out.support));
  for (const Int& prime : out.support) out.value *= prime;
  return out;
}

int legendre(const Int& a, const Int& l) {
  if (l % 2 == 0 || !is_prime(l))
    throw DomainError("legendre: modulus must be an odd prime");
  return mpz_legendre(a.get_mpz_t(), l.get_mpz_t());
}

int kronecker_symbol(const Int& a, const Int& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

long valuation(const Int& a, const Int& l) {
  if (a == 0) throw DomainError("valuation: argument must be nonzero");
  if (l < 2) throw DomainError("valuation: place must be at least 2");
  Int tmp;
  return static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), a.get_mpz_t(), l.get_mpz_t()));
}

long valuation(const Rat& a, const Int& l) {
  if (a == 0) throw DomainError("valuation: argument must be nonzero");
  return valuation(Int(a.get_num()), l) - valuation(Int(a.get_den()), l);
}

Valuation val(const Rat& a, const Int& l) { return {l, valuation(a, l)}; }

Valuation val_real(const Rat& a) {
  if (a == 0) throw DomainError("val_real: argument must be nonzero");
  return {0, a < 0 ? -1L : 1L};
}

std::optional<Int> sqrt_mod_prime(const Int& a0, const Int& l) {
  if (!is_prime(l)) throw DomainError("sqrt_mod_prime: modulus must be prime");
  Int a = mod_floor(a0, l);
  if (a == 0) return Int(0);
  if (l == 2) return Int(1);
  if (mpz_legendre(a.get_mpz_t(), l.get_mpz_t()) != 1) return std::nullopt;
  Int r;
  if (l % 4 == 3) {
    r = powmod(a, (l + 1) / 4, l);
  } else {
    // Tonelli-Shanks. Write l - 1 = q * 2^s with q odd.
    Int q = l - 1;
    long s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), l.get_mpz_t()) != -1) ++z;
    long m = s;
    Int c = powmod(z, q, l);
    Int t = powmod(a, q, l);
    r = powmod(a, (q + 1) / 2, l);
    while (t != 1) {
      long i = 0;
      Int tt = t;
      while (tt != 1) {
        tt = tt * tt % l;
        ++i;
      }
      Int b = powmod(c, Int(1) << (m - i - 1), l);
      m = i;
      c = b * b % l;
      t = t * c % l;
      r = r * b % l;
    }
  }
  return std::min(r, Int(l - r));
}

std::optional<Int> sqrt_mod_prime_power(const Int& a0, const Int& l, long k) {
  if (k < 1) throw DomainError("sqrt_mod_prime_power: exponent must be positive");
  if (!is_prime(l))
    throw DomainError("sqrt_mod_prime_power: modulus base must be prime");
  Int modulus = ipow(l, static_cast<unsigned long>(k));
  Int a = mod_floor(a0, modulus);
  if (a == 0) return Int(0);
  long v = valuation(a, l);
  if (v % 2 != 0) return std::nullopt;
  Int u = a / ipow(l, static_cast<unsigned long>(v));
  long m = k - v;
  Int unit_mod = ipow(l, static_cast<unsigned long>(m));
  std::optional<Int> w;
  if (l == 2) {
    if (m == 1) {
      w = Int(1);
    } else if (m == 2) {
      if (u % 4 == 1) w = Int(1);
    } else if (mod_floor(u, 8) == 1) {
      // Lift from the root 1 mod 8; at each step exactly one of y, y + 2^(j-1)
      // is a root mod 2^(j+1).
      Int y = 1;
      for (long j = 3; j < m; ++j) {
        if (mod_floor(y * y - u, Int(1) << (j + 1)) != 0) y += Int(1) << (j - 1);
      }
      // The unit roots mod 2^m form {y, -y, y + 2^(m-1), -y + 2^(m-1)}.
      Int half = unit_mod / 2;
      Int best = mod_floor(y, unit_mod);
      for (const Int& cand :
           {mod_floor(-y, unit_mod), mod_floor(y + half, unit_mod),
            mod_floor(-y + half, unit_mod)})
        best = std::min(best, cand);
      w = best;
    }
  } else {
    std::optional<Int> root = sqrt_mod_prime(u, l);
    if (root) {
      Int y = *root;
      Int lj = l;
      for (long j = 1; j < m; ++j) {
        Int lj1 = lj * l;
        Int fy = mod_floor(y * y - u, lj1);
        if (fy != 0) {
          Int t = fy / lj;
          Int delta = mod_floor(-t * invmod(mod_floor(2 * y, l), l), l);
          y += delta * lj;
        }
        lj = lj1;
      }
      y = mod_floor(y, unit_mod);
      w = std::min(y, Int(unit_mod - y));
    }
  }
  if (!w) return std::nullopt;
  return ipow(l, static_cast<unsigned long>(v / 2)) * *w;
}

}  // namespace ecdescent
