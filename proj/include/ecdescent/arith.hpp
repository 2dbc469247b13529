// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ecdescent {

using Int = mpz_class;
using Rat = mpq_class;

// Operation called outside its mathematical domain.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Factorization ran out of its configured work budget.
struct FactorBudgetError : std::runtime_error {
  explicit FactorBudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent routes to the same value disagreed.
struct CrossCheckError : std::runtime_error {
  explicit CrossCheckError(const std::string& what) : std::runtime_error(what) {}
};

struct FactorBudget {
  unsigned long trial_bound = 100000;
  unsigned long rho_iterations = 20000000;
};

struct Factorization {
  int sign = 1;                              // +1 or -1
  std::vector<std::pair<Int, int>> factors;  // ascending primes, exponents >= 1
};

// Element of Q*/(Q*)^2: squarefree representative with its exact prime support.
struct SquareClass {
  Int value;                 // squarefree, sign carried
  std::vector<Int> support;  // primes dividing |value|, ascending

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.value == b.value;
  }
  friend bool operator<(const SquareClass& a, const SquareClass& b) {
    return a.value < b.value;
  }
};

// v_l(a) for a finite place, or the sign of a at the real place (place = 0).
struct Valuation {
  Int place;
  long exponent;
};

Int igcd(const Int& a, const Int& b);
Int ipow(const Int& base, unsigned long e);
Int iabs(const Int& a);
Int mod_floor(const Int& a, const Int& m);  // representative in [0, m), m > 0
Int powmod(const Int& base, const Int& e, const Int& m);  // e >= 0, m > 0
Int invmod(const Int& a, const Int& m);     // DomainError if gcd(a, m) != 1

bool is_perfect_square(const Int& n);
Int isqrt(const Int& n);  // floor square root, n >= 0
bool is_prime(const Int& n);

// Trial division (2, 3, 5, then a 6k+-1 wheel up to trial_bound), perfect-power
// splitting, and Brent-cycle rho on what remains. Deterministic for fixed inputs.
Factorization factor(const Int& n, const FactorBudget& budget = {});
Int factorization_value(const Factorization& f);

SquareClass squarefree_part(const Int& n, const FactorBudget& budget = {});
// Group law in Q*/(Q*)^2 via symmetric difference of supports; never factors.
SquareClass square_class_mul(const SquareClass& a, const SquareClass& b);

int legendre(const Int& a, const Int& l);  // DomainError unless l an odd prime
int kronecker_symbol(const Int& a, const Int& n);

long valuation(const Int& a, const Int& l);  // a != 0, l >= 2
long valuation(const Rat& a, const Int& l);
Valuation val(const Rat& a, const Int& l);
Valuation val_real(const Rat& a);

// Smallest nonnegative x with x^2 = a mod l (Tonelli-Shanks), or absent.
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& l);
// Smallest nonnegative x with x^2 = a mod l^k, or absent. a = 0 mod l^k gives 0.
std::optional<Int> sqrt_mod_prime_power(const Int& a, const Int& l, long k);

}  // namespace ecdescent
