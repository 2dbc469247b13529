// Copyright (c) 2026 the ecdescent authors
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be
// copied, modified, or distributed except according to those terms.

#include <doctest.h>

#include <random>

#include "ecdescent/arith.hpp"

using namespace ecdescent;

TEST_SUITE("arith") {
  TEST_CASE("squarefree_part on fixed values") {
    CHECK(squarefree_part(Int(1)).value == 1);
    CHECK(squarefree_part(Int(972) * 17 * 17 * 17).value == 51);
    CHECK(squarefree_part(Int(-135) * 17 * 17).value == -15);
    CHECK(squarefree_part(Int(-135) * 17 * 17).support ==
          std::vector<Int>{3, 5});
    CHECK(squarefree_part(Int(-1)).value == -1);
    CHECK(squarefree_part(Int(-1)).support.empty());
    CHECK_THROWS_AS(squarefree_part(Int(0)), DomainError);
  }

  TEST_CASE("squarefree_part properties on random values") {
    std::mt19937 rng(20260817);
    for (int trial = 0; trial < 200; ++trial) {
      long raw = static_cast<long>(rng() % 2000000) - 1000000;
      if (raw == 0) raw = 1;
      Int n(raw);
      SquareClass sc = squarefree_part(n);
      Int quotient = n / sc.value;
      CHECK(quotient > 0);
      CHECK(is_perfect_square(quotient));
      CHECK(squarefree_part(sc.value).value == sc.value);
      Int prod = 1;
      for (const Int& prime : sc.support) {
        CHECK(is_prime(prime));
        prod *= prime;
      }
      CHECK(prod == iabs(sc.value));
    }
  }

  TEST_CASE("square_class_mul agrees with squarefree_part of the product") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      long a = static_cast<long>(rng() % 100000) - 50000;
      long b = static_cast<long>(rng() % 100000) - 50000;
      if (a == 0) a = 3;
      if (b == 0) b = -5;
      SquareClass lhs = square_class_mul(squarefree_part(Int(a)), squarefree_part(Int(b)));
      SquareClass rhs = squarefree_part(Int(a) * Int(b));
      CHECK(lhs.value == rhs.value);
      CHECK(lhs.support == rhs.support);
    }
  }

  TEST_CASE("legendre on fixed values") {
    CHECK(legendre(Int(1), Int(7)) == 1);
    CHECK(legendre(Int(2), Int(17)) == 1);
    CHECK(legendre(Int(3), Int(17)) == -1);
    CHECK(legendre(Int(17), Int(17)) == 0);
    CHECK_THROWS_AS(legendre(Int(3), Int(2)), DomainError);
    CHECK_THROWS_AS(legendre(Int(3), Int(15)), DomainError);
  }

  TEST_CASE("legendre multiplicativity") {
    std::mt19937 rng(11);
    const Int primes[] = {Int(3), Int(5), Int(7), Int(17), Int(101), Int(1009)};
    for (int trial = 0; trial < 300; ++trial) {
      const Int& l = primes[rng() % 6];
      Int a(static_cast<long>(rng() % 10000) + 1);
      Int b(static_cast<long>(rng() % 10000) + 1);
      if (a % l == 0 || b % l == 0) continue;
      CHECK(legendre(a * b, l) == legendre(a, l) * legendre(b, l));
    }
  }

  TEST_CASE("valuations on fixed values") {
    CHECK(valuation(Int(17), Int(17)) == 1);
    CHECK(valuation(Rat(5257, 16), Int(2)) == -4);
    CHECK(valuation(Rat(83581, 64), Int(2)) == -6);
    CHECK(val(Rat(83581, 64), Int(2)).exponent == -6);
    CHECK(val(Rat(83581, 64), Int(2)).place == 2);
    CHECK(val_real(Rat(-3, 7)).exponent == -1);
    CHECK_THROWS_AS(valuation(Int(0), Int(2)), DomainError);
    CHECK_THROWS_AS(valuation(Rat(0), Int(2)), DomainError);
  }

  TEST_CASE("valuation additivity on random rationals") {
    std::mt19937 rng(13);
    const Int places[] = {Int(2), Int(3), Int(5), Int(17)};
    for (int trial = 0; trial < 200; ++trial) {
      const Int& l = places[rng() % 4];
      Rat a(static_cast<long>(rng() % 5000) + 1,
            static_cast<long>(rng() % 5000) + 1);
      Rat b(static_cast<long>(rng() % 5000) + 1,
            static_cast<long>(rng() % 5000) + 1);
      a.canonicalize();
      b.canonicalize();
      CHECK(valuation(Rat(a * b), l) == valuation(a, l) + valuation(b, l));
    }
  }

  TEST_CASE("sqrt_mod_prime_power on fixed values") {
    CHECK(sqrt_mod_prime_power(Int(1), Int(3), 2) == Int(1));
    CHECK(sqrt_mod_prime_power(Int(2), Int(17), 1) == Int(6));
    CHECK_FALSE(sqrt_mod_prime_power(Int(3), Int(5), 1).has_value());
    CHECK(sqrt_mod_prime_power(Int(0), Int(5), 3) == Int(0));
    CHECK_THROWS_AS(sqrt_mod_prime_power(Int(1), Int(4), 2), DomainError);
    CHECK_THROWS_AS(sqrt_mod_prime_power(Int(1), Int(3), 0), DomainError);
  }

  TEST_CASE("sqrt_mod_prime_power matches exhaustive enumeration") {
    // For every residue a mod l^k, compare against the smallest brute-force
    // root. This covers existence, absence, and the tie-breaking rule.
    const std::pair<int, int> cases[] = {{2, 1}, {2, 2}, {2, 3}, {2, 5}, {2, 8},
                                         {3, 1}, {3, 2}, {3, 4}, {5, 3}, {7, 2},
                                         {17, 1}, {17, 2}};
    for (const auto& [lraw, k] : cases) {
      Int l(lraw);
      Int modulus = ipow(l, k);
      std::vector<std::optional<Int>> smallest(
          mpz_get_ui(modulus.get_mpz_t()), std::nullopt);
      for (Int x = 0; x < modulus; ++x) {
        unsigned long idx = mpz_get_ui(Int(x * x % modulus).get_mpz_t());
        if (!smallest[idx]) smallest[idx] = x;
      }
      for (Int a = 0; a < modulus; ++a) {
        auto got = sqrt_mod_prime_power(a, l, k);
        auto want = smallest[mpz_get_ui(a.get_mpz_t())];
        CHECK(got == want);
        if (got) CHECK(mod_floor(*got * *got - a, modulus) == 0);
      }
    }
  }

  TEST_CASE("sqrt_mod_prime on fixed values") {
    CHECK(sqrt_mod_prime(Int(2), Int(17)) == Int(6));
    CHECK(sqrt_mod_prime(Int(0), Int(7)) == Int(0));
    CHECK_FALSE(sqrt_mod_prime(Int(5), Int(7)).has_value());
    // 1009 = 16*63 + 1 exercises the full Tonelli-Shanks branch.
    auto r = sqrt_mod_prime(Int(4), Int(1009));
    REQUIRE(r.has_value());
    CHECK(*r == 2);
  }

  TEST_CASE("factor reassembles and respects budgets") {
    Factorization f = factor(Int(972) * 17 * 17 * 17);
    CHECK(factorization_value(f) == Int(972) * 17 * 17 * 17);
    CHECK(f.factors == std::vector<std::pair<Int, int>>{
                           {Int(2), 2}, {Int(3), 5}, {Int(17), 3}});
    CHECK(factor(Int(-12)).sign == -1);
    CHECK_THROWS_AS(factor(Int(0)), DomainError);

    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
      Int n(static_cast<long>(rng() % 900000) + 2);
      CHECK(factorization_value(factor(n)) == n);
    }

    // A 40-digit semiprime with no small factors defeats a tiny budget.
    Int p1, p2;
    mpz_nextprime(p1.get_mpz_t(), Int(ipow(Int(10), 19)).get_mpz_t());
    mpz_nextprime(p2.get_mpz_t(), Int(ipow(Int(10), 20)).get_mpz_t());
    FactorBudget tiny{1000, 50};
    CHECK_THROWS_AS(factor(p1 * p2, tiny), FactorBudgetError);
  }

  TEST_CASE("factor handles perfect powers and large supported values") {
    Int base(1000003);
    Factorization f = factor(ipow(base, 6));
    CHECK(f.factors == std::vector<std::pair<Int, int>>{{base, 6}});
    // Brent rho splits a modest semiprime beyond the trial bound.
    Int q1(1000003), q2(1000033);
    FactorBudget small_trial{100, 20000000};
    Factorization g = factor(q1 * q2, small_trial);
    CHECK(g.factors == std::vector<std::pair<Int, int>>{{q1, 1}, {q2, 1}});
  }

  TEST_CASE("is_prime on fixed values") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(17)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(561)));  // Carmichael number
    CHECK(is_prime((Int(1) << 61) - 1));
    CHECK_FALSE(is_prime((Int(1) << 67) - 1));
    Int big = ipow(Int(10), 30);
    mpz_nextprime(big.get_mpz_t(), big.get_mpz_t());
    CHECK(is_prime(big));
  }

  TEST_CASE("modular helpers") {
    CHECK(mod_floor(Int(-7), Int(5)) == 3);
    CHECK(powmod(Int(3), Int(100), Int(101)) == 1);
    CHECK(invmod(Int(3), Int(17)) == 6);
    CHECK_THROWS_AS(invmod(Int(6), Int(15)), DomainError);
    CHECK(isqrt(Int(99)) == 9);
    CHECK(is_perfect_square(Int(144)));
    CHECK_FALSE(is_perfect_square(Int(-4)));
    CHECK(kronecker_symbol(Int(2), Int(17)) == 1);
    CHECK(kronecker_symbol(Int(3), Int(17)) == -1);
  }
}
