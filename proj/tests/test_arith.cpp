#include "polya/arith.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

using namespace polya;

TEST_CASE("jacobi matches known values") {
  CHECK(jacobi(1, 7) == 1);
  CHECK(jacobi(3, 5) == -1);
  CHECK(jacobi(7, 5) == -1);
  CHECK(jacobi(10, 5) == 0);
  CHECK(jacobi(2, 15) == 1);
  CHECK(jacobi(-1, 3) == -1);
  CHECK(jacobi(-1, 5) == 1);
  CHECK(jacobi(0, 1) == 1);
  CHECK(jacobi(5, 1) == 1);
}

TEST_CASE("jacobi rejects invalid moduli") {
  CHECK_THROWS_AS(jacobi(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(mpz_class(3), mpz_class(-7)), std::invalid_argument);
}

TEST_CASE("jacobi agrees with the squares-table oracle") {
  for (uint64_t n = 1; n <= 199; n += 2)
    for (int64_t a = -50; a <= 50; ++a) {
      if (std::gcd<int64_t>(a < 0 ? -a : a, n) != 1) continue;
      CHECK(jacobi(a, n) == oracle::jacobi_by_factorization(a, n));
    }
}

TEST_CASE("jacobi mpz path agrees with the 64-bit path and with GMP") {
  for (int64_t a = -30; a <= 120; a += 7)
    for (uint64_t n = 1; n <= 201; n += 2) {
      const int v = jacobi(a, n);
      CHECK(v == jacobi(mpz_class(static_cast<long>(a)), mpz_class(static_cast<unsigned long>(n))));
      CHECK(v == mpz_jacobi(mpz_class(static_cast<long>(a)).get_mpz_t(),
                            mpz_class(static_cast<unsigned long>(n)).get_mpz_t()));
    }
  mpz_class big_a("123456789123456789123456789");
  mpz_class big_n("987654321987654321987654321987");
  CHECK(jacobi(big_a, big_n) == mpz_jacobi(big_a.get_mpz_t(), big_n.get_mpz_t()));
}

TEST_CASE("jacobi is multiplicative in the numerator") {
  for (uint64_t n = 1; n <= 199; n += 2)
    for (int64_t a = -200; a <= 200; a += 13)
      for (int64_t b = -200; b <= 200; b += 17)
        CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
}

TEST_CASE("quadratic reciprocity holds for odd primes up to 199") {
  const auto primes = sieve_primes(199);
  for (uint64_t p : primes) {
    if (p == 2) continue;
    for (uint64_t q : primes) {
      if (q == 2 || q == p) continue;
      const int flip = (p % 4 == 3 && q % 4 == 3) ? -1 : 1;
      CHECK(jacobi(static_cast<int64_t>(p), q) * jacobi(static_cast<int64_t>(q), p) == flip);
    }
  }
}

TEST_CASE("squarefree_class extracts the squarefree part") {
  CHECK(squarefree_class(48) == class_of_primes({3}));
  CHECK(squarefree_class(84) == class_of_primes({3, 7}));
  CHECK(squarefree_class(-18) == class_of_primes({2}, true));
  CHECK(squarefree_class(1) == SquarefreeClass{});
  CHECK(squarefree_class(-1) == class_of_primes({}, true));
  CHECK_THROWS_AS(squarefree_class(0), std::invalid_argument);
}

TEST_CASE("squarefree_class is invariant under square multiples") {
  for (int64_t n = -100; n <= 100; ++n) {
    if (n == 0) continue;
    const auto base = squarefree_class(mpz_class(static_cast<long>(n)));
    for (int64_t m = 1; m <= 10; ++m)
      CHECK(squarefree_class(mpz_class(static_cast<long>(m * m * n))) == base);
  }
}

TEST_CASE("squarefree_class cofactor handling above the trial bound") {
  const mpz_class p("1000003"), q("1000033");
  // composite cofactor, no hint: give up
  CHECK_THROWS_AS(squarefree_class(p * q, nullptr, 1000), UnfactoredResidue);
  // hint covers it
  FactoredInteger hint;
  hint.factors = {{p, 1}, {q, 1}};
  CHECK(squarefree_class(p * q, &hint, 1000) == SquarefreeClass({p, q}, false));
  // prime cofactor is fine without a hint
  CHECK(squarefree_class(2 * p, nullptr, 1000) == SquarefreeClass({mpz_class(2), p}, false));
  // square cofactor contributes nothing
  CHECK(squarefree_class(3 * p * p, nullptr, 1000) == class_of_primes({3}));
}

TEST_CASE("class_multiply is the symmetric difference with sign") {
  CHECK(class_of_primes({3, 11}) * class_of_primes({3, 5, 7}) == class_of_primes({5, 7, 11}));
  const auto c = class_of_primes({2, 7}, true);
  CHECK(c * c == SquarefreeClass{});
  CHECK(class_of_primes({3}) * SquarefreeClass{} == class_of_primes({3}));
}

TEST_CASE("class group laws hold on supports within {-1,2,3,5,7,11}") {
  std::vector<SquarefreeClass> all;
  const std::vector<uint64_t> pool = {2, 3, 5, 7, 11};
  for (int mask = 0; mask < 32; ++mask)
    for (int sign = 0; sign < 2; ++sign) {
      std::vector<uint64_t> support;
      for (size_t i = 0; i < pool.size(); ++i)
        if (mask & (1 << i)) support.push_back(pool[i]);
      all.push_back(class_of_primes(support, sign == 1));
    }
  for (const auto& a : all) {
    CHECK(a * a == SquarefreeClass{});
    for (const auto& b : all) {
      CHECK(a * b == b * a);
      for (const auto& c : all) CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("squarefree class invariants") {
  CHECK_THROWS_AS(SquarefreeClass({mpz_class(3), mpz_class(3)}, false), std::invalid_argument);
  CHECK_THROWS_AS(SquarefreeClass({mpz_class(5), mpz_class(3)}, false), std::invalid_argument);
  CHECK_THROWS_AS(SquarefreeClass({mpz_class(1)}, false), std::invalid_argument);
  CHECK(class_of_primes({3, 11}).representative() == 33);
  CHECK(class_of_primes({2, 5}, true).representative() == -10);
  CHECK(class_of_primes({2, 5}, true).str() == "-2*5");
  CHECK(SquarefreeClass{}.str() == "1");
}

TEST_CASE("crt_solve combines congruences") {
  const auto r = crt_solve({{3, 4}, {2, 5}});
  CHECK(r.residue == 7);
  CHECK(r.modulus == 20);
  const auto single = crt_solve({{1, 8}});
  CHECK(single.residue == 1);
  CHECK(single.modulus == 8);
  const auto zero = crt_solve({{0, 3}, {0, 5}});
  CHECK(zero.residue == 0);
  CHECK(zero.modulus == 15);
  CHECK_THROWS_AS(crt_solve({{1, 6}, {2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(crt_solve({}), std::invalid_argument);
}

TEST_CASE("crt_solve result satisfies every congruence") {
  const std::vector<Congruence> cs = {{5, 7}, {2, 9}, {10, 11}, {3, 4}};
  const auto r = crt_solve(cs);
  CHECK(r.modulus == 7 * 9 * 11 * 4);
  for (const auto& c : cs) CHECK(r.residue % c.modulus == c.residue);
}

TEST_CASE("primality tests") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1000003));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(1000033ull * 1000003ull));
  CHECK(is_prime_u64(0xffffffffffffffc5ull));  // largest 64-bit prime
  CHECK(is_prime(mpz_class("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_prime(mpz_class("170141183460469231731687303715884105725")));
  const auto primes = sieve_primes(2000);
  size_t idx = 0;
  for (uint64_t n = 0; n <= 2000; ++n) {
    const bool in_sieve = idx < primes.size() && primes[idx] == n;
    CHECK(is_prime_u64(n) == in_sieve);
    if (in_sieve) ++idx;
  }
}

TEST_CASE("factorize round-trips and validates hints") {
  const auto f = factorize(-360);
  CHECK(f.sign == -1);
  CHECK(f.value() == -360);
  CHECK_FALSE(f.squarefree());
  CHECK(f.square_class() == class_of_primes({2, 5}, true));
  FactoredInteger bad;
  bad.factors = {{mpz_class(9), 1}};
  CHECK_THROWS_AS(factorize(18, &bad), std::invalid_argument);
  CHECK_THROWS_AS(factorize(mpz_class("1000003") * 1000033, nullptr, 1000), UnfactoredResidue);
}
