#include "polya/pell.hpp"

#include <atomic>

#include "doctest.h"
#include "oracles.hpp"

using namespace polya;

namespace {

bool squarefree_u64(uint64_t n) {
  for (uint64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

void check_unit_equation(const FundamentalUnit& u, uint64_t d) {
  const mpz_class D(static_cast<unsigned long>(d));
  if (u.halved) {
    CHECK(mpz_odd_p(u.x.get_mpz_t()));
    CHECK(mpz_odd_p(u.y.get_mpz_t()));
    CHECK(u.x * u.x - D * u.y * u.y == 4 * u.norm);
  } else {
    CHECK(u.x * u.x - D * u.y * u.y == u.norm);
  }
}

}  // namespace

TEST_CASE("cf_expand small periods") {
  const auto cf2 = cf_expand(2, false);
  CHECK(cf2.a0 == 1);
  REQUIRE(cf2.period.size() == 1);
  CHECK(cf2.period[0] == 2);

  const auto cf3 = cf_expand(3, false);
  CHECK(cf3.a0 == 1);
  REQUIRE(cf3.period.size() == 2);
  CHECK(cf3.period[0] == 1);
  CHECK(cf3.period[1] == 2);

  const auto cf5 = cf_expand(5, true);
  CHECK(cf5.a0 == 1);
  REQUIRE(cf5.period.size() == 1);
  CHECK(cf5.period[0] == 1);

  CHECK(cf_expand(7, false).period == std::vector<mpz_class>{1, 1, 1, 4});
}

TEST_CASE("cf_expand rejects bad input") {
  CHECK_THROWS_AS(cf_expand(1, false), std::invalid_argument);
  CHECK_THROWS_AS(cf_expand(0, false), std::invalid_argument);
  CHECK_THROWS_AS(cf_expand(49, false), std::invalid_argument);
  CHECK_THROWS_AS(cf_expand(7, true), std::invalid_argument);  // omega needs d = 1 mod 4
}

TEST_CASE("cf iteration cap and cancellation") {
  CfOptions tiny;
  tiny.max_iterations = 2;
  CHECK_THROWS_AS(cf_expand(94, false, tiny), PeriodOverflow);  // period 16

  std::atomic<bool> cancel{true};
  CfOptions cancelled;
  cancelled.cancel = &cancel;
  cancelled.cancel_stride = 1;
  CHECK_THROWS_AS(cf_expand(94, false, cancelled), Cancelled);
}

TEST_CASE("fundamental units match frozen anchors") {
  const auto u2 = fundamental_unit(2);
  CHECK(u2.x == 1);
  CHECK(u2.y == 1);
  CHECK_FALSE(u2.halved);
  CHECK(u2.norm == -1);

  const auto u33 = fundamental_unit(33);
  CHECK(u33.x == 23);
  CHECK(u33.y == 4);
  CHECK_FALSE(u33.halved);
  CHECK(u33.norm == 1);

  const auto u105 = fundamental_unit(105);
  CHECK(u105.x == 41);
  CHECK(u105.y == 4);
  CHECK(u105.norm == 1);

  const auto u5 = fundamental_unit(5);
  CHECK(u5.x == 1);
  CHECK(u5.y == 1);
  CHECK(u5.halved);
  CHECK(u5.norm == -1);
}

TEST_CASE("fundamental units agree with the scan oracle up to 150") {
  for (uint64_t d = 2; d <= 150; ++d) {
    if (!squarefree_u64(d)) continue;
    CAPTURE(d);
    const auto u = fundamental_unit(d);
    check_unit_equation(u, d);
    const auto expected = oracle::pell_min_by_scan(d, 15'000'000);
    REQUIRE(expected.has_value());
    CHECK(u.x == expected->x);
    CHECK(u.y == expected->y);
    CHECK(u.halved == expected->halved);
    CHECK(u.norm == expected->norm);
    // norm -1 exactly when the period length is odd
    CHECK((u.norm == -1) == (u.period_length % 2 == 1));
  }
}

TEST_CASE("no half-integral units when d = 1 mod 8") {
  for (uint64_t d = 17; d <= 2000; d += 8) {
    if (!squarefree_u64(d)) continue;
    CAPTURE(d);
    CHECK_FALSE(fundamental_unit(d).halved);
  }
}

TEST_CASE("a_class anchors") {
  CHECK(a_class(33) == class_of_primes({3}));
  CHECK(a_class(105) == class_of_primes({3, 7}));
  CHECK(a_class(2) == SquarefreeClass{});  // norm -1
  CHECK(a_class(3) == class_of_primes({2, 3}));
}

TEST_CASE("a_class support stays inside the ramified primes, d <= 2000") {
  for (uint64_t d = 2; d <= 2000; ++d) {
    if (!squarefree_u64(d)) continue;
    CAPTURE(d);
    const mpz_class D(static_cast<unsigned long>(d));
    const auto field = quadratic_field_data(D);
    const auto a = a_class(D);
    CHECK_FALSE(a.negative());
    for (const auto& p : a.primes()) {
      const bool ramified = std::find(field.ramified_primes.begin(), field.ramified_primes.end(),
                                      p) != field.ramified_primes.end();
      CHECK(ramified);
    }
  }
}

TEST_CASE("a1 class lies in {[q1],[q2]} for qualifying pairs up to 2000") {
  const auto primes = sieve_primes(700);
  for (uint64_t q1 : primes) {
    if (q1 % 4 != 3) continue;
    for (uint64_t q2 : primes) {
      if (q2 <= q1 || q2 % 4 != 3 || q1 * q2 > 2000) continue;
      if (q1 * q2 % 8 != 1) continue;
      CAPTURE(q1);
      CAPTURE(q2);
      const auto a = a_class(q1 * q2, FactoredInteger::from_primes({q1, q2}));
      const bool ok = a == class_of_primes({q1}) || a == class_of_primes({q2});
      CHECK(ok);
    }
  }
}

TEST_CASE("norm_two_solvable anchors") {
  CHECK(norm_two_solvable(7) == NormTwo::plus_two);
  CHECK(norm_two_solvable(5) == NormTwo::neither);
  CHECK(norm_two_solvable(3) == NormTwo::minus_two);
  CHECK(norm_two_solvable(6) == NormTwo::minus_two);
  // Both signs for d = 2: 2^2 - 2 = 2 and 4^2 - 2*3^2 = -2.
  CHECK(norm_two_solvable(2) == NormTwo::both);
}

TEST_CASE("norm_two_solvable witnesses satisfy the equation") {
  for (uint64_t d = 2; d <= 120; ++d) {
    if (!squarefree_u64(d)) continue;
    CAPTURE(d);
    const mpz_class D(static_cast<unsigned long>(d));
    const auto solvable = norm_two_solvable(D);
    for (int sign : {1, -1}) {
      const auto witness = norm_two_witness(D, sign);
      CHECK(witness.has_value() == norm_two_includes(solvable, sign));
      if (witness)
        CHECK(witness->first * witness->first - D * witness->second * witness->second == 2 * sign);
    }
  }
}

TEST_CASE("norm_two_solvable agrees with brute force, d <= 120") {
  for (uint64_t d = 2; d <= 120; ++d) {
    if (!squarefree_u64(d)) continue;
    CAPTURE(d);
    const auto solvable = norm_two_solvable(d);
    for (int sign : {1, -1})
      if (oracle::norm_eq_brute(d, 2 * sign, 3000)) CHECK(norm_two_includes(solvable, sign));
  }
}

TEST_CASE("quadratic_field_data invariants") {
  const auto f5 = quadratic_field_data(5);
  CHECK(f5.discriminant == 5);
  CHECK(f5.s == 1);
  CHECK(f5.ramified_primes == std::vector<mpz_class>{5});

  const auto f3 = quadratic_field_data(3);
  CHECK(f3.discriminant == 12);
  CHECK(f3.s == 2);
  CHECK(f3.ramified_primes == std::vector<mpz_class>{2, 3});

  const auto f15 = quadratic_field_data(15);
  CHECK(f15.discriminant == 60);
  CHECK(f15.ramified_primes == std::vector<mpz_class>{2, 3, 5});

  const auto f6 = quadratic_field_data(6);
  CHECK(f6.discriminant == 24);
  CHECK(f6.ramified_primes == std::vector<mpz_class>{2, 3});

  CHECK_THROWS_AS(quadratic_field_data(12), NotSquarefree);
  CHECK_THROWS_AS(quadratic_field_data(1), std::invalid_argument);
}

TEST_CASE("a_class rejects a wrong hint") {
  CHECK_THROWS_AS(a_class(33, FactoredInteger::from_primes({3, 7})), std::invalid_argument);
}
