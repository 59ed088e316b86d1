#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polya/arith.hpp"
#include "polya/errors.hpp"

namespace polya {

struct CfOptions {
  uint64_t max_iterations = 10'000'000;
  const std::atomic<bool>* cancel = nullptr;  // cooperative cancellation
  uint64_t cancel_stride = 4096;
};

/// One full period of the continued fraction of sqrt(d), or of (1+sqrt d)/2
/// when omega is set (d = 1 mod 4 only). All state is exact.
struct CfExpansion {
  mpz_class d;
  bool omega = false;
  mpz_class a0;                     // integer part
  std::vector<mpz_class> period;    // partial quotients a_1 .. a_L
  std::vector<mpz_class> q_values;  // denominators Q_1 .. Q_L
};

CfExpansion cf_expand(const mpz_class& d, bool use_omega, const CfOptions& options = {});

/// Fundamental unit u > 1 of the maximal order of Q(sqrt d):
/// u = x + y sqrt d, or (x + y sqrt d)/2 when halved (then x = y mod 2 and
/// x^2 - d y^2 = 4 norm; otherwise x^2 - d y^2 = norm).
struct FundamentalUnit {
  mpz_class x;
  mpz_class y;
  bool halved = false;
  int norm = 1;
  uint64_t period_length = 0;
};

FundamentalUnit fundamental_unit(const mpz_class& d, const CfOptions& options = {});

/// N(u + 1), computed exactly from the unit coordinates.
mpz_class norm_u_plus_one(const FundamentalUnit& u, const mpz_class& d);

/// [N(u+1)] when N(u) = 1, identity class otherwise. The support always lands
/// inside the ramified primes of Q(sqrt d); anything else is an internal
/// failure.
SquarefreeClass a_class(const mpz_class& d, const FactoredInteger& d_factors,
                        const CfOptions& options = {});
SquarefreeClass a_class(const mpz_class& d, const CfOptions& options = {});

enum class NormTwo { neither, plus_two, minus_two, both };

const char* to_string(NormTwo value);
bool norm_two_includes(NormTwo value, int sign);

/// Which of x^2 - d y^2 = +2 / -2 have integer solutions, decided from the
/// signed denominators (-1)^i Q_i of the CF of sqrt d.
NormTwo norm_two_solvable(const mpz_class& d, const CfOptions& options = {});

/// A witness (x, y) for the requested sign, extracted from the convergents.
std::optional<std::pair<mpz_class, mpz_class>> norm_two_witness(const mpz_class& d, int sign,
                                                                const CfOptions& options = {});

struct QuadraticFieldData {
  mpz_class d;            // squarefree > 1
  mpz_class discriminant; // d when d = 1 mod 4, else 4d
  std::vector<mpz_class> ramified_primes;
  int s = 0;
};

QuadraticFieldData quadratic_field_data(const mpz_class& d, const FactoredInteger* hint = nullptr,
                                        uint64_t trial_bound = kDefaultTrialBound);

}  // namespace polya
