#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polya/errors.hpp"

namespace polya {

inline constexpr uint64_t kDefaultTrialBound = 1'000'000;

/// Jacobi symbol (a/n) for odd positive n; Legendre symbol when n is an odd
/// prime. Binary algorithm, exact throughout.
int jacobi(int64_t a, uint64_t n);
int jacobi(const mpz_class& a, const mpz_class& n);

/// Element of Q*/(Q*)^2 with finite support: a strictly increasing list of
/// primes plus a sign bit. Default-constructed value is the identity class.
class SquarefreeClass {
 public:
  SquarefreeClass() = default;
  SquarefreeClass(std::vector<mpz_class> primes, bool negative);

  const std::vector<mpz_class>& primes() const { return primes_; }
  bool negative() const { return negative_; }
  bool is_identity() const { return primes_.empty() && !negative_; }
  mpz_class representative() const;
  std::string str() const;

  friend SquarefreeClass operator*(const SquarefreeClass& a, const SquarefreeClass& b);
  friend bool operator==(const SquarefreeClass& a, const SquarefreeClass& b) = default;
  friend bool operator<(const SquarefreeClass& a, const SquarefreeClass& b);

 private:
  std::vector<mpz_class> primes_;
  bool negative_ = false;
};

// Group law of Q*/(Q*)^2: symmetric difference of supports, signs multiply.
inline SquarefreeClass class_multiply(const SquarefreeClass& a, const SquarefreeClass& b) {
  return a * b;
}

SquarefreeClass class_of_primes(std::vector<uint64_t> primes, bool negative = false);
inline SquarefreeClass class_of_primes(std::initializer_list<uint64_t> primes, bool negative = false) {
  return class_of_primes(std::vector<uint64_t>(primes), negative);
}

struct FactoredInteger {
  int sign = 1;
  std::vector<std::pair<mpz_class, unsigned>> factors;  // ascending primes, exponents >= 1

  mpz_class value() const;
  bool squarefree() const;
  SquarefreeClass square_class() const;  // odd-exponent primes, sign kept
  static FactoredInteger from_primes(std::vector<uint64_t> primes);
};

/// Full factorization of n via the hint's primes plus trial division up to
/// trial_bound. A prime cofactor above the bound is accepted; a composite one
/// raises UnfactoredResidue.
FactoredInteger factorize(const mpz_class& n, const FactoredInteger* hint = nullptr,
                          uint64_t trial_bound = kDefaultTrialBound);

/// Image of n in Q*/(Q*)^2. Unlike factorize(), a perfect-square cofactor is
/// harmless here and is absorbed.
SquarefreeClass squarefree_class(const mpz_class& n, const FactoredInteger* hint = nullptr,
                                 uint64_t trial_bound = kDefaultTrialBound);

struct Congruence {
  mpz_class residue;
  mpz_class modulus;
};

/// Combined residue class for pairwise coprime moduli.
Congruence crt_solve(const std::vector<Congruence>& congruences);

/// Deterministic Miller-Rabin for 64-bit inputs; strong probable-prime test
/// with fixed bases above that.
bool is_prime_u64(uint64_t n);
bool is_prime(const mpz_class& n);

std::vector<uint64_t> sieve_primes(uint64_t bound);

}  // namespace polya
