#include "polya/arith.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <limits>

namespace polya {

int jacobi(int64_t a, uint64_t n) {
  if (n == 0 || (n & 1) == 0)
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  int result = 1;
  uint64_t ua;
  if (a < 0) {
    if ((n & 3) == 3) result = -result;  // (-1/n) = -1 for n = 3 mod 4
    ua = uint64_t{0} - static_cast<uint64_t>(a);
  } else {
    ua = static_cast<uint64_t>(a);
  }
  ua %= n;
  while (ua != 0) {
    const int z = std::countr_zero(ua);
    ua >>= z;
    if (z & 1) {
      const uint64_t m = n & 7;
      if (m == 3 || m == 5) result = -result;  // (2/n) = -1 for n = 3,5 mod 8
    }
    if ((ua & 3) == 3 && (n & 3) == 3) result = -result;  // reciprocity flip
    std::swap(ua, n);
    ua %= n;
  }
  return n == 1 ? result : 0;
}

int jacobi(const mpz_class& a_in, const mpz_class& n_in) {
  if (n_in <= 0 || mpz_even_p(n_in.get_mpz_t()))
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  mpz_class a = a_in % n_in;
  if (a < 0) a += n_in;
  mpz_class n = n_in;
  int result = 1;
  while (a != 0) {
    const mp_bitcnt_t z = mpz_scan1(a.get_mpz_t(), 0);
    if (z > 0) mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), z);
    if (z & 1) {
      const unsigned long m = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (m == 3 || m == 5) result = -result;
    }
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
      result = -result;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? result : 0;
}

SquarefreeClass::SquarefreeClass(std::vector<mpz_class> primes, bool negative)
    : primes_(std::move(primes)), negative_(negative) {
  for (size_t i = 0; i < primes_.size(); ++i) {
    if (primes_[i] < 2)
      throw std::invalid_argument("SquarefreeClass: support entries must be >= 2");
    if (i > 0 && primes_[i - 1] >= primes_[i])
      throw std::invalid_argument("SquarefreeClass: support must be strictly increasing");
  }
}

mpz_class SquarefreeClass::representative() const {
  mpz_class r = negative_ ? -1 : 1;
  for (const auto& p : primes_) r *= p;
  return r;
}

std::string SquarefreeClass::str() const {
  if (is_identity()) return "1";
  std::string out = negative_ ? "-" : "";
  if (primes_.empty()) return "-1";
  for (size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) out += "*";
    out += primes_[i].get_str();
  }
  return out;
}

SquarefreeClass operator*(const SquarefreeClass& a, const SquarefreeClass& b) {
  SquarefreeClass r;
  r.primes_.reserve(a.primes_.size() + b.primes_.size());
  std::set_symmetric_difference(a.primes_.begin(), a.primes_.end(), b.primes_.begin(),
                                b.primes_.end(), std::back_inserter(r.primes_));
  r.negative_ = a.negative_ != b.negative_;
  return r;
}

bool operator<(const SquarefreeClass& a, const SquarefreeClass& b) {
  if (a.negative_ != b.negative_) return b.negative_;
  return std::lexicographical_compare(a.primes_.begin(), a.primes_.end(), b.primes_.begin(),
                                      b.primes_.end());
}

SquarefreeClass class_of_primes(std::vector<uint64_t> primes, bool negative) {
  std::sort(primes.begin(), primes.end());
  std::vector<mpz_class> support;
  support.reserve(primes.size());
  for (uint64_t p : primes) support.emplace_back(static_cast<unsigned long>(p));
  return SquarefreeClass(std::move(support), negative);
}

mpz_class FactoredInteger::value() const {
  mpz_class v = sign;
  for (const auto& [p, e] : factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

bool FactoredInteger::squarefree() const {
  for (const auto& [p, e] : factors)
    if (e > 1) return false;
  return true;
}

SquarefreeClass FactoredInteger::square_class() const {
  std::vector<mpz_class> support;
  for (const auto& [p, e] : factors)
    if (e & 1) support.push_back(p);
  return SquarefreeClass(std::move(support), sign < 0);
}

FactoredInteger FactoredInteger::from_primes(std::vector<uint64_t> primes) {
  std::sort(primes.begin(), primes.end());
  FactoredInteger f;
  for (uint64_t p : primes) f.factors.emplace_back(mpz_class(static_cast<unsigned long>(p)), 1u);
  return f;
}

namespace {

struct TrialFactorization {
  int sign = 1;
  std::vector<std::pair<mpz_class, unsigned>> factors;
  mpz_class leftover = 1;  // coprime to every found prime
};

TrialFactorization trial_factor(const mpz_class& n, const FactoredInteger* hint,
                                uint64_t trial_bound) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no squarefree part");
  TrialFactorization out;
  out.sign = n < 0 ? -1 : 1;
  mpz_class m = abs(n);

  auto pull = [&](const mpz_class& p) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e > 0) out.factors.emplace_back(p, e);
  };

  if (hint != nullptr) {
    for (const auto& [p, e_ignored] : hint->factors) {
      if (p < 2 || !is_prime(p))
        throw std::invalid_argument("factor hint contains a non-prime: " + p.get_str());
      pull(p);
    }
  }

  auto pull_small = [&](uint64_t c) { pull(mpz_class(static_cast<unsigned long>(c))); };
  auto below_square = [&](uint64_t c) {  // m < c^2, so the residue is 1 or prime
    const unsigned __int128 csq = static_cast<unsigned __int128>(c) * c;
    if (csq <= std::numeric_limits<unsigned long>::max())
      return mpz_cmp_ui(m.get_mpz_t(), static_cast<unsigned long>(csq)) < 0;
    mpz_class big(static_cast<unsigned long>(c));
    return m < big * big;
  };
  bool exhausted = false;
  if (trial_bound >= 2) pull_small(2);
  if (trial_bound >= 3) pull_small(3);
  for (uint64_t c = 5; c <= trial_bound; c += 6) {
    if (m == 1) break;
    if (below_square(c)) {
      exhausted = true;
      break;
    }
    pull_small(c);
    if (c + 2 <= trial_bound) pull_small(c + 2);
  }
  if (m > 1) {
    if (!exhausted && trial_bound >= 2) exhausted = below_square(trial_bound);
    if (exhausted) {
      out.factors.emplace_back(m, 1u);  // no candidate <= sqrt(m) divides it
      m = 1;
    }
  }
  out.leftover = m;
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

FactoredInteger factorize(const mpz_class& n, const FactoredInteger* hint, uint64_t trial_bound) {
  TrialFactorization tf = trial_factor(n, hint, trial_bound);
  if (tf.leftover != 1) {
    if (is_prime(tf.leftover)) {
      tf.factors.emplace_back(tf.leftover, 1u);
      std::sort(tf.factors.begin(), tf.factors.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
    } else {
      throw UnfactoredResidue("factorize: composite cofactor " + tf.leftover.get_str() +
                              " above trial bound and not covered by a hint");
    }
  }
  FactoredInteger f;
  f.sign = tf.sign;
  f.factors = std::move(tf.factors);
  return f;
}

SquarefreeClass squarefree_class(const mpz_class& n, const FactoredInteger* hint,
                                 uint64_t trial_bound) {
  TrialFactorization tf = trial_factor(n, hint, trial_bound);
  std::vector<mpz_class> support;
  for (const auto& [p, e] : tf.factors)
    if (e & 1) support.push_back(p);
  if (tf.leftover != 1) {
    if (mpz_perfect_square_p(tf.leftover.get_mpz_t())) {
      // square cofactor contributes nothing to the class
    } else if (is_prime(tf.leftover)) {
      support.push_back(tf.leftover);
    } else {
      throw UnfactoredResidue("squarefree_class: composite cofactor " + tf.leftover.get_str() +
                              " above trial bound and not covered by a hint");
    }
  }
  std::sort(support.begin(), support.end());
  return SquarefreeClass(std::move(support), tf.sign < 0);
}

Congruence crt_solve(const std::vector<Congruence>& congruences) {
  if (congruences.empty()) throw std::invalid_argument("crt_solve: no congruences");
  mpz_class r = 0, m = 1;
  for (const auto& c : congruences) {
    if (c.modulus < 1) throw std::invalid_argument("crt_solve: modulus must be positive");
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t(), c.modulus.get_mpz_t());
    if (g != 1) throw std::invalid_argument("crt_solve: moduli are not pairwise coprime");
    // x = r + m * k with k = (residue - r) * m^{-1} mod modulus
    mpz_class k = ((c.residue - r) % c.modulus) * s % c.modulus;
    r += m * k;
    m *= c.modulus;
    r %= m;
    if (r < 0) r += m;
  }
  return Congruence{r, m};
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr uint64_t kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool mr_composite_witness(uint64_t n, uint64_t d, int r, uint64_t a) {
  uint64_t x = powmod_u64(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < r; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : kMrBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  const int r = std::countr_zero(d);
  d >>= r;
  for (uint64_t a : kMrBases)  // deterministic for all 64-bit n with this base set
    if (mr_composite_witness(n, d, r, a)) return false;
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
  // Strong probable-prime test with fixed prime bases.
  static const unsigned long bases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                        43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (unsigned long b : bases)
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  mpz_class d = n - 1;
  const mp_bitcnt_t r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  mpz_class nm1 = n - 1;
  for (unsigned long b : bases) {
    mpz_class a(b), x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (mp_bitcnt_t i = 1; i < r; ++i) {
      x = x * x % n;
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<uint64_t> sieve_primes(uint64_t bound) {
  std::vector<uint64_t> primes;
  if (bound < 2) return primes;
  if (bound > (uint64_t{1} << 31))
    throw std::invalid_argument("sieve_primes: bound too large");
  std::vector<bool> composite(bound + 1, false);
  for (uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace polya
