#include "polya/pell.hpp"

#include <algorithm>

namespace polya {

namespace {

// PQa state machine for the continued fraction of (P + sqrt d)/Q. Complete
// quotients are exact: a_i = floor((P_i + sqrt d)/Q_i), then
// P_{i+1} = a_i Q_i - P_i and Q_{i+1} = (d - P_{i+1}^2)/Q_i, which divides
// exactly as long as Q_i | d - P_i^2.
class CfStream {
 public:
  CfStream(mpz_class d, mpz_class p0, mpz_class q0, const CfOptions& options)
      : d_(std::move(d)), p_(std::move(p0)), q_(std::move(q0)), options_(options) {
    mpz_sqrt(sqrt_d_.get_mpz_t(), d_.get_mpz_t());
    ensure(q_ != 0 && (d_ - p_ * p_) % q_ == 0, "cf: Q must divide d - P^2");
  }

  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }

  mpz_class step() {
    if (++steps_ > options_.max_iterations)
      throw PeriodOverflow("cf: period did not close within the iteration cap");
    if (options_.cancel != nullptr && steps_ % options_.cancel_stride == 0 &&
        options_.cancel->load(std::memory_order_relaxed))
      throw Cancelled("cf: cancelled");
    ensure(q_ > 0, "cf: nonpositive denominator");
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), mpz_class(p_ + sqrt_d_).get_mpz_t(), q_.get_mpz_t());
    mpz_class p_next = a * q_ - p_;
    mpz_class q_num = d_ - p_next * p_next;
    ensure(q_num % q_ == 0, "cf: inexact denominator update");
    q_ = q_num / q_;
    p_ = std::move(p_next);
    return a;
  }

 private:
  mpz_class d_;
  mpz_class sqrt_d_;
  mpz_class p_;
  mpz_class q_;
  CfOptions options_;
  uint64_t steps_ = 0;
};

void validate_cf_input(const mpz_class& d, bool use_omega) {
  if (d <= 1) throw std::invalid_argument("cf: d must exceed 1");
  if (mpz_perfect_square_p(d.get_mpz_t()))
    throw std::invalid_argument("cf: d must not be a perfect square");
  if (use_omega && mpz_fdiv_ui(d.get_mpz_t(), 4) != 1)
    throw std::invalid_argument("cf: omega expansion requires d = 1 mod 4");
}

CfStream make_stream(const mpz_class& d, bool omega, const CfOptions& options) {
  return omega ? CfStream(d, 1, 2, options) : CfStream(d, 0, 1, options);
}

}  // namespace

CfExpansion cf_expand(const mpz_class& d, bool use_omega, const CfOptions& options) {
  validate_cf_input(d, use_omega);
  CfExpansion out;
  out.d = d;
  out.omega = use_omega;
  CfStream cf = make_stream(d, use_omega, options);
  out.a0 = cf.step();
  const mpz_class p1 = cf.p(), q1 = cf.q();
  while (true) {
    out.q_values.push_back(cf.q());
    out.period.push_back(cf.step());
    if (cf.p() == p1 && cf.q() == q1) break;
  }
  return out;
}

FundamentalUnit fundamental_unit(const mpz_class& d, const CfOptions& options) {
  validate_cf_input(d, false);
  const bool omega = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1;
  CfStream cf = make_stream(d, omega, options);

  // Convergent recurrences A_i = a_i A_{i-1} + A_{i-2}; at period end the
  // pair (A_{L-1}, B_{L-1}) carries the unit.
  mpz_class a_prev = 1, a_prev2 = 0;  // A_{-1}, A_{-2}
  mpz_class b_prev = 0, b_prev2 = 1;  // B_{-1}, B_{-2}
  auto advance = [&](const mpz_class& partial) {
    mpz_class a_cur = partial * a_prev + a_prev2;
    mpz_class b_cur = partial * b_prev + b_prev2;
    a_prev2 = std::move(a_prev);
    b_prev2 = std::move(b_prev);
    a_prev = std::move(a_cur);
    b_prev = std::move(b_cur);
  };

  advance(cf.step());  // a_0
  const mpz_class p1 = cf.p(), q1 = cf.q();
  uint64_t length = 0;
  while (true) {
    advance(cf.step());
    ++length;
    if (cf.p() == p1 && cf.q() == q1) break;
  }

  // a_prev2/b_prev2 now hold A_{L-1}, B_{L-1}.
  FundamentalUnit u;
  u.period_length = length;
  if (omega) {
    // Unit is (G + B sqrt d)/2 with G = 2 A_{L-1} - B_{L-1}.
    mpz_class g = 2 * a_prev2 - b_prev2;
    mpz_class n4 = g * g - d * b_prev2 * b_prev2;
    ensure(n4 == 4 || n4 == -4, "fundamental_unit: omega convergent is not a unit");
    u.norm = n4 > 0 ? 1 : -1;
    if (mpz_even_p(b_prev2.get_mpz_t())) {
      ensure(mpz_even_p(g.get_mpz_t()), "fundamental_unit: parity mismatch");
      u.x = g / 2;
      u.y = b_prev2 / 2;
    } else {
      u.halved = true;
      u.x = std::move(g);
      u.y = std::move(b_prev2);
    }
  } else {
    mpz_class n = a_prev2 * a_prev2 - d * b_prev2 * b_prev2;
    ensure(n == 1 || n == -1, "fundamental_unit: convergent is not a unit");
    u.norm = n > 0 ? 1 : -1;
    u.x = std::move(a_prev2);
    u.y = std::move(b_prev2);
  }
  ensure(u.x > 0 && u.y > 0, "fundamental_unit: unit not > 1");
  ensure(u.norm == (length % 2 == 1 ? -1 : 1), "fundamental_unit: norm/period parity mismatch");
  return u;
}

mpz_class norm_u_plus_one(const FundamentalUnit& u, const mpz_class& d) {
  if (u.halved) {
    mpz_class n4 = (u.x + 2) * (u.x + 2) - d * u.y * u.y;
    ensure(n4 % 4 == 0, "norm_u_plus_one: non-integral norm");
    return n4 / 4;
  }
  return (u.x + 1) * (u.x + 1) - d * u.y * u.y;
}

SquarefreeClass a_class(const mpz_class& d, const FactoredInteger& d_factors,
                        const CfOptions& options) {
  if (d_factors.value() != d || !d_factors.squarefree())
    throw std::invalid_argument("a_class: hint must be the squarefree factorization of d");
  const FundamentalUnit u = fundamental_unit(d, options);
  if (u.norm == -1) return SquarefreeClass{};

  mpz_class n = norm_u_plus_one(u, d);
  const mpz_class expected = u.halved ? mpz_class(u.x + 2) : mpz_class(2 * (u.x + 1));
  ensure(n == expected, "a_class: norm identity violated");

  // The squarefree part of N(u+1) divides 2d, so pulling those primes must
  // leave a perfect square.
  std::vector<mpz_class> support;
  auto pull = [&](const mpz_class& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    if (e & 1) support.push_back(p);
  };
  if (mpz_odd_p(d.get_mpz_t())) pull(mpz_class(2));
  for (const auto& [p, e] : d_factors.factors) pull(p);
  if (!mpz_perfect_square_p(n.get_mpz_t()))
    throw UnfactoredResidue("a_class: N(u+1) support escapes the primes of 2d (cofactor " +
                            n.get_str() + ")");
  std::sort(support.begin(), support.end());
  return SquarefreeClass(std::move(support), false);
}

SquarefreeClass a_class(const mpz_class& d, const CfOptions& options) {
  return a_class(d, factorize(d), options);
}

const char* to_string(NormTwo value) {
  switch (value) {
    case NormTwo::neither: return "neither";
    case NormTwo::plus_two: return "plus_two";
    case NormTwo::minus_two: return "minus_two";
    case NormTwo::both: return "both";
  }
  return "?";
}

bool norm_two_includes(NormTwo value, int sign) {
  if (value == NormTwo::both) return true;
  return sign > 0 ? value == NormTwo::plus_two : value == NormTwo::minus_two;
}

namespace {

NormTwo combine(bool plus, bool minus) {
  if (plus && minus) return NormTwo::both;
  if (plus) return NormTwo::plus_two;
  if (minus) return NormTwo::minus_two;
  return NormTwo::neither;
}

}  // namespace

NormTwo norm_two_solvable(const mpz_class& d, const CfOptions& options) {
  validate_cf_input(d, false);
  if (d == 2) {
    // c = +-2 = +-d reduces via x = 2 x~ to  y^2 - 2 x~^2 = -+1; the +1 Pell
    // equation always has a solution, the -1 one iff the period is odd.
    const bool odd_period = fundamental_unit(d, options).period_length % 2 == 1;
    return combine(odd_period, true);
  }
  // (-1)^i Q_i over i = 1..2L covers every primitively represented value c
  // with |c| < sqrt d, and +-2 is coprime to any common divisor of x, y.
  CfStream cf = make_stream(d, false, options);
  cf.step();
  const mpz_class p1 = cf.p(), q1 = cf.q();
  bool two_at_odd = false, two_at_even = false;
  uint64_t i = 0;
  while (true) {
    ++i;
    if (cf.q() == 2) (i % 2 == 1 ? two_at_odd : two_at_even) = true;
    cf.step();
    if (cf.p() == p1 && cf.q() == q1) break;
  }
  const bool odd_period = i % 2 == 1;
  const bool plus = two_at_even || (odd_period && two_at_odd);
  const bool minus = two_at_odd || (odd_period && two_at_even);
  return combine(plus, minus);
}

std::optional<std::pair<mpz_class, mpz_class>> norm_two_witness(const mpz_class& d, int sign,
                                                                const CfOptions& options) {
  validate_cf_input(d, false);
  ensure(sign == 1 || sign == -1, "norm_two_witness: sign must be +-1");
  if (!norm_two_includes(norm_two_solvable(d, options), sign)) return std::nullopt;
  if (d == 2) {
    const FundamentalUnit u = fundamental_unit(d, options);  // 1 + sqrt 2, norm -1
    // x^2 - 2 y^2 = +2 from y^2 - 2 x~^2 = -1; = -2 from the +1 solution.
    if (sign > 0) return std::make_pair(mpz_class(2 * u.y), u.x);
    mpz_class y1 = u.x * u.x + 2 * u.y * u.y;  // square the unit for norm +1
    mpz_class x1 = 2 * u.x * u.y;
    return std::make_pair(mpz_class(2 * x1), y1);
  }
  // Walk the convergents until A_{i-1}^2 - d B_{i-1}^2 = sign * 2.
  CfStream cf = make_stream(d, false, options);
  mpz_class a_prev = 1, a_prev2 = 0, b_prev = 0, b_prev2 = 1;
  auto advance = [&](const mpz_class& partial) {
    mpz_class a_cur = partial * a_prev + a_prev2;
    mpz_class b_cur = partial * b_prev + b_prev2;
    a_prev2 = std::move(a_prev);
    b_prev2 = std::move(b_prev);
    a_prev = std::move(a_cur);
    b_prev = std::move(b_cur);
  };
  advance(cf.step());
  const mpz_class target = 2 * sign;
  for (uint64_t i = 1; i <= 2 * options.max_iterations; ++i) {
    if (a_prev * a_prev - d * b_prev * b_prev == target)
      return std::make_pair(a_prev, b_prev);
    advance(cf.step());
  }
  throw InternalError("norm_two_witness: witness not found despite solvability");
}

QuadraticFieldData quadratic_field_data(const mpz_class& d, const FactoredInteger* hint,
                                        uint64_t trial_bound) {
  if (d <= 1) throw std::invalid_argument("quadratic_field_data: d must exceed 1");
  const FactoredInteger f = factorize(d, hint, trial_bound);
  if (!f.squarefree()) throw NotSquarefree("quadratic_field_data: " + d.get_str());
  QuadraticFieldData out;
  out.d = d;
  const bool one_mod_4 = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1;
  out.discriminant = one_mod_4 ? d : 4 * d;
  if (!one_mod_4 && mpz_odd_p(d.get_mpz_t())) out.ramified_primes.emplace_back(2);
  for (const auto& [p, e] : f.factors) out.ramified_primes.push_back(p);
  std::sort(out.ramified_primes.begin(), out.ramified_primes.end());
  out.s = static_cast<int>(out.ramified_primes.size());
  return out;
}

}  // namespace polya
