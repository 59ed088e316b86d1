#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polya/arith.hpp"
#include "polya/pell.hpp"

namespace polya {

enum class TwoStatus { unramified, partially_ramified, totally_ramified };
const char* to_string(TwoStatus status);

struct RamifiedPrime {
  mpz_class p;
  int e;  // ramification index: 2, or 4 for a totally ramified 2
};

/// Invariants of the totally real biquadratic field Q(sqrt d1, sqrt d2) with
/// third quadratic subfield Q(sqrt d3), d3 the squarefree part of d1*d2.
struct BiquadraticFieldData {
  mpz_class d1, d2, d3;
  FactoredInteger f1, f2, f3;
  std::vector<RamifiedPrime> ramified;  // ascending
  TwoStatus two_status = TwoStatus::unramified;

  int s() const { return static_cast<int>(ramified.size()); }
  int e_product_log2() const;
  const mpz_class& d(int i) const;          // i = 1, 2, 3
  const FactoredInteger& factors(int i) const;
};

BiquadraticFieldData biquadratic_data(const mpz_class& d1, const mpz_class& d2,
                                      const FactoredInteger* hint1 = nullptr,
                                      const FactoredInteger* hint2 = nullptr,
                                      uint64_t trial_bound = kDefaultTrialBound);
BiquadraticFieldData biquadratic_data_from_factors(const FactoredInteger& f1,
                                                   const FactoredInteger& f2);

/// F2 coordinate basis for square classes: bit 0 is the sign (-1), bit k is
/// the k-th basis prime in ascending order.
struct F2Basis {
  std::vector<mpz_class> primes;
  uint64_t vector_of(const SquarefreeClass& cls) const;
};

/// Rank of the given rows by Gaussian elimination over F2.
int f2_rank(std::vector<uint64_t> rows);

struct LabeledClass {
  std::string label;
  SquarefreeClass cls;
};

struct H1TwoTorsion {
  std::vector<LabeledClass> generators;  // delta1..3, a1..3
  int rank = 0;
  F2Basis basis;
};

/// Structure report for Po(K) of a totally real biquadratic field. The rank t
/// (Po isomorphic to (Z/2)^t) is only present in the elementary regime: all
/// e_i = 2 and no index-two correction.
struct PolyaResult {
  int order_log2 = 0;
  std::optional<int> rank;
  int h1_rank = 0;
  bool h1_index_two = false;
  std::vector<LabeledClass> generators;

  mpz_class order() const { return mpz_class(1) << order_log2; }
};

struct SubfieldDetail {
  mpz_class d;
  FundamentalUnit unit;
  SquarefreeClass delta;
  SquarefreeClass a;
};

struct PolyaComputation {
  BiquadraticFieldData field;
  std::array<SubfieldDetail, 3> subfields;
  std::optional<std::array<NormTwo, 3>> norm_two;  // evaluated when 2 is totally ramified
  H1TwoTorsion h1;
  PolyaResult result;
};

H1TwoTorsion h1_two_torsion(const BiquadraticFieldData& field, const CfOptions& options = {});
PolyaComputation polya_compute(const BiquadraticFieldData& field, const CfOptions& options = {});
PolyaResult polya_group(const BiquadraticFieldData& field, const CfOptions& options = {});

/// Hilbert's order formula for a real quadratic field: 2^(s-2) when the
/// fundamental unit has norm +1, else 2^(s-1).
mpz_class hilbert_polya_order(const mpz_class& d, const FactoredInteger* hint = nullptr,
                              const CfOptions& options = {},
                              uint64_t trial_bound = kDefaultTrialBound);

/// The same order computed a second way, from the exact sequence restricted
/// to one quadratic field: 2^(s - rank<[d],[a]>). Agreement of the two routes
/// is the cross-check used throughout the test suite.
struct QuadraticCrossCheck {
  QuadraticFieldData field;
  FundamentalUnit unit;
  SquarefreeClass a;
  int rank = 0;
  mpz_class hilbert_order;
  mpz_class sequence_order;
  bool agree = false;
};

QuadraticCrossCheck quadratic_crosscheck(const mpz_class& d, const FactoredInteger* hint = nullptr,
                                         const CfOptions& options = {},
                                         uint64_t trial_bound = kDefaultTrialBound);

}  // namespace polya
