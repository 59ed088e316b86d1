#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polya/arith.hpp"
#include "polya/cohomology.hpp"

namespace polya {

enum class CaseId { case1, case2, case3, case4, case5, moreover, none };

const char* to_string(CaseId id);
std::optional<CaseId> case_from_string(const std::string& name);

/// The nine atomic Legendre symbols between the five primes of a tuple
/// (p1, p2, q1, q2 = 3 mod 4, p3 = 1 mod 4, q1 q2 = p1 p2 p3 = 1 mod 8).
/// Composite symbols are always derived from these, never re-evaluated:
/// for p, q both 3 mod 4 reciprocity gives (q/p) = -(p/q), so the flips
/// cancel in two-term products like (q1 q2 / p2).
struct SymbolPattern {
  uint64_t p1 = 0, p2 = 0, p3 = 0, q1 = 0, q2 = 0;
  int s12 = 0, s13 = 0, s23 = 0;                     // (p1/p2), (p1/p3), (p2/p3)
  int p3q1 = 0, p3q2 = 0;                            // (p3/q1), (p3/q2)
  int p1q1 = 0, p1q2 = 0, p2q1 = 0, p2q2 = 0;        // (pi/qj)

  int q1q2_over_p1() const { return p1q1 * p1q2; }
  int q1q2_over_p2() const { return p2q1 * p2q2; }
  int p1p2_over_q1() const { return p1q1 * p2q1; }
  int p1p2_over_q2() const { return p1q2 * p2q2; }

  static SymbolPattern from_primes(uint64_t p1, uint64_t p2, uint64_t p3, uint64_t q1,
                                   uint64_t q2);
  static SymbolPattern from_symbols(uint64_t p1, uint64_t p2, uint64_t p3, uint64_t q1,
                                    uint64_t q2, int s12, int s13, int s23, int p3q1, int p3q2,
                                    int p1q1, int p1q2, int p2q1, int p2q2);
};

/// Congruence gates shared by the predictors and the pattern constructors.
void validate_a1_primes(uint64_t q1, uint64_t q2);
void validate_a2_primes(uint64_t p1, uint64_t p2, uint64_t p3);

/// a1 lies in {[q1], [q2]} for a qualifying pair.
std::vector<SquarefreeClass> predict_a1(uint64_t q1, uint64_t q2);

/// Flowchart leaf for a2 as role subsets over (p1, p2, p3), keyed by the sign
/// triple ((p1/p2), (p1/p3), (p2/p3)). The eight leaves partition all sign
/// triples.
std::vector<std::vector<int>> a2_leaf_roles(int s12, int s13, int s23);
std::vector<SquarefreeClass> predict_a2(uint64_t p1, uint64_t p2, uint64_t p3);

struct CasePrediction {
  CaseId case_id = CaseId::none;
  std::vector<int> allowed_ranks;  // empty when no prediction applies
};

/// First matching case in order case1..case5, then the moreover clause.
CasePrediction classify_theorem(const SymbolPattern& pattern);

/// Every matching case (diagnostics for overlap between the five cases).
std::vector<CaseId> matching_cases(const SymbolPattern& pattern);

struct VerificationReport {
  SymbolPattern pattern;
  CasePrediction prediction;
  std::vector<CaseId> all_matches;
  PolyaComputation computation;
  std::vector<SquarefreeClass> a1_predicted;
  std::vector<SquarefreeClass> a2_predicted;
  bool a1_ok = false;
  bool a2_ok = false;
  bool rank_ok = true;  // vacuously true when no case matched
  bool passed = false;
};

/// End-to-end check of one tuple: compute Po(K) for
/// K = Q(sqrt(q1 q2), sqrt(p1 p2 p3)) and compare against the predictors.
VerificationReport verify_prediction(const SymbolPattern& pattern, const CfOptions& options = {});

}  // namespace polya
