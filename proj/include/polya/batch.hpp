#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polya/classifier.hpp"
#include "polya/cohomology.hpp"
#include "polya/exec.hpp"
#include "polya/search.hpp"

namespace polya {

// Batch campaigns over independent fields/tuples. Each driver runs either as
// a plain serial loop (the reference) or as an OpenMP map with index-stable
// output; the two must agree exactly, which the test suite asserts and the
// bench tool times.

struct A1Check {
  uint64_t q1 = 0, q2 = 0;
  FundamentalUnit unit;
  SquarefreeClass actual;
  bool pass = false;
};

/// All pairs q1 < q2 (both 3 mod 4, q1 q2 = 1 mod 8) with q1 q2 <= product_bound,
/// checking a_class(q1 q2) against {[q1], [q2]}.
std::vector<A1Check> a1_corpus(uint64_t product_bound, const ExecPolicy& policy = {});

struct A2Check {
  uint64_t p1 = 0, p2 = 0, p3 = 0;  // oriented: both (p1,p2) orders appear
  int s12 = 0, s13 = 0, s23 = 0;
  SquarefreeClass actual;
  bool pass = false;
};

/// All oriented triples (p1, p2 = 3 mod 4, p3 = 1 mod 4, product = 1 mod 8)
/// with p1 p2 p3 <= product_bound, checking a_class against the flowchart leaf.
std::vector<A2Check> a2_corpus(uint64_t product_bound, const ExecPolicy& policy = {});

/// Hilbert-order versus exact-sequence order for every squarefree d in
/// [2, d_max]; the returned rows are only the disagreements (empty = pass).
std::vector<QuadraticCrossCheck> crosscheck_disagreements(uint64_t d_max,
                                                          const ExecPolicy& policy = {});

struct VerifiedTuple {
  TupleRecord record;
  VerificationReport report;
};

struct CaseCampaign {
  CaseId preset = CaseId::none;
  uint64_t matched = 0;     // tuples enumerated (capped by the limit)
  bool truncated = false;   // limit cut the stream short
  uint64_t verified = 0;
  uint64_t failures = 0;
  std::vector<VerifiedTuple> tuples;
  std::optional<TupleRecord> smallest_witness;
};

struct TheoremVerification {
  uint64_t bound = 0;
  uint64_t limit = 0;
  std::vector<CaseCampaign> cases;
  bool all_passed = true;
  bool cancelled = false;
};

/// Runs the case presets up to `bound`, pipes every matched tuple through
/// verify_prediction, and aggregates per-case outcomes. limit = 0 verifies
/// the whole stream (can be very expensive for the two-condition preset).
TheoremVerification verify_theorem(uint64_t bound, std::optional<CaseId> only_case,
                                   uint64_t limit_per_case, const ExecPolicy& policy = {});

}  // namespace polya
