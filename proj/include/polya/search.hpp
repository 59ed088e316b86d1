#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "polya/classifier.hpp"
#include "polya/exec.hpp"

namespace polya {

struct SlotSpec {
  std::string name;
  int mod4 = 0;  // 0 unconstrained, else required residue mod 4
};

struct ProductCondition {
  std::vector<std::string> slots;
  uint64_t modulus = 8;
  uint64_t residue = 1;
};

struct SymbolCondition {
  std::vector<std::string> numerator;  // product of slot primes
  std::string denominator;             // single slot
  int value = 1;

  std::string describe() const;
};

/// Constraint over a tuple of distinct odd primes, one per named slot.
/// Tuples are enumerated in lexicographic order of the slot vector, so a
/// naive nested loop over the slots reproduces the stream exactly.
struct SearchConstraint {
  std::vector<SlotSpec> slots;
  std::vector<ProductCondition> products;
  std::vector<SymbolCondition> symbols;
  uint64_t bound = 0;
  uint64_t limit = 0;  // 0 = unlimited

  void validate() const;
  bool theorem_shaped() const;  // slots are exactly q1,q2,p1,p2,p3
};

SearchConstraint constraint_from_json(const nlohmann::json& j);
nlohmann::json constraint_to_json(const SearchConstraint& c);

/// One emitted tuple. The verification payload is only filled by the
/// campaign drivers; enumeration alone never computes units.
struct TupleRecord {
  std::vector<uint64_t> primes;  // one per slot, constraint order
  std::vector<std::pair<std::string, int>> symbols;  // evaluated conditions
  std::optional<SymbolPattern> pattern;              // theorem-shaped searches
  CaseId verdict = CaseId::none;
};

struct SearchResult {
  std::vector<TupleRecord> tuples;
  bool truncated = false;  // limit reached before the stream was exhausted
};

SearchResult enumerate_tuples(const SearchConstraint& constraint, const ExecPolicy& policy = {});

/// The six presets encoding the five sufficient symbol-pattern cases plus
/// the weaker two-condition variant, all sharing the congruence hypotheses
/// q1 = q2 = p1 = p2 = 3 mod 4, p3 = 1 mod 4, q1 q2 = p1 p2 p3 = 1 mod 8.
SearchConstraint case_preset(CaseId id, uint64_t bound, uint64_t limit = 0);
std::vector<CaseId> preset_ids();

}  // namespace polya
