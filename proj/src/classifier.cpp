#include "polya/classifier.hpp"

#include <algorithm>

namespace polya {

const char* to_string(CaseId id) {
  switch (id) {
    case CaseId::case1: return "case1";
    case CaseId::case2: return "case2";
    case CaseId::case3: return "case3";
    case CaseId::case4: return "case4";
    case CaseId::case5: return "case5";
    case CaseId::moreover: return "moreover";
    case CaseId::none: return "none";
  }
  return "?";
}

std::optional<CaseId> case_from_string(const std::string& name) {
  for (CaseId id : {CaseId::case1, CaseId::case2, CaseId::case3, CaseId::case4, CaseId::case5,
                    CaseId::moreover, CaseId::none})
    if (name == to_string(id)) return id;
  return std::nullopt;
}

namespace {

void require_odd_prime(uint64_t p, const char* role) {
  if (p < 3 || !is_prime_u64(p))
    throw std::invalid_argument(std::string(role) + " must be an odd prime");
}

int checked_symbol(int value, const char* name) {
  if (value != 1 && value != -1)
    throw std::invalid_argument(std::string("symbol ") + name + " must be +-1");
  return value;
}

}  // namespace

void validate_a1_primes(uint64_t q1, uint64_t q2) {
  require_odd_prime(q1, "q1");
  require_odd_prime(q2, "q2");
  if (q1 == q2) throw std::invalid_argument("q1 and q2 must be distinct");
  if (q1 % 4 != 3 || q2 % 4 != 3)
    throw std::invalid_argument("q1 and q2 must be 3 mod 4");
  if ((q1 % 8) * (q2 % 8) % 8 != 1) throw std::invalid_argument("q1*q2 must be 1 mod 8");
}

void validate_a2_primes(uint64_t p1, uint64_t p2, uint64_t p3) {
  require_odd_prime(p1, "p1");
  require_odd_prime(p2, "p2");
  require_odd_prime(p3, "p3");
  if (p1 == p2 || p1 == p3 || p2 == p3)
    throw std::invalid_argument("p1, p2, p3 must be distinct");
  if (p1 % 4 != 3 || p2 % 4 != 3)
    throw std::invalid_argument("p1 and p2 must be 3 mod 4");
  if (p3 % 4 != 1) throw std::invalid_argument("p3 must be 1 mod 4");
  if ((p1 % 8) * (p2 % 8) % 8 * (p3 % 8) % 8 != 1)
    throw std::invalid_argument("p1*p2*p3 must be 1 mod 8");
}

SymbolPattern SymbolPattern::from_primes(uint64_t p1, uint64_t p2, uint64_t p3, uint64_t q1,
                                         uint64_t q2) {
  validate_a2_primes(p1, p2, p3);
  validate_a1_primes(q1, q2);
  const uint64_t ps[3] = {p1, p2, p3};
  const uint64_t qs[2] = {q1, q2};
  for (uint64_t p : ps)
    for (uint64_t q : qs)
      if (p == q) throw std::invalid_argument("the five primes must be distinct");
  SymbolPattern pat;
  pat.p1 = p1;
  pat.p2 = p2;
  pat.p3 = p3;
  pat.q1 = q1;
  pat.q2 = q2;
  auto leg = [](uint64_t a, uint64_t n) { return jacobi(static_cast<int64_t>(a), n); };
  pat.s12 = leg(p1, p2);
  pat.s13 = leg(p1, p3);
  pat.s23 = leg(p2, p3);
  pat.p3q1 = leg(p3, q1);
  pat.p3q2 = leg(p3, q2);
  pat.p1q1 = leg(p1, q1);
  pat.p1q2 = leg(p1, q2);
  pat.p2q1 = leg(p2, q1);
  pat.p2q2 = leg(p2, q2);
  return pat;
}

SymbolPattern SymbolPattern::from_symbols(uint64_t p1, uint64_t p2, uint64_t p3, uint64_t q1,
                                          uint64_t q2, int s12, int s13, int s23, int p3q1,
                                          int p3q2, int p1q1, int p1q2, int p2q1, int p2q2) {
  validate_a2_primes(p1, p2, p3);
  validate_a1_primes(q1, q2);
  SymbolPattern pat;
  pat.p1 = p1;
  pat.p2 = p2;
  pat.p3 = p3;
  pat.q1 = q1;
  pat.q2 = q2;
  pat.s12 = checked_symbol(s12, "s12");
  pat.s13 = checked_symbol(s13, "s13");
  pat.s23 = checked_symbol(s23, "s23");
  pat.p3q1 = checked_symbol(p3q1, "p3q1");
  pat.p3q2 = checked_symbol(p3q2, "p3q2");
  pat.p1q1 = checked_symbol(p1q1, "p1q1");
  pat.p1q2 = checked_symbol(p1q2, "p1q2");
  pat.p2q1 = checked_symbol(p2q1, "p2q1");
  pat.p2q2 = checked_symbol(p2q2, "p2q2");
  return pat;
}

std::vector<SquarefreeClass> predict_a1(uint64_t q1, uint64_t q2) {
  validate_a1_primes(q1, q2);
  std::vector<SquarefreeClass> out = {class_of_primes({q1}), class_of_primes({q2})};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> a2_leaf_roles(int s12, int s13, int s23) {
  checked_symbol(s12, "s12");
  checked_symbol(s13, "s13");
  checked_symbol(s23, "s23");
  const bool a = s12 > 0, b = s13 > 0, c = s23 > 0;
  if (a && b && c) return {{1}, {3}, {1, 3}};
  if (a && b && !c) return {{1}};
  if (a && !b && c) return {{1, 3}};
  if (a && !b && !c) return {{1, 2}};
  if (!a && b && c) return {{2}, {3}, {2, 3}};
  if (!a && b && !c) return {{2, 3}};
  if (!a && !b && c) return {{2}};
  return {{1, 2}};
}

std::vector<SquarefreeClass> predict_a2(uint64_t p1, uint64_t p2, uint64_t p3) {
  validate_a2_primes(p1, p2, p3);
  const int s12 = jacobi(static_cast<int64_t>(p1), p2);
  const int s13 = jacobi(static_cast<int64_t>(p1), p3);
  const int s23 = jacobi(static_cast<int64_t>(p2), p3);
  const uint64_t by_role[4] = {0, p1, p2, p3};
  std::vector<SquarefreeClass> out;
  for (const auto& roles : a2_leaf_roles(s12, s13, s23)) {
    std::vector<uint64_t> primes;
    for (int r : roles) primes.push_back(by_role[r]);
    out.push_back(class_of_primes(std::move(primes)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool matches_case(const SymbolPattern& t, CaseId id) {
  switch (id) {
    case CaseId::case1:
      return t.s12 == 1 && t.s13 == 1 && t.s23 == -1 && t.p3q1 == -1 && t.p3q2 == -1 &&
             t.p1q1 == -1 && t.p1q2 == -1 && t.q1q2_over_p2() == -1;
    case CaseId::case2:
      return t.s12 == 1 && t.s13 == -1 && t.s23 == 1 && t.p3q1 == -1 && t.p3q2 == -1 &&
             t.p1q1 == 1 && t.p1q2 == 1 && t.q1q2_over_p2() == -1;
    case CaseId::case3:
      return t.s13 == -1 && t.s23 == -1 && t.p3q1 == 1 && t.p3q2 == -1 &&
             t.p1p2_over_q1() == -1 && t.p1p2_over_q2() == -1 && t.q1q2_over_p1() == 1;
    case CaseId::case4:
      return t.s12 == -1 && t.s13 == 1 && t.s23 == -1 && t.p3q1 == -1 && t.p3q2 == -1 &&
             t.p1p2_over_q1() == 1 && t.p1p2_over_q2() == 1 && t.q1q2_over_p1() == -1;
    case CaseId::case5:
      return t.s12 == -1 && t.s13 == -1 && t.s23 == 1 && t.p3q1 == -1 && t.p3q2 == -1 &&
             t.p1q1 == -1 && t.p1q2 == -1 && t.q1q2_over_p2() == -1;
    case CaseId::moreover:
      return t.s13 == 1 && t.s23 == 1;
    default:
      return false;
  }
}

}  // namespace

CasePrediction classify_theorem(const SymbolPattern& pattern) {
  for (CaseId id : {CaseId::case1, CaseId::case2, CaseId::case3, CaseId::case4, CaseId::case5})
    if (matches_case(pattern, id)) return {id, {0}};
  if (matches_case(pattern, CaseId::moreover)) return {CaseId::moreover, {0, 1}};
  return {CaseId::none, {}};
}

std::vector<CaseId> matching_cases(const SymbolPattern& pattern) {
  std::vector<CaseId> out;
  for (CaseId id : {CaseId::case1, CaseId::case2, CaseId::case3, CaseId::case4, CaseId::case5,
                    CaseId::moreover})
    if (matches_case(pattern, id)) out.push_back(id);
  return out;
}

VerificationReport verify_prediction(const SymbolPattern& pattern, const CfOptions& options) {
  VerificationReport report;
  report.pattern = pattern;
  report.prediction = classify_theorem(pattern);
  report.all_matches = matching_cases(pattern);
  report.a1_predicted = predict_a1(pattern.q1, pattern.q2);
  report.a2_predicted = predict_a2(pattern.p1, pattern.p2, pattern.p3);

  const auto f1 = FactoredInteger::from_primes({pattern.q1, pattern.q2});
  const auto f2 = FactoredInteger::from_primes({pattern.p1, pattern.p2, pattern.p3});
  report.computation = polya_compute(biquadratic_data_from_factors(f1, f2), options);

  const auto& a1 = report.computation.subfields[0].a;
  const auto& a2 = report.computation.subfields[1].a;
  report.a1_ok = std::find(report.a1_predicted.begin(), report.a1_predicted.end(), a1) !=
                 report.a1_predicted.end();
  report.a2_ok = std::find(report.a2_predicted.begin(), report.a2_predicted.end(), a2) !=
                 report.a2_predicted.end();

  if (report.prediction.case_id != CaseId::none) {
    const auto& result = report.computation.result;
    report.rank_ok = result.rank.has_value() &&
                     std::find(report.prediction.allowed_ranks.begin(),
                               report.prediction.allowed_ranks.end(),
                               *result.rank) != report.prediction.allowed_ranks.end();
  }
  report.passed = report.a1_ok && report.a2_ok && report.rank_ok;
  return report;
}

}  // namespace polya
