#include "polya/batch.hpp"

#include <algorithm>
#include <array>

#include <omp.h>

namespace polya {

namespace {

bool cancelled(const ExecPolicy& policy) {
  return policy.cancel != nullptr && policy.cancel->load(std::memory_order_relaxed);
}

// Index-stable parallel map: out[i] = f(i). The serial engine is the
// reference implementation; the OpenMP engine must match it exactly.
template <typename T, typename F>
std::vector<T> map_indexed(size_t n, const ExecPolicy& policy, F&& f) {
  std::vector<T> out(n);
  if (policy.engine == Engine::serial) {
    for (size_t i = 0; i < n; ++i) {
      if (cancelled(policy)) break;
      out[i] = f(i);
    }
    return out;
  }
  const int jobs = policy.resolved_jobs();
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
  for (size_t i = 0; i < n; ++i) {
    if (cancelled(policy)) continue;
    out[i] = f(i);
  }
  return out;
}

}  // namespace

std::vector<A1Check> a1_corpus(uint64_t product_bound, const ExecPolicy& policy) {
  std::vector<std::pair<uint64_t, uint64_t>> pairs;
  const auto primes = sieve_primes(product_bound / 3 + 1);
  for (uint64_t q1 : primes) {
    if (q1 % 4 != 3) continue;
    for (uint64_t q2 : primes) {
      if (q2 <= q1 || q2 % 4 != 3 || q1 * q2 > product_bound) continue;
      if (q1 * q2 % 8 != 1) continue;
      pairs.emplace_back(q1, q2);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  auto rows = map_indexed<A1Check>(pairs.size(), policy, [&](size_t i) {
    const auto [q1, q2] = pairs[i];
    A1Check check;
    check.q1 = q1;
    check.q2 = q2;
    check.unit = fundamental_unit(q1 * q2);
    check.actual = a_class(q1 * q2, FactoredInteger::from_primes({q1, q2}));
    const auto predicted = predict_a1(q1, q2);
    check.pass = std::find(predicted.begin(), predicted.end(), check.actual) != predicted.end();
    return check;
  });
  std::erase_if(rows, [](const A1Check& c) { return c.q1 == 0; });
  return rows;
}

std::vector<A2Check> a2_corpus(uint64_t product_bound, const ExecPolicy& policy) {
  // Unordered supports first: one unit computation covers both orientations.
  std::vector<std::array<uint64_t, 3>> supports;  // {a < b (3 mod 4), c (1 mod 4)}
  const auto primes = sieve_primes(product_bound / 15 + 1);
  for (uint64_t a : primes) {
    if (a % 4 != 3) continue;
    for (uint64_t b : primes) {
      if (b <= a || b % 4 != 3 || a * b * 5 > product_bound) continue;
      for (uint64_t c : primes) {
        if (a * b * c > product_bound) break;
        if (c % 4 != 1 || a * b * c % 8 != 1) continue;
        supports.push_back({a, b, c});
      }
    }
  }
  std::sort(supports.begin(), supports.end());
  const auto checked = map_indexed<std::array<A2Check, 2>>(supports.size(), policy, [&](size_t i) {
    const auto [a, b, c] = supports[i];
    const auto actual = a_class(a * b * c, FactoredInteger::from_primes({a, b, c}));
    std::array<A2Check, 2> out;
    int slot = 0;
    for (const auto& [p1, p2] : {std::pair{a, b}, std::pair{b, a}}) {
      A2Check& check = out[static_cast<size_t>(slot++)];
      check.p1 = p1;
      check.p2 = p2;
      check.p3 = c;
      check.s12 = jacobi(static_cast<int64_t>(p1), p2);
      check.s13 = jacobi(static_cast<int64_t>(p1), c);
      check.s23 = jacobi(static_cast<int64_t>(p2), c);
      check.actual = actual;
      const auto predicted = predict_a2(p1, p2, c);
      check.pass = std::find(predicted.begin(), predicted.end(), actual) != predicted.end();
    }
    return out;
  });
  std::vector<A2Check> flat;
  flat.reserve(checked.size() * 2);
  for (const auto& pair : checked) {
    if (pair[0].p1 == 0) continue;  // skipped by cancellation
    flat.push_back(pair[0]);
    flat.push_back(pair[1]);
  }
  return flat;
}

std::vector<QuadraticCrossCheck> crosscheck_disagreements(uint64_t d_max,
                                                          const ExecPolicy& policy) {
  std::vector<uint64_t> ds;
  for (uint64_t d = 2; d <= d_max; ++d) {
    bool squarefree = true;
    for (uint64_t p = 2; p * p <= d; ++p)
      if (d % (p * p) == 0) {
        squarefree = false;
        break;
      }
    if (squarefree) ds.push_back(d);
  }
  const auto rows = map_indexed<QuadraticCrossCheck>(ds.size(), policy, [&](size_t i) {
    return quadratic_crosscheck(ds[i]);
  });
  std::vector<QuadraticCrossCheck> bad;
  for (const auto& row : rows)
    if (!row.agree && row.field.d != 0) bad.push_back(row);
  return bad;
}

TheoremVerification verify_theorem(uint64_t bound, std::optional<CaseId> only_case,
                                   uint64_t limit_per_case, const ExecPolicy& policy) {
  TheoremVerification out;
  out.bound = bound;
  out.limit = limit_per_case;
  for (CaseId id : preset_ids()) {
    if (only_case && *only_case != id) continue;
    CaseCampaign campaign;
    campaign.preset = id;
    const auto search = enumerate_tuples(case_preset(id, bound, limit_per_case), policy);
    campaign.matched = search.tuples.size();
    campaign.truncated = search.truncated;
    if (!search.tuples.empty()) campaign.smallest_witness = search.tuples.front();

    CfOptions cf;
    cf.cancel = policy.cancel;
    const auto verified =
        map_indexed<VerifiedTuple>(search.tuples.size(), policy, [&](size_t i) {
          VerifiedTuple vt;
          vt.record = search.tuples[i];
          ensure(vt.record.pattern.has_value(), "verify_theorem: preset tuple lacks a pattern");
          vt.report = verify_prediction(*vt.record.pattern, cf);
          return vt;
        });
    if (cancelled(policy)) {
      out.cancelled = true;
      out.cases.push_back(std::move(campaign));
      break;
    }
    campaign.tuples = std::move(verified);
    for (const auto& vt : campaign.tuples) {
      ++campaign.verified;
      bool ok = vt.report.passed;
      // every tuple of the two-condition preset must land in rank 0 or 1,
      // whatever the classifier verdict was
      if (id == CaseId::moreover) {
        const auto& rank = vt.report.computation.result.rank;
        ok = ok && rank.has_value() && *rank <= 1;
      }
      if (!ok) ++campaign.failures;
    }
    out.all_passed = out.all_passed && campaign.failures == 0;
    out.cases.push_back(std::move(campaign));
    if (cancelled(policy)) {
      out.cancelled = true;
      break;
    }
  }
  return out;
}

}  // namespace polya
