#include "polya/search.hpp"

#include <algorithm>
#include <map>

#include <omp.h>

#include "polya/errors.hpp"

namespace polya {

std::string SymbolCondition::describe() const {
  std::string num;
  for (size_t i = 0; i < numerator.size(); ++i) {
    if (i > 0) num += "*";
    num += numerator[i];
  }
  return "(" + num + "/" + denominator + ")";
}

void SearchConstraint::validate() const {
  if (slots.empty()) throw std::invalid_argument("constraint: no slots");
  if (bound < 3) throw std::invalid_argument("constraint: bound must be >= 3");
  std::map<std::string, int> index;
  for (size_t i = 0; i < slots.size(); ++i) {
    const auto& s = slots[i];
    if (s.name.empty()) throw std::invalid_argument("constraint: unnamed slot");
    if (!index.emplace(s.name, static_cast<int>(i)).second)
      throw std::invalid_argument("constraint: duplicate slot " + s.name);
    if (s.mod4 != 0 && s.mod4 != 1 && s.mod4 != 3)
      throw std::invalid_argument("constraint: slot residue mod 4 must be 1 or 3");
  }
  for (const auto& pc : products) {
    if (pc.slots.empty() || pc.modulus == 0)
      throw std::invalid_argument("constraint: malformed product condition");
    for (const auto& name : pc.slots)
      if (!index.count(name))
        throw std::invalid_argument("constraint: product names unknown slot " + name);
  }
  for (const auto& sc : symbols) {
    if (sc.numerator.empty() || (sc.value != 1 && sc.value != -1))
      throw std::invalid_argument("constraint: malformed symbol condition");
    for (const auto& name : sc.numerator)
      if (!index.count(name))
        throw std::invalid_argument("constraint: symbol numerator names unknown slot " + name);
    if (!index.count(sc.denominator))
      throw std::invalid_argument("constraint: symbol denominator names unknown slot " +
                                  sc.denominator);
  }
}

bool SearchConstraint::theorem_shaped() const {
  static const std::vector<std::string> names = {"q1", "q2", "p1", "p2", "p3"};
  if (slots.size() != names.size()) return false;
  for (size_t i = 0; i < names.size(); ++i)
    if (slots[i].name != names[i]) return false;
  return true;
}

SearchConstraint constraint_from_json(const nlohmann::json& j) {
  SearchConstraint c;
  try {
    for (const auto& s : j.at("slots"))
      c.slots.push_back({s.at("name").get<std::string>(), s.value("mod4", 0)});
    for (const auto& p : j.value("products", nlohmann::json::array())) {
      ProductCondition pc;
      pc.slots = p.at("slots").get<std::vector<std::string>>();
      pc.modulus = p.value("mod", 8);
      pc.residue = p.value("residue", 1);
      c.products.push_back(std::move(pc));
    }
    for (const auto& s : j.value("symbols", nlohmann::json::array())) {
      SymbolCondition sc;
      sc.numerator = s.at("num").get<std::vector<std::string>>();
      sc.denominator = s.at("den").get<std::string>();
      sc.value = s.at("value").get<int>();
      c.symbols.push_back(std::move(sc));
    }
    c.bound = j.value("bound", 0);
    c.limit = j.value("limit", 0);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("constraint: bad JSON: ") + e.what());
  }
  return c;
}

nlohmann::json constraint_to_json(const SearchConstraint& c) {
  nlohmann::json j;
  j["slots"] = nlohmann::json::array();
  for (const auto& s : c.slots) j["slots"].push_back({{"name", s.name}, {"mod4", s.mod4}});
  j["products"] = nlohmann::json::array();
  for (const auto& p : c.products)
    j["products"].push_back({{"slots", p.slots}, {"mod", p.modulus}, {"residue", p.residue}});
  j["symbols"] = nlohmann::json::array();
  for (const auto& s : c.symbols)
    j["symbols"].push_back({{"num", s.numerator}, {"den", s.denominator}, {"value", s.value}});
  j["bound"] = c.bound;
  j["limit"] = c.limit;
  return j;
}

int ExecPolicy::resolved_jobs() const {
  if (engine == Engine::serial) return 1;
  return jobs > 0 ? jobs : omp_get_max_threads();
}

namespace {

// Conditions are attached to the deepest slot they mention, so the DFS can
// prune as early as possible.
struct Plan {
  const SearchConstraint* constraint = nullptr;
  std::vector<std::vector<uint64_t>> pools;
  std::vector<std::vector<const ProductCondition*>> products_at;
  std::vector<std::vector<const SymbolCondition*>> symbols_at;
  std::map<std::string, int> slot_index;
  bool theorem_shaped = false;
  const std::atomic<bool>* cancel = nullptr;
};

Plan make_plan(const SearchConstraint& c) {
  c.validate();
  Plan plan;
  plan.constraint = &c;
  plan.theorem_shaped = c.theorem_shaped();
  const size_t n = c.slots.size();
  for (size_t i = 0; i < n; ++i) plan.slot_index[c.slots[i].name] = static_cast<int>(i);

  const auto primes = sieve_primes(c.bound);
  plan.pools.resize(n);
  for (size_t i = 0; i < n; ++i)
    for (uint64_t p : primes) {
      if (p == 2) continue;  // slots hold odd primes
      if (c.slots[i].mod4 != 0 && p % 4 != static_cast<uint64_t>(c.slots[i].mod4)) continue;
      plan.pools[i].push_back(p);
    }

  plan.products_at.resize(n);
  plan.symbols_at.resize(n);
  for (const auto& pc : c.products) {
    int level = 0;
    for (const auto& name : pc.slots) level = std::max(level, plan.slot_index.at(name));
    plan.products_at[static_cast<size_t>(level)].push_back(&pc);
  }
  for (const auto& sc : c.symbols) {
    int level = plan.slot_index.at(sc.denominator);
    for (const auto& name : sc.numerator) level = std::max(level, plan.slot_index.at(name));
    plan.symbols_at[static_cast<size_t>(level)].push_back(&sc);
  }
  return plan;
}

bool product_holds(const Plan& plan, const ProductCondition& pc, const std::vector<uint64_t>& v) {
  uint64_t acc = 1;
  for (const auto& name : pc.slots)
    acc = acc * (v[static_cast<size_t>(plan.slot_index.at(name))] % pc.modulus) % pc.modulus;
  return acc == pc.residue % pc.modulus;
}

int symbol_value(const Plan& plan, const SymbolCondition& sc, const std::vector<uint64_t>& v) {
  const uint64_t den = v[static_cast<size_t>(plan.slot_index.at(sc.denominator))];
  int value = 1;  // multiplicativity keeps the numerator product out of overflow range
  for (const auto& name : sc.numerator)
    value *= jacobi(static_cast<int64_t>(v[static_cast<size_t>(plan.slot_index.at(name))]), den);
  return value;
}

TupleRecord make_record(const Plan& plan, const std::vector<uint64_t>& values) {
  TupleRecord rec;
  rec.primes = values;
  // independent re-check of every condition on emission
  for (const auto& pc : plan.constraint->products)
    ensure(product_holds(plan, pc, values), "search: emitted tuple violates a product condition");
  for (const auto& sc : plan.constraint->symbols) {
    const int value = symbol_value(plan, sc, values);
    ensure(value == sc.value, "search: emitted tuple violates a symbol condition");
    rec.symbols.emplace_back(sc.describe(), value);
  }
  if (plan.theorem_shaped) {
    // Custom theorem-shaped files may lack the congruence hypotheses; leave
    // the pattern out for tuples that violate them.
    try {
      rec.pattern =
          SymbolPattern::from_primes(values[2], values[3], values[4], values[0], values[1]);
      rec.verdict = classify_theorem(*rec.pattern).case_id;
    } catch (const std::invalid_argument&) {
    }
  }
  return rec;
}

// Enumerates the subtree under a fixed first-slot prime; emission order is
// the lexicographic order of the remaining slots. cap = 0 means unlimited.
void descend(const Plan& plan, std::vector<uint64_t>& values, size_t level, uint64_t cap,
             std::vector<TupleRecord>& out) {
  if (cap != 0 && out.size() >= cap) return;
  if (plan.cancel != nullptr && plan.cancel->load(std::memory_order_relaxed)) return;
  const size_t n = plan.pools.size();
  for (uint64_t p : plan.pools[level]) {
    if (std::find(values.begin(), values.begin() + static_cast<long>(level), p) !=
        values.begin() + static_cast<long>(level))
      continue;
    values[level] = p;
    bool ok = true;
    for (const auto* pc : plan.products_at[level])
      if (!product_holds(plan, *pc, values)) {
        ok = false;
        break;
      }
    if (ok)
      for (const auto* sc : plan.symbols_at[level])
        if (symbol_value(plan, *sc, values) != sc->value) {
          ok = false;
          break;
        }
    if (!ok) continue;
    if (level + 1 == n)
      out.push_back(make_record(plan, values));
    else
      descend(plan, values, level + 1, cap, out);
    if (cap != 0 && out.size() >= cap) return;
  }
}

std::vector<TupleRecord> subtree(const Plan& plan, uint64_t first, uint64_t cap) {
  std::vector<uint64_t> values(plan.pools.size(), 0);
  std::vector<TupleRecord> out;
  values[0] = first;
  bool ok = true;
  for (const auto* pc : plan.products_at[0])
    if (!product_holds(plan, *pc, values)) ok = false;
  for (const auto* sc : plan.symbols_at[0])
    if (ok && symbol_value(plan, *sc, values) != sc->value) ok = false;
  if (!ok) return out;
  if (plan.pools.size() == 1) {
    out.push_back(make_record(plan, values));
    return out;
  }
  descend(plan, values, 1, cap, out);
  return out;
}

bool cancelled(const ExecPolicy& policy) {
  return policy.cancel != nullptr && policy.cancel->load(std::memory_order_relaxed);
}

}  // namespace

SearchResult enumerate_tuples(const SearchConstraint& constraint, const ExecPolicy& policy) {
  Plan plan = make_plan(constraint);
  plan.cancel = policy.cancel;
  const auto& pool0 = plan.pools[0];
  const uint64_t limit = constraint.limit;
  SearchResult result;

  if (policy.engine == Engine::serial) {
    for (uint64_t first : pool0) {
      if (cancelled(policy)) {
        result.truncated = true;
        return result;
      }
      const uint64_t cap = limit == 0 ? 0 : limit - result.tuples.size();
      auto part = subtree(plan, first, cap);
      std::move(part.begin(), part.end(), std::back_inserter(result.tuples));
      if (limit != 0 && result.tuples.size() >= limit) {
        result.truncated = true;
        return result;
      }
    }
    return result;
  }

  // OpenMP engine: first-slot primes are processed in ordered chunks; the
  // in-order merge keeps the stream byte-identical to the serial engine.
  const int jobs = policy.resolved_jobs();
  const size_t chunk = std::max<size_t>(static_cast<size_t>(jobs) * 4, 8);
  for (size_t start = 0; start < pool0.size(); start += chunk) {
    const size_t end = std::min(pool0.size(), start + chunk);
    std::vector<std::vector<TupleRecord>> parts(end - start);
    bool stop = false;
#pragma omp parallel for num_threads(jobs) schedule(dynamic)
    for (size_t i = start; i < end; ++i) {
      if (cancelled(policy)) continue;
      parts[i - start] = subtree(plan, pool0[i], limit);
    }
    if (cancelled(policy)) {
      result.truncated = true;
      return result;
    }
    for (auto& part : parts) {
      const uint64_t cap = limit == 0 ? part.size() : limit - result.tuples.size();
      const size_t take = std::min<size_t>(part.size(), cap);
      std::move(part.begin(), part.begin() + static_cast<long>(take),
                std::back_inserter(result.tuples));
      if (limit != 0 && result.tuples.size() >= limit) {
        stop = true;
        break;
      }
    }
    if (stop) {
      result.truncated = true;
      return result;
    }
  }
  return result;
}

SearchConstraint case_preset(CaseId id, uint64_t bound, uint64_t limit) {
  SearchConstraint c;
  c.slots = {{"q1", 3}, {"q2", 3}, {"p1", 3}, {"p2", 3}, {"p3", 1}};
  c.products = {{{"q1", "q2"}, 8, 1}, {{"p1", "p2", "p3"}, 8, 1}};
  c.bound = bound;
  c.limit = limit;
  auto sym = [](std::vector<std::string> num, std::string den, int value) {
    return SymbolCondition{std::move(num), std::move(den), value};
  };
  switch (id) {
    case CaseId::case1:
      c.symbols = {sym({"p1"}, "p2", 1),  sym({"p1"}, "p3", 1),  sym({"p2"}, "p3", -1),
                   sym({"p3"}, "q1", -1), sym({"p3"}, "q2", -1), sym({"p1"}, "q1", -1),
                   sym({"p1"}, "q2", -1), sym({"q1", "q2"}, "p2", -1)};
      break;
    case CaseId::case2:
      c.symbols = {sym({"p1"}, "p2", 1),  sym({"p1"}, "p3", -1), sym({"p2"}, "p3", 1),
                   sym({"p3"}, "q1", -1), sym({"p3"}, "q2", -1), sym({"p1"}, "q1", 1),
                   sym({"p1"}, "q2", 1),  sym({"q1", "q2"}, "p2", -1)};
      break;
    case CaseId::case3:
      c.symbols = {sym({"p1"}, "p3", -1),       sym({"p2"}, "p3", -1),
                   sym({"p3"}, "q1", 1),        sym({"p3"}, "q2", -1),
                   sym({"p1", "p2"}, "q1", -1), sym({"p1", "p2"}, "q2", -1),
                   sym({"q1", "q2"}, "p1", 1)};
      break;
    case CaseId::case4:
      c.symbols = {sym({"p1"}, "p2", -1),      sym({"p1"}, "p3", 1),
                   sym({"p2"}, "p3", -1),      sym({"p3"}, "q1", -1),
                   sym({"p3"}, "q2", -1),      sym({"p1", "p2"}, "q1", 1),
                   sym({"p1", "p2"}, "q2", 1), sym({"q1", "q2"}, "p1", -1)};
      break;
    case CaseId::case5:
      c.symbols = {sym({"p1"}, "p2", -1), sym({"p1"}, "p3", -1), sym({"p2"}, "p3", 1),
                   sym({"p3"}, "q1", -1), sym({"p3"}, "q2", -1), sym({"p1"}, "q1", -1),
                   sym({"p1"}, "q2", -1), sym({"q1", "q2"}, "p2", -1)};
      break;
    case CaseId::moreover:
      c.symbols = {sym({"p1"}, "p3", 1), sym({"p2"}, "p3", 1)};
      break;
    default:
      throw std::invalid_argument("case_preset: no preset for this id");
  }
  return c;
}

std::vector<CaseId> preset_ids() {
  return {CaseId::case1, CaseId::case2, CaseId::case3, CaseId::case4, CaseId::case5,
          CaseId::moreover};
}

}  // namespace polya
