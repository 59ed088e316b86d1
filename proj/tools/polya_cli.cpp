#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "polya/batch.hpp"
#include "polya/report.hpp"

using namespace polya;

namespace {

// Exit codes are a stable contract: 0 success, 1 verification failure,
// 2 input error, 3 factoring failure, 4 structure withheld on demand,
// 5 internal error, 130 interrupted.
constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;
constexpr int kFactoringFailure = 3;
constexpr int kStructureWithheld = 4;
constexpr int kInternalError = 5;
constexpr int kInterrupted = 130;

std::atomic<bool> g_cancel{false};

void on_sigint(int) { g_cancel.store(true); }

struct Settings {
  std::string format = "text";
  int jobs = 0;
  std::vector<std::string> factor_specs;

  OutputFormat output_format() const {
    if (format == "json") return OutputFormat::json;
    if (format == "csv") return OutputFormat::csv;
    return OutputFormat::text;
  }
  ExecPolicy policy() const { return {Engine::openmp, jobs, &g_cancel}; }
  CfOptions cf_options() const {
    CfOptions o;
    o.cancel = &g_cancel;
    return o;
  }
};

void add_common_options(CLI::App* cmd, Settings& settings) {
  cmd->add_option("--format", settings.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--jobs", settings.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--factors", settings.factor_specs,
                  "Factor hint, e.g. --factors 1002001=7*11*13 (repeatable)");
}

mpz_class parse_mpz(const std::string& text) {
  mpz_class v;
  if (text.empty() || mpz_set_str(v.get_mpz_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  return v;
}

std::map<mpz_class, FactoredInteger> parse_factor_hints(const std::vector<std::string>& specs) {
  std::map<mpz_class, FactoredInteger> hints;
  for (const auto& spec : specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--factors expects d=p1*p2*...: '" + spec + "'");
    const mpz_class d = parse_mpz(spec.substr(0, eq));
    FactoredInteger f;
    f.sign = d < 0 ? -1 : 1;
    std::map<mpz_class, unsigned> exps;
    std::stringstream rest(spec.substr(eq + 1));
    std::string part;
    while (std::getline(rest, part, '*')) {
      const mpz_class p = parse_mpz(part);
      if (p < 2 || !is_prime(p))
        throw std::invalid_argument("--factors entry is not prime: '" + part + "'");
      ++exps[p];
    }
    for (const auto& [p, e] : exps) f.factors.emplace_back(p, e);
    if (f.value() != d)
      throw std::invalid_argument("--factors product does not equal " + d.get_str());
    hints.emplace(d, std::move(f));
  }
  return hints;
}

const FactoredInteger* hint_for(const std::map<mpz_class, FactoredInteger>& hints,
                                const mpz_class& d) {
  const auto it = hints.find(d);
  return it == hints.end() ? nullptr : &it->second;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ";") {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i > 0 ? sep : "") + parts[i];
  return out;
}

std::string join_primes(const std::vector<uint64_t>& primes) {
  std::vector<std::string> parts;
  for (uint64_t p : primes) parts.push_back(std::to_string(p));
  return join(parts);
}

void print_output(const CommandOutput& output, const Settings& settings) {
  std::cout << render(output, settings.output_format());
}

int run_quadratic(const std::string& d_arg, const Settings& settings) {
  const mpz_class d = parse_mpz(d_arg);
  const auto hints = parse_factor_hints(settings.factor_specs);
  const auto cc = quadratic_crosscheck(d, hint_for(hints, d), settings.cf_options());

  CommandOutput out;
  out.record.command = "quadratic";
  out.record.inputs = {{"d", d_arg}};
  out.record.results = json_quadratic_crosscheck(cc);
  out.record.diagnostics["warnings"] = nlohmann::json::array();

  std::vector<std::string> ramified;
  for (const auto& p : cc.field.ramified_primes) ramified.push_back(p.get_str());
  out.csv_header = {"d",      "discriminant", "s",       "ramified",      "unit_x",
                    "unit_y", "halved",       "norm",    "a_class",       "h1_rank",
                    "hilbert_order", "sequence_order", "orders_agree"};
  out.csv_rows = {{cc.field.d.get_str(), cc.field.discriminant.get_str(),
                   std::to_string(cc.field.s), join(ramified), cc.unit.x.get_str(),
                   cc.unit.y.get_str(), cc.unit.halved ? "true" : "false",
                   std::to_string(cc.unit.norm), cc.a.str(), std::to_string(cc.rank),
                   cc.hilbert_order.get_str(), cc.sequence_order.get_str(),
                   cc.agree ? "true" : "false"}};
  print_output(out, settings);
  return cc.agree ? kOk : kVerificationFailure;
}

int run_biquadratic(const std::string& d1_arg, const std::string& d2_arg, bool require_rank,
                    const Settings& settings) {
  const mpz_class d1 = parse_mpz(d1_arg), d2 = parse_mpz(d2_arg);
  const auto hints = parse_factor_hints(settings.factor_specs);
  const auto field = biquadratic_data(d1, d2, hint_for(hints, d1), hint_for(hints, d2));
  const auto comp = polya_compute(field, settings.cf_options());

  CommandOutput out;
  out.record.command = "biquadratic";
  out.record.inputs = {{"d1", d1_arg}, {"d2", d2_arg}, {"require_rank", require_rank}};
  out.record.results = json_polya(comp);
  out.record.diagnostics["warnings"] = nlohmann::json::array();
  const bool withheld = !comp.result.rank.has_value();
  if (withheld)
    out.record.diagnostics["warnings"].push_back(
        "group structure withheld: 2 is totally ramified, only |Po(K)| is reported");

  out.csv_header = {"d1", "d2", "d3", "two_status", "s", "h1_rank", "h1_index_two", "order",
                    "rank"};
  out.csv_rows = {{field.d1.get_str(), field.d2.get_str(), field.d3.get_str(),
                   to_string(field.two_status), std::to_string(field.s()),
                   std::to_string(comp.result.h1_rank), comp.result.h1_index_two ? "true" : "false",
                   comp.result.order().get_str(),
                   comp.result.rank ? std::to_string(*comp.result.rank) : ""}};
  print_output(out, settings);
  if (require_rank && withheld) return kStructureWithheld;
  return kOk;
}

int run_lemma_a1(uint64_t q1, uint64_t q2, const Settings& settings) {
  const auto predicted = predict_a1(q1, q2);
  const auto unit = fundamental_unit(q1 * q2, settings.cf_options());
  const auto actual = a_class(q1 * q2, FactoredInteger::from_primes({q1, q2}),
                              settings.cf_options());
  const bool pass = std::find(predicted.begin(), predicted.end(), actual) != predicted.end();

  CommandOutput out;
  out.record.command = "lemma-a1";
  out.record.inputs = {{"q1", q1}, {"q2", q2}};
  nlohmann::json pred = nlohmann::json::array();
  for (const auto& c : predicted) pred.push_back(c.str());
  out.record.results = {{"predicted", pred},
                        {"actual", json_class(actual)},
                        {"unit", json_unit(unit)},
                        {"pass", pass}};
  out.csv_header = {"q1", "q2", "unit_x", "unit_y", "norm", "a_class", "predicted", "pass"};
  out.csv_rows = {{std::to_string(q1), std::to_string(q2), unit.x.get_str(), unit.y.get_str(),
                   std::to_string(unit.norm), actual.str(),
                   join({predicted[0].str(), predicted[1].str()}),
                   pass ? "true" : "false"}};
  print_output(out, settings);
  return pass ? kOk : kVerificationFailure;
}

int run_lemma_a1_corpus(uint64_t bound, const Settings& settings) {
  const auto rows = a1_corpus(bound, settings.policy());
  uint64_t failures = 0;
  nlohmann::json jrows = nlohmann::json::array();
  CommandOutput out;
  out.csv_header = {"q1", "q2", "unit_x", "unit_y", "norm", "a_class", "pass"};
  for (const auto& row : rows) {
    if (!row.pass) ++failures;
    jrows.push_back({{"q1", row.q1},
                     {"q2", row.q2},
                     {"unit", json_unit(row.unit)},
                     {"a_class", json_class(row.actual)},
                     {"pass", row.pass}});
    out.csv_rows.push_back({std::to_string(row.q1), std::to_string(row.q2), row.unit.x.get_str(),
                            row.unit.y.get_str(), std::to_string(row.unit.norm),
                            row.actual.str(), row.pass ? "true" : "false"});
  }
  out.record.command = "lemma-a1";
  out.record.inputs = {{"seed_corpus", true}, {"bound", bound}};
  out.record.results = {{"count", rows.size()}, {"failures", failures}, {"pairs", jrows}};
  out.record.diagnostics["truncated"] = g_cancel.load();
  print_output(out, settings);
  if (g_cancel.load()) return kInterrupted;
  return failures == 0 ? kOk : kVerificationFailure;
}

int run_lemma_a2(uint64_t p1, uint64_t p2, uint64_t p3, const Settings& settings) {
  const auto predicted = predict_a2(p1, p2, p3);
  const auto unit = fundamental_unit(p1 * p2 * p3, settings.cf_options());
  const auto actual = a_class(p1 * p2 * p3, FactoredInteger::from_primes({p1, p2, p3}),
                              settings.cf_options());
  const bool pass = std::find(predicted.begin(), predicted.end(), actual) != predicted.end();

  CommandOutput out;
  out.record.command = "lemma-a2";
  out.record.inputs = {{"p1", p1}, {"p2", p2}, {"p3", p3}};
  nlohmann::json pred = nlohmann::json::array();
  for (const auto& c : predicted) pred.push_back(c.str());
  std::vector<std::string> pred_strs;
  for (const auto& c : predicted) pred_strs.push_back(c.str());
  const int s12 = jacobi(static_cast<int64_t>(p1), p2);
  const int s13 = jacobi(static_cast<int64_t>(p1), p3);
  const int s23 = jacobi(static_cast<int64_t>(p2), p3);
  out.record.results = {{"signs", {{"(p1/p2)", s12}, {"(p1/p3)", s13}, {"(p2/p3)", s23}}},
                        {"predicted", pred},
                        {"actual", json_class(actual)},
                        {"unit", json_unit(unit)},
                        {"pass", pass}};
  out.csv_header = {"p1", "p2", "p3", "s12", "s13", "s23", "a_class", "predicted", "pass"};
  out.csv_rows = {{std::to_string(p1), std::to_string(p2), std::to_string(p3),
                   std::to_string(s12), std::to_string(s13), std::to_string(s23), actual.str(),
                   join(pred_strs), pass ? "true" : "false"}};
  print_output(out, settings);
  return pass ? kOk : kVerificationFailure;
}

int run_lemma_a2_corpus(uint64_t bound, const Settings& settings) {
  const auto rows = a2_corpus(bound, settings.policy());
  uint64_t failures = 0;
  nlohmann::json jrows = nlohmann::json::array();
  CommandOutput out;
  out.csv_header = {"p1", "p2", "p3", "s12", "s13", "s23", "a_class", "pass"};
  for (const auto& row : rows) {
    if (!row.pass) ++failures;
    jrows.push_back({{"p1", row.p1},
                     {"p2", row.p2},
                     {"p3", row.p3},
                     {"s12", row.s12},
                     {"s13", row.s13},
                     {"s23", row.s23},
                     {"a_class", json_class(row.actual)},
                     {"pass", row.pass}});
    out.csv_rows.push_back({std::to_string(row.p1), std::to_string(row.p2),
                            std::to_string(row.p3), std::to_string(row.s12),
                            std::to_string(row.s13), std::to_string(row.s23), row.actual.str(),
                            row.pass ? "true" : "false"});
  }
  out.record.command = "lemma-a2";
  out.record.inputs = {{"seed_corpus", true}, {"bound", bound}};
  out.record.results = {{"count", rows.size()}, {"failures", failures}, {"triples", jrows}};
  out.record.diagnostics["truncated"] = g_cancel.load();
  print_output(out, settings);
  if (g_cancel.load()) return kInterrupted;
  return failures == 0 ? kOk : kVerificationFailure;
}

int run_verify_theorem(uint64_t bound, const std::string& case_name, uint64_t limit,
                       const Settings& settings) {
  std::optional<CaseId> filter;
  if (!case_name.empty()) {
    filter = case_from_string(case_name);
    if (!filter || *filter == CaseId::none)
      throw std::invalid_argument("unknown case: " + case_name);
  }
  const auto run = verify_theorem(bound, filter, limit, settings.policy());

  CommandOutput out;
  out.record.command = "verify-theorem";
  out.record.inputs = {{"bound", bound},
                       {"limit", limit},
                       {"case", case_name.empty() ? nlohmann::json() : nlohmann::json(case_name)}};
  nlohmann::json jcases = nlohmann::json::array();
  uint64_t total_failures = 0;
  out.csv_header = {"case",     "matched",  "truncated", "verified",
                    "failures", "witness",  "witness_rank"};
  for (const auto& campaign : run.cases) {
    total_failures += campaign.failures;
    nlohmann::json jcase = {{"case", to_string(campaign.preset)},
                            {"matched", campaign.matched},
                            {"truncated", campaign.truncated},
                            {"verified", campaign.verified},
                            {"failures", campaign.failures}};
    std::string witness_rank;
    if (campaign.smallest_witness) {
      jcase["smallest_witness"] = json_tuple(*campaign.smallest_witness);
      if (!campaign.tuples.empty()) {
        jcase["smallest_witness"]["verification"] = json_verification(campaign.tuples[0].report);
        const auto& rank = campaign.tuples[0].report.computation.result.rank;
        if (rank) witness_rank = std::to_string(*rank);
      }
    }
    nlohmann::json jtuples = nlohmann::json::array();
    for (const auto& vt : campaign.tuples) {
      nlohmann::json jt = {{"primes", vt.record.primes},
                           {"case", to_string(vt.report.prediction.case_id)},
                           {"order", json_mpz(vt.report.computation.result.order())},
                           {"passed", vt.report.passed}};
      const auto& rank = vt.report.computation.result.rank;
      jt["rank"] = rank ? nlohmann::json(*rank) : nlohmann::json();
      jtuples.push_back(std::move(jt));
      if (!vt.report.passed) {
        if (!jcase.contains("failed")) jcase["failed"] = nlohmann::json::array();
        jcase["failed"].push_back(json_verification(vt.report));
      }
    }
    jcase["tuples"] = std::move(jtuples);
    jcases.push_back(std::move(jcase));
    out.csv_rows.push_back(
        {to_string(campaign.preset), std::to_string(campaign.matched),
         campaign.truncated ? "true" : "false", std::to_string(campaign.verified),
         std::to_string(campaign.failures),
         campaign.smallest_witness ? join_primes(campaign.smallest_witness->primes) : "",
         witness_rank});
  }
  out.record.results = {{"bound", bound},
                        {"limit", limit},
                        {"cases", jcases},
                        {"all_passed", run.all_passed},
                        {"failures", total_failures}};
  out.record.diagnostics["truncated"] = run.cancelled;
  print_output(out, settings);
  if (run.cancelled) return kInterrupted;
  return total_failures == 0 ? kOk : kVerificationFailure;
}

int run_search(const std::string& preset_name, const std::string& file, uint64_t bound,
               uint64_t limit, bool verify, bool bound_given, bool limit_given,
               const Settings& settings) {
  SearchConstraint constraint;
  if (!preset_name.empty()) {
    const auto id = case_from_string(preset_name);
    if (!id || *id == CaseId::none)
      throw std::invalid_argument("unknown preset: " + preset_name);
    constraint = case_preset(*id, bound, limit);
  } else {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open constraint file: " + file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("constraint file is not valid JSON: ") + e.what());
    }
    constraint = constraint_from_json(j);
    if (bound_given) constraint.bound = bound;
    if (limit_given) constraint.limit = limit;
  }
  constraint.validate();
  const auto result = enumerate_tuples(constraint, settings.policy());

  std::vector<VerificationReport> reports;
  if (verify) {
    reports.resize(result.tuples.size());
    const auto cf = settings.cf_options();
    for (size_t i = 0; i < result.tuples.size(); ++i)
      if (result.tuples[i].pattern) reports[i] = verify_prediction(*result.tuples[i].pattern, cf);
  }

  CommandOutput out;
  out.record.command = "search";
  out.record.inputs = {{"preset", preset_name},
                       {"file", file},
                       {"constraint", constraint_to_json(constraint)},
                       {"verify", verify}};
  nlohmann::json jtuples = nlohmann::json::array();
  for (size_t i = 0; i < result.tuples.size(); ++i) {
    nlohmann::json jt = json_tuple(result.tuples[i]);
    if (verify && result.tuples[i].pattern) jt["verification"] = json_verification(reports[i]);
    jtuples.push_back(std::move(jt));
  }
  out.record.results = {{"count", result.tuples.size()},
                        {"truncated", result.truncated},
                        {"tuples", jtuples}};
  out.record.diagnostics["truncated"] = result.truncated && g_cancel.load();

  out.csv_header.clear();
  for (const auto& slot : constraint.slots) out.csv_header.push_back(slot.name);
  for (const auto& sc : constraint.symbols) out.csv_header.push_back(sc.describe());
  out.csv_header.push_back("verdict");
  if (verify) {
    out.csv_header.push_back("order");
    out.csv_header.push_back("rank");
    out.csv_header.push_back("passed");
  }
  for (size_t i = 0; i < result.tuples.size(); ++i) {
    const auto& t = result.tuples[i];
    std::vector<std::string> row;
    for (uint64_t p : t.primes) row.push_back(std::to_string(p));
    for (const auto& [name, value] : t.symbols) row.push_back(std::to_string(value));
    row.push_back(t.pattern ? to_string(t.verdict) : "none");
    if (verify) {
      if (t.pattern) {
        const auto& r = reports[i].computation.result;
        row.push_back(r.order().get_str());
        row.push_back(r.rank ? std::to_string(*r.rank) : "");
        row.push_back(reports[i].passed ? "true" : "false");
      } else {
        row.insert(row.end(), {"", "", ""});
      }
    }
    out.csv_rows.push_back(std::move(row));
  }
  print_output(out, settings);
  return g_cancel.load() ? kInterrupted : kOk;
}

uint64_t parse_prime_slot(const std::string& text) {
  const mpz_class v = parse_mpz(text);
  if (v < 3 || !mpz_fits_ulong_p(v.get_mpz_t()))
    throw std::invalid_argument("expected an odd prime that fits in 64 bits: " + text);
  return mpz_get_ui(v.get_mpz_t());
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_sigint);
  CLI::App app{"Polya groups of real quadratic and totally real biquadratic fields"};
  app.require_subcommand(1);
  Settings settings;

  auto* quad = app.add_subcommand("quadratic", "Fundamental unit, a-class and |Po| of Q(sqrt d)");
  std::string d_arg;
  quad->add_option("d", d_arg, "squarefree integer > 1")->required();
  add_common_options(quad, settings);

  auto* biquad =
      app.add_subcommand("biquadratic", "Po(K) for K = Q(sqrt d1, sqrt d2), totally real");
  std::string d1_arg, d2_arg;
  bool require_rank = false;
  biquad->add_option("d1", d1_arg)->required();
  biquad->add_option("d2", d2_arg)->required();
  biquad->add_flag("--require-rank", require_rank,
                   "Fail (exit 4) when only the order can be reported");
  add_common_options(biquad, settings);

  auto* la1 = app.add_subcommand("lemma-a1", "Check a1 = N(u1+1) against {[q1],[q2]}");
  std::string q1_arg, q2_arg;
  bool a1_seed = false;
  uint64_t a1_bound = 20000;
  la1->add_option("q1", q1_arg);
  la1->add_option("q2", q2_arg);
  la1->add_flag("--seed-corpus", a1_seed, "Dump every qualifying pair with q1*q2 <= bound");
  la1->add_option("--bound", a1_bound, "Product bound for --seed-corpus");
  add_common_options(la1, settings);

  auto* la2 = app.add_subcommand("lemma-a2", "Check a2 = N(u2+1) against the flowchart leaf");
  std::string p1_arg, p2_arg, p3_arg;
  bool a2_seed = false;
  uint64_t a2_bound = 200000;
  la2->add_option("p1", p1_arg);
  la2->add_option("p2", p2_arg);
  la2->add_option("p3", p3_arg);
  la2->add_flag("--seed-corpus", a2_seed, "Dump every qualifying triple with p1*p2*p3 <= bound");
  la2->add_option("--bound", a2_bound, "Product bound for --seed-corpus");
  add_common_options(la2, settings);

  auto* vt = app.add_subcommand("verify-theorem",
                                "Search case presets and verify Po(K) on every match");
  uint64_t vt_bound = 500, vt_limit = 25;
  std::string vt_case;
  vt->add_option("--bound", vt_bound, "Prime ceiling")->check(CLI::PositiveNumber);
  vt->add_option("--limit", vt_limit, "Tuples verified per case (0 = all)");
  vt->add_option("--case", vt_case, "Restrict to one case (case1..case5, moreover)");
  add_common_options(vt, settings);

  auto* search = app.add_subcommand("search", "Enumerate prime tuples under a constraint");
  std::string preset_name, file_name;
  uint64_t s_bound = 0, s_limit = 0;
  bool s_verify = false;
  auto* preset_opt = search->add_option("--preset", preset_name, "case1..case5 or moreover");
  auto* file_opt = search->add_option("--file", file_name, "Constraint JSON file");
  auto* bound_opt = search->add_option("--bound", s_bound, "Prime ceiling");
  auto* limit_opt = search->add_option("--limit", s_limit, "Maximum tuples to emit (0 = all)");
  search->add_flag("--verify", s_verify, "Run the full Po pipeline on each tuple");
  preset_opt->excludes(file_opt);
  add_common_options(search, settings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (quad->parsed()) return run_quadratic(d_arg, settings);
    if (biquad->parsed()) return run_biquadratic(d1_arg, d2_arg, require_rank, settings);
    if (la1->parsed()) {
      if (a1_seed) return run_lemma_a1_corpus(a1_bound, settings);
      if (q1_arg.empty() || q2_arg.empty())
        throw std::invalid_argument("lemma-a1 needs q1 q2 (or --seed-corpus)");
      return run_lemma_a1(parse_prime_slot(q1_arg), parse_prime_slot(q2_arg), settings);
    }
    if (la2->parsed()) {
      if (a2_seed) return run_lemma_a2_corpus(a2_bound, settings);
      if (p1_arg.empty() || p2_arg.empty() || p3_arg.empty())
        throw std::invalid_argument("lemma-a2 needs p1 p2 p3 (or --seed-corpus)");
      return run_lemma_a2(parse_prime_slot(p1_arg), parse_prime_slot(p2_arg),
                          parse_prime_slot(p3_arg), settings);
    }
    if (vt->parsed()) return run_verify_theorem(vt_bound, vt_case, vt_limit, settings);
    if (search->parsed()) {
      if (preset_name.empty() == file_name.empty())
        throw std::invalid_argument("search needs exactly one of --preset / --file");
      if (!preset_name.empty() && !*bound_opt)
        throw std::invalid_argument("search --preset needs --bound");
      return run_search(preset_name, file_name, s_bound, s_limit, s_verify,
                        static_cast<bool>(*bound_opt), static_cast<bool>(*limit_opt), settings);
    }
    throw std::invalid_argument("no subcommand");
  } catch (const UnfactoredResidue& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFactoringFailure;
  } catch (const Cancelled&) {
    std::cerr << "interrupted\n";
    return kInterrupted;
  } catch (const NotSquarefree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
