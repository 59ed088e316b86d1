#include "polya/report.hpp"

#include <sstream>

namespace polya {

nlohmann::json OutputRecord::to_json() const {
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["diagnostics"] = diagnostics;
  return j;
}

nlohmann::json json_mpz(const mpz_class& v) { return v.get_str(); }

nlohmann::json json_class(const SquarefreeClass& cls) {
  nlohmann::json primes = nlohmann::json::array();
  for (const auto& p : cls.primes()) primes.push_back(json_mpz(p));
  return {{"negative", cls.negative()}, {"primes", primes}, {"repr", cls.str()}};
}

nlohmann::json json_unit(const FundamentalUnit& unit) {
  return {{"x", json_mpz(unit.x)},
          {"y", json_mpz(unit.y)},
          {"halved", unit.halved},
          {"norm", unit.norm},
          {"period_length", unit.period_length}};
}

nlohmann::json json_quadratic_crosscheck(const QuadraticCrossCheck& cc) {
  nlohmann::json ramified = nlohmann::json::array();
  for (const auto& p : cc.field.ramified_primes) ramified.push_back(json_mpz(p));
  return {{"d", json_mpz(cc.field.d)},
          {"discriminant", json_mpz(cc.field.discriminant)},
          {"ramified_primes", ramified},
          {"s", cc.field.s},
          {"unit", json_unit(cc.unit)},
          {"a_class", json_class(cc.a)},
          {"h1_rank", cc.rank},
          {"hilbert_order", json_mpz(cc.hilbert_order)},
          {"sequence_order", json_mpz(cc.sequence_order)},
          {"orders_agree", cc.agree}};
}

nlohmann::json json_polya(const PolyaComputation& comp) {
  nlohmann::json ramified = nlohmann::json::array();
  for (const auto& rp : comp.field.ramified)
    ramified.push_back({{"p", json_mpz(rp.p)}, {"e", rp.e}});
  nlohmann::json subfields = nlohmann::json::array();
  for (int i = 0; i < 3; ++i) {
    const auto& sd = comp.subfields[static_cast<size_t>(i)];
    nlohmann::json sub = {{"d", json_mpz(sd.d)},
                          {"unit", json_unit(sd.unit)},
                          {"delta", json_class(sd.delta)},
                          {"a", json_class(sd.a)}};
    if (comp.norm_two)
      sub["norm_two"] = to_string((*comp.norm_two)[static_cast<size_t>(i)]);
    subfields.push_back(std::move(sub));
  }
  nlohmann::json generators = nlohmann::json::array();
  for (const auto& g : comp.result.generators)
    generators.push_back({{"label", g.label}, {"class", json_class(g.cls)}});

  nlohmann::json j = {{"d1", json_mpz(comp.field.d1)},
                      {"d2", json_mpz(comp.field.d2)},
                      {"d3", json_mpz(comp.field.d3)},
                      {"two_status", to_string(comp.field.two_status)},
                      {"s", comp.field.s()},
                      {"ramified", ramified},
                      {"subfields", subfields},
                      {"generators", generators},
                      {"h1_rank", comp.result.h1_rank},
                      {"h1_index_two", comp.result.h1_index_two},
                      {"order", json_mpz(comp.result.order())},
                      {"order_log2", comp.result.order_log2}};
  if (comp.result.rank)
    j["rank"] = *comp.result.rank;
  else
    j["rank"] = nullptr;
  return j;
}

nlohmann::json json_tuple(const TupleRecord& record) {
  nlohmann::json symbols = nlohmann::json::array();
  for (const auto& [name, value] : record.symbols)
    symbols.push_back({{"symbol", name}, {"value", value}});
  nlohmann::json j = {{"primes", record.primes}, {"symbols", symbols}};
  j["verdict"] = record.pattern ? to_string(record.verdict) : to_string(CaseId::none);
  return j;
}

nlohmann::json json_verification(const VerificationReport& report) {
  nlohmann::json predicted_a1 = nlohmann::json::array();
  for (const auto& c : report.a1_predicted) predicted_a1.push_back(c.str());
  nlohmann::json predicted_a2 = nlohmann::json::array();
  for (const auto& c : report.a2_predicted) predicted_a2.push_back(c.str());
  nlohmann::json matches = nlohmann::json::array();
  for (CaseId id : report.all_matches) matches.push_back(to_string(id));
  return {{"case", to_string(report.prediction.case_id)},
          {"all_matches", matches},
          {"allowed_ranks", report.prediction.allowed_ranks},
          {"a1_predicted", predicted_a1},
          {"a2_predicted", predicted_a2},
          {"a1_ok", report.a1_ok},
          {"a2_ok", report.a2_ok},
          {"rank_ok", report.rank_ok},
          {"passed", report.passed},
          {"polya", json_polya(report.computation)}};
}

namespace {

void render_text_value(std::ostream& os, const nlohmann::json& j, int indent) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !value.empty() &&
                                (value.front().is_object() || value.front().is_array()))) {
        os << pad << key << ":\n";
        render_text_value(os, value, indent + 1);
      } else {
        os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    int index = 0;
    for (const auto& item : j) {
      os << pad << "- [" << index++ << "]\n";
      render_text_value(os, item, indent + 1);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string render_csv(const CommandOutput& output) {
  std::ostringstream os;
  auto emit_row = [&os](const std::vector<std::string>& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      ensure(row[i].find(',') == std::string::npos && row[i].find('"') == std::string::npos,
             "csv: field needs quoting");
      os << (i > 0 ? "," : "") << row[i];
    }
    os << "\n";
  };
  emit_row(output.csv_header);
  for (const auto& row : output.csv_rows) emit_row(row);
  return os.str();
}

}  // namespace

std::string render(const CommandOutput& output, OutputFormat format) {
  switch (format) {
    case OutputFormat::json:
      return output.record.to_json().dump(2) + "\n";
    case OutputFormat::csv:
      return render_csv(output);
    case OutputFormat::text: {
      std::ostringstream os;
      render_text_value(os, output.record.to_json(), 0);
      return os.str();
    }
  }
  return {};
}

}  // namespace polya
