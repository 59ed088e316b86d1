#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "polya/batch.hpp"
#include "polya/classifier.hpp"
#include "polya/cohomology.hpp"
#include "polya/search.hpp"

namespace polya {

enum class OutputFormat { text, json, csv };

/// Versioned machine-readable result envelope. Values that can exceed 64
/// bits (d values, unit coordinates, orders) are emitted as decimal strings;
/// counters, ranks and tuple primes stay native.
struct OutputRecord {
  int schema_version = 1;
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  nlohmann::json diagnostics = nlohmann::json::object();

  nlohmann::json to_json() const;
};

struct CommandOutput {
  OutputRecord record;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

std::string render(const CommandOutput& output, OutputFormat format);

// JSON builders for the domain types (big values as decimal strings).
nlohmann::json json_mpz(const mpz_class& v);
nlohmann::json json_class(const SquarefreeClass& cls);
nlohmann::json json_unit(const FundamentalUnit& unit);
nlohmann::json json_quadratic_crosscheck(const QuadraticCrossCheck& cc);
nlohmann::json json_polya(const PolyaComputation& comp);
nlohmann::json json_tuple(const TupleRecord& record);
nlohmann::json json_verification(const VerificationReport& report);

}  // namespace polya
