#pragma once

// Configuration documents, report emission and the eqbif command-line driver.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eqbif/bifurcation.hpp"
#include "eqbif/morse_degree.hpp"
#include "eqbif/serialization.hpp"
#include "eqbif/system_model.hpp"

namespace eqbif {

enum class OutputFormat { Table, Structured };

/// One document drives every subcommand:
///   {"system": {...}, "window": [lo, hi], "output_format": "table"|"structured",
///    "tolerances": {"root": r, "merge": m}, "spectrum_bound": x, "lambda": l,
///    "cache": path, "indices": [...], "orbits": [...], "class_table": {...}}
/// Every field is optional; command-line flags override document fields.
struct AnalysisConfig {
  std::optional<SystemSpec> system;
  std::optional<Interval> window;
  OutputFormat output_format = OutputFormat::Table;
  Tolerances tolerances;
  std::optional<double> spectrum_bound;
  std::optional<double> lambda;
  std::optional<std::string> cache;
  std::optional<std::vector<EulerSO2>> indices;
  std::optional<std::vector<OrbitDatum>> orbits;
  std::optional<ClassTable> class_table;
};

/// Parse a configuration document. The system is parsed with the document's
/// own tolerances, so flag overrides of tolerances must be applied by
/// reparsing (see run()).
AnalysisConfig parse_config(const json& doc, const std::optional<Tolerances>& tol_override = {});

/// {"schema_version": 1, "command": c, "result": r}
json structured_report(const std::string& command, json result);

json verdicts_to_json(const std::vector<BifurcationVerdict>& verdicts);
std::vector<BifurcationVerdict> verdicts_from_json(const json& j);

std::string spectrum_table(const Spectrum& spectrum);
std::string lambda_table(const Interval& window, const std::vector<double>& members);
std::string verdict_table(const std::vector<BifurcationVerdict>& verdicts);

/// The eqbif command line. Returns the process exit status:
/// 0 success, 1 validation error, 2 computational error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqbif
