#pragma once

// JSON forms of the library types. Malformed documents raise SchemaError
// from the document-level entry points; the ADL hooks below may also leak
// nlohmann exceptions, which those entry points translate.

#include <string>
#include <vector>

#include "eqbif/bifurcation.hpp"
#include "eqbif/errors.hpp"
#include "eqbif/euler_so2.hpp"
#include "eqbif/morse_degree.hpp"
#include "eqbif/spectral.hpp"
#include "eqbif/system_model.hpp"
#include "json.hpp"

namespace eqbif {

using json = nlohmann::json;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);

void to_json(json& j, const EulerSO2& v);
void from_json(const json& j, EulerSO2& v);

void to_json(json& j, const SO2Rep& v);
void from_json(const json& j, SO2Rep& v);

/// {"trivial": t, "irreps": {"l": m}}; "rot" is accepted for "irreps".
void to_json(json& j, const RepDescriptor& v);
void from_json(const json& j, RepDescriptor& v);

void to_json(json& j, const SpectrumEntry& v);
void from_json(const json& j, SpectrumEntry& v);

void to_json(json& j, const KernelReps& v);
void from_json(const json& j, KernelReps& v);

void to_json(json& j, const BifurcationVerdict& v);
void from_json(const json& j, BifurcationVerdict& v);

void to_json(json& j, const UnboundedReport& v);

void to_json(json& j, const OrbitDatum& v);
void from_json(const json& j, OrbitDatum& v);

json spectrum_to_json(const Spectrum& s);

/// SystemSpec document:
///   {"p1", "p2", "b1": [{"value", "mult"}], "b2", "mu_b0",
///    "domain": {"type": "disk"} | {"type": "ball"|"custom", "dim"?, "entries", ...},
///    "a9"}
/// Integer b values are kept exact. Validates the result.
SystemSpec parse_system_spec(const json& doc, const Tolerances& tol = {});
json system_spec_to_json(const SystemSpec& spec);

std::vector<OrbitDatum> parse_orbit_data(const json& doc);
ClassTable parse_class_table(const json& doc);
json class_degree_to_json(const ClassDegree& deg);

std::vector<EulerSO2> parse_euler_list(const json& doc);

/// Run f, translating nlohmann exceptions into SchemaError(context: ...).
template <class F>
auto with_schema_errors(const std::string& context, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& ex) {
    throw SchemaError(context + ": " + ex.what());
  }
}

}  // namespace eqbif
