#include "eqbif/serialization.hpp"

#include <limits>

#include "eqbif/errors.hpp"

namespace eqbif {

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos) {
      throw SchemaError("\"" + s + "\" is not an integer");
    }
    return Integer(s);
  }
  throw SchemaError("expected an integer, got " + j.dump());
}

namespace {

json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) return integer_to_json(numerator(r));
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from_json(j));
    const Integer num = integer_from_json(json(s.substr(0, slash)));
    const Integer den = integer_from_json(json(s.substr(slash + 1)));
    if (den == 0) throw SchemaError("zero denominator in \"" + s + "\"");
    return Rational(num, den);
  }
  return Rational(integer_from_json(j));
}

std::int64_t int_key(const std::string& key) {
  std::size_t used = 0;
  std::int64_t k = 0;
  try {
    k = std::stoll(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw SchemaError("\"" + key + "\" is not an integer key");
  return k;
}

std::map<std::int64_t, std::int64_t> int_map_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("expected an object mapping labels to multiplicities");
  std::map<std::int64_t, std::int64_t> out;
  for (const auto& [key, value] : j.items()) {
    const auto m = value.get<std::int64_t>();
    if (m != 0) out[int_key(key)] += m;
  }
  return out;
}

json int_map_to_json(const std::map<std::int64_t, std::int64_t>& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

std::vector<MatrixEigenvalue> block_from_json(const json& j, const char* name) {
  if (!j.is_array()) throw SchemaError(std::string(name) + " must be an array");
  std::vector<MatrixEigenvalue> out;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("value")) {
      throw SchemaError(std::string(name) + " entries need a \"value\"");
    }
    MatrixEigenvalue b;
    const auto& v = item.at("value");
    if (!v.is_number()) throw SchemaError(std::string(name) + " values must be numbers");
    b.value = v.get<double>();
    if (v.is_number_integer()) b.exact = Rational(v.get<std::int64_t>());
    b.mult = item.value("mult", std::int64_t{1});
    out.push_back(std::move(b));
  }
  return out;
}

json block_to_json(const std::vector<MatrixEigenvalue>& block) {
  json out = json::array();
  for (const auto& b : block) {
    json v = b.value;
    if (b.exact && denominator(*b.exact) == 1) v = integer_to_json(numerator(*b.exact));
    out.push_back({{"value", v}, {"mult", b.mult}});
  }
  return out;
}

}  // namespace

void to_json(json& j, const EulerSO2& v) {
  json cyclic = json::object();
  for (const auto& [k, c] : v.cyclic_coeffs()) cyclic[std::to_string(k)] = integer_to_json(c);
  j = {{"unit", integer_to_json(v.unit_coeff())}, {"cyclic", cyclic}};
}

void from_json(const json& j, EulerSO2& v) {
  if (!j.is_object()) throw SchemaError("Euler ring element must be an object");
  Integer unit = j.contains("unit") ? integer_from_json(j.at("unit")) : Integer(0);
  EulerSO2::CyclicMap cyclic;
  if (j.contains("cyclic")) {
    if (!j.at("cyclic").is_object()) throw SchemaError("\"cyclic\" must be an object");
    for (const auto& [key, value] : j.at("cyclic").items()) {
      cyclic[int_key(key)] += integer_from_json(value);
    }
  }
  try {
    v = EulerSO2(std::move(unit), std::move(cyclic));
  } catch (const ValidationError& ex) {
    throw SchemaError(ex.what());
  }
}

void to_json(json& j, const SO2Rep& v) {
  j = {{"trivial", v.trivial_dim}, {"rot", int_map_to_json(v.rotation_mults)}};
}

void from_json(const json& j, SO2Rep& v) {
  if (!j.is_object()) throw SchemaError("representation must be an object");
  v.trivial_dim = j.value("trivial", std::int64_t{0});
  v.rotation_mults = j.contains("rot") ? int_map_from_json(j.at("rot"))
                                       : std::map<std::int64_t, std::int64_t>{};
  v.validate();
}

void to_json(json& j, const RepDescriptor& v) {
  j = {{"trivial", v.trivial_dim}, {"irreps", int_map_to_json(v.irreducibles)}};
}

void from_json(const json& j, RepDescriptor& v) {
  if (!j.is_object()) throw SchemaError("representation must be an object");
  if (j.contains("irreps") && j.contains("rot")) {
    throw SchemaError("representation lists both \"irreps\" and \"rot\"");
  }
  v.trivial_dim = j.value("trivial", std::int64_t{0});
  v.irreducibles.clear();
  if (j.contains("irreps")) v.irreducibles = int_map_from_json(j.at("irreps"));
  if (j.contains("rot")) v.irreducibles = int_map_from_json(j.at("rot"));
  v.validate();
}

void to_json(json& j, const SpectrumEntry& v) {
  j = {{"eigenvalue", v.eigenvalue},
       {"exact", v.exact ? rational_to_json(*v.exact) : json(nullptr)},
       {"angular_index", v.angular_index ? json(*v.angular_index) : json(nullptr)},
       {"root_index", v.root_index ? json(*v.root_index) : json(nullptr)},
       {"rep", v.rep}};
}

void from_json(const json& j, SpectrumEntry& v) {
  v.eigenvalue = j.at("eigenvalue").get<double>();
  v.exact.reset();
  if (j.contains("exact") && !j.at("exact").is_null()) v.exact = rational_from_json(j.at("exact"));
  v.angular_index.reset();
  if (j.contains("angular_index") && !j.at("angular_index").is_null()) {
    v.angular_index = j.at("angular_index").get<int>();
  }
  v.root_index.reset();
  if (j.contains("root_index") && !j.at("root_index").is_null()) {
    v.root_index = j.at("root_index").get<int>();
  }
  v.rep = j.at("rep").get<RepDescriptor>();
}

void to_json(json& j, const KernelReps& v) { j = {{"v1", v.v1}, {"v2", v.v2}}; }

void from_json(const json& j, KernelReps& v) {
  v.v1 = j.at("v1").get<RepDescriptor>();
  v.v2 = j.at("v2").get<RepDescriptor>();
}

void to_json(json& j, const BifurcationVerdict& v) {
  j = {{"lambda0", v.lambda0},
       {"in_lambda", v.in_lambda},
       {"kernel", v.kernel},
       {"glob", to_string(v.glob)},
       {"justification", to_string(v.justification)},
       {"bif", v.bif_element ? json(*v.bif_element) : json(nullptr)},
       {"unbounded", to_string(v.unbounded)}};
}

void from_json(const json& j, BifurcationVerdict& v) {
  v.lambda0 = j.at("lambda0").get<double>();
  v.in_lambda = j.at("in_lambda").get<bool>();
  v.kernel = j.at("kernel").get<KernelReps>();
  v.glob = parse_glob(j.at("glob").get<std::string>());
  v.justification = parse_justification(j.at("justification").get<std::string>());
  v.bif_element.reset();
  if (!j.at("bif").is_null()) v.bif_element = j.at("bif").get<EulerSO2>();
  v.unbounded = parse_unboundedness(j.at("unbounded").get<std::string>());
}

void to_json(json& j, const UnboundedReport& v) {
  j = {{"verdict", to_string(v.verdict)},
       {"q1", v.q1},
       {"q2", v.q2},
       {"nontrivial_eigenspace", v.nontrivial_eigenspace},
       {"nonempty", v.nonempty},
       {"bounded_consequences_apply", v.bounded_consequences_apply},
       {"bounded_admissible", v.bounded_admissible}};
}

void to_json(json& j, const OrbitDatum& v) {
  j = {{"class", v.isotropy_class}, {"morse_index", v.morse_index}};
}

void from_json(const json& j, OrbitDatum& v) {
  if (!j.is_object()) throw SchemaError("orbit datum must be an object");
  v.isotropy_class = j.at("class").get<std::string>();
  v.morse_index = j.at("morse_index").get<std::int64_t>();
  if (v.morse_index < 0) throw ValidationError("morse_index must be non-negative");
}

json spectrum_to_json(const Spectrum& s) {
  return {{"domain", to_string(s.kind)},
          {"dim", s.dim},
          {"complete_up_to", s.complete_up_to},
          {"entries", s.entries}};
}

SystemSpec parse_system_spec(const json& doc, const Tolerances& tol) {
  SystemSpec spec = with_schema_errors("malformed system document", [&] {
    if (!doc.is_object()) throw SchemaError("system document must be an object");
    SystemSpec s;
    s.p1 = doc.at("p1").get<std::int64_t>();
    s.p2 = doc.at("p2").get<std::int64_t>();
    s.b1 = block_from_json(doc.at("b1"), "b1");
    s.b2 = block_from_json(doc.at("b2"), "b2");
    s.mu_b0 = doc.value("mu_b0", std::int64_t{0});
    s.a9 = doc.value("a9", false);
    const json domain = doc.value("domain", json{{"type", "disk"}});
    if (!domain.is_object()) throw SchemaError("\"domain\" must be an object");
    const auto type = domain.value("type", std::string("disk"));
    if (type == "disk") {
      s.domain = {DomainKind::Disk, 2, std::nullopt};
    } else if (type == "ball" || type == "custom") {
      json sdoc = domain;
      sdoc.erase("type");
      sdoc["domain"] = type;
      auto spectrum = load_custom_spectrum(sdoc, tol);
      s.domain = {spectrum.kind, spectrum.dim, std::move(spectrum)};
    } else {
      throw SchemaError("unknown domain type \"" + type + "\"");
    }
    return s;
  });
  spec.validate();
  return spec;
}

json system_spec_to_json(const SystemSpec& spec) {
  json domain = {{"type", to_string(spec.domain.kind)}};
  if (spec.domain.supplied) {
    const auto& s = *spec.domain.supplied;
    domain["dim"] = s.dim;
    domain["complete_up_to"] = s.complete_up_to;
    json entries = json::array();
    for (const auto& e : s.entries) {
      json item = {{"eigenvalue", e.eigenvalue}, {"rep", e.rep}};
      if (e.exact && denominator(*e.exact) == 1) {
        item["eigenvalue"] = integer_to_json(numerator(*e.exact));
      }
      if (e.angular_index) item["angular_index"] = *e.angular_index;
      if (e.root_index) item["root_index"] = *e.root_index;
      entries.push_back(std::move(item));
    }
    domain["entries"] = std::move(entries);
  }
  return {{"p1", spec.p1},         {"p2", spec.p2},         {"b1", block_to_json(spec.b1)},
          {"b2", block_to_json(spec.b2)}, {"mu_b0", spec.mu_b0}, {"domain", domain},
          {"a9", spec.a9}};
}

std::vector<OrbitDatum> parse_orbit_data(const json& doc) {
  return with_schema_errors("malformed orbit data", [&] {
    if (!doc.is_array()) throw SchemaError("orbit data must be an array");
    return doc.get<std::vector<OrbitDatum>>();
  });
}

ClassTable parse_class_table(const json& doc) {
  auto m = with_schema_errors("malformed class table", [&] {
    if (!doc.is_object()) throw SchemaError("class table must be an object");
    return doc.get<std::map<std::string, std::string>>();
  });
  return ClassTable(std::move(m));
}

json class_degree_to_json(const ClassDegree& deg) {
  json j = json::object();
  for (const auto& [k, v] : deg) j[k] = integer_to_json(v);
  return j;
}

std::vector<EulerSO2> parse_euler_list(const json& doc) {
  return with_schema_errors("malformed index list", [&] {
    if (!doc.is_array()) throw SchemaError("index list must be an array");
    return doc.get<std::vector<EulerSO2>>();
  });
}

}  // namespace eqbif
