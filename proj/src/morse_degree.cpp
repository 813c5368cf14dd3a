#include "eqbif/morse_degree.hpp"

#include <charconv>

#include "eqbif/errors.hpp"

namespace eqbif {

ClassTable::ClassTable(std::map<std::string, std::string> h_to_g) : h_to_g_(std::move(h_to_g)) {
  std::map<std::string, std::string> seen;
  for (const auto& [h, g] : h_to_g_) {
    auto [it, fresh] = seen.emplace(g, h);
    if (!fresh) {
      throw NonInjectiveTable("classes \"" + it->second + "\" and \"" + h +
                              "\" both map to \"" + g + "\"");
    }
  }
}

ClassTable ClassTable::identity(const std::vector<std::string>& classes) {
  std::map<std::string, std::string> m;
  for (const auto& c : classes) m.emplace(c, c);
  return ClassTable(std::move(m));
}

const std::string& ClassTable::lift(const std::string& h_class) const {
  auto it = h_to_g_.find(h_class);
  if (it == h_to_g_.end()) throw MissingClass("class \"" + h_class + "\" is not in the table");
  return it->second;
}

ClassDegree degree_from_orbits(const std::vector<OrbitDatum>& data) {
  ClassDegree deg;
  for (const auto& d : data) {
    if (d.morse_index < 0) throw ValidationError("morse_index must be non-negative");
    deg[d.isotropy_class] += d.morse_index % 2 == 0 ? 1 : -1;
  }
  std::erase_if(deg, [](const auto& kv) { return kv.second == 0; });
  return deg;
}

ClassDegree add_degrees(const ClassDegree& a, const ClassDegree& b) {
  ClassDegree out = a;
  for (const auto& [k, v] : b) out[k] += v;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ClassDegree lift_degree(const ClassDegree& deg, const ClassTable& table) {
  ClassDegree out;
  for (const auto& [h, v] : deg) {
    if (v != 0) out[table.lift(h)] = v;
  }
  return out;
}

bool compare_orbit_degrees(const ClassDegree& a, const ClassDegree& b, const ClassTable& table) {
  return lift_degree(a, table) != lift_degree(b, table);
}

EulerSO2 to_euler_so2(const ClassDegree& deg) {
  EulerSO2 out;
  for (const auto& [label, v] : deg) {
    if (label == "SO(2)") {
      out += EulerSO2::scalar(v);
      continue;
    }
    std::string_view rest(label);
    if (rest.starts_with("Z_")) {
      rest.remove_prefix(2);
    } else if (rest.starts_with("Z")) {
      rest.remove_prefix(1);
    } else {
      throw ValidationError("\"" + label + "\" is not an SO(2) isotropy class");
    }
    std::int64_t k = 0;
    auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc() || end != rest.data() + rest.size() || k < 1) {
      throw ValidationError("\"" + label + "\" is not an SO(2) isotropy class");
    }
    out += EulerSO2::cyclic(k, v);
  }
  return out;
}

}  // namespace eqbif
