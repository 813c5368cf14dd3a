#pragma once

// Equivariant gradient degree from special Morse critical-orbit data.
//
// Class labels are opaque strings naming conjugacy classes of isotropy
// groups; the caller is responsible for conjugacy and for the specialness
// of every orbit.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eqbif/euler_so2.hpp"

namespace eqbif {

struct OrbitDatum {
  std::string isotropy_class;
  /// Negative index of the Hessian block on the fixed-point slice.
  std::int64_t morse_index = 0;
};

/// Class label -> coefficient. Zero coefficients are never stored.
using ClassDegree = std::map<std::string, Integer>;

/// Injective map from H-class labels to G-class labels.
class ClassTable {
 public:
  ClassTable() = default;
  /// Throws NonInjectiveTable when two H-classes share a G-class.
  explicit ClassTable(std::map<std::string, std::string> h_to_g);

  static ClassTable identity(const std::vector<std::string>& classes);

  const std::map<std::string, std::string>& entries() const { return h_to_g_; }
  /// Throws MissingClass for labels outside the table.
  const std::string& lift(const std::string& h_class) const;

 private:
  std::map<std::string, std::string> h_to_g_;
};

/// Coefficient of (K) is the sum of (-1)^{morse_index} over orbits of class (K).
ClassDegree degree_from_orbits(const std::vector<OrbitDatum>& data);

/// Pointwise sum, pruning zeros.
ClassDegree add_degrees(const ClassDegree& a, const ClassDegree& b);

/// Relabel H-classes by their G-classes.
ClassDegree lift_degree(const ClassDegree& deg, const ClassTable& table);

/// True iff a != b. Both maps are lifted first so that missing classes and
/// non-injective tables are reported.
bool compare_orbit_degrees(const ClassDegree& a, const ClassDegree& b, const ClassTable& table);

/// Read an SO(2)-degree: "SO(2)" is the unit, "Z_k" or "Zk" is chi_k.
/// Throws ValidationError for other labels.
EulerSO2 to_euler_so2(const ClassDegree& deg);

}  // namespace eqbif
