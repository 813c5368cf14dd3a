#pragma once

// Neumann Laplacian spectra on SO(N)-invariant domains.
//
// The unit disk spectrum is computed from the positive roots of J_l'. For
// N-balls with N >= 3 only the radial test of the l = 0 type is available;
// everything else about those spectra comes from user-supplied documents.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqbif/euler_so2.hpp"
#include "json.hpp"

namespace eqbif {

using Rational = boost::multiprecision::cpp_rational;

class RootCache;

struct Tolerances {
  /// Final bisection bracket width for radial roots (absolute, in x).
  double root = 1e-12;
  /// Relative tolerance for identifying two real eigenvalues / parameters.
  double merge = 1e-8;

  void validate() const;
};

/// |a - b| < tol * max(1, |a|, |b|).
bool nearly_equal(double a, double b, double tol);

/// Bracketing grid step used by the radial root search.
inline constexpr double kRootGridStep = 0.39269908169872414;  // pi / 8

/// Orthogonal representation of SO(N) on an eigenspace: a trivial part plus
/// a multiset of nontrivial irreducibles labeled by spherical-harmonic degree
/// l >= 1 (for N = 2 this is the rotation number).
struct RepDescriptor {
  std::int64_t trivial_dim = 0;
  std::map<std::int64_t, std::int64_t> irreducibles;

  static RepDescriptor trivial(std::int64_t t) { return {t, {}}; }
  static RepDescriptor irreducible(std::int64_t label, std::int64_t mult = 1);
  static RepDescriptor from_so2(const SO2Rep& r) { return {r.trivial_dim, r.rotation_mults}; }
  SO2Rep to_so2() const { return {trivial_dim, irreducibles}; }

  bool is_zero() const { return trivial_dim == 0 && irreducibles.empty(); }
  /// Contains at least one nontrivial irreducible.
  bool is_nontrivial() const { return !irreducibles.empty(); }
  /// Real dimension as an SO(N)-representation.
  std::int64_t real_dimension(int n) const;

  RepDescriptor& operator+=(const RepDescriptor& other);
  friend RepDescriptor operator+(RepDescriptor a, const RepDescriptor& b) { return a += b; }
  RepDescriptor repeated(std::int64_t n) const;

  friend bool operator==(const RepDescriptor&, const RepDescriptor&) = default;

  void validate() const;
  std::string to_string() const;
};

/// Real dimension of the SO(n)-irreducible of harmonic degree l.
std::int64_t harmonic_dimension(int n, std::int64_t l);

/// Same nontrivial part and trivial dimensions of equal parity.
bool equivalent_mod_even_trivial(const RepDescriptor& a, const RepDescriptor& b);

struct SpectrumEntry {
  double eigenvalue = 0.0;
  /// Exact value when known (the zero eigenvalue, integer/rational user input).
  std::optional<Rational> exact;
  std::optional<int> angular_index;
  std::optional<int> root_index;
  RepDescriptor rep;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

enum class DomainKind { Disk, Ball, Custom };

std::string to_string(DomainKind kind);

/// A finite, merged, ascending prefix of a Neumann spectrum.
struct Spectrum {
  DomainKind kind = DomainKind::Disk;
  int dim = 2;
  std::vector<SpectrumEntry> entries;
  /// Every eigenvalue <= this bound is present in entries.
  double complete_up_to = 0.0;

  /// Throws InsufficientSpectrum when eigenvalues up to `bound` are not all known.
  void require_coverage(double bound) const;
  /// 0-based position of the entry matching alpha, if any.
  std::optional<std::size_t> find(double alpha, double tol) const;
};

/// Radial Neumann condition whose positive roots x give eigenvalues x^2.
/// N = 2: J_l'(x). N >= 3, l = 0: J_nu'(x) - nu/x J_nu(x) with nu = (N-2)/2.
/// Throws UnsupportedDomain for N >= 3 with l >= 1.
double radial_condition(int angular_index, int dim, double x);

/// First `count` positive roots of the radial condition.
std::vector<double> neumann_radial_roots(int angular_index, int dim, int count,
                                         const Tolerances& tol = {});

/// All positive roots of the radial condition that are <= x_max.
std::vector<double> neumann_radial_roots_below(int angular_index, int dim, double x_max,
                                               const Tolerances& tol = {});

/// Sort ascending and merge eigenvalues that agree within tol.merge; merged
/// entries keep the first entry's indices and sum the representations.
std::vector<SpectrumEntry> merge_spectrum(std::vector<SpectrumEntry> entries, double merge_tol);

/// Neumann spectrum of the unit disk up to max_eigenvalue (inclusive).
std::vector<SpectrumEntry> disk_spectrum(double max_eigenvalue, const Tolerances& tol = {},
                                         RootCache* cache = nullptr);

/// Convenience wrapper returning a Spectrum with coverage metadata.
Spectrum make_disk_spectrum(double max_eigenvalue, const Tolerances& tol = {},
                            RootCache* cache = nullptr);

/// True iff the eigenspace is a nontrivial SO(N)-representation, decided by
/// the l = 0 radial test: sqrt(alpha) is not a root of the N-ball radial condition.
bool ball_rep_nontrivial(const SpectrumEntry& entry, int dim, const Tolerances& tol = {});

/// Parse and validate a custom-spectrum document:
///   {"domain": "custom", "dim": N?, "complete_up_to": real?,
///    "entries": [{"eigenvalue": real, "rep": {...}, "angular_index": int?,
///                 "root_index": int?}, ...]}
/// Throws SchemaError for malformed documents and ValidationError for
/// documents that cannot be a Neumann spectrum.
Spectrum load_custom_spectrum(const nlohmann::json& doc, const Tolerances& tol = {});

}  // namespace eqbif
