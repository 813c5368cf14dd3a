#pragma once

// Spectral model of the Neumann system  A Delta u = grad_u F(u, lambda)  on
// an SO(N)-invariant domain, with A = diag(-1 x p1, +1 x p2) and
// Hess_u F(u0, lambda) = lambda * diag(B1, B2).
//
// Nothing here touches the functional itself; the system enters only
// through p1, p2, the spectra of B1 and B2, and the Laplacian spectrum.

#include <cstdint>
#include <optional>
#include <vector>

#include "eqbif/spectral.hpp"

namespace eqbif {

/// One distinct eigenvalue of B1 or B2 with its multiplicity.
struct MatrixEigenvalue {
  double value = 0.0;
  std::int64_t mult = 1;
  /// Set when the user supplied the value as an exact integer.
  std::optional<Rational> exact;

  friend bool operator==(const MatrixEigenvalue&, const MatrixEigenvalue&) = default;
};

struct DomainSpec {
  DomainKind kind = DomainKind::Disk;
  int dim = 2;
  /// User data for ball (N >= 3) and custom domains; empty for the disk.
  std::optional<Spectrum> supplied;
};

struct SystemSpec {
  std::int64_t p1 = 0;
  std::int64_t p2 = 0;
  std::vector<MatrixEigenvalue> b1;
  std::vector<MatrixEigenvalue> b2;
  /// Multiplicity of 0 as an eigenvalue of B (= dimension of the orbit of u0).
  std::int64_t mu_b0 = 0;
  DomainSpec domain;
  bool a9 = false;

  std::int64_t q1() const { return p1 - mu_b0; }
  std::int64_t q2() const { return p2; }

  /// Positive and negative Morse indices of B.
  std::int64_t positive_index() const;
  std::int64_t negative_index() const;

  /// Throws ValidationError when the block data is inconsistent.
  void validate() const;
};

/// Spec satisfying the simplified hypothesis B1 = diag(0 x mu, 1 x (p1 - mu)), B2 = Id.
SystemSpec make_a9_system(std::int64_t p1, std::int64_t p2, std::int64_t mu_b0,
                          DomainSpec domain = {});

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return lo <= x && x <= hi; }
  void validate() const;
};

/// Largest eigenvalue needed to decide every lambda in the window.
double required_eigenvalue_bound(const SystemSpec& spec, const Interval& window);

/// Spectrum for the spec's domain covering eigenvalues up to `bound`.
/// Disk spectra are computed; supplied spectra are checked for coverage.
Spectrum resolve_spectrum(const SystemSpec& spec, double bound, const Tolerances& tol = {},
                          RootCache* cache = nullptr);

enum class Block { B1, B2 };

struct LinearizationEigenvalue {
  double value = 0.0;
  std::int64_t multiplicity = 0;
  /// 0-based index into the spectrum.
  std::size_t entry = 0;
  Block block = Block::B1;
  double b = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  /// alpha = 0 and b = 0: tangent to the orbit, zero for every lambda.
  bool orbit_direction = false;
};

/// Eigenvalues of L - L_{lambda B} on the first k_max Laplacian eigenspaces:
/// (alpha_k - lambda b)/(1 + alpha_k) on the B1 block and
/// (-alpha_k - lambda b)/(1 + alpha_k) on the B2 block.
std::vector<LinearizationEigenvalue> linearization_eigenvalues(const SystemSpec& spec,
                                                               const Spectrum& spectrum,
                                                               double lambda, std::size_t k_max);

/// Zero of the linearization in the space normal to the orbit.
bool is_normal_kernel(const LinearizationEigenvalue& ev, double merge_tol);

/// Lambda intersected with the window, ascending and deduplicated.
std::vector<double> lambda_set(const SystemSpec& spec, const Spectrum& spectrum,
                               const Interval& window, const Tolerances& tol = {});

struct KernelReps {
  RepDescriptor v1;
  RepDescriptor v2;

  bool is_zero() const { return v1.is_zero() && v2.is_zero(); }
  friend bool operator==(const KernelReps&, const KernelReps&) = default;
};

/// V1(lambda0) (+) V2(lambda0): the kernel of the Hessian on the normal slice.
KernelReps kernel_reps(const SystemSpec& spec, const Spectrum& spectrum, double lambda0,
                       const Tolerances& tol = {});

/// Half the distance from lambda0 to its nearest neighbour in `members`
/// (1 for a singleton). Throws NotAMember if lambda0 is not listed.
double epsilon_gap(double lambda0, const std::vector<double>& members, double merge_tol = 1e-8);

}  // namespace eqbif
