#pragma once

// Global bifurcation verdicts from an orbit of trivial solutions.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqbif/euler_so2.hpp"
#include "eqbif/system_model.hpp"

namespace eqbif {

enum class Glob { Bifurcates, Inconclusive };

enum class Justification {
  RepNonEquivalence,
  ZeroCaseParity,
  KernelEmpty,
  EquivalentModEvenTrivial,
};

enum class Unboundedness { Unbounded, NoVerdict };

std::string to_string(Glob g);
std::string to_string(Justification j);
std::string to_string(Unboundedness u);
Glob parse_glob(const std::string& s);
Justification parse_justification(const std::string& s);
Unboundedness parse_unboundedness(const std::string& s);

struct GlobVerdict {
  Glob glob = Glob::Inconclusive;
  Justification justification = Justification::KernelEmpty;

  friend bool operator==(const GlobVerdict&, const GlobVerdict&) = default;
};

struct BifurcationVerdict {
  double lambda0 = 0.0;
  bool in_lambda = false;
  KernelReps kernel;
  Glob glob = Glob::Inconclusive;
  Justification justification = Justification::KernelEmpty;
  std::optional<EulerSO2> bif_element;
  Unboundedness unbounded = Unboundedness::NoVerdict;

  friend bool operator==(const BifurcationVerdict&, const BifurcationVerdict&) = default;
};

/// Sufficient test at lambda0 != 0: V1 and V2 differ modulo even trivial summands.
GlobVerdict check_glob(const KernelReps& kernel);
GlobVerdict check_glob(const SystemSpec& spec, const Spectrum& spectrum, double lambda0,
                       const Tolerances& tol = {});

/// Sufficient test at lambda0 = 0: m+(B) + m-(B) is odd.
GlobVerdict check_glob_zero(const SystemSpec& spec);

/// deg(-Id, V1) - deg(-Id, V2) for lambda0 > 0, the negative of it for lambda0 < 0.
/// Nonzero exactly when the SO(2) bifurcation index is nonzero.
EulerSO2 bif_difference(const KernelReps& kernel, double lambda0);
EulerSO2 bif_difference(const SystemSpec& spec, const Spectrum& spectrum, double lambda0,
                        const Tolerances& tol = {});

/// Closed-form SO(2) bifurcation index under a9.
EulerSO2 bif_a9(const SystemSpec& spec, const Spectrum& spectrum, double lambda0,
                const Tolerances& tol = {});

/// True iff the indices do not sum to zero, so no bounded continuum can meet
/// exactly these parameters.
bool rabinowitz_excludes_bounded(const std::vector<EulerSO2>& indices);

/// Nonempty index subsets (ascending positions) whose sum is zero.
/// Throws ValidationError for more than 20 indices.
std::vector<std::vector<std::size_t>> zero_sum_subsets(const std::vector<EulerSO2>& indices);

struct UnboundedReport {
  Unboundedness verdict = Unboundedness::NoVerdict;
  std::int64_t q1 = 0;
  std::int64_t q2 = 0;
  bool nontrivial_eigenspace = false;
  /// The continuum from sign * alpha is known to exist.
  bool nonempty = false;
  /// The own index is positive and even, so a bounded continuum would force
  /// the opposite index to be positive and odd and the continuum to reach
  /// the opposite half of the spectrum.
  bool bounded_consequences_apply = false;
  /// Whether those consequences are still satisfiable by (q1, q2).
  bool bounded_admissible = true;

  friend bool operator==(const UnboundedReport&, const UnboundedReport&) = default;
};

/// Unboundedness of the continuum from sign * alpha_k0 under a9.
UnboundedReport unbounded_verdict(const SystemSpec& spec, bool nontrivial_eigenspace, int sign);
UnboundedReport unbounded_verdict(const SystemSpec& spec, const Spectrum& spectrum,
                                  const SpectrumEntry& alpha_k0, int sign,
                                  const Tolerances& tol = {});

/// Verdicts for every member of Lambda in the window, plus lambda0 = 0 when it
/// lies in the window, ordered by lambda0.
std::vector<BifurcationVerdict> analyze(const SystemSpec& spec, const Spectrum& spectrum,
                                        const Interval& window, const Tolerances& tol = {});

}  // namespace eqbif
