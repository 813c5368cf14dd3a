#include "eqbif/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

#include "eqbif/errors.hpp"

namespace eqbif {

std::string to_string(Glob g) {
  return g == Glob::Bifurcates ? "Bifurcates" : "Inconclusive";
}

std::string to_string(Justification j) {
  switch (j) {
    case Justification::RepNonEquivalence: return "RepNonEquivalence";
    case Justification::ZeroCaseParity: return "ZeroCaseParity";
    case Justification::KernelEmpty: return "KernelEmpty";
    case Justification::EquivalentModEvenTrivial: return "EquivalentModEvenTrivial";
  }
  return "unknown";
}

std::string to_string(Unboundedness u) {
  return u == Unboundedness::Unbounded ? "Unbounded" : "NoVerdict";
}

Glob parse_glob(const std::string& s) {
  if (s == "Bifurcates") return Glob::Bifurcates;
  if (s == "Inconclusive") return Glob::Inconclusive;
  throw SchemaError("unknown glob verdict \"" + s + "\"");
}

Justification parse_justification(const std::string& s) {
  for (auto j : {Justification::RepNonEquivalence, Justification::ZeroCaseParity,
                 Justification::KernelEmpty, Justification::EquivalentModEvenTrivial}) {
    if (to_string(j) == s) return j;
  }
  throw SchemaError("unknown justification \"" + s + "\"");
}

Unboundedness parse_unboundedness(const std::string& s) {
  if (s == "Unbounded") return Unboundedness::Unbounded;
  if (s == "NoVerdict") return Unboundedness::NoVerdict;
  throw SchemaError("unknown unboundedness verdict \"" + s + "\"");
}

GlobVerdict check_glob(const KernelReps& kernel) {
  if (kernel.is_zero()) return {Glob::Inconclusive, Justification::KernelEmpty};
  if (!equivalent_mod_even_trivial(kernel.v1, kernel.v2)) {
    return {Glob::Bifurcates, Justification::RepNonEquivalence};
  }
  return {Glob::Inconclusive, Justification::EquivalentModEvenTrivial};
}

GlobVerdict check_glob(const SystemSpec& spec, const Spectrum& spectrum, double lambda0,
                       const Tolerances& tol) {
  if (lambda0 == 0.0) throw PreconditionError("check_glob needs lambda0 != 0; use check_glob_zero");
  return check_glob(kernel_reps(spec, spectrum, lambda0, tol));
}

GlobVerdict check_glob_zero(const SystemSpec& spec) {
  const bool odd = (spec.positive_index() + spec.negative_index()) % 2 != 0;
  return {odd ? Glob::Bifurcates : Glob::Inconclusive, Justification::ZeroCaseParity};
}

namespace {

void require_so2(const Spectrum& spectrum, const char* what) {
  if (spectrum.dim != 2) {
    throw UnsupportedDomain(std::string(what) + " is available only for SO(2) spectra (N = 2), got N = " +
                            std::to_string(spectrum.dim));
  }
}

}  // namespace

EulerSO2 bif_difference(const KernelReps& kernel, double lambda0) {
  if (lambda0 == 0.0) throw PreconditionError("bif_difference needs lambda0 != 0");
  const auto d1 = deg_minus_id(kernel.v1.to_so2());
  const auto d2 = deg_minus_id(kernel.v2.to_so2());
  return lambda0 > 0.0 ? d1 - d2 : d2 - d1;
}

EulerSO2 bif_difference(const SystemSpec& spec, const Spectrum& spectrum, double lambda0,
                        const Tolerances& tol) {
  require_so2(spectrum, "bif_difference");
  return bif_difference(kernel_reps(spec, spectrum, lambda0, tol), lambda0);
}

EulerSO2 bif_a9(const SystemSpec& spec, const Spectrum& spectrum, double lambda0,
                const Tolerances& tol) {
  if (!spec.a9) throw PreconditionError("bif_a9 requires the a9 hypothesis");
  require_so2(spectrum, "bif_a9");
  const std::int64_t q1 = spec.q1();
  const std::int64_t q2 = spec.q2();
  if (lambda0 == 0.0) {
    const Integer s1 = q1 % 2 == 0 ? 1 : -1;
    const Integer s2 = q2 % 2 == 0 ? 1 : -1;
    return EulerSO2::scalar(s1 - s2);
  }
  spectrum.require_coverage(std::abs(lambda0));
  const auto k0 = spectrum.find(std::abs(lambda0), tol.merge);
  const bool member = k0 && *k0 > 0 && (lambda0 > 0.0 ? q1 > 0 : q2 > 0);
  if (!member) {
    std::ostringstream os;
    os << "lambda0 = " << lambda0 << " is not in Lambda u {0}";
    throw PreconditionError(os.str());
  }
  // V(n) is the sum of the first n eigenspaces; entry k0 is alpha_{k0 + 1}.
  SO2Rep below;
  for (std::size_t i = 0; i < *k0; ++i) below += spectrum.entries[i].rep.to_so2();
  const SO2Rep at = spectrum.entries[*k0].rep.to_so2();
  const EulerSO2 one = EulerSO2::unit();
  if (lambda0 > 0.0) {
    return pow(deg_minus_id(below), q1) * (pow(deg_minus_id(at), q1) - one);
  }
  return pow(deg_minus_id(below + at), -q2) * (pow(deg_minus_id(at), q2) - one);
}

bool rabinowitz_excludes_bounded(const std::vector<EulerSO2>& indices) {
  EulerSO2 sum;
  for (const auto& x : indices) sum += x;
  return !sum.is_zero();
}

std::vector<std::vector<std::size_t>> zero_sum_subsets(const std::vector<EulerSO2>& indices) {
  constexpr std::size_t kMax = 20;
  if (indices.size() > kMax) {
    throw ValidationError("subset enumeration is limited to " + std::to_string(kMax) +
                          " indices, got " + std::to_string(indices.size()));
  }
  std::vector<std::vector<std::size_t>> out;
  const std::uint32_t n = static_cast<std::uint32_t>(indices.size());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    EulerSO2 sum;
    std::vector<std::size_t> subset;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        sum += indices[i];
        subset.push_back(i);
      }
    }
    if (sum.is_zero()) out.push_back(std::move(subset));
  }
  return out;
}

UnboundedReport unbounded_verdict(const SystemSpec& spec, bool nontrivial_eigenspace, int sign) {
  if (!spec.a9) throw PreconditionError("unbounded_verdict requires the a9 hypothesis");
  if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
  UnboundedReport r;
  r.q1 = spec.q1();
  r.q2 = spec.q2();
  r.nontrivial_eigenspace = nontrivial_eigenspace;
  const std::int64_t own = sign > 0 ? r.q1 : r.q2;
  const std::int64_t other = sign > 0 ? r.q2 : r.q1;
  r.nonempty = nontrivial_eigenspace && own > 0;
  r.bounded_consequences_apply = r.nonempty && own % 2 == 0;
  if (r.bounded_consequences_apply) r.bounded_admissible = other > 0 && other % 2 == 1;
  const bool licensed = nontrivial_eigenspace && own > 0 && own % 2 == 0 && other >= 0 &&
                        other % 2 == 0;
  r.verdict = licensed ? Unboundedness::Unbounded : Unboundedness::NoVerdict;
  return r;
}

UnboundedReport unbounded_verdict(const SystemSpec& spec, const Spectrum& spectrum,
                                  const SpectrumEntry& alpha_k0, int sign, const Tolerances& tol) {
  if (!spec.a9) throw PreconditionError("unbounded_verdict requires the a9 hypothesis");
  const bool nontrivial = spectrum.kind == DomainKind::Ball ? ball_rep_nontrivial(alpha_k0, spectrum.dim, tol)
                                            : alpha_k0.rep.is_nontrivial();
  return unbounded_verdict(spec, nontrivial, sign);
}

namespace {

BifurcationVerdict verdict_at(const SystemSpec& spec, const Spectrum& spectrum, double lambda0,
                              bool in_lambda, const Tolerances& tol) {
  BifurcationVerdict v;
  v.lambda0 = lambda0;
  v.in_lambda = in_lambda;
  v.kernel = kernel_reps(spec, spectrum, lambda0, tol);
  const auto g = lambda0 == 0.0 ? check_glob_zero(spec) : check_glob(v.kernel);
  v.glob = g.glob;
  v.justification = g.justification;
  if (spec.a9 && spectrum.kind == DomainKind::Disk) {
    v.bif_element = bif_a9(spec, spectrum, lambda0, tol);
  }
  if (spec.a9 && lambda0 != 0.0) {
    if (const auto k = spectrum.find(std::abs(lambda0), tol.merge)) {
      const int sign = lambda0 > 0.0 ? 1 : -1;
      v.unbounded = unbounded_verdict(spec, spectrum, spectrum.entries[*k], sign, tol).verdict;
    }
  }
  return v;
}

}  // namespace

std::vector<BifurcationVerdict> analyze(const SystemSpec& spec, const Spectrum& spectrum,
                                        const Interval& window, const Tolerances& tol) {
  spec.validate();
  const auto members = lambda_set(spec, spectrum, window, tol);
  std::vector<std::pair<double, bool>> points;
  bool zero_listed = false;
  for (double m : members) {
    if (m == 0.0) zero_listed = true;
    points.emplace_back(m, true);
  }
  if (!zero_listed && window.contains(0.0)) {
    points.emplace_back(0.0, false);
    std::stable_sort(points.begin(), points.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  // Strided fan-out over a bounded number of workers; each slot is written by one worker.
  std::vector<BifurcationVerdict> out(points.size());
  const std::size_t workers =
      std::min<std::size_t>(points.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> pending;
  for (std::size_t w = 0; w < workers; ++w) {
    pending.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < points.size(); i += workers) {
        out[i] = verdict_at(spec, spectrum, points[i].first, points[i].second, tol);
      }
    }));
  }
  for (auto& f : pending) f.get();
  return out;
}

}  // namespace eqbif
