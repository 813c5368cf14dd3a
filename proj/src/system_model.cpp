#include "eqbif/system_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "eqbif/errors.hpp"

namespace eqbif {

namespace {

std::int64_t total_mult(const std::vector<MatrixEigenvalue>& block) {
  std::int64_t s = 0;
  for (const auto& b : block) s += b.mult;
  return s;
}

std::int64_t zero_mult(const std::vector<MatrixEigenvalue>& block) {
  std::int64_t s = 0;
  for (const auto& b : block) {
    if (b.value == 0.0) s += b.mult;
  }
  return s;
}

void validate_block(const std::vector<MatrixEigenvalue>& block, const char* name) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    const auto& b = block[i];
    if (!std::isfinite(b.value)) {
      throw ValidationError(std::string(name) + " eigenvalues must be finite");
    }
    if (b.mult < 1) {
      throw ValidationError(std::string(name) + " multiplicities must be positive");
    }
    if (b.exact && static_cast<double>(*b.exact) != b.value) {
      throw ValidationError(std::string(name) + " exact value disagrees with its float value");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (block[j].value == b.value) {
        throw ValidationError(std::string(name) + " lists the eigenvalue " +
                              std::to_string(b.value) + " twice; merge the multiplicities");
      }
    }
  }
}

double max_abs_b(const SystemSpec& spec) {
  double m = 0.0;
  for (const auto* block : {&spec.b1, &spec.b2}) {
    for (const auto& b : *block) m = std::max(m, std::abs(b.value));
  }
  return m;
}

// Candidate parameter alpha/b (B1) or -alpha/b (B2), exact when both inputs are.
struct Candidate {
  double value;
  std::optional<Rational> exact;
};

Candidate candidate(const SpectrumEntry& e, const MatrixEigenvalue& b, Block block) {
  const double sign = block == Block::B1 ? 1.0 : -1.0;
  Candidate c{sign * e.eigenvalue / b.value, std::nullopt};
  if (e.exact && b.exact) {
    Rational r = *e.exact / *b.exact;
    if (block == Block::B2) r = -r;
    c.exact = r;
    c.value = static_cast<double>(r);
  }
  if (c.value == 0.0) c.value = 0.0;  // drop the sign of -0/b
  return c;
}

}  // namespace

std::int64_t SystemSpec::positive_index() const {
  std::int64_t s = 0;
  for (const auto* block : {&b1, &b2}) {
    for (const auto& b : *block) {
      if (b.value > 0.0) s += b.mult;
    }
  }
  return s;
}

std::int64_t SystemSpec::negative_index() const {
  std::int64_t s = 0;
  for (const auto* block : {&b1, &b2}) {
    for (const auto& b : *block) {
      if (b.value < 0.0) s += b.mult;
    }
  }
  return s;
}

void SystemSpec::validate() const {
  if (p1 < 0 || p2 < 0) throw ValidationError("p1 and p2 must be non-negative");
  if (p1 + p2 < 1) throw ValidationError("the system needs at least one equation (p1 + p2 >= 1)");
  validate_block(b1, "B1");
  validate_block(b2, "B2");
  if (total_mult(b1) != p1) {
    throw ValidationError("B1 multiplicities sum to " + std::to_string(total_mult(b1)) +
                          ", expected p1 = " + std::to_string(p1));
  }
  if (total_mult(b2) != p2) {
    throw ValidationError("B2 multiplicities sum to " + std::to_string(total_mult(b2)) +
                          ", expected p2 = " + std::to_string(p2));
  }
  if (mu_b0 < 0) throw ValidationError("mu_b0 must be non-negative");
  const std::int64_t z = zero_mult(b1) + zero_mult(b2);
  if (mu_b0 > z) {
    throw ValidationError("mu_b0 = " + std::to_string(mu_b0) +
                          " exceeds the multiplicity of 0 in sigma(B) (" + std::to_string(z) + ")");
  }
  if (a9) {
    const auto expected = make_a9_system(p1, p2, mu_b0);
    if (mu_b0 > p1) throw ValidationError("under a9, mu_b0 cannot exceed p1");
    auto same = [](std::vector<MatrixEigenvalue> a, std::vector<MatrixEigenvalue> b) {
      auto key = [](const auto& x, const auto& y) { return x.value < y.value; };
      std::sort(a.begin(), a.end(), key);
      std::sort(b.begin(), b.end(), key);
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].value != b[i].value || a[i].mult != b[i].mult) return false;
      }
      return true;
    };
    if (!same(b1, expected.b1) || !same(b2, expected.b2)) {
      throw ValidationError(
          "a9 requires B1 = diag(0 x mu_b0, 1 x (p1 - mu_b0)) and B2 = Id");
    }
  }
  if (domain.kind == DomainKind::Disk && domain.dim != 2) {
    throw ValidationError("the disk domain has dimension 2");
  }
  if (domain.dim < 2) throw ValidationError("domain dimension must be >= 2");
  if (domain.kind == DomainKind::Ball && domain.dim < 3) {
    throw ValidationError("ball domains need N >= 3; use the disk for N = 2");
  }
  if (domain.supplied && domain.supplied->dim != domain.dim) {
    throw ValidationError("supplied spectrum dimension does not match the domain");
  }
}

SystemSpec make_a9_system(std::int64_t p1, std::int64_t p2, std::int64_t mu_b0,
                          DomainSpec domain) {
  SystemSpec s;
  s.p1 = p1;
  s.p2 = p2;
  s.mu_b0 = mu_b0;
  s.a9 = true;
  s.domain = std::move(domain);
  if (mu_b0 > 0) s.b1.push_back({0.0, mu_b0, Rational(0)});
  if (p1 - mu_b0 > 0) s.b1.push_back({1.0, p1 - mu_b0, Rational(1)});
  if (p2 > 0) s.b2.push_back({1.0, p2, Rational(1)});
  return s;
}

void Interval::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw ValidationError("window must be bounded");
  if (lo > hi) throw ValidationError("window lower end exceeds upper end");
}

double required_eigenvalue_bound(const SystemSpec& spec, const Interval& window) {
  return std::max(std::abs(window.lo), std::abs(window.hi)) * max_abs_b(spec);
}

Spectrum resolve_spectrum(const SystemSpec& spec, double bound, const Tolerances& tol,
                          RootCache* cache) {
  if (spec.domain.kind == DomainKind::Disk) {
    // Slack keeps an eigenvalue sitting exactly on the bound inside the computed range.
    const double max_ev = std::max(1.0, bound * (1.0 + 1e-6) + 1e-9);
    return make_disk_spectrum(max_ev, tol, cache);
  }
  if (!spec.domain.supplied) {
    throw ValidationError("the " + to_string(spec.domain.kind) +
                          " domain requires a supplied spectrum");
  }
  spec.domain.supplied->require_coverage(bound);
  return *spec.domain.supplied;
}

std::vector<LinearizationEigenvalue> linearization_eigenvalues(const SystemSpec& spec,
                                                               const Spectrum& spectrum,
                                                               double lambda, std::size_t k_max) {
  if (k_max < 1) throw PreconditionError("k_max must be >= 1");
  if (k_max > spectrum.entries.size()) {
    throw PreconditionError("spectrum holds only " + std::to_string(spectrum.entries.size()) +
                            " eigenvalues, " + std::to_string(k_max) + " requested");
  }
  std::vector<LinearizationEigenvalue> out;
  for (std::size_t k = 0; k < k_max; ++k) {
    const auto& e = spectrum.entries[k];
    const std::int64_t dim = e.rep.real_dimension(spectrum.dim);
    for (Block block : {Block::B1, Block::B2}) {
      const auto& bs = block == Block::B1 ? spec.b1 : spec.b2;
      const double a = block == Block::B1 ? e.eigenvalue : -e.eigenvalue;
      for (const auto& b : bs) {
        LinearizationEigenvalue ev;
        ev.value = (a - lambda * b.value) / (1.0 + e.eigenvalue);
        ev.multiplicity = dim * b.mult;
        ev.entry = k;
        ev.block = block;
        ev.b = b.value;
        ev.alpha = e.eigenvalue;
        ev.lambda = lambda;
        ev.orbit_direction = e.eigenvalue == 0.0 && b.value == 0.0;
        out.push_back(ev);
      }
    }
  }
  return out;
}

bool is_normal_kernel(const LinearizationEigenvalue& ev, double merge_tol) {
  if (ev.orbit_direction || ev.b == 0.0) return false;
  const double target = ev.block == Block::B1 ? ev.alpha : -ev.alpha;
  return nearly_equal(ev.lambda * ev.b, target, merge_tol);
}

std::vector<double> lambda_set(const SystemSpec& spec, const Spectrum& spectrum,
                               const Interval& window, const Tolerances& tol) {
  window.validate();
  spectrum.require_coverage(required_eigenvalue_bound(spec, window));
  std::vector<Candidate> found;
  for (Block block : {Block::B1, Block::B2}) {
    const auto& bs = block == Block::B1 ? spec.b1 : spec.b2;
    for (const auto& b : bs) {
      if (b.value == 0.0) continue;
      for (const auto& e : spectrum.entries) {
        const auto c = candidate(e, b, block);
        if (window.contains(c.value)) found.push_back(c);
      }
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.value < b.value; });
  std::vector<Candidate> merged;
  for (auto& c : found) {
    if (!merged.empty()) {
      const auto& last = merged.back();
      const bool same = (last.exact && c.exact) ? *last.exact == *c.exact
                                                : nearly_equal(last.value, c.value, tol.merge);
      if (same) continue;
    }
    merged.push_back(std::move(c));
  }
  std::vector<double> out;
  out.reserve(merged.size());
  for (const auto& c : merged) out.push_back(c.value);
  return out;
}

KernelReps kernel_reps(const SystemSpec& spec, const Spectrum& spectrum, double lambda0,
                       const Tolerances& tol) {
  spectrum.require_coverage(std::abs(lambda0) * max_abs_b(spec));
  KernelReps k;
  for (Block block : {Block::B1, Block::B2}) {
    const auto& bs = block == Block::B1 ? spec.b1 : spec.b2;
    auto& target = block == Block::B1 ? k.v1 : k.v2;
    for (const auto& b : bs) {
      if (b.value == 0.0) continue;
      for (const auto& e : spectrum.entries) {
        const double a = block == Block::B1 ? e.eigenvalue : -e.eigenvalue;
        if (nearly_equal(lambda0 * b.value, a, tol.merge)) target += e.rep.repeated(b.mult);
      }
    }
  }
  return k;
}

double epsilon_gap(double lambda0, const std::vector<double>& members, double merge_tol) {
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (nearly_equal(members[i], lambda0, merge_tol)) {
      at = i;
      break;
    }
  }
  if (!at) {
    std::ostringstream os;
    os << "lambda0 = " << lambda0 << " is not a member of the parameter set";
    throw NotAMember(os.str());
  }
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i == *at) continue;
    gap = std::min(gap, std::abs(members[i] - members[*at]));
  }
  return std::isfinite(gap) ? gap / 2.0 : 1.0;
}

}  // namespace eqbif
