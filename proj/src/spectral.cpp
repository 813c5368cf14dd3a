#include "eqbif/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>

#include "eqbif/bessel.hpp"
#include "eqbif/errors.hpp"
#include "eqbif/root_cache.hpp"
#include "eqbif/serialization.hpp"

namespace eqbif {

void Tolerances::validate() const {
  if (!(root > 0.0) || !(merge > 0.0) || !std::isfinite(root) || !std::isfinite(merge)) {
    throw ValidationError("tolerances must be positive and finite");
  }
}

bool nearly_equal(double a, double b, double tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) < tol * scale;
}

// ---------------------------------------------------------------------------
// RepDescriptor

RepDescriptor RepDescriptor::irreducible(std::int64_t label, std::int64_t mult) {
  RepDescriptor r;
  if (mult != 0) r.irreducibles.emplace(label, mult);
  return r;
}

std::int64_t harmonic_dimension(int n, std::int64_t l) {
  if (n < 2) throw ValidationError("ambient dimension must be >= 2");
  if (l < 0) throw ValidationError("harmonic degree must be >= 0");
  if (l == 0) return 1;
  if (n == 2) return 2;
  // C(l+n-1, n-1) - C(l+n-3, n-1)
  auto binom = [](std::int64_t a, std::int64_t b) -> std::int64_t {
    if (b < 0 || a < b) return 0;
    b = std::min(b, a - b);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  return binom(l + n - 1, n - 1) - binom(l + n - 3, n - 1);
}

std::int64_t RepDescriptor::real_dimension(int n) const {
  std::int64_t d = trivial_dim;
  for (const auto& [l, m] : irreducibles) d += m * harmonic_dimension(n, l);
  return d;
}

RepDescriptor& RepDescriptor::operator+=(const RepDescriptor& other) {
  trivial_dim += other.trivial_dim;
  for (const auto& [l, m] : other.irreducibles) irreducibles[l] += m;
  std::erase_if(irreducibles, [](const auto& kv) { return kv.second == 0; });
  return *this;
}

RepDescriptor RepDescriptor::repeated(std::int64_t n) const {
  if (n < 0) throw ValidationError("negative repetition count");
  RepDescriptor r;
  if (n == 0) return r;
  r.trivial_dim = trivial_dim * n;
  for (const auto& [l, m] : irreducibles) r.irreducibles.emplace(l, m * n);
  return r;
}

void RepDescriptor::validate() const {
  if (trivial_dim < 0) throw ValidationError("trivial dimension must be non-negative");
  for (const auto& [l, m] : irreducibles) {
    if (l < 1) throw ValidationError("irreducible label must be >= 1, got " + std::to_string(l));
    if (m < 1) throw ValidationError("irreducible multiplicity must be >= 1");
  }
}

std::string RepDescriptor::to_string() const { return to_so2().to_string(); }

bool equivalent_mod_even_trivial(const RepDescriptor& a, const RepDescriptor& b) {
  return rep_equiv_mod_even_trivial(a.to_so2(), b.to_so2());
}

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::Disk: return "disk";
    case DomainKind::Ball: return "ball";
    case DomainKind::Custom: return "custom";
  }
  return "unknown";
}

void Spectrum::require_coverage(double bound) const {
  if (bound > complete_up_to) {
    std::ostringstream os;
    os << "eigenvalues up to " << bound << " are required but the " << eqbif::to_string(kind)
       << " spectrum is only known up to " << complete_up_to;
    throw InsufficientSpectrum(os.str());
  }
}

std::optional<std::size_t> Spectrum::find(double alpha, double tol) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (nearly_equal(entries[i].eigenvalue, alpha, tol)) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Radial roots

namespace {

double radial_order_shift(int dim) { return (dim - 2) / 2.0; }

void check_radial_args(int l, int dim) {
  if (dim < 2) throw ValidationError("ambient dimension must be >= 2");
  if (l < 0) throw ValidationError("angular index must be >= 0");
  if (dim >= 3 && l >= 1) {
    throw UnsupportedDomain("radial condition for angular index >= 1 on the " +
                            std::to_string(dim) + "-ball is not available; supply the spectrum");
  }
}

// Roots of the radial condition are the extrema of x^{-nu} J_{l+nu}(x), so
// its sign must alternate from one root to the next. The first positive
// extremum is a maximum for l >= 1 and a minimum for l = 0.
double envelope_sign(int l, int dim, double x) {
  return bessel_j(l + radial_order_shift(dim), x);
}

int sgn(double v) { return (v > 0) - (v < 0); }

double bisect(int l, int dim, double lo, double hi, double flo, const Tolerances& tol) {
  const int slo = sgn(flo);
  for (int iter = 0; iter < 400; ++iter) {
    if (hi - lo <= tol.root) return 0.5 * (lo + hi);
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double fm = radial_condition(l, dim, mid);
    if (!std::isfinite(fm)) {
      throw ConvergenceError("radial condition evaluated to a non-finite value at x = " +
                             std::to_string(mid));
    }
    if (fm == 0.0) return mid;
    if (sgn(fm) == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  throw ConvergenceError("bisection failed to refine bracket [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
}

// Grid scan of (a, b] with step h, then bisection of every sign change.
std::vector<double> scan(int l, int dim, double a, double b, double h, const Tolerances& tol) {
  std::vector<double> roots;
  double x_prev = a;
  double f_prev = radial_condition(l, dim, x_prev);
  if (f_prev == 0.0) {
    // a is itself a root; nudge off it so the scan sees the next sign change.
    x_prev = a + tol.root;
    f_prev = radial_condition(l, dim, x_prev);
  }
  int s_prev = sgn(f_prev);
  while (x_prev < b) {
    const double x_next = std::min(x_prev + h, b);
    const double f_next = radial_condition(l, dim, x_next);
    if (!std::isfinite(f_next)) {
      throw ConvergenceError("radial condition evaluated to a non-finite value at x = " +
                             std::to_string(x_next));
    }
    if (f_next == 0.0) {
      roots.push_back(x_next);
      s_prev = -s_prev;
    } else if (sgn(f_next) != s_prev) {
      roots.push_back(bisect(l, dim, x_prev, x_next, s_prev, tol));
      s_prev = sgn(f_next);
    }
    x_prev = x_next;
  }
  return roots;
}

// Insert missed roots by rescanning with a halved step wherever the
// envelope sign fails to alternate.
std::vector<double> repair(int l, int dim, double start, std::vector<double> roots, double h,
                           const Tolerances& tol) {
  constexpr double kMinStep = 1e-5;
  const int first_sign = (l == 0) ? -1 : 1;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const int s = sgn(envelope_sign(l, dim, roots[i]));
    const int expected = (i == 0) ? first_sign : -sgn(envelope_sign(l, dim, roots[i - 1]));
    if (s == expected) continue;
    const double lo = (i == 0) ? start : roots[i - 1];
    const double hi = roots[i];
    // Stay clear of the known roots at both ends of the gap.
    const double margin = 1e-7 * std::max(1.0, hi);
    std::vector<double> extra;
    for (double step = h / 2; extra.empty(); step /= 2) {
      if (step < kMinStep) {
        throw ConvergenceError("root interlacing violated near x = " + std::to_string(hi) +
                               " for l = " + std::to_string(l));
      }
      extra = scan(l, dim, lo + margin, hi - margin, step, tol);
    }
    roots.insert(roots.begin() + static_cast<std::ptrdiff_t>(i), extra.begin(), extra.end());
    return repair(l, dim, start, std::move(roots), h, tol);
  }
  return roots;
}

std::vector<double> roots_up_to(int l, int dim, double x_max, const Tolerances& tol) {
  const double start = kRootGridStep;
  if (x_max <= start) return {};
  // Scan one extra step so a root sitting right at x_max is bracketed.
  auto roots = scan(l, dim, start, x_max + kRootGridStep, kRootGridStep, tol);
  roots = repair(l, dim, start, std::move(roots), kRootGridStep, tol);
  std::erase_if(roots, [&](double x) { return x > x_max; });
  return roots;
}

}  // namespace

double radial_condition(int angular_index, int dim, double x) {
  check_radial_args(angular_index, dim);
  if (dim == 2) return bessel_j_prime(angular_index, x);
  const double nu = radial_order_shift(dim);
  if (x == 0.0) return 0.0;
  return bessel_j_prime(nu, x) - nu / x * bessel_j(nu, x);
}

std::vector<double> neumann_radial_roots_below(int angular_index, int dim, double x_max,
                                               const Tolerances& tol) {
  check_radial_args(angular_index, dim);
  tol.validate();
  return roots_up_to(angular_index, dim, x_max, tol);
}

std::vector<double> neumann_radial_roots(int angular_index, int dim, int count,
                                         const Tolerances& tol) {
  check_radial_args(angular_index, dim);
  tol.validate();
  if (count < 1) throw ValidationError("root count must be >= 1");
  // Consecutive roots are roughly pi apart; grow the window until enough are found.
  double x_max = angular_index + (count + 2) * 3.5;
  for (;;) {
    auto roots = roots_up_to(angular_index, dim, x_max, tol);
    if (static_cast<int>(roots.size()) >= count) {
      roots.resize(static_cast<std::size_t>(count));
      return roots;
    }
    x_max *= 1.5;
  }
}

// ---------------------------------------------------------------------------
// Spectra

std::vector<SpectrumEntry> merge_spectrum(std::vector<SpectrumEntry> entries, double merge_tol) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.eigenvalue < b.eigenvalue; });
  std::vector<SpectrumEntry> out;
  for (auto& e : entries) {
    if (!out.empty() && nearly_equal(out.back().eigenvalue, e.eigenvalue, merge_tol)) {
      auto& keep = out.back();
      keep.rep += e.rep;
      if (!(keep.exact && e.exact && *keep.exact == *e.exact)) keep.exact.reset();
      continue;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SpectrumEntry> disk_spectrum(double max_eigenvalue, const Tolerances& tol,
                                         RootCache* cache) {
  if (!(max_eigenvalue > 0.0) || !std::isfinite(max_eigenvalue)) {
    throw ValidationError("max_eigenvalue must be positive and finite");
  }
  tol.validate();
  const double x_max = std::sqrt(max_eigenvalue);
  // The first root of J_l' exceeds l, so angular indices above sqrt(max) contribute nothing.
  const int l_max = static_cast<int>(std::floor(x_max));

  std::vector<std::vector<double>> roots(static_cast<std::size_t>(l_max) + 1);
  std::vector<std::future<std::vector<double>>> pending(roots.size());
  for (int l = 0; l <= l_max; ++l) {
    if (cache) {
      if (auto hit = cache->lookup(2, l, x_max)) {
        roots[static_cast<std::size_t>(l)] = std::move(*hit);
        continue;
      }
    }
    pending[static_cast<std::size_t>(l)] =
        std::async(std::launch::async, [l, x_max, tol] { return roots_up_to(l, 2, x_max, tol); });
  }
  for (int l = 0; l <= l_max; ++l) {
    auto& f = pending[static_cast<std::size_t>(l)];
    if (!f.valid()) continue;
    roots[static_cast<std::size_t>(l)] = f.get();
    if (cache) cache->store(2, l, x_max, roots[static_cast<std::size_t>(l)]);
  }

  std::vector<SpectrumEntry> entries;
  SpectrumEntry zero;
  zero.eigenvalue = 0.0;
  zero.exact = Rational(0);
  zero.angular_index = 0;
  zero.rep = RepDescriptor::trivial(1);
  entries.push_back(zero);
  for (int l = 0; l <= l_max; ++l) {
    const auto& rl = roots[static_cast<std::size_t>(l)];
    for (std::size_t k = 0; k < rl.size(); ++k) {
      const double alpha = rl[k] * rl[k];
      if (alpha > max_eigenvalue) break;
      SpectrumEntry e;
      e.eigenvalue = alpha;
      e.angular_index = l;
      e.root_index = static_cast<int>(k) + 1;
      e.rep = (l == 0) ? RepDescriptor::trivial(1) : RepDescriptor::irreducible(l, 1);
      entries.push_back(std::move(e));
    }
  }
  return merge_spectrum(std::move(entries), tol.merge);
}

Spectrum make_disk_spectrum(double max_eigenvalue, const Tolerances& tol, RootCache* cache) {
  Spectrum s;
  s.kind = DomainKind::Disk;
  s.dim = 2;
  s.entries = disk_spectrum(max_eigenvalue, tol, cache);
  s.complete_up_to = max_eigenvalue;
  return s;
}

bool ball_rep_nontrivial(const SpectrumEntry& entry, int dim, const Tolerances& tol) {
  if (dim < 3) throw PreconditionError("ball_rep_nontrivial requires dimension >= 3");
  if (entry.eigenvalue == 0.0) return false;
  if (entry.angular_index && *entry.angular_index >= 1) return true;
  const double x = std::sqrt(entry.eigenvalue);
  for (double r : neumann_radial_roots_below(0, dim, x + 1.0, tol)) {
    if (nearly_equal(r * r, entry.eigenvalue, tol.merge)) return false;
  }
  return true;
}

Spectrum load_custom_spectrum(const nlohmann::json& doc, const Tolerances& tol) {
  tol.validate();
  Spectrum s;
  s.kind = DomainKind::Custom;
  std::vector<SpectrumEntry> raw;
  try {
    if (!doc.is_object()) throw SchemaError("custom spectrum must be a JSON object");
    if (doc.contains("domain")) {
      const auto d = doc.at("domain").get<std::string>();
      if (d == "ball") {
        s.kind = DomainKind::Ball;
      } else if (d != "custom") {
        throw SchemaError("custom spectrum domain must be \"custom\" or \"ball\", got \"" + d + "\"");
      }
    }
    s.dim = doc.value("dim", s.kind == DomainKind::Ball ? 3 : 2);
    if (!doc.contains("entries") || !doc.at("entries").is_array()) {
      throw SchemaError("custom spectrum requires an \"entries\" array");
    }
    for (const auto& item : doc.at("entries")) {
      if (!item.is_object()) throw SchemaError("spectrum entry must be an object");
      if (!item.contains("eigenvalue") || !item.at("eigenvalue").is_number()) {
        throw SchemaError("spectrum entry requires a numeric \"eigenvalue\"");
      }
      if (!item.contains("rep")) throw SchemaError("spectrum entry requires \"rep\"");
      SpectrumEntry e;
      const auto& ev = item.at("eigenvalue");
      e.eigenvalue = ev.get<double>();
      if (ev.is_number_integer()) e.exact = Rational(ev.get<std::int64_t>());
      e.rep = item.at("rep").get<RepDescriptor>();
      if (item.contains("angular_index")) e.angular_index = item.at("angular_index").get<int>();
      if (item.contains("root_index")) e.root_index = item.at("root_index").get<int>();
      raw.push_back(std::move(e));
    }
    if (doc.contains("complete_up_to")) {
      s.complete_up_to = doc.at("complete_up_to").get<double>();
    } else if (!raw.empty()) {
      s.complete_up_to = raw.back().eigenvalue;
    }
  } catch (const nlohmann::json::exception& ex) {
    throw SchemaError(std::string("malformed custom spectrum: ") + ex.what());
  }

  if (s.dim < 2) throw ValidationError("custom spectrum dimension must be >= 2");
  bool has_zero = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& e = raw[i];
    if (!std::isfinite(e.eigenvalue) || e.eigenvalue < 0.0) {
      throw ValidationError("eigenvalues must be finite and non-negative");
    }
    e.rep.validate();
    if (e.rep.is_zero()) throw ValidationError("eigenspace representation must be nonzero");
    if (i > 0 && e.eigenvalue < raw[i - 1].eigenvalue &&
        !nearly_equal(e.eigenvalue, raw[i - 1].eigenvalue, tol.merge)) {
      throw ValidationError("spectrum entries must be listed in ascending order");
    }
    if (e.angular_index && *e.angular_index < 0) {
      throw ValidationError("angular_index must be non-negative");
    }
    if (e.root_index && *e.root_index < 1) throw ValidationError("root_index must be positive");
    if (nearly_equal(e.eigenvalue, 0.0, tol.merge)) {
      if (has_zero) throw ValidationError("the zero eigenvalue is listed more than once");
      has_zero = true;
      if (!(e.rep == RepDescriptor::trivial(1))) {
        throw ValidationError("the zero eigenspace must be the trivial representation R");
      }
    }
  }
  if (!has_zero) throw ValidationError("a Neumann spectrum must contain the eigenvalue 0");
  for (auto& e : raw) {
    if (nearly_equal(e.eigenvalue, 0.0, tol.merge)) {
      e.eigenvalue = 0.0;
      e.exact = Rational(0);
      e.angular_index = 0;
    }
  }
  s.entries = merge_spectrum(std::move(raw), tol.merge);
  return s;
}

}  // namespace eqbif
