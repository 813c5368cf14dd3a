// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eqbif/bessel.hpp"
#include "eqbif/bifurcation.hpp"
#include "eqbif/errors.hpp"
#include "eqbif/morse_degree.hpp"
#include "eqbif/spectral.hpp"
#include "support.hpp"

using namespace eqbif;
using namespace eqbif::testing;

namespace {

const EulerSO2 I = EulerSO2::unit();
EulerSO2 chi(std::int64_t k, Integer c = 1) { return EulerSO2::cyclic(k, std::move(c)); }

// Collects the first few failures of a criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
  template <class T>
  static std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
  }
};

const Spectrum& disk() {
  static const Spectrum s = make_disk_spectrum(200.0);
  return s;
}

void criterion_1(Check& c) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_euler(rng), b = random_euler(rng), d = random_euler(rng);
    c.expect(a + b == b + a && (a + b) + d == a + (b + d), "additive laws");
    c.expect(a * b == b * a && (a * b) * d == a * (b * d), "multiplicative laws");
    c.expect(a * (b + d) == a * b + a * d, "distributivity");
    c.expect(a * I == a && a + (-a) == EulerSO2::zero(), "identities");
    const auto u = random_invertible(rng);
    c.expect(u * invert(u) == I, "invert law");
    const std::int64_t m = std::uniform_int_distribution<int>(-4, 4)(rng);
    const std::int64_t n = std::uniform_int_distribution<int>(-4, 4)(rng);
    c.expect(pow(u, m) * pow(u, n) == pow(u, m + n), "pow additivity");
    EulerSO2 naive = I;
    for (int k = 0; k < 3; ++k) naive *= a;
    c.expect(pow(a, 3) == naive, "pow repeated product");
  }
}

void criterion_2(Check& c) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const auto v = random_rep(rng), w = random_rep(rng);
    c.expect(deg_minus_id(v + w) == deg_minus_id(v) * deg_minus_id(w), "product law");
  }
  const auto reps = all_reps(3, 4, 3);
  std::vector<EulerSO2> degs;
  for (const auto& r : reps) degs.push_back(deg_minus_id(r));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      c.expect((degs[i] == degs[j]) == rep_equiv_mod_even_trivial(reps[i], reps[j]),
               reps[i].to_string() + " vs " + reps[j].to_string());
    }
  }
}

void criterion_3(Check& c) {
  const Tolerances tol;
  for (int l = 0; l <= 5; ++l) {
    const auto oracle = oracle_neumann_roots(l, 10);
    const auto roots = neumann_radial_roots(l, 2, 10, tol);
    c.expect(roots.size() >= 10, "l=" + std::to_string(l) + " root count");
    for (std::size_t k = 0; k < 10 && k < roots.size(); ++k) {
      c.expect(std::abs(roots[k] - oracle[k]) <= 1e-9,
               "l=" + std::to_string(l) + " k=" + std::to_string(k + 1) + " root " +
                   Check::str(roots[k]) + " vs " + Check::str(oracle[k]));
      c.expect(std::abs(bessel_j_prime(l, roots[k])) < 1e-10,
               "l=" + std::to_string(l) + " residual at " + Check::str(roots[k]));
    }
  }
}

void criterion_4(Check& c) {
  const auto s = make_disk_spectrum(20.0);
  // From the oracle: (l, k) of the four smallest positive roots of J_l'.
  const std::pair<int, int> ids[4] = {{1, 1}, {2, 1}, {0, 1}, {3, 1}};
  const RepDescriptor labels[4] = {RepDescriptor::irreducible(1), RepDescriptor::irreducible(2),
                                   RepDescriptor::trivial(1), RepDescriptor::irreducible(3)};
  const double reported[4] = {3.38996, 9.32836, 14.68197, 17.64999};
  c.expect(s.entries.size() >= 5, "entry count");
  for (int i = 0; i < 4 && static_cast<std::size_t>(i + 1) < s.entries.size(); ++i) {
    const double root = oracle_neumann_roots(ids[i].first, ids[i].second).back();
    const double expected = root * root;
    const auto& e = s.entries[static_cast<std::size_t>(i + 1)];
    c.expect(std::abs(e.eigenvalue - expected) <= 1e-4,
             "eigenvalue " + Check::str(e.eigenvalue) + " vs oracle " + Check::str(expected));
    c.expect(std::abs(e.eigenvalue - reported[i]) <= 1e-4, "eigenvalue vs listed value");
    c.expect(e.rep == labels[i], "label " + e.rep.to_string());
  }
}

bool normal_zero(const SystemSpec& spec, double l) {
  for (const auto& ev : linearization_eigenvalues(spec, disk(), l, disk().entries.size())) {
    if (is_normal_kernel(ev, 1e-8)) return true;
  }
  return false;
}

void criterion_5(Check& c) {
  std::mt19937_64 rng(5);
  std::vector<SystemSpec> systems = {make_a9_system(3, 0, 1), make_a9_system(2, 2, 1),
                                     make_a9_system(1, 1, 1)};
  SystemSpec g;
  g.p1 = 3;
  g.p2 = 2;
  g.mu_b0 = 1;
  g.b1 = {{0.0, 1, Rational(0)}, {0.5, 1, Rational(1, 2)}, {2.25, 1, {}}};
  g.b2 = {{-1.5, 1, Rational(-3, 2)}, {0.8, 1, {}}};
  systems.push_back(g);
  const Interval window{-40.0, 40.0};
  std::uniform_real_distribution<double> lam(window.lo, window.hi);
  for (const auto& spec : systems) {
    const auto members = lambda_set(spec, disk(), window);
    std::vector<double> samples = members;
    for (int i = 0; i < 250; ++i) samples.push_back(lam(rng));
    for (double l : samples) {
      bool in = false;
      for (double m : members) in = in || nearly_equal(m, l, 1e-8);
      const bool kernel = !kernel_reps(spec, disk(), l).is_zero();
      c.expect(in == kernel && kernel == normal_zero(spec, l), "three-way at " + Check::str(l));
    }
  }
  // Under a9: sigma(-Delta), its mirror, or both, depending on which index is positive.
  struct Regime {
    std::int64_t p1, p2, mu;
    bool pos, neg;
  };
  for (const auto& r : {Regime{3, 1, 1, true, true}, Regime{3, 0, 1, true, false},
                        Regime{1, 2, 1, false, true}}) {
    std::vector<double> expected;
    for (const auto& e : disk().entries) {
      if (r.neg && e.eigenvalue != 0.0 && window.contains(-e.eigenvalue)) expected.push_back(-e.eigenvalue);
      if (e.eigenvalue == 0.0 || (r.pos && window.contains(e.eigenvalue))) expected.push_back(e.eigenvalue);
    }
    std::sort(expected.begin(), expected.end());
    const auto got = lambda_set(make_a9_system(r.p1, r.p2, r.mu), disk(), window);
    c.expect(got == expected, "a9 regime p1=" + std::to_string(r.p1) + " p2=" + std::to_string(r.p2));
  }
}

void criterion_6(Check& c) {
  const double a2 = disk().entries[1].eigenvalue;
  const auto v1 = bif_a9(make_a9_system(3, 0, 1), disk(), a2);
  c.expect(v1 == -2 * chi(1), "bif(alpha_2) = " + v1.to_string());
  const auto v2 = bif_a9(make_a9_system(1, 1, 1), disk(), -a2);
  c.expect(v2 == chi(1), "bif(-alpha_2) = " + v2.to_string());
  for (std::int64_t q1 : {1, 2}) {
    for (std::int64_t q2 : {1, 2}) {
      const Integer expected = Integer(q1 % 2 ? -1 : 1) - Integer(q2 % 2 ? -1 : 1);
      const auto v = bif_a9(make_a9_system(q1 + 1, q2, 1), disk(), 0.0);
      c.expect(v == EulerSO2::scalar(expected), "bif(0) q1=" + std::to_string(q1) + " q2=" +
                                                    std::to_string(q2) + ": " + v.to_string());
    }
  }
}

void criterion_7(Check& c) {
  const auto& e1 = disk().entries[1];  // rotation speed 1
  SystemSpec s;
  s.p1 = 1;
  s.p2 = 1;
  s.b1 = {{2.0, 1, Rational(2)}};
  s.b2 = {{-1.0, 1, Rational(-1)}};
  const double l1 = e1.eigenvalue / 2.0;
  auto v = analyze(s, disk(), {l1 - 0.1, l1 + 0.1});
  c.expect(v.size() == 1 && v[0].glob == Glob::Bifurcates, "nontrivial pair bifurcates");

  const auto& e3 = disk().entries[3];
  c.expect(e3.rep == RepDescriptor::trivial(1), "third nonzero eigenspace is trivial");
  SystemSpec t;
  t.p1 = 2;
  t.p2 = 1;
  t.b1 = {{1.0, 2, Rational(1)}};
  t.b2 = {{-3.0, 1, Rational(-3)}};
  v = analyze(t, disk(), {e3.eigenvalue - 0.1, e3.eigenvalue + 0.1});
  c.expect(v.size() == 1 && v[0].glob == Glob::Inconclusive &&
               v[0].justification == Justification::EquivalentModEvenTrivial,
           "even trivial eigenspace is inconclusive");
}

void criterion_8(Check& c) {
  for (std::int64_t q1 = 0; q1 <= 3; ++q1) {
    for (std::int64_t q2 = 0; q2 <= 3; ++q2) {
      const auto spec = make_a9_system(q1 + 1, q2, 1);
      for (int sign : {1, -1}) {
        const std::int64_t own = sign > 0 ? q1 : q2;
        const std::int64_t other = sign > 0 ? q2 : q1;
        const bool licensed = own > 0 && own % 2 == 0 && other % 2 == 0;
        const auto r = unbounded_verdict(spec, true, sign);
        c.expect((r.verdict == Unboundedness::Unbounded) == licensed,
                 "q1=" + std::to_string(q1) + " q2=" + std::to_string(q2) + " sign=" + std::to_string(sign));
      }
    }
  }
}

void criterion_9(Check& c) {
  std::mt19937_64 rng(9);
  const std::vector<std::string> classes = {"SO(2)", "Z_1", "Z_2", "Z_3"};
  auto random_orbits = [&](int n) {
    std::vector<OrbitDatum> d;
    for (int i = 0; i < n; ++i) {
      d.push_back({classes[std::uniform_int_distribution<std::size_t>(0, 3)(rng)],
                   std::uniform_int_distribution<int>(0, 4)(rng)});
    }
    return d;
  };
  for (int i = 0; i < 100; ++i) {
    const auto all = random_orbits(std::uniform_int_distribution<int>(0, 12)(rng));
    const auto cut = static_cast<std::ptrdiff_t>(
        std::uniform_int_distribution<std::size_t>(0, all.size())(rng));
    const auto left = degree_from_orbits({all.begin(), all.begin() + cut});
    const auto right = degree_from_orbits({all.begin() + cut, all.end()});
    c.expect(degree_from_orbits(all) == add_degrees(left, right), "additivity");
  }
  // Every map from three H-labels to three G-labels.
  const std::vector<std::string> h = {"a", "b", "c"}, g = {"x", "y", "z"};
  for (int code = 0; code < 27; ++code) {
    std::map<std::string, std::string> m;
    for (int i = 0, x = code; i < 3; ++i, x /= 3) m[h[static_cast<std::size_t>(i)]] = g[static_cast<std::size_t>(x % 3)];
    std::set<std::string> image;
    for (const auto& [k, v] : m) image.insert(v);
    bool threw = false;
    try {
      lift_degree({{"a", 1}}, ClassTable(m));
    } catch (const NonInjectiveTable&) {
      threw = true;
    }
    c.expect(threw == (image.size() < 3), "table " + std::to_string(code));
  }
  const auto table = ClassTable::identity(classes);
  for (int i = 0; i < 100; ++i) {
    const auto a = degree_from_orbits(random_orbits(3));
    const auto b = degree_from_orbits(random_orbits(3));
    c.expect(compare_orbit_degrees(a, b, table) == (a != b), "compare");
  }
}

void criterion_10(Check& c) {
  const auto spec = make_a9_system(3, 0, 1);
  const auto a2 = bif_a9(spec, disk(), disk().entries[1].eigenvalue);
  const auto a3 = bif_a9(spec, disk(), disk().entries[2].eigenvalue);
  c.expect(a2 == -2 * chi(1) && a3 == -2 * chi(2), "indices " + a2.to_string() + ", " + a3.to_string());
  c.expect(a2 + a3 == -2 * chi(1) - 2 * chi(2), "sum");
  c.expect(rabinowitz_excludes_bounded({a2, a3}), "excludes bounded continuum");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* description;
    std::function<void(Check&)> body;
    double budget_s;
  };
  const std::vector<Criterion> criteria = {
      {1, "Euler ring axioms, inverse and power laws on 1000 random cases", criterion_1, 1.0},
      {2, "deg(-Id) product law and exhaustive equivalence mod even trivial", criterion_2, 0.0},
      {3, "first 10 roots of J_l' (l = 0..5) within 1e-9 of the oracle, residual < 1e-10", criterion_3, 2.0},
      {4, "first four nonzero disk eigenvalues and their labels", criterion_4, 0.0},
      {5, "Lambda three-way consistency and a9 regimes", criterion_5, 0.0},
      {6, "closed-form BIF identities under a9", criterion_6, 0.0},
      {7, "single matched pair bifurcates; even trivial eigenspace inconclusive", criterion_7, 0.0},
      {8, "unboundedness truth table, 32 cases", criterion_8, 0.0},
      {9, "Morse degree additivity, injectivity and comparison", criterion_9, 0.0},
      {10, "Rabinowitz exclusion for q1 = 2 on the disk", criterion_10, 0.0},
  };
  disk();
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& ex) {
      check.failures.push_back(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_s > 0 && secs > cr.budget_s) {
      check.failures.push_back("took " + Check::str(secs) + " s, budget " + Check::str(cr.budget_s) + " s");
    }
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s [%d] %s (%zu checks, %.3f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.description,
                check.cases, secs);
    for (const auto& f : check.failures) std::printf("       %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
