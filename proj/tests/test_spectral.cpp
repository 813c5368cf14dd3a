#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "eqbif/bessel.hpp"
#include "eqbif/errors.hpp"
#include "eqbif/root_cache.hpp"
#include "eqbif/spectral.hpp"
#include "support.hpp"

using namespace eqbif;
using eqbif::testing::kFrozenNeumannRoots;
using eqbif::testing::oracle_neumann_roots;
using eqbif::testing::quad_bessel_j;
using eqbif::testing::quad_bessel_j_prime;

TEST(Bessel, AgreesWithQuadrature) {
  for (int n = 0; n <= 8; ++n) {
    for (double x = 0.0; x <= 60.0; x += 0.37) {
      ASSERT_NEAR(bessel_j(n, x), quad_bessel_j(n, x), 1e-12) << "n=" << n << " x=" << x;
      ASSERT_NEAR(bessel_j_prime(n, x), quad_bessel_j_prime(n, x), 1e-12)
          << "n=" << n << " x=" << x;
    }
  }
}

TEST(Bessel, HighOrdersAgreeWithQuadrature) {
  for (int n : {12, 20, 35, 50}) {
    for (double x = 0.5; x <= 90.0; x += 0.61) {
      ASSERT_NEAR(bessel_j(n, x), quad_bessel_j(n, x), 1e-12) << "n=" << n << " x=" << x;
      ASSERT_NEAR(bessel_j_prime(n, x), quad_bessel_j_prime(n, x), 1e-12)
          << "n=" << n << " x=" << x;
    }
  }
}

TEST(Bessel, SeriesAndRecurrenceAgreeOnOverlap) {
  for (int n = 0; n <= 6; ++n) {
    for (double x = 0.05; x <= 12.0; x += 0.25) {
      ASSERT_NEAR(bessel_j_series(n, x), bessel_j_recurrence(n, x), 1e-13);
    }
  }
  for (double nu : {0.5, 1.5, 2.5}) {
    for (double x = 0.05; x <= 12.0; x += 0.25) {
      ASSERT_NEAR(bessel_j_series(nu, x), bessel_j_recurrence(nu, x), 1e-13);
    }
  }
}

TEST(Bessel, HalfIntegerClosedForms) {
  for (double x = 0.1; x < 40.0; x += 0.7) {
    const double j12 = std::sqrt(2.0 / (M_PI * x)) * std::sin(x);
    const double j32 = std::sqrt(2.0 / (M_PI * x)) * (std::sin(x) / x - std::cos(x));
    ASSERT_NEAR(bessel_j(0.5, x), j12, 1e-13);
    ASSERT_NEAR(bessel_j(1.5, x), j32, 1e-13);
  }
}

TEST(Bessel, ValueAtZero) {
  EXPECT_EQ(bessel_j(0, 0.0), 1.0);
  EXPECT_EQ(bessel_j(3, 0.0), 0.0);
  EXPECT_EQ(bessel_j_prime(1, 0.0), 0.5);
}

TEST(Bessel, DomainErrors) {
  EXPECT_THROW(bessel_j(0, -1.0), DomainError);
  EXPECT_THROW(bessel_j(0.3, 1.0), DomainError);
  EXPECT_THROW(bessel_j(-1, 1.0), DomainError);
}

TEST(Oracle, MatchesFrozenReference) {
  for (int l = 0; l <= 5; ++l) {
    const auto r = oracle_neumann_roots(l, 10);
    for (int k = 0; k < 10; ++k) ASSERT_NEAR(r[k], kFrozenNeumannRoots[l][k], 1e-11);
  }
}

TEST(RadialRoots, FirstTenMatchOracle) {
  for (int l = 0; l <= 5; ++l) {
    const auto roots = neumann_radial_roots(l, 2, 10);
    const auto oracle = oracle_neumann_roots(l, 10);
    ASSERT_EQ(roots.size(), 10u);
    for (int k = 0; k < 10; ++k) {
      EXPECT_NEAR(roots[k], oracle[k], 1e-9) << "l=" << l << " k=" << k;
      EXPECT_LT(std::abs(bessel_j_prime(l, roots[k])), 1e-10);
    }
  }
}

TEST(RadialRoots, FirstZeroOfJ0IsNotANeumannRoot) {
  const auto roots = neumann_radial_roots(0, 2, 1);
  EXPECT_NEAR(roots[0], 3.83170597, 1e-8);
  EXPECT_GT(std::abs(roots[0] - 2.40482556), 1.0);
}

TEST(RadialRoots, BallLZeroAreZerosOfJThreeHalves) {
  const auto roots = neumann_radial_roots(0, 3, 3);
  EXPECT_NEAR(roots[0], 4.493409457909064, 1e-10);
  EXPECT_NEAR(roots[1], 7.725251836937707, 1e-10);
  EXPECT_NEAR(roots[2], 10.90412165942890, 1e-10);
}

TEST(RadialRoots, BallHigherAngularIndexUnsupported) {
  EXPECT_THROW(neumann_radial_roots(1, 3, 2), UnsupportedDomain);
  EXPECT_THROW(radial_condition(2, 4, 1.0), UnsupportedDomain);
}

TEST(RadialRoots, TolerancesRespected) {
  Tolerances loose{1e-6, 1e-8};
  const auto a = neumann_radial_roots(1, 2, 5, loose);
  const auto b = neumann_radial_roots(1, 2, 5);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 2e-6);
}

TEST(RadialRoots, LargeAngularIndexHasNoMissingRoots) {
  // Consecutive extrema of J_l interlace with its zeros; every gap between
  // reported roots must contain exactly one sign change of J_l.
  for (int l : {10, 20, 35}) {
    const auto roots = neumann_radial_roots(l, 2, 12);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
      EXPECT_LT(bessel_j(l, roots[i]) * bessel_j(l, roots[i + 1]), 0.0);
    }
    EXPECT_GT(roots[0], l);
  }
}

TEST(DiskSpectrum, FirstEigenvaluesAndLabels) {
  const auto s = disk_spectrum(20.0);
  ASSERT_GE(s.size(), 5u);
  EXPECT_EQ(s[0].eigenvalue, 0.0);
  EXPECT_EQ(s[0].rep, RepDescriptor::trivial(1));
  const double expected[] = {3.38995772, 9.32836321, 14.68197064, 17.64998852};
  const RepDescriptor reps[] = {RepDescriptor::irreducible(1), RepDescriptor::irreducible(2),
                                RepDescriptor::trivial(1), RepDescriptor::irreducible(3)};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(s[i + 1].eigenvalue, expected[i], 1e-7);
    EXPECT_EQ(s[i + 1].rep, reps[i]);
  }
  EXPECT_EQ(s[3].angular_index, 0);
  EXPECT_EQ(s[3].root_index, 1);
}

TEST(DiskSpectrum, CompleteUpToBound) {
  const double bound = 400.0;
  const auto s = disk_spectrum(bound);
  // Count eigenvalues by brute force over angular indices using the oracle path.
  std::size_t count = 1;
  for (int l = 0; l * l <= bound; ++l) {
    for (double x : oracle_neumann_roots(l, 8)) {
      if (x * x <= bound) ++count;
    }
  }
  EXPECT_EQ(s.size(), count);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LT(s[i - 1].eigenvalue, s[i].eigenvalue);
}

TEST(DiskSpectrum, CacheRoundTripAndStaleness) {
  const auto path = std::filesystem::temp_directory_path() / "eqbif_test_cache.json";
  std::filesystem::remove(path);
  std::vector<SpectrumEntry> first;
  {
    RootCache cache(path, {});
    first = disk_spectrum(60.0, {}, &cache);
    EXPECT_TRUE(cache.dirty());
    cache.save();
  }
  {
    RootCache cache(path, {});
    EXPECT_FALSE(cache.was_stale());
    EXPECT_EQ(disk_spectrum(60.0, {}, &cache), first);
    EXPECT_FALSE(cache.dirty());
  }
  {
    RootCache cache(path, Tolerances{1e-10, 1e-8});
    EXPECT_TRUE(cache.was_stale());
    EXPECT_EQ(disk_spectrum(60.0, Tolerances{1e-10, 1e-8}, &cache).size(), first.size());
  }
  {
    std::ofstream(path) << "not json";
    RootCache cache(path, {});
    EXPECT_TRUE(cache.was_stale());
  }
  std::filesystem::remove(path);
}

TEST(MergeSpectrum, SumsRepresentations) {
  std::vector<SpectrumEntry> e(2);
  e[0].eigenvalue = 5.0;
  e[0].rep = RepDescriptor::irreducible(1);
  e[1].eigenvalue = 5.0 + 1e-12;
  e[1].rep = RepDescriptor::trivial(1);
  const auto m = merge_spectrum(e, 1e-8);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].rep, RepDescriptor::trivial(1) + RepDescriptor::irreducible(1));
}

TEST(RepDescriptor, HarmonicDimensions) {
  EXPECT_EQ(harmonic_dimension(2, 5), 2);
  EXPECT_EQ(harmonic_dimension(3, 0), 1);
  EXPECT_EQ(harmonic_dimension(3, 1), 3);
  EXPECT_EQ(harmonic_dimension(3, 2), 5);
  EXPECT_EQ(harmonic_dimension(4, 2), 9);
  EXPECT_EQ((RepDescriptor{1, {{2, 2}}}).real_dimension(3), 11);
}

TEST(RepDescriptor, EquivalenceModEvenTrivial) {
  EXPECT_TRUE(equivalent_mod_even_trivial(RepDescriptor::trivial(2), RepDescriptor{}));
  EXPECT_FALSE(equivalent_mod_even_trivial(RepDescriptor::trivial(1), RepDescriptor{}));
  EXPECT_FALSE(equivalent_mod_even_trivial(RepDescriptor::irreducible(1), RepDescriptor{}));
}

TEST(BallNontriviality, RadialTest) {
  SpectrumEntry zero;
  EXPECT_FALSE(ball_rep_nontrivial(zero, 3));
  SpectrumEntry radial;
  radial.eigenvalue = 4.493409457909064 * 4.493409457909064;
  EXPECT_FALSE(ball_rep_nontrivial(radial, 3));
  SpectrumEntry other;
  other.eigenvalue = 2.0815759778181 * 2.0815759778181;  // first zero of j_1'
  EXPECT_TRUE(ball_rep_nontrivial(other, 3));
  SpectrumEntry labelled;
  labelled.eigenvalue = 20.19;
  labelled.angular_index = 1;
  EXPECT_TRUE(ball_rep_nontrivial(labelled, 3));
  EXPECT_THROW(ball_rep_nontrivial(other, 2), PreconditionError);
}

TEST(CustomSpectrum, LoadsAndValidates) {
  const auto doc = nlohmann::json::parse(R"({
    "domain": "ball", "dim": 3, "complete_up_to": 25,
    "entries": [
      {"eigenvalue": 0, "rep": {"trivial": 1}},
      {"eigenvalue": 4.3330, "rep": {"irreps": {"1": 1}}, "angular_index": 1, "root_index": 1},
      {"eigenvalue": 20.1907, "rep": {"trivial": 1}, "angular_index": 0, "root_index": 1}
    ]})");
  const auto s = load_custom_spectrum(doc);
  EXPECT_EQ(s.kind, DomainKind::Ball);
  EXPECT_EQ(s.dim, 3);
  EXPECT_EQ(s.entries.size(), 3u);
  EXPECT_EQ(s.entries[0].exact, Rational(0));
  EXPECT_NO_THROW(s.require_coverage(25.0));
  EXPECT_THROW(s.require_coverage(26.0), InsufficientSpectrum);
}

TEST(CustomSpectrum, Rejections) {
  using nlohmann::json;
  EXPECT_THROW(load_custom_spectrum(json::parse(R"({"entries": 3})")), SchemaError);
  EXPECT_THROW(load_custom_spectrum(json::parse(R"({"domain": "torus", "entries": []})")),
               SchemaError);
  EXPECT_THROW(load_custom_spectrum(json::parse(
                   R"({"entries": [{"eigenvalue": 1, "rep": {"trivial": 1}}]})")),
               ValidationError);
  EXPECT_THROW(load_custom_spectrum(json::parse(
                   R"({"entries": [{"eigenvalue": 0, "rep": {"trivial": 2}}]})")),
               ValidationError);
  EXPECT_THROW(load_custom_spectrum(json::parse(R"({"entries": [
                   {"eigenvalue": 0, "rep": {"trivial": 1}},
                   {"eigenvalue": 5, "rep": {"trivial": 1}},
                   {"eigenvalue": 3, "rep": {"trivial": 1}}]})")),
               ValidationError);
  EXPECT_THROW(load_custom_spectrum(json::parse(R"({"entries": [
                   {"eigenvalue": 0, "rep": {"trivial": 1}},
                   {"eigenvalue": -2, "rep": {"trivial": 1}}]})")),
               ValidationError);
}
