#pragma once

// Test-only helpers: an independent Bessel evaluation path, a root oracle
// built on it, and small random generators.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "eqbif/euler_so2.hpp"
#include "eqbif/spectral.hpp"

namespace eqbif::testing {

// Bessel's integral J_n(x) = (1/pi) int_0^pi cos(n t - x sin t) dt, by the
// trapezoidal rule over the full period, which converges geometrically once
// the node count exceeds x + n.
inline double quad_bessel_j(int n, double x) {
  const int m = 64 + 2 * static_cast<int>(std::ceil(x + n));
  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    const double t = 2.0 * std::numbers::pi * i / m;
    s += std::cos(n * t - x * std::sin(t));
  }
  return s / m;
}

// d/dx of the same integral: (1/pi) int_0^pi sin t sin(n t - x sin t) dt.
inline double quad_bessel_j_prime(int n, double x) {
  const int m = 64 + 2 * static_cast<int>(std::ceil(x + n));
  double s = 0.0;
  for (int i = 0; i < m; ++i) {
    const double t = 2.0 * std::numbers::pi * i / m;
    s += std::sin(t) * std::sin(n * t - x * std::sin(t));
  }
  return s / m;
}

// First `count` positive zeros of J_n' from a fine scan plus plain bisection.
// The first zero of J_n' exceeds n, and below that the quadrature sits at
// rounding noise for larger n, so the scan starts at n.
inline std::vector<double> oracle_neumann_roots(int n, int count) {
  std::vector<double> roots;
  const double h = 0.01;
  double a = std::max(h, static_cast<double>(n));
  double fa = quad_bessel_j_prime(n, a);
  while (static_cast<int>(roots.size()) < count) {
    const double b = a + h;
    const double fb = quad_bessel_j_prime(n, b);
    if ((fa < 0) != (fb < 0)) {
      double lo = a, hi = b, flo = fa;
      for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = quad_bessel_j_prime(n, mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

inline Integer random_integer(std::mt19937_64& rng, int lo = -5, int hi = 5) {
  return Integer(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline EulerSO2 random_euler(std::mt19937_64& rng, int max_key = 6, int max_terms = 4) {
  EulerSO2::CyclicMap c;
  const int terms = std::uniform_int_distribution<int>(0, max_terms)(rng);
  for (int i = 0; i < terms; ++i) {
    c[std::uniform_int_distribution<int>(1, max_key)(rng)] += random_integer(rng);
  }
  return EulerSO2(random_integer(rng), std::move(c));
}

inline EulerSO2 random_invertible(std::mt19937_64& rng) {
  auto x = random_euler(rng);
  const Integer u = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
  return EulerSO2(u, x.cyclic_coeffs());
}

inline SO2Rep random_rep(std::mt19937_64& rng, int max_trivial = 4, int max_key = 5) {
  SO2Rep r;
  r.trivial_dim = std::uniform_int_distribution<int>(0, max_trivial)(rng);
  const int terms = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < terms; ++i) {
    r.rotation_mults[std::uniform_int_distribution<int>(1, max_key)(rng)] +=
        std::uniform_int_distribution<int>(1, 3)(rng);
  }
  return r;
}

// Every representation with trivial_dim <= t_max and rotation keys 1..k_max
// carrying multiplicities 0..m_max.
inline std::vector<SO2Rep> all_reps(int t_max, int k_max, int m_max) {
  std::vector<SO2Rep> out;
  std::vector<int> mults(static_cast<std::size_t>(k_max), 0);
  for (;;) {
    for (int t = 0; t <= t_max; ++t) {
      SO2Rep r;
      r.trivial_dim = t;
      for (int k = 0; k < k_max; ++k) {
        if (mults[static_cast<std::size_t>(k)] > 0) {
          r.rotation_mults[k + 1] = mults[static_cast<std::size_t>(k)];
        }
      }
      out.push_back(std::move(r));
    }
    int i = 0;
    while (i < k_max && mults[static_cast<std::size_t>(i)] == m_max) {
      mults[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == k_max) break;
    ++mults[static_cast<std::size_t>(i)];
  }
  return out;
}

// First ten zeros of J_l' for l = 0..5 from an external reference
// implementation, frozen as a cross-check of the quadrature oracle.
inline const double kFrozenNeumannRoots[6][10] = {
    {3.8317059702075125, 7.015586669815619, 10.173468135062722, 13.323691936314223, 16.47063005087763,
     19.615858510468243, 22.760084380592772, 25.903672087618382, 29.046828534916855, 32.189679910974405},
    {1.8411837813406595, 5.3314427735250325, 8.536316366346286, 11.706004902592063, 14.863588633909034,
     18.015527862681804, 21.164369859188792, 24.311326857210776, 27.457050571059245, 30.601922972669094},
    {3.0542369282271404, 6.706133194158459, 9.969467823087596, 13.170370856016124, 16.347522318321783,
     19.512912782488204, 22.671581772477428, 25.826037141785264, 28.977672772993678, 32.127327020443474},
    {4.201188941210528, 8.015236598375953, 11.345924310743007, 14.585848286167028, 17.78874786606647,
     20.9724769365377, 24.144897432909264, 27.310057930204348, 30.470268806290424, 33.62694918279668},
    {5.317553126083994, 9.282396285241614, 12.68190844263889, 15.96410703773155, 19.196028800048907,
     22.401032267689004, 25.589759681386735, 28.767836217666503, 31.938539340972785, 35.10391667734677},
    {6.415616375700241, 10.519860873772307, 13.9871886301403, 17.312842487884627, 20.57551452138689,
     23.803581476593862, 27.01030789777772, 30.20284907898166, 33.38544390101012, 36.56077768688036},
};

}  // namespace eqbif::testing
