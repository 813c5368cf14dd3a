#pragma once

// Bessel functions of the first kind for the orders the Neumann problem on
// balls needs: nonnegative integers and positive half-integers.
//
// Two evaluation paths are provided. The ascending power series is summed in
// extended precision and is used for x <= max(12, 2 nu). Beyond that the
// backward (Miller) recurrence is used: for integer orders it is normalized
// by J_0 + 2 sum_k J_2k = 1, for half-integer orders by the closed forms of
// the spherical Bessel functions j_0 and j_1.

namespace eqbif {

/// True iff 2*nu is a nonnegative integer.
bool is_supported_bessel_order(double nu);

/// J_nu(x). Throws DomainError for x < 0 or an unsupported order.
double bessel_j(double nu, double x);

/// J_nu'(x) = (J_{nu-1}(x) - J_{nu+1}(x)) / 2, with J_0' = -J_1.
/// For nu = 1/2 the form nu/x J_nu - J_{nu+1} is used; it is +inf at x = 0.
double bessel_j_prime(double nu, double x);

/// Ascending series alone, no dispatch.
double bessel_j_series(double nu, double x);

/// Backward recurrence alone, no dispatch.
double bessel_j_recurrence(double nu, double x);

}  // namespace eqbif
