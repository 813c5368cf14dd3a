#pragma once

// Exact arithmetic in the Euler ring U(SO(2)).
//
// U(SO(2)) is free abelian on the conjugacy classes of closed subgroups of
// SO(2): the group itself (the ring unit I) and the finite cyclic groups Z_k.
// An element is stored as the coefficient of I together with a sparse map
// k -> coefficient of Z_k. Products obey
//
//   (u_a; c_a) * (u_b; c_b) = (u_a u_b; u_a c_b + u_b c_a),
//
// i.e. Z_j * Z_k = 0 and I is the unit.

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqbif {

using Integer = boost::multiprecision::cpp_int;

class EulerSO2 {
 public:
  using CyclicMap = std::map<std::int64_t, Integer>;

  EulerSO2() = default;
  EulerSO2(Integer unit, CyclicMap cyclic);

  static EulerSO2 zero() { return {}; }
  static EulerSO2 unit() { return EulerSO2(1, {}); }
  /// coeff * chi_k, the class of SO(2)/Z_k.
  static EulerSO2 cyclic(std::int64_t k, Integer coeff = 1);
  static EulerSO2 scalar(Integer u) { return EulerSO2(std::move(u), {}); }

  const Integer& unit_coeff() const { return unit_; }
  const CyclicMap& cyclic_coeffs() const { return cyclic_; }
  /// Zero when k is not stored.
  Integer cyclic_coeff(std::int64_t k) const;

  bool is_zero() const { return unit_ == 0 && cyclic_.empty(); }
  bool is_invertible() const { return unit_ == 1 || unit_ == -1; }

  EulerSO2& operator+=(const EulerSO2& other);
  EulerSO2& operator-=(const EulerSO2& other);
  EulerSO2& operator*=(const EulerSO2& other);

  friend EulerSO2 operator+(EulerSO2 a, const EulerSO2& b) { return a += b; }
  friend EulerSO2 operator-(EulerSO2 a, const EulerSO2& b) { return a -= b; }
  friend EulerSO2 operator*(EulerSO2 a, const EulerSO2& b) { return a *= b; }
  friend EulerSO2 operator*(const Integer& s, EulerSO2 a);
  EulerSO2 operator-() const;

  friend bool operator==(const EulerSO2&, const EulerSO2&) = default;

  std::string to_string() const;

 private:
  void prune();

  Integer unit_ = 0;
  CyclicMap cyclic_;
};

EulerSO2 add(const EulerSO2& a, const EulerSO2& b);
EulerSO2 mul(const EulerSO2& a, const EulerSO2& b);
/// Throws NotInvertible unless the unit coefficient is +1 or -1.
EulerSO2 invert(const EulerSO2& a);
/// pow(a, 0) is the unit; negative exponents go through invert().
EulerSO2 pow(const EulerSO2& a, std::int64_t n);

/// Orthogonal SO(2)-representation: t copies of R plus m_k copies of the
/// 2-dimensional irreducible on which SO(2) rotates with speed k.
struct SO2Rep {
  std::int64_t trivial_dim = 0;
  std::map<std::int64_t, std::int64_t> rotation_mults;

  static SO2Rep trivial(std::int64_t t) { return {t, {}}; }
  static SO2Rep rotation(std::int64_t k, std::int64_t mult = 1);

  std::int64_t dimension() const;
  bool is_zero() const { return trivial_dim == 0 && rotation_mults.empty(); }

  /// Direct sum.
  SO2Rep& operator+=(const SO2Rep& other);
  friend SO2Rep operator+(SO2Rep a, const SO2Rep& b) { return a += b; }
  /// n-fold direct sum of this representation with itself.
  SO2Rep repeated(std::int64_t n) const;

  friend bool operator==(const SO2Rep&, const SO2Rep&) = default;

  /// Throws ValidationError on negative dimensions or non-positive keys/multiplicities.
  void validate() const;
  std::string to_string() const;
};

/// Equivariant gradient degree of -Id on the unit ball of V:
/// (-1)^t (I - sum_k m_k chi_k).
EulerSO2 deg_minus_id(const SO2Rep& v);

/// V (+) R^{2m} ~ W (+) R^{2n} for some m, n.
bool rep_equiv_mod_even_trivial(const SO2Rep& v, const SO2Rep& w);

}  // namespace eqbif
