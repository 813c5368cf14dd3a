#include "eqbif/euler_so2.hpp"

#include <sstream>

#include "eqbif/errors.hpp"

namespace eqbif {

EulerSO2::EulerSO2(Integer unit, CyclicMap cyclic)
    : unit_(std::move(unit)), cyclic_(std::move(cyclic)) {
  for (const auto& [k, c] : cyclic_) {
    if (k < 1) throw ValidationError("cyclic class key must be >= 1, got " + std::to_string(k));
  }
  prune();
}

EulerSO2 EulerSO2::cyclic(std::int64_t k, Integer coeff) {
  CyclicMap m;
  m.emplace(k, std::move(coeff));
  return EulerSO2(0, std::move(m));
}

Integer EulerSO2::cyclic_coeff(std::int64_t k) const {
  auto it = cyclic_.find(k);
  return it == cyclic_.end() ? Integer(0) : it->second;
}

void EulerSO2::prune() {
  std::erase_if(cyclic_, [](const auto& kv) { return kv.second == 0; });
}

EulerSO2& EulerSO2::operator+=(const EulerSO2& other) {
  unit_ += other.unit_;
  for (const auto& [k, c] : other.cyclic_) cyclic_[k] += c;
  prune();
  return *this;
}

EulerSO2& EulerSO2::operator-=(const EulerSO2& other) {
  unit_ -= other.unit_;
  for (const auto& [k, c] : other.cyclic_) cyclic_[k] -= c;
  prune();
  return *this;
}

EulerSO2& EulerSO2::operator*=(const EulerSO2& other) {
  CyclicMap out;
  for (const auto& [k, c] : cyclic_) out[k] += other.unit_ * c;
  for (const auto& [k, c] : other.cyclic_) out[k] += unit_ * c;
  unit_ *= other.unit_;
  cyclic_ = std::move(out);
  prune();
  return *this;
}

EulerSO2 operator*(const Integer& s, EulerSO2 a) { return a *= EulerSO2::scalar(s); }

EulerSO2 EulerSO2::operator-() const {
  EulerSO2 r = *this;
  r.unit_ = -r.unit_;
  for (auto& [k, c] : r.cyclic_) c = -c;
  return r;
}

std::string EulerSO2::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Integer& c, const std::string& basis) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag << '*';
    os << basis;
    first = false;
  };
  if (unit_ != 0) term(unit_, "I");
  for (const auto& [k, c] : cyclic_) term(c, "chi_" + std::to_string(k));
  return os.str();
}

EulerSO2 add(const EulerSO2& a, const EulerSO2& b) { return a + b; }
EulerSO2 mul(const EulerSO2& a, const EulerSO2& b) { return a * b; }

EulerSO2 invert(const EulerSO2& a) {
  if (!a.is_invertible()) {
    throw NotInvertible("element " + a.to_string() + " has unit coefficient outside {+1, -1}");
  }
  // (u; c) * (u; -c) = (u^2; -u c + u c) = I since u^2 = 1.
  EulerSO2::CyclicMap c;
  for (const auto& [k, v] : a.cyclic_coeffs()) c.emplace(k, -v);
  return EulerSO2(a.unit_coeff(), std::move(c));
}

EulerSO2 pow(const EulerSO2& a, std::int64_t n) {
  EulerSO2 base = n < 0 ? invert(a) : a;
  std::uint64_t e = n < 0 ? std::uint64_t(-(n + 1)) + 1 : std::uint64_t(n);
  EulerSO2 result = EulerSO2::unit();
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

SO2Rep SO2Rep::rotation(std::int64_t k, std::int64_t mult) {
  SO2Rep r;
  if (mult != 0) r.rotation_mults.emplace(k, mult);
  return r;
}

std::int64_t SO2Rep::dimension() const {
  std::int64_t d = trivial_dim;
  for (const auto& [k, m] : rotation_mults) d += 2 * m;
  return d;
}

SO2Rep& SO2Rep::operator+=(const SO2Rep& other) {
  trivial_dim += other.trivial_dim;
  for (const auto& [k, m] : other.rotation_mults) rotation_mults[k] += m;
  std::erase_if(rotation_mults, [](const auto& kv) { return kv.second == 0; });
  return *this;
}

SO2Rep SO2Rep::repeated(std::int64_t n) const {
  if (n < 0) throw ValidationError("negative repetition count");
  SO2Rep r;
  if (n == 0) return r;
  r.trivial_dim = trivial_dim * n;
  for (const auto& [k, m] : rotation_mults) r.rotation_mults.emplace(k, m * n);
  return r;
}

void SO2Rep::validate() const {
  if (trivial_dim < 0) throw ValidationError("trivial dimension must be non-negative");
  for (const auto& [k, m] : rotation_mults) {
    if (k < 1) throw ValidationError("rotation number must be >= 1");
    if (m < 1) throw ValidationError("rotation multiplicity must be >= 1");
  }
}

std::string SO2Rep::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (trivial_dim > 0) {
    os << "R^" << trivial_dim;
    first = false;
  }
  for (const auto& [k, m] : rotation_mults) {
    if (!first) os << " + ";
    os << "R[" << k << ',' << m << ']';
    first = false;
  }
  return os.str();
}

EulerSO2 deg_minus_id(const SO2Rep& v) {
  v.validate();
  EulerSO2::CyclicMap c;
  for (const auto& [k, m] : v.rotation_mults) c.emplace(k, -Integer(m));
  EulerSO2 d(1, std::move(c));
  return (v.trivial_dim % 2 == 0) ? d : -d;
}

bool rep_equiv_mod_even_trivial(const SO2Rep& v, const SO2Rep& w) {
  return v.rotation_mults == w.rotation_mults && (v.trivial_dim - w.trivial_dim) % 2 == 0;
}

}  // namespace eqbif
