#pragma once

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace taftcross {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<BigInt> cyclotomic_polynomial(int n);

int euler_phi(int n);

namespace detail {
struct FieldInfo;
const FieldInfo& field_info(int order);
}  // namespace detail

/// An exact element of Q(zeta_L), stored as a polynomial in zeta_L of degree
/// below phi(L) with a common positive denominator.
///
/// The representation at a fixed order is canonical: two scalars of the same
/// order are equal iff their stored data is identical. Scalars of different
/// orders are compared (and combined) in the field of order lcm.
class CycScalar {
 public:
  CycScalar();  // zero, order 1
  CycScalar(long long value);  // NOLINT(google-explicit-constructor)
  explicit CycScalar(const BigRational& value);

  static CycScalar from_coeffs(int order, const std::vector<BigRational>& coeffs);
  static CycScalar zeta(int order, long long exponent);

  int order() const;
  int degree() const;
  BigRational coeff(int i) const;
  std::vector<BigRational> coeffs() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  /// The same field element represented in Q(zeta_target); order() must divide target.
  CycScalar embed(int target) const;

  CycScalar inverse() const;
  CycScalar pow(long long e) const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  CycScalar operator-() const;

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  /// Human-readable form, e.g. "1 - 2*z12^3 + 1/2*z12".
  std::string to_string() const;

 private:
  using Coeffs = boost::container::small_vector<BigInt, 4>;

  CycScalar(const detail::FieldInfo* field, Coeffs num, BigInt den);
  void normalize();
  void add_scaled(const CycScalar& o, int sign);
  CycScalar scaled(const BigInt& num, const BigInt& den) const;
  static int common_order(const CycScalar& a, const CycScalar& b);

  const detail::FieldInfo* field_;
  Coeffs num_;
  BigInt den_;
};

enum class FieldOp { add, negate, multiply, invert };

/// Dispatches one field operation; b is ignored for unary operations.
CycScalar field_arith(FieldOp op, const CycScalar& a, const CycScalar& b = CycScalar());

/// zeta_L^(k mod L).
CycScalar root_of_unity(int order, long long k);

/// Smallest t >= 1 with a^t = 1, or nullopt when a is not a root of unity.
std::optional<int> multiplicative_order(const CycScalar& a);

/// The d-th roots of unity zeta_L^(L/d * j), j = 0..d-1, inside Q(zeta_L).
std::vector<CycScalar> roots_of_unity_group(int d, int ambient_order);

/// The d-th roots of unity available in Q(zeta_L): equals d whenever d | L.
int nu(int d, int ambient_order);

BigRational parse_rational(const std::string& text);

}  // namespace taftcross
