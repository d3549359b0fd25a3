#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace crosscap {

// Expression templates are disabled: Eigen builds its own expression trees
// and the two do not compose.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

/// Fixed 2x2 integer matrix used for GL2(Z) basis changes of binary forms.
using Transform2 = Eigen::Matrix<Integer, 2, 2>;

/// Field of fractions used when an algorithm needs division.
template <typename Scalar>
struct FieldOf {
  using type = Scalar;
};
template <>
struct FieldOf<Integer> {
  using type = Rational;
};
template <>
struct FieldOf<std::int64_t> {
  using type = Rational;
};
template <typename Scalar>
using FieldOf_t = typename FieldOf<Scalar>::type;

inline int sign(const Integer& x) { return x.sign(); }
inline int sign(const Rational& x) { return x.sign(); }

inline Integer abs_value(const Integer& x) { return x.sign() < 0 ? Integer(-x) : x; }

/// Floor division for signed integers (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

/// Least non-negative residue of a modulo m (m != 0).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer am = abs_value(m);
  Integer r = a % am;
  if (r < 0) r += am;
  return r;
}

/// Largest r with r*r <= n (n >= 0).
inline Integer isqrt(const Integer& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Integer& n, Integer* root = nullptr) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

inline std::string to_string(const Integer& x) { return x.str(); }
std::string to_string(const Rational& x);

/// Narrowing conversion that throws if the value does not fit.
std::int64_t to_int64(const Integer& x);

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n) {
  Matrix<Scalar> m = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

}  // namespace crosscap
