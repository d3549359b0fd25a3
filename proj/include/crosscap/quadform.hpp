#pragma once

// Integral binary quadratic forms q(x,y) = a x^2 + 2 b x y + c y^2, i.e. the
// symmetric matrix ((a,b),(b,c)), up to GL2(Z) congruence.

#include "crosscap/linalg.hpp"
#include "crosscap/scalar.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crosscap {

struct BinaryForm {
  Integer a, b, c;

  BinaryForm() = default;
  BinaryForm(Integer a_, Integer b_, Integer c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

  static BinaryForm from_matrix(const SymIntMatrix& m);

  Integer det() const { return a * c - b * b; }
  /// b^2 - ac; a quarter of the classical discriminant.
  Integer disc() const { return b * b - a * c; }

  bool positive_definite() const { return det() > 0 && a > 0; }
  bool negative_definite() const { return det() > 0 && a < 0; }
  bool definite() const { return det() > 0; }

  Integer value(const Integer& x, const Integer& y) const { return a * x * x + 2 * b * x * y + c * y * y; }
  Integer bilinear(const Integer& x1, const Integer& y1, const Integer& x2, const Integer& y2) const {
    return a * x1 * x2 + b * (x1 * y2 + y1 * x2) + c * y1 * y2;
  }

  SymIntMatrix matrix() const;
  BinaryForm operator-() const { return {-a, -b, -c}; }

  friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c;
  }
  friend bool operator<(const BinaryForm& f, const BinaryForm& g) {
    if (f.a != g.a) return f.a < g.a;
    if (f.b != g.b) return f.b < g.b;
    return f.c < g.c;
  }
};

std::string to_string(const BinaryForm& f);

/// P^T f P.
BinaryForm transform(const BinaryForm& f, const Transform2& p);

struct Reduction {
  BinaryForm form;
  Transform2 P;  ///< P^T f P == form, det P = +-1
};

/// Canonical representative of the GL2(Z) class of f, with a witness.
Reduction reduce_with_transform(const BinaryForm& f);
inline BinaryForm reduce(const BinaryForm& f) { return reduce_with_transform(f).form; }

/// True for the reduced forms of an indefinite class (the cycle members).
bool is_indefinite_reduced(const BinaryForm& f);

/// Reduced forms in the cycle of an already reduced indefinite form.
std::vector<Reduction> indefinite_cycle(const BinaryForm& reduced);

enum class DefiniteSigns { PositiveOnly, Both };

struct FormClassSet {
  Integer det;
  std::vector<BinaryForm> representatives;  ///< canonical, sorted ascending
};

/// All GL2(Z) classes of determinant det. For det > 0 the default lists only
/// positive definite classes; pass DefiniteSigns::Both to add their negatives.
FormClassSet enumerate_classes(const Integer& det, DefiniteSigns signs = DefiniteSigns::PositiveOnly);

/// Unimodular P with P^T f P == g, if the forms are congruent.
std::optional<Transform2> congruent(const BinaryForm& f, const BinaryForm& g);

using Point2 = std::pair<Integer, Integer>;

struct RepresentResult {
  std::vector<Point2> solutions;  ///< sorted ascending
  bool complete = true;           ///< false for a bounded search on an indefinite form
};

constexpr long kDefaultRepresentBound = 100;

/// Integer solutions of q_f(x,y) == n. Exhaustive when f is definite; for an
/// indefinite f only |x|,|y| <= bound are searched.
RepresentResult represent(const BinaryForm& f, const Integer& n, long bound = kDefaultRepresentBound);

/// Smallest modulus 2 <= m <= max_modulus for which q_f(x,y) == n has no
/// solution mod m. Such an m proves there are no integer solutions at all.
std::optional<long> local_obstruction(const BinaryForm& f, const Integer& n, long max_modulus = 64);

}  // namespace crosscap
