#pragma once

// Exact integer/rational matrix algebra on Eigen dense types.
//
// Everything here is templated on the scalar so the same routines run on
// arbitrary-precision Integer/Rational and, in tests, on std::int64_t.
// No floating point is involved anywhere.

#include "crosscap/error.hpp"
#include "crosscap/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace crosscap {

/// Square symmetric integer matrix. Symmetry is checked once at construction.
class SymIntMatrix {
 public:
  SymIntMatrix() = default;
  explicit SymIntMatrix(IntMatrix m);
  SymIntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static SymIntMatrix diagonal(const std::vector<Integer>& entries);

  const IntMatrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Integer& operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  friend bool operator==(const SymIntMatrix& a, const SymIntMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_.cols() == b.m_.cols() && a.m_ == b.m_;
  }

 private:
  IntMatrix m_;
};

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows);

template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U;  ///< row transform, det +-1
  Matrix<Scalar> D;  ///< diagonal, d1 | d2 | ... , zeros last, all >= 0
  Matrix<Scalar> V;  ///< column transform, det +-1

  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
Scalar abs_of(const Scalar& x) {
  return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
void swap_rows(Matrix<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.row(a).swap(m.row(b));
}

template <typename Scalar>
void swap_cols(Matrix<Scalar>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b) m.col(a).swap(m.col(b));
}

}  // namespace detail

/// Smith normal form with transforms: U * M * V == D.
///
/// Pivoting always picks the nonzero entry of smallest absolute value in the
/// remaining block, which keeps intermediate entries small.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index rows = input.rows();
  const Eigen::Index cols = input.cols();
  if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidInput, "smith_normal_form: empty matrix");

  Matrix<Scalar> a = input;
  Matrix<Scalar> u = identity<Scalar>(rows);
  Matrix<Scalar> v = identity<Scalar>(cols);

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    for (;;) {
      Eigen::Index pi = -1, pj = -1;
      Scalar best(0);
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (a(i, j) == Scalar(0)) continue;
          Scalar mag = detail::abs_of(a(i, j));
          if (pi < 0 || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return {std::move(u), std::move(a), std::move(v)};

      detail::swap_rows(a, t, pi);
      detail::swap_rows(u, t, pi);
      detail::swap_cols(a, t, pj);
      detail::swap_cols(v, t, pj);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        Scalar q = a(i, t) / a(t, t);
        if (q != Scalar(0)) {
          a.row(i) -= q * a.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (a(i, t) != Scalar(0)) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        Scalar q = a(t, j) / a(t, t);
        if (q != Scalar(0)) {
          a.col(j) -= q * a.col(t);
          v.col(j) -= q * v.col(t);
        }
        if (a(t, j) != Scalar(0)) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide everything left; otherwise pull the offending
      // row up and go round again with a strictly smaller pivot.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != Scalar(0)) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        a.row(t) += a.row(bad);
        u.row(t) += u.row(bad);
        continue;
      }
      break;
    }
    if (a(t, t) < Scalar(0)) {
      a.row(t) = -a.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw Error(ErrorCode::InvalidInput, "determinant: matrix not square");
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = input;
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index swap_with = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != Scalar(0)) {
          swap_with = i;
          break;
        }
      if (swap_with < 0) return Scalar(0);
      detail::swap_rows(m, k, swap_with);
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

/// Signature (#positive - #negative eigenvalues) of a symmetric matrix,
/// via congruence diagonalization over the rationals.
///
/// Diagonal pivots are taken when available; if every remaining diagonal
/// entry is zero but the block is not, a hyperbolic 2x2 block [[0,b],[b,0]]
/// is split off (contributing 0). Zero eigenvalues contribute 0.
template <typename Derived>
int signature(const Eigen::MatrixBase<Derived>& input) {
  using Field = FieldOf_t<typename Derived::Scalar>;
  if (input.rows() != input.cols()) throw Error(ErrorCode::InvalidInput, "signature: matrix not square");
  const Eigen::Index n = input.rows();
  Matrix<Field> a = input.template cast<Field>();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) throw Error(ErrorCode::NotSymmetric, "signature: matrix not symmetric");

  auto sym_swap = [&a](Eigen::Index x, Eigen::Index y) {
    detail::swap_rows(a, x, y);
    detail::swap_cols(a, x, y);
  };

  int result = 0;
  Eigen::Index k = 0;
  while (k < n) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (a(i, i) != Field(0)) {
        pivot = i;
        break;
      }
    if (pivot >= 0) {
      sym_swap(k, pivot);
      const Field d = a(k, k);
      result += d > Field(0) ? 1 : -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) == Field(0)) continue;
        const Field f = a(i, k) / d;
        for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      }
      for (Eigen::Index i = k + 1; i < n; ++i) a(i, k) = a(k, i) = Field(0);
      ++k;
      continue;
    }

    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = k; i < n && pi < 0; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (a(i, j) != Field(0)) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;  // remaining block is zero

    sym_swap(k, pi);
    sym_swap(k + 1, pj == k ? pi : pj);
    const Field b = a(k, k + 1);
    // Schur complement of [[0,b],[b,0]]; its inverse is [[0,1/b],[1/b,0]].
    for (Eigen::Index i = k + 2; i < n; ++i)
      for (Eigen::Index j = k + 2; j < n; ++j)
        a(i, j) -= (a(i, k) * a(k + 1, j) + a(i, k + 1) * a(k, j)) / b;
    for (Eigen::Index i = k + 2; i < n; ++i) {
      a(i, k) = a(k, i) = Field(0);
      a(i, k + 1) = a(k + 1, i) = Field(0);
    }
    k += 2;
  }
  return result;
}

inline int signature(const SymIntMatrix& s) { return signature(s.matrix()); }

/// Exact inverse over the field of fractions (Gauss-Jordan).
template <typename Derived>
Matrix<FieldOf_t<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& input) {
  using Field = FieldOf_t<typename Derived::Scalar>;
  if (input.rows() != input.cols()) throw Error(ErrorCode::InvalidInput, "inverse: matrix not square");
  const Eigen::Index n = input.rows();
  Matrix<Field> a = input.template cast<Field>();
  Matrix<Field> inv = identity<Field>(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (a(i, k) != Field(0)) {
        p = i;
        break;
      }
    if (p < 0) throw Error(ErrorCode::SingularMatrix, "inverse: matrix is singular");
    detail::swap_rows(a, k, p);
    detail::swap_rows(inv, k, p);
    const Field d = a(k, k);
    a.row(k) /= d;
    inv.row(k) /= d;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k) == Field(0)) continue;
      const Field f = a(i, k);
      a.row(i) -= f * a.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  return inv;
}

template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  if (p.rows() != p.cols() || p.rows() == 0) return false;
  const Scalar d = determinant(p);
  return d == Scalar(1) || d == Scalar(-1);
}

/// Integer inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& p);

/// P^T J P. Throws NonUnimodular unless det(P) = +-1.
SymIntMatrix congruent_transform(const SymIntMatrix& j, const IntMatrix& p);

/// Sum of all entries; for a 2x2 Goeritz matrix this is the value of its
/// form on (1,1).
inline Integer entry_sum(const IntMatrix& m) { return m.sum(); }

}  // namespace crosscap
