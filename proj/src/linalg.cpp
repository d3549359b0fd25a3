#include "crosscap/linalg.hpp"

namespace crosscap {

IntMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != c) throw Error(ErrorCode::InvalidInput, "ragged matrix literal");
    Eigen::Index j = 0;
    for (long v : row) m(i, j++) = Integer(v);
    ++i;
  }
  return m;
}

SymIntMatrix::SymIntMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorCode::InvalidInput, "symmetric matrix must be square");
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i))
        throw Error(ErrorCode::NotSymmetric, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                 ") differs from its transpose");
}

SymIntMatrix::SymIntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : SymIntMatrix(make_matrix(rows)) {}

SymIntMatrix SymIntMatrix::diagonal(const std::vector<Integer>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return SymIntMatrix(std::move(m));
}

IntMatrix unimodular_inverse(const IntMatrix& p) {
  if (!is_unimodular(p)) throw Error(ErrorCode::NonUnimodular, "matrix is not unimodular");
  const RatMatrix inv = inverse(p);
  IntMatrix out(p.rows(), p.cols());
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      if (boost::multiprecision::denominator(inv(i, j)) != 1)
        throw Error(ErrorCode::InvariantViolation, "inverse of a unimodular matrix is not integral");
      out(i, j) = boost::multiprecision::numerator(inv(i, j));
    }
  return out;
}

SymIntMatrix congruent_transform(const SymIntMatrix& j, const IntMatrix& p) {
  if (p.rows() != j.dim() || p.cols() != j.dim())
    throw Error(ErrorCode::InvalidInput, "transform dimension does not match the form");
  if (!is_unimodular(p)) throw Error(ErrorCode::NonUnimodular, "det(P) must be +1 or -1");
  return SymIntMatrix(IntMatrix(p.transpose() * j.matrix() * p));
}

}  // namespace crosscap
