#include "crosscap/double_cover.hpp"

#include "crosscap/error.hpp"

namespace crosscap {

bool FinAbGroup::finite() const {
  for (const Integer& d : invariant_factors)
    if (d == 0) return false;
  return true;
}

Integer FinAbGroup::order() const {
  Integer n(1);
  for (const Integer& d : invariant_factors) n *= d;
  return n;
}

int FinAbGroup::free_rank() const {
  int r = 0;
  for (const Integer& d : invariant_factors) r += d == 0 ? 1 : 0;
  return r;
}

std::string to_string(const FinAbGroup& g) {
  if (g.invariant_factors.empty()) return "0";
  std::string out;
  for (const Integer& d : g.invariant_factors) {
    if (!out.empty()) out += " + ";
    out += d == 0 ? std::string("Z") : "Z/" + d.str();
  }
  return out;
}

FinAbGroup cokernel(const IntMatrix& m) {
  FinAbGroup g;
  if (m.rows() == 0) return g;
  const auto snf = smith_normal_form(m);
  for (const Integer& d : snf.invariant_factors())
    if (d != 1) g.invariant_factors.push_back(d);
  // Rows beyond the column count are free summands too.
  for (Eigen::Index i = m.cols(); i < m.rows(); ++i) g.invariant_factors.push_back(Integer(0));
  return g;
}

FinAbGroup homology_from_goeritz(const SymIntMatrix& g) { return cokernel(g.matrix()); }

int min_generators(const FinAbGroup& g) { return static_cast<int>(g.invariant_factors.size()); }

LinkingForm::LinkingForm(Integer n, Integer a) : order(std::move(n)), numerator(std::move(a)) {
  if (order <= 0) throw Error(ErrorCode::InvalidInput, "linking form order must be positive");
  numerator = mod_floor(numerator, order);
}

std::string to_string(const LinkingForm& f) { return f.numerator.str() + "/" + f.order.str(); }

IntVector linking_form_generator(const SymIntMatrix& g) {
  const Eigen::Index n = g.dim();
  if (n == 0) return IntVector();
  if (determinant(g.matrix()) == 0) throw Error(ErrorCode::SingularMatrix, "Goeritz matrix is singular; H1 is infinite");
  const auto snf = smith_normal_form(g.matrix());
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    if (snf.D(i, i) != 1)
      throw Error(ErrorCode::NonCyclic, "cokernel " + to_string(cokernel(g.matrix())) + " is not cyclic");
  const IntMatrix u_inv = unimodular_inverse(snf.U);
  return u_inv.col(n - 1);
}

LinkingForm linking_form(const SymIntMatrix& g) {
  if (g.dim() == 0) return {};
  const IntVector gen = linking_form_generator(g);
  const Integer order = abs_value(determinant(g.matrix()));
  const RatVector x = gen.cast<Rational>();
  const Rational value = (x.transpose() * inverse(g.matrix()) * x)(0, 0) * Rational(order);
  if (boost::multiprecision::denominator(value) != 1)
    throw Error(ErrorCode::InvariantViolation, "linking form value is not in (1/n)Z");
  return LinkingForm(order, boost::multiprecision::numerator(value));
}

bool linking_forms_equivalent(const LinkingForm& f1, const LinkingForm& f2) {
  if (f1.order != f2.order)
    throw Error(ErrorCode::OrderMismatch, "orders " + f1.order.str() + " and " + f2.order.str() + " differ");
  const Integer& n = f1.order;
  if (n == 1) return true;
  const Integer minus = mod_floor(-f2.numerator, n);
  for (Integer u = 1; u < n; ++u) {
    if (gcd(u, n) != 1) continue;
    const Integer v = mod_floor(u * u * f1.numerator, n);
    if (v == f2.numerator || v == minus) return true;
  }
  return false;
}

}  // namespace crosscap
