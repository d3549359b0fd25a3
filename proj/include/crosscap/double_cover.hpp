#pragma once

// First homology of the double branched cover, presented by a Goeritz
// matrix, and the linking form on it when it is finite cyclic.

#include "crosscap/linalg.hpp"
#include "crosscap/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crosscap {

/// Finitely generated abelian group as invariant factors d1 | d2 | ...,
/// each > 1, with 0 standing for a free summand (zeros last).
struct FinAbGroup {
  std::vector<Integer> invariant_factors;

  bool finite() const;
  bool cyclic() const { return finite() && invariant_factors.size() <= 1; }
  /// Group order, or 0 when infinite.
  Integer order() const;
  int free_rank() const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

std::string to_string(const FinAbGroup& g);

FinAbGroup homology_from_goeritz(const SymIntMatrix& g);
FinAbGroup cokernel(const IntMatrix& m);

int min_generators(const FinAbGroup& g);

/// lambda(g,g) = numerator/order in Q/Z on a generator of Z/order.
struct LinkingForm {
  Integer order{1};
  Integer numerator{0};  ///< normalized to 0 <= numerator < order

  LinkingForm() = default;
  LinkingForm(Integer n, Integer a);

  friend bool operator==(const LinkingForm&, const LinkingForm&) = default;
};

std::string to_string(const LinkingForm& f);

/// Evaluates G^{-1} on the generator U^{-1} e_last coming from the Smith
/// decomposition U G V = diag(1,...,1,n).
LinkingForm linking_form(const SymIntMatrix& g);

/// The generator used by linking_form, as an integer vector.
IntVector linking_form_generator(const SymIntMatrix& g);

/// True iff u^2 a1 = +-a2 (mod n) for some unit u.
bool linking_forms_equivalent(const LinkingForm& f1, const LinkingForm& f2);

}  // namespace crosscap
