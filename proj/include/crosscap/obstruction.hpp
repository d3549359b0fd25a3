#pragma once

// Can a 2-component link bound a connected non-orientable surface with
// first Betti number 2? Such a surface has a 2x2 Goeritz matrix of the shape
// [[2n+1, 2k], [2k, 2m]]; this module searches the congruence classes that
// could present the link's double-cover homology for one that also satisfies
// the signature and linking-number constraints.

#include "crosscap/double_cover.hpp"
#include "crosscap/linalg.hpp"
#include "crosscap/quadform.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace crosscap {

struct OrientationRecord {
  Integer signature;
  Integer linking_number;
  std::string label;  ///< free-form, e.g. "fwd" / "rev"

  friend bool operator==(const OrientationRecord&, const OrientationRecord&) = default;
};

struct TwoComponentInvariants {
  Integer h1_order;
  std::optional<LinkingForm> linking_form;   ///< present iff H1 is cyclic
  std::vector<Integer> h1_invariant_factors;  ///< optional; used when H1 is not cyclic
  std::array<OrientationRecord, 2> orientations;

  /// Throws InfiniteH1 for order 0 and InvalidInput for other inconsistencies.
  void validate() const;

  friend bool operator==(const TwoComponentInvariants&, const TwoComponentInvariants&) = default;
};

/// The matrix [[2n+1, 2k], [2k, 2m]].
struct Beta2NormalForm {
  Integer n, k, m;

  SymIntMatrix matrix() const;
  friend bool operator==(const Beta2NormalForm&, const Beta2NormalForm&) = default;
};

struct BandQuantities {
  Integer linking_number;
  Integer euler;
};

/// (m + 2k, -2(2n+1 + 4k + 2m)).
BandQuantities band_quantities(const Beta2NormalForm& f);

/// sigma == signature(G) + euler/2. Throws OddEuler for odd euler.
bool gl_signature_check(const Integer& sigma, const SymIntMatrix& g, const Integer& euler);

struct Beta2Witness {
  Beta2NormalForm form;
  IntMatrix P;  ///< P^T G P == form.matrix()
};

/// Search unimodular P with |entries| <= bound bringing G into the
/// odd/even/even shape.
std::optional<Beta2Witness> beta2_normal_form(const SymIntMatrix& g, long bound = 20);

enum class Verdict { Obstructed, Consistent, Inconclusive };

enum class ClassFilter { Survived, NonCyclicCokernel, LinkingFormMismatch, InvariantFactorMismatch };

/// How the system for one (class, orientation) pair ended.
///   FailA      : q(p,q) = sigma(J) - sigma_o has no solution
///   FailB      : q(r,s) = sigma(J) - sigma_o - 2 lk_o has no solution
///   FailParity : that second value is even, but it must be odd
///   FailPairs  : solutions exist, but none combine into a unimodular P with
///                even q(u,v) and even bilinear term
enum class Outcome { Witness, FailA, FailB, FailParity, FailPairs, Unresolved };

enum class Method { Definite, LocalModulus, Parity, BoundedSearch };

struct SystemWitness {
  Integer p, q, r, s, u, v;
  Beta2NormalForm normal_form;

  friend bool operator==(const SystemWitness&, const SystemWitness&) = default;
};

struct OrientationCertificate {
  int orientation = 0;  ///< index into the invariants' orientation records
  Integer target_a;     ///< required value of q(p,q)
  Integer target_b;     ///< required value of q(r,s)
  Outcome outcome = Outcome::Unresolved;
  Method method = Method::Definite;
  bool exact = false;
  std::optional<long> modulus;
  long solutions_a = 0;
  long solutions_b = 0;
  std::optional<SystemWitness> witness;

  friend bool operator==(const OrientationCertificate&, const OrientationCertificate&) = default;
};

struct ClassCertificate {
  BinaryForm form;
  int signature = 0;
  FinAbGroup cokernel;
  std::optional<LinkingForm> linking_form;
  ClassFilter filter = ClassFilter::Survived;
  std::vector<OrientationCertificate> orientations;

  friend bool operator==(const ClassCertificate&, const ClassCertificate&) = default;
};

struct ObstructionConfig {
  long search_bound = 50;
  long max_modulus = 64;

  friend bool operator==(const ObstructionConfig&, const ObstructionConfig&) = default;
};

struct ObstructionReport {
  Verdict verdict = Verdict::Inconclusive;
  TwoComponentInvariants inputs;
  ObstructionConfig config;
  bool heuristic_filter = false;      ///< H1 not cyclic: filtered by invariant factors only
  bool unsupported_classes = false;   ///< det -n has square discriminant and was skipped
  std::vector<ClassCertificate> classes;

  friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

std::string to_string(Verdict v);
std::string to_string(ClassFilter f);
std::string to_string(Outcome o);
std::string to_string(Method m);

ObstructionReport beta2_obstruction(const TwoComponentInvariants& inv, const ObstructionConfig& cfg = {});

/// Re-checks every claim in a report from its embedded inputs; throws
/// InvariantViolation on the first one that does not hold.
void verify_report(const ObstructionReport& report);

/// max(2, min_generators(H1), 3 if the report is Obstructed).
int crosscap_lower_bound(const FinAbGroup& homology, std::optional<Verdict> beta2);

}  // namespace crosscap
