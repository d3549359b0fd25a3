#include "crosscap/obstruction.hpp"

#include "crosscap/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

namespace crosscap {
namespace {

bool is_odd(const Integer& x) { return mod_floor(x, Integer(2)) == 1; }

IntMatrix column_pair(const Integer& r, const Integer& s, const Integer& u, const Integer& v) {
  IntMatrix p(2, 2);
  p << r, u, s, v;
  return p;
}

void violation(const std::string& what) { throw Error(ErrorCode::InvariantViolation, what); }

// Outcome of one of the two representation subproblems.
struct Subproblem {
  RepresentResult result;
  bool exact_failure = false;
  Method method = Method::Definite;
  std::optional<long> modulus;
};

Subproblem solve(const BinaryForm& j, const Integer& target, const ObstructionConfig& cfg) {
  Subproblem sp;
  sp.result = represent(j, target, cfg.search_bound);
  if (!sp.result.solutions.empty()) {
    sp.method = sp.result.complete ? Method::Definite : Method::BoundedSearch;
    return sp;
  }
  if (sp.result.complete) {
    sp.exact_failure = true;
    sp.method = Method::Definite;
    return sp;
  }
  if (auto m = local_obstruction(j, target, cfg.max_modulus)) {
    sp.exact_failure = true;
    sp.method = Method::LocalModulus;
    sp.modulus = m;
  } else {
    sp.method = Method::BoundedSearch;
  }
  return sp;
}

std::optional<SystemWitness> combine(const BinaryForm& j, const RepresentResult& a, const RepresentResult& b) {
  for (const auto& [p, q] : a.solutions)
    for (const auto& [r, s] : b.solutions) {
      const Integer u = p - r, v = q - s;
      const Integer det = r * v - u * s;
      if (det != 1 && det != -1) continue;
      const Integer quv = j.value(u, v);
      const Integer bil = j.bilinear(r, s, u, v);
      if (is_odd(quv) || is_odd(bil)) continue;
      const Integer qrs = j.value(r, s);
      return SystemWitness{p, q, r, s, u, v, Beta2NormalForm{(qrs - 1) / 2, bil / 2, quv / 2}};
    }
  return std::nullopt;
}

OrientationCertificate run_system(const BinaryForm& j, int sigma_j, const OrientationRecord& o, int index,
                                  const ObstructionConfig& cfg) {
  OrientationCertificate cert;
  cert.orientation = index;
  cert.target_a = Integer(sigma_j) - o.signature;
  cert.target_b = cert.target_a - 2 * o.linking_number;

  const Subproblem a = solve(j, cert.target_a, cfg);
  const Subproblem b = solve(j, cert.target_b, cfg);
  cert.solutions_a = static_cast<long>(a.result.solutions.size());
  cert.solutions_b = static_cast<long>(b.result.solutions.size());

  if (a.exact_failure) {
    cert.outcome = Outcome::FailA;
    cert.method = a.method;
    cert.modulus = a.modulus;
    cert.exact = true;
    return cert;
  }
  if (b.exact_failure) {
    cert.outcome = Outcome::FailB;
    cert.method = b.method;
    cert.modulus = b.modulus;
    cert.exact = true;
    return cert;
  }
  if (!is_odd(cert.target_b)) {
    cert.outcome = Outcome::FailParity;
    cert.method = Method::Parity;
    cert.exact = true;
    return cert;
  }
  if (auto w = combine(j, a.result, b.result)) {
    cert.outcome = Outcome::Witness;
    cert.method = a.result.complete && b.result.complete ? Method::Definite : Method::BoundedSearch;
    cert.exact = true;
    cert.witness = std::move(w);
    return cert;
  }
  const bool complete = a.result.complete && b.result.complete;
  cert.outcome = complete ? Outcome::FailPairs : Outcome::Unresolved;
  cert.method = complete ? Method::Definite : Method::BoundedSearch;
  cert.exact = complete;
  return cert;
}

std::vector<BinaryForm> candidate_classes(const Integer& n, bool& unsupported) {
  std::vector<BinaryForm> out = enumerate_classes(n, DefiniteSigns::Both).representatives;
  unsupported = is_square(n);
  if (!unsupported) {
    const auto neg = enumerate_classes(-n).representatives;
    out.insert(out.end(), neg.begin(), neg.end());
  }
  return out;
}

Verdict decide(const ObstructionReport& r) {
  bool all_exact = true;
  for (const auto& cls : r.classes)
    for (const auto& oc : cls.orientations) {
      if (oc.outcome == Outcome::Witness) return Verdict::Consistent;
      if (!oc.exact) all_exact = false;
    }
  return all_exact && !r.unsupported_classes ? Verdict::Obstructed : Verdict::Inconclusive;
}

bool solvable_mod(const BinaryForm& f, const Integer& n, long m) {
  const Integer mm(m);
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y)
      if (mod_floor(f.value(Integer(x), Integer(y)) - n, mm) == 0) return true;
  return false;
}

}  // namespace

void TwoComponentInvariants::validate() const {
  if (h1_order == 0) throw Error(ErrorCode::InfiniteH1, "infinite H1: the obstruction needs a finite first homology");
  if (h1_order < 0) throw Error(ErrorCode::InvalidInput, "h1_order must be positive");
  if (linking_form && linking_form->order != h1_order)
    throw Error(ErrorCode::InvalidInput, "linking form order " + linking_form->order.str() + " differs from h1_order " +
                                             h1_order.str());
  if (!h1_invariant_factors.empty()) {
    Integer prod(1);
    for (const Integer& d : h1_invariant_factors) prod *= d;
    if (prod != h1_order) throw Error(ErrorCode::InvalidInput, "invariant factors do not multiply to h1_order");
  }
}

SymIntMatrix Beta2NormalForm::matrix() const {
  IntMatrix g(2, 2);
  g << 2 * n + 1, 2 * k, 2 * k, 2 * m;
  return SymIntMatrix(std::move(g));
}

BandQuantities band_quantities(const Beta2NormalForm& f) {
  return {f.m + 2 * f.k, -2 * (2 * f.n + 1 + 4 * f.k + 2 * f.m)};
}

bool gl_signature_check(const Integer& sigma, const SymIntMatrix& g, const Integer& euler) {
  if (is_odd(euler)) throw Error(ErrorCode::OddEuler, "euler number " + euler.str() + " is odd");
  return sigma == Integer(signature(g)) + euler / 2;
}

std::optional<Beta2Witness> beta2_normal_form(const SymIntMatrix& g, long bound) {
  if (g.dim() != 2) throw Error(ErrorCode::InvalidInput, "beta2_normal_form needs a 2x2 matrix");
  const BinaryForm f = BinaryForm::from_matrix(g);

  // First columns ordered by size, preferring non-negative entries.
  std::vector<std::pair<long, long>> firsts;
  for (long r = -bound; r <= bound; ++r)
    for (long s = -bound; s <= bound; ++s)
      if (std::gcd(r, s) == 1) firsts.emplace_back(r, s);
  auto key = [](const std::pair<long, long>& c) {
    return std::make_tuple(std::max(std::abs(c.first), std::abs(c.second)), std::abs(c.first) + std::abs(c.second),
                           c.first < 0, c.second < 0, -std::abs(c.first));
  };
  std::stable_sort(firsts.begin(), firsts.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });

  const Integer bnd(bound);
  for (const auto& [r0, s0] : firsts) {
    const Integer r(r0), s(s0);
    const Integer qrs = f.value(r, s);
    if (!is_odd(qrs)) continue;
    // Extended gcd: x r + y s = 1, so (u,v) = (-y, x) has r v - u s = 1.
    long x0 = 1, y0 = 0, x1 = 0, y1 = 1, a = r0, b = s0;
    while (b != 0) {
      const long q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
      std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) {
      x0 = -x0;
      y0 = -y0;
    }
    for (long t = 0; t <= 2 * bound + 1; ++t)
      for (long sgn_t : {1L, -1L}) {
        if (t == 0 && sgn_t < 0) continue;
        for (long det_sign : {1L, -1L}) {
          const Integer u = Integer(det_sign) * (Integer(-y0) + Integer(sgn_t * t) * r);
          const Integer v = Integer(det_sign) * (Integer(x0) + Integer(sgn_t * t) * s);
          if (abs_value(u) > bnd || abs_value(v) > bnd) continue;
          const Integer quv = f.value(u, v), bil = f.bilinear(r, s, u, v);
          if (is_odd(quv) || is_odd(bil)) continue;
          Beta2Witness w{{(qrs - 1) / 2, bil / 2, quv / 2}, column_pair(r, s, u, v)};
          return w;
        }
      }
  }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "Obstructed";
    case Verdict::Consistent: return "Consistent";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(ClassFilter f) {
  switch (f) {
    case ClassFilter::Survived: return "survived";
    case ClassFilter::NonCyclicCokernel: return "non-cyclic-cokernel";
    case ClassFilter::LinkingFormMismatch: return "linking-form-mismatch";
    case ClassFilter::InvariantFactorMismatch: return "invariant-factor-mismatch";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Witness: return "witness";
    case Outcome::FailA: return "no-solution-A";
    case Outcome::FailB: return "no-solution-B";
    case Outcome::FailParity: return "parity";
    case Outcome::FailPairs: return "no-unimodular-pair";
    case Outcome::Unresolved: return "unresolved";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Definite: return "definite";
    case Method::LocalModulus: return "local";
    case Method::Parity: return "parity";
    case Method::BoundedSearch: return "bounded-search";
  }
  return "?";
}

ObstructionReport beta2_obstruction(const TwoComponentInvariants& inv, const ObstructionConfig& cfg) {
  inv.validate();
  if (cfg.search_bound < 1 || cfg.max_modulus < 2) throw Error(ErrorCode::InvalidInput, "search bounds must be positive");
  ObstructionReport report;
  report.inputs = inv;
  report.config = cfg;
  report.heuristic_filter = !inv.linking_form.has_value();

  for (const BinaryForm& j : candidate_classes(inv.h1_order, report.unsupported_classes)) {
    ClassCertificate cls;
    cls.form = j;
    cls.signature = signature(j.matrix());
    cls.cokernel = homology_from_goeritz(j.matrix());
    if (cls.cokernel.cyclic()) cls.linking_form = linking_form(j.matrix());

    if (inv.linking_form) {
      if (!cls.cokernel.cyclic())
        cls.filter = ClassFilter::NonCyclicCokernel;
      else if (!linking_forms_equivalent(*cls.linking_form, *inv.linking_form))
        cls.filter = ClassFilter::LinkingFormMismatch;
    } else if (!inv.h1_invariant_factors.empty() && cls.cokernel.invariant_factors != inv.h1_invariant_factors) {
      cls.filter = ClassFilter::InvariantFactorMismatch;
    }
    if (cls.filter == ClassFilter::Survived)
      for (int o = 0; o < 2; ++o)
        cls.orientations.push_back(run_system(j, cls.signature, inv.orientations[static_cast<std::size_t>(o)], o, cfg));
    report.classes.push_back(std::move(cls));
  }
  report.verdict = decide(report);
  return report;
}

void verify_report(const ObstructionReport& report) {
  const TwoComponentInvariants& inv = report.inputs;
  inv.validate();
  const Integer& n = inv.h1_order;

  bool unsupported = false;
  const auto expected = candidate_classes(n, unsupported);
  if (unsupported != report.unsupported_classes) violation("unsupported-class flag does not match h1_order");
  std::set<BinaryForm> want(expected.begin(), expected.end()), have;
  for (const auto& cls : report.classes) have.insert(cls.form);
  if (want != have) violation("class list is not the complete set of classes of determinant +-" + n.str());
  if (report.heuristic_filter != !inv.linking_form.has_value()) violation("heuristic flag inconsistent with inputs");

  for (const auto& cls : report.classes) {
    const BinaryForm& j = cls.form;
    const std::string tag = "class " + to_string(j);
    if (abs_value(j.det()) != n) violation(tag + ": determinant is not +-" + n.str());
    if (signature(j.matrix()) != cls.signature) violation(tag + ": signature mismatch");
    const FinAbGroup cok = homology_from_goeritz(j.matrix());
    if (!(cok == cls.cokernel)) violation(tag + ": cokernel mismatch");

    switch (cls.filter) {
      case ClassFilter::NonCyclicCokernel:
        if (!inv.linking_form || cok.cyclic()) violation(tag + ": cokernel is cyclic");
        break;
      case ClassFilter::LinkingFormMismatch:
        if (!inv.linking_form || !cok.cyclic() ||
            linking_forms_equivalent(linking_form(j.matrix()), *inv.linking_form))
          violation(tag + ": linking form does match");
        break;
      case ClassFilter::InvariantFactorMismatch:
        if (inv.linking_form || cok.invariant_factors == inv.h1_invariant_factors)
          violation(tag + ": invariant factors do match");
        break;
      case ClassFilter::Survived:
        if (inv.linking_form &&
            (!cok.cyclic() || !linking_forms_equivalent(linking_form(j.matrix()), *inv.linking_form)))
          violation(tag + ": class should have been filtered");
        if (cls.orientations.size() != 2) violation(tag + ": expected one certificate per orientation");
        break;
    }

    for (const auto& oc : cls.orientations) {
      if (oc.orientation < 0 || oc.orientation > 1) violation(tag + ": orientation index out of range");
      const OrientationRecord& o = inv.orientations[static_cast<std::size_t>(oc.orientation)];
      const Integer ta = Integer(cls.signature) - o.signature;
      const Integer tb = ta - 2 * o.linking_number;
      if (oc.target_a != ta || oc.target_b != tb) violation(tag + ": targets do not follow from the inputs");

      auto check_failure = [&](const Integer& target) {
        if (oc.method == Method::Definite) {
          if (!j.definite() || !represent(j, target).solutions.empty())
            violation(tag + ": value " + target.str() + " is representable");
        } else if (oc.method == Method::LocalModulus) {
          if (!oc.modulus || solvable_mod(j, target, *oc.modulus))
            violation(tag + ": value " + target.str() + " is solvable modulo the certificate");
        } else {
          violation(tag + ": failure certificate has no exact method");
        }
      };

      switch (oc.outcome) {
        case Outcome::FailA: check_failure(ta); break;
        case Outcome::FailB: check_failure(tb); break;
        case Outcome::FailParity:
          if (is_odd(tb)) violation(tag + ": parity certificate on an odd value");
          break;
        case Outcome::FailPairs: {
          if (!j.definite()) violation(tag + ": pair exhaustion claimed for an indefinite class");
          if (combine(j, represent(j, ta), represent(j, tb))) violation(tag + ": a witness pair exists");
          break;
        }
        case Outcome::Witness: {
          if (!oc.witness) violation(tag + ": witness outcome without a witness");
          const SystemWitness& w = *oc.witness;
          if (j.value(w.p, w.q) != ta || j.value(w.r, w.s) != tb) violation(tag + ": witness misses a target");
          if (w.u != w.p - w.r || w.v != w.q - w.s) violation(tag + ": witness columns inconsistent");
          const IntMatrix p = column_pair(w.r, w.s, w.u, w.v);
          if (!(congruent_transform(j.matrix(), p) == w.normal_form.matrix()))
            violation(tag + ": witness does not produce its normal form");
          break;
        }
        case Outcome::Unresolved:
          if (oc.exact) violation(tag + ": unresolved certificate marked exact");
          break;
      }
    }
  }
  if (decide(report) != report.verdict) violation("verdict does not follow from the certificates");
}

int crosscap_lower_bound(const FinAbGroup& homology, std::optional<Verdict> beta2) {
  int lower = std::max(2, min_generators(homology));
  if (beta2 && *beta2 == Verdict::Obstructed) lower = std::max(lower, 3);
  return lower;
}

}  // namespace crosscap
