#include "doctest.h"
#include "properties.hpp"

#include "crosscap/analysis.hpp"
#include "crosscap/catalog.hpp"
#include "crosscap/error.hpp"
#include "crosscap/json_io.hpp"
#include "crosscap/obstruction.hpp"

#include <filesystem>
#include <functional>

using namespace crosscap;

namespace {

TwoComponentInvariants load_invariants(const std::string& file) {
  return io::invariants_from_json(io::read_file(std::filesystem::path(CROSSCAP_TEST_DATA) / "invariants" / file));
}

TwoComponentInvariants make(long n, long a, long s0, long l0, long s1, long l1) {
  TwoComponentInvariants inv;
  inv.h1_order = n;
  inv.linking_form = LinkingForm(n, a);
  inv.orientations = {OrientationRecord{s0, l0, "fwd"}, OrientationRecord{s1, l1, "rev"}};
  return inv;
}

TwoComponentInvariants mirror(TwoComponentInvariants inv) {
  if (inv.linking_form) inv.linking_form = LinkingForm(inv.linking_form->order, -inv.linking_form->numerator);
  for (auto& o : inv.orientations) {
    o.signature = -o.signature;
    o.linking_number = -o.linking_number;
  }
  return inv;
}

const ClassCertificate* find_class(const ObstructionReport& r, const BinaryForm& f) {
  for (const auto& c : r.classes)
    if (c.form == f) return &c;
  return nullptr;
}

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

bool verifies(const ObstructionReport& r) {
  try {
    verify_report(r);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

TEST_CASE("the 6_3^2 invariants are obstructed") {
  const auto inv = load_invariants("6_3_2.json");
  const ObstructionReport r = beta2_obstruction(inv);
  CHECK(r.verdict == Verdict::Obstructed);
  CHECK_FALSE(r.heuristic_filter);
  CHECK_FALSE(r.unsupported_classes);
  verify_report(r);

  // (3,0,4) survives the filters; fwd fails on q(p,q) = 3 - 3 - 1 and rev on
  // q(r,s) = 3 - (-1) - 4, both -1 against a positive definite form.
  const ClassCertificate* x3 = find_class(r, BinaryForm{3, 0, 4});
  REQUIRE(x3);
  CHECK(x3->filter == ClassFilter::Survived);
  REQUIRE(x3->orientations.size() == 2);
  CHECK(x3->orientations[0].outcome == Outcome::FailA);
  CHECK(x3->orientations[0].target_a == -1);
  CHECK(x3->orientations[1].target_a == 3);
  CHECK(x3->orientations[1].outcome == Outcome::FailB);
  CHECK(x3->orientations[1].target_b == -1);
  for (const auto& o : x3->orientations) CHECK(o.exact);

  // Of the remaining cyclic classes only -(3,0,4) shares the linking form.
  for (const auto& c : r.classes) {
    if (c.filter != ClassFilter::Survived) continue;
    CHECK((c.form == BinaryForm{3, 0, 4} || c.form == BinaryForm{-3, 0, -4}));
    for (const auto& o : c.orientations) CHECK(o.outcome != Outcome::Witness);
  }
  const ClassCertificate* x1 = find_class(r, BinaryForm{1, 0, 12});
  REQUIRE(x1);
  CHECK(x1->filter == ClassFilter::LinkingFormMismatch);
  const ClassCertificate* x2 = find_class(r, BinaryForm{2, 0, 6});
  REQUIRE(x2);
  CHECK(x2->filter == ClassFilter::NonCyclicCokernel);
}

TEST_CASE("the Hopf link invariants are consistent") {
  const ObstructionReport r = beta2_obstruction(load_invariants("hopf.json"));
  CHECK(r.verdict == Verdict::Consistent);
  verify_report(r);
  bool witnessed = false;
  for (const auto& c : r.classes)
    for (const auto& o : c.orientations)
      if (o.witness) {
        witnessed = true;
        const SystemWitness& w = *o.witness;
        IntMatrix p(2, 2);
        p << w.r, w.u, w.s, w.v;
        CHECK(abs(determinant(p)) == 1);
        CHECK(congruent_transform(c.form.matrix(), p) == w.normal_form.matrix());
      }
  CHECK(witnessed);
}

TEST_CASE("infinite or inconsistent inputs are rejected") {
  CHECK(error_of([] { beta2_obstruction(load_invariants("infinite_h1.json")); }) == ErrorCode::InfiniteH1);
  auto inv = make(12, 5, 3, -2, -1, 2);
  inv.linking_form = LinkingForm(10, 3);
  CHECK(error_of([&] { beta2_obstruction(inv); }) == ErrorCode::InvalidInput);
  auto bad_factors = make(12, 5, 3, -2, -1, 2);
  bad_factors.h1_invariant_factors = {Integer(2), Integer(3)};
  CHECK(error_of([&] { beta2_obstruction(bad_factors); }) == ErrorCode::InvalidInput);
}

TEST_CASE("reports survive a JSON round trip") {
  for (const char* file : {"6_3_2.json", "hopf.json"}) {
    const ObstructionReport r = beta2_obstruction(load_invariants(file));
    const ObstructionReport back = io::report_from_json(io::parse_text(io::to_json(r).dump()));
    CHECK(back == r);
    verify_report(back);
  }
}

TEST_CASE("verify_report notices tampering") {
  const ObstructionReport r = beta2_obstruction(load_invariants("6_3_2.json"));
  REQUIRE(verifies(r));

  ObstructionReport verdict = r;
  verdict.verdict = Verdict::Consistent;
  CHECK_FALSE(verifies(verdict));

  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    ObstructionReport t = r;
    auto& c = t.classes[i];
    if (c.filter == ClassFilter::Survived) {
      c.orientations[0].target_a += 1;
    } else {
      c.filter = c.filter == ClassFilter::NonCyclicCokernel ? ClassFilter::LinkingFormMismatch : ClassFilter::NonCyclicCokernel;
    }
    CHECK_FALSE(verifies(t));
  }

  ObstructionReport dropped = r;
  dropped.classes.pop_back();
  CHECK_FALSE(verifies(dropped));

  ObstructionReport inputs = r;
  inputs.inputs.orientations[0].signature = 1;
  CHECK_FALSE(verifies(inputs));
}

TEST_CASE("band quantities of the normal form") {
  const auto zero = band_quantities(Beta2NormalForm{0, 0, 0});
  CHECK(zero.linking_number == 0);
  CHECK(zero.euler == -2);
  const auto one = band_quantities(Beta2NormalForm{1, 0, 1});
  CHECK(one.linking_number == 1);
  CHECK(one.euler == -10);

  testing::Rng rng(61);
  for (int i = 0; i < 300; ++i) {
    const Beta2NormalForm f{rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9)};
    const SymIntMatrix g = f.matrix();
    const auto q = band_quantities(f);
    // e = -2 (sum of all entries of G), lk = (G11 + 2 G01) / 2.
    CHECK(q.euler == -2 * (g(0, 0) + 2 * g(0, 1) + g(1, 1)));
    CHECK(2 * q.linking_number == g(1, 1) + 2 * g(0, 1));
  }
}

TEST_CASE("Gordon-Litherland check") {
  CHECK(gl_signature_check(Integer(1), SymIntMatrix{{3, 2}, {2, 2}}, Integer(-2)));
  CHECK_FALSE(gl_signature_check(Integer(2), SymIntMatrix{{3, 2}, {2, 2}}, Integer(-2)));
  CHECK(error_of([] { gl_signature_check(Integer(0), SymIntMatrix{{1}}, Integer(3)); }) == ErrorCode::OddEuler);
}

TEST_CASE("every witness satisfies the Gordon-Litherland relation") {
  testing::Rng rng(62);
  int witnesses = 0;
  for (int i = 0; i < 60; ++i) {
    const long n = rng.uniform(2, 16);
    long a = rng.uniform(1, n - 1);
    while (std::gcd(a, n) != 1) a = rng.uniform(1, n - 1);
    const auto inv = make(n, a, rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
    ObstructionReport r;
    try {
      r = beta2_obstruction(inv, {20, 32});
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SquareDiscriminant);
      continue;
    }
    for (const auto& c : r.classes)
      for (const auto& o : c.orientations) {
        if (!o.witness) continue;
        ++witnesses;
        const auto& rec = inv.orientations[static_cast<std::size_t>(o.orientation)];
        const Beta2NormalForm& nf = o.witness->normal_form;
        const auto q = band_quantities(nf);
        CHECK(gl_signature_check(rec.signature, nf.matrix(), q.euler));
        CHECK(q.linking_number == rec.linking_number);
      }
  }
  CHECK(witnesses > 0);
}

TEST_CASE("beta2 normal forms") {
  const auto w = beta2_normal_form(SymIntMatrix{{3, 2}, {2, 2}});
  REQUIRE(w);
  CHECK(w->form == Beta2NormalForm{1, 1, 1});
  CHECK(w->P == IntMatrix(identity<Integer>(2)));

  // An even lattice has no odd diagonal value at all.
  CHECK_FALSE(beta2_normal_form(SymIntMatrix{{2, 0}, {0, 2}}));
  // The shape always has even determinant, so determinant 1 is out of reach
  // even though 2x^2 + 2xy + y^2 takes odd values.
  CHECK_FALSE(beta2_normal_form(SymIntMatrix{{2, 1}, {1, 1}}));

  testing::Rng rng(63);
  for (int i = 0; i < 200; ++i) {
    const SymIntMatrix g(rng.symmetric(2, 8));
    const auto nf = beta2_normal_form(g, 12);
    if (!nf) continue;
    CHECK(is_unimodular(nf->P));
    CHECK(congruent_transform(g, nf->P) == nf->form.matrix());
    CHECK(determinant(g.matrix()) % 2 == 0);
  }
}

TEST_CASE("replacing the linking form by 1/12 does not obstruct") {
  // (1,0,12) and (-1,3,3) carry 1/12 but fail both systems; the indefinite
  // class (-3,3,1) carries 11/12 = -1/12 and admits a surface.
  const ObstructionReport r = beta2_obstruction(make(12, 1, 3, -2, -1, 2));
  verify_report(r);
  CHECK(r.verdict == Verdict::Consistent);
  const ClassCertificate* x3 = find_class(r, BinaryForm{3, 0, 4});
  REQUIRE(x3);
  CHECK(x3->filter == ClassFilter::LinkingFormMismatch);
  const ClassCertificate* x1 = find_class(r, BinaryForm{1, 0, 12});
  REQUIRE(x1);
  CHECK(x1->filter == ClassFilter::Survived);
  for (const auto& o : x1->orientations) CHECK(o.outcome != Outcome::Witness);
}

TEST_CASE("verdicts under relabelling and mirroring") {
  // Negating lk in one slot alone is not a symmetry: it describes a different
  // pair of orientations, and here it removes the obstruction.
  const auto base = load_invariants("6_3_2.json");
  auto flipped = base;
  flipped.orientations[1].linking_number = -flipped.orientations[1].linking_number;
  CHECK(beta2_obstruction(flipped).verdict == Verdict::Consistent);

  testing::Rng rng(64);
  int cases = 0;
  for (int i = 0; i < 80; ++i) {
    const long n = rng.uniform(2, 20);
    long a = rng.uniform(1, n - 1);
    while (std::gcd(a, n) != 1) a = rng.uniform(1, n - 1);
    const auto inv = make(n, a, rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
    ObstructionReport r;
    try {
      r = beta2_obstruction(inv, {20, 32});
    } catch (const Error&) {
      continue;
    }
    ++cases;
    CHECK(verifies(r));

    auto swapped = inv;
    std::swap(swapped.orientations[0], swapped.orientations[1]);
    CHECK(beta2_obstruction(swapped, {20, 32}).verdict == r.verdict);
    CHECK(beta2_obstruction(mirror(inv), {20, 32}).verdict == r.verdict);
  }
  CHECK(cases > 40);
}

TEST_CASE("square determinants are reported as unsupported") {
  // det -4 has discriminant 4; the positive classes are still examined.
  const ObstructionReport r = beta2_obstruction(make(4, 1, 1, 0, 1, 0));
  CHECK(r.unsupported_classes);
  CHECK(r.verdict != Verdict::Obstructed);
  verify_report(r);
}

TEST_CASE("links with known beta1 = 2 surfaces are never obstructed") {
  const Catalog cat = Catalog::load(CROSSCAP_TEST_CATALOG);
  for (const char* name : {"Hopf", "6_2^2"}) {
    const LinkAnalysis a = analyze_link(cat.link(name));
    REQUIRE(a.obstruction);
    CHECK(a.obstruction->verdict != Verdict::Obstructed);
  }
  for (long m = 2; m <= 10; m += 2) {
    CatalogLink link;
    link.name = "T(2," + std::to_string(m) + ")";
    link.diagram = testing::torus_link(m);
    const LinkAnalysis a = analyze_link(link);
    INFO(link.name);
    REQUIRE(a.obstruction);
    CHECK(a.obstruction->verdict == Verdict::Consistent);
    verify_report(*a.obstruction);
  }
}

TEST_CASE("crosscap lower bound") {
  CHECK(crosscap_lower_bound(FinAbGroup{{12}}, Verdict::Obstructed) == 3);
  CHECK(crosscap_lower_bound(FinAbGroup{{3, 3, 0}}, std::nullopt) == 3);
  CHECK(crosscap_lower_bound(FinAbGroup{{2}}, Verdict::Consistent) == 2);
  CHECK(crosscap_lower_bound(FinAbGroup{}, std::nullopt) == 2);
  CHECK(crosscap_lower_bound(FinAbGroup{{12}}, Verdict::Inconclusive) == 2);
}
