#include "crosscap/analysis.hpp"

#include "crosscap/error.hpp"

namespace crosscap {
namespace {

int seifert_signature(const IntMatrix& v) {
  const IntMatrix s = v + v.transpose();
  return signature(s);
}

}  // namespace

int agreed_signature(const OrientationAnalysis& o) {
  std::optional<int> value;
  for (const auto& s : {o.sigma_white, o.sigma_black, o.sigma_seifert}) {
    if (!s) continue;
    if (value && *value != *s)
      throw Error(ErrorCode::InvariantViolation, "signature sources disagree for orientation " + o.label);
    value = s;
  }
  if (!value) throw Error(ErrorCode::InvalidInput, "no signature available for orientation " + o.label);
  return *value;
}

LinkAnalysis analyze_link(const CatalogLink& link, const ObstructionConfig& cfg) {
  LinkAnalysis a;
  a.name = link.name;

  if (link.diagram) {
    const Checkerboard cb = checkerboard(*link.diagram);
    a.goeritz_source = "diagram";
    a.goeritz = goeritz_from_diagram(*link.diagram, cb, Color::Black);
    a.stats = crossing_stats(*link.diagram);
  } else if (link.band_surface) {
    a.goeritz_source = "band surface";
    a.goeritz = goeritz_from_bands(*link.band_surface);
  } else {
    throw Error(ErrorCode::InvalidInput, link.name + ": needs a diagram or a band surface");
  }
  a.homology = homology_from_goeritz(a.goeritz);
  a.min_generators = min_generators(a.homology);
  if (a.homology.finite() && a.homology.cyclic() && a.homology.order() > 1) a.linking_form = linking_form(a.goeritz);

  const std::pair<const char*, std::vector<int>> kinds[] = {{"fwd", {1, 1}}, {"rev", {1, -1}}};
  for (const auto& [label, flags] : kinds) {
    OrientationAnalysis o;
    o.label = label;
    o.flags = flags;
    if (link.diagram) {
      const LinkDiagram d = link.diagram->with_orientation(flags);
      const Checkerboard cb = checkerboard(d);
      o.linking_number = linking_number(d);
      o.sigma_white = gordon_litherland_signature(d, cb, Color::White);
      o.sigma_black = gordon_litherland_signature(d, cb, Color::Black);
    }
    const auto& v = std::string(label) == "fwd" ? link.seifert_fwd : link.seifert_rev;
    if (v) o.sigma_seifert = seifert_signature(*v);
    if (o.sigma_white || o.sigma_seifert) agreed_signature(o);
    a.orientations.push_back(std::move(o));
  }

  LowerInputs lower;
  lower.min_generators = a.min_generators;
  if (!link.diagram) {
    a.obstruction_note = "no diagram: linking numbers unavailable";
  } else if (!a.homology.finite()) {
    a.obstruction_note = "H1 is infinite";
  } else {
    TwoComponentInvariants inv;
    inv.h1_order = a.homology.order();
    if (a.linking_form)
      inv.linking_form = a.linking_form;
    else
      inv.h1_invariant_factors = a.homology.invariant_factors;
    for (std::size_t i = 0; i < 2; ++i)
      inv.orientations[i] = {agreed_signature(a.orientations[i]), *a.orientations[i].linking_number, a.orientations[i].label};
    a.obstruction = beta2_obstruction(inv, cfg);
    verify_report(*a.obstruction);
    lower.obstructed = a.obstruction->verdict == Verdict::Obstructed;
  }
  a.interval = aggregate(link.record, lower, a.stats);
  return a;
}

}  // namespace crosscap
