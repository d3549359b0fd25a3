#pragma once

// The full pipeline for one catalog link: Goeritz matrix, double-cover
// homology, linking form, signatures per orientation, the beta1 = 2
// obstruction and the aggregated crosscap interval.

#include "crosscap/bounds.hpp"
#include "crosscap/catalog.hpp"
#include "crosscap/double_cover.hpp"
#include "crosscap/obstruction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crosscap {

struct OrientationAnalysis {
  std::string label;
  std::vector<int> flags;
  std::optional<int> linking_number;
  std::optional<int> sigma_white;    ///< Gordon-Litherland on the white surface
  std::optional<int> sigma_black;    ///< Gordon-Litherland on the black surface
  std::optional<int> sigma_seifert;  ///< signature of V + V^T
};

struct LinkAnalysis {
  std::string name;
  std::string goeritz_source;  ///< "diagram" or "band surface"
  SymIntMatrix goeritz;
  FinAbGroup homology;
  int min_generators = 0;
  std::optional<LinkingForm> linking_form;
  std::optional<CrossingStats> stats;
  std::vector<OrientationAnalysis> orientations;
  std::optional<ObstructionReport> obstruction;
  std::string obstruction_note;  ///< why the obstruction was not run, if it was not
  CrosscapInterval interval;
};

/// The signature of one orientation, agreed on by every available source.
/// Throws InvariantViolation when two sources disagree.
int agreed_signature(const OrientationAnalysis& o);

/// Throws InvariantViolation when the signature sources disagree.
LinkAnalysis analyze_link(const CatalogLink& link, const ObstructionConfig& cfg = {});

}  // namespace crosscap
