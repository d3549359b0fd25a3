#pragma once

// Closed-form crosscap bounds and their aggregation into an interval.

#include "crosscap/diagram.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crosscap {

struct KnotRecord {
  std::string name;
  int genus = 0;
  int crosscap = 1;  ///< the unknot counts as 1
  int crossing_number = 0;

  /// 1 <= crosscap <= 2 genus + 1.
  void validate() const;
};

struct SurfaceWitness {
  int beta1 = 0;
  std::string note;
};

struct LinkRecord {
  std::string name;
  std::optional<int> genus_fwd;
  std::optional<int> genus_rev;
  std::optional<int> crossing_number;
  bool splittable = false;
  std::optional<std::pair<KnotRecord, KnotRecord>> constituents;
  std::vector<SurfaceWitness> witnesses;
};

struct BoundTerm {
  std::string name;
  int value = 0;
  friend bool operator==(const BoundTerm&, const BoundTerm&) = default;
};

struct CrosscapInterval {
  int lower = 2;
  int upper = 0;
  std::vector<BoundTerm> lower_terms;
  std::vector<BoundTerm> upper_terms;
};

int clark_bound(int genus);

enum class SplitBranch { FirstMixed, SecondMixed, Sum };

struct SplitUnionResult {
  int value = 0;
  std::array<int, 3> branches{};           ///< g1+2g2+1, g2+2g1+1, g1+g2+1 (gamma for g)
  std::vector<SplitBranch> attaining;      ///< branches equal to the minimum
  /// true: value = gamma1+gamma2 because some knot has gamma = 2g+1;
  /// false: value = gamma1+gamma2+1 because both have gamma < 2g+1.
  bool collapsed = false;
};

SplitUnionResult split_union_crosscap(const KnotRecord& k1, const KnotRecord& k2);

int genus_bound(int genus_fwd, int genus_rev);

/// floor(n/2) for a nontrivial knot; needs n >= 3.
int crossing_bound_knot(int n);

/// floor(n/2) + 1 for a 2-component link; n = 0 is the unlink and throws.
int crossing_bound_link(int n);

int checkerboard_bound(const CrossingStats& stats);

/// Upper bound for a splittable link: sum of floor(n_i/2) (1 for an
/// unknotted constituent) plus 1.
int splittable_crossing_bound(const KnotRecord& k1, const KnotRecord& k2);

struct LowerInputs {
  std::optional<int> min_generators;
  bool obstructed = false;
};

/// Combines every applicable bound. `stats` comes from a connected diagram
/// of the link, if one is available.
CrosscapInterval aggregate(const LinkRecord& rec, const LowerInputs& lower,
                           const std::optional<CrossingStats>& stats = std::nullopt);

}  // namespace crosscap
