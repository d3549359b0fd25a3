#include "crosscap/bounds.hpp"

#include "crosscap/error.hpp"

#include <algorithm>
#include <limits>

namespace crosscap {

void KnotRecord::validate() const {
  if (genus < 0 || crossing_number < 0) throw Error(ErrorCode::InvalidInput, name + ": negative attribute");
  if (crosscap < 1 || crosscap > clark_bound(genus))
    throw Error(ErrorCode::InvalidInput, name + ": crosscap number must lie in [1, 2g+1]");
}

int clark_bound(int genus) {
  if (genus < 0) throw Error(ErrorCode::InvalidInput, "genus must be non-negative");
  return 2 * genus + 1;
}

SplitUnionResult split_union_crosscap(const KnotRecord& k1, const KnotRecord& k2) {
  k1.validate();
  k2.validate();
  SplitUnionResult r;
  r.branches = {k1.crosscap + 2 * k2.genus + 1, k2.crosscap + 2 * k1.genus + 1, k1.crosscap + k2.crosscap + 1};
  r.value = *std::min_element(r.branches.begin(), r.branches.end());
  constexpr std::array kinds{SplitBranch::FirstMixed, SplitBranch::SecondMixed, SplitBranch::Sum};
  for (std::size_t i = 0; i < 3; ++i)
    if (r.branches[i] == r.value) r.attaining.push_back(kinds[i]);
  r.collapsed = r.value == k1.crosscap + k2.crosscap;
  return r;
}

int genus_bound(int genus_fwd, int genus_rev) {
  if (genus_fwd < 0 || genus_rev < 0) throw Error(ErrorCode::InvalidInput, "genus must be non-negative");
  return 2 * std::min(genus_fwd, genus_rev) + 2;
}

int crossing_bound_knot(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "a nontrivial knot has at least 3 crossings");
  return n / 2;
}

int crossing_bound_link(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "crossing number must be non-negative");
  if (n == 0) throw Error(ErrorCode::UnlinkExcluded, "the crossing bound excludes the unlink");
  return n / 2 + 1;
}

int checkerboard_bound(const CrossingStats& s) {
  if (s.n < 0 || s.n_black < 1 || s.n_white < 1 || s.n_black + s.n_white != s.n + 2)
    throw Error(ErrorCode::InvalidInput, "region counts must satisfy n_b + n_w = n + 2");
  return 2 + s.n - std::max(s.n_black, s.n_white);
}

int splittable_crossing_bound(const KnotRecord& k1, const KnotRecord& k2) {
  auto knot_upper = [](const KnotRecord& k) { return k.crossing_number == 0 ? 1 : crossing_bound_knot(k.crossing_number); };
  return knot_upper(k1) + knot_upper(k2) + 1;
}

CrosscapInterval aggregate(const LinkRecord& rec, const LowerInputs& lower, const std::optional<CrossingStats>& stats) {
  CrosscapInterval iv;
  iv.lower_terms.push_back({"two components", 2});
  if (lower.min_generators) iv.lower_terms.push_back({"minimal generators of H1", *lower.min_generators});
  if (lower.obstructed) iv.lower_terms.push_back({"beta1 = 2 obstruction", 3});

  if (rec.splittable) {
    if (!rec.constituents) throw Error(ErrorCode::InvalidInput, rec.name + ": splittable link needs its two knots");
    const auto& [k1, k2] = *rec.constituents;
    const int exact = split_union_crosscap(k1, k2).value;
    iv.lower_terms.push_back({"split union formula", exact});
    iv.upper_terms.push_back({"split union formula", exact});
    iv.upper_terms.push_back({"crossing bound (split)", splittable_crossing_bound(k1, k2)});
  } else {
    if (rec.crossing_number) iv.upper_terms.push_back({"crossing bound", crossing_bound_link(*rec.crossing_number)});
    if (stats) iv.upper_terms.push_back({"checkerboard bound", checkerboard_bound(*stats)});
  }
  if (rec.genus_fwd && rec.genus_rev) iv.upper_terms.push_back({"genus bound", genus_bound(*rec.genus_fwd, *rec.genus_rev)});
  for (const auto& w : rec.witnesses) iv.upper_terms.push_back({"surface witness" + (w.note.empty() ? "" : " (" + w.note + ")"), w.beta1});

  if (iv.upper_terms.empty()) throw Error(ErrorCode::InvalidInput, rec.name + ": no upper bound applies");
  iv.lower = 0;
  for (const auto& t : iv.lower_terms) iv.lower = std::max(iv.lower, t.value);
  iv.upper = std::numeric_limits<int>::max();
  for (const auto& t : iv.upper_terms) iv.upper = std::min(iv.upper, t.value);
  if (iv.lower > iv.upper)
    throw Error(ErrorCode::EmptyInterval, rec.name + ": lower bound " + std::to_string(iv.lower) + " exceeds upper bound " +
                                              std::to_string(iv.upper));
  return iv;
}

}  // namespace crosscap
