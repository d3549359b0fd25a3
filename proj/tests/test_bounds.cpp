#include "doctest.h"
#include "properties.hpp"

#include "crosscap/analysis.hpp"
#include "crosscap/bounds.hpp"
#include "crosscap/catalog.hpp"
#include "crosscap/error.hpp"

#include <filesystem>
#include <fstream>
#include <functional>

using namespace crosscap;

namespace {

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}

KnotRecord knot(int g, int gamma, int n = 3) { return KnotRecord{"k", g, gamma, n}; }

}  // namespace

TEST_CASE("Clark bound") {
  CHECK(clark_bound(0) == 1);
  CHECK(clark_bound(1) == 3);
  CHECK(clark_bound(4) == 9);
  CHECK(error_of([] { clark_bound(-1); }) == ErrorCode::InvalidInput);
}

TEST_CASE("split union of two trefoils and of 7_4 with a trefoil") {
  const Catalog cat = Catalog::load(CROSSCAP_TEST_CATALOG);
  const auto tt = split_union_crosscap(cat.knot("3_1"), cat.knot("3_1"));
  CHECK(tt.value == 3);
  CHECK_FALSE(tt.collapsed);
  CHECK(tt.attaining == std::vector<SplitBranch>{SplitBranch::Sum});

  const auto st = split_union_crosscap(cat.knot("7_4"), cat.knot("3_1"));
  CHECK(st.value == 4);
  CHECK(st.collapsed);

  const auto uu = split_union_crosscap(cat.knot("unknot"), cat.knot("unknot"));
  CHECK(uu.value == 2);
}

TEST_CASE("split union formula, exhaustively for genus up to five") {
  // Independent statement of the answer: gamma1 + gamma2 when some knot
  // attains its Clark bound, gamma1 + gamma2 + 1 otherwise.
  int cases = 0;
  for (int g1 = 0; g1 <= 5; ++g1)
    for (int c1 = 1; c1 <= 2 * g1 + 1; ++c1)
      for (int g2 = 0; g2 <= 5; ++g2)
        for (int c2 = 1; c2 <= 2 * g2 + 1; ++c2) {
          ++cases;
          const auto a = split_union_crosscap(knot(g1, c1), knot(g2, c2));
          const auto b = split_union_crosscap(knot(g2, c2), knot(g1, c1));
          const bool extremal = c1 == 2 * g1 + 1 || c2 == 2 * g2 + 1;
          CHECK(a.value == c1 + c2 + (extremal ? 0 : 1));
          CHECK(a.collapsed == extremal);
          CHECK(b.value == a.value);
          for (int v : a.branches) CHECK(a.value <= v);
          CHECK_FALSE(a.attaining.empty());
        }
  CHECK(cases == 1296);
  CHECK(error_of([] { split_union_crosscap(knot(1, 4), knot(0, 1)); }) == ErrorCode::InvalidInput);
}

TEST_CASE("genus and crossing bounds") {
  CHECK(genus_bound(4, 0) == 2);
  CHECK(genus_bound(1, 2) == 4);
  CHECK(crossing_bound_knot(3) == 1);
  CHECK(crossing_bound_knot(7) == 3);
  CHECK(error_of([] { crossing_bound_knot(2); }) == ErrorCode::InvalidInput);
  CHECK(crossing_bound_link(2) == 2);
  CHECK(crossing_bound_link(6) == 4);
  CHECK(crossing_bound_link(7) == 4);
  CHECK(error_of([] { crossing_bound_link(0); }) == ErrorCode::UnlinkExcluded);
}

TEST_CASE("checkerboard bound never beats the crossing bound") {
  CHECK(checkerboard_bound(CrossingStats{2, 2, 2}) == 2);
  CHECK(checkerboard_bound(CrossingStats{6, 3, 5}) == 3);
  CHECK(error_of([] { checkerboard_bound(CrossingStats{6, 3, 3}); }) == ErrorCode::InvalidInput);
  for (int n = 1; n <= 30; ++n)
    for (int b = 1; b <= n + 1; ++b) CHECK(checkerboard_bound(CrossingStats{n, b, n + 2 - b}) <= crossing_bound_link(n));

  for (long m = 2; m <= 12; m += 2) {
    const auto s = crossing_stats(testing::torus_link(m));
    CHECK(checkerboard_bound(s) == 2);
  }
}

TEST_CASE("aggregation") {
  LinkRecord rec;
  rec.name = "x";
  rec.crossing_number = 6;
  const auto iv = aggregate(rec, {1, true});
  CHECK(iv.lower == 3);
  CHECK(iv.upper == 4);

  rec.witnesses.push_back({3, "band"});
  const auto tight = aggregate(rec, {1, true});
  CHECK(tight.lower == 3);
  CHECK(tight.upper == 3);

  rec.witnesses = {{2, ""}};
  CHECK(error_of([&] { aggregate(rec, {1, true}); }) == ErrorCode::EmptyInterval);

  LinkRecord none;
  none.name = "y";
  CHECK(error_of([&] { aggregate(none, {}); }) == ErrorCode::InvalidInput);

  LinkRecord split;
  split.name = "z";
  split.splittable = true;
  CHECK(error_of([&] { aggregate(split, {}); }) == ErrorCode::InvalidInput);
}

TEST_CASE("catalog intervals") {
  const Catalog cat = Catalog::load(CROSSCAP_TEST_CATALOG);
  const std::map<std::string, std::pair<int, int>> expected{
      {"Hopf", {2, 2}}, {"6_3^2", {3, 3}}, {"6_2^2", {2, 2}}, {"t2_10", {2, 2}}, {"3_1o3_1", {3, 3}}};
  for (const auto& link : cat.links()) {
    const LinkAnalysis a = analyze_link(link);
    INFO(link.name);
    CHECK(a.interval.lower <= a.interval.upper);
    CHECK(a.interval.lower >= 2);
  }
  for (const auto& [name, range] : expected) {
    INFO(name);
    REQUIRE(cat.has_link(name));
    const LinkAnalysis a = analyze_link(cat.link(name));
    CHECK(a.interval.lower == range.first);
    CHECK(a.interval.upper == range.second);
  }
}

TEST_CASE("catalog rejects entries without a known source tag") {
  const auto dir = std::filesystem::temp_directory_path() / "crosscap_bad_catalog";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir / "links");
  {
    std::ofstream out(dir / "knots.json");
    out << R"({"knots": [{"name": "3_1", "genus": {"value": 1, "source": "folklore"},
               "crosscap": {"value": 2, "source": "literature"},
               "crossing_number": {"value": 3, "source": "literature"}}]})";
  }
  CHECK(error_of([&] { Catalog::load(dir); }) == ErrorCode::InvalidInput);
  {
    std::ofstream out(dir / "knots.json");
    out << R"({"knots": [{"name": "3_1", "genus": {"value": 1},
               "crosscap": {"value": 2, "source": "literature"},
               "crossing_number": {"value": 3, "source": "literature"}}]})";
  }
  CHECK(error_of([&] { Catalog::load(dir); }) == ErrorCode::InvalidInput);
  {
    std::ofstream out(dir / "knots.json");
    out << R"({"knots": [{"name": "3_1", "genus": {"value": 1, "source": "derived"},
               "crosscap": {"value": 2, "source": "literature"},
               "crossing_number": {"value": 3, "source": "literature"}}]})";
  }
  CHECK(Catalog::load(dir).knot("3_1").crosscap == 2);
  CHECK(error_of([&] { Catalog::load(dir).knot("4_1"); }) == ErrorCode::UnknownName);
  std::filesystem::remove_all(dir);
}
