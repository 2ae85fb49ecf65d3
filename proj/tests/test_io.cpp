#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <sstream>

#include "latknot/latknot.hpp"
#include "oracles.hpp"

using namespace latknot;

namespace {

int count_lines_starting(const std::string &text, const std::string &prefix) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);)
    n += line.rfind(prefix, 0) == 0;
  return n;
}

int count_occurrences(const std::string &text, const std::string &needle) {
  int n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
    ++n;
  return n;
}

LatticePolygon unit_square() {
  return LatticePolygon{{LatticeStick::x(0, 1, 0, 0), LatticeStick::y(0, 1, 1, 0), LatticeStick::x(0, 1, 1, 0),
                         LatticeStick::y(0, 1, 0, 0)}};
}

} // namespace

TEST(Json, PresentationSchema) {
  const auto P = find_dataset_entry("3_1")->arcs;
  EXPECT_EQ(canonical_dump(to_json(P)), R"({"arcs":[[1,4],[2,5],[1,3],[2,4],[3,5]]})");
  EXPECT_EQ(presentation_from_json(Json::parse(R"({"arcs":[[4,1],[5,2],[3,1],[4,2],[5,3]]})")), P);
  EXPECT_THROW(presentation_from_json(Json::parse(R"({"arcs":[[1,2,3]]})")), Error);
  EXPECT_THROW(presentation_from_json(Json::parse(R"([[1,2],[1,2]])")), Error);
  EXPECT_THROW(presentation_from_json(Json::parse(R"({"arcs":[[1,2],[3,4],[1,2],[3,4]]})")), InvalidPresentation);
}

TEST(Json, PolygonSchema) {
  const auto j = to_json(unit_square());
  EXPECT_EQ(j["sticks"][0], Json::parse(R"({"axis":"x","range":[0,1],"fixed":{"y":0,"z":0}})"));
  EXPECT_EQ(j["sticks"][1], Json::parse(R"({"axis":"y","range":[0,1],"fixed":{"x":1,"z":0}})"));
  const auto z = to_json(LatticePolygon{{LatticeStick::z(2, 5, 3, 4)}});
  EXPECT_EQ(z["sticks"][0]["fixed"], Json::parse(R"({"x":3,"y":4})"));
  EXPECT_THROW(polygon_from_json(Json::parse(R"({"sticks":[{"axis":"w","range":[0,1],"fixed":{}}]})")), Error);
}

TEST(Json, RoundTrips) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const auto P = random_presentation(5 + trial % 5, rng);
    EXPECT_EQ(presentation_from_json(Json::parse(canonical_dump(to_json(P)))), P);
    const auto r = construct_auto(P);
    const auto poly = polygon_from_json(Json::parse(canonical_dump(to_json(r.polygon))));
    EXPECT_EQ(poly.sticks, r.polygon.sticks);
    const auto cert = check_bounds(r.certificate, 3 + trial % 7);
    EXPECT_EQ(certificate_from_json(Json::parse(canonical_dump(to_json(cert)))), cert);
  }
  const LaurentPolynomial p(-3, {2, 0, -5});
  EXPECT_EQ(laurent_from_json(to_json(p)), p);
}

TEST(Json, CertificateVerdictsAreRecomputed) {
  auto j = to_json(check_bounds(construct_auto(find_dataset_entry("4_1")->arcs).certificate, 4));
  for (auto &b : j["bound_checks"]) {
    b["rhs"] = 0;
    b["holds"] = true;
  }
  const auto c = certificate_from_json(j);
  EXPECT_TRUE(c.bound_failed());
}

TEST(Json, CanonicalDumpSortsKeys) {
  const auto j = Json::parse(R"({ "b": 1, "a": [ 2, 3 ] })");
  EXPECT_EQ(canonical_dump(j), R"({"a":[2,3],"b":1})");
}

TEST(Obj, UnitSquare) {
  const auto obj = render_obj(unit_square());
  EXPECT_EQ(count_lines_starting(obj, "l "), 4);
  EXPECT_EQ(count_lines_starting(obj, "v "), 4);
}

TEST(Obj, CountsMatchSticks) {
  for (const auto &e : dataset()) {
    const auto r = construct_auto(e.arcs, {.check_invariant = false});
    const auto obj = render_obj(r.polygon);
    EXPECT_EQ(count_lines_starting(obj, "v "), r.certificate.stick_count) << e.name;
    EXPECT_EQ(count_lines_starting(obj, "l "), r.certificate.stick_count) << e.name;
  }
}

TEST(Obj, LinesFollowTheSticks) {
  const auto poly = construct_auto(find_dataset_entry("4_1")->arcs).polygon;
  std::istringstream in(render_obj(poly));
  std::vector<LatticePoint> v;
  std::vector<std::pair<int, int>> l;
  for (std::string tag; in >> tag;) {
    if (tag == "v") {
      LatticePoint p;
      in >> p[0] >> p[1] >> p[2];
      v.push_back(p);
    } else if (tag == "l") {
      int i, j;
      in >> i >> j;
      l.emplace_back(i, j);
    } else {
      std::string rest;
      std::getline(in, rest);
    }
  }
  ASSERT_EQ(l.size(), poly.sticks.size());
  for (std::size_t k = 0; k < l.size(); ++k) {
    const auto &s = poly.sticks[k];
    const auto p = v.at(static_cast<std::size_t>(l[k].first - 1)), q = v.at(static_cast<std::size_t>(l[k].second - 1));
    EXPECT_TRUE((p == s.low_end() && q == s.high_end()) || (q == s.low_end() && p == s.high_end()));
  }
}

TEST(Svg, FigureEightHasFourteenPaths) {
  const auto svg = render_svg(construct_auto(find_dataset_entry("4_1")->arcs).polygon);
  EXPECT_EQ(count_occurrences(svg, "<path "), 14);
  EXPECT_NE(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\""), std::string::npos);
  // Only path elements are drawn.
  EXPECT_EQ(count_occurrences(svg, "<") - 2, count_occurrences(svg, "<path ") + 1);
}

TEST(Svg, GapsOnlyWhereSticksCross) {
  const auto sq = render_svg(unit_square());
  EXPECT_EQ(count_occurrences(sq, "M "), 4);
  // A knotted polygon has hidden-line gaps, so some path has several pieces.
  const auto svg = render_svg(construct_auto(find_dataset_entry("3_1")->arcs).polygon);
  EXPECT_GT(count_occurrences(svg, "M "), count_occurrences(svg, "<path "));
}

TEST(Dataset, Contents) {
  const auto &d = dataset();
  EXPECT_EQ(d.size(), 17u);
  std::set<std::string> names;
  for (const auto &e : d)
    names.insert(e.name);
  for (const char *n : {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3", "7_1", "7_2", "7_3", "7_4", "7_5", "7_6",
                        "7_7", "8_19", "8_20", "8_21"})
    EXPECT_TRUE(names.count(n)) << n;
  EXPECT_FALSE(find_dataset_entry("9_42").has_value());
  EXPECT_EQ(find_dataset_entry("4_1")->arcs.size(), 6);
  EXPECT_EQ(find_dataset_entry("8_20")->arcs.size(), 8);
  EXPECT_EQ(find_dataset_entry("8_21")->arcs.size(), 8);
  EXPECT_TRUE(find_dataset_entry("8_21")->flags.non_alternating_prime);
  EXPECT_FALSE(find_dataset_entry("7_7")->flags.non_alternating_prime);
}

// Every stored invariant is recomputed here; nothing in the table is trusted.
TEST(Dataset, AlexanderMatchesTable) {
  for (const auto &e : dataset()) {
    const auto delta = alexander(arc_to_planar(e.arcs));
    EXPECT_EQ(delta.coefficients(), e.expected_alexander) << e.name;
    EXPECT_EQ(delta.min_exponent(), 0) << e.name;
    EXPECT_TRUE(oracle::grid_alexander_agrees(e.arcs, delta)) << e.name;
  }
}

// Kauffman bracket in A with A = t^(-1/4); compare up to mirror image.
TEST(Dataset, JonesMatchesTableUpToMirror) {
  for (const auto &e : dataset()) {
    const auto f = jones_kauffman(arc_to_planar(e.arcs));
    std::map<int, std::int64_t> in_t;
    for (int k = f.min_exponent(); k <= f.max_exponent(); ++k) {
      const auto c = f.coefficient(k);
      if (c == 0)
        continue;
      ASSERT_EQ(k % 4, 0) << e.name;
      in_t[-k / 4] = c;
    }
    const auto v = LaurentPolynomial::from_map(in_t);
    EXPECT_TRUE(v == e.expected_jones || v.reflected() == e.expected_jones) << e.name << ": " << v.to_string();
  }
}

// The figure-eight entry is the first a = 6 presentation with this Alexander
// polynomial in enumeration order.
TEST(Dataset, FigureEightIsFirstInEnumeration) {
  std::optional<ArcPresentation> first;
  for_each_presentation(6, [&](const ArcPresentation &P) {
    if (alexander(arc_to_planar(P)) == LaurentPolynomial(0, {1, -3, 1})) {
      first = P;
      return false;
    }
    return true;
  });
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(*first, find_dataset_entry("4_1")->arcs);
}

TEST(Dataset, SevenCrossingEntriesUseNineArcs) {
  for (const auto &e : dataset())
    if (e.name[0] == '7') {
      EXPECT_EQ(e.arcs.size(), 9) << e.name;
    }
}
