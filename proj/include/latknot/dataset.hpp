#pragma once

// Bundled arc presentations of small knots.
//
// Presentations other than 4_1 and 8_19 are read off the grid notation in
// KnotInfo (rows as pages). 4_1 is the first presentation with a = 6 and
// Alexander polynomial 1 - 3t + t^2 in for_each_presentation order; 8_19 is
// the star presentation with c_i = {i, i+3} on page i. The reference
// Alexander and Jones polynomials are KnotInfo values; Jones is in t and is
// only meaningful up to mirror image (t <-> 1/t). None of this is trusted at
// runtime: the dataset tests recompute every invariant.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latknot/arc_presentation.hpp"
#include "latknot/certify.hpp"
#include "latknot/laurent.hpp"

namespace latknot {

struct DatasetEntry {
  std::string name;
  ArcPresentation arcs;
  int crossing_number;
  KnotFlags flags;
  std::vector<std::int64_t> expected_alexander; // canonical, constant term first
  LaurentPolynomial expected_jones;             // in t
};

namespace detail {

struct RawEntry {
  const char *name;
  std::vector<std::pair<int, int>> arcs;
  int crossing_number;
  bool alternating;
  std::vector<std::int64_t> alexander;
  int jones_min_exponent;
  std::vector<std::int64_t> jones;
};

inline const std::vector<RawEntry> &raw_dataset() {
  static const std::vector<RawEntry> rows = {
    {"3_1", {{1, 4}, {2, 5}, {1, 3}, {2, 4}, {3, 5}}, 3, true, {1, -1, 1}, 1, {1, 0, 1, -1}},
    {"4_1", {{1, 3}, {2, 5}, {4, 6}, {3, 5}, {1, 4}, {2, 6}}, 4, true, {1, -3, 1}, -2, {1, -1, 1, -1, 1}},
    {"5_1", {{1, 6}, {2, 7}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}}, 5, true, {1, -1, 1, -1, 1}, 2, {1, 0, 1, -1, 1, -1}},
    {"5_2", {{3, 7}, {1, 6}, {5, 7}, {4, 6}, {2, 5}, {1, 3}, {2, 4}}, 5, true, {2, -3, 2}, 1, {1, -1, 2, -1, 1, -1}},
    {"6_1", {{3, 8}, {1, 7}, {6, 8}, {5, 7}, {4, 6}, {2, 5}, {1, 3}, {2, 4}}, 6, true, {2, -5, 2}, -2, {1, -1, 2, -2, 1, -1, 1}},
    {"6_2", {{1, 6}, {2, 8}, {1, 3}, {2, 4}, {3, 7}, {5, 8}, {4, 6}, {5, 7}}, 6, true, {1, -3, 3, -3, 1}, -1, {1, -1, 2, -2, 2, -2, 1}},
    {"6_3", {{1, 5}, {2, 7}, {1, 3}, {2, 6}, {4, 8}, {3, 7}, {5, 8}, {4, 6}}, 6, true, {1, -3, 5, -3, 1}, -3, {-1, 2, -2, 3, -2, 2, -1}},
    {"7_1", {{1, 8}, {2, 9}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 8}, {7, 9}}, 7, true, {1, -1, 1, -1, 1, -1, 1}, 3, {1, 0, 1, -1, 1, -1, 1, -1}},
    {"7_2", {{3, 9}, {1, 8}, {7, 9}, {6, 8}, {5, 7}, {4, 6}, {2, 5}, {1, 3}, {2, 4}}, 7, true, {3, -5, 3}, 1, {1, -1, 2, -2, 2, -1, 1, -1}},
    {"7_3", {{1, 6}, {2, 8}, {1, 3}, {2, 4}, {3, 5}, {4, 7}, {6, 9}, {5, 8}, {7, 9}}, 7, true, {2, -3, 3, -3, 2}, 2, {1, -1, 2, -2, 3, -2, 1, -1}},
    {"7_4", {{3, 9}, {1, 8}, {7, 9}, {6, 8}, {2, 7}, {1, 5}, {4, 6}, {3, 5}, {2, 4}}, 7, true, {4, -7, 4}, 1, {1, -2, 3, -2, 3, -2, 1, -1}},
    {"7_5", {{1, 5}, {2, 8}, {1, 3}, {2, 4}, {3, 6}, {5, 9}, {4, 7}, {6, 8}, {7, 9}}, 7, true, {2, -4, 5, -4, 2}, 2, {1, -1, 3, -3, 3, -3, 2, -1}},
    {"7_6", {{6, 9}, {3, 8}, {7, 9}, {5, 8}, {1, 6}, {4, 7}, {2, 5}, {1, 3}, {2, 4}}, 7, true, {1, -5, 7, -5, 1}, -1, {1, -2, 3, -3, 4, -3, 2, -1}},
    {"7_7", {{1, 6}, {2, 8}, {1, 3}, {2, 7}, {4, 9}, {3, 5}, {4, 8}, {6, 9}, {5, 7}}, 7, true, {1, -5, 9, -5, 1}, -4, {1, -2, 3, -4, 4, -3, 3, -1}},
    {"8_19", {{1, 4}, {2, 5}, {3, 6}, {4, 7}, {1, 5}, {2, 6}, {3, 7}}, 8, false, {1, -1, 0, 1, 0, -1, 1}, 3, {1, 0, 1, 0, 0, -1}},
    {"8_20", {{1, 5}, {2, 6}, {1, 3}, {4, 8}, {2, 5}, {3, 7}, {6, 8}, {4, 7}}, 8, false, {1, -2, 3, -2, 1}, -5, {-1, 1, -1, 2, -1, 2, -1}},
    {"8_21", {{1, 6}, {2, 8}, {1, 5}, {3, 7}, {2, 4}, {3, 6}, {5, 8}, {4, 7}}, 8, false, {1, -4, 5, -4, 1}, 1, {2, -2, 3, -3, 2, -2, 1}},
  };
  return rows;
}

} // namespace detail

/// All bundled knots, in table order. Every entry is prime.
inline const std::vector<DatasetEntry> &dataset() {
  static const std::vector<DatasetEntry> entries = [] {
    std::vector<DatasetEntry> out;
    for (const auto &r : detail::raw_dataset()) {
      KnotFlags flags{r.alternating, true, !r.alternating};
      out.push_back(DatasetEntry{r.name, validate(r.arcs), r.crossing_number, flags, r.alexander,
                                 LaurentPolynomial(r.jones_min_exponent, r.jones)});
    }
    return out;
  }();
  return entries;
}

inline std::optional<DatasetEntry> find_dataset_entry(std::string_view name) {
  for (const auto &e : dataset())
    if (e.name == name)
      return e;
  return std::nullopt;
}

} // namespace latknot
