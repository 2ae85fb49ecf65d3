#pragma once

// Stick polygons in the cubic lattice built from arc presentations.
//
// Binding index i sits at (i, i) on the diagonal of the x-y plane and page k
// is the z-level k. An arc {i < j} on page k becomes the x-stick from (i,i,k)
// to (j,i,k) followed by the y-stick up to (j,j,k); the two arcs meeting at
// binding index i are joined by a z-stick at (i,i).

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latknot/arc_presentation.hpp"
#include "latknot/error.hpp"

namespace latknot {

enum class Axis { X = 0, Y = 1, Z = 2 };

inline char axis_name(Axis axis) noexcept { return "xyz"[static_cast<int>(axis)]; }

using LatticePoint = std::array<int, 3>;

/// Axis-parallel segment {lo <= t <= hi} along `axis`; c1, c2 are the two
/// fixed coordinates in x, y, z order with the varying one skipped.
struct LatticeStick {
  Axis axis = Axis::X;
  int lo = 0;
  int hi = 0;
  int c1 = 0;
  int c2 = 0;

  static LatticeStick x(int lo, int hi, int y, int z) { return make(Axis::X, lo, hi, y, z); }
  static LatticeStick y(int lo, int hi, int x, int z) { return make(Axis::Y, lo, hi, x, z); }
  static LatticeStick z(int lo, int hi, int x, int y) { return make(Axis::Z, lo, hi, x, y); }

  static LatticeStick make(Axis axis, int from, int to, int c1, int c2) {
    return LatticeStick{axis, std::min(from, to), std::max(from, to), c1, c2};
  }

  LatticePoint point_at(int t) const noexcept {
    switch (axis) {
    case Axis::X: return {t, c1, c2};
    case Axis::Y: return {c1, t, c2};
    case Axis::Z: return {c1, c2, t};
    }
    return {};
  }
  LatticePoint low_end() const noexcept { return point_at(lo); }
  LatticePoint high_end() const noexcept { return point_at(hi); }

  /// Per-coordinate closed range covered by the stick.
  std::array<std::array<int, 2>, 3> box() const noexcept {
    const LatticePoint p = low_end(), q = high_end();
    return {{{p[0], q[0]}, {p[1], q[1]}, {p[2], q[2]}}};
  }

  bool contains(const LatticePoint &p) const noexcept {
    const auto b = box();
    for (int d = 0; d < 3; ++d)
      if (p[static_cast<std::size_t>(d)] < b[static_cast<std::size_t>(d)][0] ||
          p[static_cast<std::size_t>(d)] > b[static_cast<std::size_t>(d)][1])
        return false;
    return true;
  }

  friend auto operator<=>(const LatticeStick &, const LatticeStick &) = default;
};

/// Closed lattice polygon; sticks are listed in traversal order.
struct LatticePolygon {
  std::vector<LatticeStick> sticks;

  friend bool operator==(const LatticePolygon &, const LatticePolygon &) = default;
};

inline int stick_count(const LatticePolygon &poly) noexcept { return static_cast<int>(poly.sticks.size()); }

enum class PolygonDefect { TooFewSticks, ZeroLength, SameAxisAdjacent, Disjointed, Overlap };

inline const char *to_string(PolygonDefect d) noexcept {
  switch (d) {
  case PolygonDefect::TooFewSticks: return "too-few-sticks";
  case PolygonDefect::ZeroLength: return "zero-length";
  case PolygonDefect::SameAxisAdjacent: return "same-axis-adjacent";
  case PolygonDefect::Disjointed: return "disjointed";
  case PolygonDefect::Overlap: return "overlap";
  }
  return "unknown";
}

struct PolygonViolation {
  PolygonDefect defect;
  int first = 0;
  int second = 0;
  std::string detail;
};

namespace detail {

using Box = std::array<std::array<int, 2>, 3>;

inline std::optional<Box> intersect(const LatticeStick &s, const LatticeStick &t) {
  Box out{};
  const Box a = s.box(), b = t.box();
  for (std::size_t d = 0; d < 3; ++d) {
    out[d] = {std::max(a[d][0], b[d][0]), std::min(a[d][1], b[d][1])};
    if (out[d][0] > out[d][1])
      return std::nullopt;
  }
  return out;
}

inline bool is_point(const Box &b) { return b[0][0] == b[0][1] && b[1][0] == b[1][1] && b[2][0] == b[2][1]; }

inline LatticePoint corner(const Box &b) { return {b[0][0], b[1][0], b[2][0]}; }

inline bool is_endpoint(const LatticeStick &s, const LatticePoint &p) { return p == s.low_end() || p == s.high_end(); }

} // namespace detail

/// Exact check of every polygon requirement over all stick pairs.
inline std::vector<PolygonViolation> validate_polygon(const LatticePolygon &poly) {
  std::vector<PolygonViolation> out;
  const auto &s = poly.sticks;
  const int m = static_cast<int>(s.size());
  if (m < 4) {
    out.push_back({PolygonDefect::TooFewSticks, 0, 0, std::to_string(m) + " sticks"});
    return out;
  }
  for (int i = 0; i < m; ++i)
    if (s[static_cast<std::size_t>(i)].lo >= s[static_cast<std::size_t>(i)].hi)
      out.push_back({PolygonDefect::ZeroLength, i, i, "lo >= hi"});

  // joint[i] is where stick i meets stick i+1.
  std::vector<std::optional<LatticePoint>> joint(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    const auto &si = s[static_cast<std::size_t>(i)];
    const auto &sj = s[static_cast<std::size_t>(j)];
    if (si.axis == sj.axis)
      out.push_back({PolygonDefect::SameAxisAdjacent, i, j, std::string("both along ") + axis_name(si.axis)});
    const auto meet = detail::intersect(si, sj);
    if (!meet || !detail::is_point(*meet)) {
      out.push_back({PolygonDefect::Disjointed, i, j, meet ? "overlap in more than one point" : "do not meet"});
      continue;
    }
    const LatticePoint p = detail::corner(*meet);
    if (!detail::is_endpoint(si, p) || !detail::is_endpoint(sj, p)) {
      out.push_back({PolygonDefect::Disjointed, i, j, "meet away from a shared endpoint"});
      continue;
    }
    joint[static_cast<std::size_t>(i)] = p;
  }
  // Each stick must enter at one endpoint and leave at the other.
  for (int i = 0; i < m; ++i) {
    const auto &in = joint[static_cast<std::size_t>((i + m - 1) % m)];
    const auto &outp = joint[static_cast<std::size_t>(i)];
    if (in && outp && *in == *outp)
      out.push_back({PolygonDefect::Disjointed, (i + m - 1) % m, (i + 1) % m, "both neighbours use the same endpoint"});
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1)
        continue;
      if (detail::intersect(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]))
        out.push_back({PolygonDefect::Overlap, i, j, "non-adjacent sticks intersect"});
    }
  }
  return out;
}

/// Cyclic vertex list: vertex i is where stick i meets stick i+1.
inline std::vector<LatticePoint> polygon_vertices(const LatticePolygon &poly) {
  std::vector<LatticePoint> out;
  const auto &s = poly.sticks;
  const std::size_t m = s.size();
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto meet = detail::intersect(s[i], s[(i + 1) % m]);
    detail::ensure(meet && detail::is_point(*meet), "polygon_vertices on an invalid polygon");
    out.push_back(detail::corner(*meet));
  }
  return out;
}

namespace detail {

inline void require_valid(const LatticePolygon &poly, const char *stage) {
  const auto violations = validate_polygon(poly);
  if (violations.empty())
    return;
  std::string msg = std::string(stage) + ":";
  for (const auto &v : violations)
    msg += std::string(" ") + to_string(v.defect) + "(" + std::to_string(v.first) + "," + std::to_string(v.second) + ")";
  throw Error(ErrorCode::SelfIntersection, msg);
}

/// Orders an unordered stick set into a cycle by matching endpoints, then
/// merges consecutive collinear sticks.
inline LatticePolygon order_cycle(std::vector<LatticeStick> sticks) {
  const std::size_t m = sticks.size();
  if (m < 4)
    throw Error(ErrorCode::SelfIntersection, "fewer than four sticks");
  std::vector<LatticeStick> ordered;
  ordered.reserve(m);
  std::vector<bool> used(m, false);
  ordered.push_back(sticks[0]);
  used[0] = true;
  LatticePoint head = sticks[0].high_end();
  const LatticePoint start = sticks[0].low_end();
  while (ordered.size() < m) {
    std::optional<std::size_t> next;
    for (std::size_t k = 0; k < m; ++k) {
      if (used[k] || !is_endpoint(sticks[k], head))
        continue;
      if (next)
        throw Error(ErrorCode::SelfIntersection, "more than two sticks share an endpoint");
      next = k;
    }
    if (!next)
      throw Error(ErrorCode::SelfIntersection, "stick chain is not closed");
    used[*next] = true;
    const auto &s = sticks[*next];
    head = s.low_end() == head ? s.high_end() : s.low_end();
    ordered.push_back(s);
  }
  if (head != start)
    throw Error(ErrorCode::SelfIntersection, "stick chain does not return to its start");

  // Merge collinear neighbours (cyclically).
  auto collinear = [](const LatticeStick &p, const LatticeStick &q) {
    return p.axis == q.axis && p.c1 == q.c1 && p.c2 == q.c2;
  };
  bool merged = true;
  while (merged && ordered.size() > 4) {
    merged = false;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      const std::size_t j = (i + 1) % ordered.size();
      if (!collinear(ordered[i], ordered[j]))
        continue;
      LatticeStick joined = ordered[i];
      joined.lo = std::min(ordered[i].lo, ordered[j].lo);
      joined.hi = std::max(ordered[i].hi, ordered[j].hi);
      ordered[i] = joined;
      ordered.erase(ordered.begin() + static_cast<std::ptrdiff_t>(j));
      merged = true;
      break;
    }
  }
  // Start at the first stick of the input for stable output.
  return LatticePolygon{std::move(ordered)};
}

struct StickSet {
  std::vector<LatticeStick> sticks;

  void arc_below(int i, int j, int page) {
    sticks.push_back(LatticeStick::x(i, j, i, page));
    sticks.push_back(LatticeStick::y(i, j, j, page));
  }
  // Mirror image of arc_below across the diagonal.
  void arc_above(int i, int j, int page) {
    sticks.push_back(LatticeStick::y(i, j, i, page));
    sticks.push_back(LatticeStick::x(i, j, j, page));
  }
  void z_at(int x, int y, int z1, int z2) {
    if (z1 != z2)
      sticks.push_back(LatticeStick::z(z1, z2, x, y));
  }

  std::size_t index_of(const LatticeStick &s) const {
    auto it = std::find(sticks.begin(), sticks.end(), s);
    if (it == sticks.end())
      internal_error("expected stick not present; was the polygon produced by construct_basic?");
    return static_cast<std::size_t>(it - sticks.begin());
  }

  // At binding index 1: drop the shorter x-stick on y-level 1, shorten the
  // longer one, and slide the z-stick along y = 1 to the dropped arc's end.
  void reduce_low_end(const ArcPresentation &P) {
    auto [k1, k2] = P.pages_at(1);
    int far1 = P.arc(k1).other(1), far2 = P.arc(k2).other(1);
    ensure(far1 != far2, "arcs at binding index 1 share both endpoints");
    if (far1 > far2) {
      std::swap(k1, k2);
      std::swap(far1, far2);
    }
    const std::size_t z = index_of(LatticeStick::z(k1, k2, 1, 1));
    sticks[z] = LatticeStick::z(k1, k2, far1, 1);
    const std::size_t longer = index_of(LatticeStick::x(1, far2, 1, k2));
    sticks[longer] = LatticeStick::x(far1, far2, 1, k2);
    sticks.erase(sticks.begin() + static_cast<std::ptrdiff_t>(index_of(LatticeStick::x(1, far1, 1, k1))));
  }

  // Mirror of reduce_low_end on x-level a.
  void reduce_high_end(const ArcPresentation &P) {
    const int a = P.size();
    auto [k1, k2] = P.pages_at(a);
    int far1 = P.arc(k1).other(a), far2 = P.arc(k2).other(a);
    ensure(far1 != far2, "arcs at binding index a share both endpoints");
    if (far1 < far2) {
      std::swap(k1, k2);
      std::swap(far1, far2);
    }
    // far1 > far2: the y-stick from far1 is the shorter one.
    const std::size_t z = index_of(LatticeStick::z(k1, k2, a, a));
    sticks[z] = LatticeStick::z(k1, k2, a, far1);
    const std::size_t longer = index_of(LatticeStick::y(far2, a, a, k2));
    sticks[longer] = LatticeStick::y(far2, far1, a, k2);
    sticks.erase(sticks.begin() + static_cast<std::ptrdiff_t>(index_of(LatticeStick::y(far1, a, a, k1))));
  }
};

inline void require_constructible(const ArcPresentation &P) {
  if (P.size() < 3)
    throw Error(ErrorCode::ArcCountOutOfRange, "lattice constructions need at least 3 arcs");
}

inline StickSet basic_sticks(const ArcPresentation &P, int flipped_page) {
  StickSet set;
  for (int k = 1; k <= P.size(); ++k) {
    const Arc &arc = P.arc(k);
    if (k == flipped_page)
      set.arc_above(arc.lo, arc.hi, k);
    else
      set.arc_below(arc.lo, arc.hi, k);
  }
  for (int i = 1; i <= P.size(); ++i) {
    auto [k1, k2] = P.pages_at(i);
    set.z_at(i, i, k1, k2);
  }
  return set;
}

} // namespace detail

/// Two sticks per arc plus one z-stick per binding index: 3a sticks.
inline LatticePolygon construct_basic(const ArcPresentation &P) {
  detail::require_constructible(P);
  auto poly = detail::order_cycle(detail::basic_sticks(P, 0).sticks);
  detail::require_valid(poly, "construct_basic");
  detail::ensure(stick_count(poly) == 3 * P.size(), "construct_basic did not produce 3a sticks");
  return poly;
}

/// Removes one stick at each end of the diagonal: 3a - 2 sticks.
inline LatticePolygon reduce_ends(const LatticePolygon &poly, const ArcPresentation &P) {
  detail::require_constructible(P);
  detail::StickSet set{poly.sticks};
  set.reduce_low_end(P);
  set.reduce_high_end(P);
  auto out = detail::order_cycle(std::move(set.sticks));
  detail::require_valid(out, "reduce_ends");
  detail::ensure(stick_count(out) == stick_count(poly) - 2, "reduce_ends did not save two sticks");
  return out;
}

/// The normalized presentation built with arc {alpha, beta} (page 1) drawn
/// above the diagonal, both end reductions applied, and that arc raised to
/// z-level `level` (1 <= level <= lift_page). Attachment z-sticks are
/// re-ranged; a z-stick that shrinks to nothing is dropped and collinear
/// neighbours merge.
inline LatticePolygon lift_flipped_arc(const NormalizedNonStar &nns, int level) {
  const ArcPresentation &P = nns.presentation;
  const int a = P.size();
  detail::require_constructible(P);
  detail::ensure(1 < nns.alpha && nns.alpha < nns.beta && nns.beta < a, "normalized witness out of order");
  detail::ensure(P.arc(1) == Arc(nns.alpha, nns.beta), "arc {alpha, beta} is not on page 1");
  detail::ensure(P.arc(nns.lift_page) == Arc(nns.beta, a), "arc {beta, a} is not on lift_page");
  if (level < 1 || level > nns.lift_page)
    detail::internal_error("lift level outside 1..lift_page");

  detail::StickSet set = detail::basic_sticks(P, 1);
  set.reduce_low_end(P);
  set.reduce_high_end(P);
  if (level > 1) {
    const auto [a1, a2] = P.pages_at(nns.alpha);
    const int alpha_other = a1 == 1 ? a2 : a1;
    const auto [b1, b2] = P.pages_at(nns.beta);
    const int beta_other = b1 == 1 ? b2 : b1;
    detail::ensure(beta_other == nns.lift_page, "binding beta does not join pages 1 and lift_page");
    detail::ensure(alpha_other != nns.lift_page, "arcs at alpha and beta share a page");

    auto &sticks = set.sticks;
    const auto erase = [&](const LatticeStick &s) {
      sticks.erase(sticks.begin() + static_cast<std::ptrdiff_t>(set.index_of(s)));
    };
    erase(LatticeStick::y(nns.alpha, nns.beta, nns.alpha, 1));
    erase(LatticeStick::x(nns.alpha, nns.beta, nns.beta, 1));
    erase(LatticeStick::z(1, alpha_other, nns.alpha, nns.alpha));
    erase(LatticeStick::z(1, nns.lift_page, nns.beta, nns.beta));
    set.arc_above(nns.alpha, nns.beta, level);
    set.z_at(nns.alpha, nns.alpha, level, alpha_other);
    set.z_at(nns.beta, nns.beta, level, nns.lift_page);
  }
  auto poly = detail::order_cycle(std::move(set.sticks));
  detail::require_valid(poly, "lift_flipped_arc");
  return poly;
}

/// Flip-and-lift construction for a non-star presentation: 3a - 4 sticks.
inline LatticePolygon construct_nonstar(const NormalizedNonStar &nns) {
  auto poly = lift_flipped_arc(nns, nns.lift_page);
  if (stick_count(poly) != 3 * nns.presentation.size() - 4)
    detail::internal_error("lifted arc did not merge with the arc on lift_page");
  return poly;
}

} // namespace latknot
