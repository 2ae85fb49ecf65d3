#pragma once

// Planar knot diagrams, obtained either from the grid diagram of an arc
// presentation or from a generic parallel projection of a lattice polygon.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latknot/arc_presentation.hpp"
#include "latknot/error.hpp"
#include "latknot/lattice.hpp"

namespace latknot {

/// Edge labels are 1-based positions along the traversal; edge e runs from
/// the (e-1)-th crossing passage to the e-th.
struct PlanarCrossing {
  int over_in = 0;
  int over_out = 0;
  int under_in = 0;
  int under_out = 0;
  int sign = 0; // +1 right-handed, -1 left-handed

  friend bool operator==(const PlanarCrossing &, const PlanarCrossing &) = default;
};

struct PlanarDiagram {
  std::vector<PlanarCrossing> crossings;
  int edge_count = 0;
  /// Crossing passages in traversal order: +c over, -c under (c is 1-based).
  std::vector<int> gauss;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }

  friend bool operator==(const PlanarDiagram &, const PlanarDiagram &) = default;
};

/// Same diagram with every crossing switched.
inline PlanarDiagram mirror(const PlanarDiagram &d) {
  PlanarDiagram out = d;
  for (auto &c : out.crossings) {
    std::swap(c.over_in, c.under_in);
    std::swap(c.over_out, c.under_out);
    c.sign = -c.sign;
  }
  for (auto &g : out.gauss)
    g = -g;
  return out;
}

/// PD code, one "X(a,b,c,d)" line per crossing: a is the incoming under
/// edge and the rest follow counterclockwise.
inline std::string pd_code(const PlanarDiagram &d) {
  std::string out;
  for (const auto &c : d.crossings) {
    const int b = c.sign > 0 ? c.over_out : c.over_in;
    const int dd = c.sign > 0 ? c.over_in : c.over_out;
    out += "X(" + std::to_string(c.under_in) + "," + std::to_string(b) + "," + std::to_string(c.under_out) + "," +
           std::to_string(dd) + ")\n";
  }
  return out;
}

/// Inverse of pd_code for diagrams whose edges are labelled 1..2n along the
/// orientation.
inline PlanarDiagram diagram_from_pd(const std::vector<std::array<int, 4>> &pd) {
  PlanarDiagram d;
  const int n = static_cast<int>(pd.size());
  d.edge_count = 2 * n;
  auto next = [&](int e) { return e == 2 * n ? 1 : e + 1; };
  // passage[e] is the crossing entered along edge e.
  std::vector<int> passage(static_cast<std::size_t>(2 * n) + 1, 0);
  for (int k = 0; k < n; ++k) {
    const auto [a, b, c, dd] = pd[static_cast<std::size_t>(k)];
    for (int e : {a, b, c, dd})
      if (e < 1 || e > 2 * n)
        throw Error(ErrorCode::Parse, "PD edge label out of range");
    if (c != next(a))
      throw Error(ErrorCode::Parse, "PD under strand is not consecutive");
    PlanarCrossing x;
    x.under_in = a;
    x.under_out = c;
    if (dd == next(b)) {
      x.over_in = b;
      x.over_out = dd;
      x.sign = -1;
    } else if (b == next(dd)) {
      x.over_in = dd;
      x.over_out = b;
      x.sign = 1;
    } else {
      throw Error(ErrorCode::Parse, "PD over strand is not consecutive");
    }
    passage[static_cast<std::size_t>(x.under_in)] = -(k + 1);
    passage[static_cast<std::size_t>(x.over_in)] = k + 1;
    d.crossings.push_back(x);
  }
  for (int e = 1; e <= 2 * n; ++e) {
    if (passage[static_cast<std::size_t>(e)] == 0)
      throw Error(ErrorCode::Parse, "PD edge enters no crossing");
    d.gauss.push_back(passage[static_cast<std::size_t>(e)]);
  }
  // Start the Gauss word at the passage that edge 2n enters, matching assemble().
  std::rotate(d.gauss.rbegin(), d.gauss.rbegin() + 1, d.gauss.rend());
  return d;
}

namespace detail {

using i128 = __int128;
using Point2 = std::array<std::int64_t, 2>;

/// Non-negative fraction num/den with den > 0.
struct Fraction {
  i128 num = 0;
  i128 den = 1;
};

inline int compare(const Fraction &l, const Fraction &r) {
  const i128 a = l.num * r.den, b = r.num * l.den;
  return a < b ? -1 : (a > b ? 1 : 0);
}

inline i128 cross(const Point2 &p, const Point2 &q) { return static_cast<i128>(p[0]) * q[1] - static_cast<i128>(p[1]) * q[0]; }
inline Point2 sub(const Point2 &p, const Point2 &q) { return {p[0] - q[0], p[1] - q[1]}; }

inline Fraction make_fraction(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

/// 0 < f < 1, 0 <= f <= 1, f in {0, 1}.
inline bool open_unit(const Fraction &f) { return f.num > 0 && f.num < f.den; }
inline bool closed_unit(const Fraction &f) { return f.num >= 0 && f.num <= f.den; }

struct SegmentHit {
  int seg_a, seg_b;
  Fraction ta, tb;
};

// Collinear segments overlapping in more than a point.
inline bool collinear_overlap(const Point2 &p0, const Point2 &p1, const Point2 &q0, const Point2 &q1) {
  const Point2 r = sub(p1, p0);
  if (cross(r, sub(q0, p0)) != 0 || cross(r, sub(q1, p0)) != 0)
    return false;
  auto proj = [&](const Point2 &x) { return static_cast<i128>(x[0] - p0[0]) * r[0] + static_cast<i128>(x[1] - p0[1]) * r[1]; };
  const i128 len = proj(p1);
  i128 lo = proj(q0), hi = proj(q1);
  if (lo > hi)
    std::swap(lo, hi);
  return std::max<i128>(lo, 0) < std::min(hi, len);
}

/// Transversal crossings of a closed polyline, or nullopt if the polyline is
/// not generic (repeated vertex, vertex on another edge, overlapping edges,
/// or three edges through one point).
inline std::optional<std::vector<SegmentHit>> generic_crossings(const std::vector<Point2> &pts) {
  const int m = static_cast<int>(pts.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (pts[static_cast<std::size_t>(i)] == pts[static_cast<std::size_t>(j)])
        return std::nullopt;

  std::vector<SegmentHit> hits;
  for (int i = 0; i < m; ++i) {
    const Point2 &p0 = pts[static_cast<std::size_t>(i)];
    const Point2 &p1 = pts[static_cast<std::size_t>((i + 1) % m)];
    const Point2 r = sub(p1, p0);
    for (int j = i + 1; j < m; ++j) {
      const Point2 &q0 = pts[static_cast<std::size_t>(j)];
      const Point2 &q1 = pts[static_cast<std::size_t>((j + 1) % m)];
      const Point2 s = sub(q1, q0);
      const bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
      const i128 denom = cross(r, s);
      if (denom == 0) {
        if (collinear_overlap(p0, p1, q0, q1))
          return std::nullopt;
        continue;
      }
      if (adjacent)
        continue; // Non-parallel neighbours meet only at their shared vertex.
      const Point2 w = sub(q0, p0);
      const Fraction t = make_fraction(cross(w, s), denom);
      const Fraction u = make_fraction(cross(w, r), denom);
      if (!closed_unit(t) || !closed_unit(u))
        continue;
      if (!open_unit(t) || !open_unit(u))
        return std::nullopt;
      hits.push_back({i, j, t, u});
    }
  }
  // Triple points show up as two hits at the same parameter of one segment.
  std::vector<std::vector<Fraction>> along(static_cast<std::size_t>(m));
  for (const auto &h : hits) {
    along[static_cast<std::size_t>(h.seg_a)].push_back(h.ta);
    along[static_cast<std::size_t>(h.seg_b)].push_back(h.tb);
  }
  for (auto &v : along) {
    std::sort(v.begin(), v.end(), [](const Fraction &l, const Fraction &r) { return compare(l, r) < 0; });
    for (std::size_t k = 1; k < v.size(); ++k)
      if (compare(v[k - 1], v[k]) == 0)
        return std::nullopt;
  }
  return hits;
}

/// Assembles the diagram from crossings of a generic closed polyline.
/// `a_over[h]` says whether hits[h].seg_a passes over hits[h].seg_b.
inline PlanarDiagram assemble(const std::vector<Point2> &pts, const std::vector<SegmentHit> &hits,
                              const std::vector<bool> &a_over) {
  struct Passage {
    int seg;
    Fraction t;
    int crossing;
    bool over;
  };
  const int m = static_cast<int>(pts.size());
  const int n = static_cast<int>(hits.size());
  std::vector<Passage> passages;
  passages.reserve(static_cast<std::size_t>(2 * n));
  for (int c = 0; c < n; ++c) {
    const auto &h = hits[static_cast<std::size_t>(c)];
    const bool over = a_over[static_cast<std::size_t>(c)];
    passages.push_back({h.seg_a, h.ta, c, over});
    passages.push_back({h.seg_b, h.tb, c, !over});
  }
  std::sort(passages.begin(), passages.end(), [](const Passage &l, const Passage &r) {
    if (l.seg != r.seg)
      return l.seg < r.seg;
    return compare(l.t, r.t) < 0;
  });

  auto direction = [&](int seg) {
    return sub(pts[static_cast<std::size_t>((seg + 1) % m)], pts[static_cast<std::size_t>(seg)]);
  };

  PlanarDiagram d;
  d.crossings.resize(static_cast<std::size_t>(n));
  d.edge_count = 2 * n;
  std::vector<int> over_seg(static_cast<std::size_t>(n)), under_seg(static_cast<std::size_t>(n));
  for (int e = 0; e < 2 * n; ++e) {
    const auto &p = passages[static_cast<std::size_t>(e)];
    const int in = e == 0 ? 2 * n : e;
    const int out = e + 1;
    auto &c = d.crossings[static_cast<std::size_t>(p.crossing)];
    if (p.over) {
      c.over_in = in;
      c.over_out = out;
      over_seg[static_cast<std::size_t>(p.crossing)] = p.seg;
    } else {
      c.under_in = in;
      c.under_out = out;
      under_seg[static_cast<std::size_t>(p.crossing)] = p.seg;
    }
    d.gauss.push_back(p.over ? p.crossing + 1 : -(p.crossing + 1));
  }
  for (int c = 0; c < n; ++c) {
    const i128 s = cross(direction(over_seg[static_cast<std::size_t>(c)]), direction(under_seg[static_cast<std::size_t>(c)]));
    d.crossings[static_cast<std::size_t>(c)].sign = s > 0 ? 1 : -1;
  }
  return d;
}

} // namespace detail

/// Grid diagram of P: page k is a horizontal segment on row k, binding index
/// i a vertical segment on column i, verticals always over. Traversal starts
/// on page 1 heading toward its smaller binding index.
inline PlanarDiagram arc_to_planar(const ArcPresentation &P) {
  std::vector<detail::Point2> pts;
  int page = 1;
  int column = P.arc(1).hi;
  for (int step = 0; step < P.size(); ++step) {
    pts.push_back({column, page});
    column = P.arc(page).other(column);
    pts.push_back({column, page});
    auto [k1, k2] = P.pages_at(column);
    page = k1 == page ? k2 : k1;
  }
  // Even segments are horizontal, odd ones vertical.
  const auto hits = detail::generic_crossings(pts);
  detail::ensure(hits.has_value(), "grid diagram is not generic");
  std::vector<bool> a_over;
  for (const auto &h : *hits)
    a_over.push_back(h.seg_a % 2 == 1);
  return detail::assemble(pts, *hits, a_over);
}

/// Upper bound on the coordinate span accepted by project_polygon; keeps all
/// projection arithmetic inside 128-bit integers.
inline constexpr int kMaxProjectionSpan = 256;
inline constexpr int kProjectionCandidates = 64;

struct Projection {
  PlanarDiagram diagram;
  std::int64_t base = 0; // direction (1, base, base^2)
};

/// Parallel projection along (1, B, B^2) for the first B >= span + 2 that
/// yields a generic image. Image point of (x,y,z) is (B^2 x - z, B^2 y - B z);
/// along the direction, larger z is nearer the viewer.
inline Projection project_polygon_with_direction(const LatticePolygon &poly) {
  auto verts = polygon_vertices(poly);
  const std::size_t m = verts.size();
  // Rotate so that segment s is stick s.
  std::rotate(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(m - 1), verts.end());
  int lo = verts[0][0], hi = verts[0][0];
  for (const auto &v : verts)
    for (int c : v) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  const int span = hi - lo + 1;
  if (span > kMaxProjectionSpan)
    throw Error(ErrorCode::NoGenericDirection, "polygon coordinate span " + std::to_string(span) + " exceeds " +
                                                   std::to_string(kMaxProjectionSpan));

  for (int attempt = 0; attempt < kProjectionCandidates; ++attempt) {
    const std::int64_t B = span + 2 + attempt;
    std::vector<detail::Point2> pts;
    pts.reserve(m);
    for (const auto &v : verts) {
      const std::int64_t x = v[0] - lo, y = v[1] - lo, z = v[2] - lo;
      pts.push_back({B * B * x - z, B * B * y - B * z});
    }
    const auto hits = detail::generic_crossings(pts);
    if (!hits)
      continue;
    std::vector<bool> a_over;
    a_over.reserve(hits->size());
    for (const auto &h : *hits) {
      auto depth = [&](int seg, const detail::Fraction &t) {
        // z0 + t (z1 - z0), scaled by t.den.
        const detail::i128 z0 = verts[static_cast<std::size_t>(seg)][2];
        const detail::i128 z1 = verts[(static_cast<std::size_t>(seg) + 1) % m][2];
        return detail::Fraction{z0 * t.den + t.num * (z1 - z0), t.den};
      };
      const int cmp = detail::compare(depth(h.seg_a, h.ta), depth(h.seg_b, h.tb));
      if (cmp == 0)
        throw Error(ErrorCode::SelfIntersection, "sticks " + std::to_string(h.seg_a) + " and " +
                                                     std::to_string(h.seg_b) + " meet in space");
      a_over.push_back(cmp > 0);
    }
    return Projection{detail::assemble(pts, *hits, a_over), B};
  }
  throw Error(ErrorCode::NoGenericDirection, "no generic projection among " + std::to_string(kProjectionCandidates) +
                                                 " candidate directions");
}

inline PlanarDiagram project_polygon(const LatticePolygon &poly) { return project_polygon_with_direction(poly).diagram; }

} // namespace latknot
