#pragma once

// JSON interchange for presentations, polygons and certificates, plus SVG
// and Wavefront OBJ exports of lattice polygons.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "latknot/arc_presentation.hpp"
#include "latknot/certify.hpp"
#include "latknot/error.hpp"
#include "latknot/lattice.hpp"
#include "latknot/laurent.hpp"

namespace latknot {

using Json = nlohmann::json;

/// Compact dump; object keys come out sorted.
inline std::string canonical_dump(const Json &j) { return j.dump(); }

inline Json to_json(const ArcPresentation &P) {
  Json arcs = Json::array();
  for (const auto &arc : P.arcs())
    arcs.push_back({arc.lo, arc.hi});
  return Json{{"arcs", arcs}};
}

inline ArcPresentation presentation_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("arcs") || !j["arcs"].is_array())
    throw Error(ErrorCode::Parse, "expected {\"arcs\": [[i,j], ...]}");
  std::vector<std::pair<int, int>> pairs;
  for (const auto &p : j["arcs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw Error(ErrorCode::Parse, "each arc must be a pair of integers");
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return validate(pairs);
}

namespace detail {

inline std::array<const char *, 2> fixed_names(Axis axis) {
  switch (axis) {
  case Axis::X: return {"y", "z"};
  case Axis::Y: return {"x", "z"};
  case Axis::Z: return {"x", "y"};
  }
  return {"", ""};
}

} // namespace detail

inline Json to_json(const LatticePolygon &poly) {
  Json sticks = Json::array();
  for (const auto &s : poly.sticks) {
    const auto names = detail::fixed_names(s.axis);
    sticks.push_back({{"axis", std::string(1, axis_name(s.axis))},
                      {"range", {s.lo, s.hi}},
                      {"fixed", {{names[0], s.c1}, {names[1], s.c2}}}});
  }
  return Json{{"sticks", sticks}};
}

inline LatticePolygon polygon_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("sticks") || !j["sticks"].is_array())
    throw Error(ErrorCode::Parse, "expected {\"sticks\": [...]}");
  LatticePolygon poly;
  try {
    for (const auto &s : j["sticks"]) {
      const std::string axis = s.at("axis").get<std::string>();
      if (axis.size() != 1 || std::string("xyz").find(axis[0]) == std::string::npos)
        throw Error(ErrorCode::Parse, "axis must be x, y or z");
      const Axis ax = static_cast<Axis>(std::string("xyz").find(axis[0]));
      const auto names = detail::fixed_names(ax);
      const auto &range = s.at("range");
      if (!range.is_array() || range.size() != 2)
        throw Error(ErrorCode::Parse, "range must be [lo, hi]");
      poly.sticks.push_back(LatticeStick{ax, range[0].get<int>(), range[1].get<int>(),
                                         s.at("fixed").at(names[0]).get<int>(), s.at("fixed").at(names[1]).get<int>()});
    }
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return poly;
}

inline Json to_json(const LaurentPolynomial &p) {
  return Json{{"min_exponent", p.min_exponent()}, {"coefficients", p.coefficients()}};
}

inline LaurentPolynomial laurent_from_json(const Json &j) {
  return LaurentPolynomial(j.at("min_exponent").get<int>(), j.at("coefficients").get<std::vector<std::int64_t>>());
}

inline Json to_json(const ConstructionCertificate &c) {
  Json checks = Json::array();
  for (const auto &b : c.bound_checks)
    checks.push_back({{"name", b.name},
                      {"inequality", std::to_string(b.lhs) + " <= " + std::to_string(b.rhs)},
                      {"lhs", b.lhs},
                      {"rhs", b.rhs},
                      {"holds", b.holds},
                      {"expected_failure", b.expected_failure}});
  Json match{{"status", to_string(c.invariant_match)}};
  match["input_alexander"] = c.input_alexander ? to_json(*c.input_alexander) : Json(nullptr);
  match["output_alexander"] = c.output_alexander ? to_json(*c.output_alexander) : Json(nullptr);
  Json out{{"a", c.a},
           {"branch", to_string(c.branch)},
           {"stick_count", c.stick_count},
           {"bound_checks", checks},
           {"invariant_match", match}};
  out["torus_params"] = c.torus_params ? Json{c.torus_params->first, c.torus_params->second} : Json(nullptr);
  out["crossing_number"] = c.crossing_number ? Json(*c.crossing_number) : Json(nullptr);
  out["torus_crossing_match"] = c.torus_crossing_match ? Json(*c.torus_crossing_match) : Json(nullptr);
  return out;
}

inline ConstructionCertificate certificate_from_json(const Json &j) {
  ConstructionCertificate c;
  try {
    c.a = j.at("a").get<int>();
    const std::string branch = j.at("branch").get<std::string>();
    if (branch == "nonstar")
      c.branch = Branch::NonStar;
    else if (branch == "dual-nonstar")
      c.branch = Branch::DualNonStar;
    else if (branch == "torus-star")
      c.branch = Branch::TorusStar;
    else
      throw Error(ErrorCode::Parse, "unknown branch " + branch);
    c.stick_count = j.at("stick_count").get<int>();
    if (!j.at("torus_params").is_null())
      c.torus_params = std::pair{j["torus_params"][0].get<int>(), j["torus_params"][1].get<int>()};
    if (!j.at("crossing_number").is_null())
      c.crossing_number = j["crossing_number"].get<int>();
    if (!j.at("torus_crossing_match").is_null())
      c.torus_crossing_match = j["torus_crossing_match"].get<bool>();
    for (const auto &b : j.at("bound_checks")) {
      // Verdicts are recomputed, never trusted from the file.
      c.bound_checks.push_back(make_check(b.at("name").get<std::string>(), b.at("lhs").get<long long>(),
                                          b.at("rhs").get<long long>(), b.at("expected_failure").get<bool>()));
    }
    const auto &m = j.at("invariant_match");
    const std::string status = m.at("status").get<std::string>();
    c.invariant_match = status == "matched"      ? InvariantMatch::Matched
                        : status == "mismatched" ? InvariantMatch::Mismatched
                                                 : InvariantMatch::Skipped;
    if (!m.at("input_alexander").is_null())
      c.input_alexander = laurent_from_json(m["input_alexander"]);
    if (!m.at("output_alexander").is_null())
      c.output_alexander = laurent_from_json(m["output_alexander"]);
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return c;
}

/// Wavefront OBJ: one vertex per polygon corner and one `l` record per stick.
inline std::string render_obj(const LatticePolygon &poly) {
  const auto verts = polygon_vertices(poly);
  const std::size_t m = verts.size();
  std::ostringstream out;
  out << "# lattice polygon, " << m << " sticks\n";
  for (const auto &v : verts)
    out << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  // Stick i runs from corner i-1 to corner i.
  for (std::size_t i = 0; i < m; ++i)
    out << "l " << (i + m - 1) % m + 1 << ' ' << i + 1 << '\n';
  return out.str();
}

namespace detail {

// Isometric screen map scaled by 8 so it stays integral:
// x -> (8, 0), y -> (-7, 4) (cos/sin 150 degrees), z -> (0, -8), SVG y down.
// The projection direction is (7, 8, 4); the viewer sits at -(7, 8, 4).
inline std::array<std::int64_t, 2> screen(const LatticePoint &p) {
  return {8LL * p[0] - 7LL * p[1], 4LL * p[1] - 8LL * p[2]};
}
inline std::int64_t nearness(const LatticePoint &p) { return -(7LL * p[0] + 8LL * p[1] + 4LL * p[2]); }

} // namespace detail

/// SVG drawing with a gap in the farther stick wherever two sticks cross on
/// screen. One <path> per stick.
inline std::string render_svg(const LatticePolygon &poly) {
  const auto verts = polygon_vertices(poly);
  const std::size_t m = verts.size();
  std::vector<std::array<std::int64_t, 2>> p0(m), p1(m);
  std::vector<LatticePoint> a(m), b(m);
  for (std::size_t i = 0; i < m; ++i) {
    a[i] = verts[(i + m - 1) % m];
    b[i] = verts[i];
    p0[i] = detail::screen(a[i]);
    p1[i] = detail::screen(b[i]);
  }
  // gaps[i] holds the parameters along stick i where it passes behind.
  std::vector<std::vector<double>> gaps(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const detail::Point2 r{p1[i][0] - p0[i][0], p1[i][1] - p0[i][1]};
      const detail::Point2 s{p1[j][0] - p0[j][0], p1[j][1] - p0[j][1]};
      const detail::i128 denom = detail::cross(r, s);
      if (denom == 0)
        continue;
      const detail::Point2 w{p0[j][0] - p0[i][0], p0[j][1] - p0[i][1]};
      const auto t = detail::make_fraction(detail::cross(w, s), denom);
      const auto u = detail::make_fraction(detail::cross(w, r), denom);
      if (!detail::open_unit(t) || !detail::open_unit(u))
        continue;
      auto depth = [](const LatticePoint &from, const LatticePoint &to, const detail::Fraction &f) {
        const detail::i128 d0 = detail::nearness(from), d1 = detail::nearness(to);
        return detail::Fraction{d0 * f.den + f.num * (d1 - d0), f.den};
      };
      const int cmp = detail::compare(depth(a[i], b[i], t), depth(a[j], b[j], u));
      if (cmp == 0)
        continue;
      if (cmp < 0)
        gaps[i].push_back(static_cast<double>(t.num) / static_cast<double>(t.den));
      else
        gaps[j].push_back(static_cast<double>(u.num) / static_cast<double>(u.den));
    }
  }

  constexpr double kScale = 5.0;
  constexpr double kGap = 6.0; // screen units either side of a crossing
  std::int64_t min_x = p0[0][0], max_x = min_x, min_y = p0[0][1], max_y = min_y;
  for (const auto &p : p0) {
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
  const double pad = 20.0;
  const double width = static_cast<double>(max_x - min_x) * kScale + 2 * pad;
  const double height = static_cast<double>(max_y - min_y) * kScale + 2 * pad;
  auto fx = [&](double x) { return (x - static_cast<double>(min_x)) * kScale + pad; };
  auto fy = [&](double y) { return (y - static_cast<double>(min_y)) * kScale + pad; };

  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  for (std::size_t i = 0; i < m; ++i) {
    const double x0 = fx(static_cast<double>(p0[i][0])), y0 = fy(static_cast<double>(p0[i][1]));
    const double x1 = fx(static_cast<double>(p1[i][0])), y1 = fy(static_cast<double>(p1[i][1]));
    const double len = std::hypot(x1 - x0, y1 - y0);
    const double g = len > 0 ? kGap / len : 0.0;
    auto cuts = gaps[i];
    std::sort(cuts.begin(), cuts.end());
    std::string d;
    double start = 0.0;
    auto piece = [&](double from, double to) {
      if (to <= from)
        return;
      std::ostringstream seg;
      seg.setf(std::ios::fixed);
      seg.precision(2);
      seg << (d.empty() ? "" : " ") << "M " << x0 + (x1 - x0) * from << ' ' << y0 + (y1 - y0) * from << " L "
          << x0 + (x1 - x0) * to << ' ' << y0 + (y1 - y0) * to;
      d += seg.str();
    };
    for (double c : cuts) {
      piece(start, c - g);
      start = std::max(start, c + g);
    }
    piece(start, 1.0);
    const char axis = axis_name(poly.sticks[i].axis);
    const char *colour = axis == 'x' ? "#c0392b" : axis == 'y' ? "#27ae60" : "#2c3e50";
    out << "  <path d=\"" << d << "\" stroke=\"" << colour
        << "\" stroke-width=\"3\" stroke-linecap=\"round\" fill=\"none\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace latknot
