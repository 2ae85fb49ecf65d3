#pragma once

// Arc presentations: a knot embedded in an open book with one simple arc per
// page. Combinatorially this is a list, indexed by page number, of the
// unordered pairs of binding indices joined by each arc.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdlib>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latknot/error.hpp"

namespace latknot {

/// Residue of x modulo y in 1..y (y stands in for 0).
constexpr int mod_star(int x, int y) noexcept {
  int r = x % y;
  if (r <= 0)
    r += y;
  return r;
}

/// Binding indices of one arc, smaller first.
struct Arc {
  int lo = 0;
  int hi = 0;

  constexpr Arc() = default;
  constexpr Arc(int i, int j) : lo(std::min(i, j)), hi(std::max(i, j)) {}

  constexpr bool contains(int b) const noexcept { return lo == b || hi == b; }
  /// The endpoint that is not b.
  constexpr int other(int b) const noexcept { return lo == b ? hi : lo; }

  friend constexpr auto operator<=>(const Arc &, const Arc &) = default;
};

struct Violation {
  ErrorCode code;
  std::string detail;
};

class InvalidPresentation : public Error {
public:
  explicit InvalidPresentation(std::vector<Violation> violations)
      : Error(violations.front().code, summarize(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation> &violations() const noexcept { return violations_; }

private:
  static std::string summarize(const std::vector<Violation> &vs) {
    std::string out;
    for (const auto &v : vs) {
      if (!out.empty())
        out += "; ";
      out += std::string(to_string(v.code)) + " (" + v.detail + ")";
    }
    return out;
  }

  std::vector<Violation> violations_;
};

class ArcPresentation;
ArcPresentation validate(std::span<const std::pair<int, int>> raw_pairs);

/// A validated arc presentation. Page p (1-based) holds arcs()[p-1].
/// Instances can only be obtained through validate(), so every value is a
/// single cycle through all binding indices.
class ArcPresentation {
public:
  int size() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc> &arcs() const noexcept { return arcs_; }
  const Arc &arc(int page) const { return arcs_.at(static_cast<std::size_t>(page - 1)); }

  /// The two pages whose arcs end at binding index b, smaller first.
  std::pair<int, int> pages_at(int b) const { return incidence_.at(static_cast<std::size_t>(b - 1)); }

  /// Page of the arc with exactly these endpoints, if any.
  std::optional<int> page_of(Arc arc) const {
    for (int p = 1; p <= size(); ++p)
      if (arcs_[static_cast<std::size_t>(p - 1)] == arc)
        return p;
    return std::nullopt;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arcs_.size());
    for (const auto &a : arcs_)
      out.emplace_back(a.lo, a.hi);
    return out;
  }

  friend bool operator==(const ArcPresentation &l, const ArcPresentation &r) { return l.arcs_ == r.arcs_; }

private:
  friend ArcPresentation validate(std::span<const std::pair<int, int>> raw_pairs);

  explicit ArcPresentation(std::vector<Arc> arcs) : arcs_(std::move(arcs)), incidence_(arcs_.size(), {0, 0}) {
    for (int p = 1; p <= size(); ++p) {
      for (int b : {arcs_[static_cast<std::size_t>(p - 1)].lo, arcs_[static_cast<std::size_t>(p - 1)].hi}) {
        auto &slot = incidence_[static_cast<std::size_t>(b - 1)];
        (slot.first == 0 ? slot.first : slot.second) = p;
      }
    }
  }

  std::vector<Arc> arcs_;
  std::vector<std::pair<int, int>> incidence_;
};

/// Checks every structural requirement and reports all violations at once.
inline ArcPresentation validate(std::span<const std::pair<int, int>> raw_pairs) {
  std::vector<Violation> violations;
  const int a = static_cast<int>(raw_pairs.size());
  if (a < 2)
    violations.push_back({ErrorCode::BindingDegree, "need at least 2 arcs, got " + std::to_string(a)});

  std::vector<Arc> arcs;
  std::vector<int> degree(static_cast<std::size_t>(std::max(a, 0)) + 1, 0);
  bool indices_ok = true;
  for (int p = 1; p <= a; ++p) {
    auto [i, j] = raw_pairs[static_cast<std::size_t>(p - 1)];
    for (int b : {i, j}) {
      if (b < 1 || b > a) {
        violations.push_back({ErrorCode::IndexOutOfRange,
                              "page " + std::to_string(p) + " uses binding index " + std::to_string(b)});
        indices_ok = false;
      } else {
        ++degree[static_cast<std::size_t>(b)];
      }
    }
    if (i == j)
      violations.push_back({ErrorCode::DegenerateArc, "page " + std::to_string(p) + " joins " + std::to_string(i) +
                                                          " to itself"});
    arcs.emplace_back(i, j);
  }

  bool degrees_ok = indices_ok;
  for (int b = 1; b <= a; ++b) {
    if (degree[static_cast<std::size_t>(b)] != 2) {
      violations.push_back({ErrorCode::BindingDegree, "binding index " + std::to_string(b) + " used " +
                                                          std::to_string(degree[static_cast<std::size_t>(b)]) +
                                                          " times"});
      degrees_ok = false;
    }
  }

  // Connectivity only makes sense once the multigraph is 2-regular.
  if (degrees_ok && a >= 2) {
    std::vector<int> parent(static_cast<std::size_t>(a) + 1);
    for (int b = 0; b <= a; ++b)
      parent[static_cast<std::size_t>(b)] = b;
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x)
        x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    int components = a;
    for (const auto &arc : arcs) {
      int x = find(arc.lo), y = find(arc.hi);
      if (x != y) {
        parent[static_cast<std::size_t>(x)] = y;
        --components;
      }
    }
    if (components != 1)
      violations.push_back({ErrorCode::Disconnected, "pairing splits into " + std::to_string(components) + " cycles"});
  }

  if (!violations.empty())
    throw InvalidPresentation(std::move(violations));
  return ArcPresentation(std::move(arcs));
}

inline ArcPresentation validate(std::initializer_list<std::pair<int, int>> raw_pairs) {
  return validate(std::span<const std::pair<int, int>>(raw_pairs.begin(), raw_pairs.size()));
}

/// Turns the book by m pages: page p moves to mod*(p+m).
inline ArcPresentation rotate_pages(const ArcPresentation &P, int m) {
  const int a = P.size();
  std::vector<std::pair<int, int>> out(static_cast<std::size_t>(a));
  for (int p = 1; p <= a; ++p) {
    const Arc &arc = P.arc(p);
    out[static_cast<std::size_t>(mod_star(p + m, a) - 1)] = {arc.lo, arc.hi};
  }
  return validate(out);
}

/// Shifts binding indices around the circular binding axis: i -> mod*(i+m).
inline ArcPresentation rotate_bindings(const ArcPresentation &P, int m) {
  const int a = P.size();
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(a));
  for (const auto &arc : P.arcs()) {
    Arc moved(mod_star(arc.lo + m, a), mod_star(arc.hi + m, a));
    out.emplace_back(moved.lo, moved.hi);
  }
  return validate(out);
}

/// Exchanges the roles of pages and binding indices: page m of the result
/// joins the two pages of P that meet at binding index m.
inline ArcPresentation dual(const ArcPresentation &P) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(P.size()));
  for (int b = 1; b <= P.size(); ++b)
    out.push_back(P.pages_at(b));
  try {
    return validate(out);
  } catch (const InvalidPresentation &e) {
    detail::internal_error(std::string("dual failed validation: ") + e.what());
  }
}

inline bool is_star_shaped(const ArcPresentation &P) {
  const int a = P.size();
  if (a % 2 == 0)
    return false;
  const int n = (a - 1) / 2;
  return std::all_of(P.arcs().begin(), P.arcs().end(), [n](const Arc &arc) {
    const int d = arc.hi - arc.lo;
    return d == n || d == n + 1;
  });
}

struct NonStarWitness {
  int beta_raw = 0;
  int alpha_raw = 0; // far end of the arc on page_low
  int gamma_raw = 0; // far end of the arc on page_high
  int page_low = 0;
  int page_high = 0;

  friend bool operator==(const NonStarWitness &, const NonStarWitness &) = default;
};

/// Smallest binding index whose two neighbours are not cyclically adjacent.
inline std::optional<NonStarWitness> find_nonstar_witness(const ArcPresentation &P) {
  const int a = P.size();
  for (int beta = 1; beta <= a; ++beta) {
    auto [low, high] = P.pages_at(beta);
    const int x = P.arc(low).other(beta);
    const int y = P.arc(high).other(beta);
    const int diff = std::abs(x - y) % a;
    if (diff != 1 && diff != a - 1)
      return NonStarWitness{beta, x, y, low, high};
  }
  return std::nullopt;
}

struct NormalizedNonStar {
  ArcPresentation presentation;
  int alpha = 0;
  int beta = 0;
  int lift_page = 0;
};

/// Rotates bindings so the witness reads 1 < alpha < beta < a with the far end
/// gamma at a, then rotates pages so the arc {alpha, beta} sits on page 1.
inline NormalizedNonStar normalize_for_nonstar(const ArcPresentation &P, const NonStarWitness &w) {
  const int a = P.size();
  struct Candidate {
    int alpha, beta, shift;
  };
  std::vector<Candidate> candidates;
  for (auto [alpha_raw, gamma_raw] : {std::pair{w.alpha_raw, w.gamma_raw}, std::pair{w.gamma_raw, w.alpha_raw}}) {
    const int shift = a - gamma_raw;
    const int alpha = mod_star(alpha_raw + shift, a);
    const int beta = mod_star(w.beta_raw + shift, a);
    if (1 < alpha && alpha < beta && beta < a)
      candidates.push_back({alpha, beta, shift});
  }
  if (candidates.empty())
    detail::internal_error("witness admits no labeling with 1 < alpha < beta < a");
  const auto best = std::min_element(candidates.begin(), candidates.end(), [](const auto &l, const auto &r) {
    return std::pair(l.alpha, l.beta) < std::pair(r.alpha, r.beta);
  });

  ArcPresentation rotated = rotate_bindings(P, best->shift);
  const auto flip_page = rotated.page_of(Arc(best->alpha, best->beta));
  detail::ensure(flip_page.has_value(), "witness arc {alpha, beta} missing after rotation");
  rotated = rotate_pages(rotated, 1 - *flip_page);
  const auto lift_page = rotated.page_of(Arc(best->beta, a));
  detail::ensure(lift_page.has_value() && *lift_page >= 2, "witness arc {beta, a} missing after rotation");
  return NormalizedNonStar{std::move(rotated), best->alpha, best->beta, *lift_page};
}

enum class TorusDirection { InOrder, ReverseOrder };

struct TorusClassification {
  int n = 0;
  TorusDirection direction = TorusDirection::InOrder;
  int rotation_offset = 0;

  friend bool operator==(const TorusClassification &, const TorusClassification &) = default;
};

/// For a star shaped presentation, c_i is the arc {i, mod*(i+n)}; the
/// presentation is a (n+1, n)-torus knot when the pages of c_1..c_a advance
/// cyclically in either direction.
inline std::optional<TorusClassification> torus_order_check(const ArcPresentation &P) {
  if (!is_star_shaped(P))
    throw Error(ErrorCode::NotStarShaped, "torus order check needs a star shaped presentation");
  const int a = P.size();
  const int n = (a - 1) / 2;
  std::vector<int> page(static_cast<std::size_t>(a) + 1);
  for (int i = 1; i <= a; ++i) {
    const auto p = P.page_of(Arc(i, mod_star(i + n, a)));
    detail::ensure(p.has_value(), "star shaped presentation lacks an arc c_i");
    page[static_cast<std::size_t>(i)] = *p;
  }
  for (auto direction : {TorusDirection::InOrder, TorusDirection::ReverseOrder}) {
    for (int m = 0; m < a; ++m) {
      bool ok = true;
      for (int i = 1; ok && i <= a; ++i) {
        const int expected = direction == TorusDirection::InOrder ? mod_star(i + m, a) : mod_star(m - i, a);
        ok = page[static_cast<std::size_t>(i)] == expected;
      }
      if (ok)
        return TorusClassification{n, direction, m};
    }
  }
  return std::nullopt;
}

} // namespace latknot
