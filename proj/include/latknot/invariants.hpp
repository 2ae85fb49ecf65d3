#pragma once

// Knot invariants of planar diagrams: Alexander polynomial, determinant and
// the Kauffman-bracket Jones polynomial.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latknot/diagram.hpp"
#include "latknot/error.hpp"
#include "latknot/laurent.hpp"

namespace latknot {

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

/// Overstrand (Wirtinger generator) index for every edge label 1..edge_count.
inline std::vector<int> overstrands(const PlanarDiagram &d, int &count) {
  UnionFind uf(d.edge_count + 1);
  for (const auto &c : d.crossings)
    uf.unite(c.over_in, c.over_out);
  std::vector<int> id(static_cast<std::size_t>(d.edge_count) + 1, -1);
  std::map<int, int> root_to_id;
  for (int e = 1; e <= d.edge_count; ++e) {
    const int r = uf.find(e);
    auto [it, inserted] = root_to_id.emplace(r, static_cast<int>(root_to_id.size()));
    id[static_cast<std::size_t>(e)] = it->second;
  }
  count = static_cast<int>(root_to_id.size());
  return id;
}

/// Fox-calculus Alexander matrix with the last row and column removed.
template <typename T>
std::vector<std::vector<BasicLaurent<T>>> alexander_minor(const PlanarDiagram &d) {
  using P = BasicLaurent<T>;
  int strands = 0;
  const auto strand = overstrands(d, strands);
  const int n = d.crossing_count();
  ensure(strands == n, "diagram is not a single-component knot diagram");
  const P one_minus_t(0, {T(1), T(-1)});
  const P t = P::monomial(T(1), 1);
  const P minus_one(T(-1));
  std::vector<std::vector<P>> m(static_cast<std::size_t>(n), std::vector<P>(static_cast<std::size_t>(n)));
  for (int c = 0; c < n; ++c) {
    const auto &x = d.crossings[static_cast<std::size_t>(c)];
    auto &row = m[static_cast<std::size_t>(c)];
    row[static_cast<std::size_t>(strand[static_cast<std::size_t>(x.over_in)])] += one_minus_t;
    const auto in = static_cast<std::size_t>(strand[static_cast<std::size_t>(x.under_in)]);
    const auto out = static_cast<std::size_t>(strand[static_cast<std::size_t>(x.under_out)]);
    row[in] += x.sign > 0 ? t : minus_one;
    row[out] += x.sign > 0 ? minus_one : t;
  }
  m.pop_back();
  for (auto &row : m)
    row.pop_back();
  return m;
}

template <typename From>
LaurentPolynomial narrow(const BasicLaurent<From> &p) {
  std::vector<std::int64_t> c;
  for (const auto &v : p.coefficients()) {
    if (v > From(std::numeric_limits<std::int64_t>::max()) || v < From(std::numeric_limits<std::int64_t>::min()))
      throw std::overflow_error("Alexander coefficient exceeds 64 bits");
    c.push_back(static_cast<std::int64_t>(static_cast<long long>(v)));
  }
  return LaurentPolynomial(p.min_exponent(), std::move(c));
}

} // namespace detail

/// Canonical Alexander polynomial (lowest exponent 0, positive leading
/// coefficient) from a minor of the Alexander matrix. Coefficients are
/// computed with checked 64-bit arithmetic and fall back to arbitrary
/// precision on overflow.
inline LaurentPolynomial alexander(const PlanarDiagram &d) {
  if (d.crossing_count() == 0)
    return LaurentPolynomial(1);
  LaurentPolynomial det;
  try {
    det = detail::narrow(detail::bareiss_determinant(detail::alexander_minor<CheckedInt>(d)));
  } catch (const std::overflow_error &) {
    det = detail::narrow(detail::bareiss_determinant(detail::alexander_minor<boost::multiprecision::cpp_int>(d)));
  }
  if (det.is_zero())
    detail::internal_error("Alexander minor vanished on a knot diagram");
  return canonicalize(det);
}

/// |Delta(-1)|.
inline std::int64_t determinant(const PlanarDiagram &d) { return std::llabs(alexander(d).evaluate(-1)); }

inline constexpr int kDefaultJonesCap = 20;

/// Kauffman bracket state sum normalized by the writhe, (-A^3)^-w <D>, as a
/// Laurent polynomial in A. The Jones polynomial is this with A = t^(-1/4).
inline LaurentPolynomial jones_kauffman(const PlanarDiagram &d, int cap = kDefaultJonesCap) {
  const int n = d.crossing_count();
  if (n > cap)
    throw Error(ErrorCode::CrossingCapExceeded,
                std::to_string(n) + " crossings exceed the state-sum cap of " + std::to_string(cap));
  if (n == 0)
    return LaurentPolynomial(1);

  struct Corners {
    int a, b, c, dd;
  };
  std::vector<Corners> pd;
  int writhe = 0;
  for (const auto &x : d.crossings) {
    const int b = x.sign > 0 ? x.over_out : x.over_in;
    const int dd = x.sign > 0 ? x.over_in : x.over_out;
    pd.push_back({x.under_in, b, x.under_out, dd});
    writhe += x.sign;
  }

  // counts[(#A - #B, loops)] over all states.
  std::map<std::pair<int, int>, std::int64_t> counts;
  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    detail::UnionFind uf(d.edge_count + 1);
    int loops = d.edge_count;
    int balance = 0;
    for (int k = 0; k < n; ++k) {
      const auto &x = pd[static_cast<std::size_t>(k)];
      if (state >> k & 1u) { // A-smoothing joins (a,b) and (c,d)
        loops -= uf.unite(x.a, x.b);
        loops -= uf.unite(x.c, x.dd);
        ++balance;
      } else { // B-smoothing joins (a,d) and (b,c)
        loops -= uf.unite(x.a, x.dd);
        loops -= uf.unite(x.b, x.c);
        --balance;
      }
    }
    ++counts[{balance, loops}];
  }

  const LaurentPolynomial delta(-2, {-1, 0, 0, 0, -1}); // -A^2 - A^-2
  LaurentPolynomial bracket;
  for (const auto &[key, count] : counts) {
    LaurentPolynomial term = LaurentPolynomial::monomial(count, key.first);
    for (int i = 1; i < key.second; ++i)
      term *= delta;
    bracket += term;
  }
  const std::int64_t sign = (writhe % 2 == 0) ? 1 : -1;
  return LaurentPolynomial::monomial(sign, -3 * writhe) * bracket;
}

} // namespace latknot
