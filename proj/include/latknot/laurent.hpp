#pragma once

// Integer Laurent polynomials in one variable, plus the fraction-free
// determinant used for Alexander matrices.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latknot/error.hpp"

namespace latknot {

/// Sum of c_e t^e with finitely many nonzero c_e; e may be negative. Zero
/// coefficients are never stored and the zero polynomial has no terms.
template <typename T>
class BasicLaurent {
public:
  BasicLaurent() = default;
  BasicLaurent(T constant) { // NOLINT(google-explicit-constructor)
    if (constant != T(0))
      coeffs_.push_back(constant);
  }
  BasicLaurent(int min_exp, std::vector<T> coeffs) : min_exp_(min_exp), coeffs_(std::move(coeffs)) { trim(); }

  static BasicLaurent monomial(T c, int e) { return BasicLaurent(e, {c}); }
  static BasicLaurent from_map(const std::map<int, T> &terms) {
    if (terms.empty())
      return {};
    const int lo = terms.begin()->first, hi = terms.rbegin()->first;
    std::vector<T> c(static_cast<std::size_t>(hi - lo + 1), T(0));
    for (const auto &[e, v] : terms)
      c[static_cast<std::size_t>(e - lo)] = v;
    return BasicLaurent(lo, std::move(c));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int min_exponent() const noexcept { return min_exp_; }
  int max_exponent() const noexcept { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficients from min_exponent() upwards.
  const std::vector<T> &coefficients() const noexcept { return coeffs_; }

  T coefficient(int e) const {
    if (is_zero() || e < min_exp_ || e > max_exponent())
      return T(0);
    return coeffs_[static_cast<std::size_t>(e - min_exp_)];
  }
  const T &leading() const { return coeffs_.back(); }

  BasicLaurent shifted(int k) const {
    BasicLaurent out = *this;
    out.min_exp_ += k;
    return out;
  }

  /// Substitutes t -> t^-1.
  BasicLaurent reflected() const {
    if (is_zero())
      return {};
    std::vector<T> c(coeffs_.rbegin(), coeffs_.rend());
    return BasicLaurent(-max_exponent(), std::move(c));
  }

  BasicLaurent operator-() const {
    BasicLaurent out = *this;
    for (auto &c : out.coeffs_)
      c = -c;
    return out;
  }

  BasicLaurent &operator+=(const BasicLaurent &o) { return *this = add(*this, o, false); }
  BasicLaurent &operator-=(const BasicLaurent &o) { return *this = add(*this, o, true); }
  BasicLaurent &operator*=(const BasicLaurent &o) { return *this = *this * o; }

  friend BasicLaurent operator+(const BasicLaurent &l, const BasicLaurent &r) { return add(l, r, false); }
  friend BasicLaurent operator-(const BasicLaurent &l, const BasicLaurent &r) { return add(l, r, true); }
  friend BasicLaurent operator*(const BasicLaurent &l, const BasicLaurent &r) {
    if (l.is_zero() || r.is_zero())
      return {};
    std::vector<T> c(l.coeffs_.size() + r.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
      if (l.coeffs_[i] == T(0))
        continue;
      for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
        c[i + j] += l.coeffs_[i] * r.coeffs_[j];
    }
    return BasicLaurent(l.min_exp_ + r.min_exp_, std::move(c));
  }

  friend bool operator==(const BasicLaurent &l, const BasicLaurent &r) {
    return l.coeffs_ == r.coeffs_ && (l.is_zero() || l.min_exp_ == r.min_exp_);
  }

  /// Exact quotient l / r; throws if r does not divide l in Z[t, 1/t].
  friend BasicLaurent exact_divide(const BasicLaurent &l, const BasicLaurent &r) {
    if (r.is_zero())
      throw std::domain_error("division by the zero polynomial");
    if (l.is_zero())
      return {};
    std::vector<T> rem = l.coeffs_;
    const std::size_t rn = r.coeffs_.size();
    if (rem.size() < rn)
      throw std::domain_error("inexact polynomial division");
    std::vector<T> q(rem.size() - rn + 1, T(0));
    for (std::size_t k = q.size(); k-- > 0;) {
      const T &top = rem[k + rn - 1];
      if (top == T(0))
        continue;
      if (top % r.coeffs_.back() != T(0))
        throw std::domain_error("inexact polynomial division");
      const T f = top / r.coeffs_.back();
      q[k] = f;
      for (std::size_t j = 0; j < rn; ++j)
        rem[k + j] -= f * r.coeffs_[j];
    }
    for (const auto &v : rem)
      if (v != T(0))
        throw std::domain_error("inexact polynomial division");
    return BasicLaurent(l.min_exp_ - r.min_exp_, std::move(q));
  }

  T evaluate(T t) const {
    // Only integer points with |t| = 1 keep negative exponents integral.
    if (!is_zero() && min_exp_ < 0 && t != T(1) && t != T(-1))
      throw std::domain_error("negative exponent at a non-unit point");
    T acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;)
      acc = acc * t + coeffs_[i];
    // For t = +-1, t^-e == t^e.
    const int e = min_exp_ < 0 ? -min_exp_ : min_exp_;
    T scale(1);
    for (int i = 0; i < e; ++i)
      scale = scale * t;
    return acc * scale;
  }

  std::string to_string(char var = 't') const {
    if (is_zero())
      return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      T c = coeffs_[i];
      if (c == T(0))
        continue;
      const int e = min_exp_ + static_cast<int>(i);
      const bool neg = c < T(0);
      if (neg)
        c = -c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      const bool unit = c == T(1);
      if (!unit || e == 0)
        out += std::to_string(static_cast<long long>(c));
      if (e != 0) {
        out += var;
        if (e != 1)
          out += "^" + std::to_string(e);
      }
    }
    return out;
  }

private:
  static BasicLaurent add(const BasicLaurent &l, const BasicLaurent &r, bool subtract) {
    if (r.is_zero())
      return l;
    if (l.is_zero())
      return subtract ? -r : r;
    const int lo = std::min(l.min_exp_, r.min_exp_);
    const int hi = std::max(l.max_exponent(), r.max_exponent());
    std::vector<T> c(static_cast<std::size_t>(hi - lo + 1), T(0));
    for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
      c[static_cast<std::size_t>(l.min_exp_ - lo) + i] += l.coeffs_[i];
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
      auto &slot = c[static_cast<std::size_t>(r.min_exp_ - lo) + i];
      if (subtract)
        slot -= r.coeffs_[i];
      else
        slot += r.coeffs_[i];
    }
    return BasicLaurent(lo, std::move(c));
  }

  void trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const T &v) { return v != T(0); });
    if (first == coeffs_.end()) {
      coeffs_.clear();
      min_exp_ = 0;
      return;
    }
    min_exp_ += static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back() == T(0))
      coeffs_.pop_back();
  }

  int min_exp_ = 0;
  std::vector<T> coeffs_;
};

using LaurentPolynomial = BasicLaurent<std::int64_t>;

/// Multiplies by the unit +-t^k that makes the lowest exponent 0 and the
/// leading coefficient positive.
template <typename T>
BasicLaurent<T> canonicalize(const BasicLaurent<T> &p) {
  if (p.is_zero())
    throw Error(ErrorCode::ZeroPolynomial, "cannot canonicalize the zero polynomial");
  BasicLaurent<T> out = p.shifted(-p.min_exponent());
  return out.leading() < T(0) ? -out : out;
}

template <typename T>
bool is_palindromic(const BasicLaurent<T> &p) {
  const auto &c = p.coefficients();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

/// int64 that throws std::overflow_error instead of wrapping.
struct CheckedInt {
  std::int64_t v = 0;

  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t x) : v(x) {} // NOLINT(google-explicit-constructor)

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    CheckedInt r;
    if (__builtin_add_overflow(a.v, b.v, &r.v))
      throw std::overflow_error("int64 overflow in +");
    return r;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    CheckedInt r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v))
      throw std::overflow_error("int64 overflow in -");
    return r;
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    CheckedInt r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v))
      throw std::overflow_error("int64 overflow in *");
    return r;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (b.v == 0 || (a.v == std::numeric_limits<std::int64_t>::min() && b.v == -1))
      throw std::overflow_error("int64 overflow in /");
    return a.v / b.v;
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
    if (b.v == 0)
      throw std::overflow_error("int64 modulo by zero");
    if (b.v == -1)
      return 0;
    return a.v % b.v;
  }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  CheckedInt &operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt &operator-=(CheckedInt o) { return *this = *this - o; }
  explicit operator long long() const { return v; }

  friend auto operator<=>(CheckedInt, CheckedInt) = default;
};

namespace detail {

/// Bareiss fraction-free elimination over Z[t, 1/t]. Every intermediate
/// entry is a minor of the input, so the divisions are exact.
template <typename T>
BasicLaurent<T> bareiss_determinant(std::vector<std::vector<BasicLaurent<T>>> m) {
  using P = BasicLaurent<T>;
  const std::size_t n = m.size();
  if (n == 0)
    return P(T(1));
  bool negate = false;
  P previous(T(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero())
        ++r;
      if (r == n)
        return P();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        P num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(num, previous);
      }
      m[i][k] = P();
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

} // namespace detail
} // namespace latknot
