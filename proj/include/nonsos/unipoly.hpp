#ifndef NONSOS_UNIPOLY_HPP
#define NONSOS_UNIPOLY_HPP

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "nonsos/form.hpp"
#include "nonsos/rat.hpp"

namespace nonsos {

/// Dense polynomial in one variable over a commutative ring, coefficients
/// stored lowest degree first with no trailing zeros. Nesting the template
/// gives multivariate polynomials one variable at a time, which is all the
/// Sylvester elimination needs.
template <class Coeff>
class PolyRing {
 public:
  PolyRing() = default;
  explicit PolyRing(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static PolyRing constant(Coeff c) {
    PolyRing p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
  }
  static PolyRing one() { return constant(coeff_one()); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  const Coeff& leading() const { return c_.back(); }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff{}; }

  void set_coeff(std::size_t i, Coeff v) {
    if (i >= c_.size()) c_.resize(i + 1);
    c_[i] = std::move(v);
    trim();
  }

  PolyRing operator-() const {
    PolyRing r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend PolyRing operator+(const PolyRing& a, const PolyRing& b) {
    PolyRing r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
  }
  friend PolyRing operator-(const PolyRing& a, const PolyRing& b) { return a + (-b); }
  friend PolyRing operator*(const PolyRing& a, const PolyRing& b) {
    PolyRing r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.c_ == b.c_; }

 private:
  static Coeff coeff_one() {
    if constexpr (std::is_same_v<Coeff, Rat>)
      return Rat(1);
    else
      return Coeff::one();
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Coeff> c_;
};

using UniPoly = PolyRing<Rat>;
/// Polynomial in the second variable with UniPoly coefficients in the first.
using BiPoly = PolyRing<UniPoly>;
/// Polynomial in the third variable with BiPoly coefficients.
using TriPoly = PolyRing<BiPoly>;

namespace detail {

template <class C>
bool is_ring_zero(const C& c) {
  return c.is_zero();
}

template <class C>
C poly_one() {
  if constexpr (std::is_same_v<C, Rat>)
    return Rat(1);
  else
    return C::one();
}

template <class C>
C ring_pow(C base, int e) {
  C acc = poly_one<C>();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

/// Exact determinant over a commutative ring by Laplace expansion with
/// memoization on column subsets (no division -- entries may be polynomials).
template <class C>
C ring_det(const std::vector<std::vector<C>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return poly_one<C>();
  std::vector<C> dp(std::size_t(1) << n);
  dp[0] = poly_one<C>();
  const std::size_t full = (std::size_t(1) << n) - 1;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (is_ring_zero(dp[mask])) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    bool negative = false;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t(1) << col)) {
        negative = !negative;
        continue;
      }
      if (is_ring_zero(m[row][col])) continue;
      C term = m[row][col] * dp[mask];
      auto& slot = dp[mask | (std::size_t(1) << col)];
      slot = negative ? slot - term : slot + term;
    }
  }
  return dp[full];
}

}  // namespace detail

/// Sylvester resultant of f and g with respect to the outermost variable.
/// Vanishes exactly where f and g share a root in that variable or both
/// leading coefficients vanish. Throws on zero input.
template <class C>
C resultant(const PolyRing<C>& f, const PolyRing<C>& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
  const int m = f.degree(), n = g.degree();
  if (m == 0) return detail::ring_pow(f.leading(), n);
  if (n == 0) return detail::ring_pow(g.leading(), m);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<C>> s(size, std::vector<C>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = f.coeff(static_cast<std::size_t>(m - k));
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[static_cast<std::size_t>(n + i)][i + k] = g.coeff(static_cast<std::size_t>(n - k));
  return detail::ring_det(s);
}

/// Resultant of two bivariate polynomials (outer variable eliminated),
/// yielding a univariate polynomial in the inner variable.
inline UniPoly resultant_y(const BiPoly& f, const BiPoly& g) { return resultant(f, g); }

Rat eval(const UniPoly& f, const Rat& x);
UniPoly eval_inner(const BiPoly& f, const Rat& x0);
BiPoly eval_inner(const TriPoly& f, const Rat& x0);

UniPoly derivative(const UniPoly& f);

/// Quotient and remainder of rational-coefficient long division; g nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);

/// Monic greatest common divisor; inputs not both zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Exact quotient by (x - root); throws if root is not a root of f.
UniPoly deflate(const UniPoly& f, const Rat& root);

/// All rational roots with multiplicity, ascending. Degrees <= 2 are solved
/// in closed form; higher degrees use divisor candidates of the leading and
/// trailing coefficients of the integer-cleared squarefree part. Throws
/// FactorBudgetError when the divisor enumeration would require factoring an
/// integer beyond the trial-division budget.
std::vector<Rat> rational_roots(const UniPoly& f);

struct FactorBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dehomogenizations at last coordinate = 1, nested innermost-first: a
/// ternary form becomes a polynomial in y over x, a quaternary form becomes a
/// polynomial in z over y over x.
BiPoly dehomogenize3(const Form& f);
TriPoly dehomogenize4(const Form& f);

}  // namespace nonsos

#endif  // NONSOS_UNIPOLY_HPP
