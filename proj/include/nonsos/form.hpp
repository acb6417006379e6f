#ifndef NONSOS_FORM_HPP
#define NONSOS_FORM_HPP

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nonsos/matrix.hpp"
#include "nonsos/rat.hpp"

namespace nonsos {

/// Exponent tuple of a monomial; unused trailing slots are zero.
using Expo = std::array<int, 4>;

/// Graded-lexicographic order (x1 > x2 > x3 > x4), descending within the
/// fixed degree. The same order indexes every matrix and file in the project.
struct ExpoGradedLexDesc {
  bool operator()(const Expo& a, const Expo& b) const {
    int da = a[0] + a[1] + a[2] + a[3];
    int db = b[0] + b[1] + b[2] + b[3];
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponents, descending
  }
};

/// Ordered list of all exponent tuples of the given total degree.
class MonomialBasis {
 public:
  MonomialBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Expo& operator[](std::size_t i) const { return monomials_[i]; }
  std::size_t index_of(const Expo& e) const;

 private:
  int nvars_, degree_;
  std::vector<Expo> monomials_;
};

/// Homogeneous polynomial over Rat in 3 or 4 variables. Zero coefficients are
/// never stored; every exponent tuple sums to the degree.
class Form {
 public:
  Form(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const std::map<Expo, Rat, ExpoGradedLexDesc>& terms() const { return terms_; }

  Rat coefficient(const Expo& e) const;
  void set_coefficient(const Expo& e, const Rat& c);
  void add_term(const Expo& e, const Rat& c);

  Rat evaluate(const std::vector<Rat>& point) const;

  /// Coefficients in the canonical monomial order of basis(nvars, degree).
  std::vector<Rat> coefficient_vector(const MonomialBasis& basis) const;
  static Form from_coefficient_vector(const MonomialBasis& basis, const std::vector<Rat>& coeffs);

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator*(const Form& o) const;
  Form scaled(const Rat& c) const;
  Form squared() const { return *this * *this; }

  friend bool operator==(const Form& a, const Form& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Human-readable rendering like "x^4*y^2 - 3*x^2*y^2*z^2 + z^6".
  std::string pretty() const;

 private:
  void check_expo(const Expo& e) const;

  int nvars_, degree_;
  std::map<Expo, Rat, ExpoGradedLexDesc> terms_;
};

/// All degree-d monomials evaluated at v, in canonical order. For any form f
/// of matching degree, f(v) = <coefficient_vector(f), veronese(v, d)>.
std::vector<Rat> veronese(const std::vector<Rat>& v, int degree);

/// Substitution f(A x); A must be an invertible nvars x nvars matrix.
Form linear_change(const Form& f, const RatMatrix& a);

}  // namespace nonsos

#endif  // NONSOS_FORM_HPP
