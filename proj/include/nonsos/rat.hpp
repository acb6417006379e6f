#ifndef NONSOS_RAT_HPP
#define NONSOS_RAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nonsos {

/// Arbitrary-precision rational scalar. Always stored in lowest terms with a
/// positive denominator; all arithmetic is exact.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long long n) : v_(int64_to_mpz(n)) {}
  explicit Rat(const mpz_class& n) : v_(n) {}

  Rat(long long num, long long den) : Rat(mpz_class(int64_to_mpz(num)), mpz_class(int64_to_mpz(den))) {}

  Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  /// Parses "num" or "num/den" (optional leading sign, arbitrary size).
  static Rat parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat inverse() const {
    if (is_zero()) throw std::invalid_argument("Rat: inverse of zero");
    return Rat(v_.get_den(), v_.get_num());
  }
  Rat squared() const { return *this * *this; }

  Rat pow(unsigned e) const;

  /// "num" when the denominator is 1, otherwise "num/den".
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  explicit Rat(mpq_class q) : v_(std::move(q)) {}

  // mpz_class has no long long constructor on LP64 either way; go via string
  // only when the value does not fit in a long.
  static mpz_class int64_to_mpz(long long n) {
    if (n >= static_cast<long long>(std::numeric_limits<long>::min()) &&
        n <= static_cast<long long>(std::numeric_limits<long>::max()))
      return mpz_class(static_cast<long>(n));
    return mpz_class(std::to_string(n));
  }

  mpq_class v_;
};

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace nonsos

#endif  // NONSOS_RAT_HPP
