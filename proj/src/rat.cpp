#include "nonsos/rat.hpp"

#include <cctype>
#include <ostream>

namespace nonsos {

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  auto bad = [&] { throw std::invalid_argument("Rat: cannot parse '" + std::string(text) + "'"); };
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den)) bad();
  Rat r(mpz_class(std::string(num)), mpz_class(std::string(den)));
  return r;
}

Rat Rat::pow(unsigned e) const {
  Rat result(1);
  Rat base = *this;
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace nonsos
