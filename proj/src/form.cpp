#include "nonsos/form.hpp"

#include <sstream>
#include <stdexcept>

namespace nonsos {

namespace {

void check_nvars(int nvars) {
  if (nvars != 3 && nvars != 4) throw std::invalid_argument("nvars must be 3 or 4");
}

int expo_sum(const Expo& e) { return e[0] + e[1] + e[2] + e[3]; }

}  // namespace

MonomialBasis::MonomialBasis(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  check_nvars(nvars);
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  if (nvars == 3) {
    for (int a = degree; a >= 0; --a)
      for (int b = degree - a; b >= 0; --b) monomials_.push_back(Expo{a, b, degree - a - b, 0});
  } else {
    for (int a = degree; a >= 0; --a)
      for (int b = degree - a; b >= 0; --b)
        for (int c = degree - a - b; c >= 0; --c)
          monomials_.push_back(Expo{a, b, c, degree - a - b - c});
  }
}

std::size_t MonomialBasis::index_of(const Expo& e) const {
  ExpoGradedLexDesc less;
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), e, less);
  if (it == monomials_.end() || *it != e) throw std::invalid_argument("monomial not in basis");
  return static_cast<std::size_t>(it - monomials_.begin());
}

Form::Form(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  check_nvars(nvars);
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
}

void Form::check_expo(const Expo& e) const {
  for (int i = 0; i < 4; ++i) {
    if (e[i] < 0) throw std::invalid_argument("negative exponent");
    if (i >= nvars_ && e[i] != 0) throw std::invalid_argument("exponent uses variable beyond nvars");
  }
  if (expo_sum(e) != degree_) throw std::invalid_argument("exponents do not sum to the degree");
}

Rat Form::coefficient(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Form::set_coefficient(const Expo& e, const Rat& c) {
  check_expo(e);
  if (c.is_zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

void Form::add_term(const Expo& e, const Rat& c) {
  check_expo(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rat Form::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluate: point dimension mismatch");
  // Powers of each coordinate up to the degree.
  std::vector<std::vector<Rat>> pw(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    pw[i].resize(degree_ + 1);
    pw[i][0] = Rat(1);
    for (int d = 1; d <= degree_; ++d) pw[i][d] = pw[i][d - 1] * point[i];
  }
  Rat acc;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i) t *= pw[i][e[i]];
    acc += t;
  }
  return acc;
}

std::vector<Rat> Form::coefficient_vector(const MonomialBasis& basis) const {
  if (basis.nvars() != nvars_ || basis.degree() != degree_)
    throw std::invalid_argument("coefficient_vector: basis mismatch");
  std::vector<Rat> out(basis.size());
  for (const auto& [e, c] : terms_) out[basis.index_of(e)] = c;
  return out;
}

Form Form::from_coefficient_vector(const MonomialBasis& basis, const std::vector<Rat>& coeffs) {
  if (coeffs.size() != basis.size())
    throw std::invalid_argument("from_coefficient_vector: size mismatch");
  Form f(basis.nvars(), basis.degree());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) f.terms_.emplace(basis[i], coeffs[i]);
  return f;
}

Form Form::operator+(const Form& o) const {
  if (nvars_ != o.nvars_ || degree_ != o.degree_)
    throw std::invalid_argument("form addition: shape mismatch");
  Form r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Form Form::operator-(const Form& o) const { return *this + o.scaled(Rat(-1)); }

Form Form::operator*(const Form& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("form product: nvars mismatch");
  Form r(nvars_, degree_ + o.degree_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Expo e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      r.add_term(e, ca * cb);
    }
  return r;
}

Form Form::scaled(const Rat& c) const {
  Form r(nvars_, degree_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

std::string Form::pretty() const {
  static const char* names[4] = {"x", "y", "z", "w"};
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      a = a.abs();
    }
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << a.str();
    } else if (a == Rat(1)) {
      os << mono;
    } else {
      os << a.str() << "*" << mono;
    }
  }
  return os.str();
}

std::vector<Rat> veronese(const std::vector<Rat>& v, int degree) {
  const int nvars = static_cast<int>(v.size());
  check_nvars(nvars);
  MonomialBasis basis(nvars, degree);
  std::vector<std::vector<Rat>> pw(nvars);
  for (int i = 0; i < nvars; ++i) {
    pw[i].resize(degree + 1);
    pw[i][0] = Rat(1);
    for (int d = 1; d <= degree; ++d) pw[i][d] = pw[i][d - 1] * v[i];
  }
  std::vector<Rat> out(basis.size());
  for (std::size_t m = 0; m < basis.size(); ++m) {
    Rat t(1);
    for (int i = 0; i < nvars; ++i) t *= pw[i][basis[m][i]];
    out[m] = t;
  }
  return out;
}

Form linear_change(const Form& f, const RatMatrix& a) {
  const int n = f.nvars();
  if (a.rows() != static_cast<std::size_t>(n) || a.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("linear_change: matrix size mismatch");
  if (det(a).is_zero()) throw std::invalid_argument("linear_change: singular matrix");
  // Row i of A as a linear form in the new variables.
  std::vector<Form> rows;
  for (int i = 0; i < n; ++i) {
    Form l(n, 1);
    for (int j = 0; j < n; ++j) {
      Expo e{0, 0, 0, 0};
      e[j] = 1;
      l.add_term(e, a(i, j));
    }
    rows.push_back(l);
  }
  Form result(n, f.degree());
  for (const auto& [e, c] : f.terms()) {
    Form t(n, 0);
    t.set_coefficient(Expo{0, 0, 0, 0}, c);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[i]; ++k) t = t * rows[i];
    result = result + t;
  }
  return result;
}

}  // namespace nonsos
