#include "nonsos/unipoly.hpp"

#include <algorithm>
#include <map>

namespace nonsos {

Rat eval(const UniPoly& f, const Rat& x) {
  Rat acc;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + f.coeffs()[i];
  return acc;
}

UniPoly eval_inner(const BiPoly& f, const Rat& x0) {
  std::vector<Rat> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(eval(c, x0));
  return UniPoly(std::move(out));
}

BiPoly eval_inner(const TriPoly& f, const Rat& x0) {
  std::vector<UniPoly> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(eval_inner(c, x0));
  return BiPoly(std::move(out));
}

UniPoly derivative(const UniPoly& f) {
  if (f.degree() <= 0) return UniPoly{};
  std::vector<Rat> out(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) out[i - 1] = f.coeffs()[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  std::vector<Rat> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {UniPoly{}, f};
  std::vector<Rat> quo(f.coeffs().size() - g.coeffs().size() + 1);
  const Rat lead_inv = g.leading().inverse();
  for (std::size_t i = quo.size(); i-- > 0;) {
    const Rat q = rem[i + dg] * lead_inv;
    if (q.is_zero()) continue;
    quo[i] = q;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) rem[i + j] -= q * g.coeffs()[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

namespace {

// Scales to integer coefficients with content 1 and positive leading
// coefficient; keeps the root set.
UniPoly primitive_part(const UniPoly& f) {
  if (f.is_zero()) return f;
  mpz_class l(1);
  for (const auto& c : f.coeffs()) l = lcm(l, c.den());
  mpz_class g(0);
  for (const auto& c : f.coeffs()) g = gcd(g, c.num() * (l / c.den()));
  std::vector<Rat> out;
  out.reserve(f.coeffs().size());
  const Rat factor = Rat(l, g);
  for (const auto& c : f.coeffs()) out.push_back(c * factor);
  UniPoly p(std::move(out));
  if (p.leading().sign() < 0) return -p;
  return p;
}

UniPoly monic(const UniPoly& f) {
  if (f.is_zero()) return f;
  const Rat inv = f.leading().inverse();
  std::vector<Rat> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c * inv);
  return UniPoly(std::move(out));
}

// Perfect-square test with exact integer square root.
bool mpz_square_root(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root * root == n;
}

// Rational square root of r if it exists.
bool rat_square_root(const Rat& r, Rat& root) {
  mpz_class sn, sd;
  if (!mpz_square_root(r.num(), sn) || !mpz_square_root(r.den(), sd)) return false;
  root = Rat(sn, sd);
  return true;
}

constexpr unsigned long kTrialDivisionBound = 1000000;

// Prime factorization by trial division, falling back to a probable-prime
// test for one remaining cofactor. Throws FactorBudgetError if the cofactor
// is composite.
std::map<mpz_class, unsigned> factorize(mpz_class n) {
  std::map<mpz_class, unsigned> out;
  if (n < 0) n = -n;
  if (n <= 1) return out;
  for (unsigned long p = 2; p <= kTrialDivisionBound && mpz_class(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= static_cast<long>(p);
    }
  }
  if (n > 1) {
    if (mpz_class(kTrialDivisionBound) * kTrialDivisionBound > n ||
        mpz_probab_prime_p(n.get_mpz_t(), 50) > 0) {
      ++out[n];
    } else {
      throw FactorBudgetError("rational root search: coefficient exceeds factoring budget");
    }
  }
  return out;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t sz = out.size();
    mpz_class pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Distinct rational roots of a nonzero polynomial with nonzero constant term.
std::vector<Rat> distinct_roots(const UniPoly& f) {
  std::vector<Rat> roots;
  const int d = f.degree();
  if (d <= 0) return roots;
  if (d == 1) {
    roots.push_back(-f.coeffs()[0] / f.coeffs()[1]);
    return roots;
  }
  if (d == 2) {
    const Rat a = f.coeffs()[2], b = f.coeffs()[1], c = f.coeffs()[0];
    const Rat disc = b * b - Rat(4) * a * c;
    Rat sq;
    if (!rat_square_root(disc, sq)) return roots;
    const Rat two_a = Rat(2) * a;
    roots.push_back((-b + sq) / two_a);
    if (!sq.is_zero()) roots.push_back((-b - sq) / two_a);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  // Squarefree reduction keeps the root set and shrinks the coefficients.
  UniPoly g = f;
  const UniPoly sf_gcd = gcd(f, derivative(f));
  if (sf_gcd.degree() > 0) g = divmod(f, sf_gcd).first;
  g = primitive_part(g);
  if (g.degree() <= 2) return distinct_roots(g);
  const auto ps = divisors(g.coeffs().front().num());
  const auto qs = divisors(g.leading().num());
  for (const auto& p : ps)
    for (const auto& q : qs) {
      const Rat cand(p, q);
      if (eval(g, cand).is_zero()) roots.push_back(cand);
      if (eval(g, -cand).is_zero()) roots.push_back(-cand);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd: both polynomials zero");
  UniPoly f = primitive_part(a), g = primitive_part(b);
  while (!g.is_zero()) {
    UniPoly r = divmod(f, g).second;
    f = std::move(g);
    g = primitive_part(r);
  }
  return monic(f);
}

UniPoly deflate(const UniPoly& f, const Rat& root) {
  if (f.is_zero()) throw std::invalid_argument("deflate: zero polynomial");
  const auto& a = f.coeffs();
  const std::size_t n = a.size() - 1;
  if (n == 0) throw std::invalid_argument("deflate: constant polynomial");
  std::vector<Rat> q(n);
  Rat carry = a[n];
  for (std::size_t i = n; i-- > 0;) {
    q[i] = carry;
    carry = a[i] + root * carry;
  }
  if (!carry.is_zero()) throw std::invalid_argument("deflate: value is not a root");
  return UniPoly(std::move(q));
}

std::vector<Rat> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<Rat> out;
  UniPoly g = f;
  while (!g.is_zero() && g.coeffs().front().is_zero() && g.degree() > 0) {
    out.push_back(Rat(0));
    std::vector<Rat> shifted(g.coeffs().begin() + 1, g.coeffs().end());
    g = UniPoly(std::move(shifted));
  }
  for (const Rat& r : distinct_roots(g)) {
    UniPoly h = g;
    while (true) {
      out.push_back(r);
      if (h.degree() == 1) break;
      h = deflate(h, r);
      if (!eval(h, r).is_zero()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BiPoly dehomogenize3(const Form& f) {
  if (f.nvars() != 3) throw std::invalid_argument("dehomogenize3: form must be ternary");
  std::vector<UniPoly> ycoeffs;
  for (const auto& [e, c] : f.terms()) {
    if (static_cast<std::size_t>(e[1]) >= ycoeffs.size()) ycoeffs.resize(e[1] + 1);
    UniPoly& slot = ycoeffs[e[1]];
    Rat cur = slot.coeff(e[0]);
    slot.set_coeff(e[0], cur + c);
  }
  return BiPoly(std::move(ycoeffs));
}

TriPoly dehomogenize4(const Form& f) {
  if (f.nvars() != 4) throw std::invalid_argument("dehomogenize4: form must be quaternary");
  std::vector<BiPoly> zc;
  for (const auto& [e, c] : f.terms()) {
    if (static_cast<std::size_t>(e[2]) >= zc.size()) zc.resize(e[2] + 1);
    std::vector<UniPoly> yc = zc[e[2]].coeffs();
    if (static_cast<std::size_t>(e[1]) >= yc.size()) yc.resize(e[1] + 1);
    Rat cur = yc[e[1]].coeff(e[0]);
    yc[e[1]].set_coeff(e[0], cur + c);
    zc[e[2]] = BiPoly(std::move(yc));
  }
  return TriPoly(std::move(zc));
}

}  // namespace nonsos
