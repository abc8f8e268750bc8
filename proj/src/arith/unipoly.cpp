#include "dyn/arith/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "dyn/errors.hpp"

namespace dyn {

namespace {
const Rational kZero{};
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  if (degree < 0) throw InvalidArgument("negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(std::span<const Rational> roots) {
  UniPoly p = constant(1);
  for (const Rational& r : roots) p = p * UniPoly({-r, 1});
  return p;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const { return c_.empty() ? kZero : c_.back(); }

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly derivative(const UniPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = p.coeff(i) * Rational(i);
  return UniPoly(std::move(out));
}

UniPoly pow(const UniPoly& p, unsigned exponent) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = p;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
  UniPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + UniPoly::constant(p.coeff(i));
  return acc;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const int db = b.degree();
  const Rational inv_lc = Rational(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    Rational f = top * inv_lc;
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw NonPolynomialQuotient("division of " + to_string(a) + " by " + to_string(b) +
                                " leaves remainder " + to_string(r));
  }
  return q;
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

Rational resultant(const UniPoly& a_in, const UniPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  UniPoly a = a_in, b = b_in;
  int da = a.degree(), db = b.degree();
  if (da == 0) return pow(a.leading(), static_cast<unsigned long>(db));
  if (db == 0) return pow(b.leading(), static_cast<unsigned long>(da));
  Rational result = 1;
  for (;;) {
    UniPoly r = divmod(a, b).second;
    if (r.is_zero()) return 0;
    int dr = r.degree();
    if ((da * db) % 2 == 1) result = -result;
    result *= pow(b.leading(), static_cast<unsigned long>(da - dr));
    a = std::move(b);
    b = std::move(r);
    da = db;
    db = dr;
    if (db == 0) return result * pow(b.leading(), static_cast<unsigned long>(da));
  }
}

Rational discriminant(const UniPoly& p) {
  if (p.degree() < 1) throw InvalidArgument("discriminant of a constant polynomial");
  const int d = p.degree();
  Rational r = resultant(p, derivative(p)) / p.leading();
  return ((d * (d - 1) / 2) % 2 == 1) ? -r : r;
}

std::vector<Integer> primitive_integer_coeffs(const UniPoly& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

UniPoly primitive_part(const UniPoly& p) {
  std::vector<Rational> c;
  for (auto& v : primitive_integer_coeffs(p)) c.emplace_back(v);
  return UniPoly(std::move(c));
}

UniPoly strip_zero_roots(const UniPoly& p, int* removed) {
  int k = 0;
  while (k <= p.degree() && p.coeff(k).is_zero()) ++k;
  if (removed) *removed = p.is_zero() ? 0 : k;
  if (k == 0 || p.is_zero()) return p;
  return UniPoly(std::vector<Rational>(p.coeffs().begin() + k, p.coeffs().end()));
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() < 1) return p;
  UniPoly g = poly_gcd(p, derivative(p));
  return exact_div(p, g);
}

std::string to_string(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeff(i);
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace dyn
