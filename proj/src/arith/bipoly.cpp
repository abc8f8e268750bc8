#include "dyn/arith/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "dyn/errors.hpp"

namespace dyn {

BiPoly::BiPoly(std::map<Key, Rational> terms) {
  for (auto& [k, c] : terms) {
    if (k.first < 0 || k.second < 0) throw InvalidArgument("negative exponent in BiPoly");
    if (!c.is_zero()) terms_.emplace(k, c);
  }
}

BiPoly BiPoly::constant(const Rational& c) { return term(c, 0, 0); }

BiPoly BiPoly::term(const Rational& c, int t_deg, int x_deg) {
  return BiPoly(std::map<Key, Rational>{{{t_deg, x_deg}, c}});
}

BiPoly BiPoly::in_x(const UniPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term({0, i}, p.coeff(i));
  return r;
}

BiPoly BiPoly::in_t(const UniPoly& p) {
  BiPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term({i, 0}, p.coeff(i));
  return r;
}

BiPoly BiPoly::from_x_coeffs(const std::vector<UniPoly>& c) {
  BiPoly r;
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (int i = 0; i <= c[j].degree(); ++i) r.add_term({i, static_cast<int>(j)}, c[j].coeff(i));
  }
  return r;
}

void BiPoly::add_term(const Key& k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int BiPoly::degree_x() const {
  int d = -1;
  for (auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

int BiPoly::degree_t() const {
  int d = -1;
  for (auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

Rational BiPoly::coeff(int t_deg, int x_deg) const {
  auto it = terms_.find({t_deg, x_deg});
  return it == terms_.end() ? Rational() : it->second;
}

std::vector<UniPoly> BiPoly::x_coeffs() const {
  const int dx = degree_x();
  const int dt = degree_t();
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(dx + 1),
                                         std::vector<Rational>(static_cast<std::size_t>(dt + 1)));
  for (auto& [k, c] : terms_) raw[static_cast<std::size_t>(k.second)][static_cast<std::size_t>(k.first)] = c;
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

UniPoly BiPoly::leading_x() const {
  if (is_zero()) return {};
  return x_coeffs().back();
}

UniPoly BiPoly::specialize_t(const Rational& v) const {
  std::vector<UniPoly> cs = x_coeffs();
  std::vector<Rational> out;
  out.reserve(cs.size());
  for (auto& c : cs) out.push_back(c(v));
  return UniPoly(std::move(out));
}

UniPoly BiPoly::specialize_x(const Rational& v) const {
  const int dt = degree_t();
  std::vector<Rational> out(static_cast<std::size_t>(dt + 1));
  for (auto& [k, c] : terms_) out[static_cast<std::size_t>(k.first)] += c * pow(v, static_cast<unsigned long>(k.second));
  return UniPoly(std::move(out));
}

UniPoly BiPoly::as_x_poly() const {
  if (!is_free_of_t()) throw InvalidArgument("polynomial depends on t: " + to_string(*this));
  return specialize_t(0);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (auto& [ka, ca] : a.terms_) {
    for (auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

BiPoly pow(const BiPoly& p, unsigned exponent) {
  BiPoly result = BiPoly::constant(1);
  BiPoly base = p;
  while (exponent) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

BiPoly derivative_x(const BiPoly& p) {
  std::map<BiPoly::Key, Rational> out;
  for (auto& [k, c] : p.terms()) {
    if (k.second == 0) continue;
    out[{k.first, k.second - 1}] = c * Rational(k.second);
  }
  return BiPoly(std::move(out));
}

BiPoly compose_x(const BiPoly& p, const BiPoly& q) {
  std::vector<UniPoly> cs = p.x_coeffs();
  BiPoly acc;
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) acc = acc * q + BiPoly::in_t(*it);
  return acc;
}

namespace {

BiPoly shifted(const UniPoly& c, int x_shift) {
  return BiPoly::in_t(c) * BiPoly::term(1, 0, x_shift);
}

}  // namespace

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const int db = b.degree_x();
  const UniPoly lb = b.leading_x();
  BiPoly q, r = a;
  while (!r.is_zero() && r.degree_x() >= db) {
    UniPoly c;
    try {
      c = exact_div(r.leading_x(), lb);
    } catch (const NonPolynomialQuotient&) {
      throw NonPolynomialQuotient("bivariate division of " + to_string(a) + " by " + to_string(b) +
                                  " is not exact");
    }
    BiPoly step = shifted(c, r.degree_x() - db);
    q += step;
    r -= step * b;
  }
  if (!r.is_zero()) {
    throw NonPolynomialQuotient("bivariate division of " + to_string(a) + " by " + to_string(b) +
                                " leaves remainder " + to_string(r));
  }
  return q;
}

PseudoDivision pseudo_divmod(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const int db = b.degree_x();
  const BiPoly lb = BiPoly::in_t(b.leading_x());
  const int k = std::max(a.degree_x() - db + 1, 0);
  BiPoly q, r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree_x() >= db) {
    BiPoly step = shifted(r.leading_x(), r.degree_x() - db);
    q = q * lb + step;
    r = r * lb - step * b;
    ++steps;
  }
  if (steps < k) {
    BiPoly f = pow(lb, static_cast<unsigned>(k - steps));
    q = q * f;
    r = r * f;
  }
  return {std::move(q), std::move(r)};
}

UniPoly content_t(const BiPoly& p) {
  UniPoly g;
  for (const UniPoly& c : p.x_coeffs()) {
    g = poly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly primitive_part(const BiPoly& p) {
  if (p.is_zero()) return p;
  UniPoly content = content_t(p);
  BiPoly q = p;
  if (content.degree() > 0) {
    std::vector<UniPoly> cs = p.x_coeffs();
    for (auto& c : cs) c = exact_div(c, content);
    q = BiPoly::from_x_coeffs(cs);
  }
  Integer l = 1, g = 0;
  for (auto& [k, c] : q.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  for (auto& [k, c] : q.terms()) {
    Integer v = c.num() * (l / c.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  // The leading term under (x-degree, t-degree) order decides the sign.
  auto lead = std::max_element(q.terms().begin(), q.terms().end(), [](const auto& u, const auto& v) {
    return std::pair(u.first.second, u.first.first) < std::pair(v.first.second, v.first.first);
  });
  Rational scale(l, g);
  if (lead->second.sign() < 0) scale = -scale;
  return q * scale;
}

BiPoly gcd_x(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  BiPoly u = primitive_part(a), v = primitive_part(b);
  if (u.degree_x() < v.degree_x()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree_x() == 0) return BiPoly::constant(1);
    BiPoly r = pseudo_divmod(u, v).remainder;
    u = std::move(v);
    v = primitive_part(r);
  }
  return u;
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw InvalidArgument("interpolation size mismatch");
  std::vector<Rational> coef(ys);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  }
  UniPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * UniPoly({-xs[i], 1}) + UniPoly::constant(coef[i]);
  }
  return result;
}

UniPoly resultant_x(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int da = a.degree_x(), db = b.degree_x();
  const int bound = db * std::max(a.degree_t(), 0) + da * std::max(b.degree_t(), 0);
  const UniPoly la = a.leading_x(), lb = b.leading_x();
  std::vector<Rational> xs, ys;
  long probe = 0;
  while (static_cast<int>(xs.size()) < bound + 1) {
    // 0, 1, -1, 2, -2, ...
    Rational t0 = probe == 0 ? Rational(0) : (probe % 2 ? Rational((probe + 1) / 2) : Rational(-probe / 2));
    ++probe;
    if (la(t0).is_zero() || lb(t0).is_zero()) continue;
    xs.push_back(t0);
    ys.push_back(resultant(a.specialize_t(t0), b.specialize_t(t0)));
  }
  return interpolate(xs, ys);
}

UniPoly discriminant_x(const BiPoly& p) {
  const int d = p.degree_x();
  if (d < 1) throw InvalidArgument("discriminant of a polynomial constant in x");
  UniPoly r = exact_div(resultant_x(p, derivative_x(p)), p.leading_x());
  return ((d * (d - 1) / 2) % 2 == 1) ? -r : r;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<UniPoly> cs = p.x_coeffs();
  std::ostringstream os;
  bool first = true;
  for (int j = static_cast<int>(cs.size()) - 1; j >= 0; --j) {
    const UniPoly& c = cs[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    int nonzero = 0;
    for (auto& v : c.coeffs()) nonzero += v.is_zero() ? 0 : 1;
    std::string body;
    bool negative = false;
    if (nonzero == 1) {
      negative = c.leading().sign() < 0;
      body = to_string(negative ? -c : c, 't');
      if (j > 0 && body == "1") body.clear();
    } else {
      body = "(" + to_string(c, 't') + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << body;
    if (j > 0) {
      if (!body.empty()) os << "*";
      os << "x";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

}  // namespace dyn
