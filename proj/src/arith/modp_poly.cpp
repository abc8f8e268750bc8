#include "dyn/arith/modp_poly.hpp"

#include <algorithm>

#include "dyn/errors.hpp"

namespace dyn {

void ModPPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t ModPPoly::operator()(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::optional<ModPPoly> reduce_mod(const UniPoly& f, std::uint64_t p) {
  if (p < 2 || p >= (1ULL << 32)) throw InvalidArgument("modulus out of range");
  ModPPoly out{p, {}};
  out.c.reserve(f.coeffs().size());
  for (const Rational& r : f.coeffs()) {
    std::uint64_t d = mpz_fdiv_ui(r.den().get_mpz_t(), p);
    if (d == 0) return std::nullopt;
    std::uint64_t n = mpz_fdiv_ui(r.num().get_mpz_t(), p);
    out.c.push_back(n * inv_mod(d, p) % p);
  }
  out.trim();
  return out;
}

ModPPoly mul(const ModPPoly& a, const ModPPoly& b) {
  ModPPoly r{a.p, {}};
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.p;
  }
  r.trim();
  return r;
}

ModPPoly sub(const ModPPoly& a, const ModPPoly& b) {
  ModPPoly r{a.p, a.c};
  if (b.c.size() > r.c.size()) r.c.resize(b.c.size(), 0);
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
  r.trim();
  return r;
}

namespace {

void divide(const ModPPoly& a, const ModPPoly& b, ModPPoly* q, ModPPoly* r) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  const std::uint64_t p = a.p;
  std::vector<std::uint64_t> rem = a.c;
  const int db = b.degree();
  std::vector<std::uint64_t> quo(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, 0);
  const std::uint64_t inv = inv_mod(b.leading(), p);
  for (int i = a.degree(); i >= db; --i) {
    std::uint64_t top = rem[static_cast<std::size_t>(i)];
    if (!top) continue;
    std::uint64_t f = top * inv % p;
    quo[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = (slot + p - f * b.c[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  if (q) {
    q->p = p;
    q->c = std::move(quo);
    q->trim();
  }
  if (r) {
    r->p = p;
    if (rem.size() > static_cast<std::size_t>(db)) rem.resize(static_cast<std::size_t>(db));
    r->c = std::move(rem);
    r->trim();
  }
}

}  // namespace

ModPPoly rem(const ModPPoly& a, const ModPPoly& b) {
  ModPPoly r;
  divide(a, b, nullptr, &r);
  return r;
}

ModPPoly quo(const ModPPoly& a, const ModPPoly& b) {
  ModPPoly q;
  divide(a, b, &q, nullptr);
  return q;
}

ModPPoly derivative(const ModPPoly& a) {
  ModPPoly r{a.p, {}};
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * (i % a.p) % a.p);
  r.trim();
  return r;
}

ModPPoly gcd(ModPPoly a, ModPPoly b) {
  while (!b.is_zero()) {
    ModPPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    std::uint64_t inv = inv_mod(a.leading(), a.p);
    for (auto& v : a.c) v = v * inv % a.p;
  }
  return a;
}

ModPPoly powmod(const ModPPoly& base, const Integer& e, const ModPPoly& m) {
  ModPPoly result{m.p, {1}};
  result = rem(result, m);
  ModPPoly b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b), m);
  }
  return result;
}

bool is_squarefree(const ModPPoly& f) {
  if (f.degree() < 1) return true;
  ModPPoly d = derivative(f);
  if (d.is_zero()) return false;
  return gcd(f, d).degree() == 0;
}

std::vector<int> factor_degrees(const ModPPoly& f_in) {
  std::vector<int> out;
  ModPPoly f = f_in;
  const ModPPoly x{f.p, {0, 1}};
  ModPPoly h = x;
  const Integer p(static_cast<unsigned long>(f.p));
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, p, f);
    ModPPoly g = gcd(f, sub(h, x));
    if (g.degree() > 0) {
      for (int k = 0; k < g.degree() / d; ++k) out.push_back(d);
      f = quo(f, g);
      h = rem(h, f);
    }
  }
  if (f.degree() > 0) out.push_back(f.degree());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> roots_by_search(const ModPPoly& f) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < f.p; ++x) {
    if (f(x) == 0) out.push_back(x);
  }
  return out;
}

}  // namespace dyn
