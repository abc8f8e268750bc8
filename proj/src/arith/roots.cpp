#include "dyn/arith/roots.hpp"

#include <algorithm>

#include "dyn/arith/modp_poly.hpp"
#include "dyn/errors.hpp"

namespace dyn {

namespace {

Integer eval_int(const std::vector<Integer>& a, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = acc * x + *it;
    acc %= m;
  }
  return acc;
}

// Lifts a simple root r of a mod l to a root mod l^k >= bound.
Integer hensel_lift(const std::vector<Integer>& a, std::uint64_t l, std::uint64_t r, const Integer& bound,
                    Integer* modulus) {
  std::vector<Integer> da;
  for (std::size_t i = 1; i < a.size(); ++i) da.push_back(a[i] * static_cast<unsigned long>(i));
  Integer root = static_cast<unsigned long>(r);
  Integer m = static_cast<unsigned long>(l);
  while (m <= bound) {
    m = m * m;
    Integer fv = eval_int(a, root, m);
    Integer dv = eval_int(da, root, m);
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t()) == 0) {
      throw InvalidArgument("Hensel lift hit a non-simple root");
    }
    root = (root - fv * inv) % m;
    if (root < 0) root += m;
  }
  *modulus = m;
  return root;
}

bool vanishes(const std::vector<Integer>& a, const Integer& p, const Integer& q) {
  // sum a_i p^i q^(n-i)
  Integer acc = 0, qpow = 1;
  const std::size_t n = a.size() - 1;
  std::vector<Integer> qs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    qs[i] = qpow;
    qpow *= q;
  }
  Integer ppow = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    acc += a[i] * ppow * qs[n - i];
    ppow *= p;
  }
  return acc == 0;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p, const FactorEffort& effort) {
  if (p.is_zero()) throw InvalidArgument("rational roots of the zero polynomial");
  std::vector<Rational> out;
  int zeros = 0;
  UniPoly f = strip_zero_roots(p, &zeros);
  if (zeros > 0) out.emplace_back(0);
  if (f.degree() >= 1) {
    f = squarefree_part(f);
    std::vector<Integer> a = primitive_integer_coeffs(f);
    if (a.size() == 2) {
      out.emplace_back(-a[0], a[1]);
    } else {
      const Integer& lc = a.back();
      const Integer& a0 = a.front();
      // Square-free over Q implies square-free modulo all but finitely many
      // primes, so this search terminates.
      std::uint64_t l = 3;
      std::vector<Rational> integral(a.begin(), a.end());
      const UniPoly g(std::move(integral));
      std::optional<ModPPoly> red;
      for (;; l += 2) {
        if (!is_probable_prime(Integer(static_cast<unsigned long>(l)))) continue;
        if (mpz_divisible_ui_p(lc.get_mpz_t(), l)) continue;
        red = reduce_mod(g, l);
        if (red && is_squarefree(*red)) break;
      }
      std::vector<std::uint64_t> small_roots = roots_by_search(*red);
      if (!small_roots.empty()) {
        const Integer bound = 2 * abs(a0);
        std::vector<Integer> qs = divisors(lc, effort);
        for (std::uint64_t r : small_roots) {
          Integer m;
          Integer lifted = hensel_lift(a, l, r, bound, &m);
          for (const Integer& q : qs) {
            Integer num = (lifted * q) % m;
            if (num > m / 2) num -= m;
            if (num == 0) continue;
            Integer g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
            if (g != 1) continue;
            if (!mpz_divisible_p(a0.get_mpz_t(), num.get_mpz_t())) continue;
            if (vanishes(a, num, q)) out.emplace_back(num, q);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dyn
