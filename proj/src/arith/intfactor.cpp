#include "dyn/arith/intfactor.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <string>

#include "dyn/errors.hpp"

namespace dyn {

namespace {
std::atomic<std::uint64_t> g_rho_override{0};
}

void set_default_rho_iterations(std::uint64_t iterations) { g_rho_override = iterations; }

FactorEffort default_factor_effort() {
  FactorEffort e;
  if (std::uint64_t o = g_rho_override.load()) {
    e.rho_iterations = o;
  } else if (const char* env = std::getenv("DYN_FACTOR_EFFORT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) e.rho_iterations = v;
  }
  return e;
}

bool is_probable_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

namespace {

// One Pollard-Brent run with polynomial x^2 + c. Returns a nontrivial factor
// or 0; consumes iterations from the shared budget.
Integer brent(const Integer& n, unsigned long c, std::uint64_t& budget) {
  Integer y = 2, x, q = 1, g = 1, ys, tmp;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](Integer& v) {
    v = v * v + c;
    v %= n;
  };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    do {
      ys = y;
      unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        tmp = abs(x - y);
        q = (q * tmp) % n;
      }
      if (budget <= lim) {
        budget = 0;
        return 0;
      }
      budget -= lim;
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    // Backtrack one step at a time.
    do {
      step(ys);
      tmp = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), tmp.get_mpz_t(), n.get_mpz_t());
      if (budget == 0) return 0;
      --budget;
    } while (g == 1);
  }
  return g == n ? Integer(0) : g;
}

void split(const Integer& n, std::map<Integer, unsigned>& out, std::uint64_t& budget, const Integer& original) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    split(s, out, budget, original);
    split(s, out, budget, original);
    return;
  }
  for (unsigned long c = 1;; ++c) {
    Integer f = brent(n, c, budget);
    if (f != 0) {
      split(f, out, budget, original);
      split(n / f, out, budget, original);
      return;
    }
    if (budget == 0) throw IntegerFactorizationEffortExceeded(original.get_str());
  }
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n_in, const FactorEffort& effort) {
  if (n_in == 0) throw InvalidArgument("cannot factor zero");
  Integer n = abs(n_in);
  std::map<Integer, unsigned> out;
  for (std::uint64_t p = 2; p <= effort.trial_bound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n > 1) {
    if (Integer(effort.trial_bound) * effort.trial_bound >= n || is_probable_prime(n)) {
      ++out[n];
    } else {
      std::uint64_t budget = effort.rho_iterations;
      split(n, out, budget, abs(n_in));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Integer> divisors(const Integer& n, const FactorEffort& effort) {
  std::vector<Integer> ds{1};
  for (auto& [p, e] : factor_integer(n, effort)) {
    std::size_t base = ds.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace dyn
