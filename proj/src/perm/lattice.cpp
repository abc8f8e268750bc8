#include "dyn/perm/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "dyn/errors.hpp"

namespace dyn {

namespace {

bool is_prime_small(std::size_t m) {
  if (m < 2) return false;
  for (std::size_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

bool is_prime_power(std::size_t m) {
  if (m < 2) return false;
  std::size_t p = 2;
  while (m % p) ++p;
  while (m % p == 0) m /= p;
  return m == 1;
}

// Sets ordered by their sorted member lists.
bool lex_less(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] == b[w]) continue;
    std::uint64_t d = a[w] ^ b[w];
    return (a[w] & d & (~d + 1)) != 0;
  }
  return false;
}

struct BitsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& b) const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

}  // namespace

SubgroupLattice::SubgroupLattice(const PermGroup& g, std::size_t cap) : g_(g) {
  if (g.order() > cap)
    throw LatticeCapExceeded("group of order " + std::to_string(g.order()) + " exceeds lattice cap " +
                             std::to_string(cap));
  n_ = static_cast<std::uint32_t>(g.order());
  const auto& el = g.elements();
  mul_.resize(static_cast<std::size_t>(n_) * n_);
  inv_.resize(n_);
  for (std::uint32_t a = 0; a < n_; ++a) {
    inv_[a] = static_cast<std::uint32_t>(g.index_of(el[a].inverse()));
    for (std::uint32_t b = 0; b < n_; ++b) mul_[a * n_ + b] = static_cast<std::uint32_t>(g.index_of(el[a] * el[b]));
  }
  const std::size_t words = (n_ + 63) / 64;

  std::unordered_set<Bits, BitsHash> seen;  // every subgroup met so far, all conjugates
  auto add_class = [&](const Bits& h, std::vector<std::uint32_t> gens) {
    Bits best = h;
    std::unordered_set<Bits, BitsHash> conjs;
    for (std::uint32_t x = 0; x < n_; ++x) {
      Bits c = conj_bits(h, x);
      if (lex_less(c, best)) best = c;
      conjs.insert(std::move(c));
    }
    // Re-express the generators inside the canonical conjugate.
    std::uint32_t to_best = 0;
    for (std::uint32_t x = 0; x < n_; ++x)
      if (conj_bits(h, x) == best) {
        to_best = x;
        break;
      }
    for (auto& s : gens) s = mul(mul(inv_[to_best], s), to_best);
    Class c;
    c.bits = best;
    c.gens = std::move(gens);
    c.length = conjs.size();
    for (auto& b : conjs) seen.insert(b);
    classes_.push_back(std::move(c));
  };

  Bits trivial(words, 0);
  trivial[0] = 1;
  add_class(trivial, {});
  for (std::size_t ci = 0; ci < classes_.size(); ++ci) {
    const Bits k = classes_[ci].bits;
    const std::vector<std::uint32_t> kgens = classes_[ci].gens;
    std::vector<std::uint32_t> kmem = members(k);
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (has(k, x)) continue;
      bool normalises = true;
      for (auto s : kgens)
        if (!has(k, mul(mul(inv_[x], s), x))) {
          normalises = false;
          break;
        }
      if (!normalises) continue;
      std::size_t m = 1;
      std::uint32_t xp = x;
      while (!has(k, xp)) {
        xp = mul(xp, x);
        ++m;
      }
      if (!is_prime_small(m)) continue;
      // <K, x> is the union of the cosets K x^i, i < m.
      Bits h = k;
      std::uint32_t xi = x;
      for (std::size_t i = 1; i < m; ++i, xi = mul(xi, x))
        for (auto a : kmem) {
          std::uint32_t e = mul(a, xi);
          h[e >> 6] |= std::uint64_t{1} << (e & 63);
        }
      if (seen.count(h)) continue;
      std::vector<std::uint32_t> gens = kgens;
      gens.push_back(x);
      add_class(h, std::move(gens));
      if (classes_.size() > cap)
        throw LatticeCapExceeded("more than " + std::to_string(cap) + " subgroup classes");
    }
  }

  std::sort(classes_.begin(), classes_.end(), [&](const Class& a, const Class& b) {
    std::size_t oa = members(a.bits).size(), ob = members(b.bits).size();
    if (oa != ob) return oa < ob;
    return lex_less(a.bits, b.bits);
  });
  for (Class& c : classes_) c.rep = to_group(c.bits);
}

SubgroupLattice::Bits SubgroupLattice::conj_bits(const Bits& h, std::uint32_t x) const {
  Bits out(h.size(), 0);
  std::uint32_t xi = inv_[x];
  for (std::size_t w = 0; w < h.size(); ++w) {
    std::uint64_t word = h[w];
    while (word) {
      int b = __builtin_ctzll(word);
      word &= word - 1;
      std::uint32_t e = mul(mul(xi, static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b))), x);
      out[e >> 6] |= std::uint64_t{1} << (e & 63);
    }
  }
  return out;
}

std::vector<std::uint32_t> SubgroupLattice::members(const Bits& b) const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t word = b[w];
    while (word) {
      int k = __builtin_ctzll(word);
      word &= word - 1;
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(k)));
    }
  }
  return out;
}

SubgroupLattice::Bits SubgroupLattice::closure(const Bits& seed, const std::vector<std::uint32_t>& gens) const {
  Bits out = seed;
  std::vector<std::uint32_t> mem = members(seed);
  for (auto s : gens)
    if (!has(out, s)) {
      out[s >> 6] |= std::uint64_t{1} << (s & 63);
      mem.push_back(s);
    }
  std::vector<std::uint32_t> all_gens = mem;
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (auto s : all_gens) {
      std::uint32_t e = mul(mem[i], s);
      if (!has(out, e)) {
        out[e >> 6] |= std::uint64_t{1} << (e & 63);
        mem.push_back(e);
      }
    }
  return out;
}

PermGroup SubgroupLattice::to_group(const Bits& b) const {
  std::vector<Permutation> els;
  for (auto i : members(b)) els.push_back(g_.elements()[i]);
  return PermGroup::from_elements(g_.degree(), std::move(els));
}

std::size_t SubgroupLattice::class_of(const PermGroup& h) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (order(i) == h.order() && conjugate_in(h, classes_[i].rep, g_)) return i;
  throw InvalidArgument("not a subgroup of the ambient group");
}

bool SubgroupLattice::contained(std::size_t i, std::size_t j) const {
  if (order(j) % order(i)) return false;
  const Bits& kb = classes_[j].bits;
  for (std::uint32_t x = 0; x < n_; ++x) {
    bool inside = true;
    for (auto s : classes_[i].gens)
      if (!has(kb, mul(mul(inv_[x], s), x))) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

std::vector<std::size_t> SubgroupLattice::subclasses(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (i != j && order(i) < order(j) && contained(i, j)) out.push_back(i);
  return out;
}

std::vector<std::size_t> SubgroupLattice::maximal_subclasses(std::size_t j) const {
  std::vector<std::size_t> out;
  const Bits& xb = classes_[j].bits;
  std::vector<std::uint32_t> xmem = members(xb);
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (order(i) >= order(j) || order(j) % order(i)) continue;
    // Maximal subgroups of soluble groups have prime-power index.
    if (!is_prime_power(order(j) / order(i))) continue;
    std::set<Bits> inside;
    for (std::uint32_t x = 0; x < n_; ++x) {
      bool ok = true;
      for (auto s : classes_[i].gens)
        if (!has(xb, mul(mul(inv_[x], s), x))) {
          ok = false;
          break;
        }
      if (ok) inside.insert(conj_bits(classes_[i].bits, x));
    }
    bool found = false;
    for (const Bits& y : inside) {
      // Y is maximal in X iff <Y, a> = X for every a in X \ Y; <Y, a> only
      // depends on the double coset Y a Y.
      Bits done = y;
      bool maximal = true;
      for (auto a : xmem) {
        if (has(done, a)) continue;
        Bits span = closure(y, {a});
        if (span != xb) {
          maximal = false;
          break;
        }
        for (auto u : members(y))
          for (auto v : members(y)) {
            std::uint32_t e = mul(mul(u, a), v);
            done[e >> 6] |= std::uint64_t{1} << (e & 63);
          }
      }
      if (maximal) {
        found = true;
        break;
      }
    }
    if (found) out.push_back(i);
  }
  return out;
}

std::vector<PermGroup> subgroup_conjugacy_classes(const PermGroup& g, std::size_t cap) {
  SubgroupLattice lat(g, cap);
  std::vector<PermGroup> out;
  for (std::size_t i = 0; i < lat.size(); ++i) out.push_back(lat.representative(i));
  return out;
}

}  // namespace dyn
