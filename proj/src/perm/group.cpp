#include "dyn/perm/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "dyn/arith/intfactor.hpp"
#include "dyn/errors.hpp"

namespace dyn {

PermGroup PermGroup::trivial(int degree) { return generate(degree, {}); }

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = std::move(elements);
  // Greedy generating set: add the first element outside the current span.
  std::vector<bool> covered(g.elements_.size(), false);
  covered[0] = true;
  std::vector<std::size_t> span = {0};
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    if (covered[i]) continue;
    g.generators_.push_back(g.elements_[i]);
    PermGroup sub = generate(degree, g.generators_);
    for (const Permutation& p : sub.elements()) covered[g.index_of(p)] = true;
  }
  return g;
}

bool PermGroup::contains(const Permutation& p) const { return index_of(p) != elements_.size(); }

std::size_t PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

PermGroup generate(int degree, const std::vector<Permutation>& gens, std::size_t cap) {
  for (const Permutation& g : gens)
    if (g.degree() != degree) throw InvalidArgument("generators act on different degrees");
  std::set<Permutation> seen;
  std::deque<Permutation> todo;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation p = todo.front();
    todo.pop_front();
    for (const Permutation& g : gens) {
      Permutation q = p * g;
      if (seen.insert(q).second) {
        if (seen.size() > cap) throw ClosureCapExceeded("group closure exceeded " + std::to_string(cap) + " elements");
        todo.push_back(q);
      }
    }
  }
  PermGroup out;
  out.degree_ = degree;
  for (const Permutation& g : gens)
    if (!g.is_identity() && std::find(out.generators_.begin(), out.generators_.end(), g) == out.generators_.end())
      out.generators_.push_back(g);
  out.elements_.assign(seen.begin(), seen.end());
  return out;
}

PermGroup generate(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) throw InvalidArgument("empty generator list; give a degree");
  return generate(gens.front().degree(), gens, cap);
}

CycleTypeDistribution cycle_type_distribution(const PermGroup& g) {
  CycleTypeDistribution d;
  for (const Permutation& p : g.elements()) ++d[p.cycle_type()];
  return d;
}

Rational root_density(const PermGroup& g) {
  long fixing = 0;
  for (const Permutation& p : g.elements()) fixing += p.fixed_points() > 0;
  return Rational(Integer(fixing), Integer(static_cast<long>(g.order())));
}

std::vector<std::vector<int>> orbits(const PermGroup& g) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.degree()), false);
  for (int i = 0; i < g.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> orb = {i};
    seen[static_cast<std::size_t>(i)] = true;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const Permutation& s : g.generators()) {
        int j = s(orb[k]);
        if (!seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = true;
          orb.push_back(j);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::set<int> point_degrees(const PermGroup& g) {
  std::set<int> out;
  for (const auto& o : orbits(g)) out.insert(static_cast<int>(o.size()));
  return out;
}

std::map<int, long> element_order_histogram(const PermGroup& g) {
  std::map<int, long> h;
  for (const Permutation& p : g.elements()) ++h[p.order()];
  return h;
}

bool has_shape(const PermGroup& g, const Partition& shape) {
  for (const Permutation& p : g.elements())
    if (p.cycle_type() == shape) return true;
  return false;
}

PermGroup center(const PermGroup& g) {
  std::vector<Permutation> z;
  for (const Permutation& p : g.elements()) {
    bool central = true;
    for (const Permutation& s : g.generators())
      if (p * s != s * p) {
        central = false;
        break;
      }
    if (central) z.push_back(p);
  }
  return PermGroup::from_elements(g.degree(), std::move(z));
}

PermGroup derived_subgroup(const PermGroup& g) {
  // The normal closure of the commutators of generators is the derived
  // subgroup; conjugating by generators until stable gives that closure.
  std::vector<Permutation> gens;
  for (const Permutation& a : g.generators())
    for (const Permutation& b : g.generators()) {
      Permutation c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) gens.push_back(c);
    }
  PermGroup d = generate(g.degree(), gens);
  for (;;) {
    std::vector<Permutation> more = d.generators();
    bool grew = false;
    for (const Permutation& x : d.generators())
      for (const Permutation& s : g.generators()) {
        Permutation y = s.inverse() * x * s;
        if (!d.contains(y)) {
          more.push_back(y);
          grew = true;
        }
      }
    if (!grew) return d;
    d = generate(g.degree(), more);
  }
}

std::vector<long> abelian_invariants(const PermGroup& g) {
  PermGroup d = derived_subgroup(g);
  long q = static_cast<long>(g.order() / d.order());
  std::vector<long> out;
  if (q == 1) return out;
  for (const auto& [pz, e] : factor_integer(Integer(q))) {
    long p = pz.get_si();
    // c[k] = log_p #{x in G/G' : x^(p^k) = 1}
    std::vector<int> c = {0};
    long pk = 1;
    for (int k = 1;; ++k) {
      pk *= p;
      long count = 0;
      for (const Permutation& x : g.elements()) count += d.contains(x.pow(pk));
      count /= static_cast<long>(d.order());
      int lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      c.push_back(lg);
      if (lg == c[static_cast<std::size_t>(k - 1)]) break;
      if (k > 64) break;
    }
    // Number of cyclic factors of exponent >= k is c[k] - c[k-1].
    for (std::size_t k = 1; k < c.size(); ++k) {
      int ge_k = c[k] - c[k - 1];
      int ge_next = k + 1 < c.size() ? c[k + 1] - c[k] : 0;
      long pe = 1;
      for (std::size_t j = 0; j < k; ++j) pe *= p;
      for (int j = 0; j < ge_k - ge_next; ++j) out.push_back(pe);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_abelian(const PermGroup& g) {
  for (const Permutation& a : g.generators())
    for (const Permutation& b : g.generators())
      if (a * b != b * a) return false;
  return true;
}

bool is_cyclic(const PermGroup& g) {
  for (const Permutation& p : g.elements())
    if (static_cast<std::size_t>(p.order()) == g.order()) return true;
  return false;
}

PermGroup conjugate(const PermGroup& h, const Permutation& x) {
  std::vector<Permutation> els;
  els.reserve(h.order());
  Permutation xi = x.inverse();
  for (const Permutation& p : h.elements()) els.push_back(xi * p * x);
  return PermGroup::from_elements(h.degree(), std::move(els));
}

bool contained_up_to_conjugacy(const PermGroup& h, const PermGroup& k, const PermGroup& g) {
  if (k.order() % h.order() != 0) return false;
  for (const Permutation& x : g.elements()) {
    Permutation xi = x.inverse();
    bool inside = true;
    for (const Permutation& s : h.generators())
      if (!k.contains(xi * s * x)) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

bool conjugate_in(const PermGroup& h, const PermGroup& k, const PermGroup& g) {
  return h.order() == k.order() && contained_up_to_conjugacy(h, k, g);
}

}  // namespace dyn
