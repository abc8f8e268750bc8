#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dyn/perm/group.hpp"

namespace dyn {

inline constexpr std::size_t kDefaultLatticeCap = 4096;

// Conjugacy classes of subgroups of a finite group, built bottom-up by
// cyclic extension: every class is <K, g> for an earlier class K and some
// g normalising K with g^p in K for a prime p. This reaches every soluble
// subgroup, which covers all groups handled here (and every group of order
// below 60). Classes are sorted by order, then by their canonical
// representative: the lexicographically least element set among conjugates.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const PermGroup& g, std::size_t cap = kDefaultLatticeCap);

  const PermGroup& group() const { return g_; }
  std::size_t size() const { return classes_.size(); }
  const PermGroup& representative(std::size_t i) const { return classes_[i].rep; }
  std::size_t order(std::size_t i) const { return classes_[i].rep.order(); }
  // Number of subgroups in the class.
  std::size_t class_length(std::size_t i) const { return classes_[i].length; }

  // Index of the class of H (a subgroup of the ambient group).
  std::size_t class_of(const PermGroup& h) const;
  // Whether some conjugate of class i lies in the representative of class j.
  bool contained(std::size_t i, std::size_t j) const;
  // Classes having a conjugate that is a maximal subgroup of representative(j).
  std::vector<std::size_t> maximal_subclasses(std::size_t j) const;
  // Classes i < j in the containment order (all subgroups up to conjugacy).
  std::vector<std::size_t> subclasses(std::size_t j) const;

 private:
  using Bits = std::vector<std::uint64_t>;
  struct Class {
    Bits bits;  // canonical representative
    std::vector<std::uint32_t> gens;
    std::size_t length = 0;
    PermGroup rep;
  };

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * n_ + b]; }
  Bits conj_bits(const Bits& h, std::uint32_t x) const;
  Bits closure(const Bits& seed, const std::vector<std::uint32_t>& gens) const;
  std::vector<std::uint32_t> members(const Bits& b) const;
  bool has(const Bits& b, std::uint32_t i) const { return (b[i >> 6] >> (i & 63)) & 1; }
  PermGroup to_group(const Bits& b) const;

  PermGroup g_;
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> mul_, inv_;
  std::vector<Class> classes_;
};

// One representative per conjugacy class of subgroups, in the order above.
std::vector<PermGroup> subgroup_conjugacy_classes(const PermGroup& g, std::size_t cap = kDefaultLatticeCap);

}  // namespace dyn
