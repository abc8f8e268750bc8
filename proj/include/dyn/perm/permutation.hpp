#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dyn {

// Integer partition, parts in non-increasing order.
using Partition = std::vector<int>;

// "[3,1,1,1]"
std::string to_string(const Partition& p);
// Accepts "[3,1,1,1]", "[3,1^3]" or "3,1,1,1".
Partition parse_partition(std::string_view text);

// A permutation of {0..n-1}; printed and serialised 1-based. Products follow
// the left-to-right convention: (a * b)(i) = b(a(i)).
class Permutation {
 public:
  Permutation() = default;
  // 1-based image list; throws InvalidArgument unless it is a bijection.
  explicit Permutation(const std::vector<int>& images);
  static Permutation identity(int n);
  // Cycle notation such as "(1,2,3)(4,5,6)" or "()", on n points.
  static Permutation parse(std::string_view text, int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }  // 0-based
  std::vector<int> images() const;  // 1-based

  Permutation inverse() const;
  Permutation pow(long k) const;
  bool is_identity() const;
  int order() const;
  int fixed_points() const;
  Partition cycle_type() const;
  std::string str() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

}  // namespace dyn
