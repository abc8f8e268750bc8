#include "dyn/perm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "dyn/errors.hpp"

namespace dyn {

std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

Partition parse_partition(std::string_view text) {
  Partition out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '[' ||
                               text[i] == ']' || text[i] == ','))
      ++i;
  };
  auto number = [&] {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("bad partition: " + std::string(text));
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i++] - '0');
      if (v > 100000) throw ParseError("partition part too large");
    }
    return v;
  };
  skip();
  while (i < text.size()) {
    int part = number();
    int mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      mult = number();
    }
    if (part <= 0) throw ParseError("partition parts must be positive");
    out.insert(out.end(), static_cast<std::size_t>(mult), part);
    skip();
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Permutation::Permutation(const std::vector<int>& images) {
  int n = static_cast<int>(images.size());
  if (n > 255) throw InvalidArgument("permutation degree above 255");
  std::vector<bool> hit(images.size(), false);
  img_.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > n || hit[static_cast<std::size_t>(v - 1)])
      throw InvalidArgument("image list is not a permutation");
    hit[static_cast<std::size_t>(v - 1)] = true;
    img_.push_back(static_cast<std::uint8_t>(v - 1));
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(im);
}

Permutation Permutation::parse(std::string_view text, int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<int> cyc;
    for (;;) {
      ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("bad cycle notation: " + std::string(text));
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i++] - '0');
        if (v > n) throw ParseError("point " + std::to_string(v) + " exceeds degree " + std::to_string(n));
      }
      if (v < 1) throw ParseError("points are numbered from 1");
      cyc.push_back(v);
      ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    for (int v : cyc) {
      if (used[static_cast<std::size_t>(v - 1)]) throw ParseError("cycles are not disjoint: " + std::string(text));
      used[static_cast<std::size_t>(v - 1)] = true;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) im[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()];
    ws();
  }
  return Permutation(im);
}

std::vector<int> Permutation::images() const {
  std::vector<int> out;
  out.reserve(img_.size());
  for (auto v : img_) out.push_back(v + 1);
  return out;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Permutation Permutation::pow(long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  Permutation r = identity(degree());
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::fixed_points() const {
  int c = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) c += img_[i] == i;
  return c;
}

Partition Permutation::cycle_type() const {
  Partition out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

int Permutation::order() const {
  long l = 1;
  for (int c : cycle_type()) l = std::lcm(l, static_cast<long>(c));
  return static_cast<int>(l);
}

std::string Permutation::str() const {
  std::string s;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (j != i) s += ",";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("permutations of different degree");
  Permutation r = a;
  for (std::size_t i = 0; i < a.img_.size(); ++i) r.img_[i] = b.img_[a.img_[i]];
  return r;
}

}  // namespace dyn
