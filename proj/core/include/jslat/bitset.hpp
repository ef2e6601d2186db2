#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace jslat {

// Every carrier in the library (semilattice elements, topology points,
// members of a generated lattice) is indexed 0..n-1 with n <= kMaxElements.
inline constexpr int kMaxElements = 256;

// Fixed-width set of element ids. Value type; all operations are O(words).
class ElemSet {
 public:
  static constexpr int kWords = kMaxElements / 64;

  constexpr ElemSet() : w_{} {}

  static ElemSet single(int i) {
    ElemSet s;
    s.set(i);
    return s;
  }

  // {0, 1, ..., n-1}
  static ElemSet full(int n) {
    ElemSet s;
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (w_[i >> 6] >> (i & 63)) & std::uint64_t{1};
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool subset_of(const ElemSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const ElemSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  friend ElemSet operator|(ElemSet a, const ElemSet& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] |= b.w_[i];
    return a;
  }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] &= b.w_[i];
    return a;
  }
  // set difference
  friend ElemSet operator-(ElemSet a, const ElemSet& b) {
    for (int i = 0; i < kWords; ++i) a.w_[i] &= ~b.w_[i];
    return a;
  }
  ElemSet& operator|=(const ElemSet& b) {
    for (int i = 0; i < kWords; ++i) w_[i] |= b.w_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& b) {
    for (int i = 0; i < kWords; ++i) w_[i] &= b.w_[i];
    return *this;
  }

  // complement within {0..n-1}
  ElemSet complement(int n) const { return full(n) - *this; }

  bool operator==(const ElemSet&) const = default;
  auto operator<=>(const ElemSet&) const = default;

  // lowest set bit, or -1
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return -1;
  }

  // next set bit strictly after i, or -1
  int next(int i) const {
    ++i;
    if (i >= kMaxElements) return -1;
    int word = i >> 6;
    std::uint64_t cur = w_[word] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (cur) return word * 64 + std::countr_zero(cur);
      if (++word == kWords) return -1;
      cur = w_[word];
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int x = first(); x >= 0; x = next(x)) out.push_back(x);
    return out;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : w_) h = (h ^ w) * 0xff51afd7ed558ccdULL;
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> w_;
};

}  // namespace jslat
