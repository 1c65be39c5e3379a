// Copyright 2026 The pfaffkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PFAFF_SMALL_SET_HPP
#define PFAFF_SMALL_SET_HPP

#include <bit>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <limits>
#include <vector>

namespace pfaff {

/// Fixed-width set of small non-negative integers backed by one machine
/// word. The tag keeps vertex sets and edge sets from mixing.
template <class Tag, std::unsigned_integral Word>
class SmallSet {
 public:
  using word_type = Word;
  static constexpr int capacity = std::numeric_limits<Word>::digits;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(Word rest) : rest_(rest) {}

    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word rest_ = 0;
  };

  constexpr SmallSet() = default;
  constexpr explicit SmallSet(Word bits) : bits_(bits) {}

  static constexpr SmallSet single(int i) { return SmallSet(Word{1} << i); }
  /// {0, 1, ..., n-1}
  static constexpr SmallSet first(int n) {
    return n >= capacity ? SmallSet(~Word{0}) : SmallSet((Word{1} << n) - 1);
  }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool parity() const { return (std::popcount(bits_) & 1) != 0; }
  /// Smallest member; the set must be non-empty.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr int back() const { return capacity - 1 - std::countl_zero(bits_); }

  constexpr void insert(int i) { bits_ |= Word{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(Word{1} << i); }
  constexpr void toggle(int i) { bits_ ^= Word{1} << i; }

  constexpr bool is_subset_of(SmallSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(SmallSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  constexpr SmallSet operator|(SmallSet o) const { return SmallSet(bits_ | o.bits_); }
  constexpr SmallSet operator&(SmallSet o) const { return SmallSet(bits_ & o.bits_); }
  /// Symmetric difference, i.e. the mod-2 sum.
  constexpr SmallSet operator^(SmallSet o) const { return SmallSet(bits_ ^ o.bits_); }
  constexpr SmallSet operator-(SmallSet o) const { return SmallSet(bits_ & ~o.bits_); }
  constexpr SmallSet& operator|=(SmallSet o) { bits_ |= o.bits_; return *this; }
  constexpr SmallSet& operator&=(SmallSet o) { bits_ &= o.bits_; return *this; }
  constexpr SmallSet& operator^=(SmallSet o) { bits_ ^= o.bits_; return *this; }
  constexpr SmallSet& operator-=(SmallSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const SmallSet&) const = default;

  /// Lexicographic order of the sorted member lists. This is the canonical
  /// order for factor and circuit listings.
  friend constexpr bool lex_less(SmallSet a, SmallSet b) {
    const Word diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    const int d = std::countr_zero(diff);
    const Word above = d + 1 >= capacity ? Word{0} : ~((Word{1} << (d + 1)) - 1);
    if (a.contains(d)) return (b.bits_ & above) != 0;
    return (a.bits_ & above) == 0;
  }

 private:
  Word bits_ = 0;
};

struct VertexTag {};
struct EdgeTag {};

/// Vertex ids 0..31.
using VertexSet = SmallSet<VertexTag, std::uint32_t>;
/// Edge indices 0..63 into a host graph's edge list.
using EdgeSet = SmallSet<EdgeTag, std::uint64_t>;

struct LexLess {
  template <class T, class W>
  constexpr bool operator()(SmallSet<T, W> a, SmallSet<T, W> b) const {
    return lex_less(a, b);
  }
};

}  // namespace pfaff

template <class Tag, class Word>
struct std::hash<pfaff::SmallSet<Tag, Word>> {
  std::size_t operator()(pfaff::SmallSet<Tag, Word> s) const noexcept {
    return std::hash<Word>{}(s.bits());
  }
};

#endif  // PFAFF_SMALL_SET_HPP
