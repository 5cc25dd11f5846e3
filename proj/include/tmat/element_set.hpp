// Copyright 2026 The Authors.
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

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace tmat {

// Subset of a ground set, stored as a bitmask over ground-set positions.
// Ground sets are capped at kMaxElements so a single word suffices.
class ElementSet {
 public:
  static constexpr std::size_t kMaxElements = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
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
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) {
    return ElementSet(bits);
  }
  static constexpr ElementSet singleton(std::size_t i) {
    return ElementSet(std::uint64_t{1} << i);
  }
  // {0, 1, ..., n-1}
  static constexpr ElementSet first(std::size_t n) {
    return n >= kMaxElements ? ElementSet(~std::uint64_t{0})
                             : ElementSet((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const {
    return i < kMaxElements && ((bits_ >> i) & 1U) != 0;
  }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(ElementSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  constexpr ElementSet with(std::size_t i) const {
    return ElementSet(bits_ | (std::uint64_t{1} << i));
  }
  constexpr ElementSet without(std::size_t i) const {
    return ElementSet(bits_ & ~(std::uint64_t{1} << i));
  }
  // Complement relative to `universe`.
  constexpr ElementSet complement_in(ElementSet universe) const {
    return ElementSet(universe.bits_ & ~bits_);
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElementSet&) const = default;
  // Orders by raw bit pattern; see flat_order_less for (size, bits).
  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

// Deterministic ordering used for every list of sets this library emits:
// by cardinality, then by bit pattern.
constexpr bool flat_order_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

}  // namespace tmat
