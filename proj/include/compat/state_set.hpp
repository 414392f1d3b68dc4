//  Copyright 2026 The compat-frames Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef COMPAT_STATE_SET_HPP_
#define COMPAT_STATE_SET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "compat/error.hpp"

namespace compat {

/// Largest universe a StateSet can index.
inline constexpr int kMaxStates = 64;

/// A subset of {0, ..., 63} packed into one machine word.
class StateSet {
 public:
  constexpr StateSet() = default;
  constexpr explicit StateSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr StateSet full(int n) {
    return StateSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr StateSet single(int i) { return StateSet(std::uint64_t{1} << i); }
  static StateSet of(const std::vector<int>& members) {
    StateSet s;
    for (int m : members) s.insert(m);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool subset_of(StateSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(StateSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr StateSet operator|(StateSet o) const { return StateSet(bits_ | o.bits_); }
  constexpr StateSet operator&(StateSet o) const { return StateSet(bits_ & o.bits_); }
  constexpr StateSet minus(StateSet o) const { return StateSet(bits_ & ~o.bits_); }
  constexpr StateSet complement(int n) const { return full(n).minus(*this); }
  StateSet& operator|=(StateSet o) { bits_ |= o.bits_; return *this; }
  StateSet& operator&=(StateSet o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const StateSet&) const = default;
  constexpr auto operator<=>(const StateSet&) const = default;

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Orders sets by cardinality, then by bit pattern. Used for canonical listings.
struct BySizeThenBits {
  bool operator()(StateSet a, StateSet b) const {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.bits() < b.bits();
  }
};

inline void require_state_count(int n, const char* what) {
  if (n < 0 || n > kMaxStates) {
    throw Error(ErrorKind::CapExceeded,
                std::string(what) + " has " + std::to_string(n) + " states; limit is 64");
  }
}

}  // namespace compat

#endif  // COMPAT_STATE_SET_HPP_
