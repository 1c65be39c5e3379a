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

#ifndef PFAFF_GF2_HPP
#define PFAFF_GF2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pfaff/errors.hpp"

namespace pfaff {

/// Incremental Gaussian elimination over GF(2) for at most 64 unknowns.
///
/// Equations arrive one at a time and are reduced against the pivots seen
/// so far. Each stored row remembers which input equations it is the sum
/// of, so an inconsistency comes with the subset of equations that adds up
/// to 0 = 1.
class Gf2System {
 public:
  explicit Gf2System(int unknowns) : unknowns_(unknowns) {
    if (unknowns < 0 || unknowns > 64) throw InvalidArgument("at most 64 unknowns");
  }

  int unknowns() const { return unknowns_; }
  std::size_t equations() const { return count_; }
  std::size_t rank() const { return rows_.size(); }
  bool consistent() const { return !conflict_.has_value(); }

  /// Adds sum_{i in coefficients} x_i = rhs. Returns false once the system
  /// has become inconsistent.
  bool add(std::uint64_t coefficients, bool rhs) {
    const std::size_t id = count_++;
    if (conflict_) return false;
    Row row{coefficients, rhs, {}, -1};
    row.combo.assign(id / 64 + 1, 0);
    row.combo[id / 64] |= std::uint64_t{1} << (id % 64);
    for (const Row& r : rows_) {
      if ((row.coef >> r.pivot) & 1U) {
        row.coef ^= r.coef;
        row.rhs ^= r.rhs;
        xor_into(row.combo, r.combo);
      }
    }
    if (row.coef == 0) {
      if (row.rhs) {
        conflict_ = members(row.combo);
        return false;
      }
      return true;
    }
    row.pivot = std::countr_zero(row.coef);
    rows_.push_back(std::move(row));
    return true;
  }

  /// Some solution (free unknowns set to 0), when consistent.
  std::optional<std::uint64_t> solution() const {
    if (conflict_) return std::nullopt;
    std::uint64_t x = 0;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      std::uint64_t rest = it->coef & ~(std::uint64_t{1} << it->pivot);
      bool value = it->rhs ^ ((std::popcount(rest & x) & 1) != 0);
      if (value) x |= std::uint64_t{1} << it->pivot;
    }
    return x;
  }

  /// Indices (in insertion order) of equations summing to 0 = 1.
  const std::optional<std::vector<std::size_t>>& conflict() const { return conflict_; }

 private:
  struct Row {
    std::uint64_t coef;
    bool rhs;
    std::vector<std::uint64_t> combo;
    int pivot;
  };

  static void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
    if (dst.size() < src.size()) dst.resize(src.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
  }

  static std::vector<std::size_t> members(const std::vector<std::uint64_t>& bits) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < bits.size(); ++w)
      for (std::uint64_t b = bits[w]; b; b &= b - 1)
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  int unknowns_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
  std::optional<std::vector<std::size_t>> conflict_;
};

}  // namespace pfaff

#endif  // PFAFF_GF2_HPP
