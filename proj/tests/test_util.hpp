// Copyright 2026 The hcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generators and independent oracles for the test suite. Nothing here calls the code under test
// for the quantity it is an oracle of.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hcode/gf3.hpp"

namespace hcode::test {

template <typename Rng>
GF3Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::uniform_int_distribution<int> d(0, 2);
  GF3Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, Trit(d(rng)));
  return m;
}

template <typename Rng>
TritVector random_trits(std::size_t len, Rng& rng) {
  std::uniform_int_distribution<int> d(0, 2);
  TritVector v(len);
  for (auto& t : v) t = Trit(d(rng));
  return v;
}

/// Rank as log_3 of the number of distinct vectors in the row space (enumerates 3^rows
/// combinations; rows <= 9).
inline std::size_t rank_by_row_space(const GF3Matrix& m) {
  std::set<std::vector<int>> space;
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) combos *= 3;
  for (std::uint64_t idx = 0; idx < combos; ++idx) {
    std::vector<int> v(m.cols(), 0);
    std::uint64_t x = idx;
    for (std::size_t r = 0; r < m.rows(); ++r, x /= 3) {
      const int c = static_cast<int>(x % 3);
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = (v[j] + c * m.at(r, j).as_int()) % 3;
    }
    space.insert(v);
  }
  std::size_t r = 0;
  for (std::size_t size = space.size(); size > 1; size /= 3) ++r;
  return r;
}

/// Torus codeword by literal hand propagation on a 2D integer grid, s'[c] = -(s[c] + s[c+1]).
inline std::vector<std::vector<int>> propagate_grid(const std::vector<int>& boundary, std::size_t rows) {
  const std::size_t n = boundary.size();
  std::vector<std::vector<int>> g{boundary};
  while (g.size() < rows + 1) {
    const auto& prev = g.back();
    std::vector<int> next(n);
    for (std::size_t c = 0; c < n; ++c) next[c] = ((-(prev[c] + prev[(c + 1) % n])) % 3 + 3) % 3;
    g.push_back(next);
  }
  return g;  // rows + 1 rows: the last one is the closure row
}

/// C(n, r) mod 3 from Pascal's triangle kept mod 3 (independent of digit arguments).
inline std::vector<int> pascal_row_mod3(std::size_t n) {
  std::vector<int> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] = (next[j] + row[j]) % 3;
      next[j + 1] = (next[j + 1] + row[j]) % 3;
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace hcode::test
