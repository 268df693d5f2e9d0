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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hcode/gf3.hpp"
#include "hcode/parallel.hpp"

namespace hcode {

/// Row-to-row map of the automaton on a periodic row of length n, T_n = -(I + U_n) over GF(3),
/// where U_n is the cyclic shift. Row i carries 2 (= -1) at columns i and i+1 mod n.
class TransferMatrix {
 public:
  explicit TransferMatrix(std::size_t n) : n_(n), matrix_(n, n) {
    if (n < 2) throw std::invalid_argument("TransferMatrix: n must be at least 2");
    for (std::size_t i = 0; i < n; ++i) {
      matrix_.set(i, i, Trit(2));
      matrix_.set(i, (i + 1) % n, Trit(2));
    }
  }

  std::size_t n() const { return n_; }
  const GF3Matrix& matrix() const { return matrix_; }
  TritVector apply(std::span<const Trit> row) const { return matrix_.apply(row); }

 private:
  std::size_t n_;
  GF3Matrix matrix_;
};

inline TransferMatrix transfer_matrix(std::size_t n) { return TransferMatrix(n); }

/// The cyclic shift U_n: (U v)_i = v_{i+1 mod n}.
inline GF3Matrix cyclic_shift(std::size_t n) {
  GF3Matrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) u.set(i, (i + 1) % n, Trit(1));
  return u;
}

/// True iff T_n^m = I, i.e. every boundary row returns to itself after m layers.
inline bool is_admissible(std::size_t n, std::uint64_t m) {
  if (n < 2 || m < 1) throw std::invalid_argument("is_admissible: need n >= 2 and m >= 1");
  return mat_pow(transfer_matrix(n).matrix(), m) == GF3Matrix::identity(n);
}

/// Smallest m >= 1 with T_n^m = I, nullopt past the cap. Throws std::domain_error if T_n is singular
/// (this happens exactly for even n), since then no torus of width n closes.
inline std::optional<std::uint64_t> minimal_period(std::size_t n, std::uint64_t cap = kDefaultOrderCap) {
  return multiplicative_order(transfer_matrix(n).matrix(), cap);
}

/// C(n, r) mod 3 by Lucas' theorem: the product of digit binomials in base 3.
inline int binomial_mod3(std::uint64_t n, std::uint64_t r) {
  static constexpr int kSmall[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
  int acc = 1;
  while (n > 0 || r > 0) {
    const auto nd = n % 3, rd = r % 3;
    if (rd > nd) return 0;
    acc = (acc * kSmall[nd][rd]) % 3;
    n /= 3;
    r /= 3;
  }
  return acc;
}

struct PowerOfThreeReport {
  unsigned k = 0;
  std::uint64_t n = 0;
  /// Values of r in [1, n-1] with C(n, r) not divisible by 3. Empty when the argument holds.
  std::vector<std::uint64_t> nondivisible;
  /// (I + U_n)^n computed directly equals I + U_n^n = 2I, so T_n^n = -(2I) = I.
  bool binomial_expansion_collapses = false;
  bool transfer_power_is_identity = false;
  /// False when n is too large for direct matrix powers and the two flags above follow from the binomials.
  bool matrix_identities_evaluated = false;
  bool holds() const { return nondivisible.empty() && binomial_expansion_collapses && transfer_power_is_identity; }
};

/// Checks the binomial argument for n = 3^k: every interior C(n, r) vanishes mod 3, so
/// T_n^n = -(I + U_n^n) = I. The matrix identities are evaluated directly when n <= 81.
inline PowerOfThreeReport verify_power_of_three_argument(unsigned k) {
  if (k < 1 || k > 39) throw std::invalid_argument("verify_power_of_three_argument: need 1 <= k <= 39");
  PowerOfThreeReport rep;
  rep.k = k;
  rep.n = 1;
  for (unsigned i = 0; i < k; ++i) rep.n *= 3;
  for (std::uint64_t r = 1; r < rep.n; ++r)
    if (binomial_mod3(rep.n, r) != 0) rep.nondivisible.push_back(r);
  if (rep.n <= 81) {
    const std::size_t n = static_cast<std::size_t>(rep.n);
    const GF3Matrix id = GF3Matrix::identity(n);
    const GF3Matrix one_plus_u = mat_add(id, cyclic_shift(n));
    rep.binomial_expansion_collapses = mat_pow(one_plus_u, rep.n) == mat_scale(id, Trit(2));
    rep.transfer_power_is_identity = is_admissible(n, rep.n);
    rep.matrix_identities_evaluated = true;
  } else {
    // With every interior binomial vanishing the expansion collapses to I + U^n = 2I.
    rep.binomial_expansion_collapses = rep.nondivisible.empty();
    rep.transfer_power_is_identity = rep.nondivisible.empty();
  }
  return rep;
}

struct AdmissibleEntry {
  std::size_t n = 0;
  /// Smallest admissible m up to the search bound; nullopt if none.
  std::optional<std::uint64_t> minimal_m;
  bool singular = false;
  /// Multiples of minimal_m up to the search bound.
  std::vector<std::uint64_t> admissible_examples;
};

/// Minimal admissible row count for every n in [n_min, n_max], sorted by n.
inline std::vector<AdmissibleEntry> search_admissible(std::size_t n_min, std::size_t n_max, std::uint64_t m_max,
                                                      unsigned workers = 0) {
  if (n_min < 2 || n_max < n_min || m_max < 1) throw std::invalid_argument("search_admissible: bad bounds");
  std::vector<AdmissibleEntry> out(n_max - n_min + 1);
  parallel_for(out.size(), workers, [&](std::size_t i) {
    AdmissibleEntry e;
    e.n = n_min + i;
    try {
      e.minimal_m = minimal_period(e.n, m_max);
    } catch (const std::domain_error&) {
      e.singular = true;
    }
    if (e.minimal_m) {
      for (std::uint64_t m = *e.minimal_m; m <= m_max && e.admissible_examples.size() < 8; m += *e.minimal_m)
        e.admissible_examples.push_back(m);
    }
    out[i] = std::move(e);
  });
  return out;
}

inline std::vector<AdmissibleEntry> search_admissible(std::size_t n_max, std::uint64_t m_max) {
  return search_admissible(2, n_max, m_max);
}

}  // namespace hcode
