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

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <string>
#include <utility>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "hcode/automaton.hpp"
#include "hcode/gf3.hpp"
#include "hcode/lattice.hpp"
#include "hcode/parallel.hpp"

namespace hcode {

/// Boundary length above which exhaustive enumeration of 3^n codewords is refused.
inline constexpr std::size_t kMaxEnumerableBoundary = 16;

inline std::size_t hamming_distance(const SpinConfig& a, const SpinConfig& b) {
  if (!(a.lattice() == b.lattice())) throw std::invalid_argument("hamming_distance: configurations on different lattices");
  std::size_t d = 0;
  for (SiteId s = 0; s < a.values().size(); ++s) d += a[s] != b[s] ? 1 : 0;
  return d;
}

/// Enumerates codewords in base-3 boundary order over index ranges.
///
/// Consecutive boundaries differ by a carry chain, so each step adds a prefix sum of generator
/// rows instead of re-encoding: incrementing digit j while digits 0..j-1 wrap from 2 to 0 adds
/// g_0 + ... + g_j (mod 3).
class CodewordEnumerator {
 public:
  explicit CodewordEnumerator(const HCode& code) : code_(&code) {
    const std::size_t n = code.dimension();
    if (n > kMaxEnumerableBoundary) {
      throw std::length_error("CodewordEnumerator: 3^" + std::to_string(n) +
                              " codewords exceeds the enumeration guard; use sampled_min_weight instead");
    }
    const std::size_t len = code.length();
    prefix_.assign(n, std::vector<std::uint8_t>(len, 0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < len; ++s)
        prefix_[j][s] =
            static_cast<std::uint8_t>(((j ? prefix_[j - 1][s] : 0) + code.generator().at(j, s).value()) % 3);
  }

  std::uint64_t total() const { return code_->size(); }

  /// visit(boundary_index, codeword) for every index in [begin, end). Entries are bytes in {0,1,2}.
  template <typename Visit>
  void run(std::uint64_t begin, std::uint64_t end, Visit&& visit) const {
    if (begin >= end) return;
    const std::size_t n = code_->dimension();
    const std::size_t len = code_->length();
    TritVector start = code_->encode(boundary_from_index(begin, n));
    std::vector<std::uint8_t> cw(len);
    for (std::size_t s = 0; s < len; ++s) cw[s] = start[s].value();
    std::vector<std::uint8_t> digits(n + 1, 0);
    std::uint64_t b = begin;
    for (std::size_t i = 0; i < n; ++i, b /= 3) digits[i] = static_cast<std::uint8_t>(b % 3);
    for (std::uint64_t idx = begin;;) {
      visit(idx, std::span<const std::uint8_t>(cw));
      if (++idx >= end) break;
      std::size_t j = 0;
      while (digits[j] == 2) digits[j++] = 0;
      ++digits[j];
      const auto& p = prefix_[j];
      for (std::size_t s = 0; s < len; ++s) {
        const auto v = static_cast<std::uint8_t>(cw[s] + p[s]);
        cw[s] = v >= 3 ? static_cast<std::uint8_t>(v - 3) : v;
      }
    }
  }

 private:
  const HCode* code_;
  std::vector<std::vector<std::uint8_t>> prefix_;
};

/// Visits every codeword; visit(boundary_index, codeword) may be called concurrently from several workers.
template <typename Visit>
void for_each_codeword(const HCode& code, unsigned workers, Visit&& visit) {
  const CodewordEnumerator en(code);
  parallel_chunks(static_cast<std::size_t>(en.total()), workers,
                  [&](std::size_t begin, std::size_t end) { en.run(begin, end, visit); });
}

struct MinDistanceResult {
  std::size_t value = 0;
  /// False for sampled estimates, which are only upper bounds.
  bool exact = true;
  TritVector witness_boundary;
  std::uint64_t codewords_examined = 0;
};

/// Minimum Hamming distance of the code, computed as the minimum weight over all nonzero codewords.
/// Valid because the code is linear.
inline MinDistanceResult min_distance(const HCode& code, unsigned workers = 0) {
  const std::size_t n = code.dimension();
  if (n > kMaxEnumerableBoundary) {
    throw std::length_error("min_distance: boundary length " + std::to_string(n) +
                            " is beyond exhaustive reach; use sampled_min_weight for an upper bound");
  }
  const CodewordEnumerator en(code);
  std::mutex mu;
  std::vector<std::pair<std::size_t, std::uint64_t>> chunk_best;
  parallel_chunks(static_cast<std::size_t>(en.total()), workers, [&](std::size_t begin, std::size_t end) {
    std::pair<std::size_t, std::uint64_t> local{std::numeric_limits<std::size_t>::max(), 0};
    en.run(begin, end, [&](std::uint64_t idx, std::span<const std::uint8_t> cw) {
      if (idx == 0) return;
      std::size_t w = 0;
      for (std::uint8_t v : cw) w += v != 0;
      if (w < local.first) local = {w, idx};
    });
    std::lock_guard lock(mu);
    chunk_best.push_back(local);
  });
  // Smallest weight, ties broken by the smallest boundary index, independent of scheduling.
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint64_t best_idx = 0;
  for (const auto& [w, idx] : chunk_best) {
    if (w < best || (w == best && idx < best_idx)) {
      best = w;
      best_idx = idx;
    }
  }
  MinDistanceResult r;
  r.value = best;
  r.exact = true;
  r.witness_boundary = boundary_from_index(best_idx, n);
  r.codewords_examined = code.size();
  return r;
}

/// Upper bound on the minimum distance from the unit boundaries plus `samples` random nonzero boundaries.
inline MinDistanceResult sampled_min_weight(const HCode& code, std::uint64_t samples, std::uint64_t seed = 1) {
  const std::size_t n = code.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> digit(0, 2);
  MinDistanceResult r;
  r.exact = false;
  r.value = std::numeric_limits<std::size_t>::max();
  auto consider = [&](const TritVector& b) {
    if (weight(b) == 0) return;
    std::size_t w = weight(code.encode(b));
    ++r.codewords_examined;
    if (w < r.value) {
      r.value = w;
      r.witness_boundary = b;
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    TritVector b(n);
    b[i] = Trit(1);
    consider(b);
  }
  for (std::uint64_t k = 0; k < samples; ++k) {
    TritVector b(n);
    for (auto& t : b) t = Trit(digit(rng));
    consider(b);
  }
  return r;
}

/// Charge sector label S in {0,1,2}: the sum of trits around a cycle, mod 3.
struct ChargeSector {
  Trit S;
  /// Phase of the cycle operator Q = exp(2 pi i S / 3).
  std::complex<double> phase() const {
    const double angle = 2.0 * std::numbers::pi * S.as_int() / 3.0;
    return {std::cos(angle), std::sin(angle)};
  }
  bool operator==(const ChargeSector&) const = default;
};

inline ChargeSector cycle_charge(const SpinConfig& config, std::span<const SiteId> cycle) {
  Trit sum;
  for (SiteId s : cycle) {
    if (s >= config.values().size()) throw std::out_of_range("cycle_charge: site outside lattice");
    sum += config[s];
  }
  return {sum};
}

struct ChargeProfile {
  std::vector<ChargeSector> rows;
  std::vector<ChargeSector> diagonals;
  std::vector<ChargeSector> sheared_diagonals;

  /// Same charge on every row and every vertical cycle (and sheared cycle when requested).
  bool constant(bool include_sheared = true) const {
    if (rows.empty()) return true;
    const ChargeSector ref = rows.front();
    auto same = [&](const std::vector<ChargeSector>& v) {
      return std::all_of(v.begin(), v.end(), [&](ChargeSector c) { return c == ref; });
    };
    return same(rows) && same(diagonals) && (!include_sheared || same(sheared_diagonals));
  }
};

inline ChargeProfile charge_profile(const SpinConfig& config) {
  const Cycles cyc = cycles(config.lattice());
  ChargeProfile p;
  for (const auto& c : cyc.rows) p.rows.push_back(cycle_charge(config, c));
  for (const auto& c : cyc.diagonals) p.diagonals.push_back(cycle_charge(config, c));
  for (const auto& c : cyc.sheared_diagonals) p.sheared_diagonals.push_back(cycle_charge(config, c));
  return p;
}

/// Sector of a codeword read off its boundary row.
inline ChargeSector boundary_sector(std::span<const Trit> boundary) {
  Trit s;
  for (Trit t : boundary) s += t;
  return {s};
}

struct SectorCensus {
  std::array<std::uint64_t, 3> counts{};
  /// Whether every enumerated codeword had one charge on all rows and vertical cycles (torus only).
  bool charge_constant = true;
  std::uint64_t total() const { return counts[0] + counts[1] + counts[2]; }
};

/// Counts codewords per sector, the sector being the row-0 charge. On a torus every enumerated
/// codeword is also checked for charge constancy over rows and both diagonal families.
inline SectorCensus sector_census(const HCode& code, unsigned workers = 0) {
  const Lattice& l = code.lattice();
  std::vector<std::vector<SiteId>> all_cycles;
  if (l.is_torus()) {
    Cycles c = cycles(l);
    all_cycles = c.rows;
    all_cycles.insert(all_cycles.end(), c.diagonals.begin(), c.diagonals.end());
    all_cycles.insert(all_cycles.end(), c.sheared_diagonals.begin(), c.sheared_diagonals.end());
  }
  const std::size_t n = l.n();
  const CodewordEnumerator en(code);
  std::mutex mu;
  SectorCensus census;
  parallel_chunks(static_cast<std::size_t>(en.total()), workers, [&](std::size_t begin, std::size_t end) {
    SectorCensus local;
    en.run(begin, end, [&](std::uint64_t, std::span<const std::uint8_t> cw) {
      unsigned s0 = 0;
      for (std::size_t c = 0; c < n; ++c) s0 += cw[c];
      s0 %= 3;
      ++local.counts[s0];
      if (!local.charge_constant) return;
      for (const auto& cyc : all_cycles) {
        unsigned s = 0;
        for (SiteId x : cyc) s += cw[x];
        if (s % 3 != s0) {
          local.charge_constant = false;
          break;
        }
      }
    });
    std::lock_guard lock(mu);
    for (int i = 0; i < 3; ++i) census.counts[i] += local.counts[i];
    census.charge_constant = census.charge_constant && local.charge_constant;
  });
  return census;
}

}  // namespace hcode
