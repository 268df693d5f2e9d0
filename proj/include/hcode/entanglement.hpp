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

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcode/automaton.hpp"
#include "hcode/gf3.hpp"
#include "hcode/lattice.hpp"

namespace hcode {

enum class EntropyMethod { kRank, kBruteForce };

inline const char* to_string(EntropyMethod m) { return m == EntropyMethod::kRank ? "rank" : "brute-force"; }

/// Entanglement entropy of a region, in base-3 units.
struct EntropyResult {
  Region region;
  double entropy = 0.0;
  EntropyMethod method = EntropyMethod::kRank;
  /// Set when the region was empty; the entropy is then 0 by convention.
  bool empty_region = false;

  /// The rank method always yields an integer.
  int exact() const { return static_cast<int>(std::lround(entropy)); }
};

/// Generator rows of the state being analysed: the whole code, or the sum-zero subcode whose
/// translates are the charge sectors. A sector state is a translate of that subcode by a fixed
/// product state, which leaves every entropy unchanged.
inline GF3Matrix state_generator(const HCode& code, std::optional<Trit> sector = std::nullopt) {
  if (!sector) return code.generator();
  const GF3Matrix& g = code.generator();
  const std::size_t n = g.rows();
  if (n < 2) return GF3Matrix(0, g.cols());
  GF3Matrix out(n - 1, g.cols());
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t s = 0; s < g.cols(); ++s) out.set(i, s, g.at(i, s) - g.at(n - 1, s));
  return out;
}

/// S_A = k - dim C_A - dim C_Ac, where k is the dimension of the code state and C_X is the subcode
/// supported inside X. With dim C_X = k - rank(G restricted to the complement of X) this is
/// rank(G_A) + rank(G_Ac) - k. The reduced density matrix is flat, so every Renyi entropy agrees.
inline EntropyResult entropy(const Region& region, const HCode& code, std::optional<Trit> sector = std::nullopt) {
  const Lattice& l = code.lattice();
  if (!region.fits(l)) throw std::out_of_range("entropy: region outside lattice");
  EntropyResult r;
  r.region = region;
  r.method = EntropyMethod::kRank;
  if (region.empty()) {
    r.empty_region = true;
    return r;
  }
  const GF3Matrix g = state_generator(code, sector);
  const std::size_t k = rank(g);
  const Region comp = region.complement(l);
  const std::size_t ra = rank(g.select_columns(region.sites()));
  const std::size_t rc = rank(g.select_columns(comp.sites()));
  r.entropy = static_cast<double>(ra + rc - k);
  return r;
}

inline constexpr std::size_t kBruteForceMaxBoundary = 9;
inline constexpr std::size_t kBruteForceMaxReducedDim = 2187;

/// Von Neumann entropy from an explicit reduced density matrix of the uniform superposition over
/// all codewords (or one charge sector). rho is assembled on the distinct patterns the codewords
/// take on one side of the cut, grouping codewords by their pattern on the other side.
inline EntropyResult brute_force_entropy(const Region& region, const HCode& code,
                                         std::optional<Trit> sector = std::nullopt) {
  const Lattice& l = code.lattice();
  if (!region.fits(l)) throw std::out_of_range("brute_force_entropy: region outside lattice");
  const std::size_t n = code.dimension();
  if (n > kBruteForceMaxBoundary) {
    throw std::length_error("brute_force_entropy: boundary length " + std::to_string(n) + " exceeds guard of " +
                            std::to_string(kBruteForceMaxBoundary));
  }
  EntropyResult r;
  r.region = region;
  r.method = EntropyMethod::kBruteForce;
  if (region.empty()) {
    r.empty_region = true;
    return r;
  }
  const Region comp = region.complement(l);

  std::vector<TritVector> words;
  for (std::uint64_t idx = 0; idx < code.size(); ++idx) {
    TritVector b = boundary_from_index(idx, n);
    Trit s;
    for (Trit t : b) s += t;
    if (sector && s != *sector) continue;
    words.push_back(code.encode(b));
  }
  auto key = [](const TritVector& w, const std::vector<SiteId>& sites) {
    std::string k(sites.size(), '0');
    for (std::size_t i = 0; i < sites.size(); ++i) k[i] = static_cast<char>('0' + w[sites[i]].value());
    return k;
  };
  auto distinct = [&](const std::vector<SiteId>& sites) {
    std::unordered_map<std::string, std::size_t> ids;
    for (const auto& w : words) ids.try_emplace(key(w, sites), ids.size());
    return ids;
  };

  auto ids_a = distinct(region.sites());
  auto ids_c = distinct(comp.sites());
  const bool keep_region = ids_a.size() <= ids_c.size();
  const auto& kept_sites = keep_region ? region.sites() : comp.sites();
  const auto& traced_sites = keep_region ? comp.sites() : region.sites();
  const auto& kept_ids = keep_region ? ids_a : ids_c;
  const std::size_t dim = kept_ids.size();
  if (dim > kBruteForceMaxReducedDim) {
    throw std::length_error("brute_force_entropy: reduced density matrix dimension " + std::to_string(dim) +
                            " exceeds guard of " + std::to_string(kBruteForceMaxReducedDim));
  }

  // Codewords sharing the traced-out pattern interfere; each group contributes |v><v|.
  std::unordered_map<std::string, std::vector<std::size_t>> groups;
  for (const auto& w : words) groups[key(w, traced_sites)].push_back(kept_ids.at(key(w, kept_sites)));
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& [_, members] : groups)
    for (std::size_t a : members)
      for (std::size_t b : members) rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) += 1.0;
  rho /= static_cast<double>(words.size());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(rho, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double p = es.eigenvalues()(i);
    if (p > 1e-14) s -= p * std::log(p);
  }
  r.entropy = s / std::log(3.0);
  return r;
}

/// Kitaev-Preskill combination S_ABC - S_AB - S_AC - S_BC + S_A + S_B + S_C, evaluated exactly.
inline int topological_entropy(const Region& a, const Region& b, const Region& c, const HCode& code) {
  if (a.intersects(b) || a.intersects(c) || b.intersects(c))
    throw std::invalid_argument("topological_entropy: regions must be pairwise disjoint");
  auto s = [&](const Region& x) { return entropy(x, code).exact(); };
  return s(a | b | c) - s(a | b) - s(a | c) - s(b | c) + s(a) + s(b) + s(c);
}

enum class GrowthRule {
  /// Any site sharing an up-triangle with the grown region.
  kAnyFrontier,
  /// As kAnyFrontier, but the new site may not share an up-triangle with the other two regions, so
  /// the three regions keep touching only where they started.
  kKeepJunction,
};

struct TripartiteRegions {
  Region a, b, c;
};

/// Grows one of A, B, C by one site per step, choosing the region and the site uniformly at random.
/// Steps with no legal site for the chosen region retry another region; growth stops early when no
/// region can grow.
template <typename Rng>
TripartiteRegions grow_tripartite(TripartiteRegions start, std::size_t steps, GrowthRule rule, const Lattice& l,
                                  Rng& rng) {
  std::array<Region*, 3> parts{&start.a, &start.b, &start.c};
  for (std::size_t step = 0; step < steps; ++step) {
    std::array<std::size_t, 3> order{0, 1, 2};
    std::shuffle(order.begin(), order.end(), rng);
    bool grown = false;
    for (std::size_t j : order) {
      const Region used = start.a | start.b | start.c;
      Region others;
      for (std::size_t o = 0; o < 3; ++o)
        if (o != j) others = others | *parts[o];
      std::vector<SiteId> candidates;
      for (const Region& g : grow_region(*parts[j], l)) {
        SiteId added = 0;
        for (SiteId s : g.sites())
          if (!parts[j]->contains(s)) added = s;
        if (used.contains(added)) continue;
        if (rule == GrowthRule::kKeepJunction) {
          const auto nb = triangle_neighbors(added, l);
          if (std::any_of(nb.begin(), nb.end(), [&](SiteId x) { return others.contains(x); })) continue;
        }
        candidates.push_back(added);
      }
      if (candidates.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      *parts[j] = parts[j]->with(candidates[pick(rng)]);
      grown = true;
      break;
    }
    if (!grown) break;
  }
  return start;
}

struct AreaLawReport {
  std::size_t regions_checked = 0;
  int max_entropy = 0;
  /// Maximum possible entropy, the boundary length.
  std::size_t bound = 0;
  std::size_t violations = 0;
  /// Regions whose entropy exceeded min(|A|, n); always empty for a valid code.
  std::vector<Region> violating;
  bool holds() const { return violations == 0; }
};

inline AreaLawReport area_law_check(const HCode& code, const std::vector<Region>& regions) {
  AreaLawReport rep;
  rep.bound = code.dimension();
  for (const Region& r : regions) {
    const int s = entropy(r, code).exact();
    ++rep.regions_checked;
    rep.max_entropy = std::max(rep.max_entropy, s);
    if (static_cast<std::size_t>(s) > std::min(r.size(), rep.bound)) {
      ++rep.violations;
      rep.violating.push_back(r);
    }
  }
  return rep;
}

/// Every subset of the lattice sites, indexed by bitmask. Only for lattices with at most 20 sites.
inline std::vector<Region> all_regions(const Lattice& l) {
  const std::size_t n = l.num_sites();
  if (n > 20) throw std::length_error("all_regions: too many sites to enumerate subsets");
  std::vector<Region> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<SiteId> sites;
    for (SiteId s = 0; s < n; ++s)
      if (mask & (1u << s)) sites.push_back(s);
    out.emplace_back(std::move(sites));
  }
  return out;
}

/// Uniformly random region with the given number of sites.
template <typename Rng>
Region random_region(const Lattice& l, std::size_t size, Rng& rng) {
  std::vector<SiteId> all(l.num_sites());
  for (SiteId s = 0; s < all.size(); ++s) all[s] = s;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(size, all.size()));
  return Region(std::move(all));
}

}  // namespace hcode
