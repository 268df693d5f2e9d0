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

// Reproduction checks shared by the acceptance binary and `hcode verify-all`.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcode/admissibility.hpp"
#include "hcode/automaton.hpp"
#include "hcode/code_metrics.hpp"
#include "hcode/entanglement.hpp"
#include "hcode/gf3.hpp"
#include "hcode/lattice.hpp"
#include "hcode/report.hpp"
#include "hcode/simplex.hpp"
#include "hcode/spectra.hpp"

namespace hcode {

struct VerifyOptions {
  /// Largest k for which the 3^k x 3^k torus is included.
  unsigned k = 2;
  unsigned workers = 0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double wall_time_s = 0.0;
  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

inline constexpr int kNumCriteria = 12;
inline constexpr unsigned kMaxVerifyK = 2;

namespace detail {

inline std::size_t side(unsigned k) { return static_cast<std::size_t>(pow3(k)); }

inline std::string region_string(const Region& r) {
  std::string s = "{";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r.sites()[i]);
  return s + "}";
}

inline nlohmann::ordered_json levels_json(const std::vector<Level>& levels) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& l : levels) a.push_back({{"value", std::abs(l.value) < 1e-12 ? 0.0 : l.value}, {"multiplicity", l.multiplicity}});
  return a;
}

inline bool levels_match(const std::vector<Level>& got, const std::vector<std::pair<double, std::size_t>>& want,
                         double tol) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (std::abs(got[i].value - want[i].first) > tol || got[i].multiplicity != want[i].second) return false;
  return true;
}

inline CriterionResult admissibility_criterion(const VerifyOptions&) {
  CriterionResult r{1, "admissible tori", {}, 0.0};
  const std::vector<std::pair<std::size_t, std::uint64_t>> pairs{{3, 3}, {9, 9}, {27, 27}, {5, 40}, {7, 182}, {11, 121}};
  for (auto [n, m] : pairs) {
    const bool ok = is_admissible(n, m);
    r.checks.push_back(make_check("is_admissible(" + std::to_string(n) + "," + std::to_string(m) + ")", true, ok, ok));
  }
  for (auto [n, m] : pairs) {
    const auto p = minimal_period(n, m);
    nlohmann::ordered_json obs = p ? nlohmann::ordered_json(*p) : nlohmann::ordered_json(nullptr);
    r.checks.push_back(make_info("minimal_period(" + std::to_string(n) + ")", obs,
                                 p ? (m % *p == 0 ? "listed m is a multiple" : "listed m is not a multiple") : "none"));
  }
  return r;
}

inline CriterionResult divisibility_criterion(const VerifyOptions&) {
  CriterionResult r{2, "binomials C(3^k, r) vanish mod 3", {}, 0.0};
  for (unsigned k = 1; k <= 6; ++k) {
    const PowerOfThreeReport rep = verify_power_of_three_argument(k);
    r.checks.push_back(make_check("C(3^" + std::to_string(k) + ", r) = 0 mod 3 for 0 < r < 3^" + std::to_string(k), 0,
                                  rep.nondivisible.size(), rep.holds(), std::nullopt,
                                  rep.matrix_identities_evaluated ? "T^n = I evaluated directly" : "Lucas digits only"));
  }
  return r;
}

inline CriterionResult distance_criterion(const VerifyOptions& opt) {
  CriterionResult r{3, "minimum distance 6^k", {}, 0.0};
  for (unsigned k = 1; k <= opt.k; ++k) {
    const std::size_t n = side(k);
    const HCode code(Lattice::torus(n, n));
    const MinDistanceResult d = min_distance(code, opt.workers);
    const std::size_t want = k == 1 ? 6 : 36;
    r.checks.push_back(make_check("min_distance torus(" + std::to_string(n) + "," + std::to_string(n) + ")", want,
                                  d.value, d.exact && d.value == want, std::nullopt,
                                  "witness boundary " + trits_to_digits(d.witness_boundary)));
  }
  return r;
}

inline CriterionResult code_size_criterion(const VerifyOptions& opt) {
  CriterionResult r{4, "code size 3^n", {}, 0.0};
  const std::size_t n = side(opt.k);
  const HCode code(Lattice::torus(n, n));
  std::atomic<std::uint64_t> count{0};
  std::atomic<bool> all_neutral{true};
  const auto& tris = code.lattice().up_triangles();
  for_each_codeword(code, opt.workers, [&](std::uint64_t, std::span<const std::uint8_t> cw) {
    count.fetch_add(1, std::memory_order_relaxed);
    for (const Triangle& t : tris)
      if ((cw[t.left] + cw[t.right] + cw[t.apex]) % 3 != 0) all_neutral = false;
  });
  r.checks.push_back(make_check("codewords enumerated on torus(" + std::to_string(n) + "," + std::to_string(n) + ")",
                                pow3(n), count.load(), count.load() == pow3(n)));
  r.checks.push_back(make_check("every enumerated codeword neutral", true, all_neutral.load(), all_neutral.load()));
  // Distinct boundaries give distinct codewords: the generator has full rank.
  const std::size_t g_rank = rank(code.generator());
  r.checks.push_back(make_check("generator rank", n, g_rank, g_rank == n));
  return r;
}

inline CriterionResult charge_criterion(const VerifyOptions& opt) {
  CriterionResult r{5, "charge sectors", {}, 0.0};
  for (unsigned k = 1; k <= opt.k; ++k) {
    const std::size_t n = side(k);
    const std::string tag = "torus(" + std::to_string(n) + "," + std::to_string(n) + ")";
    const HCode code(Lattice::torus(n, n));
    const SectorCensus census = sector_census(code, opt.workers);
    const std::uint64_t each = pow3(n - 1);
    const bool even = census.counts[0] == each && census.counts[1] == each && census.counts[2] == each;
    r.checks.push_back(make_check("sector census " + tag, {each, each, each},
                                  {census.counts[0], census.counts[1], census.counts[2]}, even));
    if (k == 1) {
      r.checks.push_back(make_check("charge constant on rows and diagonals, all codewords " + tag, true,
                                    census.charge_constant, census.charge_constant));
    } else {
      std::mt19937_64 rng(0x5eed0005u + k);
      std::uniform_int_distribution<int> digit(0, 2);
      std::size_t bad = 0;
      constexpr std::size_t kSamples = 10000;
      for (std::size_t i = 0; i < kSamples; ++i) {
        TritVector b(n);
        for (auto& t : b) t = Trit(digit(rng));
        if (!charge_profile(code.codeword(b)).constant(true)) ++bad;
      }
      r.checks.push_back(make_check("charge constant on rows and diagonals, 10^4 random codewords " + tag, 0, bad,
                                    bad == 0));
    }
  }
  return r;
}

inline CriterionResult entropy_criterion(const VerifyOptions& opt) {
  CriterionResult r{6, "entanglement entropy of regions", {}, 0.0};
  for (unsigned k = 1; k <= opt.k; ++k) {
    const std::size_t n = side(k);
    const std::string tag = "torus(" + std::to_string(n) + "," + std::to_string(n) + ")";
    const Lattice l = Lattice::torus(n, n);
    const HCode code(l);

    std::size_t bad_sites = 0;
    for (SiteId s = 0; s < l.num_sites(); ++s)
      if (entropy(Region{s}, code).exact() != 1) ++bad_sites;
    r.checks.push_back(make_check("S = 1 for every single site " + tag, 0, bad_sites, bad_sites == 0));

    std::size_t bad_tris = 0;
    for (const Triangle& t : l.up_triangles())
      if (entropy(Region{t.left, t.right, t.apex}, code).exact() != 2) ++bad_tris;
    r.checks.push_back(make_check("S = 2 for every up-triangle " + tag, 0, bad_tris, bad_tris == 0));

    std::vector<Region> small;
    if (k == 1) {
      for (const Region& reg : all_regions(l))
        if (!reg.empty() && reg.size() < n) small.push_back(reg);
    } else {
      std::mt19937_64 rng(0x5eed0006u);
      std::uniform_int_distribution<std::size_t> size(1, n - 1);
      for (int i = 0; i < 500; ++i) small.push_back(random_region(l, size(rng), rng));
    }
    std::size_t bad_small = 0;
    std::string first_bad;
    for (const Region& reg : small) {
      const int s = entropy(reg, code).exact();
      if (static_cast<std::size_t>(s) != reg.size()) {
        if (!bad_small) first_bad = region_string(reg) + " has S = " + std::to_string(s);
        ++bad_small;
      }
    }
    r.checks.push_back(make_check("S = |A| for " + std::to_string(small.size()) + (k == 1 ? " (all)" : " random") +
                                      " regions with |A| < " + std::to_string(n) + " " + tag,
                                  0, bad_small, bad_small == 0, std::nullopt, first_bad));

    if (k == 1) {
      std::size_t mismatches = 0;
      double worst = 0.0;
      for (const Region& reg : all_regions(l)) {
        const double rank_s = entropy(reg, code).entropy;
        const double brute = brute_force_entropy(reg, code).entropy;
        worst = std::max(worst, std::abs(rank_s - brute));
        if (std::abs(rank_s - brute) > 1e-9) ++mismatches;
      }
      r.checks.push_back(make_check("rank entropy equals density-matrix entropy on all 512 regions " + tag, 0,
                                    mismatches, mismatches == 0, 1e-9,
                                    "largest deviation " + std::to_string(worst)));
    }
  }
  return r;
}

inline CriterionResult topological_criterion(const VerifyOptions& opt) {
  CriterionResult r{7, "topological entropy", {}, 0.0};
  for (unsigned k = 1; k <= opt.k; ++k) {
    const std::size_t n = side(k);
    const std::string tag = "torus(" + std::to_string(n) + "," + std::to_string(n) + ")";
    const Lattice l = Lattice::torus(n, n);
    const HCode code(l);
    const Triangle t = l.up_triangles().front();
    const int s_top = topological_entropy(Region{t.left}, Region{t.right}, Region{t.apex}, code);
    r.checks.push_back(make_check("S_top of one up-triangle " + tag, -1, s_top, s_top == -1));
    if (k < 2) continue;

    auto run_paths = [&](GrowthRule rule, std::size_t max_steps, std::uint64_t seed) {
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<std::size_t> steps(1, max_steps);
      std::map<int, std::size_t> histogram;
      std::string first_bad;
      for (int path = 0; path < 100; ++path) {
        const TripartiteRegions g =
            grow_tripartite({Region{t.left}, Region{t.right}, Region{t.apex}}, steps(rng), rule, l, rng);
        const int v = topological_entropy(g.a, g.b, g.c, code);
        ++histogram[v];
        if (v != -1 && first_bad.empty())
          first_bad = "A=" + region_string(g.a) + " B=" + region_string(g.b) + " C=" + region_string(g.c) +
                      " gives " + std::to_string(v);
      }
      nlohmann::ordered_json h = nlohmann::ordered_json::object();
      for (auto [v, c] : histogram) h[std::to_string(v)] = c;
      return std::make_pair(h, first_bad);
    };

    const auto [any_hist, any_bad] = run_paths(GrowthRule::kAnyFrontier, 12, 0x5eed0007u);
    const std::size_t any_ok = any_hist.contains("-1") ? any_hist["-1"].get<std::size_t>() : 0;
    r.checks.push_back(make_check("S_top = -1 on 100 grown configurations (1..12 frontier steps) " + tag, 100, any_ok,
                                  any_ok == 100, std::nullopt, any_bad));
    r.checks.push_back(make_info("S_top histogram, frontier growth", any_hist));
    const auto [keep_hist, keep_bad] = run_paths(GrowthRule::kKeepJunction, 9, 0x5eed0017u);
    r.checks.push_back(make_info("S_top histogram, growth keeping the junction (1..9 steps)", keep_hist,
                                 keep_bad.empty() ? "all -1" : keep_bad));
  }
  return r;
}

inline CriterionResult spectra_criterion(const VerifyOptions& opt) {
  CriterionResult r{8, "spectra on the 3x3 torus", {}, 0.0};
  const Lattice l = Lattice::torus(3, 3);
  const HCode code(l);
  const Operator hz = build_HZ(l);
  const Operator hx = build_HX_3x3();
  const Operator hxp = build_HX_prime_3x3();
  const Operator q = charge_operator(cycles(l).rows.front(), l.num_sites());

  for (auto [name, op] : {std::pair<const char*, const Operator*>{"H_Z", &hz}, {"H_X", &hx}, {"H'_X", &hxp}}) {
    const double d = hermiticity_defect(*op);
    r.checks.push_back(make_check(std::string("Hermitian ") + name, 0.0, d, d < 1e-12, 1e-12));
  }
  const double c1 = commutator_norm(hz, hx);
  r.checks.push_back(make_check("[H_Z, H_X] = 0", 0.0, c1, c1 < 1e-9, 1e-9));
  const double c2 = commutator_norm(q, hx);
  r.checks.push_back(make_check("[Q, H_X] = 0", 0.0, c2, c2 < 1e-9, 1e-9));
  const double c3 = commutator_norm(q, hxp);
  r.checks.push_back(make_check("[Q, H'_X] != 0", "> 1e-9", c3, c3 > 1e-9, 1e-9));

  const std::vector<std::pair<double, std::size_t>> want{{-6.0, 1}, {0.0, 6}, {3.0, 2}};
  for (int s = 0; s < 3; ++s) {
    const SectorSpectrum sp = sector_spectrum(hx, code, Trit(s));
    const bool ok = levels_match(sp.levels, want, 1e-9);
    r.checks.push_back(make_check("H_X spectrum in sector S=" + std::to_string(s),
                                  nlohmann::ordered_json::array({{{"value", -6.0}, {"multiplicity", 1}},
                                                                 {{"value", 0.0}, {"multiplicity", 6}},
                                                                 {{"value", 3.0}, {"multiplicity", 2}}}),
                                  levels_json(sp.levels), ok, 1e-9));
    const bool uni = uniform_amplitude(sp.ground_vector, 1e-9);
    r.checks.push_back(make_check("sector S=" + std::to_string(s) + " ground vector uniform", true, uni, uni, 1e-9));
  }

  const GroundSpace gs = ground_space(hz + hx);
  r.checks.push_back(make_check("H_Z + H_X ground degeneracy", 3, gs.degeneracy(), gs.degeneracy() == 3));
  bool all_uniform = true;
  double captured = 0.0;
  for (const auto& v : gs.states) {
    all_uniform = all_uniform && uniform_amplitude(v, 1e-9);
    for (int s = 0; s < 3; ++s) captured += std::norm(code_state(code, Trit(s)).dot(v));
  }
  r.checks.push_back(make_check("H_Z + H_X ground vectors uniform over codewords", true, all_uniform, all_uniform, 1e-9));
  r.checks.push_back(make_check("H_Z + H_X ground space spanned by the sector states", 3.0, captured,
                                std::abs(captured - 3.0) < 1e-9, 1e-9));
  r.checks.push_back(make_info("H_Z + H_X ground energy and gap", {{"energy", gs.energy}, {"gap", gs.gap}}));

  const GroundSpace gp = ground_space(hz + hxp);
  r.checks.push_back(make_check("H_Z + H'_X ground degeneracy", 1, gp.degeneracy(), gp.degeneracy() == 1));
  const double ov = gp.states.empty() ? 0.0 : std::norm(code_state(code).dot(gp.states.front()));
  r.checks.push_back(make_check("H_Z + H'_X ground state overlap with the uniform code state", ">= 1-1e-9", ov,
                                ov >= 1.0 - 1e-9, 1e-9));

  for (std::size_t n = 3; n <= 9; ++n) {
    const GroundSpace gb = ground_space(build_boundary_hamiltonian(n));
    bool uni = gb.degeneracy() == 3;
    for (const auto& v : gb.states) uni = uni && uniform_amplitude(v, 1e-9);
    r.checks.push_back(make_check("boundary Hamiltonian n=" + std::to_string(n) + ": 3 uniform ground states", 3,
                                  gb.degeneracy(), uni, 1e-9));
  }
  if (opt.k >= 2) r.checks.push_back(make_info("torus(9,9) dense spectra", "skipped", "Hilbert space dimension 3^81"));
  return r;
}

inline CriterionResult constraint_criterion(const VerifyOptions&) {
  CriterionResult r{9, "H_X constraint system", {}, 0.0};
  const Lattice l = Lattice::torus(3, 3);
  const ConstraintReport rep = solve_hx_constraints(l);
  r.checks.push_back(make_info("constraint matrix rank", {{"computed", rep.rank}, {"quoted", ConstraintReport::kQuotedRank}},
                               rep.rank_matches_quoted()
                                   ? "matches"
                                   : "finding: computed rank " + std::to_string(rep.rank) + " differs from the quoted " +
                                         std::to_string(ConstraintReport::kQuotedRank) + "; kernel dimension " +
                                         std::to_string(rep.kernel.size()) + " over " + std::to_string(rep.unknowns) +
                                         " unknowns"));
  const bool all_in = std::all_of(rep.hx_in_kernel.begin(), rep.hx_in_kernel.end(), [](bool b) { return b; });
  r.checks.push_back(make_check("H_X exponent strings in kernel", nlohmann::ordered_json::array({true, true, true}),
                                rep.hx_in_kernel, all_in && rep.hx_in_kernel.size() == 3));
  const bool printed_ok =
      std::all_of(rep.hx_as_printed_in_kernel.begin(), rep.hx_as_printed_in_kernel.end(), [](bool b) { return b; });
  r.checks.push_back(make_info("H_X strings as commonly quoted", rep.hx_as_printed_in_kernel,
                               printed_ok ? "all in kernel"
                                          : "finding: the transcribed third string X1 X3^-1 X4^-1 X5 X7^-1 X8 breaks "
                                            "triangle (4,5,7); X1 X3^-1 X4^-1 X5 X8^-1 X9 is used instead"));
  const GF3Matrix m = triangle_constraint_matrix(l);
  const TritVector zero(l.num_sites());
  r.checks.push_back(make_check("zero vector in kernel", true, in_kernel(m, zero), in_kernel(m, zero)));
  r.checks.push_back(make_check("H_X string family closed under translations", true, rep.hx_translation_closed,
                                rep.hx_translation_closed));
  const bool prime_ok =
      std::all_of(rep.hx_prime_rhs_in_0_pm3.begin(), rep.hx_prime_rhs_in_0_pm3.end(), [](bool b) { return b; });
  r.checks.push_back(make_check("H'_X triangle sums in {0, +-3}", true, prime_ok, prime_ok));

  // The general torus strings at k = 1 reproduce the three H_X strings up to inversion.
  std::vector<TritVector> family;
  for (const auto& e : hx_exponent_strings()) {
    family.push_back(e);
    family.push_back(scale(e, Trit(2)));
  }
  bool general_matches = true;
  for (const auto& term : build_HX_general(1)) {
    TritVector e(9);
    for (const auto& f : term.factors) e[f.site] = f.exponent;
    general_matches = general_matches && std::find(family.begin(), family.end(), e) != family.end();
  }
  r.checks.push_back(make_check("general torus strings at k=1 equal the H_X strings up to inversion", true,
                                general_matches, general_matches));
  for (unsigned k = 1; k <= 2; ++k) {
    const std::size_t sd = side(k);
    const std::size_t want = 2 * static_cast<std::size_t>(pow3(2 * k - 1));
    bool ok = true;
    for (const auto& term : build_HX_general(k)) {
      ok = ok && term.factors.size() == want;
      for (std::size_t line = 0; line < sd; ++line) {
        int row_balance = 0, col_balance = 0;
        for (const auto& f : term.factors) {
          const int sgn = f.exponent.as_spin();
          if (f.site / sd == line) row_balance += sgn;
          if (f.site % sd == line) col_balance += sgn;
        }
        ok = ok && row_balance == 0 && col_balance == 0;
      }
    }
    r.checks.push_back(make_check("general strings k=" + std::to_string(k) + ": " + std::to_string(want) +
                                      " factors, balanced X and X^-1 per row and column",
                                  true, ok, ok));
  }
  return r;
}

inline CriterionResult preparation_criterion(const VerifyOptions&) {
  CriterionResult r{10, "state preparation circuit", {}, 0.0};
  const HCode code(Lattice::torus(3, 3));
  const StateVector full = prepare_state(boundary_superposition(3));
  const double ov = std::norm(code_state(code).dot(full));
  r.checks.push_back(make_check("prepared state vs uniform code state", ">= 1-1e-12", ov, ov >= 1.0 - 1e-12, 1e-12));
  for (int s = 0; s < 3; ++s) {
    const StateVector ps = prepare_state(boundary_superposition(3, Trit(s)));
    const double o = std::norm(code_state(code, Trit(s)).dot(ps));
    r.checks.push_back(make_check("prepared sector S=" + std::to_string(s) + " state vs sector code state",
                                  ">= 1-1e-12", o, o >= 1.0 - 1e-12, 1e-12));
  }
  std::size_t bad = 0;
  for (std::uint64_t b = 0; b < 27; ++b) {
    StateVector in = StateVector::Zero(27);
    const TritVector boundary = boundary_from_index(b, 3);
    in(static_cast<Eigen::Index>(basis_index(boundary))) = 1.0;
    const StateVector out = prepare_state(in);
    const auto idx = static_cast<Eigen::Index>(basis_index(code.encode(boundary)));
    if (std::abs(out(idx) - Complex(1.0)) > 1e-12) ++bad;
  }
  r.checks.push_back(make_check("basis boundary inputs map to single codewords", 0, bad, bad == 0));
  return r;
}

inline CriterionResult ame_criterion(const VerifyOptions&) {
  CriterionResult r{11, "four-qutrit simplex state", {}, 0.0};
  const AmeReport rep = verify_ame();
  r.checks.push_back(make_check("norm", 1.0, rep.norm, std::abs(rep.norm - 1.0) < 1e-10, 1e-10));
  r.checks.push_back(make_check("2:2 marginal spectra {1/9 x 9}", 0.0, rep.two_site_deviation,
                                rep.two_site_deviation < 1e-10, 1e-10));
  r.checks.push_back(make_check("1-site marginals I/3", 0.0, rep.one_site_deviation, rep.one_site_deviation < 1e-10,
                                1e-10));
  return r;
}

inline CriterionResult property_criterion(const VerifyOptions& opt) {
  CriterionResult r{12, "property suite", {}, 0.0};
  std::mt19937_64 rng(0x5eed0012u);
  std::uniform_int_distribution<int> digit(0, 2);
  auto random_trits = [&](std::size_t len) {
    TritVector v(len);
    for (auto& t : v) t = Trit(digit(rng));
    return v;
  };

  std::size_t linearity_failures = 0;
  for (unsigned k = 1; k <= opt.k; ++k) {
    const std::size_t n = side(k);
    const HCode code(Lattice::torus(n, n));
    for (int i = 0; i < 500; ++i) {
      const TritVector u = random_trits(n), v = random_trits(n);
      if (code.encode(add(u, v)) != add(code.encode(u), code.encode(v))) ++linearity_failures;
      if (!code.codeword(u).is_neutral()) ++linearity_failures;
    }
  }
  r.checks.push_back(make_check("automaton linearity and neutrality", 0, linearity_failures, linearity_failures == 0));

  std::size_t rn_failures = 0;
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int i = 0; i < 300; ++i) {
    GF3Matrix m(dim(rng), dim(rng));
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) m.set(a, b, Trit(digit(rng)));
    const auto ker = kernel_basis(m);
    bool ok = rank(m) + ker.size() == m.cols();
    for (const auto& v : ker) ok = ok && in_kernel(m, v);
    if (!ok) ++rn_failures;
  }
  r.checks.push_back(make_check("rank-nullity on random GF(3) matrices", 0, rn_failures, rn_failures == 0));

  std::size_t sym_failures = 0, oracle_failures = 0;
  {
    const HCode small(Lattice::torus(3, 3));
    for (const Region& reg : all_regions(small.lattice()))
      if (entropy(reg, small).exact() != entropy(reg.complement(small.lattice()), small).exact()) ++sym_failures;
    for (int i = 0; i < 50; ++i) {
      std::uniform_int_distribution<std::size_t> size(1, 8);
      const Region reg = random_region(small.lattice(), size(rng), rng);
      for (int s = 0; s < 3; ++s)
        if (std::abs(entropy(reg, small, Trit(s)).entropy - brute_force_entropy(reg, small, Trit(s)).entropy) > 1e-9)
          ++oracle_failures;
    }
  }
  if (opt.k >= 2) {
    const HCode big(Lattice::torus(9, 9));
    std::uniform_int_distribution<std::size_t> size(1, 80);
    for (int i = 0; i < 100; ++i) {
      const Region reg = random_region(big.lattice(), size(rng), rng);
      if (entropy(reg, big).exact() != entropy(reg.complement(big.lattice()), big).exact()) ++sym_failures;
    }
    std::uniform_int_distribution<std::size_t> small_size(1, 5);
    for (int i = 0; i < 10; ++i) {
      const Region reg = random_region(big.lattice(), small_size(rng), rng);
      if (std::abs(entropy(reg, big).entropy - brute_force_entropy(reg, big).entropy) > 1e-9) ++oracle_failures;
    }
  }
  r.checks.push_back(make_check("S_A = S_complement", 0, sym_failures, sym_failures == 0));
  r.checks.push_back(make_check("rank entropy equals density-matrix entropy (sectors and random regions)", 0,
                                oracle_failures, oracle_failures == 0, 1e-9));

  const Eigen::Matrix3cd x = pauli_x(), z = pauli_z();
  const double zx = (z * x - omega_power(1) * x * z).cwiseAbs().maxCoeff();
  r.checks.push_back(make_check("ZX = qXZ", 0.0, zx, zx < 1e-12, 1e-12));
  const double x3 = (x * x * x - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff();
  const double z3 = (z * z * z - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff();
  const double x2 = (x * x - x.adjoint()).cwiseAbs().maxCoeff();
  r.checks.push_back(make_check("X^3 = I", 0.0, x3, x3 == 0.0, 0.0));
  r.checks.push_back(make_check("Z^3 = I", 0.0, z3, z3 < 1e-12, 1e-12));
  r.checks.push_back(make_check("X^2 = X^-1", 0.0, x2, x2 == 0.0, 0.0));
  return r;
}

}  // namespace detail

inline std::string criterion_title(int id) {
  static const char* kTitles[kNumCriteria] = {
      "admissible tori",        "binomials C(3^k, r) vanish mod 3", "minimum distance 6^k",
      "code size 3^n",          "charge sectors",                   "entanglement entropy of regions",
      "topological entropy",    "spectra on the 3x3 torus",         "H_X constraint system",
      "state preparation circuit", "four-qutrit simplex state",     "property suite"};
  if (id < 1 || id > kNumCriteria) throw std::out_of_range("criterion_title: no criterion " + std::to_string(id));
  return kTitles[id - 1];
}

/// Runs one numbered reproduction check.
inline CriterionResult run_criterion(int id, const VerifyOptions& opt = {}) {
  if (opt.k < 1 || opt.k > kMaxVerifyK)
    throw std::invalid_argument("run_criterion: k must be 1 or 2; k = 3 needs 3^27 codewords and 3^729 amplitudes");
  using Fn = CriterionResult (*)(const VerifyOptions&);
  static constexpr Fn kFns[kNumCriteria] = {
      detail::admissibility_criterion, detail::divisibility_criterion, detail::distance_criterion,
      detail::code_size_criterion,     detail::charge_criterion,       detail::entropy_criterion,
      detail::topological_criterion,   detail::spectra_criterion,      detail::constraint_criterion,
      detail::preparation_criterion,   detail::ame_criterion,          detail::property_criterion};
  if (id < 1 || id > kNumCriteria) throw std::out_of_range("run_criterion: no criterion " + std::to_string(id));
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r = kFns[id - 1](opt);
  r.title = criterion_title(id);
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace hcode
