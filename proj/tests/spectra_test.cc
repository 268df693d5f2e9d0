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

#include "hcode/spectra.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <map>
#include <random>

#include "hcode/code_metrics.hpp"

using namespace hcode;

namespace {

/// Dense operator from Kronecker products of 3x3 matrices, site 0 leftmost.
Eigen::MatrixXcd kron_string(const std::vector<Eigen::Matrix3cd>& per_site) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto& m : per_site) acc = Eigen::kroneckerProduct(acc, m).eval();
  return acc;
}

Eigen::Matrix3cd mpow(const Eigen::Matrix3cd& m, int e) {
  Eigen::Matrix3cd r = Eigen::Matrix3cd::Identity();
  for (int i = 0; i < ((e % 3) + 3) % 3; ++i) r = r * m;
  return r;
}

/// Checks h against -sum_{n=+-1} prod X^{n e} column by column: X^e maps |s> to |s+e>, so every
/// string moves a basis configuration to one other configuration.
void expect_x_hamiltonian(const Operator& h, const std::vector<TritVector>& strings) {
  const std::size_t n = strings.front().size();
  std::size_t nonzeros = 0;
  for (std::uint64_t col = 0; col < pow3(n); ++col) {
    const TritVector cfg = basis_config(col, n);
    std::map<std::uint64_t, Complex> want;
    for (const auto& e : strings)
      for (int sign : {1, -1}) {
        TritVector out = cfg;
        for (std::size_t s = 0; s < n; ++s) out[s] += Trit(sign * e[s].as_int());
        want[basis_index(out)] -= 1.0;
      }
    for (const auto& [row, v] : want) {
      ASSERT_LT(std::abs(h.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) - v), 1e-12);
      nonzeros += std::abs(v) > 0;
    }
  }
  Operator pruned = h;
  pruned.prune(1e-14, 1.0);
  EXPECT_EQ(static_cast<std::size_t>(pruned.nonZeros()), nonzeros);
}

std::size_t count_nonzero_triangles(const Lattice& l, std::span<const Trit> cfg) {
  std::size_t k = 0;
  for (const Triangle& t : l.up_triangles()) k += !(cfg[t.left] + cfg[t.right] + cfg[t.apex]).is_zero();
  return k;
}

}  // namespace

TEST(pauli, clock_and_shift_algebra) {
  const Eigen::Matrix3cd x = pauli_x(), z = pauli_z();
  EXPECT_LT((z * x - omega_power(1) * x * z).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(x * x * x, Eigen::Matrix3cd::Identity());
  EXPECT_LT((z * z * z - Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(x * x, Eigen::Matrix3cd(x.adjoint()));
  // X|s> = |s+1>.
  for (int s = 0; s < 3; ++s) EXPECT_EQ(x((s + 1) % 3, s), Complex(1.0));
}

TEST(to_operator, matches_kronecker_oracle) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    OperatorSpec op;
    op.coefficient = Complex(0.5, -0.25);
    std::vector<Eigen::Matrix3cd> per_site(4, Eigen::Matrix3cd::Identity());
    // Factors on distinct sites commute, so the product order does not matter for the oracle.
    for (SiteId s = 0; s < 4; ++s) {
      const int ex = static_cast<int>(rng() % 3), ez = static_cast<int>(rng() % 3);
      op.factors.push_back({s, PauliGen::kX, Trit(ex)});
      op.factors.push_back({s, PauliGen::kZ, Trit(ez)});
      per_site[s] = mpow(pauli_x(), ex) * mpow(pauli_z(), ez);
    }
    op.normalize();
    for (const auto& f : op.factors) ASSERT_FALSE(f.exponent.is_zero());
    const Eigen::MatrixXcd got = Eigen::MatrixXcd(to_operator({op}, 4));
    ASSERT_LT((got - op.coefficient * kron_string(per_site)).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_THROW(to_operator({}, 11), std::length_error);
  OperatorSpec bad;
  bad.factors.push_back({5, PauliGen::kX, Trit(1)});
  EXPECT_THROW(to_operator({bad}, 3), std::out_of_range);
}

TEST(build_HZ, diagonal_frustration_count_exhaustive) {
  const Lattice l = Lattice::torus(3, 3);
  const Operator hz = build_HZ(l);
  const Operator dual = to_operator(hz_terms(l), 9);
  EXPECT_LT(max_abs(Operator(hz - dual)), 1e-12);
  for (std::uint64_t idx = 0; idx < pow3(9); ++idx) {
    const TritVector cfg = basis_config(idx, 9);
    ASSERT_NEAR(hz.coeff(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)).real(),
                3.0 * static_cast<double>(count_nonzero_triangles(l, cfg)), 1e-12);
  }
  const HCode code(l);
  for (std::uint64_t b = 0; b < 27; ++b) {
    const auto idx = static_cast<Eigen::Index>(basis_index(code.encode(boundary_from_index(b, 3))));
    EXPECT_EQ(hz.coeff(idx, idx), Complex(0.0));
  }
  // Flip one site of the zero configuration: every triangle containing it is frustrated.
  TritVector one(9);
  one[4] = Trit(1);
  const auto idx = static_cast<Eigen::Index>(basis_index(one));
  EXPECT_NEAR(hz.coeff(idx, idx).real(), 9.0, 1e-12);
  EXPECT_LT(hermiticity_defect(hz), 1e-12);
}

TEST(build_HX, matches_shift_oracle) {
  expect_x_hamiltonian(build_HX_3x3(), hx_exponent_strings());
  EXPECT_EQ(symmetric_x_terms(hx_exponent_strings()).size(), 6u);
  expect_x_hamiltonian(build_HX_prime_3x3(), hx_prime_exponent_strings());
}

TEST(build_HX, strings_are_codewords) {
  // The commuting strings are exactly codewords: boundaries (1,2,0), (0,1,2), (1,0,2).
  const HCode code(Lattice::torus(3, 3));
  const auto hx = hx_exponent_strings();
  EXPECT_EQ(hx[0], code.encode(trits_from_digits("120")));
  EXPECT_EQ(hx[1], code.encode(trits_from_digits("012")));
  EXPECT_EQ(hx[2], code.encode(trits_from_digits("102")));
  const auto printed = hx_exponent_strings_as_printed();
  EXPECT_EQ(printed[0], hx[0]);
  EXPECT_EQ(printed[1], hx[1]);
  EXPECT_NE(printed[2], hx[2]);
  EXPECT_FALSE(SpinConfig(code.lattice(), printed[2]).is_neutral());
  const auto prime = hx_prime_exponent_strings();
  EXPECT_EQ(prime[0], code.encode(trits_from_digits("110")));
  EXPECT_EQ(prime[1], code.encode(trits_from_digits("011")));
  EXPECT_EQ(prime[2], code.encode(trits_from_digits("101")));
}

TEST(commutation, hx_with_hz_and_charge) {
  const Lattice l = Lattice::torus(3, 3);
  const Operator hz = build_HZ(l);
  const Operator hx = build_HX_3x3();
  const Operator hxp = build_HX_prime_3x3();
  const Cycles cyc = cycles(l);
  EXPECT_TRUE(commutes(hz, hx));
  EXPECT_TRUE(commutes(hz, hxp));
  for (const auto& c : cyc.rows) {
    EXPECT_TRUE(commutes(charge_operator(c, 9), hx));
    EXPECT_FALSE(commutes(charge_operator(c, 9), hxp));
  }
  const Operator printed = to_operator(symmetric_x_terms(hx_exponent_strings_as_printed()), 9);
  EXPECT_FALSE(commutes(hz, printed));
  EXPECT_THROW(commutator_norm(hz, build_boundary_hamiltonian(3)), std::invalid_argument);
}

TEST(commutation, general_strings_at_k1) {
  const Lattice l = Lattice::torus(3, 3);
  const Operator h = to_operator(build_HX_general(1), 9);
  EXPECT_TRUE(commutes(build_HZ(l), h));
  EXPECT_TRUE(commutes(charge_operator(cycles(l).rows[0], 9), h));
  EXPECT_LT(max_abs(Operator(h - build_HX_3x3())), 1e-12);
  EXPECT_THROW(build_HX_general(3), std::invalid_argument);
}

TEST(hermiticity, all_hamiltonians) {
  const Lattice l = Lattice::torus(3, 3);
  EXPECT_LT(hermiticity_defect(build_HX_3x3()), 1e-12);
  EXPECT_LT(hermiticity_defect(build_HX_prime_3x3()), 1e-12);
  EXPECT_LT(hermiticity_defect(to_operator(hz_terms(l), 9)), 1e-12);
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_LT(hermiticity_defect(build_boundary_hamiltonian(n)), 1e-12);
}

TEST(sector_spectrum, hx_levels_in_every_sector) {
  const HCode code(Lattice::torus(3, 3));
  const Operator hx = build_HX_3x3();
  for (int s = 0; s < 3; ++s) {
    const SectorSpectrum sp = sector_spectrum(hx, code, Trit(s));
    ASSERT_EQ(sp.levels.size(), 3u);
    EXPECT_NEAR(sp.levels[0].value, -6.0, 1e-9);
    EXPECT_EQ(sp.levels[0].multiplicity, 1u);
    EXPECT_NEAR(sp.levels[1].value, 0.0, 1e-9);
    EXPECT_EQ(sp.levels[1].multiplicity, 6u);
    EXPECT_NEAR(sp.levels[2].value, 3.0, 1e-9);
    EXPECT_EQ(sp.levels[2].multiplicity, 2u);
    EXPECT_TRUE(uniform_amplitude(sp.ground_vector));
    EXPECT_NEAR(sp.ground_vector(0).real(), 1.0 / 3.0, 1e-9);
  }
}

TEST(sector_spectrum, leak_is_reported) {
  const HCode code(Lattice::torus(3, 3));
  try {
    sector_spectrum(build_HX_prime_3x3(), code, Trit(0));
    FAIL() << "expected SubspaceLeakError";
  } catch (const SubspaceLeakError& e) {
    EXPECT_GT(e.leak(), 1.0);
  }
}

TEST(ground_space, hz_plus_hx_is_threefold) {
  const Lattice l = Lattice::torus(3, 3);
  const HCode code(l);
  const GroundSpace gs = ground_space(build_HZ(l) + build_HX_3x3());
  ASSERT_EQ(gs.degeneracy(), 3u);
  EXPECT_NEAR(gs.energy, -6.0, 1e-9);
  EXPECT_NEAR(gs.gap, 6.0, 1e-9);
  for (const auto& v : gs.states) {
    EXPECT_TRUE(uniform_amplitude(v));
    double total = 0.0;
    for (int s = 0; s < 3; ++s) total += std::norm(code_state(code, Trit(s)).dot(v));
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(ground_space, hz_plus_hx_prime_is_unique) {
  const Lattice l = Lattice::torus(3, 3);
  const HCode code(l);
  const GroundSpace gs = ground_space(build_HZ(l) + build_HX_prime_3x3());
  ASSERT_EQ(gs.degeneracy(), 1u);
  EXPECT_GE(std::norm(code_state(code).dot(gs.states[0])), 1.0 - 1e-9);
  EXPECT_TRUE(uniform_amplitude(gs.states[0]));
}

TEST(ground_space, dense_and_lanczos_agree) {
  // n = 6 blocks (243) go dense, n = 7 blocks (729) go through Lanczos; both must report -3n.
  for (std::size_t n : {3u, 6u, 7u, 9u}) {
    const GroundSpace gs = ground_space(build_boundary_hamiltonian(n));
    EXPECT_EQ(gs.degeneracy(), 3u) << n;
    EXPECT_NEAR(gs.energy, -3.0 * static_cast<double>(n), 1e-8) << n;
    EXPECT_NEAR(gs.gap, 6.0, 1e-6) << n;
    for (std::size_t s = 0; s < 3; ++s) {
      EXPECT_TRUE(uniform_amplitude(gs.states[s], 1e-8)) << n;
    }
    // One state per sector: overlaps with the sector superpositions form a permutation.
    double captured = 0.0;
    for (int sec = 0; sec < 3; ++sec)
      for (const auto& v : gs.states) captured += std::norm(boundary_superposition(n, Trit(sec)).dot(v));
    EXPECT_NEAR(captured, 3.0, 1e-8) << n;
  }
}

TEST(ground_space, rejects_non_hermitian) {
  Operator a(3, 3);
  a.insert(0, 1) = 1.0;
  EXPECT_THROW(ground_space(a), std::invalid_argument);
}

TEST(group_levels, merges_within_tolerance) {
  const auto levels = group_levels({3.0, -6.0, 0.0, 1e-12, 3.0 + 1e-12}, 1e-9);
  ASSERT_EQ(levels.size(), 3u);
  EXPECT_EQ(levels[0].multiplicity, 1u);
  EXPECT_EQ(levels[1].multiplicity, 2u);
  EXPECT_EQ(levels[2].multiplicity, 2u);
}

TEST(prepare_state, uniform_and_sector_inputs) {
  const HCode code(Lattice::torus(3, 3));
  EXPECT_GE(std::norm(code_state(code).dot(prepare_state(boundary_superposition(3)))), 1.0 - 1e-12);
  for (int s = 0; s < 3; ++s) {
    const StateVector ps = prepare_state(boundary_superposition(3, Trit(s)));
    EXPECT_GE(std::norm(code_state(code, Trit(s)).dot(ps)), 1.0 - 1e-12);
    EXPECT_NEAR(ps.norm(), 1.0, 1e-12);
  }
  EXPECT_THROW(prepare_state(boundary_superposition(4), 4), std::invalid_argument);
  EXPECT_THROW(prepare_state(StateVector::Zero(9)), std::invalid_argument);
}

TEST(prepare_state, basis_inputs_give_codewords) {
  const HCode code(Lattice::torus(3, 3));
  for (std::uint64_t b = 0; b < 27; ++b) {
    const TritVector boundary = boundary_from_index(b, 3);
    StateVector in = StateVector::Zero(27);
    in(static_cast<Eigen::Index>(basis_index(boundary))) = 1.0;
    const StateVector out = prepare_state(in);
    const auto idx = static_cast<Eigen::Index>(basis_index(code.encode(boundary)));
    ASSERT_NEAR(std::abs(out(idx)), 1.0, 1e-12);
  }
}

TEST(controlled_subtract, gate_table) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      StateVector psi = StateVector::Zero(9);
      psi(a * 3 + b) = 1.0;
      apply_controlled_subtract(psi, 2, 0, 1);
      EXPECT_EQ(psi(a * 3 + ((b - a + 3) % 3)), Complex(1.0));
    }
  StateVector psi = StateVector::Zero(9);
  EXPECT_THROW(apply_controlled_subtract(psi, 2, 1, 1), std::invalid_argument);
}

TEST(solve_hx_constraints, three_by_three) {
  const Lattice l = Lattice::torus(3, 3);
  const ConstraintReport rep = solve_hx_constraints(l);
  EXPECT_EQ(rep.equations, 9u);
  EXPECT_EQ(rep.unknowns, 9u);
  // The solution space is exactly the code: dimension 3, so rank 6.
  EXPECT_EQ(rep.rank, 6u);
  EXPECT_EQ(rep.kernel.size(), 3u);
  EXPECT_FALSE(rep.rank_matches_quoted());
  EXPECT_EQ(rep.hx_in_kernel, (std::vector<bool>{true, true, true}));
  EXPECT_EQ(rep.hx_as_printed_in_kernel, (std::vector<bool>{true, true, false}));
  EXPECT_TRUE(rep.hx_translation_closed);
  EXPECT_EQ(rep.hx_prime_rhs_in_0_pm3, (std::vector<bool>{true, true, true}));
  const GF3Matrix m = triangle_constraint_matrix(l);
  EXPECT_TRUE(in_kernel(m, TritVector(9)));
  EXPECT_EQ(rank(GF3Matrix::from_rows(rep.kernel)), rank(HCode(l).generator()));
  EXPECT_THROW(solve_hx_constraints(Lattice::patch(3, 3)), std::invalid_argument);
}

TEST(solve_hx_constraints, kernel_is_the_code_on_9x9) {
  const Lattice l = Lattice::torus(9, 9);
  const ConstraintReport rep = solve_hx_constraints(l);
  EXPECT_EQ(rep.kernel.size(), 9u);
  EXPECT_EQ(rep.rank, 72u);
  const GF3Matrix g = HCode(l).generator();
  for (std::size_t i = 0; i < g.rows(); ++i) EXPECT_TRUE(in_kernel(triangle_constraint_matrix(l), g.row(i)));
}

TEST(build_HX_general, structure_k2) {
  const auto terms = build_HX_general(2);
  ASSERT_EQ(terms.size(), 6u);
  const Lattice l = Lattice::torus(9, 9);
  for (const auto& t : terms) {
    EXPECT_EQ(t.factors.size(), 54u);
    EXPECT_EQ(t.count(PauliGen::kX, Trit(1)), 27u);
    EXPECT_EQ(t.count(PauliGen::kX, Trit(2)), 27u);
    TritVector e(81);
    for (const auto& f : t.factors) e[f.site] = f.exponent;
    // Commutes with the triangle terms iff every up-triangle sums to zero.
    EXPECT_TRUE(SpinConfig(l, e).is_neutral());
  }
}
