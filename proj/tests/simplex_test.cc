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

#include "hcode/simplex.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>

using namespace hcode;

namespace {

/// Partial trace by explicit index loops over rho = |psi><psi|, summing the traced qutrits.
Eigen::MatrixXcd partial_trace_oracle(const StateVector& psi, std::size_t a, std::size_t b) {
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(9, 9);
  for (int i = 0; i < 81; ++i)
    for (int j = 0; j < 81; ++j) {
      int di[4], dj[4];
      for (int q = 3, x = i, y = j; q >= 0; --q, x /= 3, y /= 3) {
        di[q] = x % 3;
        dj[q] = y % 3;
      }
      bool same_traced = true;
      for (int q = 0; q < 4; ++q)
        if (q != static_cast<int>(a) && q != static_cast<int>(b) && di[q] != dj[q]) same_traced = false;
      if (!same_traced) continue;
      rho(di[a] * 3 + di[b], dj[a] * 3 + dj[b]) += psi(i) * std::conj(psi(j));
    }
  return rho;
}

}  // namespace

TEST(simplex_state, support_and_norm) {
  const StateVector v = simplex_state();
  EXPECT_NEAR(v.norm(), 1.0, 1e-15);
  int support = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (std::abs(v(i)) > 0) ++support;
  EXPECT_EQ(support, 9);
  // |s, i, i+s, i+2s> for s = 1, i = 2: digits 1 2 0 1.
  EXPECT_NEAR(v(1 * 27 + 2 * 9 + 0 * 3 + 1).real(), 1.0 / 3.0, 1e-15);
}

TEST(reduced_density_matrix, matches_index_oracle) {
  const StateVector v = simplex_state();
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) {
      const Eigen::MatrixXcd got = reduced_density_matrix(v, 4, {a, b});
      EXPECT_LT((got - partial_trace_oracle(v, a, b)).cwiseAbs().maxCoeff(), 1e-14) << a << b;
      EXPECT_LT((got - Eigen::MatrixXcd::Identity(9, 9) / 9.0).cwiseAbs().maxCoeff(), 1e-14) << a << b;
    }
}

TEST(verify_ame, holds_for_simplex_state) {
  const AmeReport rep = verify_ame();
  EXPECT_TRUE(rep.holds());
  for (const auto& spec : rep.two_site_spectra) {
    ASSERT_EQ(spec.size(), 9);
    for (Eigen::Index i = 0; i < 9; ++i) EXPECT_NEAR(spec(i), 1.0 / 9.0, 1e-12);
  }
}

TEST(verify_ame, fails_for_product_and_ghz_states) {
  StateVector product = StateVector::Zero(81);
  product(0) = 1.0;
  EXPECT_FALSE(verify_ame(product).holds());
  // GHZ: single-site marginals are I/3 but 2:2 cuts have rank 3.
  StateVector ghz = StateVector::Zero(81);
  for (int s = 0; s < 3; ++s) ghz(s * 40) = 1.0 / std::sqrt(3.0);
  const AmeReport rep = verify_ame(ghz);
  EXPECT_LT(rep.one_site_deviation, 1e-12);
  EXPECT_FALSE(rep.holds());
}
