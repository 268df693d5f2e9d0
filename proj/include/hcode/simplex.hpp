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
#include <vector>

#include "hcode/spectra.hpp"

namespace hcode {

/// Four-qutrit state sum_{i,s} |s, i, i+s, i+2s> / 3: one physical qutrit s encoded into three
/// ancillas.
inline StateVector simplex_state() {
  StateVector v = StateVector::Zero(81);
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < 3; ++i) {
      const int idx = ((s * 3 + i) * 3 + (i + s) % 3) * 3 + (i + 2 * s) % 3;
      v(idx) += 1.0 / 3.0;
    }
  return v;
}

/// Reduced density matrix of `psi` on the qutrits in `keep` (ascending), site 0 most significant.
inline Eigen::MatrixXcd reduced_density_matrix(const StateVector& psi, std::size_t num_sites,
                                               const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < num_sites; ++q)
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  const auto dk = static_cast<Eigen::Index>(pow3(keep.size()));
  const auto dt = static_cast<Eigen::Index>(pow3(traced.size()));
  // psi reshaped as a (kept x traced) matrix M, so rho = M M^dagger.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dk, dt);
  for (Eigen::Index idx = 0; idx < psi.size(); ++idx) {
    const TritVector cfg = basis_config(static_cast<std::uint64_t>(idx), num_sites);
    Eigen::Index a = 0, b = 0;
    for (std::size_t q : keep) a = a * 3 + cfg[q].value();
    for (std::size_t q : traced) b = b * 3 + cfg[q].value();
    m(a, b) = psi(idx);
  }
  return m * m.adjoint();
}

struct AmeReport {
  double norm = 0.0;
  /// Largest |eigenvalue - 1/9| over the three 2:2 cuts.
  double two_site_deviation = 0.0;
  /// Largest |rho - I/3| entry over the four single-site marginals.
  double one_site_deviation = 0.0;
  std::array<Eigen::VectorXd, 3> two_site_spectra;
  bool holds(double tol = 1e-10) const {
    return std::abs(norm - 1.0) < tol && two_site_deviation < tol && one_site_deviation < tol;
  }
};

/// Checks that every bipartition of the simplex state is maximally mixed on the smaller side.
inline AmeReport verify_ame(const StateVector& psi = simplex_state()) {
  AmeReport rep;
  rep.norm = psi.norm();
  const std::array<std::vector<std::size_t>, 3> cuts{{{0, 1}, {0, 2}, {0, 3}}};
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(reduced_density_matrix(psi, 4, cuts[c]),
                                                       Eigen::EigenvaluesOnly);
    rep.two_site_spectra[c] = es.eigenvalues();
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      rep.two_site_deviation = std::max(rep.two_site_deviation, std::abs(es.eigenvalues()(i) - 1.0 / 9.0));
  }
  for (std::size_t q = 0; q < 4; ++q) {
    const Eigen::MatrixXcd rho = reduced_density_matrix(psi, 4, {q});
    const Eigen::MatrixXcd diff = rho - Eigen::MatrixXcd::Identity(3, 3) / 3.0;
    rep.one_site_deviation = std::max(rep.one_site_deviation, diff.cwiseAbs().maxCoeff());
  }
  return rep;
}

}  // namespace hcode
