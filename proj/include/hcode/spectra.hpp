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
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hcode/automaton.hpp"
#include "hcode/gf3.hpp"
#include "hcode/lattice.hpp"

namespace hcode {

using Complex = std::complex<double>;
/// Operators on (C^3)^{\otimes N} in the computational basis. Storage is sparse: every operator
/// built here is a short sum of generalized Pauli strings.
using Operator = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
using StateVector = Eigen::VectorXcd;

/// Largest number of qutrits for which full-space operators are assembled.
inline constexpr std::size_t kMaxOperatorSites = 10;

inline Complex omega_power(int k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(((k % 3) + 3) % 3) / 3.0;
  return {std::cos(angle), std::sin(angle)};
}

/// Raising operator X|s> = |s+1>.
inline Eigen::Matrix3cd pauli_x() {
  Eigen::Matrix3cd x = Eigen::Matrix3cd::Zero();
  x(1, 0) = 1.0;
  x(2, 1) = 1.0;
  x(0, 2) = 1.0;
  return x;
}

/// Clock operator Z|s> = q^s |s>, q = exp(2 pi i / 3).
inline Eigen::Matrix3cd pauli_z() {
  Eigen::Matrix3cd z = Eigen::Matrix3cd::Zero();
  for (int s = 0; s < 3; ++s) z(s, s) = omega_power(s);
  return z;
}

inline std::uint64_t pow3(std::size_t k) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < k; ++i) p *= 3;
  return p;
}

/// Basis index of a trit string; site 0 is the most significant digit.
inline std::uint64_t basis_index(std::span<const Trit> config) {
  std::uint64_t idx = 0;
  for (Trit t : config) idx = idx * 3 + t.value();
  return idx;
}

inline TritVector basis_config(std::uint64_t index, std::size_t num_sites) {
  TritVector v(num_sites);
  for (std::size_t i = num_sites; i-- > 0;) {
    v[i] = Trit(static_cast<int>(index % 3));
    index /= 3;
  }
  return v;
}

enum class PauliGen { kX, kZ };

struct PauliFactor {
  SiteId site = 0;
  PauliGen gen = PauliGen::kX;
  Trit exponent;
  bool operator==(const PauliFactor&) const = default;
};

/// Product coefficient * f_0 f_1 ... f_k of single-site X^a / Z^b factors. The rightmost factor
/// acts first on a ket.
struct OperatorSpec {
  std::vector<PauliFactor> factors;
  Complex coefficient{1.0, 0.0};

  /// Drops factors with exponent zero.
  OperatorSpec& normalize() {
    std::erase_if(factors, [](const PauliFactor& f) { return f.exponent.is_zero(); });
    return *this;
  }

  std::size_t count(PauliGen g, Trit e) const {
    return static_cast<std::size_t>(
        std::count_if(factors.begin(), factors.end(), [&](const PauliFactor& f) { return f.gen == g && f.exponent == e; }));
  }
};

/// Coefficient * prod_i X_i^{e_i}, over sites 0..len-1.
inline OperatorSpec x_string(std::span<const Trit> exponents, Complex coefficient = 1.0) {
  OperatorSpec op;
  op.coefficient = coefficient;
  for (SiteId s = 0; s < exponents.size(); ++s) op.factors.push_back({s, PauliGen::kX, exponents[s]});
  op.normalize();
  return op;
}

/// -sum_{n = +-1} X^{n e} for each exponent string e.
inline std::vector<OperatorSpec> symmetric_x_terms(const std::vector<TritVector>& strings) {
  std::vector<OperatorSpec> out;
  for (const auto& e : strings) {
    out.push_back(x_string(e, -1.0));
    out.push_back(x_string(scale(e, Trit(2)), -1.0));
  }
  return out;
}

/// Sum of terms as a sparse operator on num_sites qutrits.
inline Operator to_operator(const std::vector<OperatorSpec>& terms, std::size_t num_sites) {
  if (num_sites > kMaxOperatorSites) {
    throw std::length_error("to_operator: " + std::to_string(num_sites) + " qutrits exceeds the limit of " +
                            std::to_string(kMaxOperatorSites));
  }
  for (const auto& t : terms)
    for (const auto& f : t.factors)
      if (f.site >= num_sites) throw std::out_of_range("to_operator: factor site outside register");
  const std::uint64_t dim = pow3(num_sites);
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(dim) * terms.size());
  std::vector<int> digits(num_sites);
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (const auto& term : terms) {
      std::uint64_t c = col;
      for (std::size_t i = num_sites; i-- > 0;) {
        digits[i] = static_cast<int>(c % 3);
        c /= 3;
      }
      int phase = 0;
      for (auto it = term.factors.rbegin(); it != term.factors.rend(); ++it) {
        int& d = digits[it->site];
        if (it->gen == PauliGen::kX) {
          d = (d + it->exponent.as_int()) % 3;
        } else {
          phase += it->exponent.as_int() * d;
        }
      }
      std::uint64_t row = 0;
      for (int d : digits) row = row * 3 + static_cast<std::uint64_t>(d);
      triplets.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col),
                            term.coefficient * omega_power(phase));
    }
  }
  Operator op(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  op.setFromTriplets(triplets.begin(), triplets.end());
  op.prune(Complex(0.0), 1e-14);
  return op;
}

inline Operator identity_operator(std::size_t num_sites) {
  return to_operator({OperatorSpec{}}, num_sites);
}

/// Triangle penalty terms 2 - Z_i Z_j Z_k - (Z_i Z_j Z_k)^2 written as Pauli strings.
inline std::vector<OperatorSpec> hz_terms(const Lattice& l) {
  std::vector<OperatorSpec> out;
  for (const Triangle& t : l.up_triangles()) {
    out.push_back(OperatorSpec{{}, 2.0});
    for (int e : {1, 2}) {
      OperatorSpec zzz;
      zzz.coefficient = -1.0;
      for (SiteId s : t.sites()) zzz.factors.push_back({s, PauliGen::kZ, Trit(e)});
      out.push_back(zzz);
    }
  }
  return out;
}

/// Triangle penalty Hamiltonian. It is diagonal: each basis state carries 3 per frustrated up-triangle.
inline Operator build_HZ(const Lattice& l) {
  const std::size_t n = l.num_sites();
  if (n > kMaxOperatorSites) throw std::length_error("build_HZ: lattice too large for a full-space operator");
  const std::uint64_t dim = pow3(n);
  Operator op(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  op.reserve(Eigen::VectorXi::Constant(static_cast<Eigen::Index>(dim), 1));
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    const TritVector cfg = basis_config(idx, n);
    std::size_t frustrated = 0;
    for (const Triangle& t : l.up_triangles())
      if (!(cfg[t.left] + cfg[t.right] + cfg[t.apex]).is_zero()) ++frustrated;
    if (frustrated) op.insert(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)) = 3.0 * frustrated;
  }
  op.makeCompressed();
  return op;
}

// Parent-Hamiltonian strings on the 3x3 torus. Site labels 1..9 run row-major, boundary row first;
// label i is site id i-1, and every string is listed by its exponents on labels 1..9.

/// The three mixing strings as they must read for H_X to commute with the triangle penalties. The
/// third is the codeword of boundary (1,0,-1): X_1 X_3^{-1} X_4^{-1} X_5 X_8^{-1} X_9.
inline std::vector<TritVector> hx_exponent_strings() {
  return {trits_from_digits("120012201"), trits_from_digits("012201120"), trits_from_digits("102210021")};
}

/// The same three strings with the third transcribed literally as X_1 X_3^{-1} X_4^{-1} X_5 X_7^{-1} X_8.
/// That string violates the triangle rule on (4,5,7) and is kept only to report the discrepancy.
inline std::vector<TritVector> hx_exponent_strings_as_printed() {
  return {trits_from_digits("120012201"), trits_from_digits("012201120"), trits_from_digits("102210210")};
}

/// Strings of the charge-breaking variant H'_X; triangle sums are 0 or +-3 before reduction.
inline std::vector<TritVector> hx_prime_exponent_strings() {
  return {trits_from_digits("110122020"), trits_from_digits("011212002"), trits_from_digits("101221200")};
}

inline Operator build_HX_3x3() { return to_operator(symmetric_x_terms(hx_exponent_strings()), 9); }

inline Operator build_HX_prime_3x3() { return to_operator(symmetric_x_terms(hx_prime_exponent_strings()), 9); }

/// Exponents of prod_{a,b} X_{a,b}^{n(a - b + p)} on the 3^k x 3^k torus, with a the row and b the column.
inline TritVector hx_general_exponents(unsigned k, int n, int p) {
  const std::size_t side = static_cast<std::size_t>(pow3(k));
  TritVector e(side * side);
  for (std::size_t a = 0; a < side; ++a)
    for (std::size_t b = 0; b < side; ++b)
      e[a * side + b] = Trit(n * (static_cast<int>(a) - static_cast<int>(b) + p));
  return e;
}

/// The six strings (n = +-1, p in {0, +-1}) of the mixing Hamiltonian on the 3^k torus, each with
/// coefficient -1. Only symbolic: the full-space operator is out of reach beyond k = 1.
inline std::vector<OperatorSpec> build_HX_general(unsigned k) {
  if (k < 1 || k > 2) throw std::invalid_argument("build_HX_general: symbolic construction limited to k = 1, 2");
  std::vector<OperatorSpec> out;
  for (int n : {1, -1})
    for (int p : {0, 1, -1}) out.push_back(x_string(hx_general_exponents(k, n, p), -1.0));
  return out;
}

/// Periodic boundary Hamiltonian -sum_i sum_{a+b=0 mod 3} X_i^a X_{i+1}^b, including the a = b = 0
/// identity terms.
inline Operator build_boundary_hamiltonian(std::size_t n) {
  if (n < 2) throw std::invalid_argument("build_boundary_hamiltonian: need n >= 2");
  std::vector<OperatorSpec> terms;
  for (SiteId i = 0; i < n; ++i) {
    for (int a = 0; a < 3; ++a) {
      OperatorSpec t;
      t.coefficient = -1.0;
      t.factors.push_back({i, PauliGen::kX, Trit(a)});
      t.factors.push_back({(i + 1) % n, PauliGen::kX, Trit(-a)});
      terms.push_back(t.normalize());
    }
  }
  return to_operator(terms, n);
}

/// Product of Z over the sites of a cycle.
inline Operator charge_operator(std::span<const SiteId> cycle, std::size_t num_sites) {
  OperatorSpec q;
  for (SiteId s : cycle) q.factors.push_back({s, PauliGen::kZ, Trit(1)});
  return to_operator({q}, num_sites);
}

inline double max_abs(const Operator& a) {
  double m = 0.0;
  for (Eigen::Index k = 0; k < a.outerSize(); ++k)
    for (Operator::InnerIterator it(a, k); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

/// Largest entry of ab - ba.
inline double commutator_norm(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw std::invalid_argument("commutator_norm: dimension mismatch");
  Operator c = a * b - b * a;
  return max_abs(c);
}

inline bool commutes(const Operator& a, const Operator& b, double tol = 1e-9) { return commutator_norm(a, b) < tol; }

/// Largest entry of H - H^dagger.
inline double hermiticity_defect(const Operator& h) {
  Operator d = h - Operator(h.adjoint());
  return max_abs(d);
}

struct Level {
  double value = 0.0;
  std::size_t multiplicity = 0;
};

/// Groups sorted eigenvalues whose neighbours differ by less than tol.
inline std::vector<Level> group_levels(std::vector<double> eigenvalues, double tol = 1e-9) {
  std::sort(eigenvalues.begin(), eigenvalues.end());
  std::vector<Level> out;
  std::vector<double> bucket;
  auto flush = [&] {
    if (bucket.empty()) return;
    double mean = std::accumulate(bucket.begin(), bucket.end(), 0.0) / static_cast<double>(bucket.size());
    out.push_back({mean, bucket.size()});
    bucket.clear();
  };
  for (double e : eigenvalues) {
    if (!bucket.empty() && e - bucket.back() >= tol) flush();
    bucket.push_back(e);
  }
  flush();
  return out;
}

/// Thrown when an operator does not map a subspace into itself.
class SubspaceLeakError : public std::runtime_error {
 public:
  explicit SubspaceLeakError(double leak)
      : std::runtime_error("operator leaks out of the sector subspace (norm " + std::to_string(leak) + ")"),
        leak_(leak) {}
  double leak() const { return leak_; }

 private:
  double leak_;
};

struct SectorSpectrum {
  Trit sector;
  /// Basis indices of the sector codewords, ordered by boundary index.
  std::vector<std::uint64_t> basis;
  Eigen::MatrixXcd restricted;
  std::vector<Level> levels;
  Eigen::VectorXd eigenvalues;
  /// Lowest eigenvector in the sector basis.
  Eigen::VectorXcd ground_vector;
  double leak = 0.0;
};

/// Basis indices of the codewords whose boundary sums to `sector` (all codewords if nullopt).
inline std::vector<std::uint64_t> codeword_basis(const HCode& code, std::optional<Trit> sector = std::nullopt) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 0; b < code.size(); ++b) {
    TritVector boundary = boundary_from_index(b, code.dimension());
    Trit s;
    for (Trit t : boundary) s += t;
    if (sector && s != *sector) continue;
    out.push_back(basis_index(code.encode(boundary)));
  }
  return out;
}

/// Fixes the global phase so the largest-magnitude amplitude (first one on ties) is real positive.
inline void fix_phase(StateVector& v) {
  Eigen::Index best = 0;
  double mag = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > mag + 1e-12) {
      mag = std::abs(v(i));
      best = i;
    }
  }
  if (mag > 0.0) v *= std::conj(v(best)) / mag;
}

inline SectorSpectrum sector_spectrum(const Operator& h, const HCode& code, Trit sector, double leak_tol = 1e-9) {
  const Eigen::Index dim = h.rows();
  if (static_cast<std::uint64_t>(dim) != pow3(code.length()))
    throw std::invalid_argument("sector_spectrum: operator does not act on the code's qutrits");
  SectorSpectrum out;
  out.sector = sector;
  out.basis = codeword_basis(code, sector);
  const auto d = static_cast<Eigen::Index>(out.basis.size());
  Operator proj(dim, d);
  for (Eigen::Index j = 0; j < d; ++j) proj.insert(static_cast<Eigen::Index>(out.basis[j]), j) = 1.0;
  Operator hp = h * proj;
  out.restricted = Eigen::MatrixXcd(Operator(proj.adjoint()) * hp);
  Eigen::MatrixXcd residual = Eigen::MatrixXcd(hp) - Eigen::MatrixXcd(proj) * out.restricted;
  out.leak = residual.norm();
  if (out.leak > leak_tol) throw SubspaceLeakError(out.leak);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(out.restricted);
  out.eigenvalues = es.eigenvalues();
  out.levels = group_levels(std::vector<double>(out.eigenvalues.begin(), out.eigenvalues.end()), leak_tol);
  StateVector g = es.eigenvectors().col(0);
  fix_phase(g);
  out.ground_vector = g;
  return out;
}

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

struct Eigenpair {
  double value = 0.0;
  StateVector vector;
};

/// Lowest eigenpair of a Hermitian operator in the orthogonal complement of `deflate`, by Lanczos
/// with full reorthogonalization.
inline std::optional<Eigenpair> lanczos_lowest(const Operator& a, const std::vector<StateVector>& deflate,
                                               std::uint64_t seed, double tol = 1e-10, Eigen::Index max_steps = 300) {
  const Eigen::Index dim = a.rows();
  auto project_out = [&](StateVector& v, const std::vector<StateVector>& basis) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) v -= b * b.dot(v);
  };
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  StateVector q(dim);
  for (Eigen::Index i = 0; i < dim; ++i) q(i) = gauss(rng);
  project_out(q, deflate);
  if (q.norm() < 1e-12) return std::nullopt;
  q.normalize();

  std::vector<StateVector> krylov{q};
  std::vector<double> alpha, beta;
  const Eigen::Index steps = std::min<Eigen::Index>(max_steps, dim - static_cast<Eigen::Index>(deflate.size()));
  std::optional<Eigenpair> best;
  for (Eigen::Index j = 0; j < steps; ++j) {
    StateVector w = a * krylov.back();
    alpha.push_back(krylov.back().dot(w).real());
    project_out(w, deflate);
    project_out(w, krylov);
    const double b = w.norm();
    const bool exhausted = b < 1e-10 || j + 1 == steps;
    const bool check = exhausted || (j + 1) % 10 == 0;
    if (check) {
      const auto m = static_cast<Eigen::Index>(alpha.size());
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
      Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1))
                                  : Eigen::VectorXd(0);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const Eigen::VectorXd y = tri.eigenvectors().col(0);
      if (exhausted || std::abs(b * y(m - 1)) < tol) {
        StateVector v = StateVector::Zero(dim);
        for (Eigen::Index i = 0; i < m; ++i) v += krylov[static_cast<std::size_t>(i)] * y(i);
        v.normalize();
        best = Eigenpair{tri.eigenvalues()(0), v};
        break;
      }
    }
    beta.push_back(b);
    krylov.push_back(w / b);
  }
  return best;
}

}  // namespace detail

/// Eigenspace of the minimal eigenvalue.
struct GroundSpace {
  double energy = 0.0;
  std::vector<StateVector> states;
  /// Distance from the ground energy to the next distinct eigenvalue found (infinity if none).
  double gap = std::numeric_limits<double>::infinity();
  std::size_t degeneracy() const { return states.size(); }
  bool degenerate() const { return states.size() > 1; }
  std::size_t blocks = 0;
};

/// Blocks up to this size are diagonalized densely; larger ones use deflated Lanczos.
inline constexpr Eigen::Index kDenseBlockLimit = 256;

/// Ground space of a Hermitian operator. The operator is split into the connected components of its
/// nonzero pattern; each block is diagonalized on its own, densely or by deflated Lanczos. Eigenvalues
/// within degeneracy_tol of the minimum count as ground states; the returned vectors are orthonormal,
/// each supported in one block, with the phase fixed by fix_phase.
inline GroundSpace ground_space(const Operator& h, double degeneracy_tol = 1e-6) {
  if (h.rows() != h.cols()) throw std::invalid_argument("ground_space: operator must be square");
  if (hermiticity_defect(h) > 1e-10) throw std::invalid_argument("ground_space: operator is not Hermitian");
  const auto dim = static_cast<std::size_t>(h.rows());
  detail::DisjointSets sets(dim);
  for (Eigen::Index r = 0; r < h.outerSize(); ++r)
    for (Operator::InnerIterator it(h, r); it; ++it)
      if (std::abs(it.value()) > 1e-14) sets.unite(static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()));
  std::vector<std::vector<std::size_t>> blocks;
  {
    std::vector<std::ptrdiff_t> block_of_root(dim, -1);
    for (std::size_t i = 0; i < dim; ++i) {
      const std::size_t root = sets.find(i);
      if (block_of_root[root] < 0) {
        block_of_root[root] = static_cast<std::ptrdiff_t>(blocks.size());
        blocks.emplace_back();
      }
      blocks[static_cast<std::size_t>(block_of_root[root])].push_back(i);
    }
  }

  struct Candidate {
    double value;
    StateVector vector;
  };
  std::vector<Candidate> low;  // per block: its low eigenpairs, plus the first level above them
  std::vector<double> above;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& idx = blocks[bi];
    const auto bdim = static_cast<Eigen::Index>(idx.size());
    std::vector<Eigen::Index> local(dim, -1);
    for (Eigen::Index i = 0; i < bdim; ++i) local[idx[static_cast<std::size_t>(i)]] = i;
    Operator sub(bdim, bdim);
    std::vector<Eigen::Triplet<Complex>> trip;
    for (std::size_t gi : idx)
      for (Operator::InnerIterator it(h, static_cast<Eigen::Index>(gi)); it; ++it)
        trip.emplace_back(local[gi], local[static_cast<std::size_t>(it.col())], it.value());
    sub.setFromTriplets(trip.begin(), trip.end());

    auto embed = [&](const StateVector& v) {
      StateVector g = StateVector::Zero(static_cast<Eigen::Index>(dim));
      for (Eigen::Index i = 0; i < bdim; ++i) g(static_cast<Eigen::Index>(idx[static_cast<std::size_t>(i)])) = v(i);
      return g;
    };

    if (bdim <= kDenseBlockLimit) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es{Eigen::MatrixXcd(sub)};
      const double e0 = es.eigenvalues()(0);
      Eigen::Index i = 0;
      for (; i < bdim && es.eigenvalues()(i) < e0 + degeneracy_tol; ++i)
        low.push_back({es.eigenvalues()(i), embed(es.eigenvectors().col(i))});
      if (i < bdim) above.push_back(es.eigenvalues()(i));
    } else {
      std::vector<StateVector> found;
      double e0 = 0.0;
      for (std::uint64_t round = 0;; ++round) {
        auto pair = detail::lanczos_lowest(sub, found, 0x9e3779b97f4a7c15ULL + round);
        if (!pair) break;
        if (found.empty()) e0 = pair->value;
        if (!found.empty() && pair->value >= e0 + degeneracy_tol) {
          above.push_back(pair->value);
          break;
        }
        found.push_back(pair->vector);
        low.push_back({pair->value, embed(pair->vector)});
        if (found.size() >= 64) break;
      }
    }
  }

  GroundSpace gs;
  gs.blocks = blocks.size();
  if (low.empty()) return gs;
  gs.energy = std::min_element(low.begin(), low.end(), [](auto& a, auto& b) { return a.value < b.value; })->value;
  for (auto& c : low) {
    if (c.value < gs.energy + degeneracy_tol) {
      fix_phase(c.vector);
      gs.states.push_back(std::move(c.vector));
    } else {
      above.push_back(c.value);
    }
  }
  for (double v : above) gs.gap = std::min(gs.gap, v - gs.energy);
  return gs;
}

/// Uniform superposition of the codewords (or of one charge sector), normalized.
inline StateVector code_state(const HCode& code, std::optional<Trit> sector = std::nullopt) {
  if (code.length() > kMaxOperatorSites) throw std::length_error("code_state: lattice too large for a state vector");
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(pow3(code.length())));
  const auto basis = codeword_basis(code, sector);
  const double amp = 1.0 / std::sqrt(static_cast<double>(basis.size()));
  for (std::uint64_t b : basis) v(static_cast<Eigen::Index>(b)) = amp;
  return v;
}

/// True if all amplitudes above `floor` share one magnitude and one phase.
inline bool uniform_amplitude(const StateVector& v, double tol = 1e-9, double floor = 1e-6) {
  std::optional<Complex> ref;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) < floor) continue;
    if (!ref) {
      ref = v(i);
      continue;
    }
    if (std::abs(v(i) - *ref) > tol) return false;
  }
  return ref.has_value();
}

/// Uniform superposition over boundary rows of length n (optionally restricted to one sum).
inline StateVector boundary_superposition(std::size_t n, std::optional<Trit> sector = std::nullopt) {
  const std::uint64_t dim = pow3(n);
  StateVector v = StateVector::Zero(static_cast<Eigen::Index>(dim));
  for (std::uint64_t idx = 0; idx < dim; ++idx) {
    const TritVector cfg = basis_config(idx, n);
    Trit s;
    for (Trit t : cfg) s += t;
    if (!sector || s == *sector) v(static_cast<Eigen::Index>(idx)) = 1.0;
  }
  return v.normalized();
}

/// Two-qutrit gate |a>|b> -> |a>|b - a>, written multiplicatively as |a>|b a^2>.
inline void apply_controlled_subtract(StateVector& psi, std::size_t num_sites, SiteId control, SiteId target) {
  if (control == target || control >= num_sites || target >= num_sites)
    throw std::invalid_argument("apply_controlled_subtract: bad qutrit indices");
  StateVector out = StateVector::Zero(psi.size());
  const std::uint64_t cw = pow3(num_sites - 1 - control);
  const std::uint64_t tw = pow3(num_sites - 1 - target);
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(psi.size()); ++idx) {
    if (psi(static_cast<Eigen::Index>(idx)) == Complex(0.0)) continue;
    const std::uint64_t a = (idx / cw) % 3;
    const std::uint64_t b = (idx / tw) % 3;
    const std::uint64_t nb = (b + 3 - a) % 3;
    out(static_cast<Eigen::Index>(idx - b * tw + nb * tw)) += psi(static_cast<Eigen::Index>(idx));
  }
  psi = std::move(out);
}

/// Encodes a boundary state into the 3x3 torus: bulk qutrits start in |0> and every bulk site
/// (r+1, c) receives -(s(r,c) + s(r,c+1)) through two controlled subtractions, one layer at a time.
inline StateVector prepare_state(const StateVector& boundary_state, std::size_t n = 3) {
  if (n != 3) throw std::invalid_argument("prepare_state: only the 3x3 torus fits in a state vector");
  if (static_cast<std::uint64_t>(boundary_state.size()) != pow3(n))
    throw std::invalid_argument("prepare_state: boundary state has the wrong dimension");
  const Lattice l = Lattice::torus(n, n);
  const std::size_t sites = l.num_sites();
  const std::uint64_t bulk_dim = pow3(sites - n);
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(pow3(sites)));
  for (Eigen::Index b = 0; b < boundary_state.size(); ++b)
    psi(static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) * bulk_dim)) = boundary_state(b);
  for (std::size_t r = 0; r + 1 < l.m(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const SiteId target = l.id(r + 1, c);
      apply_controlled_subtract(psi, sites, l.id(r, c), target);
      apply_controlled_subtract(psi, sites, l.id(r, (c + 1) % n), target);
    }
  }
  return psi;
}

/// Solution space of the commutation constraints n_i + n_j + n_k = 0 (mod 3) on every up-triangle,
/// together with membership tests for the H_X mixing strings.
struct ConstraintReport {
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::size_t rank = 0;
  /// Commonly quoted rank of this system; the computed rank is 6.
  static constexpr std::size_t kQuotedRank = 2;
  std::vector<TritVector> kernel;
  /// Per kernel basis vector: invariant under a one-column translation.
  std::vector<bool> kernel_translation_invariant;
  std::vector<bool> hx_in_kernel;
  std::vector<bool> hx_as_printed_in_kernel;
  /// hx strings map onto each other under translations.
  bool hx_translation_closed = false;
  /// Integer triangle sums of the H'_X strings (exponents in {-1,0,1}) all lie in {0, +-3}.
  std::vector<bool> hx_prime_rhs_in_0_pm3;
  bool rank_matches_quoted() const { return rank == kQuotedRank; }
};

inline GF3Matrix triangle_constraint_matrix(const Lattice& l) {
  GF3Matrix m(l.up_triangles().size(), l.num_sites());
  for (std::size_t t = 0; t < l.up_triangles().size(); ++t)
    for (SiteId s : l.up_triangles()[t].sites()) m.set(t, s, m.at(t, s) + Trit(1));
  return m;
}

inline bool in_kernel(const GF3Matrix& m, std::span<const Trit> v) {
  const TritVector r = m.apply(v);
  return std::all_of(r.begin(), r.end(), [](Trit t) { return t.is_zero(); });
}

inline TritVector translate_vector(const Lattice& l, std::span<const Trit> v, std::size_t dr, std::size_t dc) {
  TritVector out(v.size());
  for (SiteId s = 0; s < v.size(); ++s) out[translate(l, s, dr, dc)] = v[s];
  return out;
}

inline ConstraintReport solve_hx_constraints(const Lattice& l) {
  if (!l.is_torus()) throw std::invalid_argument("solve_hx_constraints: torus lattice required");
  const GF3Matrix m = triangle_constraint_matrix(l);
  ConstraintReport rep;
  rep.equations = m.rows();
  rep.unknowns = m.cols();
  rep.rank = rank(m);
  rep.kernel = kernel_basis(m);
  for (const auto& v : rep.kernel) rep.kernel_translation_invariant.push_back(translate_vector(l, v, 0, 1) == v);

  const bool three_by_three = l.n() == 3 && l.m() == 3;
  if (three_by_three) {
    const auto hx = hx_exponent_strings();
    for (const auto& v : hx) rep.hx_in_kernel.push_back(in_kernel(m, v));
    for (const auto& v : hx_exponent_strings_as_printed()) rep.hx_as_printed_in_kernel.push_back(in_kernel(m, v));
    // Each string X^e comes with X^{-e}; closure is checked on the set {+-e}.
    std::vector<TritVector> family;
    for (const auto& v : hx) {
      family.push_back(v);
      family.push_back(scale(v, Trit(2)));
    }
    rep.hx_translation_closed = true;
    for (const auto& v : family)
      for (std::size_t dr = 0; dr < l.m(); ++dr)
        for (std::size_t dc = 0; dc < l.n(); ++dc)
          if (std::find(family.begin(), family.end(), translate_vector(l, v, dr, dc)) == family.end())
            rep.hx_translation_closed = false;
    for (const auto& v : hx_prime_exponent_strings()) {
      bool ok = true;
      for (const Triangle& t : l.up_triangles()) {
        const int sum = v[t.left].as_spin() + v[t.right].as_spin() + v[t.apex].as_spin();
        if (sum != 0 && sum != 3 && sum != -3) ok = false;
      }
      rep.hx_prime_rhs_in_0_pm3.push_back(ok);
    }
  }
  return rep;
}

}  // namespace hcode
