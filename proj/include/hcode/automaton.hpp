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
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcode/gf3.hpp"
#include "hcode/lattice.hpp"

namespace hcode {

/// Thrown when m propagation steps on a torus do not bring the boundary row back to itself.
class ClosureError : public std::runtime_error {
 public:
  ClosureError(std::size_t n, std::size_t m, TritVector boundary, TritVector closure_row)
      : std::runtime_error(describe(n, m, boundary, closure_row)),
        boundary_(std::move(boundary)),
        closure_row_(std::move(closure_row)) {}

  const TritVector& boundary() const { return boundary_; }
  const TritVector& closure_row() const { return closure_row_; }

 private:
  static std::string describe(std::size_t n, std::size_t m, const TritVector& b, const TritVector& c) {
    std::ostringstream os;
    os << "torus(" << n << "," << m << ") is not closed: boundary " << trits_to_digits(b) << " propagates to "
       << trits_to_digits(c) << " after " << m << " steps";
    return os.str();
  }

  TritVector boundary_;
  TritVector closure_row_;
};

enum class RowMode { kPeriodic, kOpen };

/// One step of the neutralization rule: out_i = -(row_i + row_{i+1}).
/// Periodic rows wrap around; open rows lose their last entry.
inline TritVector propagate_row(std::span<const Trit> row, RowMode mode = RowMode::kPeriodic) {
  if (row.size() < 2) throw std::invalid_argument("propagate_row: row length must be at least 2");
  const std::size_t n = row.size();
  const std::size_t out_len = mode == RowMode::kPeriodic ? n : n - 1;
  TritVector out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = -(row[i] + row[(i + 1) % n]);
  return out;
}

/// Pushes a boundary X-exponent string one layer into the bulk. The exponents obey
/// the same neutralization rule as the spins they shift.
inline TritVector push_operator_string(std::span<const Trit> exponents) {
  return propagate_row(exponents, RowMode::kPeriodic);
}

/// Trit assignment to every site of a lattice.
class SpinConfig {
 public:
  explicit SpinConfig(const Lattice& lattice)
      : lattice_(std::make_shared<const Lattice>(lattice)), values_(lattice.num_sites()) {}
  SpinConfig(const Lattice& lattice, TritVector values)
      : SpinConfig(std::make_shared<const Lattice>(lattice), std::move(values)) {}
  SpinConfig(std::shared_ptr<const Lattice> lattice, TritVector values)
      : lattice_(std::move(lattice)), values_(std::move(values)) {
    if (values_.size() != lattice_->num_sites()) throw std::invalid_argument("SpinConfig: size does not match lattice");
  }

  const Lattice& lattice() const { return *lattice_; }
  const TritVector& values() const { return values_; }
  Trit operator[](SiteId s) const { return values_[s]; }
  Trit at(std::size_t row, std::size_t col) const { return values_[lattice_->id(row, col)]; }
  void set(SiteId s, Trit v) { values_[s] = v; }

  TritVector row(std::size_t r) const {
    TritVector out;
    for (std::size_t c = 0; c < lattice_->row_length(r); ++c) out.push_back(at(r, c));
    return out;
  }

  /// True if every up-triangle sums to zero mod 3.
  bool is_neutral() const { return frustrated_triangles() == 0; }

  std::size_t frustrated_triangles() const {
    std::size_t count = 0;
    for (const Triangle& t : lattice_->up_triangles())
      if (!(values_[t.left] + values_[t.right] + values_[t.apex]).is_zero()) ++count;
    return count;
  }

  bool operator==(const SpinConfig& o) const { return *lattice_ == *o.lattice_ && values_ == o.values_; }

 private:
  std::shared_ptr<const Lattice> lattice_;
  TritVector values_;
};

/// Runs the automaton from the boundary row. On a torus the row after the last one must
/// reproduce the boundary, otherwise ClosureError is thrown.
inline SpinConfig generate_codeword(std::span<const Trit> boundary, const Lattice& lattice) {
  if (boundary.size() != lattice.n()) throw std::invalid_argument("generate_codeword: boundary length must equal n");
  const RowMode mode = lattice.is_torus() ? RowMode::kPeriodic : RowMode::kOpen;
  TritVector values;
  values.reserve(lattice.num_sites());
  TritVector row(boundary.begin(), boundary.end());
  for (std::size_t r = 0; r < lattice.m(); ++r) {
    values.insert(values.end(), row.begin(), row.end());
    if (r + 1 < lattice.m() || lattice.is_torus()) {
      if (row.size() < 2) break;
      row = propagate_row(row, mode);
    }
  }
  if (lattice.is_torus()) {
    TritVector b(boundary.begin(), boundary.end());
    if (row != b) throw ClosureError(lattice.n(), lattice.m(), std::move(b), std::move(row));
  }
  return SpinConfig(lattice, std::move(values));
}

/// The linear code generated by the automaton on one lattice.
///
/// Row i of the generator is the codeword grown from the i-th unit boundary vector, so every
/// codeword is boundary * generator (mod 3).
class HCode {
 public:
  explicit HCode(Lattice lattice) : lattice_(std::make_shared<const Lattice>(std::move(lattice))) {
    const std::size_t n = lattice_->n();
    generator_ = GF3Matrix(n, lattice_->num_sites());
    for (std::size_t i = 0; i < n; ++i) {
      TritVector unit(n);
      unit[i] = Trit(1);
      SpinConfig cw = generate_codeword(unit, *lattice_);
      for (SiteId s = 0; s < lattice_->num_sites(); ++s) generator_.set(i, s, cw[s]);
    }
  }

  const Lattice& lattice() const { return *lattice_; }
  const GF3Matrix& generator() const { return generator_; }
  std::size_t dimension() const { return lattice_->n(); }
  std::size_t length() const { return lattice_->num_sites(); }

  TritVector encode(std::span<const Trit> boundary) const { return generator_.left_multiply(boundary); }

  SpinConfig codeword(std::span<const Trit> boundary) const { return SpinConfig(lattice_, encode(boundary)); }

  /// Number of boundaries, 3^n. Throws if that does not fit in 64 bits.
  std::uint64_t size() const {
    if (dimension() > 40) throw std::overflow_error("HCode::size: 3^n overflows");
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < dimension(); ++i) s *= 3;
    return s;
  }

 private:
  std::shared_ptr<const Lattice> lattice_;
  GF3Matrix generator_;
};

inline GF3Matrix generator_matrix(const Lattice& lattice) { return HCode(lattice).generator(); }

/// Boundary whose base-3 digits spell `index`, least significant digit at position 0.
inline TritVector boundary_from_index(std::uint64_t index, std::size_t n) {
  TritVector b(n);
  for (std::size_t i = 0; i < n; ++i) {
    b[i] = Trit(static_cast<int>(index % 3));
    index /= 3;
  }
  return b;
}

/// Sites whose value changes when delta is added to boundary site `site`.
inline Region light_cone_diff(std::span<const Trit> boundary, std::size_t site, Trit delta, const HCode& code) {
  if (delta.is_zero()) throw std::invalid_argument("light_cone_diff: delta must be nonzero");
  if (site >= boundary.size()) throw std::out_of_range("light_cone_diff: boundary index out of range");
  TritVector shifted(boundary.begin(), boundary.end());
  shifted[site] += delta;
  TritVector a = code.encode(boundary);
  TritVector b = code.encode(shifted);
  std::vector<SiteId> diff;
  for (SiteId s = 0; s < a.size(); ++s)
    if (a[s] != b[s]) diff.push_back(s);
  return Region(std::move(diff));
}

// Codeword text format: a header "# torus n m" or "# patch n m", then one line of digits per row.

inline std::string format_codeword(const SpinConfig& cw) {
  const Lattice& l = cw.lattice();
  std::ostringstream os;
  os << "# " << l.kind_name() << ' ' << l.n() << ' ' << l.m() << '\n';
  for (std::size_t r = 0; r < l.m(); ++r) os << trits_to_digits(cw.row(r)) << '\n';
  return os.str();
}

struct ParsedCodeword {
  Lattice lattice;
  TritVector values;
};

inline ParsedCodeword parse_codeword(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string hash, kind;
  std::size_t n = 0, m = 0;
  if (!(in >> hash >> kind >> n >> m) || hash != "#") throw std::invalid_argument("parse_codeword: bad header");
  Lattice lattice = kind == "torus"   ? Lattice::torus(n, m)
                    : kind == "patch" ? Lattice::patch(n, m)
                                      : throw std::invalid_argument("parse_codeword: unknown lattice kind '" + kind + "'");
  TritVector values;
  std::string line;
  std::getline(in, line);
  for (std::size_t r = 0; r < m; ++r) {
    if (!std::getline(in, line)) throw std::invalid_argument("parse_codeword: missing rows");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != lattice.row_length(r)) throw std::invalid_argument("parse_codeword: wrong row length");
    TritVector row = trits_from_digits(line);
    values.insert(values.end(), row.begin(), row.end());
  }
  return {std::move(lattice), std::move(values)};
}

}  // namespace hcode
