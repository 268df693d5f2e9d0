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
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hcode {

/// An element of Z_3, always stored in canonical form {0, 1, 2}.
///
/// Spin labels {-1, 0, 1} are accepted through `from_spin` and map -1 to 2.
class Trit {
 public:
  constexpr Trit() = default;
  constexpr explicit Trit(int v) : value_(static_cast<std::uint8_t>(((v % 3) + 3) % 3)) {}

  static constexpr Trit from_spin(int spin) { return Trit(spin); }

  constexpr std::uint8_t value() const { return value_; }
  constexpr int as_int() const { return value_; }
  /// Representative in {-1, 0, 1}.
  constexpr int as_spin() const { return value_ == 2 ? -1 : value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  constexpr Trit operator+(Trit o) const { return Trit(value_ + o.value_); }
  constexpr Trit operator-(Trit o) const { return Trit(value_ + 3 - o.value_); }
  constexpr Trit operator*(Trit o) const { return Trit(value_ * o.value_); }
  constexpr Trit operator-() const { return Trit(3 - value_); }
  constexpr Trit& operator+=(Trit o) { return *this = *this + o; }
  constexpr Trit& operator-=(Trit o) { return *this = *this - o; }

  /// Multiplicative inverse; 1 and 2 are self-inverse.
  constexpr Trit inverse() const {
    if (value_ == 0) throw std::domain_error("Trit: zero has no inverse");
    return *this;
  }

  constexpr bool operator==(const Trit&) const = default;
  constexpr auto operator<=>(const Trit&) const = default;

 private:
  std::uint8_t value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Trit t) { return os << static_cast<int>(t.value()); }

using TritVector = std::vector<Trit>;

inline TritVector trits_from_digits(std::string_view digits) {
  TritVector out;
  out.reserve(digits.size());
  for (char ch : digits) {
    if (ch < '0' || ch > '2') {
      throw std::invalid_argument("trits_from_digits: expected only '0', '1', '2', got '" + std::string(1, ch) + "'");
    }
    out.emplace_back(ch - '0');
  }
  return out;
}

inline std::string trits_to_digits(std::span<const Trit> v) {
  std::string s;
  s.reserve(v.size());
  for (Trit t : v) s.push_back(static_cast<char>('0' + t.value()));
  return s;
}

inline TritVector add(std::span<const Trit> a, std::span<const Trit> b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  TritVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline TritVector scale(std::span<const Trit> a, Trit f) {
  TritVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * f;
  return out;
}

/// Number of nonzero entries.
inline std::size_t weight(std::span<const Trit> v) {
  std::size_t w = 0;
  for (Trit t : v) w += t.is_zero() ? 0 : 1;
  return w;
}

/// Dense matrix over GF(3). Dimensions are fixed at construction.
class GF3Matrix {
 public:
  GF3Matrix() = default;
  GF3Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static GF3Matrix identity(std::size_t n) {
    GF3Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Trit(1));
    return m;
  }

  static GF3Matrix from_rows(const std::vector<TritVector>& rows) {
    if (rows.empty()) return {};
    GF3Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw std::invalid_argument("GF3Matrix::from_rows: ragged rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
  }

  /// Parses a digit grid: one row per line, digits '0'/'1'/'2'. Blank lines are ignored.
  static GF3Matrix parse(std::string_view text) {
    std::vector<TritVector> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!line.empty()) rows.push_back(trits_from_digits(line));
      pos = end + 1;
    }
    return from_rows(rows);
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
      s += trits_to_digits(row(r));
      s.push_back('\n');
    }
    return s;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Trit at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Trit v) { data_[r * cols_ + c] = v; }

  std::span<const Trit> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  TritVector column(std::size_t c) const {
    TritVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
  }

  GF3Matrix select_columns(std::span<const std::size_t> cols) const {
    GF3Matrix out(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= cols_) throw std::out_of_range("select_columns: column index out of range");
        out.set(r, j, at(r, cols[j]));
      }
    }
    return out;
  }

  GF3Matrix transpose() const {
    GF3Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
    return t;
  }

  /// Row vector times matrix: v (length rows) * M.
  TritVector left_multiply(std::span<const Trit> v) const {
    if (v.size() != rows_) throw std::invalid_argument("left_multiply: dimension mismatch");
    std::vector<unsigned> acc(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      unsigned f = v[r].value();
      if (f == 0) continue;
      const Trit* row_ptr = data_.data() + r * cols_;
      for (std::size_t c = 0; c < cols_; ++c) acc[c] += f * row_ptr[c].value();
    }
    TritVector out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = Trit(static_cast<int>(acc[c] % 3));
    return out;
  }

  /// Matrix times column vector.
  TritVector apply(std::span<const Trit> v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    TritVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      unsigned acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c).value() * v[c].value();
      out[r] = Trit(static_cast<int>(acc % 3));
    }
    return out;
  }

  bool operator==(const GF3Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Trit> data_;
};

inline std::ostream& operator<<(std::ostream& os, const GF3Matrix& m) { return os << m.to_string(); }

inline GF3Matrix mat_mul(const GF3Matrix& a, const GF3Matrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "mat_mul: dimension mismatch (" << a.rows() << "x" << a.cols() << ") * (" << b.rows() << "x" << b.cols()
        << ")";
    throw std::invalid_argument(msg.str());
  }
  GF3Matrix out(a.rows(), b.cols());
  std::vector<unsigned> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      unsigned f = a.at(i, k).value();
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += f * b.at(k, j).value();
    }
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, j, Trit(static_cast<int>(acc[j] % 3)));
  }
  return out;
}

inline GF3Matrix operator*(const GF3Matrix& a, const GF3Matrix& b) { return mat_mul(a, b); }

inline GF3Matrix mat_add(const GF3Matrix& a, const GF3Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("mat_add: dimension mismatch");
  GF3Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c) + b.at(r, c));
  return out;
}

inline GF3Matrix mat_scale(const GF3Matrix& a, Trit f) {
  GF3Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c) * f);
  return out;
}

/// Square-and-multiply power. m^0 is the identity.
inline GF3Matrix mat_pow(const GF3Matrix& m, std::uint64_t e) {
  if (!m.is_square()) throw std::invalid_argument("mat_pow: matrix must be square");
  GF3Matrix result = GF3Matrix::identity(m.rows());
  GF3Matrix base = m;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

/// Reduced row echelon form with first-nonzero pivoting.
struct RowEchelon {
  GF3Matrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

inline RowEchelon row_reduce(GF3Matrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t p = pivot_row;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Trit tmp = m.at(p, j);
        m.set(p, j, m.at(pivot_row, j));
        m.set(pivot_row, j, tmp);
      }
    }
    Trit inv = m.at(pivot_row, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(pivot_row, j, m.at(pivot_row, j) * inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      Trit f = m.at(r, c);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(r, j, m.at(r, j) - f * m.at(pivot_row, j));
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const GF3Matrix& m) { return row_reduce(m).rank(); }

/// Basis of {v : M v = 0}. One vector per free column, with a 1 in that column.
inline std::vector<TritVector> kernel_basis(const GF3Matrix& m) {
  RowEchelon rref = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rref.pivot_columns) is_pivot[c] = true;
  std::vector<TritVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    TritVector v(m.cols());
    v[free] = Trit(1);
    for (std::size_t i = 0; i < rref.pivot_columns.size(); ++i) {
      v[rref.pivot_columns[i]] = -rref.reduced.at(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline bool is_invertible(const GF3Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

inline constexpr std::uint64_t kDefaultOrderCap = 1'000'000;

/// Smallest e >= 1 with m^e = I, or nullopt if none is found up to `cap`.
/// Throws std::domain_error for singular matrices, which have no order.
inline std::optional<std::uint64_t> multiplicative_order(const GF3Matrix& m, std::uint64_t cap = kDefaultOrderCap) {
  if (!m.is_square()) throw std::invalid_argument("multiplicative_order: matrix must be square");
  if (!is_invertible(m)) throw std::domain_error("multiplicative_order: singular matrix has no multiplicative order");
  const GF3Matrix id = GF3Matrix::identity(m.rows());
  GF3Matrix p = m;
  for (std::uint64_t e = 1; e <= cap; ++e) {
    if (p == id) return e;
    p = p * m;
  }
  return std::nullopt;
}

}  // namespace hcode
