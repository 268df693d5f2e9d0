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
#include <cstddef>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcode {

using SiteId = std::size_t;

struct Coord {
  std::size_t row = 0;
  std::size_t col = 0;
  bool operator==(const Coord&) const = default;
};

/// Three sites of an up-triangle: two neighbours of one row and the apex above them.
struct Triangle {
  SiteId left;
  SiteId right;
  SiteId apex;
  std::array<SiteId, 3> sites() const { return {left, right, apex}; }
  bool operator==(const Triangle&) const = default;
};

/// Triangular lattice, either an n x m torus or an open patch whose rows shrink by one per layer.
///
/// Sites are numbered row-major. Row 0 is the boundary; row r+1 is produced from row r by the
/// neutralization rule, with apex (r+1, c) sitting above base sites (r, c) and (r, c+1).
class Lattice {
 public:
  enum class Kind { kTorus, kPatch };

  static Lattice torus(std::size_t n, std::size_t m) {
    if (n < 2 || m < 1) throw std::invalid_argument("torus: need n >= 2 and m >= 1");
    Lattice l(Kind::kTorus, n, m);
    for (std::size_t r = 0; r < m; ++r) l.row_offsets_.push_back(r * n);
    l.row_offsets_.push_back(n * m);
    l.build_triangles();
    return l;
  }

  static Lattice patch(std::size_t n, std::size_t m) {
    if (n < 2 || m < 1 || m > n) throw std::invalid_argument("patch: need n >= 2 and 1 <= m <= n");
    Lattice l(Kind::kPatch, n, m);
    std::size_t offset = 0;
    for (std::size_t r = 0; r < m; ++r) {
      l.row_offsets_.push_back(offset);
      offset += n - r;
    }
    l.row_offsets_.push_back(offset);
    l.build_triangles();
    return l;
  }

  Kind kind() const { return kind_; }
  bool is_torus() const { return kind_ == Kind::kTorus; }
  std::string kind_name() const { return is_torus() ? "torus" : "patch"; }
  /// Boundary length.
  std::size_t n() const { return n_; }
  /// Number of rows.
  std::size_t m() const { return m_; }
  std::size_t num_sites() const { return row_offsets_.back(); }
  std::size_t row_length(std::size_t r) const { return row_offsets_.at(r + 1) - row_offsets_.at(r); }

  SiteId id(std::size_t row, std::size_t col) const {
    if (row >= m_ || col >= row_length(row)) throw std::out_of_range("Lattice::id: coordinate outside lattice");
    return row_offsets_[row] + col;
  }
  SiteId id(Coord c) const { return id(c.row, c.col); }

  Coord coord(SiteId s) const {
    if (s >= num_sites()) throw std::out_of_range("Lattice::coord: site id outside lattice");
    auto it = std::upper_bound(row_offsets_.begin(), row_offsets_.end(), s);
    std::size_t row = static_cast<std::size_t>(it - row_offsets_.begin()) - 1;
    return {row, s - row_offsets_[row]};
  }

  const std::vector<Triangle>& up_triangles() const { return triangles_; }

  /// Triangles that contain the site, in any role.
  const std::vector<std::size_t>& triangles_of(SiteId s) const { return site_triangles_.at(s); }

  bool operator==(const Lattice& o) const { return kind_ == o.kind_ && n_ == o.n_ && m_ == o.m_; }

 private:
  Lattice(Kind k, std::size_t n, std::size_t m) : kind_(k), n_(n), m_(m) {}

  void build_triangles() {
    if (is_torus()) {
      for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t c = 0; c < n_; ++c)
          triangles_.push_back({id(r, c), id(r, (c + 1) % n_), id((r + 1) % m_, c)});
    } else {
      for (std::size_t r = 0; r + 1 < m_; ++r)
        for (std::size_t c = 0; c + 1 < row_length(r); ++c)
          triangles_.push_back({id(r, c), id(r, c + 1), id(r + 1, c)});
    }
    site_triangles_.assign(num_sites(), {});
    for (std::size_t t = 0; t < triangles_.size(); ++t) {
      for (SiteId s : triangles_[t].sites()) {
        auto& list = site_triangles_[s];
        if (list.empty() || list.back() != t) list.push_back(t);
      }
    }
  }

  Kind kind_;
  std::size_t n_;
  std::size_t m_;
  std::vector<std::size_t> row_offsets_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<std::size_t>> site_triangles_;
};

inline const std::vector<Triangle>& up_triangles(const Lattice& l) { return l.up_triangles(); }

/// Closed cycles of a torus: rows, fixed-column vertical cycles, and the
/// sheared family {(r, c - r mod n)} which only closes when n == m.
struct Cycles {
  std::vector<std::vector<SiteId>> rows;
  std::vector<std::vector<SiteId>> diagonals;
  std::vector<std::vector<SiteId>> sheared_diagonals;
};

inline Cycles cycles(const Lattice& l) {
  if (!l.is_torus()) throw std::invalid_argument("cycles: only defined on a torus");
  Cycles out;
  for (std::size_t r = 0; r < l.m(); ++r) {
    std::vector<SiteId> row;
    for (std::size_t c = 0; c < l.n(); ++c) row.push_back(l.id(r, c));
    out.rows.push_back(std::move(row));
  }
  for (std::size_t c = 0; c < l.n(); ++c) {
    std::vector<SiteId> diag;
    for (std::size_t r = 0; r < l.m(); ++r) diag.push_back(l.id(r, c));
    out.diagonals.push_back(std::move(diag));
  }
  if (l.n() == l.m()) {
    const std::size_t n = l.n();
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<SiteId> diag;
      for (std::size_t r = 0; r < n; ++r) diag.push_back(l.id(r, (c + n - r % n) % n));
      out.sheared_diagonals.push_back(std::move(diag));
    }
  }
  return out;
}

/// A sorted set of distinct site ids.
class Region {
 public:
  Region() = default;
  Region(std::initializer_list<SiteId> sites) : sites_(sites) { normalize(); }
  explicit Region(std::vector<SiteId> sites) : sites_(std::move(sites)) { normalize(); }

  const std::vector<SiteId>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  bool empty() const { return sites_.empty(); }
  bool contains(SiteId s) const { return std::binary_search(sites_.begin(), sites_.end(), s); }

  Region with(SiteId s) const {
    std::vector<SiteId> v = sites_;
    v.push_back(s);
    return Region(std::move(v));
  }

  Region complement(const Lattice& l) const {
    std::vector<SiteId> out;
    for (SiteId s = 0; s < l.num_sites(); ++s)
      if (!contains(s)) out.push_back(s);
    return Region(std::move(out));
  }

  bool fits(const Lattice& l) const { return sites_.empty() || sites_.back() < l.num_sites(); }

  bool intersects(const Region& o) const {
    std::vector<SiteId> tmp;
    std::set_intersection(sites_.begin(), sites_.end(), o.sites_.begin(), o.sites_.end(), std::back_inserter(tmp));
    return !tmp.empty();
  }

  friend Region operator|(const Region& a, const Region& b) {
    std::vector<SiteId> v = a.sites_;
    v.insert(v.end(), b.sites_.begin(), b.sites_.end());
    return Region(std::move(v));
  }

  bool operator==(const Region&) const = default;

 private:
  void normalize() {
    std::sort(sites_.begin(), sites_.end());
    sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
  }

  std::vector<SiteId> sites_;
};

/// Sites sharing an up-triangle with s, excluding s itself, sorted.
inline std::vector<SiteId> triangle_neighbors(SiteId s, const Lattice& l) {
  std::set<SiteId> out;
  for (std::size_t t : l.triangles_of(s))
    for (SiteId x : l.up_triangles()[t].sites())
      if (x != s) out.insert(x);
  return {out.begin(), out.end()};
}

/// Sites outside the region that share an up-triangle with some site inside it.
inline std::vector<SiteId> region_frontier(const Region& region, const Lattice& l) {
  std::set<SiteId> out;
  for (SiteId s : region.sites())
    for (SiteId x : triangle_neighbors(s, l))
      if (!region.contains(x)) out.insert(x);
  return {out.begin(), out.end()};
}

/// Every region obtained by adding one frontier site, in increasing order of the added id.
inline std::vector<Region> grow_region(const Region& region, const Lattice& l) {
  if (region.empty()) throw std::invalid_argument("grow_region: region must be non-empty");
  if (!region.fits(l)) throw std::out_of_range("grow_region: region outside lattice");
  std::vector<Region> out;
  for (SiteId s : region_frontier(region, l)) out.push_back(region.with(s));
  return out;
}

/// Translate a site of a torus by (dr, dc).
inline SiteId translate(const Lattice& l, SiteId s, std::size_t dr, std::size_t dc) {
  if (!l.is_torus()) throw std::invalid_argument("translate: only defined on a torus");
  Coord c = l.coord(s);
  return l.id((c.row + dr) % l.m(), (c.col + dc) % l.n());
}

}  // namespace hcode
