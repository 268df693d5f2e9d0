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

#include "hcode/lattice.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hcode;

TEST(lattice, torus_counts) {
  const Lattice l = Lattice::torus(3, 3);
  EXPECT_EQ(l.num_sites(), 9u);
  EXPECT_EQ(l.up_triangles().size(), 9u);
  const Lattice big = Lattice::torus(9, 9);
  EXPECT_EQ(big.num_sites(), 81u);
  EXPECT_EQ(big.up_triangles().size(), 81u);
  EXPECT_THROW(Lattice::torus(1, 3), std::invalid_argument);
}

TEST(lattice, patch_rows_shrink) {
  const Lattice p = Lattice::patch(3, 2);
  EXPECT_EQ(p.num_sites(), 5u);
  EXPECT_EQ(p.row_length(0), 3u);
  EXPECT_EQ(p.row_length(1), 2u);
  EXPECT_EQ(p.up_triangles().size(), 2u);
  EXPECT_EQ(Lattice::patch(4, 4).num_sites(), 10u);
  EXPECT_THROW(Lattice::patch(3, 4), std::invalid_argument);
}

TEST(lattice, triangle_geometry) {
  const Lattice l = Lattice::torus(3, 3);
  // Base (0,0),(0,1) with apex (1,0); ids follow the row-major 1..9 labels shifted by one.
  EXPECT_EQ(l.up_triangles()[0], (Triangle{0, 1, 3}));
  // Wrapped triangle: base (2,2),(2,0), apex (0,2).
  EXPECT_EQ(l.up_triangles()[8], (Triangle{8, 6, 2}));
  for (SiteId s = 0; s < l.num_sites(); ++s) EXPECT_EQ(l.triangles_of(s).size(), 3u);
}

TEST(lattice, coordinates_round_trip) {
  for (const Lattice& l : {Lattice::torus(5, 4), Lattice::patch(6, 4)}) {
    for (SiteId s = 0; s < l.num_sites(); ++s) EXPECT_EQ(l.id(l.coord(s)), s);
  }
  EXPECT_THROW(Lattice::torus(3, 3).coord(9), std::out_of_range);
  EXPECT_THROW(Lattice::patch(3, 3).id(2, 1), std::out_of_range);
}

TEST(lattice, cycles_cover_each_site_once_per_family) {
  const Lattice l = Lattice::torus(9, 9);
  const Cycles c = cycles(l);
  for (const auto* family : {&c.rows, &c.diagonals, &c.sheared_diagonals}) {
    ASSERT_EQ(family->size(), 9u);
    std::multiset<SiteId> seen;
    for (const auto& cyc : *family) seen.insert(cyc.begin(), cyc.end());
    EXPECT_EQ(seen.size(), 81u);
    EXPECT_EQ(std::set<SiteId>(seen.begin(), seen.end()).size(), 81u);
  }
  EXPECT_THROW(cycles(Lattice::patch(3, 3)), std::invalid_argument);
}

TEST(region, set_operations) {
  const Region a{3, 1, 1, 2};
  EXPECT_EQ(a.sites(), (std::vector<SiteId>{1, 2, 3}));
  EXPECT_TRUE(a.contains(2));
  EXPECT_FALSE(a.contains(0));
  EXPECT_EQ((a | Region{0, 3}).size(), 4u);
  EXPECT_TRUE(a.intersects(Region{3, 7}));
  EXPECT_FALSE(a.intersects(Region{4}));
  const Lattice l = Lattice::torus(3, 3);
  EXPECT_EQ(a.complement(l).size(), 6u);
  EXPECT_FALSE(Region{9}.fits(l));
}

TEST(region, growth_adds_one_triangle_neighbour) {
  const Lattice l = Lattice::torus(9, 9);
  const Region start{l.id(4, 4)};
  const auto grown = grow_region(start, l);
  // Six triangle neighbours on the triangular lattice.
  EXPECT_EQ(grown.size(), 6u);
  for (const Region& g : grown) EXPECT_EQ(g.size(), 2u);
  EXPECT_THROW(grow_region(Region{}, l), std::invalid_argument);
}

TEST(lattice, translation_preserves_triangles) {
  const Lattice l = Lattice::torus(9, 9);
  std::set<std::array<SiteId, 3>> tris;
  for (const Triangle& t : l.up_triangles()) tris.insert(t.sites());
  for (const Triangle& t : l.up_triangles()) {
    const std::array<SiteId, 3> moved{translate(l, t.left, 2, 5), translate(l, t.right, 2, 5),
                                      translate(l, t.apex, 2, 5)};
    EXPECT_TRUE(tris.count(moved));
  }
}
