#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "expokit/lattice.hpp"
#include "expokit/poset.hpp"
#include "expokit/space.hpp"

using namespace expokit;

namespace {

// independent brute-force oracle: subsets closed downward
std::vector<Mask> down_sets_oracle(const FinPoset& p) {
  std::vector<Mask> out;
  for (Mask s = 0; s <= full_mask(p.size()); ++s) {
    bool ok = true;
    for (int x = 0; x < p.size() && ok; ++x)
      for (int y = 0; y < p.size() && ok; ++y)
        if (bit(s, x) && p.leq(y, x) && !bit(s, y)) ok = false;
    if (ok) out.push_back(s);
    if (p.size() == 0) break;
  }
  return out;
}

FinPoset grid22() {
  // 2x2 grid: bottom 0, middle 1,2, top 3
  return FinPoset::from_pairs({"00", "01", "10", "11"},
                              {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("down_sets basics") {
  CHECK(down_sets(FinPoset::chain(1)) == std::vector<Mask>{0, 1});
  CHECK(down_sets(FinPoset::chain(2)) == std::vector<Mask>{0, 1, 3});
  CHECK(down_sets(grid22()).size() == 6);
  for (int n = 0; n <= 4; ++n)
    for (auto& p : posets_up_to_iso(n))
      CHECK(down_sets(p) == down_sets_oracle(p));
}

TEST_CASE("from_pairs rejects cycles") {
  CHECK_THROWS_AS(FinPoset::from_pairs({"a", "b"}, {{0, 1}, {1, 0}}),
                  invalid_instance);
}

TEST_CASE("interior") {
  FinSpace s2 = FinSpace::sierpinski();
  CHECK(s2.interior(0b10) == 0);            // {1} has empty interior
  CHECK(s2.interior(0b01) == 0b01);
  FinSpace a3{FinPoset::chain(3)};
  CHECK(a3.interior(0b110) == 0);           // {1,2} in Alexandroff 3-chain
  // interior of an open set is itself; monotone, deflationary, idempotent
  for (int n = 0; n <= 5; ++n)
    for (auto& p : posets_up_to_iso(n)) {
      FinSpace y{p};
      for (Mask s = 0; s <= full_mask(n); ++s) {
        Mask i = y.interior(s);
        CHECK((i & ~s) == 0);
        CHECK(y.interior(i) == i);
        CHECK(y.is_open(i));
        if (y.is_open(s)) CHECK(i == s);
        for (Mask t = s; t <= full_mask(n); t = (t + 1) | s) {
          CHECK((y.interior(s) & ~y.interior(t)) == 0);
          if (t == full_mask(n)) break;
        }
        if (n == 0) break;
      }
    }
}

TEST_CASE("open_lattice") {
  CHECK(open_lattice(FinSpace::empty()).lat.size() == 1);
  auto s = open_lattice(FinSpace::sierpinski());
  CHECK(s.lat.size() == 3);
  CHECK(s.lat.is_valid());
  // 3-chain
  CHECK(s.lat.leq(0, 1));
  CHECK(s.lat.leq(1, 2));
  auto d = open_lattice(FinSpace{FinPoset::antichain(2)});
  CHECK(d.lat.size() == 4);
  CHECK(d.lat.is_distributive());
  // distributive for every small space
  for (int n = 0; n <= 5; ++n)
    for (auto& p : posets_up_to_iso(n)) {
      auto ol = open_lattice(FinSpace{p});
      CHECK(ol.lat.is_valid());
      CHECK(ol.lat.is_distributive());
    }
}

TEST_CASE("scott_opens") {
  auto l1 = FinLattice::one();
  auto f1 = scott_opens(l1);
  CHECK(f1.members == std::vector<Mask>{0, 1});
  auto c2 = *FinLattice::from_poset(FinPoset::chain(2));
  auto f2 = scott_opens(c2);
  CHECK(f2.members == std::vector<Mask>{0b00, 0b10, 0b11});
  auto b4 = open_lattice(FinSpace{FinPoset::antichain(2)}).lat;
  CHECK(scott_opens(b4).members.size() == 6);
  // finite-lattice collapse: scott opens = up-sets, |L| <= 6
  for (int n = 1; n <= 6; ++n)
    for (auto& l : lattices_up_to_iso(n))
      CHECK(scott_opens(l).members == up_set_family(l));
}

TEST_CASE("way_below and continuity") {
  auto c2 = *FinLattice::from_poset(FinPoset::chain(2));
  CHECK_FALSE(way_below(c2, 1, 0));
  CHECK(way_below(c2, 0, 1));
  auto b4 = open_lattice(FinSpace{FinPoset::antichain(2)}).lat;
  // atom way below its join with the other atom
  CHECK(way_below(b4, 1, b4.join(1, 2)));
  // collapse: u << v iff u <= v on all small lattices; all continuous
  for (int n = 1; n <= 6; ++n)
    for (auto& l : lattices_up_to_iso(n)) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          CHECK(way_below(l, u, v) == l.leq(u, v));
      CHECK(is_continuous_lattice(l));
    }
  // M3: bottom, three atoms, top
  auto m3 = FinPoset::from_pairs({"b", "x", "y", "z", "t"},
                                 {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  auto lm3 = FinLattice::from_poset(m3);
  REQUIRE(lm3.has_value());
  CHECK_FALSE(lm3->is_distributive());
  CHECK(is_continuous_lattice(*lm3));
}

TEST_CASE("poset enumeration counts") {
  CHECK(posets_up_to_iso(0).size() == 1);
  CHECK(posets_up_to_iso(1).size() == 1);
  CHECK(posets_up_to_iso(2).size() == 2);
  CHECK(posets_up_to_iso(3).size() == 5);
  CHECK(posets_up_to_iso(4).size() == 16);
  CHECK(lattices_up_to_iso(5).size() == 5);
}
