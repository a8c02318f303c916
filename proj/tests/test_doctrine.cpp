#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "expokit/doctrine.hpp"

using namespace expokit;

namespace {

Horizontal id_map(int n) {
  Horizontal h(n);
  std::iota(h.begin(), h.end(), 0);
  return h;
}

MeetMap const_top(const FinLattice& src, const FinLattice& tgt) {
  return MeetMap{src, tgt, std::vector<int>((size_t)src.size(), tgt.top)};
}

}  // namespace

TEST_CASE("identity verticals") {
  auto c2 = FinPoset::chain(2);
  auto id_pos = std::get<OrderIdeal>(v_identity(Doctrine::Pos, c2));
  CHECK(id_pos.pairs == std::vector<Mask>{0b11, 0b10});
  CHECK(id_pos.is_valid());
  auto ab = FinPoset::antichain(2);
  auto id_rel = std::get<OrderIdeal>(v_identity(Doctrine::Rel, ab));
  CHECK(id_rel.pairs == std::vector<Mask>{0b01, 0b10});
  auto id_cat =
      std::get<Profunctor>(v_identity(Doctrine::Cat, FinCat::from_poset(c2)));
  CHECK(id_cat.is_valid());
  CHECK(id_cat.nelem == std::vector<std::vector<int>>{{1, 1}, {0, 1}});
  auto id_top = std::get<MeetMap>(v_identity(Doctrine::Top, FinSpace::sierpinski()));
  CHECK(id_top.is_valid());
  CHECK(id_top.map == std::vector<int>{0, 1, 2});
}

TEST_CASE("vertical composition") {
  auto s3 = open_lattice(FinSpace::sierpinski()).lat;
  for (auto& m : all_meet_maps(s3, s3)) {
    // unit laws
    CHECK(meet_compose(meet_identity(s3), m).same_map(m));
    CHECK(meet_compose(m, meet_identity(s3)).same_map(m));
    // constant-top absorbs
    CHECK(meet_compose(m, const_top(s3, s3)).same_map(const_top(s3, s3)));
    // closure: composites still preserve meets
    for (auto& n : all_meet_maps(s3, s3)) CHECK(meet_compose(m, n).is_valid());
  }
  // Rel: {(a,x)} o {(x,p)} = {(a,p)}
  auto a2 = FinPoset::antichain(2);
  OrderIdeal r1{a2, a2, {0b01, 0}};  // (a,x) only
  OrderIdeal r2{a2, a2, {0b01, 0}};  // (x,p) only
  CHECK(ideal_compose(r1, r2).pairs == std::vector<Mask>{0b01, 0});
  // OrderIdeal closure and associativity on a small family
  auto c2 = FinPoset::chain(2);
  auto fam = all_order_ideals(c2, c2);
  CHECK(fam.size() == 6);
  for (auto& m : fam)
    for (auto& n : fam) {
      CHECK(ideal_compose(m, n).is_valid());
      for (auto& k : fam)
        CHECK(ideal_compose(ideal_compose(m, n), k)
                  .same_pairs(ideal_compose(m, ideal_compose(n, k))));
    }
}

TEST_CASE("meet map enumeration") {
  auto c2l = *FinLattice::from_poset(FinPoset::chain(2));
  auto c3l = *FinLattice::from_poset(FinPoset::chain(3));
  CHECK(all_meet_maps(c2l, c2l).size() == 2);
  CHECK(all_meet_maps(c3l, c3l).size() == 6);  // monotone on a chain, top fixed
  for (auto& m : all_meet_maps(c3l, c2l)) CHECK(m.is_valid());
}

TEST_CASE("cells in flat doctrines") {
  FinSpace s = FinSpace::sierpinski();
  auto l = open_lattice(s).lat;
  auto idm = meet_identity(l);
  auto ct = const_top(l, l);
  auto ids = id_map(s.size());
  DObj so{s};
  // identity boundary, m = n
  CHECK(cell_exists(Doctrine::Top, so, so, so, so, ids, idm, idm, ids));
  // n(empty) = top is not below m(empty) = empty
  CHECK_FALSE(cell_exists(Doctrine::Top, so, so, so, so, ids, idm, ct, ids));
  CHECK(cell_exists(Doctrine::Top, so, so, so, so, ids, ct, idm, ids));
  // Pos: containment is the cell
  auto c2 = FinPoset::chain(2);
  auto full = OrderIdeal{c2, c2, {0b11, 0b11}};
  auto idp = ideal_identity(c2);
  DObj po{c2};
  CHECK(cell_exists(Doctrine::Pos, po, po, po, po, id_map(2), idp, full, id_map(2)));
  CHECK_FALSE(
      cell_exists(Doctrine::Pos, po, po, po, po, id_map(2), full, idp, id_map(2)));
}

TEST_CASE("cat cells") {
  auto b = FinCat::from_poset(FinPoset::chain(2));
  auto h = Profunctor::hom_of(b);
  auto idf = FinFunctor::identity(b);
  // identity family is a natural cell hom -> hom
  std::vector<std::vector<std::vector<int>>> data{{{0}, {0}}, {{}, {0}}};
  CHECK(cell_check(idf, h, h, idf, data));
  // wrong size rejected
  data[0][1].clear();
  CHECK_FALSE(cell_check(idf, h, h, idf, data));
}

TEST_CASE("special iso") {
  auto l = open_lattice(FinSpace::sierpinski()).lat;
  auto idm = meet_identity(l);
  CHECK(special_iso(Doctrine::Top, idm, idm));
  CHECK_FALSE(special_iso(Doctrine::Top, idm, const_top(l, l)));
  auto a = FinCat::from_poset(FinPoset::from_pairs({"x", "y"}, {{0, 1}}));
  CHECK(special_iso(Doctrine::Cat, Profunctor::hom_of(a), Profunctor::hom_of(a)));
}

TEST_CASE("zero objects") {
  // the vertical factored through 0 receives a cell from every n
  for (int n0 = 0; n0 <= 3; ++n0)
    for (auto& p0 : posets_up_to_iso(n0))
      for (int n1 = 0; n1 <= 2; ++n1)
        for (auto& p1 : posets_up_to_iso(n1)) {
          // Pos: composite through the empty poset is the empty ideal
          OrderIdeal thru0{p0, p1, std::vector<Mask>((size_t)p0.size(), 0)};
          for (auto& n : all_order_ideals(p0, p1))
            CHECK(cell_exists(Doctrine::Pos, DObj{p0}, DObj{p0}, DObj{p1}, DObj{p1},
                              id_map(p0.size()), thru0, n, id_map(p1.size())));
          // Top: composite through the empty space is constant top
          auto l0 = open_lattice(FinSpace{p0}).lat;
          auto l1 = open_lattice(FinSpace{p1}).lat;
          auto thru0t = const_top(l0, l1);
          for (auto& n : all_meet_maps(l0, l1))
            CHECK(cell_exists(Doctrine::Top, DObj{FinSpace{p0}}, DObj{FinSpace{p0}},
                              DObj{FinSpace{p1}}, DObj{FinSpace{p1}},
                              id_map(p0.size()), thru0t, n, id_map(p1.size())));
        }
  CHECK(std::get<FinSpace>(zero_object(Doctrine::Top)).size() == 0);
  CHECK(std::get<FinLattice>(zero_object(Doctrine::Loc)).size() == 1);
}

TEST_CASE("products") {
  auto c2 = FinPoset::chain(2);
  // X x terminal = X
  auto xt = std::get<FinPoset>(product(Doctrine::Pos, c2, FinPoset::chain(1)));
  CHECK(xt.canonical_key() == c2.canonical_key());
  // 2-chain x 2-chain = 2x2 grid
  auto grid = std::get<FinPoset>(product(Doctrine::Pos, c2, c2));
  CHECK(down_sets(grid).size() == 6);
  auto [p1, p2] = product_projections(Doctrine::Pos, DObj{c2}, DObj{c2});
  CHECK(is_monotone(grid, c2, p1));
  CHECK(is_monotone(grid, c2, p2));
  // Rel: product of antichains is an antichain
  auto ra = std::get<FinPoset>(
      product(Doctrine::Rel, FinPoset::antichain(2), FinPoset::antichain(3)));
  CHECK(obj_valid(Doctrine::Rel, ra));
  CHECK(ra.size() == 6);
  // Loc: localic product of two Sierpinski frames = opens of 2x2 grid
  auto s3 = open_lattice(FinSpace::sierpinski()).lat;
  auto lp = std::get<FinLattice>(product(Doctrine::Loc, s3, s3));
  CHECK(lp.size() == 6);
  auto [q1, q2] = product_projections(Doctrine::Loc, DObj{s3}, DObj{s3});
  CHECK(q1.size() == 3);
  // frame maps preserve meets and top
  MeetMap f1{s3, lp, q1};
  MeetMap f2{s3, lp, q2};
  CHECK(f1.is_valid());
  CHECK(f2.is_valid());
}

TEST_CASE("birkhoff duality") {
  // spectrum of the 3-chain frame is Sierpinski
  auto s3 = open_lattice(FinSpace::sierpinski()).lat;
  auto sf = frame_to_space(s3);
  CHECK(sf.space.specialization.canonical_key() ==
        FinSpace::sierpinski().specialization.canonical_key());
  // round trip on every distributive lattice with <= 6 elements
  for (int n = 1; n <= 6; ++n)
    for (auto& l : lattices_up_to_iso(n)) {
      if (!l.is_distributive()) continue;
      auto back = open_lattice(frame_to_space(l).space).lat;
      CHECK(back.size() == l.size());
      CHECK(back.order().canonical_key() == l.order().canonical_key());
    }
}
