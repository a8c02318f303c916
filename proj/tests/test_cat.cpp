#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "expokit/cat.hpp"

using namespace expokit;

namespace {

FinCat z2() {
  FinCat c;
  c.obj_names = {"*"};
  c.mor_names = {"1", "x"};
  c.src = {0, 0};
  c.tgt = {0, 0};
  c.id_of = {0};
  c.comp = {{0, 1}, {1, 0}};  // x.x = 1
  return c;
}

// independent oracle for the coend quotient: reflexive-symmetric-transitive
// closure of the generating relation by boolean matrix saturation
int classes_oracle(const Profunctor& m, const Profunctor& n, int a, int e) {
  std::vector<std::array<int, 3>> ts;
  for (int b = 0; b < m.c.nobj(); ++b)
    for (int y = 0; y < n.nelem[b][e]; ++y)
      for (int x = 0; x < m.nelem[a][b]; ++x) ts.push_back({b, y, x});
  int k = (int)ts.size();
  auto idx = [&](int b, int y, int x) {
    for (int i = 0; i < k; ++i)
      if (ts[i] == std::array<int, 3>{b, y, x}) return i;
    return -1;
  };
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) rel[i][i] = true;
  for (int g = 0; g < m.c.nmor(); ++g) {
    int b = m.c.src[g], b2 = m.c.tgt[g];
    for (int y = 0; y < n.nelem[b2][e]; ++y)
      for (int x = 0; x < m.nelem[a][b]; ++x) {
        int i = idx(b, n.act_l[g][e][y], x);
        int j = idx(b2, y, m.act_r[g][a][x]);
        rel[i][j] = rel[j][i] = true;
      }
  }
  for (int w = 0; w < k; ++w)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (rel[i][w] && rel[w][j]) rel[i][j] = true;
  int cls = 0;
  std::vector<bool> seen(k, false);
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    ++cls;
    for (int j = 0; j < k; ++j)
      if (rel[i][j]) seen[j] = true;
  }
  return cls;
}

void check_composite_against_oracle(const Profunctor& m, const Profunctor& n) {
  auto comp = compose_prof(m, n);
  REQUIRE(comp.prof.is_valid());
  for (int a = 0; a < m.a.nobj(); ++a)
    for (int e = 0; e < n.c.nobj(); ++e)
      CHECK(comp.prof.nelem[a][e] == classes_oracle(m, n, a, e));
}

}  // namespace

TEST_CASE("category construction") {
  auto c2 = FinCat::from_poset(FinPoset::chain(2));
  CHECK(c2.is_valid());
  CHECK(c2.nobj() == 2);
  CHECK(c2.nmor() == 3);
  CHECK(z2().is_valid());
  CHECK(FinCat::terminal().is_valid());
  CHECK(FinCat::empty().is_valid());
  auto p = FinCat::product(c2, c2);
  CHECK(p.is_valid());
  CHECK(p.nobj() == 4);
  CHECK(p.nmor() == 9);
  // a broken composition table is caught
  auto bad = c2;
  bad.comp[2][0] = 0;
  CHECK_FALSE(bad.is_valid());
}

TEST_CASE("canonical key is relabeling invariant") {
  auto a = FinCat::from_poset(FinPoset::from_pairs({"x", "y", "z"}, {{0, 1}, {1, 2}}));
  auto b = FinCat::from_poset(FinPoset::from_pairs({"x", "y", "z"}, {{2, 1}, {1, 0}}));
  CHECK(a.canonical_key() == b.canonical_key());
  CHECK(cat_iso_exists(a, b));
  auto c = FinCat::from_poset(FinPoset::from_pairs({"x", "y", "z"}, {{0, 1}, {0, 2}}));
  CHECK_FALSE(cat_iso_exists(a, c));
}

TEST_CASE("functors") {
  auto c2 = FinCat::from_poset(FinPoset::chain(2));
  auto idf = FinFunctor::identity(c2);
  CHECK(idf.is_valid());
  CHECK(compose(idf, idf).is_valid());
  // functors chain2 -> chain2 = monotone maps 2 -> 2
  CHECK(count_functors(c2, c2) == 3);
  auto t = FinCat::terminal();
  CHECK(count_functors(t, c2) == 2);
  auto c3 = FinCat::from_poset(FinPoset::chain(3));
  CHECK(count_functors(c2, c3) == 6);   // monotone maps 2 -> 3
  CHECK(count_functors(c3, c2) == 4);   // monotone maps 3 -> 2
  auto m = z2();
  CHECK(count_functors(m, m) == 2);     // monoid endomorphisms of Z2
  CHECK(count_functors(m, c2) == 2);    // x must go to an identity
  for (auto& f : all_functors(c3, c3)) CHECK(f.is_valid());
  CHECK(all_functors(c3, c3).size() == 10);
}

TEST_CASE("functors over a base") {
  // over the arrow category: fiberwise maps only
  auto c2 = FinCat::from_poset(FinPoset::chain(2));
  auto idb = FinFunctor::identity(c2);
  long n = count_functors(c2, c2, &idb, &idb);
  CHECK(n == 1);  // only the identity sits over id strictly
  // collapse map chain2 -> terminal on both legs: unconstrained count
  auto t = FinCat::terminal();
  FinFunctor col{c2, t, {0, 0}, {0, 0, 0}};
  REQUIRE(col.is_valid());
  CHECK(count_functors(c2, c2, &col, &col) == 3);
}

TEST_CASE("pullback of functors") {
  auto c2 = FinCat::from_poset(FinPoset::chain(2));
  auto t = FinCat::terminal();
  FinFunctor col{c2, t, {0, 0}, {0, 0, 0}};
  auto pb = cat_pullback(col, col);
  CHECK(pb.total.is_valid());
  CHECK(pb.total.nobj() == 4);
  CHECK(pb.total.nmor() == 9);
  CHECK(pb.proj1.is_valid());
  CHECK(pb.proj2.is_valid());
  // pulling back along the identity recovers the other leg
  auto idb = FinFunctor::identity(c2);
  FinFunctor pick{t, c2, {0}, {0}};  // select the bottom object
  REQUIRE(pick.is_valid());
  auto pb2 = cat_pullback(idb, pick);
  CHECK(cat_iso_exists(pb2.total, t));
}

TEST_CASE("hom profunctor and unit law") {
  for (auto base : {FinCat::terminal(), FinCat::from_poset(FinPoset::chain(2)),
                    FinCat::from_poset(FinPoset::chain(3)), z2()}) {
    auto h = Profunctor::hom_of(base);
    CHECK(h.is_valid());
    auto hh = compose_prof(h, h);
    CHECK(hh.prof.is_valid());
    CHECK(prof_iso_exists(hh.prof, h));  // hom . hom ~ hom
    check_composite_against_oracle(h, h);
  }
}

TEST_CASE("coend zigzag identification") {
  // middle = the arrow category; one element on each side, the single
  // nonidentity morphism glues the two pairs into one class
  auto b = FinCat::from_poset(FinPoset::chain(2));
  auto t = FinCat::terminal();
  Profunctor m;  // terminal -|-> b
  m.a = t;
  m.c = b;
  m.nelem = {{1, 1}};
  m.act_l = {{{0}, {0}}};                    // identity of the terminal object
  m.act_r = {{{0}}, {{0}}, {{0}}};           // u sends a0 to a1
  REQUIRE(m.is_valid());
  Profunctor n;  // b -|-> terminal
  n.a = b;
  n.c = t;
  n.nelem = {{1}, {1}};
  n.act_l = {{{0}}, {{0}}, {{0}}};           // u pulls b1 back to b0
  n.act_r = {{{0}, {0}}};
  REQUIRE(n.is_valid());
  auto comp = compose_prof(m, n);
  CHECK(comp.prof.nelem[0][0] == 1);
  CHECK(comp.class_of(0, 0, 0, 0, 0) == comp.class_of(0, 0, 1, 0, 0));
  check_composite_against_oracle(m, n);
}

TEST_CASE("composite over a discrete middle is a product") {
  auto t = FinCat::terminal();
  Profunctor m;  // two elements
  m.a = t;
  m.c = t;
  m.nelem = {{2}};
  m.act_l = {{{0, 1}}};
  m.act_r = {{{0, 1}}};
  Profunctor n;  // three elements
  n.a = t;
  n.c = t;
  n.nelem = {{3}};
  n.act_l = {{{0, 1, 2}}};
  n.act_r = {{{0, 1, 2}}};
  REQUIRE(m.is_valid());
  REQUIRE(n.is_valid());
  auto comp = compose_prof(m, n);
  CHECK(comp.prof.nelem[0][0] == 6);
  check_composite_against_oracle(m, n);
  auto p = prof_product(m, n, FinCat::product(t, t), FinCat::product(t, t));
  CHECK(p.is_valid());
  CHECK(p.nelem[0][0] == 6);
}

TEST_CASE("profunctor isomorphism search respects actions") {
  // two right Z2-actions on a 2-element set: the swap vs the trivial one
  auto m = z2();
  auto t = FinCat::terminal();
  Profunctor swp;
  swp.a = t;
  swp.c = m;
  swp.nelem = {{2}};
  swp.act_l = {{{0, 1}}, {{1, 0}}};
  swp.act_r = {{{0, 1}}, {{1, 0}}};
  REQUIRE(swp.is_valid());
  Profunctor triv = swp;
  triv.act_l = {{{0, 1}}, {{0, 1}}};
  triv.act_r = {{{0, 1}}, {{0, 1}}};
  REQUIRE(triv.is_valid());
  CHECK(prof_iso_exists(swp, swp));
  CHECK(prof_iso_exists(triv, triv));
  CHECK_FALSE(prof_iso_exists(swp, triv));
}

TEST_CASE("category enumeration counts") {
  auto exact = [](int total, int nm) {
    int c = 0;
    for (auto& cat : categories_up_to_iso(total))
      if (cat.nmor() == nm) ++c;
    return c;
  };
  auto monoids = [](int total, int nm) {
    int c = 0;
    for (auto& cat : categories_up_to_iso(total))
      if (cat.nobj() == 1 && cat.nmor() == nm) ++c;
    return c;
  };
  CHECK(exact(4, 0) == 1);
  CHECK(exact(4, 1) == 1);
  CHECK(exact(4, 2) == 3);
  CHECK(exact(4, 3) == 11);
  CHECK(exact(4, 4) == 55);
  CHECK(monoids(4, 1) == 1);
  CHECK(monoids(4, 2) == 2);
  CHECK(monoids(4, 3) == 7);
  CHECK(monoids(4, 4) == 35);
  for (auto& cat : categories_up_to_iso(4)) CHECK(cat.is_valid());
}
