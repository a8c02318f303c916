#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "expokit/catprof.hpp"
#include "expokit/oracle.hpp"

using namespace expokit;

namespace {

ObjectOverB subspace_over(const FinPoset& base, Mask pts) {
  ObjectOverB q;
  q.d = Doctrine::Top;
  q.base = base;
  q.total = base.restricted(pts);
  for (int i = 0; i < base.size(); ++i)
    if (bit(pts, i)) q.fib.push_back(i);
  return q;
}

}  // namespace

TEST_CASE("pushout oracle") {
  auto b3 = FinPoset::chain(3);
  // whole-space restriction glues back: universal property holds
  auto full = subspace_over(b3, 0b111);
  auto r = verify_pushout(full, 0, 1, 2, 3);
  CHECK(r.verdict);
  CHECK(r.checked > 0);
  // the split subspace misses the middle comparability
  auto bad = subspace_over(b3, 0b101);
  auto rb = verify_pushout(bad, 0, 1, 2, 3);
  CHECK_FALSE(rb.verdict);
  CHECK_FALSE(rb.inconclusive);
  CHECK(!rb.counterexample.empty());
  // cap 0 leaves nothing to test against
  CHECK(verify_pushout(bad, 0, 1, 2, 0).inconclusive);
  // agreement with the direct order-generation test and the glued
  // comparison criterion across all small instances
  for (auto d : {Doctrine::Pos, Doctrine::Top})
    for (auto& q : objects_over_base(d, b3, 3)) {
      bool direct = pushout_test(q, 0, 1, 2);
      auto ro = verify_pushout(q, 0, 1, 2, 3);
      CHECK(ro.verdict == direct);
      CHECK(ro.verdict == is_pseudo(decompose(q)).ok);
    }
}

TEST_CASE("adjunction oracle accepts real exponentials") {
  auto b2 = FinPoset::chain(2);
  for (auto d : {Doctrine::Pos, Doctrine::Top, Doctrine::Rel})
    for (auto& y : objects_over_base(d, b2, 2))
      for (auto& z : objects_over_base(d, b2, 2)) {
        if (!check_exponentiable(decompose(y)).decision) continue;
        auto e = exponential_over_B(y, z);
        auto r = verify_adjunction(y, e, z, 2);
        CHECK(r.verdict);
        CHECK(r.checked > 0);
      }
}

TEST_CASE("adjunction oracle rejects corrupted exponentials") {
  auto b2 = FinPoset::chain(2);
  auto y = gamma1_over(Doctrine::Pos, b2);
  ObjectOverB z{Doctrine::Pos, b2, FinPoset::chain(2), {0, 0}};
  auto e = exponential_over_B(y, z);
  CHECK(verify_adjunction(y, e, z, 2).verdict);
  // drop a covering pair from the exponent
  bool mutated = false;
  for (int i = 0; i < e.total.size() && !mutated; ++i)
    for (int j = 0; j < e.total.size() && !mutated; ++j) {
      if (i == j || !e.total.lt(i, j)) continue;
      bool cover = true;
      for (int m = 0; m < e.total.size(); ++m)
        if (m != i && m != j && e.total.lt(i, m) && e.total.lt(m, j))
          cover = false;
      if (!cover) continue;
      auto bad = e;
      bad.total.dn[j] &= ~(Mask(1) << i);
      REQUIRE(bad.total.is_valid());
      auto r = verify_adjunction(y, bad, z, 2);
      CHECK_FALSE(r.verdict);
      CHECK(!r.counterexample.empty());
      mutated = true;
    }
  CHECK(mutated);
  // terminal exponent accepted for all doctrines
  for (auto d : {Doctrine::Pos, Doctrine::Top, Doctrine::Rel}) {
    auto g = gamma1_over(d, b2);
    CHECK(verify_adjunction(g, g, g, 2).verdict);
  }
}

TEST_CASE("categorical adjunction oracle") {
  auto b2 = FinPoset::chain(2);
  auto bc = FinCat::from_poset(b2);
  auto qy = FinFunctor::identity(bc);
  auto qz = FinFunctor::identity(bc);
  auto e = cat_exponential(qy, qz, b2);
  auto r = verify_adjunction_cat(qy, e, qz, b2, 3);
  CHECK(r.verdict);
  CHECK(r.checked > 0);
  // a deliberately wrong exponent: the terminal over-category when the
  // true exponent has more maps from some probe
  auto wrong = FinFunctor::identity(FinCat::terminal());
  wrong.cod = bc;
  wrong.obj_map = {1};
  wrong.mor_map = {bc.id_of[1]};
  auto rw = verify_adjunction_cat(qy, wrong, qz, b2, 3);
  CHECK_FALSE(rw.verdict);
}

TEST_CASE("quotient preservation oracle") {
  auto b3 = FinPoset::chain(3);
  auto b2 = FinPoset::chain(2);
  // terminal objects: the fiber product is the quotient itself
  CHECK(verify_quotient_preservation(gamma1_over(Doctrine::Top, b3), 3).verdict);
  CHECK(verify_quotient_preservation(subspace_over(b2, 0b11), 3).verdict);
  // the split subspace of the 3-chain breaks a quotient at cap 4
  auto bad = subspace_over(b3, 0b101);
  auto r = verify_quotient_preservation(bad, 4);
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.inconclusive);
  CHECK(r.checked > 0);
  CHECK(!r.counterexample.empty());
  // cap 0 is inconclusive, never a success claim
  auto r0 = verify_quotient_preservation(bad, 0);
  CHECK(r0.inconclusive);
  CHECK_FALSE(r0.verdict);
}
