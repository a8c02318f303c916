#pragma once

#include "expokit/laxcat.hpp"

namespace expokit {

// Object of Top/Pos/Rel/Loc over the glued base: a total order (the
// specialization order for Top/Loc, the honest order for Pos, a
// discrete-fiber order encoding relations for Rel) with a monotone
// fiber assignment into the base.  Loc instances are carried by their
// spectra; the frame view is reconstructed on demand.
struct ObjectOverB {
  Doctrine d = Doctrine::Pos;
  FinPoset base;
  FinPoset total;
  std::vector<int> fib;  // per total element, a base element

  int size() const { return total.size(); }
  Mask fiber_mask(int b) const;
  bool is_valid() const;
  bool same_over(const ObjectOverB& o) const;  // structural equality
};

// The terminal glued object: the base itself (all fibers a point).
ObjectOverB gamma1_over(Doctrine d, const FinPoset& base);
// The display object Gamma_B 1 of the doctrine (Alexandroff space,
// base poset, down-set frame, one-point set).
DObj gamma1(Doctrine d, const FinPoset& base);

ObjectOverB glue(const LaxFunctor& f);
LaxFunctor decompose(const ObjectOverB& q);

// Preimage of the subposet on base mask a.
ObjectOverB restrict_over(const ObjectOverB& q, Mask a);

// Is the square Y_c -> Y_bc, Y_c -> Y_cd, -> Y_bcd a pushout?  Computed
// as the order generated by the two restrictions against the order of
// Y_bcd on the same points.
bool pushout_test(const ObjectOverB& q, int b, int c, int e);

// Morphisms over the base: monotone fiber-preserving maps of totals
// (= continuous maps over Gamma_B 1 for Top), lexicographic.
std::vector<Horizontal> over_maps(const ObjectOverB& x, const ObjectOverB& y);
bool over_map_valid(const ObjectOverB& x, const ObjectOverB& y, const Horizontal& h);

// Fiber product over the base, with projections.
struct OverPullback {
  ObjectOverB total;
  Horizontal proj1, proj2;
};
OverPullback product_over(const ObjectOverB& x, const ObjectOverB& y);

// Transport of morphisms across the equivalence.
HorizontalTransformation to_transformation(const ObjectOverB& x, const ObjectOverB& y,
                                           const Horizontal& h);
Horizontal to_over_map(const LaxFunctor& x, const LaxFunctor& y,
                       const HorizontalTransformation& t);

}  // namespace expokit
