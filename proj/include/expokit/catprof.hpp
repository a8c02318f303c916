#pragma once

#include "expokit/laxcat.hpp"

namespace expokit {

struct not_exponentiable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct verification_failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The normal lax functor of a functor into a poset-shaped category:
// fiber categories, cross-fiber profunctors, composition comparisons.
LaxFunctor benabou_decompose(const FinFunctor& q, const FinPoset& base);

// Total category of a Cat-valued lax functor over a poset, with its
// projection; throws verification_failed if the comparison data fails
// to assemble into an associative composition.
FinFunctor benabou_glue(const LaxFunctor& f);

struct GCResult {
  bool ok = true;
  int alpha = -1, g = -1, h = -1;  // first failing morphism and factorization
};
// Factorization lifting: for every morphism over a composite, the
// category of fiber factorizations is nonempty and zigzag-connected.
GCResult giraud_conduche(const FinFunctor& q);

// The exponential Z^Y in Cat over a poset-shaped base: fibers are
// functor categories, cross-fiber morphisms are profunctor cells,
// composition runs through the inverse comparison of Y and the
// comparison of Z.  Verified against a representing family before
// returning.  Throws not_exponentiable / verification_failed.
FinFunctor cat_exponential(const FinFunctor& qy, const FinFunctor& qz,
                           const FinPoset& base);

// Hom over the base: functors w -> z with qz . f = qw.
long count_over_functors(const FinFunctor& qw, const FinFunctor& qz);

// The inclusion of the principal down-set of b as an object over base.
FinFunctor downset_inclusion(const FinPoset& base, int b);

}  // namespace expokit
