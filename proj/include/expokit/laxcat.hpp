#pragma once

#include <map>
#include <tuple>

#include "expokit/doctrine.hpp"

namespace expokit {

// Comparison cell X_cd.X_bc -> X_bd for the Cat doctrine: per boundary
// pair (y_b, y_d), a map from coend classes to X_bd elements.  The coend
// class numbering is the deterministic one produced by compose_prof.
struct CatComparison {
  std::vector<std::vector<std::vector<int>>> to_bd;  // [y_b][y_d][cls]
};

// Vertical normal lax functor over a finite poset base.  Strictly
// normal: identity verticals and unit comparisons are implied, never
// stored.  Flat doctrines carry no comparison data (cells are
// propositions, revalidated on demand).
struct LaxFunctor {
  Doctrine d = Doctrine::Pos;
  FinPoset base;
  std::vector<DObj> obj;                            // per base element
  std::map<std::pair<int, int>, Vertical> vert;     // strictly increasing pairs
  std::map<std::tuple<int, int, int>, CatComparison> comp;  // Cat only

  const Vertical& v(int b, int c) const;  // stored vertical, b < c
  Vertical v_or_id(int b, int c) const;   // v_identity when b == c
};

// The unique vertical factoring through the zero object.
Vertical zero_vertical(Doctrine d, const DObj& from, const DObj& to);

struct Violation {
  int b = -1, c = -1, e = -1;  // offending pair or triple
  std::string what;
};
std::vector<Violation> validate(const LaxFunctor& f);

struct PseudoResult {
  bool ok = true;
  int b = -1, c = -1, e = -1;  // first failing triple
};
PseudoResult is_pseudo(const LaxFunctor& f);

// Componentwise restriction to the subposet on mask a.
LaxFunctor restrict_lax(const LaxFunctor& f, Mask a);

// Zero extension L_A: f lives over big.restricted(a); fibers off a
// become the zero object, verticals through zero.
LaxFunctor extend_zero(const LaxFunctor& f, const FinPoset& big, Mask a);

// Fiberwise products; verticals via product_vertical.
LaxFunctor product_lax(const LaxFunctor& x, const LaxFunctor& y);

// The product comparison cell at b<c<e for flat doctrines: the
// composite of the product verticals against the direct product
// vertical, with its invertibility.
struct ThetaResult {
  Vertical composite;
  Vertical direct;
  bool invertible = false;
};
ThetaResult theta(const LaxFunctor& x, const LaxFunctor& y, int b, int c, int e);

// Bounded sampler: theta invertible against every pseudo X over the
// triple with fibers of at most sample_bound elements.  Evidence only;
// the deciders in expcheck never call this.
bool preserves_pseudo(const LaxFunctor& y, int b, int c, int e, int sample_bound);

// Horizontal transformation between lax functors over the same base.
// Flat doctrines: per-fiber element maps (Loc: frame maps backwards).
// Cat: per-fiber functors plus square component data per b<c.
struct HorizontalTransformation {
  std::vector<Horizontal> part;    // flat doctrines
  std::vector<FinFunctor> fun;     // Cat
  std::map<std::pair<int, int>, std::vector<std::vector<std::vector<int>>>> square;
};
bool ht_valid(const LaxFunctor& x, const LaxFunctor& y,
              const HorizontalTransformation& t);
// All transformations x -> y, flat doctrines with pointlike objects
// (Top/Pos/Rel); lexicographic order.
std::vector<HorizontalTransformation> all_transformations(const LaxFunctor& x,
                                                          const LaxFunctor& y);

// Constant lax functor at w, and the one-vertical functor over the
// 2-chain.
LaxFunctor const_lax(Doctrine d, const FinPoset& base, const DObj& w);
LaxFunctor lax_from_vertical(Doctrine d, const DObj& x0, const DObj& x1,
                             const Vertical& m);

// Loc functors computed through the Top engine: spatialize every fiber
// and transport the meet maps along Birkhoff duality (and back).
LaxFunctor loc_to_top(const LaxFunctor& f);
LaxFunctor top_to_loc(const LaxFunctor& f);

}  // namespace expokit
