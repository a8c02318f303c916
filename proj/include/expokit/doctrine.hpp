#pragma once

#include <variant>

#include "expokit/cat.hpp"
#include "expokit/lattice.hpp"
#include "expokit/space.hpp"

namespace expokit {

// The five pluggable doctrines.  All but Cat are flat: a cell is a
// proposition about its boundary.
enum class Doctrine { Cat, Top, Loc, Pos, Rel };

inline bool flat(Doctrine d) { return d != Doctrine::Cat; }
const char* doctrine_name(Doctrine d);

// Finite-meet- and top-preserving map between finite lattices; the
// vertical morphism of the Top and Loc doctrines (applied to open-set
// lattices for Top, to frames directly for Loc).
struct MeetMap {
  FinLattice src, tgt;
  std::vector<int> map;  // per src element, an element of tgt

  int apply(int u) const { return map[u]; }
  bool is_valid() const;
  bool same_map(const MeetMap& o) const { return map == o.map; }
};

MeetMap meet_identity(const FinLattice& l);
// n after m (diagrammatic: m then n)
MeetMap meet_compose(const MeetMap& m, const MeetMap& n);
// all meet-maps src -> tgt, lexicographic by table
std::vector<MeetMap> all_meet_maps(const FinLattice& src, const FinLattice& tgt);

// Up-set of src^op x tgt; the vertical of Pos, and (on antichains,
// where the closure condition is vacuous) of Rel.
struct OrderIdeal {
  FinPoset src, tgt;
  std::vector<Mask> pairs;  // pairs[x0] = mask of x1 with (x0,x1) in the ideal

  bool has(int x0, int x1) const { return bit(pairs[x0], x1); }
  bool is_valid() const;
  bool same_pairs(const OrderIdeal& o) const { return pairs == o.pairs; }
};

OrderIdeal ideal_identity(const FinPoset& p);  // {(x0,x1) : x0 <= x1}
OrderIdeal ideal_compose(const OrderIdeal& m, const OrderIdeal& n);
std::vector<OrderIdeal> all_order_ideals(const FinPoset& src, const FinPoset& tgt);

// Doctrine objects and verticals.  Rel objects are antichain posets;
// Rel verticals are OrderIdeals (the ideal closure is vacuous there).
using DObj = std::variant<FinSpace, FinLattice, FinPoset, FinCat>;
using Vertical = std::variant<MeetMap, OrderIdeal, Profunctor>;

bool obj_valid(Doctrine d, const DObj& x);
std::string obj_brief(Doctrine d, const DObj& x);

Vertical v_identity(Doctrine d, const DObj& x);
Vertical v_compose(Doctrine d, const Vertical& m, const Vertical& n);

// Horizontal morphisms as element tables: point maps for Top/Pos/Rel,
// frame-element maps *backwards* (f: X -> X' given as O(X') -> O(X))
// for Loc, and FinFunctors for Cat (not covered by this signature).
using Horizontal = std::vector<int>;

// Flat doctrines: does the unique candidate cell (f0, m, n, f1) exist?
bool cell_exists(Doctrine d, const DObj& x0, const DObj& x0p, const DObj& x1,
                 const DObj& x1p, const Horizontal& f0, const Vertical& m,
                 const Vertical& n, const Horizontal& f1);

// Cat: is the supplied component family a natural cell m -> n(f0-, f1-)?
// data[x0][x1] maps m(x0,x1) elementwise into n(f0 x0, f1 x1).
bool cell_check(const FinFunctor& f0, const Profunctor& m, const Profunctor& n,
                const FinFunctor& f1,
                const std::vector<std::vector<std::vector<int>>>& data);

// Invertible special cell (identity horizontals): flat equality of
// verticals; Cat componentwise action-compatible bijection.
bool special_iso(Doctrine d, const Vertical& m, const Vertical& n);

DObj zero_object(Doctrine d);
DObj product(Doctrine d, const DObj& x, const DObj& y);
// product projections as element tables (points; frame map for Loc)
std::pair<Horizontal, Horizontal> product_projections(Doctrine d, const DObj& x,
                                                      const DObj& y);
// defined in glueing.cpp: glue over the 2-chain, fiber product of the
// totals, decompose back.  m: x0 -|-> x1, n: y0 -|-> y1.
Vertical product_vertical(Doctrine d, const DObj& x0, const DObj& y0,
                          const DObj& x1, const DObj& y1, const Vertical& m,
                          const Vertical& n);

// Birkhoff duality for finite distributive lattices: the space of
// join-irreducibles, plus the element <-> open-set dictionary.
struct SpatialFrame {
  FinSpace space;
  std::vector<Mask> elem_open;  // per lattice element, a mask of irreducibles
  std::vector<int> irr;         // irreducible lattice elements, ascending
};
SpatialFrame frame_to_space(const FinLattice& l);

}  // namespace expokit
