#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "expokit/poset.hpp"

namespace expokit {

// Finite category: explicit morphism list with a composition table.
struct FinCat {
  std::vector<std::string> obj_names;
  std::vector<std::string> mor_names;
  std::vector<int> src, tgt;             // per morphism
  std::vector<int> id_of;                // per object
  std::vector<std::vector<int>> comp;    // comp[g][f] = g.f when tgt[f]==src[g], else -1

  int nobj() const { return (int)obj_names.size(); }
  int nmor() const { return (int)mor_names.size(); }
  bool is_id(int f) const { return id_of[src[f]] == f && src[f] == tgt[f]; }
  int compose(int g, int f) const { return comp[g][f]; }  // g after f
  std::vector<int> hom(int a, int b) const;

  bool is_valid() const;  // unit laws and associativity on every composable triple
  std::string canonical_key() const;

  static FinCat from_poset(const FinPoset& p);
  static FinCat terminal() { return from_poset(FinPoset::chain(1)); }
  static FinCat empty() { return from_poset(FinPoset::empty()); }
  static FinCat product(const FinCat& a, const FinCat& b);

  // for poset-shaped categories: the morphism a -> b, or -1
  int arrow(int a, int b) const;
};

struct FinFunctor {
  FinCat dom, cod;
  std::vector<int> obj_map, mor_map;

  bool is_valid() const;
  static FinFunctor identity(const FinCat& c);
};

FinFunctor compose(const FinFunctor& g, const FinFunctor& f);

// Fiber product of two functors into the same category: objects and
// morphisms are pairs with equal image.  Returns the category with the
// two projections.
struct CatPullback {
  FinCat total;
  FinFunctor proj1, proj2;
};
CatPullback cat_pullback(const FinFunctor& p, const FinFunctor& q);

// Set-valued profunctor a -|-> c with left/right actions.
struct Profunctor {
  FinCat a, c;
  std::vector<std::vector<int>> nelem;                // [x][z] component size
  std::vector<std::vector<std::vector<int>>> act_l;   // [g][z]: P(tgt g, z) -> P(src g, z)
  std::vector<std::vector<std::vector<int>>> act_r;   // [h][x]: P(x, src h) -> P(x, tgt h)

  bool is_valid() const;  // action functoriality and commutation

  static Profunctor hom_of(const FinCat& x);  // the identity vertical
};

// Coend composite of m: X0 -|-> X1 and n: X1 -|-> X2, with the zigzag
// quotient realized by union-find over generating pairs.
struct ProfComposite {
  Profunctor prof;  // X0 -|-> X2
  // per component [a][e]: generating triples (b, y in n(b,e), x in m(a,b))
  // and their class indices in prof
  std::vector<std::vector<std::vector<std::array<int, 3>>>> triples;
  std::vector<std::vector<std::vector<int>>> cls;

  int class_of(int a, int e, int b, int y, int x) const;
};
ProfComposite compose_prof(const Profunctor& m, const Profunctor& n);

// Componentwise bijection commuting with both actions, by backtracking.
bool prof_iso_exists(const Profunctor& m, const Profunctor& n);

// Product profunctor (X0xY0) -|-> (X1xY1) given the product categories.
Profunctor prof_product(const Profunctor& m, const Profunctor& n,
                        const FinCat& a_prod, const FinCat& c_prod);

// Functor enumeration/counting; when over is set, only functors with
// over.first . F == over.second are produced (F: dom -> cod,
// over.first: cod -> base, over.second: dom -> base).
std::vector<FinFunctor> all_functors(const FinCat& dom, const FinCat& cod,
                                     const FinFunctor* cod_to_base = nullptr,
                                     const FinFunctor* dom_to_base = nullptr);
long count_functors(const FinCat& dom, const FinCat& cod,
                    const FinFunctor* cod_to_base = nullptr,
                    const FinFunctor* dom_to_base = nullptr);

// Streaming enumeration: visit(obj_map, mor_map) per functor, in the
// same order as all_functors; return false from visit to stop early.
// Returns false when stopped early.
bool for_each_functor(
    const FinCat& dom, const FinCat& cod, const FinFunctor* cod_to_base,
    const FinFunctor* dom_to_base,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>&
        visit);

bool cat_iso_exists(const FinCat& x, const FinCat& y);

// All categories with at most max_mor morphisms, up to isomorphism.
const std::vector<FinCat>& categories_up_to_iso(int max_mor);

}  // namespace expokit
