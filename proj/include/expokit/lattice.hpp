#pragma once

#include <optional>

#include "expokit/poset.hpp"
#include "expokit/space.hpp"

namespace expokit {

// Finite lattice: meet/join tables agree with the order.
struct FinLattice {
  std::vector<std::string> names;
  std::vector<Mask> dn;
  std::vector<std::vector<int>> meet_t, join_t;
  int top = -1, bot = -1;

  int size() const { return (int)dn.size(); }
  bool leq(int a, int b) const { return bit(dn[b], a); }
  int meet(int a, int b) const { return meet_t[a][b]; }
  int join(int a, int b) const { return join_t[a][b]; }

  int join_mask(Mask s) const;  // join over bot
  int meet_mask(Mask s) const;  // meet over top

  FinPoset order() const { return {names, dn}; }
  bool is_valid() const;
  bool is_distributive() const;

  // The order must have all binary meets/joins and a top and bottom.
  static std::optional<FinLattice> from_poset(const FinPoset& p);
  static FinLattice one();  // 1-element lattice
};

// Down-set lattice of a finite space: meet = intersection, join = union.
// opens[i] is the down-set mask the i-th lattice element stands for.
struct OpenLattice {
  FinLattice lat;
  std::vector<Mask> opens;

  int index_of(Mask open) const;
};

OpenLattice open_lattice(const FinSpace& y);

// Scott-open subsets of L, each a mask over L's elements, ascending.
// Definitional test over all subsets; exponential, capped.
struct ScottOpenFamily {
  std::vector<Mask> members;
};

ScottOpenFamily scott_opens(const FinLattice& l, int max_elems = 14);

// Up-sets of the lattice order.  Equal to scott_opens on finite lattices;
// used as the scalable route where the definitional test is out of reach.
std::vector<Mask> up_set_family(const FinLattice& l);

// u << v: every join-cover of v has a finite subcover above u.
// Definitional loop over all subsets, capped.
bool way_below(const FinLattice& l, int u, int v, int max_elems = 20);

// v = join{u : u << v} for all v.
bool is_continuous_lattice(const FinLattice& l, int max_elems = 20);

// All lattices with exactly n elements, up to isomorphism.
std::vector<FinLattice> lattices_up_to_iso(int n);

}  // namespace expokit
