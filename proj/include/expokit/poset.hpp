#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expokit/common.hpp"

namespace expokit {

// Finite partial order. dn[i] is the mask of elements <= i (including i).
struct FinPoset {
  std::vector<std::string> names;
  std::vector<Mask> dn;

  int size() const { return (int)dn.size(); }
  bool leq(int a, int b) const { return bit(dn[b], a); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }

  Mask up_of(int i) const;  // {j : i <= j}

  bool is_valid() const;  // reflexive, antisymmetric, transitive

  Mask down_closure(Mask s) const;
  Mask up_closure(Mask s) const;
  bool is_down(Mask s) const { return down_closure(s) == s; }
  bool is_up(Mask s) const { return up_closure(s) == s; }

  // Induced subposet on the elements of s, in ascending index order.
  FinPoset restricted(Mask s) const;

  // Isomorphism-invariant key (exact, by minimization over permutations).
  std::string canonical_key() const;

  bool same_order(const FinPoset& o) const { return dn == o.dn; }

  static FinPoset chain(int n);
  static FinPoset antichain(int n);
  static FinPoset empty() { return {}; }
  // Componentwise order on pairs; index (i,j) = i*b.size()+j.
  static FinPoset product(const FinPoset& a, const FinPoset& b);

  // Reflexive-transitive closure of the given pairs; error if a cycle
  // (antisymmetry failure) appears.  Pair indices refer to `names`.
  static FinPoset from_pairs(std::vector<std::string> names,
                             const std::vector<std::pair<int, int>>& le_pairs);
};

// All down-sets, ascending as masks (deterministic).
std::vector<Mask> down_sets(const FinPoset& p);

// All up-sets of p, ascending as masks.  Capped: 2^|p| enumeration.
std::vector<Mask> up_sets(const FinPoset& p);

// Monotone maps p -> q as element tables, lexicographic order.
std::vector<std::vector<int>> monotone_maps(const FinPoset& p, const FinPoset& q);
bool is_monotone(const FinPoset& p, const FinPoset& q, const std::vector<int>& f);

// All posets on n labeled elements (dn vectors).  Exponential; n <= 6 in practice.
std::vector<FinPoset> all_posets_labeled(int n);

// Representatives of iso classes of posets with exactly n elements.
const std::vector<FinPoset>& posets_up_to_iso(int n);

}  // namespace expokit
