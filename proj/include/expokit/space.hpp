#pragma once

#include "expokit/poset.hpp"

namespace expokit {

// Finite Alexandroff T0 space: opens are exactly the down-sets of the
// specialization order.
struct FinSpace {
  FinPoset specialization;

  int size() const { return specialization.size(); }
  const std::vector<std::string>& points() const { return specialization.names; }

  std::vector<Mask> opens() const { return down_sets(specialization); }
  bool is_open(Mask s) const { return specialization.is_down(s); }

  // Largest open contained in s.
  Mask interior(Mask s) const;
  // Smallest closed set containing s (closed = up-set).
  Mask closure(Mask s) const { return specialization.up_closure(s); }

  FinSpace subspace(Mask s) const { return {specialization.restricted(s)}; }

  static FinSpace sierpinski() { return {FinPoset::chain(2)}; }
  static FinSpace point() { return {FinPoset::chain(1)}; }
  static FinSpace empty() { return {FinPoset::empty()}; }
};

}  // namespace expokit
