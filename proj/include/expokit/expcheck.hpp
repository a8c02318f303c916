#pragma once

#include "expokit/catprof.hpp"
#include "expokit/glueing.hpp"

namespace expokit {

// Lattice of Scott-open subsets of l (ordered by inclusion), with the
// member masks in ascending order.
struct ScottLattice {
  FinLattice lat;
  std::vector<Mask> members;

  int index_of(Mask m) const;
};
ScottLattice scott_lattice(const FinLattice& l);

// The largest Scott open of tgt whose preimage under n lies in h0,
// computed as the union over all admissible Scott opens.
Mask nhat_mask(const MeetMap& n, Mask h0);
// The same operation as a meet-map between the Scott-open lattices.
MeetMap nhat(const MeetMap& n);

// u1 is way below v1 relative to the Scott open h0 of n's source:
// u1 << v1, v1 in nhat(h0), and u1 <= n(meet of h0).
bool way_below_rel(const MeetMap& n, Mask h0, int u1, int v1);

// Source lattice continuous, and every v1 is the join of its
// relatively-way-below approximants (h0 ranging over all Scott opens).
bool doubly_continuous(const MeetMap& n);

// Per-fiber Scott opens h[b] over opens(Y_b), closed under taking
// preimages along the verticals: n_bc^{-1} h[c] is contained in h[b].
struct FiberwiseScottOpen {
  std::vector<Mask> h;
};
std::vector<FiberwiseScottOpen> fiberwise_scott_opens(const ObjectOverB& q);

// Continuity of the evaluation against the fiberwise-Scott-open space:
// every pointed fiber open (b, v, y) admits a family h with v in h[b]
// and y interior to the union of the fiberwise intersections.
struct EpsilonWitness {
  int b = -1, v = -1, y = -1;  // fiber, open index, local point
  FiberwiseScottOpen h;
};
struct EpsilonResult {
  bool ok = true;
  std::vector<EpsilonWitness> witnesses;
  int fail_b = -1, fail_v = -1, fail_y = -1;
};
EpsilonResult epsilon_continuous(const ObjectOverB& q);

struct ExpFailure {
  enum Kind { NotPseudo, NotDoublyContinuous, FiberNotExponentiable } kind;
  int b = -1, c = -1, e = -1;
};
struct ExpVerdict {
  bool decision = true;
  std::vector<ExpFailure> failures;
};
// Cat/Pos/Rel: invertible comparisons decide.  Top/Loc: additionally
// every vertical doubly continuous and every fiber frame continuous.
ExpVerdict check_exponentiable(const LaxFunctor& f);

// The exponential Z^Y over the base for the flat doctrines: fibers are
// the monotone maps Y_b -> Z_b, cross-fiber order induced by the
// verticals of Y and Z.  Verified against a representing family before
// returning.  Throws not_exponentiable / verification_failed.
ObjectOverB exponential_over_B(const ObjectOverB& y, const ObjectOverB& z);

// a is the intersection of an open and a closed set (equivalently,
// open in its closure).
bool locally_closed(Mask a, const FinSpace& s);

}  // namespace expokit
