#pragma once

#include "expokit/expcheck.hpp"

namespace expokit {

// Brute-force verifier verdicts.  "true" always means "true at cap";
// inconclusive means no instance could be checked within the cap.
struct OracleReport {
  bool verdict = false;
  bool inconclusive = false;
  std::string counterexample;
  long checked = 0;
  int cap = 0;
};

// All objects over the base with at most max_pts points: labeled totals
// with nondecreasing fiber assignments, deterministic order.
std::vector<ObjectOverB> objects_over_base(Doctrine d, const FinPoset& base,
                                           int max_pts);

// Universal property of the square of fiber restrictions at the chain
// b < c < e: every compatible pair of legs on the {b,c} and {c,e} parts
// extends uniquely over the whole object, against all competing
// vertices with at most cap points.
OracleReport verify_pushout(const ObjectOverB& q, int b, int c, int e, int cap);

// ex represents maps into z out of products with y: some evaluation map
// ex x_B y -> z makes the composition transpose a bijection
// Hom(x ,ex) -> Hom(x ×_B y, z) for every probe x with at most cap
// points, naturally in x.
OracleReport verify_adjunction(const ObjectOverB& y, const ObjectOverB& ex,
                               const ObjectOverB& z, int cap);

// The categorical analogue over a poset-shaped base; probes are
// categories with at most max_mor morphisms mapped into the base in
// every possible way.
OracleReport verify_adjunction_cat(const FinFunctor& qy, const FinFunctor& qe,
                                   const FinFunctor& qz, const FinPoset& base,
                                   int max_mor);

// Every quotient over the base with at most cap points stays a quotient
// after taking the fiber product with y.  Quotients of finite spaces
// are surjections carrying the final specialization order; the check
// compares the pushed-forward order closure with the product order.
OracleReport verify_quotient_preservation(const ObjectOverB& y, int cap);

}  // namespace expokit
