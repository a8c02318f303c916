#include "expokit/space.hpp"

namespace expokit {

Mask FinSpace::interior(Mask s) const {
  Mask all = full_mask(size());
  // points whose entire down-set (minimal open neighborhood) sits inside s
  Mask r = 0;
  for (int i = 0; i < size(); ++i)
    if ((specialization.dn[i] & ~s & all) == 0) r |= Mask(1) << i;
  return r & s;
}

}  // namespace expokit
