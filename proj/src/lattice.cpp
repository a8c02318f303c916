#include "expokit/lattice.hpp"

#include <algorithm>

namespace expokit {

int FinLattice::join_mask(Mask s) const {
  int r = bot;
  for (int i = 0; i < size(); ++i)
    if (bit(s, i)) r = join(r, i);
  return r;
}

int FinLattice::meet_mask(Mask s) const {
  int r = top;
  for (int i = 0; i < size(); ++i)
    if (bit(s, i)) r = meet(r, i);
  return r;
}

bool FinLattice::is_valid() const {
  int n = size();
  if (n == 0 || top < 0 || bot < 0) return false;
  FinPoset p = order();
  if (!p.is_valid()) return false;
  for (int a = 0; a < n; ++a) {
    if (!leq(bot, a) || !leq(a, top)) return false;
    for (int b = 0; b < n; ++b) {
      int m = meet_t[a][b], j = join_t[a][b];
      if (!leq(m, a) || !leq(m, b)) return false;
      if (!leq(a, j) || !leq(b, j)) return false;
      for (int c = 0; c < n; ++c) {
        if (leq(c, a) && leq(c, b) && !leq(c, m)) return false;
        if (leq(a, c) && leq(b, c) && !leq(j, c)) return false;
      }
    }
  }
  return true;
}

bool FinLattice::is_distributive() const {
  int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
  return true;
}

std::optional<FinLattice> FinLattice::from_poset(const FinPoset& p) {
  int n = p.size();
  if (n == 0) return std::nullopt;
  FinLattice l;
  l.names = p.names;
  l.dn = p.dn;
  l.meet_t.assign(n, std::vector<int>(n, -1));
  l.join_t.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = -1, j = -1;
      for (int c = 0; c < n; ++c) {
        if (p.leq(c, a) && p.leq(c, b) && (m < 0 || p.leq(m, c))) m = c;
        if (p.leq(a, c) && p.leq(b, c) && (j < 0 || p.leq(c, j))) j = c;
      }
      if (m < 0 || j < 0) return std::nullopt;
      // greatest lower bound must dominate every lower bound
      for (int c = 0; c < n; ++c) {
        if (p.leq(c, a) && p.leq(c, b) && !p.leq(c, m)) return std::nullopt;
        if (p.leq(a, c) && p.leq(b, c) && !p.leq(j, c)) return std::nullopt;
      }
      l.meet_t[a][b] = m;
      l.join_t[a][b] = j;
    }
  for (int c = 0; c < n; ++c) {
    bool istop = true, isbot = true;
    for (int a = 0; a < n; ++a) {
      if (!p.leq(a, c)) istop = false;
      if (!p.leq(c, a)) isbot = false;
    }
    if (istop) l.top = c;
    if (isbot) l.bot = c;
  }
  if (l.top < 0 || l.bot < 0) return std::nullopt;
  return l;
}

FinLattice FinLattice::one() {
  auto l = from_poset(FinPoset::chain(1));
  return *l;
}

int OpenLattice::index_of(Mask open) const {
  auto it = std::lower_bound(opens.begin(), opens.end(), open);
  require(it != opens.end() && *it == open, "not an open set");
  return (int)(it - opens.begin());
}

OpenLattice open_lattice(const FinSpace& y) {
  OpenLattice ol;
  ol.opens = down_sets(y.specialization);
  int n = (int)ol.opens.size();
  FinLattice& l = ol.lat;
  for (int i = 0; i < n; ++i) {
    std::string nm = "{";
    for (int p = 0; p < y.size(); ++p)
      if (bit(ol.opens[i], p)) nm += (nm.size() > 1 ? "," : "") + y.points()[p];
    l.names.push_back(nm + "}");
  }
  l.dn.assign(n, 0);
  l.meet_t.assign(n, std::vector<int>(n));
  l.join_t.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if ((ol.opens[i] & ol.opens[j]) == ol.opens[i]) l.dn[j] |= Mask(1) << i;
      l.meet_t[i][j] = ol.index_of(ol.opens[i] & ol.opens[j]);
      l.join_t[i][j] = ol.index_of(ol.opens[i] | ol.opens[j]);
    }
  l.bot = 0;
  l.top = n - 1;
  return ol;
}

ScottOpenFamily scott_opens(const FinLattice& l, int max_elems) {
  int n = l.size();
  if (n > max_elems)
    throw cap_exceeded("scott_opens: lattice with " + std::to_string(n) +
                       " elements exceeds cap " + std::to_string(max_elems));
  ScottOpenFamily fam;
  Mask all = full_mask(n);
  for (Mask h = 0; h <= all; ++h) {
    bool ok = l.order().is_up(h);
    // join(S) in H must admit a finite subcover F of S with join(F) in H.
    // Subsets of a finite lattice are their own finite subcover candidates,
    // but the test is run as stated, over every S.
    for (Mask s = 0; ok && s <= all; ++s) {
      if (!bit(h, l.join_mask(s))) {
        if (all == 0) break;
        continue;
      }
      bool found = false;
      for (Mask f = s; !found; f = (f - 1) & s) {
        if (bit(h, l.join_mask(f))) found = true;
        if (f == 0) break;
      }
      ok = found;
      if (all == 0) break;
    }
    if (ok) fam.members.push_back(h);
    if (all == 0) break;
  }
  return fam;
}

std::vector<Mask> up_set_family(const FinLattice& l) { return up_sets(l.order()); }

bool way_below(const FinLattice& l, int u, int v, int max_elems) {
  int n = l.size();
  if (n > max_elems)
    throw cap_exceeded("way_below: lattice exceeds cap");
  Mask all = full_mask(n);
  for (Mask s = 0; s <= all; ++s) {
    if (l.leq(v, l.join_mask(s))) {
      bool found = false;
      for (Mask f = s;; f = (f - 1) & s) {
        if (l.leq(u, l.join_mask(f))) {
          found = true;
          break;
        }
        if (f == 0) break;
      }
      if (!found) return false;
    }
    if (all == 0) break;
  }
  return true;
}

bool is_continuous_lattice(const FinLattice& l, int max_elems) {
  for (int v = 0; v < l.size(); ++v) {
    Mask approx = 0;
    for (int u = 0; u < l.size(); ++u)
      if (way_below(l, u, v, max_elems)) approx |= Mask(1) << u;
    if (l.join_mask(approx) != v) return false;
  }
  return true;
}

std::vector<FinLattice> lattices_up_to_iso(int n) {
  std::vector<FinLattice> out;
  for (auto& p : posets_up_to_iso(n))
    if (auto l = FinLattice::from_poset(p)) out.push_back(*l);
  return out;
}

}  // namespace expokit
