#include "expokit/expcheck.hpp"

#include <algorithm>

namespace expokit {

namespace {

std::vector<Mask> scott_members(const FinLattice& l) {
  // identical families at finite scale; the definitional test is
  // exponential, so fall back to up-sets on larger lattices
  if (l.size() <= 14) return scott_opens(l).members;
  return up_set_family(l);
}

Mask preimage(const MeetMap& n, Mask h1) {
  Mask r = 0;
  for (int u = 0; u < n.src.size(); ++u)
    if (bit(h1, n.map[u])) r |= Mask(1) << (u);
  return r;
}

}  // namespace

int ScottLattice::index_of(Mask m) const {
  auto it = std::lower_bound(members.begin(), members.end(), m);
  require(it != members.end() && *it == m, "not a Scott open");
  return (int)(it - members.begin());
}

ScottLattice scott_lattice(const FinLattice& l) {
  ScottLattice s;
  s.members = scott_members(l);
  int n = (int)s.members.size();
  auto& t = s.lat;
  for (int i = 0; i < n; ++i) t.names.push_back("H" + std::to_string(i));
  t.dn.resize(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((s.members[j] & ~s.members[i]) == 0) t.dn[i] |= Mask(1) << (j);
  auto find = [&](Mask m) {
    return (int)(std::lower_bound(s.members.begin(), s.members.end(), m) -
                 s.members.begin());
  };
  t.meet_t.assign(n, std::vector<int>(n));
  t.join_t.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      t.meet_t[i][j] = find(s.members[i] & s.members[j]);
      t.join_t[i][j] = find(s.members[i] | s.members[j]);
    }
  t.bot = find(0);
  t.top = find(full_mask(l.size()));
  return s;
}

Mask nhat_mask(const MeetMap& n, Mask h0) {
  Mask acc = 0;
  for (Mask h1 : scott_members(n.tgt))
    if ((preimage(n, h1) & ~h0) == 0) acc |= h1;
  return acc;
}

MeetMap nhat(const MeetMap& n) {
  auto s0 = scott_lattice(n.src), s1 = scott_lattice(n.tgt);
  MeetMap r{s0.lat, s1.lat, {}};
  for (Mask h0 : s0.members) r.map.push_back(s1.index_of(nhat_mask(n, h0)));
  return r;
}

bool way_below_rel(const MeetMap& n, Mask h0, int u1, int v1) {
  return way_below(n.tgt, u1, v1) && bit(nhat_mask(n, h0), v1) &&
         n.tgt.leq(u1, n.map[n.src.meet_mask(h0)]);
}

bool doubly_continuous(const MeetMap& n) {
  if (!is_continuous_lattice(n.src)) return false;
  auto h0s = scott_members(n.src);
  for (int v1 = 0; v1 < n.tgt.size(); ++v1) {
    Mask approx = 0;
    for (int u1 = 0; u1 < n.tgt.size(); ++u1)
      for (Mask h0 : h0s)
        if (way_below_rel(n, h0, u1, v1)) {
          approx |= Mask(1) << (u1);
          break;
        }
    if (n.tgt.join_mask(approx) != v1) return false;
  }
  return true;
}

std::vector<FiberwiseScottOpen> fiberwise_scott_opens(const ObjectOverB& q) {
  require(q.d == Doctrine::Top, "fiberwise Scott opens live over spaces");
  auto f = decompose(q);
  int nb = q.base.size();
  std::vector<std::vector<Mask>> sig(nb);
  double count = 1;
  for (int b = 0; b < nb; ++b) {
    sig[b] = scott_members(open_lattice(std::get<FinSpace>(f.obj[b])).lat);
    count *= (double)sig[b].size();
  }
  if (count > 1e6) throw cap_exceeded("too many fiberwise families");
  std::vector<FiberwiseScottOpen> out;
  std::vector<int> pick(nb, 0);
  while (true) {
    FiberwiseScottOpen fam;
    for (int b = 0; b < nb; ++b) fam.h.push_back(sig[b][pick[b]]);
    bool ok = true;
    for (int b = 0; b < nb && ok; ++b)
      for (int c = 0; c < nb && ok; ++c)
        if (q.base.lt(b, c) &&
            (preimage(std::get<MeetMap>(f.v(b, c)), fam.h[c]) & ~fam.h[b]))
          ok = false;
    if (ok) out.push_back(fam);
    if (nb == 0) break;
    int i = nb - 1;
    while (i >= 0 && pick[i] == (int)sig[i].size() - 1) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

EpsilonResult epsilon_continuous(const ObjectOverB& q) {
  auto fams = fiberwise_scott_opens(q);
  auto f = decompose(q);
  FinSpace tot{q.total};
  int nb = q.base.size();
  std::vector<std::vector<int>> glob(nb);
  std::vector<OpenLattice> ol;
  for (int b = 0; b < nb; ++b) {
    for (int i = 0; i < q.size(); ++i)
      if (q.fib[i] == b) glob[b].push_back(i);
    ol.push_back(open_lattice(std::get<FinSpace>(f.obj[b])));
  }
  // interior of the union of fiberwise intersections, per family
  std::vector<Mask> interiors;
  for (auto& fam : fams) {
    Mask u = 0;
    for (int b = 0; b < nb; ++b) {
      Mask local = full_mask((int)glob[b].size());
      for (size_t i = 0; i < ol[b].opens.size(); ++i)
        if (bit(fam.h[b], (int)i)) local &= ol[b].opens[i];
      for (size_t p = 0; p < glob[b].size(); ++p)
        if (bit(local, (int)p)) u |= Mask(1) << (glob[b][p]);
    }
    interiors.push_back(tot.interior(u));
  }
  EpsilonResult r;
  for (int b = 0; b < nb; ++b)
    for (int v = 0; v < (int)ol[b].opens.size(); ++v)
      for (int y = 0; y < (int)glob[b].size(); ++y) {
        if (!bit(ol[b].opens[v], y)) continue;
        bool found = false;
        for (size_t i = 0; i < fams.size() && !found; ++i)
          if (bit(fams[i].h[b], v) && bit(interiors[i], glob[b][y])) {
            r.witnesses.push_back({b, v, y, fams[i]});
            found = true;
          }
        if (!found) return {false, {}, b, v, y};
      }
  return r;
}

ExpVerdict check_exponentiable(const LaxFunctor& f) {
  ExpVerdict r;
  int n = f.base.size();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      for (int e = 0; e < n; ++e) {
        if (!(f.base.lt(b, c) && f.base.lt(c, e))) continue;
        bool ok;
        if (flat(f.d)) {
          ok = special_iso(f.d, v_compose(f.d, f.v(b, c), f.v(c, e)),
                           f.v(b, e));
        } else {
          auto cps = compose_prof(std::get<Profunctor>(f.v(b, c)),
                                  std::get<Profunctor>(f.v(c, e)));
          auto& direct = std::get<Profunctor>(f.v(b, e));
          auto& cc = f.comp.at({b, c, e}).to_bd;
          ok = true;
          for (int x = 0; x < cps.prof.a.nobj() && ok; ++x)
            for (int z = 0; z < cps.prof.c.nobj() && ok; ++z) {
              if (cps.prof.nelem[x][z] != direct.nelem[x][z]) ok = false;
              std::vector<bool> hit((size_t)direct.nelem[x][z], false);
              for (int cls = 0; cls < cps.prof.nelem[x][z] && ok; ++cls) {
                if (hit[cc[x][z][cls]]) ok = false;
                hit[cc[x][z][cls]] = true;
              }
            }
        }
        if (!ok) r.failures.push_back({ExpFailure::NotPseudo, b, c, e});
      }
  if (f.d == Doctrine::Top || f.d == Doctrine::Loc) {
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (f.base.lt(b, c) &&
            !doubly_continuous(std::get<MeetMap>(f.v(b, c))))
          r.failures.push_back({ExpFailure::NotDoublyContinuous, b, c, -1});
    for (int b = 0; b < n; ++b) {
      FinLattice l = f.d == Doctrine::Top
                         ? open_lattice(std::get<FinSpace>(f.obj[b])).lat
                         : std::get<FinLattice>(f.obj[b]);
      if (!is_continuous_lattice(l))
        r.failures.push_back({ExpFailure::FiberNotExponentiable, b, -1, -1});
    }
  }
  r.decision = r.failures.empty();
  return r;
}

ObjectOverB exponential_over_B(const ObjectOverB& y, const ObjectOverB& z) {
  require(flat(y.d) && y.d == z.d && y.base.same_order(z.base),
          "matching flat instances over one base expected");
  auto verdict = check_exponentiable(decompose(y));
  if (!verdict.decision)
    throw not_exponentiable("base change along the instance fails");
  int nb = y.base.size();
  std::vector<FinPoset> yf(nb), zf(nb);
  std::vector<std::vector<int>> yg(nb), zg(nb);
  std::vector<std::vector<std::vector<int>>> sig(nb);
  for (int b = 0; b < nb; ++b) {
    yf[b] = y.total.restricted(y.fiber_mask(b));
    zf[b] = z.total.restricted(z.fiber_mask(b));
    for (int i = 0; i < y.size(); ++i)
      if (y.fib[i] == b) yg[b].push_back(i);
    for (int i = 0; i < z.size(); ++i)
      if (z.fib[i] == b) zg[b].push_back(i);
    sig[b] = monotone_maps(yf[b], zf[b]);
  }
  ObjectOverB e;
  e.d = y.d;
  e.base = y.base;
  std::vector<int> off(nb);
  for (int b = 0; b < nb; ++b) {
    off[b] = (int)e.fib.size();
    for (size_t s = 0; s < sig[b].size(); ++s) {
      e.total.names.push_back("s" + std::to_string(s) + "@" +
                              y.base.names[b]);
      e.fib.push_back(b);
    }
  }
  int n = (int)e.fib.size();
  require(n <= 62, "exponential too large");
  auto le = [&](int b, const std::vector<int>& s, int c,
                const std::vector<int>& t) {
    if (b == c) {
      for (size_t i = 0; i < s.size(); ++i)
        if (!zf[b].leq(s[i], t[i])) return false;
      return true;
    }
    if (!y.base.lt(b, c)) return false;
    for (size_t i = 0; i < yg[b].size(); ++i)
      for (size_t j = 0; j < yg[c].size(); ++j)
        if (y.total.leq(yg[b][i], yg[c][j]) &&
            !z.total.leq(zg[b][s[i]], zg[c][t[j]]))
          return false;
    return true;
  };
  e.total.dn.assign(n, 0);
  for (int b = 0; b < nb; ++b)
    for (size_t i = 0; i < sig[b].size(); ++i)
      for (int c = 0; c < nb; ++c)
        for (size_t j = 0; j < sig[c].size(); ++j)
          if (le(b, sig[b][i], c, sig[c][j]))
            e.total.dn[off[c] + (int)j] |= Mask(1) << (off[b] + (int)i);
  if (!e.total.is_valid() || !e.is_valid())
    throw verification_failed("exponential order is not a poset over the base");
  // verify against a representing family of objects over the base
  std::vector<ObjectOverB> family;
  family.push_back(gamma1_over(y.d, y.base));
  for (int b = 0; b < nb; ++b) {
    ObjectOverB db;
    db.d = y.d;
    db.base = y.base;
    db.total = y.base.restricted(y.base.dn[b]);
    for (int i = 0; i < y.base.size(); ++i)
      if (bit(y.base.dn[b], i)) db.fib.push_back(i);
    family.push_back(db);
  }
  family.push_back(y);
  for (auto& x : family) {
    auto p = product_over(x, y);
    if (over_maps(p.total, z).size() != over_maps(x, e).size())
      throw verification_failed("exponential fails the mapping-count test");
  }
  return e;
}

bool locally_closed(Mask a, const FinSpace& s) {
  Mask cl = s.closure(a);
  for (int x = 0; x < s.size(); ++x)
    if (bit(a, x) && (s.specialization.dn[x] & cl & ~a)) return false;
  return true;
}

}  // namespace expokit
