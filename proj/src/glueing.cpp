#include "expokit/glueing.hpp"

#include <algorithm>

namespace expokit {

Mask ObjectOverB::fiber_mask(int b) const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i)
    if (fib[i] == b) m |= Mask(1) << i;
  return m;
}

bool ObjectOverB::is_valid() const {
  if (!base.is_valid() || !total.is_valid()) return false;
  if ((int)fib.size() != total.size()) return false;
  for (int v : fib)
    if (v < 0 || v >= base.size()) return false;
  for (int i = 0; i < total.size(); ++i)
    for (int j = 0; j < total.size(); ++j)
      if (total.leq(i, j) && !base.leq(fib[i], fib[j])) return false;
  if (d == Doctrine::Rel) {
    // fibers must be antichains (sets)
    for (int i = 0; i < total.size(); ++i)
      for (int j = 0; j < total.size(); ++j)
        if (i != j && fib[i] == fib[j] && total.leq(i, j)) return false;
  }
  return true;
}

bool ObjectOverB::same_over(const ObjectOverB& o) const {
  return d == o.d && base.dn == o.base.dn && total.dn == o.total.dn && fib == o.fib;
}

ObjectOverB gamma1_over(Doctrine d, const FinPoset& base) {
  ObjectOverB q;
  q.d = d;
  q.base = base;
  // one point per fiber, cross pairs the identity relations: the total
  // carries the base order in every doctrine (Rel fibers are singleton
  // antichains; the identity relation between them is the base order)
  q.total = base;
  for (int i = 0; i < base.size(); ++i) q.fib.push_back(i);
  return q;
}

DObj gamma1(Doctrine d, const FinPoset& base) {
  switch (d) {
    case Doctrine::Top: return FinSpace{base};
    case Doctrine::Pos: return base;
    case Doctrine::Loc: return open_lattice(FinSpace{base}).lat;
    case Doctrine::Rel: return FinPoset::antichain(1);
    case Doctrine::Cat: return FinCat::from_poset(base);
  }
  throw invalid_instance("bad doctrine");
}

namespace {

FinPoset fiber_poset(Doctrine d, const DObj& x) {
  if (d == Doctrine::Top) return std::get<FinSpace>(x).specialization;
  return std::get<FinPoset>(x);
}

}  // namespace

ObjectOverB glue(const LaxFunctor& f) {
  require(flat(f.d), "glue: Top/Pos/Rel/Loc only");
  if (f.d == Doctrine::Loc) {
    ObjectOverB q = glue(loc_to_top(f));
    q.d = Doctrine::Loc;
    return q;
  }
  ObjectOverB q;
  q.d = f.d;
  q.base = f.base;
  int nb = f.base.size();
  std::vector<FinPoset> fp;
  std::vector<int> offset(nb + 1, 0);
  for (int b = 0; b < nb; ++b) {
    fp.push_back(fiber_poset(f.d, f.obj[b]));
    offset[b + 1] = offset[b] + fp[b].size();
    for (int i = 0; i < fp[b].size(); ++i) {
      q.total.names.push_back(fp[b].names[i] + "@" + f.base.names[b]);
      q.fib.push_back(b);
    }
  }
  int n = offset[nb];
  q.total.dn.assign(n, 0);
  if (f.d == Doctrine::Pos || f.d == Doctrine::Rel) {
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < nb; ++c) {
        if (b == c) {
          for (int i = 0; i < fp[b].size(); ++i)
            for (int j = 0; j < fp[b].size(); ++j)
              if (fp[b].leq(i, j))
                q.total.dn[offset[b] + j] |= Mask(1) << (offset[b] + i);
        } else if (f.base.lt(b, c)) {
          auto& m = std::get<OrderIdeal>(f.v(b, c));
          for (int i = 0; i < fp[b].size(); ++i)
            for (int j = 0; j < fp[c].size(); ++j)
              if (m.has(i, j))
                q.total.dn[offset[c] + j] |= Mask(1) << (offset[b] + i);
        }
      }
    require(q.total.is_valid(), "glue: glued relation is not a partial order");
    return q;
  }
  // Top: opens are the families (U_b) of fiber opens with U_c <= m_bc(U_b);
  // the glued space is their specialization order
  require(n <= 22, "glue: total space too large");
  std::vector<OpenLattice> ols;
  for (int b = 0; b < nb; ++b) ols.push_back(open_lattice(FinSpace{fp[b]}));
  std::vector<Mask> opens;
  for (Mask u = 0;; ++u) {
    bool ok = true;
    std::vector<int> part(nb);
    for (int b = 0; b < nb && ok; ++b) {
      Mask ub = (u >> offset[b]) & full_mask(fp[b].size());
      if (!fp[b].is_down(ub)) ok = false;
      else part[b] = ols[b].index_of(ub);
    }
    for (int b = 0; b < nb && ok; ++b)
      for (int c = 0; c < nb && ok; ++c) {
        if (!f.base.lt(b, c)) continue;
        auto& m = std::get<MeetMap>(f.v(b, c));
        Mask uc = (u >> offset[c]) & full_mask(fp[c].size());
        if ((uc & ~ols[c].opens[m.apply(part[b])]) != 0) ok = false;
      }
    if (ok) opens.push_back(u);
    if (u == full_mask(n)) break;
  }
  for (int y = 0; y < n; ++y) {
    Mask dn = full_mask(n);
    for (Mask u : opens)
      if (bit(u, y)) dn &= u;
    q.total.dn[y] = dn;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && q.total.leq(i, j) && q.total.leq(j, i))
        throw invalid_instance("glue: result is not T0");
  require(q.total.is_valid(), "glue: specialization is not a partial order");
  return q;
}

LaxFunctor decompose(const ObjectOverB& q) {
  require(q.is_valid(), "decompose: invalid object over base");
  if (q.d == Doctrine::Loc) {
    ObjectOverB qt = q;
    qt.d = Doctrine::Top;
    return top_to_loc(decompose(qt));
  }
  LaxFunctor f;
  f.d = q.d;
  f.base = q.base;
  int nb = q.base.size();
  std::vector<std::vector<int>> pts(nb);  // global indices per fiber
  for (int i = 0; i < q.size(); ++i) pts[q.fib[i]].push_back(i);
  std::vector<FinPoset> fp;
  for (int b = 0; b < nb; ++b) {
    fp.push_back(q.total.restricted(q.fiber_mask(b)));
    if (q.d == Doctrine::Top)
      f.obj.push_back(FinSpace{fp[b]});
    else
      f.obj.push_back(fp[b]);
  }
  if (q.d == Doctrine::Pos || q.d == Doctrine::Rel) {
    for (int b = 0; b < nb; ++b)
      for (int c = 0; c < nb; ++c) {
        if (!q.base.lt(b, c)) continue;
        OrderIdeal m{fp[b], fp[c], std::vector<Mask>((size_t)fp[b].size(), 0)};
        for (int i = 0; i < fp[b].size(); ++i)
          for (int j = 0; j < fp[c].size(); ++j)
            if (q.total.leq(pts[b][i], pts[c][j])) m.pairs[i] |= Mask(1) << j;
        f.vert.insert({{b, c}, m});
      }
    return f;
  }
  // Top: m_bc(U_b) = (direct image extension of U_b)^interior restricted to X_c
  FinSpace tot{q.total};
  std::vector<OpenLattice> ols;
  for (int b = 0; b < nb; ++b) ols.push_back(open_lattice(FinSpace{fp[b]}));
  auto to_global = [&](int b, Mask local) {
    Mask g = 0;
    for (int i = 0; i < fp[b].size(); ++i)
      if (bit(local, i)) g |= Mask(1) << pts[b][i];
    return g;
  };
  auto to_local = [&](int b, Mask global) {
    Mask l = 0;
    for (int i = 0; i < fp[b].size(); ++i)
      if (bit(global, pts[b][i])) l |= Mask(1) << i;
    return l;
  };
  Mask all = full_mask(q.size());
  for (int b = 0; b < nb; ++b)
    for (int c = 0; c < nb; ++c) {
      if (!q.base.lt(b, c)) continue;
      MeetMap m{ols[b].lat, ols[c].lat, {}};
      for (Mask ub : ols[b].opens) {
        Mask ext = tot.interior(to_global(b, ub) | (all & ~q.fiber_mask(b)));
        m.map.push_back(ols[c].index_of(to_local(c, ext)));
      }
      f.vert.insert({{b, c}, m});
    }
  return f;
}

ObjectOverB restrict_over(const ObjectOverB& q, Mask a) {
  ObjectOverB r;
  r.d = q.d;
  r.base = q.base;
  Mask keep = 0;
  for (int i = 0; i < q.size(); ++i)
    if (bit(a, q.fib[i])) keep |= Mask(1) << i;
  r.total = q.total.restricted(keep);
  for (int i = 0; i < q.size(); ++i)
    if (bit(keep, i)) r.fib.push_back(q.fib[i]);
  return r;
}

bool pushout_test(const ObjectOverB& q, int b, int c, int e) {
  require(q.base.lt(b, c) && q.base.lt(c, e), "pushout_test: need b<c<e");
  Mask tri = (Mask(1) << b) | (Mask(1) << c) | (Mask(1) << e);
  ObjectOverB ybce = restrict_over(q, tri);
  int n = ybce.size();
  // order generated by the bc-part and the ce-part
  std::vector<Mask> dn(n);
  for (int i = 0; i < n; ++i) dn[i] = Mask(1) << i;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!ybce.total.leq(i, j)) continue;
      bool in_bc = ybce.fib[i] != e && ybce.fib[j] != e;
      bool in_ce = ybce.fib[i] != b && ybce.fib[j] != b;
      if (in_bc || in_ce) dn[j] |= Mask(1) << i;
    }
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      Mask m = dn[j];
      for (int i = 0; i < n; ++i)
        if (bit(m, i)) m |= dn[i];
      if (m != dn[j]) dn[j] = m, changed = true;
    }
  }
  // pushout comparison is an iso over the base iff the generated order
  // already is the order of Y_bce
  for (int j = 0; j < n; ++j)
    if (dn[j] != ybce.total.dn[j]) return false;
  return true;
}

bool over_map_valid(const ObjectOverB& x, const ObjectOverB& y, const Horizontal& h) {
  if ((int)h.size() != x.size()) return false;
  for (int i = 0; i < x.size(); ++i)
    if (h[i] < 0 || h[i] >= y.size() || y.fib[h[i]] != x.fib[i]) return false;
  return is_monotone(x.total, y.total, h);
}

std::vector<Horizontal> over_maps(const ObjectOverB& x, const ObjectOverB& y) {
  std::vector<std::vector<int>> cand(x.size());
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j)
      if (y.fib[j] == x.fib[i]) cand[i].push_back(j);
    if (cand[i].empty()) return {};
  }
  std::vector<Horizontal> out;
  Horizontal h(x.size(), -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == x.size()) {
      out.push_back(h);
      return;
    }
    for (int j : cand[i]) {
      h[i] = j;
      bool ok = true;
      for (int k = 0; k <= i && ok; ++k) {
        if (x.total.leq(k, i) && !y.total.leq(h[k], j)) ok = false;
        if (x.total.leq(i, k) && !y.total.leq(j, h[k])) ok = false;
      }
      if (ok) rec(i + 1);
    }
    h[i] = -1;
  };
  rec(0);
  return out;
}

OverPullback product_over(const ObjectOverB& x, const ObjectOverB& y) {
  require(x.d == y.d && x.base.dn == y.base.dn, "product_over: mismatched bases");
  OverPullback r;
  ObjectOverB& p = r.total;
  p.d = x.d;
  p.base = x.base;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < x.size(); ++i)
    for (int j = 0; j < y.size(); ++j)
      if (x.fib[i] == y.fib[j]) {
        pairs.push_back({i, j});
        p.total.names.push_back("(" + x.total.names[i] + "," + y.total.names[j] + ")");
        p.fib.push_back(x.fib[i]);
        r.proj1.push_back(i);
        r.proj2.push_back(j);
      }
  int n = (int)pairs.size();
  p.total.dn.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (x.total.leq(pairs[a].first, pairs[b].first) &&
          y.total.leq(pairs[a].second, pairs[b].second))
        p.total.dn[b] |= Mask(1) << a;
  return r;
}

HorizontalTransformation to_transformation(const ObjectOverB& x, const ObjectOverB& y,
                                           const Horizontal& h) {
  require(over_map_valid(x, y, h), "not a morphism over the base");
  HorizontalTransformation t;
  int nb = x.base.size();
  std::vector<std::vector<int>> xpts(nb), ypos(y.size());
  std::vector<int> ylocal(y.size());
  std::vector<int> cnt(nb, 0);
  for (int j = 0; j < y.size(); ++j) ylocal[j] = cnt[y.fib[j]]++;
  for (int i = 0; i < x.size(); ++i) xpts[x.fib[i]].push_back(i);
  for (int b = 0; b < nb; ++b) {
    Horizontal part;
    for (int i : xpts[b]) part.push_back(ylocal[h[i]]);
    t.part.push_back(part);
  }
  return t;
}

Horizontal to_over_map(const LaxFunctor& x, const LaxFunctor& y,
                       const HorizontalTransformation& t) {
  // glue orders points fiber by fiber, ascending
  int nb = x.base.size();
  std::vector<int> xoff(nb + 1, 0), yoff(nb + 1, 0);
  for (int b = 0; b < nb; ++b) {
    xoff[b + 1] = xoff[b] + fiber_poset(x.d, x.obj[b]).size();
    yoff[b + 1] = yoff[b] + fiber_poset(y.d, y.obj[b]).size();
  }
  Horizontal h;
  for (int b = 0; b < nb; ++b)
    for (int v : t.part[b]) h.push_back(yoff[b] + v);
  return h;
}

Vertical product_vertical(Doctrine d, const DObj& x0, const DObj& y0,
                          const DObj& x1, const DObj& y1, const Vertical& m,
                          const Vertical& n) {
  require(flat(d), "product_vertical: flat doctrines only");
  auto qx = glue(lax_from_vertical(d, x0, x1, m));
  auto qy = glue(lax_from_vertical(d, y0, y1, n));
  auto qp = product_over(qx, qy);
  return decompose(qp.total).v(0, 1);
}

}  // namespace expokit
