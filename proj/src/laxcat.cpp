#include "expokit/laxcat.hpp"

#include <algorithm>

#include "expokit/glueing.hpp"

namespace expokit {

const Vertical& LaxFunctor::v(int b, int c) const {
  auto it = vert.find({b, c});
  require(it != vert.end(), "missing vertical");
  return it->second;
}

Vertical LaxFunctor::v_or_id(int b, int c) const {
  if (b == c) return v_identity(d, obj[b]);
  return v(b, c);
}

Vertical zero_vertical(Doctrine d, const DObj& from, const DObj& to) {
  switch (d) {
    case Doctrine::Top: {
      auto l0 = open_lattice(std::get<FinSpace>(from)).lat;
      auto l1 = open_lattice(std::get<FinSpace>(to)).lat;
      return MeetMap{l0, l1, std::vector<int>((size_t)l0.size(), l1.top)};
    }
    case Doctrine::Loc: {
      auto& l0 = std::get<FinLattice>(from);
      auto& l1 = std::get<FinLattice>(to);
      return MeetMap{l0, l1, std::vector<int>((size_t)l0.size(), l1.top)};
    }
    case Doctrine::Pos:
    case Doctrine::Rel: {
      auto& p0 = std::get<FinPoset>(from);
      return OrderIdeal{p0, std::get<FinPoset>(to),
                        std::vector<Mask>((size_t)p0.size(), 0)};
    }
    case Doctrine::Cat: {
      auto& a = std::get<FinCat>(from);
      auto& c = std::get<FinCat>(to);
      Profunctor p;
      p.a = a;
      p.c = c;
      p.nelem.assign(a.nobj(), std::vector<int>(c.nobj(), 0));
      p.act_l.assign(a.nmor(), std::vector<std::vector<int>>(c.nobj()));
      p.act_r.assign(c.nmor(), std::vector<std::vector<int>>(a.nobj()));
      return p;
    }
  }
  throw invalid_instance("bad doctrine");
}

namespace {

// object kinds match the doctrine
bool vert_boundary_ok(Doctrine d, const DObj& from, const DObj& to, const Vertical& m) {
  switch (d) {
    case Doctrine::Top: {
      if (!std::holds_alternative<MeetMap>(m)) return false;
      auto& mm = std::get<MeetMap>(m);
      return mm.src.dn == open_lattice(std::get<FinSpace>(from)).lat.dn &&
             mm.tgt.dn == open_lattice(std::get<FinSpace>(to)).lat.dn;
    }
    case Doctrine::Loc: {
      if (!std::holds_alternative<MeetMap>(m)) return false;
      auto& mm = std::get<MeetMap>(m);
      return mm.src.dn == std::get<FinLattice>(from).dn &&
             mm.tgt.dn == std::get<FinLattice>(to).dn;
    }
    case Doctrine::Pos:
    case Doctrine::Rel: {
      if (!std::holds_alternative<OrderIdeal>(m)) return false;
      auto& mm = std::get<OrderIdeal>(m);
      return mm.src.dn == std::get<FinPoset>(from).dn &&
             mm.tgt.dn == std::get<FinPoset>(to).dn;
    }
    case Doctrine::Cat: {
      if (!std::holds_alternative<Profunctor>(m)) return false;
      auto& mm = std::get<Profunctor>(m);
      auto& a = std::get<FinCat>(from);
      auto& c = std::get<FinCat>(to);
      return mm.a.src == a.src && mm.a.tgt == a.tgt && mm.a.comp == a.comp &&
             mm.c.src == c.src && mm.c.tgt == c.tgt && mm.c.comp == c.comp;
    }
  }
  return false;
}

bool vert_valid(const Vertical& m) {
  if (std::holds_alternative<MeetMap>(m)) return std::get<MeetMap>(m).is_valid();
  if (std::holds_alternative<OrderIdeal>(m)) return std::get<OrderIdeal>(m).is_valid();
  return std::get<Profunctor>(m).is_valid();
}

// comparison cell composite -> direct exists (flat doctrines)
bool lax_cell_ok(const Vertical& composite, const Vertical& direct) {
  if (std::holds_alternative<MeetMap>(composite)) {
    auto& cm = std::get<MeetMap>(composite);
    auto& dm = std::get<MeetMap>(direct);
    for (int u = 0; u < cm.src.size(); ++u)
      if (!cm.tgt.leq(dm.apply(u), cm.apply(u))) return false;
    return true;
  }
  auto& ci = std::get<OrderIdeal>(composite);
  auto& di = std::get<OrderIdeal>(direct);
  for (size_t x = 0; x < ci.pairs.size(); ++x)
    if ((ci.pairs[x] & ~di.pairs[x]) != 0) return false;
  return true;
}

bool comparison_shape_ok(const ProfComposite& cps, const Profunctor& direct,
                         const CatComparison& cc) {
  int na = cps.prof.a.nobj(), nc = cps.prof.c.nobj();
  if ((int)cc.to_bd.size() != na) return false;
  for (int x = 0; x < na; ++x) {
    if ((int)cc.to_bd[x].size() != nc) return false;
    for (int z = 0; z < nc; ++z) {
      if ((int)cc.to_bd[x][z].size() != cps.prof.nelem[x][z]) return false;
      for (int v : cc.to_bd[x][z])
        if (v < 0 || v >= direct.nelem[x][z]) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Violation> validate(const LaxFunctor& f) {
  std::vector<Violation> out;
  if (!f.base.is_valid()) return {{-1, -1, -1, "invalid base poset"}};
  if ((int)f.obj.size() != f.base.size())
    return {{-1, -1, -1, "fiber count does not match base"}};
  int n = f.base.size();
  for (int b = 0; b < n; ++b)
    if (!obj_valid(f.d, f.obj[b])) out.push_back({b, -1, -1, "invalid fiber"});
  if (!out.empty()) return out;
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      if (!f.base.lt(b, c)) {
        if (f.vert.count({b, c}))
          out.push_back({b, c, -1, "vertical on a non-pair"});
        continue;
      }
      auto it = f.vert.find({b, c});
      if (it == f.vert.end()) {
        out.push_back({b, c, -1, "missing vertical"});
        continue;
      }
      if (!vert_boundary_ok(f.d, f.obj[b], f.obj[c], it->second))
        out.push_back({b, c, -1, "vertical boundary mismatch"});
      else if (!vert_valid(it->second))
        out.push_back({b, c, -1, "invalid vertical"});
    }
  if (!out.empty()) return out;
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      for (int e = 0; e < n; ++e) {
        if (!(f.base.lt(b, c) && f.base.lt(c, e))) continue;
        if (flat(f.d)) {
          Vertical composite = v_compose(f.d, f.v(b, c), f.v(c, e));
          if (!lax_cell_ok(composite, f.v(b, e)))
            out.push_back({b, c, e, "no comparison cell"});
        } else {
          auto it = f.comp.find({b, c, e});
          if (it == f.comp.end()) {
            out.push_back({b, c, e, "missing comparison"});
            continue;
          }
          auto cps = compose_prof(std::get<Profunctor>(f.v(b, c)),
                                  std::get<Profunctor>(f.v(c, e)));
          auto& direct = std::get<Profunctor>(f.v(b, e));
          if (!comparison_shape_ok(cps, direct, it->second)) {
            out.push_back({b, c, e, "comparison shape mismatch"});
            continue;
          }
          auto ida = FinFunctor::identity(cps.prof.a);
          auto idc = FinFunctor::identity(cps.prof.c);
          if (!cell_check(ida, cps.prof, direct, idc, it->second.to_bd))
            out.push_back({b, c, e, "comparison not natural"});
        }
      }
  if (!out.empty() || flat(f.d)) return out;
  // Cat coherence: both comparison routes from a triple composite agree
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      for (int e = 0; e < n; ++e)
        for (int g = 0; g < n; ++g) {
          if (!(f.base.lt(b, c) && f.base.lt(c, e) && f.base.lt(e, g))) continue;
          auto& xbc = std::get<Profunctor>(f.v(b, c));
          auto& xce = std::get<Profunctor>(f.v(c, e));
          auto& xeg = std::get<Profunctor>(f.v(e, g));
          auto bc_ce = compose_prof(xbc, xce);
          auto ce_eg = compose_prof(xce, xeg);
          auto& cbce = f.comp.at({b, c, e}).to_bd;
          auto& cceg = f.comp.at({c, e, g}).to_bd;
          auto& cbcg = f.comp.at({b, c, g}).to_bd;
          auto& cbeg = f.comp.at({b, e, g}).to_bd;
          auto xbe_xeg = compose_prof(std::get<Profunctor>(f.v(b, e)), xeg);
          auto xbc_xcg = compose_prof(xbc, std::get<Profunctor>(f.v(c, g)));
          bool ok = true;
          for (int yb = 0; yb < xbc.a.nobj() && ok; ++yb)
            for (int yg = 0; yg < xeg.c.nobj() && ok; ++yg)
              for (int yc = 0; yc < xce.a.nobj() && ok; ++yc)
                for (int ye = 0; ye < xeg.a.nobj() && ok; ++ye)
                  for (int ebc = 0; ebc < xbc.nelem[yb][yc]; ++ebc)
                    for (int ece = 0; ece < xce.nelem[yc][ye]; ++ece)
                      for (int eeg = 0; eeg < xeg.nelem[ye][yg]; ++eeg) {
                        // route 1: collapse (b,c,e) then (b,e,g)
                        int xbe =
                            cbce[yb][ye][bc_ce.class_of(yb, ye, yc, ece, ebc)];
                        int r1 = cbeg[yb][yg]
                                     [xbe_xeg.class_of(yb, yg, ye, eeg, xbe)];
                        // route 2: collapse (c,e,g) then (b,c,g)
                        int xcg =
                            cceg[yc][yg][ce_eg.class_of(yc, yg, ye, eeg, ece)];
                        int r2 = cbcg[yb][yg]
                                     [xbc_xcg.class_of(yb, yg, yc, xcg, ebc)];
                        if (r1 != r2) {
                          ok = false;
                          break;
                        }
                      }
          if (!ok) out.push_back({b, c, e, "coherence failure through " +
                                               std::to_string(g)});
        }
  return out;
}

PseudoResult is_pseudo(const LaxFunctor& f) {
  int n = f.base.size();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      for (int e = 0; e < n; ++e) {
        if (!(f.base.lt(b, c) && f.base.lt(c, e))) continue;
        bool ok;
        if (flat(f.d)) {
          ok = special_iso(f.d, v_compose(f.d, f.v(b, c), f.v(c, e)), f.v(b, e));
        } else {
          // comparison components must be bijections
          auto cps = compose_prof(std::get<Profunctor>(f.v(b, c)),
                                  std::get<Profunctor>(f.v(c, e)));
          auto& direct = std::get<Profunctor>(f.v(b, e));
          auto& cc = f.comp.at({b, c, e}).to_bd;
          ok = true;
          for (int x = 0; x < cps.prof.a.nobj() && ok; ++x)
            for (int z = 0; z < cps.prof.c.nobj() && ok; ++z) {
              if (cps.prof.nelem[x][z] != direct.nelem[x][z]) ok = false;
              std::vector<bool> hit((size_t)direct.nelem[x][z], false);
              for (int v : cc[x][z]) {
                if (hit[v]) ok = false;
                hit[v] = true;
              }
            }
        }
        if (!ok) return {false, b, c, e};
      }
  return {};
}

LaxFunctor restrict_lax(const LaxFunctor& f, Mask a) {
  LaxFunctor r;
  r.d = f.d;
  r.base = f.base.restricted(a);
  std::vector<int> old_idx;
  for (int i = 0; i < f.base.size(); ++i)
    if (bit(a, i)) old_idx.push_back(i);
  for (int i : old_idx) r.obj.push_back(f.obj[i]);
  for (int i = 0; i < (int)old_idx.size(); ++i)
    for (int j = 0; j < (int)old_idx.size(); ++j)
      if (r.base.lt(i, j)) {
        r.vert.insert({{i, j}, f.v(old_idx[i], old_idx[j])});
        for (int k = 0; k < (int)old_idx.size(); ++k)
          if (r.base.lt(j, k) && !flat(f.d))
            r.comp.insert({{i, j, k}, f.comp.at({old_idx[i], old_idx[j], old_idx[k]})});
      }
  return r;
}

LaxFunctor extend_zero(const LaxFunctor& f, const FinPoset& big, Mask a) {
  require(big.restricted(a).same_order(f.base), "extend_zero: subposet mismatch");
  LaxFunctor r;
  r.d = f.d;
  r.base = big;
  std::vector<int> inner(big.size(), -1);
  int k = 0;
  for (int i = 0; i < big.size(); ++i)
    if (bit(a, i)) inner[i] = k++;
  for (int i = 0; i < big.size(); ++i)
    r.obj.push_back(inner[i] >= 0 ? f.obj[inner[i]] : zero_object(f.d));
  for (int b = 0; b < big.size(); ++b)
    for (int c = 0; c < big.size(); ++c) {
      if (!big.lt(b, c)) continue;
      if (inner[b] >= 0 && inner[c] >= 0)
        r.vert.insert({{b, c}, f.v(inner[b], inner[c])});
      else
        r.vert.insert({{b, c}, zero_vertical(f.d, r.obj[b], r.obj[c])});
    }
  if (!flat(f.d)) {
    for (int b = 0; b < big.size(); ++b)
      for (int c = 0; c < big.size(); ++c)
        for (int e = 0; e < big.size(); ++e) {
          if (!(big.lt(b, c) && big.lt(c, e))) continue;
          if (inner[b] >= 0 && inner[c] >= 0 && inner[e] >= 0) {
            r.comp.insert({{b, c, e}, f.comp.at({inner[b], inner[c], inner[e]})});
          } else {
            // a zero fiber in the middle or at an end: the composite is
            // empty, so the comparison family is the empty map family
            auto cps = compose_prof(std::get<Profunctor>(r.v(b, c)),
                                    std::get<Profunctor>(r.v(c, e)));
            CatComparison cc;
            cc.to_bd.assign(cps.prof.a.nobj(),
                            std::vector<std::vector<int>>(cps.prof.c.nobj()));
            for (int x = 0; x < cps.prof.a.nobj(); ++x)
              for (int z = 0; z < cps.prof.c.nobj(); ++z)
                require(cps.prof.nelem[x][z] == 0,
                        "zero-extended composite must be empty");
            r.comp.insert({{b, c, e}, cc});
          }
        }
  }
  return r;
}

LaxFunctor product_lax(const LaxFunctor& x, const LaxFunctor& y) {
  require(flat(x.d) && x.d == y.d, "product_lax: flat doctrines, same doctrine");
  require(x.base.same_order(y.base), "product_lax: same base");
  LaxFunctor r;
  r.d = x.d;
  r.base = x.base;
  for (int b = 0; b < x.base.size(); ++b)
    r.obj.push_back(product(x.d, x.obj[b], y.obj[b]));
  for (auto& [bc, m] : x.vert)
    r.vert.insert({bc, product_vertical(x.d, x.obj[bc.first], y.obj[bc.first],
                                        x.obj[bc.second], y.obj[bc.second], m,
                                        y.vert.at(bc))});
  return r;
}

ThetaResult theta(const LaxFunctor& x, const LaxFunctor& y, int b, int c, int e) {
  auto p = product_lax(x, y);
  ThetaResult t{v_compose(p.d, p.v(b, c), p.v(c, e)), p.v(b, e), false};
  t.invertible = special_iso(p.d, t.composite, t.direct);
  return t;
}

namespace {

FinPoset obj_poset(Doctrine d, const DObj& x) {
  if (d == Doctrine::Top) return std::get<FinSpace>(x).specialization;
  return std::get<FinPoset>(x);
}

std::vector<Vertical> all_verticals(Doctrine d, const DObj& from, const DObj& to) {
  std::vector<Vertical> out;
  if (d == Doctrine::Top) {
    for (auto& m : all_meet_maps(open_lattice(std::get<FinSpace>(from)).lat,
                                 open_lattice(std::get<FinSpace>(to)).lat))
      out.push_back(m);
  } else {
    for (auto& m :
         all_order_ideals(std::get<FinPoset>(from), std::get<FinPoset>(to)))
      out.push_back(m);
  }
  return out;
}

}  // namespace

bool preserves_pseudo(const LaxFunctor& y, int b, int c, int e, int sample_bound) {
  require(flat(y.d), "preserves_pseudo: flat doctrines only");
  LaxFunctor yy = y.d == Doctrine::Loc ? loc_to_top(y) : y;
  Mask tri = (Mask(1) << b) | (Mask(1) << c) | (Mask(1) << e);
  LaxFunctor yr = restrict_lax(yy, tri);
  // fiber candidates
  std::vector<DObj> fibers;
  for (int n = 0; n <= sample_bound; ++n)
    for (auto& p : posets_up_to_iso(n)) {
      if (yr.d == Doctrine::Top)
        fibers.push_back(FinSpace{p});
      else if (yr.d == Doctrine::Rel) {
        if (p.canonical_key() == FinPoset::antichain(n).canonical_key())
          fibers.push_back(FinPoset::antichain(n));
      } else
        fibers.push_back(p);
    }
  for (auto& x0 : fibers)
    for (auto& x1 : fibers)
      for (auto& x2 : fibers)
        for (auto& m01 : all_verticals(yr.d, x0, x1))
          for (auto& m12 : all_verticals(yr.d, x1, x2)) {
            LaxFunctor x;
            x.d = yr.d;
            x.base = yr.base;
            x.obj = {x0, x1, x2};
            x.vert.insert({{0, 1}, m01});
            x.vert.insert({{1, 2}, m12});
            x.vert.insert({{0, 2}, v_compose(yr.d, m01, m12)});
            if (!theta(x, yr, 0, 1, 2).invertible) return false;
          }
  return true;
}

bool ht_valid(const LaxFunctor& x, const LaxFunctor& y,
              const HorizontalTransformation& t) {
  require(x.d == y.d && x.base.same_order(y.base), "ht: mismatched functors");
  int n = x.base.size();
  if (x.d == Doctrine::Cat) {
    if ((int)t.fun.size() != n) return false;
    for (int b = 0; b < n; ++b)
      if (!t.fun[b].is_valid() ||
          t.fun[b].dom.src != std::get<FinCat>(x.obj[b]).src ||
          t.fun[b].cod.src != std::get<FinCat>(y.obj[b]).src)
        return false;
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!x.base.lt(b, c)) continue;
        auto it = t.square.find({b, c});
        if (it == t.square.end()) return false;
        if (!cell_check(t.fun[b], std::get<Profunctor>(x.v(b, c)),
                        std::get<Profunctor>(y.v(b, c)), t.fun[c], it->second))
          return false;
      }
    return true;
  }
  if (x.d == Doctrine::Loc)
    return ht_valid(loc_to_top(x), loc_to_top(y), t);
  if ((int)t.part.size() != n) return false;
  for (int b = 0; b < n; ++b) {
    FinPoset pb = obj_poset(x.d, x.obj[b]), qb = obj_poset(y.d, y.obj[b]);
    if ((int)t.part[b].size() != pb.size()) return false;
    for (int v : t.part[b])
      if (v < 0 || v >= qb.size()) return false;
    if (!is_monotone(pb, qb, t.part[b])) return false;
  }
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      if (!x.base.lt(b, c)) continue;
      if (!cell_exists(x.d, x.obj[b], y.obj[b], x.obj[c], y.obj[c], t.part[b],
                       x.v(b, c), y.v(b, c), t.part[c]))
        return false;
    }
  return true;
}

std::vector<HorizontalTransformation> all_transformations(const LaxFunctor& x,
                                                          const LaxFunctor& y) {
  require(flat(x.d) && x.d != Doctrine::Loc,
          "all_transformations: pointlike flat doctrines");
  int n = x.base.size();
  std::vector<std::vector<std::vector<int>>> cand(n);
  for (int b = 0; b < n; ++b) {
    cand[b] = monotone_maps(obj_poset(x.d, x.obj[b]), obj_poset(y.d, y.obj[b]));
    if (cand[b].empty()) return {};
  }
  std::vector<HorizontalTransformation> out;
  std::vector<int> pick(n, 0);
  while (true) {
    HorizontalTransformation t;
    for (int b = 0; b < n; ++b) t.part.push_back(cand[b][pick[b]]);
    if (ht_valid(x, y, t)) out.push_back(std::move(t));
    if (n == 0) break;
    int i = n - 1;
    while (i >= 0 && pick[i] == (int)cand[i].size() - 1) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

LaxFunctor const_lax(Doctrine d, const FinPoset& base, const DObj& w) {
  LaxFunctor r;
  r.d = d;
  r.base = base;
  r.obj.assign(base.size(), w);
  Vertical idv = v_identity(d, w);
  for (int b = 0; b < base.size(); ++b)
    for (int c = 0; c < base.size(); ++c)
      if (base.lt(b, c)) r.vert.insert({{b, c}, idv});
  if (d == Doctrine::Cat) {
    auto& cat = std::get<FinCat>(w);
    auto& hp = std::get<Profunctor>(idv);
    auto cps = compose_prof(hp, hp);
    CatComparison cc;
    cc.to_bd.assign(cat.nobj(), std::vector<std::vector<int>>(cat.nobj()));
    for (int a = 0; a < cat.nobj(); ++a)
      for (int z = 0; z < cat.nobj(); ++z) {
        cc.to_bd[a][z].assign(cps.prof.nelem[a][z], -1);
        auto homs_az = cat.hom(a, z);
        for (int i = 0; i < (int)cps.triples[a][z].size(); ++i) {
          auto [mid, yi, xi] = cps.triples[a][z][i];
          int cls = cps.cls[a][z][i];
          if (cc.to_bd[a][z][cls] >= 0) continue;
          int g = cat.hom(mid, z)[yi];
          int f = cat.hom(a, mid)[xi];
          int gf = cat.comp[g][f];
          cc.to_bd[a][z][cls] =
              (int)(std::find(homs_az.begin(), homs_az.end(), gf) - homs_az.begin());
        }
      }
    for (int b = 0; b < base.size(); ++b)
      for (int c = 0; c < base.size(); ++c)
        for (int e = 0; e < base.size(); ++e)
          if (base.lt(b, c) && base.lt(c, e)) r.comp.insert({{b, c, e}, cc});
  }
  return r;
}

LaxFunctor lax_from_vertical(Doctrine d, const DObj& x0, const DObj& x1,
                             const Vertical& m) {
  LaxFunctor r;
  r.d = d;
  r.base = FinPoset::chain(2);
  r.obj = {x0, x1};
  r.vert.insert({{0, 1}, m});
  return r;
}

LaxFunctor loc_to_top(const LaxFunctor& f) {
  require(f.d == Doctrine::Loc, "loc_to_top: Loc input");
  LaxFunctor r;
  r.d = Doctrine::Top;
  r.base = f.base;
  std::vector<SpatialFrame> sf;
  std::vector<std::vector<int>> to_open;   // lattice elem -> open index
  std::vector<std::vector<int>> from_open; // open index -> lattice elem
  std::vector<OpenLattice> ols;
  for (int b = 0; b < f.base.size(); ++b) {
    sf.push_back(frame_to_space(std::get<FinLattice>(f.obj[b])));
    r.obj.push_back(sf.back().space);
    ols.push_back(open_lattice(sf.back().space));
    auto& l = std::get<FinLattice>(f.obj[b]);
    std::vector<int> fwd(l.size()), bwd(ols.back().lat.size(), -1);
    for (int u = 0; u < l.size(); ++u) {
      fwd[u] = ols.back().index_of(sf.back().elem_open[u]);
      bwd[fwd[u]] = u;
    }
    for (int i : bwd) require(i >= 0, "frame is not spatial");
    to_open.push_back(fwd);
    from_open.push_back(bwd);
  }
  for (auto& [bc, m] : f.vert) {
    auto& mm = std::get<MeetMap>(m);
    auto [b, c] = bc;
    MeetMap t{ols[b].lat, ols[c].lat, {}};
    for (int i = 0; i < ols[b].lat.size(); ++i)
      t.map.push_back(to_open[c][mm.apply(from_open[b][i])]);
    r.vert.insert({bc, t});
  }
  return r;
}

LaxFunctor top_to_loc(const LaxFunctor& f) {
  require(f.d == Doctrine::Top, "top_to_loc: Top input");
  LaxFunctor r;
  r.d = Doctrine::Loc;
  r.base = f.base;
  for (auto& o : f.obj)
    r.obj.push_back(open_lattice(std::get<FinSpace>(o)).lat);
  for (auto& [bc, m] : f.vert) r.vert.insert({bc, m});
  return r;
}

}  // namespace expokit
