#include "expokit/doctrine.hpp"

#include <cmath>
#include <numeric>

namespace expokit {

const char* doctrine_name(Doctrine d) {
  switch (d) {
    case Doctrine::Cat: return "cat";
    case Doctrine::Top: return "top";
    case Doctrine::Loc: return "loc";
    case Doctrine::Pos: return "pos";
    case Doctrine::Rel: return "rel";
  }
  return "?";
}

bool MeetMap::is_valid() const {
  if (!src.is_valid() || !tgt.is_valid()) return false;
  if ((int)map.size() != src.size()) return false;
  for (int v : map)
    if (v < 0 || v >= tgt.size()) return false;
  if (map[src.top] != tgt.top) return false;
  for (int a = 0; a < src.size(); ++a)
    for (int b = 0; b < src.size(); ++b)
      if (map[src.meet(a, b)] != tgt.meet(map[a], map[b])) return false;
  return true;
}

MeetMap meet_identity(const FinLattice& l) {
  MeetMap m{l, l, {}};
  m.map.resize(l.size());
  std::iota(m.map.begin(), m.map.end(), 0);
  return m;
}

MeetMap meet_compose(const MeetMap& m, const MeetMap& n) {
  require(m.tgt.dn == n.src.dn, "meet_compose: boundary mismatch");
  MeetMap r{m.src, n.tgt, {}};
  for (int u : m.map) r.map.push_back(n.map[u]);
  return r;
}

std::vector<MeetMap> all_meet_maps(const FinLattice& src, const FinLattice& tgt) {
  int n = src.size(), t = tgt.size();
  if (n * std::log((double)t) > std::log(2e7))
    throw cap_exceeded("all_meet_maps: table space too large");
  std::vector<MeetMap> out;
  MeetMap m{src, tgt, std::vector<int>(n, 0)};
  while (true) {
    if (m.is_valid()) out.push_back(m);
    int i = n - 1;
    while (i >= 0 && m.map[i] == t - 1) m.map[i--] = 0;
    if (i < 0) break;
    ++m.map[i];
  }
  return out;
}

bool OrderIdeal::is_valid() const {
  if (!src.is_valid() || !tgt.is_valid()) return false;
  if ((int)pairs.size() != src.size()) return false;
  for (Mask p : pairs)
    if ((p & ~full_mask(tgt.size())) != 0) return false;
  for (int x0 = 0; x0 < src.size(); ++x0) {
    if (!tgt.is_up(pairs[x0])) return false;
    for (int x0p = 0; x0p < src.size(); ++x0p)
      if (src.leq(x0p, x0) && (pairs[x0] & ~pairs[x0p]) != 0) return false;
  }
  return true;
}

OrderIdeal ideal_identity(const FinPoset& p) {
  OrderIdeal m{p, p, {}};
  for (int x = 0; x < p.size(); ++x) m.pairs.push_back(p.up_of(x));
  return m;
}

OrderIdeal ideal_compose(const OrderIdeal& m, const OrderIdeal& n) {
  require(m.tgt.dn == n.src.dn, "ideal_compose: boundary mismatch");
  OrderIdeal r{m.src, n.tgt, {}};
  for (int x0 = 0; x0 < m.src.size(); ++x0) {
    Mask out = 0;
    for (int x1 = 0; x1 < m.tgt.size(); ++x1)
      if (m.has(x0, x1)) out |= n.pairs[x1];
    r.pairs.push_back(out);
  }
  return r;
}

std::vector<OrderIdeal> all_order_ideals(const FinPoset& src, const FinPoset& tgt) {
  auto ups = up_sets(tgt);
  int n = src.size();
  if (n * std::log((double)std::max<size_t>(ups.size(), 1)) > std::log(2e7))
    throw cap_exceeded("all_order_ideals: table space too large");
  std::vector<OrderIdeal> out;
  OrderIdeal m{src, tgt, std::vector<Mask>(n, 0)};
  std::vector<int> choice(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i) m.pairs[i] = ups[choice[i]];
    bool ok = true;
    for (int x0 = 0; x0 < n && ok; ++x0)
      for (int x0p = 0; x0p < n && ok; ++x0p)
        if (src.leq(x0p, x0) && (m.pairs[x0] & ~m.pairs[x0p]) != 0) ok = false;
    if (ok) out.push_back(m);
    if (n == 0) break;
    int i = n - 1;
    while (i >= 0 && choice[i] == (int)ups.size() - 1) choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }
  return out;
}

bool obj_valid(Doctrine d, const DObj& x) {
  switch (d) {
    case Doctrine::Top:
      return std::holds_alternative<FinSpace>(x) &&
             std::get<FinSpace>(x).specialization.is_valid();
    case Doctrine::Loc:
      return std::holds_alternative<FinLattice>(x) &&
             std::get<FinLattice>(x).is_valid() &&
             std::get<FinLattice>(x).is_distributive();
    case Doctrine::Pos:
      return std::holds_alternative<FinPoset>(x) && std::get<FinPoset>(x).is_valid();
    case Doctrine::Rel: {
      if (!std::holds_alternative<FinPoset>(x)) return false;
      const FinPoset& p = std::get<FinPoset>(x);
      if (!p.is_valid()) return false;
      for (int i = 0; i < p.size(); ++i)
        if (p.dn[i] != (Mask(1) << i)) return false;  // sets are antichains
      return true;
    }
    case Doctrine::Cat:
      return std::holds_alternative<FinCat>(x) && std::get<FinCat>(x).is_valid();
  }
  return false;
}

std::string obj_brief(Doctrine d, const DObj& x) {
  switch (d) {
    case Doctrine::Top: return std::to_string(std::get<FinSpace>(x).size()) + " points";
    case Doctrine::Loc: return std::to_string(std::get<FinLattice>(x).size()) + " frame elems";
    case Doctrine::Pos:
    case Doctrine::Rel: return std::to_string(std::get<FinPoset>(x).size()) + " elems";
    case Doctrine::Cat: {
      auto& c = std::get<FinCat>(x);
      return std::to_string(c.nobj()) + " objs/" + std::to_string(c.nmor()) + " mors";
    }
  }
  return "?";
}

Vertical v_identity(Doctrine d, const DObj& x) {
  switch (d) {
    case Doctrine::Top: return meet_identity(open_lattice(std::get<FinSpace>(x)).lat);
    case Doctrine::Loc: return meet_identity(std::get<FinLattice>(x));
    case Doctrine::Pos:
    case Doctrine::Rel: return ideal_identity(std::get<FinPoset>(x));
    case Doctrine::Cat: return Profunctor::hom_of(std::get<FinCat>(x));
  }
  throw invalid_instance("bad doctrine");
}

Vertical v_compose(Doctrine d, const Vertical& m, const Vertical& n) {
  (void)d;
  if (std::holds_alternative<MeetMap>(m))
    return meet_compose(std::get<MeetMap>(m), std::get<MeetMap>(n));
  if (std::holds_alternative<OrderIdeal>(m))
    return ideal_compose(std::get<OrderIdeal>(m), std::get<OrderIdeal>(n));
  return compose_prof(std::get<Profunctor>(m), std::get<Profunctor>(n)).prof;
}

bool cell_exists(Doctrine d, const DObj& x0, const DObj& x0p, const DObj& x1,
                 const DObj& x1p, const Horizontal& f0, const Vertical& m,
                 const Vertical& n, const Horizontal& f1) {
  require(flat(d), "cell_exists: use cell_check for Cat");
  switch (d) {
    case Doctrine::Top: {
      auto ol0 = open_lattice(std::get<FinSpace>(x0));
      auto ol0p = open_lattice(std::get<FinSpace>(x0p));
      auto ol1 = open_lattice(std::get<FinSpace>(x1));
      auto ol1p = open_lattice(std::get<FinSpace>(x1p));
      auto& mm = std::get<MeetMap>(m);
      auto& nn = std::get<MeetMap>(n);
      auto preim = [](const Horizontal& f, Mask open, int npts) {
        Mask r = 0;
        for (int p = 0; p < npts; ++p)
          if (bit(open, f[p])) r |= Mask(1) << p;
        return r;
      };
      for (int up = 0; up < ol0p.lat.size(); ++up) {
        Mask lhs = preim(f1, ol1p.opens[nn.apply(up)], (int)f1.size());
        Mask rhs =
            ol1.opens[mm.apply(ol0.index_of(preim(f0, ol0p.opens[up], (int)f0.size())))];
        if ((lhs & ~rhs) != 0) return false;
      }
      return true;
    }
    case Doctrine::Loc: {
      auto& mm = std::get<MeetMap>(m);
      auto& nn = std::get<MeetMap>(n);
      const FinLattice& l1 = std::get<FinLattice>(x1);
      (void)x0;
      (void)x1p;
      for (int up = 0; up < std::get<FinLattice>(x0p).size(); ++up)
        if (!l1.leq(f1[nn.apply(up)], mm.apply(f0[up]))) return false;
      return true;
    }
    case Doctrine::Pos:
    case Doctrine::Rel: {
      auto& mm = std::get<OrderIdeal>(m);
      auto& nn = std::get<OrderIdeal>(n);
      (void)x0;
      (void)x0p;
      (void)x1;
      (void)x1p;
      for (int a = 0; a < (int)mm.pairs.size(); ++a)
        for (int b = 0; b < mm.tgt.size(); ++b)
          if (mm.has(a, b) && !nn.has(f0[a], f1[b])) return false;
      return true;
    }
    default: break;
  }
  throw invalid_instance("bad doctrine");
}

bool cell_check(const FinFunctor& f0, const Profunctor& m, const Profunctor& n,
                const FinFunctor& f1,
                const std::vector<std::vector<std::vector<int>>>& data) {
  int na = m.a.nobj(), nc = m.c.nobj();
  if ((int)data.size() != na) return false;
  for (int x0 = 0; x0 < na; ++x0) {
    if ((int)data[x0].size() != nc) return false;
    for (int x1 = 0; x1 < nc; ++x1) {
      if ((int)data[x0][x1].size() != m.nelem[x0][x1]) return false;
      for (int v : data[x0][x1])
        if (v < 0 || v >= n.nelem[f0.obj_map[x0]][f1.obj_map[x1]]) return false;
    }
  }
  for (int g = 0; g < m.a.nmor(); ++g) {
    int xt = m.a.tgt[g], xs = m.a.src[g];
    for (int x1 = 0; x1 < nc; ++x1)
      for (int e = 0; e < m.nelem[xt][x1]; ++e)
        if (data[xs][x1][m.act_l[g][x1][e]] !=
            n.act_l[f0.mor_map[g]][f1.obj_map[x1]][data[xt][x1][e]])
          return false;
  }
  for (int h = 0; h < m.c.nmor(); ++h) {
    int zs = m.c.src[h], zt = m.c.tgt[h];
    for (int x0 = 0; x0 < na; ++x0)
      for (int e = 0; e < m.nelem[x0][zs]; ++e)
        if (data[x0][zt][m.act_r[h][x0][e]] !=
            n.act_r[f1.mor_map[h]][f0.obj_map[x0]][data[x0][zs][e]])
          return false;
  }
  return true;
}

bool special_iso(Doctrine d, const Vertical& m, const Vertical& n) {
  (void)d;
  if (std::holds_alternative<MeetMap>(m))
    return std::get<MeetMap>(m).same_map(std::get<MeetMap>(n));
  if (std::holds_alternative<OrderIdeal>(m))
    return std::get<OrderIdeal>(m).same_pairs(std::get<OrderIdeal>(n));
  return prof_iso_exists(std::get<Profunctor>(m), std::get<Profunctor>(n));
}

DObj zero_object(Doctrine d) {
  switch (d) {
    case Doctrine::Top: return FinSpace::empty();
    case Doctrine::Loc: return FinLattice::one();
    case Doctrine::Pos:
    case Doctrine::Rel: return FinPoset::empty();
    case Doctrine::Cat: return FinCat::empty();
  }
  throw invalid_instance("bad doctrine");
}

DObj product(Doctrine d, const DObj& x, const DObj& y) {
  switch (d) {
    case Doctrine::Top:
      return FinSpace{FinPoset::product(std::get<FinSpace>(x).specialization,
                                        std::get<FinSpace>(y).specialization)};
    case Doctrine::Pos:
    case Doctrine::Rel:
      return FinPoset::product(std::get<FinPoset>(x), std::get<FinPoset>(y));
    case Doctrine::Loc: {
      // localic product = opens of the product of the spectra
      auto sx = frame_to_space(std::get<FinLattice>(x));
      auto sy = frame_to_space(std::get<FinLattice>(y));
      return open_lattice(FinSpace{FinPoset::product(sx.space.specialization,
                                                     sy.space.specialization)})
          .lat;
    }
    case Doctrine::Cat:
      return FinCat::product(std::get<FinCat>(x), std::get<FinCat>(y));
  }
  throw invalid_instance("bad doctrine");
}

std::pair<Horizontal, Horizontal> product_projections(Doctrine d, const DObj& x,
                                                      const DObj& y) {
  auto pointwise = [](int nx, int ny) {
    Horizontal p1, p2;
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j) {
        p1.push_back(i);
        p2.push_back(j);
      }
    return std::make_pair(p1, p2);
  };
  switch (d) {
    case Doctrine::Top:
      return pointwise(std::get<FinSpace>(x).size(), std::get<FinSpace>(y).size());
    case Doctrine::Pos:
    case Doctrine::Rel:
      return pointwise(std::get<FinPoset>(x).size(), std::get<FinPoset>(y).size());
    case Doctrine::Loc: {
      // frame maps backwards: element of the factor frame -> element of
      // the product frame (preimage open under the spatial projection)
      auto sx = frame_to_space(std::get<FinLattice>(x));
      auto sy = frame_to_space(std::get<FinLattice>(y));
      int nx = sx.space.size(), ny = sy.space.size();
      auto olp = open_lattice(
          FinSpace{FinPoset::product(sx.space.specialization, sy.space.specialization)});
      Horizontal p1, p2;
      for (int u = 0; u < std::get<FinLattice>(x).size(); ++u) {
        Mask prod = 0;
        for (int i = 0; i < nx; ++i)
          if (bit(sx.elem_open[u], i)) prod |= ((Mask(1) << ny) - 1) << (i * ny);
        p1.push_back(olp.index_of(prod));
      }
      for (int u = 0; u < std::get<FinLattice>(y).size(); ++u) {
        Mask col = 0;
        for (int j = 0; j < ny; ++j)
          if (bit(sy.elem_open[u], j)) col |= Mask(1) << j;
        Mask prod = 0;
        for (int i = 0; i < nx; ++i) prod |= col << (i * ny);
        p2.push_back(olp.index_of(prod));
      }
      return {p1, p2};
    }
    default: break;
  }
  throw invalid_instance("product_projections: unsupported doctrine");
}

SpatialFrame frame_to_space(const FinLattice& l) {
  require(l.is_valid() && l.is_distributive(), "frame_to_space: not a finite frame");
  SpatialFrame sf;
  for (int j = 0; j < l.size(); ++j) {
    if (j == l.bot) continue;
    bool irr = true;
    for (int a = 0; a < l.size() && irr; ++a)
      for (int b = 0; b < l.size() && irr; ++b)
        if (l.join(a, b) == j && a != j && b != j) irr = false;
    if (irr) sf.irr.push_back(j);
  }
  FinPoset p;
  int k = (int)sf.irr.size();
  for (int i = 0; i < k; ++i) {
    p.names.push_back(l.names[sf.irr[i]]);
    Mask m = 0;
    for (int i2 = 0; i2 < k; ++i2)
      if (l.leq(sf.irr[i2], sf.irr[i])) m |= Mask(1) << i2;
    p.dn.push_back(m);
  }
  sf.space = FinSpace{p};
  for (int u = 0; u < l.size(); ++u) {
    Mask m = 0;
    for (int i = 0; i < k; ++i)
      if (l.leq(sf.irr[i], u)) m |= Mask(1) << i;
    sf.elem_open.push_back(m);
  }
  return sf;
}

}  // namespace expokit
