#include "expokit/cat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

namespace expokit {

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < nmor(); ++f)
    if (src[f] == a && tgt[f] == b) out.push_back(f);
  return out;
}

int FinCat::arrow(int a, int b) const {
  for (int f = 0; f < nmor(); ++f)
    if (src[f] == a && tgt[f] == b) return f;
  return -1;
}

bool FinCat::is_valid() const {
  int m = nmor();
  if ((int)src.size() != m || (int)tgt.size() != m) return false;
  if ((int)id_of.size() != nobj()) return false;
  for (int o = 0; o < nobj(); ++o) {
    int i = id_of[o];
    if (i < 0 || i >= m || src[i] != o || tgt[i] != o) return false;
  }
  if ((int)comp.size() != m) return false;
  for (int g = 0; g < m; ++g) {
    if ((int)comp[g].size() != m) return false;
    for (int f = 0; f < m; ++f) {
      int c = comp[g][f];
      if (tgt[f] != src[g]) {
        if (c != -1) return false;
        continue;
      }
      if (c < 0 || c >= m || src[c] != src[f] || tgt[c] != tgt[g]) return false;
    }
  }
  for (int f = 0; f < m; ++f) {
    if (comp[id_of[tgt[f]]][f] != f) return false;
    if (comp[f][id_of[src[f]]] != f) return false;
  }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (tgt[f] != src[g]) continue;
      for (int h = 0; h < m; ++h) {
        if (tgt[g] != src[h]) continue;
        if (comp[h][comp[g][f]] != comp[comp[h][g]][f]) return false;
      }
    }
  return true;
}

FinCat FinCat::from_poset(const FinPoset& p) {
  FinCat c;
  c.obj_names = p.names;
  c.id_of.assign(p.size(), -1);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.leq(a, b)) {
        if (a == b) c.id_of[a] = (int)c.mor_names.size();
        c.mor_names.push_back(p.names[a] + "<" + p.names[b]);
        c.src.push_back(a);
        c.tgt.push_back(b);
      }
  int m = c.nmor();
  c.comp.assign(m, std::vector<int>(m, -1));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      if (c.tgt[f] == c.src[g]) c.comp[g][f] = c.arrow(c.src[f], c.tgt[g]);
  return c;
}

FinCat FinCat::product(const FinCat& a, const FinCat& b) {
  FinCat c;
  for (auto& x : a.obj_names)
    for (auto& y : b.obj_names) c.obj_names.push_back("(" + x + "," + y + ")");
  auto oi = [&](int i, int j) { return i * b.nobj() + j; };
  auto mi = [&](int f, int g) { return f * b.nmor() + g; };
  c.id_of.assign(c.nobj(), -1);
  for (int f = 0; f < a.nmor(); ++f)
    for (int g = 0; g < b.nmor(); ++g) {
      c.mor_names.push_back("(" + a.mor_names[f] + "," + b.mor_names[g] + ")");
      c.src.push_back(oi(a.src[f], b.src[g]));
      c.tgt.push_back(oi(a.tgt[f], b.tgt[g]));
    }
  for (int i = 0; i < a.nobj(); ++i)
    for (int j = 0; j < b.nobj(); ++j)
      c.id_of[oi(i, j)] = mi(a.id_of[i], b.id_of[j]);
  int m = c.nmor();
  c.comp.assign(m, std::vector<int>(m, -1));
  for (int f = 0; f < a.nmor(); ++f)
    for (int g = 0; g < b.nmor(); ++g)
      for (int f2 = 0; f2 < a.nmor(); ++f2)
        for (int g2 = 0; g2 < b.nmor(); ++g2) {
          if (a.tgt[f] != a.src[f2] || b.tgt[g] != b.src[g2]) continue;
          c.comp[mi(f2, g2)][mi(f, g)] = mi(a.comp[f2][f], b.comp[g2][g]);
        }
  return c;
}

std::string FinCat::canonical_key() const {
  int k = nobj(), m = nmor();
  std::vector<int> operm(k);
  std::iota(operm.begin(), operm.end(), 0);
  std::string best;
  do {
    // cell lists of non-identity morphisms, keyed by image cell
    std::vector<std::vector<int>> cells(k * k);
    for (int f = 0; f < m; ++f)
      if (!is_id(f)) cells[operm[src[f]] * k + operm[tgt[f]]].push_back(f);
    // enumerate within-cell permutations
    std::vector<std::vector<int>> perms;  // current permutation per cell
    std::vector<int> order;               // cells with >1 entries... handle generally
    // recursive enumeration over cells
    std::vector<std::vector<int>> cur(k * k);
    for (int i = 0; i < k * k; ++i) {
      cur[i] = cells[i];
      std::sort(cur[i].begin(), cur[i].end());
    }
    std::function<void(int)> rec = [&](int ci) {
      if (ci == k * k) {
        // new order: ids by new object index, then cells in order
        std::vector<int> new2old;
        std::vector<int> inv_operm(k);
        for (int o = 0; o < k; ++o) inv_operm[operm[o]] = o;
        for (int o = 0; o < k; ++o) new2old.push_back(id_of[inv_operm[o]]);
        for (int i = 0; i < k * k; ++i)
          for (int f : cur[i]) new2old.push_back(f);
        std::vector<int> old2new(m);
        for (int i = 0; i < m; ++i) old2new[new2old[i]] = i;
        std::string key;
        key.reserve(m * m + 2 * m);
        for (int i = 0; i < m; ++i) {
          key.push_back((char)('a' + operm[src[new2old[i]]]));
          key.push_back((char)('a' + operm[tgt[new2old[i]]]));
        }
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) {
            int c = comp[new2old[i]][new2old[j]];
            key.push_back(c < 0 ? '.' : (char)('a' + old2new[c]));
          }
        if (best.empty() || key < best) best = key;
        return;
      }
      if (cur[ci].size() <= 1) {
        rec(ci + 1);
        return;
      }
      std::sort(cur[ci].begin(), cur[ci].end());
      do {
        rec(ci + 1);
      } while (std::next_permutation(cur[ci].begin(), cur[ci].end()));
    };
    rec(0);
  } while (std::next_permutation(operm.begin(), operm.end()));
  return std::to_string(k) + "/" + std::to_string(m) + ":" + best;
}

bool FinFunctor::is_valid() const {
  if ((int)obj_map.size() != dom.nobj() || (int)mor_map.size() != dom.nmor())
    return false;
  for (int f = 0; f < dom.nmor(); ++f) {
    int ff = mor_map[f];
    if (ff < 0 || ff >= cod.nmor()) return false;
    if (cod.src[ff] != obj_map[dom.src[f]] || cod.tgt[ff] != obj_map[dom.tgt[f]])
      return false;
  }
  for (int o = 0; o < dom.nobj(); ++o)
    if (mor_map[dom.id_of[o]] != cod.id_of[obj_map[o]]) return false;
  for (int f = 0; f < dom.nmor(); ++f)
    for (int g = 0; g < dom.nmor(); ++g) {
      if (dom.tgt[f] != dom.src[g]) continue;
      if (mor_map[dom.comp[g][f]] != cod.comp[mor_map[g]][mor_map[f]]) return false;
    }
  return true;
}

FinFunctor FinFunctor::identity(const FinCat& c) {
  FinFunctor f{c, c, {}, {}};
  f.obj_map.resize(c.nobj());
  std::iota(f.obj_map.begin(), f.obj_map.end(), 0);
  f.mor_map.resize(c.nmor());
  std::iota(f.mor_map.begin(), f.mor_map.end(), 0);
  return f;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  FinFunctor h{f.dom, g.cod, {}, {}};
  for (int o = 0; o < f.dom.nobj(); ++o) h.obj_map.push_back(g.obj_map[f.obj_map[o]]);
  for (int m = 0; m < f.dom.nmor(); ++m) h.mor_map.push_back(g.mor_map[f.mor_map[m]]);
  return h;
}

CatPullback cat_pullback(const FinFunctor& p, const FinFunctor& q) {
  CatPullback pb;
  FinCat& t = pb.total;
  std::vector<std::pair<int, int>> objs, mors;
  for (int x = 0; x < p.dom.nobj(); ++x)
    for (int y = 0; y < q.dom.nobj(); ++y)
      if (p.obj_map[x] == q.obj_map[y]) {
        objs.push_back({x, y});
        t.obj_names.push_back("(" + p.dom.obj_names[x] + "," + q.dom.obj_names[y] + ")");
      }
  auto oidx = [&](int x, int y) {
    return (int)(std::find(objs.begin(), objs.end(), std::make_pair(x, y)) - objs.begin());
  };
  for (int f = 0; f < p.dom.nmor(); ++f)
    for (int g = 0; g < q.dom.nmor(); ++g)
      if (p.mor_map[f] == q.mor_map[g]) {
        mors.push_back({f, g});
        t.mor_names.push_back("(" + p.dom.mor_names[f] + "," + q.dom.mor_names[g] + ")");
        t.src.push_back(oidx(p.dom.src[f], q.dom.src[g]));
        t.tgt.push_back(oidx(p.dom.tgt[f], q.dom.tgt[g]));
      }
  auto midx = [&](int f, int g) {
    return (int)(std::find(mors.begin(), mors.end(), std::make_pair(f, g)) - mors.begin());
  };
  t.id_of.assign(t.nobj(), -1);
  for (int i = 0; i < (int)objs.size(); ++i)
    t.id_of[i] = midx(p.dom.id_of[objs[i].first], q.dom.id_of[objs[i].second]);
  int m = t.nmor();
  t.comp.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (t.tgt[j] != t.src[i]) continue;
      t.comp[i][j] = midx(p.dom.comp[mors[i].first][mors[j].first],
                          q.dom.comp[mors[i].second][mors[j].second]);
    }
  pb.proj1 = FinFunctor{t, p.dom, {}, {}};
  pb.proj2 = FinFunctor{t, q.dom, {}, {}};
  for (auto& [x, y] : objs) {
    pb.proj1.obj_map.push_back(x);
    pb.proj2.obj_map.push_back(y);
  }
  for (auto& [f, g] : mors) {
    pb.proj1.mor_map.push_back(f);
    pb.proj2.mor_map.push_back(g);
  }
  return pb;
}

bool Profunctor::is_valid() const {
  int na = a.nobj(), nc = c.nobj();
  if ((int)nelem.size() != na) return false;
  for (auto& row : nelem)
    if ((int)row.size() != nc) return false;
  for (int g = 0; g < a.nmor(); ++g)
    for (int z = 0; z < nc; ++z) {
      if ((int)act_l[g][z].size() != nelem[a.tgt[g]][z]) return false;
      for (int e : act_l[g][z])
        if (e < 0 || e >= nelem[a.src[g]][z]) return false;
    }
  for (int h = 0; h < c.nmor(); ++h)
    for (int x = 0; x < na; ++x) {
      if ((int)act_r[h][x].size() != nelem[x][c.src[h]]) return false;
      for (int e : act_r[h][x])
        if (e < 0 || e >= nelem[x][c.tgt[h]]) return false;
    }
  // identities act trivially
  for (int o = 0; o < na; ++o)
    for (int z = 0; z < nc; ++z)
      for (int e = 0; e < nelem[o][z]; ++e)
        if (act_l[a.id_of[o]][z][e] != e) return false;
  for (int o = 0; o < nc; ++o)
    for (int x = 0; x < na; ++x)
      for (int e = 0; e < nelem[x][o]; ++e)
        if (act_r[c.id_of[o]][x][e] != e) return false;
  // actions compose
  for (int g = 0; g < a.nmor(); ++g)
    for (int g2 = 0; g2 < a.nmor(); ++g2) {
      if (a.tgt[g2] != a.src[g]) continue;
      int gg = a.comp[g][g2];  // g.g2 : src g2 -> tgt g
      for (int z = 0; z < nc; ++z)
        for (int e = 0; e < nelem[a.tgt[g]][z]; ++e)
          if (act_l[gg][z][e] != act_l[g2][z][act_l[g][z][e]]) return false;
    }
  for (int h = 0; h < c.nmor(); ++h)
    for (int h2 = 0; h2 < c.nmor(); ++h2) {
      if (c.tgt[h] != c.src[h2]) continue;
      int hh = c.comp[h2][h];
      for (int x = 0; x < na; ++x)
        for (int e = 0; e < nelem[x][c.src[h]]; ++e)
          if (act_r[hh][x][e] != act_r[h2][x][act_r[h][x][e]]) return false;
    }
  // left and right actions commute
  for (int g = 0; g < a.nmor(); ++g)
    for (int h = 0; h < c.nmor(); ++h)
      for (int e = 0; e < nelem[a.tgt[g]][c.src[h]]; ++e)
        if (act_r[h][a.src[g]][act_l[g][c.src[h]][e]] !=
            act_l[g][c.tgt[h]][act_r[h][a.tgt[g]][e]])
          return false;
  return true;
}

Profunctor Profunctor::hom_of(const FinCat& x) {
  Profunctor p;
  p.a = x;
  p.c = x;
  int n = x.nobj();
  std::vector<std::vector<std::vector<int>>> homs(n, std::vector<std::vector<int>>(n));
  p.nelem.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      homs[i][j] = x.hom(i, j);
      p.nelem[i][j] = (int)homs[i][j].size();
    }
  auto pos = [&](int i, int j, int f) {
    auto& h = homs[i][j];
    return (int)(std::find(h.begin(), h.end(), f) - h.begin());
  };
  p.act_l.assign(x.nmor(), std::vector<std::vector<int>>(n));
  p.act_r.assign(x.nmor(), std::vector<std::vector<int>>(n));
  for (int g = 0; g < x.nmor(); ++g)
    for (int z = 0; z < n; ++z) {
      auto& out = p.act_l[g][z];
      for (int f : homs[x.tgt[g]][z]) out.push_back(pos(x.src[g], z, x.comp[f][g]));
    }
  for (int h = 0; h < x.nmor(); ++h)
    for (int xx = 0; xx < n; ++xx) {
      auto& out = p.act_r[h][xx];
      for (int f : homs[xx][x.src[h]]) out.push_back(pos(xx, x.tgt[h], x.comp[h][f]));
    }
  return p;
}

namespace {
struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int i) {
    while (up[i] != i) i = up[i] = up[up[i]];
    return i;
  }
  void unite(int i, int j) { up[find(i)] = find(j); }
};
}  // namespace

int ProfComposite::class_of(int a, int e, int b, int y, int x) const {
  auto& ts = triples[a][e];
  for (int i = 0; i < (int)ts.size(); ++i)
    if (ts[i] == std::array<int, 3>{b, y, x}) return cls[a][e][i];
  throw invalid_instance("pair not found in composite");
}

ProfComposite compose_prof(const Profunctor& m, const Profunctor& n) {
  require(m.c.nobj() == n.a.nobj() && m.c.nmor() == n.a.nmor(),
          "compose_prof: middle category mismatch");
  const FinCat& mid = m.c;
  ProfComposite out;
  Profunctor& p = out.prof;
  p.a = m.a;
  p.c = n.c;
  int na = m.a.nobj(), ne = n.c.nobj();
  out.triples.assign(na, std::vector<std::vector<std::array<int, 3>>>(ne));
  out.cls.assign(na, std::vector<std::vector<int>>(ne));
  p.nelem.assign(na, std::vector<int>(ne, 0));
  for (int a = 0; a < na; ++a)
    for (int e = 0; e < ne; ++e) {
      auto& ts = out.triples[a][e];
      for (int b = 0; b < mid.nobj(); ++b)
        for (int y = 0; y < n.nelem[b][e]; ++y)
          for (int x = 0; x < m.nelem[a][b]; ++x) ts.push_back({b, y, x});
      auto idx = [&](int b, int y, int x) {
        return (int)(std::find(ts.begin(), ts.end(), std::array<int, 3>{b, y, x}) -
                     ts.begin());
      };
      UnionFind uf((int)ts.size());
      // (y.g, x) ~ (y, g.x) for g: b -> b' in the middle
      for (int g = 0; g < mid.nmor(); ++g) {
        int b = mid.src[g], b2 = mid.tgt[g];
        for (int y = 0; y < n.nelem[b2][e]; ++y)
          for (int x = 0; x < m.nelem[a][b]; ++x)
            uf.unite(idx(b, n.act_l[g][e][y], x), idx(b2, y, m.act_r[g][a][x]));
      }
      // classes by first occurrence
      std::vector<int> root2cls((int)ts.size(), -1);
      auto& cl = out.cls[a][e];
      int ncls = 0;
      for (int i = 0; i < (int)ts.size(); ++i) {
        int r = uf.find(i);
        if (root2cls[r] < 0) root2cls[r] = ncls++;
        cl.push_back(root2cls[r]);
      }
      p.nelem[a][e] = ncls;
    }
  // induced actions via representatives
  p.act_l.assign(m.a.nmor(), std::vector<std::vector<int>>(ne));
  p.act_r.assign(n.c.nmor(), std::vector<std::vector<int>>(ne == 0 ? 0 : na));
  for (auto& v : p.act_r) v.assign(na, {});
  for (int g = 0; g < m.a.nmor(); ++g) {
    int at = m.a.tgt[g], as = m.a.src[g];
    for (int e = 0; e < ne; ++e) {
      auto& act = p.act_l[g][e];
      act.assign(p.nelem[at][e], -1);
      for (int i = 0; i < (int)out.triples[at][e].size(); ++i) {
        auto [b, y, x] = out.triples[at][e][i];
        int c = out.cls[at][e][i];
        if (act[c] >= 0) continue;
        act[c] = out.class_of(as, e, b, y, m.act_l[g][b][x]);
      }
    }
  }
  for (int h = 0; h < n.c.nmor(); ++h) {
    int es = n.c.src[h], et = n.c.tgt[h];
    for (int a = 0; a < na; ++a) {
      auto& act = p.act_r[h][a];
      act.assign(p.nelem[a][es], -1);
      for (int i = 0; i < (int)out.triples[a][es].size(); ++i) {
        auto [b, y, x] = out.triples[a][es][i];
        int c = out.cls[a][es][i];
        if (act[c] >= 0) continue;
        act[c] = out.class_of(a, et, b, n.act_r[h][b][y], x);
      }
    }
  }
  return out;
}

namespace {

struct ProfIsoSearch {
  const Profunctor& m;
  const Profunctor& n;
  int na, nc;
  // phi[x][z]: assignment per element, -1 unknown; used[x][z]: mask of taken targets
  std::vector<std::vector<std::vector<int>>> phi;

  ProfIsoSearch(const Profunctor& m_, const Profunctor& n_)
      : m(m_), n(n_), na(m_.a.nobj()), nc(m_.c.nobj()) {}

  bool consistent(int x, int z, int e) {
    int v = phi[x][z][e];
    for (int g = 0; g < m.a.nmor(); ++g) {
      if (m.a.tgt[g] == x) {
        int e2 = m.act_l[g][z][e], x2 = m.a.src[g];
        int v2 = phi[x2][z][e2];
        if (v2 >= 0 && v2 != n.act_l[g][z][v]) return false;
      }
      if (m.a.src[g] == x) {
        // image under g of some e0 with act(e0)=e must map consistently; handled
        // from the other end when e0 is assigned
      }
    }
    for (int h = 0; h < m.c.nmor(); ++h) {
      if (m.c.src[h] == z) {
        int e2 = m.act_r[h][x][e], z2 = m.c.tgt[h];
        int v2 = phi[x][z2][e2];
        if (v2 >= 0 && v2 != n.act_r[h][x][v]) return false;
      }
      if (m.c.tgt[h] == z) {
      }
    }
    // also check incoming actions: for g with src g == x handled when source elt set
    for (int g = 0; g < m.a.nmor(); ++g) {
      if (m.a.src[g] != x) continue;
      int xt = m.a.tgt[g];
      for (int e0 = 0; e0 < m.nelem[xt][z]; ++e0) {
        if (m.act_l[g][z][e0] != e) continue;
        int v0 = phi[xt][z][e0];
        if (v0 >= 0 && n.act_l[g][z][v0] != v) return false;
      }
    }
    for (int h = 0; h < m.c.nmor(); ++h) {
      if (m.c.tgt[h] != z) continue;
      int zs = m.c.src[h];
      for (int e0 = 0; e0 < m.nelem[x][zs]; ++e0) {
        if (m.act_r[h][x][e0] != e) continue;
        int v0 = phi[x][zs][e0];
        if (v0 >= 0 && n.act_r[h][x][v0] != v) return false;
      }
    }
    return true;
  }

  bool dfs(int x, int z, int e) {
    while (true) {
      if (x == na) return true;
      if (z == nc) {
        ++x;
        z = 0;
        continue;
      }
      if (e == m.nelem[x][z]) {
        ++z;
        e = 0;
        continue;
      }
      if (phi[x][z][e] >= 0) {
        ++e;
        continue;
      }
      break;
    }
    std::vector<bool> used(n.nelem[x][z], false);
    for (int e2 = 0; e2 < m.nelem[x][z]; ++e2)
      if (phi[x][z][e2] >= 0) used[phi[x][z][e2]] = true;
    for (int v = 0; v < n.nelem[x][z]; ++v) {
      if (used[v]) continue;
      phi[x][z][e] = v;
      if (consistent(x, z, e) && dfs(x, z, e + 1)) return true;
      phi[x][z][e] = -1;
    }
    return false;
  }

  bool run() {
    for (int x = 0; x < na; ++x)
      for (int z = 0; z < nc; ++z)
        if (m.nelem[x][z] != n.nelem[x][z]) return false;
    phi.assign(na, {});
    for (int x = 0; x < na; ++x) {
      phi[x].assign(nc, {});
      for (int z = 0; z < nc; ++z) phi[x][z].assign(m.nelem[x][z], -1);
    }
    return dfs(0, 0, 0);
  }
};

}  // namespace

bool prof_iso_exists(const Profunctor& m, const Profunctor& n) {
  require(m.a.nobj() == n.a.nobj() && m.c.nobj() == n.c.nobj(),
          "prof_iso_exists: boundary mismatch");
  ProfIsoSearch s(m, n);
  return s.run();
}

Profunctor prof_product(const Profunctor& m, const Profunctor& n,
                        const FinCat& a_prod, const FinCat& c_prod) {
  Profunctor p;
  p.a = a_prod;
  p.c = c_prod;
  int na1 = m.a.nobj(), nc1 = m.c.nobj();
  int na2 = n.a.nobj(), nc2 = n.c.nobj();
  require(a_prod.nobj() == na1 * na2 && c_prod.nobj() == nc1 * nc2,
          "prof_product: product category shape mismatch");
  p.nelem.assign(a_prod.nobj(), std::vector<int>(c_prod.nobj(), 0));
  auto oi = [&](int x1, int x2) { return x1 * na2 + x2; };
  auto zi = [&](int z1, int z2) { return z1 * nc2 + z2; };
  auto ei = [&](int x1, int x2, int z1, int z2, int e1, int e2) {
    return e1 * n.nelem[x2][z2] + e2;
  };
  for (int x1 = 0; x1 < na1; ++x1)
    for (int x2 = 0; x2 < na2; ++x2)
      for (int z1 = 0; z1 < nc1; ++z1)
        for (int z2 = 0; z2 < nc2; ++z2)
          p.nelem[oi(x1, x2)][zi(z1, z2)] = m.nelem[x1][z1] * n.nelem[x2][z2];
  p.act_l.assign(a_prod.nmor(), std::vector<std::vector<int>>(c_prod.nobj()));
  p.act_r.assign(c_prod.nmor(), std::vector<std::vector<int>>(a_prod.nobj()));
  // product morphism index (f,g) = f * n.a.nmor() + g, as built by FinCat::product
  for (int f = 0; f < m.a.nmor(); ++f)
    for (int g = 0; g < n.a.nmor(); ++g) {
      int pm = f * n.a.nmor() + g;
      int xt1 = m.a.tgt[f], xt2 = n.a.tgt[g], xs1 = m.a.src[f], xs2 = n.a.src[g];
      for (int z1 = 0; z1 < nc1; ++z1)
        for (int z2 = 0; z2 < nc2; ++z2) {
          auto& act = p.act_l[pm][zi(z1, z2)];
          for (int e1 = 0; e1 < m.nelem[xt1][z1]; ++e1)
            for (int e2 = 0; e2 < n.nelem[xt2][z2]; ++e2)
              act.push_back(ei(xs1, xs2, z1, z2, m.act_l[f][z1][e1], n.act_l[g][z2][e2]));
        }
    }
  for (int f = 0; f < m.c.nmor(); ++f)
    for (int g = 0; g < n.c.nmor(); ++g) {
      int pm = f * n.c.nmor() + g;
      int zs1 = m.c.src[f], zs2 = n.c.src[g], zt1 = m.c.tgt[f], zt2 = n.c.tgt[g];
      for (int x1 = 0; x1 < na1; ++x1)
        for (int x2 = 0; x2 < na2; ++x2) {
          auto& act = p.act_r[pm][oi(x1, x2)];
          for (int e1 = 0; e1 < m.nelem[x1][zs1]; ++e1)
            for (int e2 = 0; e2 < n.nelem[x2][zs2]; ++e2)
              act.push_back(ei(x1, x2, zt1, zt2, m.act_r[f][x1][e1], n.act_r[g][x2][e2]));
        }
    }
  return p;
}

namespace {

// shared DFS for all_functors / count_functors: assign the object map, then
// non-identity morphism images with composite forcing.
struct FunctorSearch {
  const FinCat& dom;
  const FinCat& cod;
  const FinFunctor* cod_to_base;
  const FinFunctor* dom_to_base;
  std::vector<int> omap, mmap;
  std::vector<int> nonid;
  std::function<void(const FinFunctor&)> emit;
  std::function<bool(const std::vector<int>&, const std::vector<int>&)> visit;
  bool stopped = false;
  long count = 0;

  std::vector<std::vector<std::vector<int>>> cod_hom;
  std::vector<std::vector<char>> dom_hom_ne;

  FunctorSearch(const FinCat& d, const FinCat& c, const FinFunctor* cb,
                const FinFunctor* db)
      : dom(d), cod(c), cod_to_base(cb), dom_to_base(db) {
    for (int f = 0; f < dom.nmor(); ++f)
      if (!dom.is_id(f)) nonid.push_back(f);
    cod_hom.assign(cod.nobj(), std::vector<std::vector<int>>(cod.nobj()));
    for (int h = 0; h < cod.nmor(); ++h)
      cod_hom[cod.src[h]][cod.tgt[h]].push_back(h);
    dom_hom_ne.assign(dom.nobj(), std::vector<char>(dom.nobj(), 0));
    for (int f = 0; f < dom.nmor(); ++f)
      dom_hom_ne[dom.src[f]][dom.tgt[f]] = 1;
  }

  bool mor_ok(int f, int h) const {
    if (cod.src[h] != omap[dom.src[f]] || cod.tgt[h] != omap[dom.tgt[f]])
      return false;
    if (cod_to_base && cod_to_base->mor_map[h] != dom_to_base->mor_map[f])
      return false;
    return true;
  }

  // force composites of already-assigned pairs; returns false on clash,
  // records forced morphisms in undo
  bool propagate(std::vector<int>& undo) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int f = 0; f < dom.nmor(); ++f) {
        if (mmap[f] < 0) continue;
        for (int g = 0; g < dom.nmor(); ++g) {
          if (mmap[g] < 0 || dom.tgt[f] != dom.src[g]) continue;
          int c = dom.comp[g][f];
          int v = cod.comp[mmap[g]][mmap[f]];
          if (mmap[c] < 0) {
            if (!mor_ok(c, v)) return false;
            mmap[c] = v;
            undo.push_back(c);
            changed = true;
          } else if (mmap[c] != v) {
            return false;
          }
        }
      }
    }
    return true;
  }

  void mor_dfs(size_t i) {
    while (i < nonid.size() && mmap[nonid[i]] >= 0) ++i;
    if (i == nonid.size()) {
      ++count;
      if (emit) emit(FinFunctor{dom, cod, omap, mmap});
      if (visit && !visit(omap, mmap)) stopped = true;
      return;
    }
    int f = nonid[i];
    for (int h : cod_hom[omap[dom.src[f]]][omap[dom.tgt[f]]]) {
      if (stopped) break;
      if (!mor_ok(f, h)) continue;
      std::vector<int> undo{f};
      mmap[f] = h;
      if (propagate(undo)) mor_dfs(i + 1);
      for (int u : undo) mmap[u] = -1;
    }
  }

  void obj_dfs(int o) {
    if (o == dom.nobj()) {
      mmap.assign(dom.nmor(), -1);
      for (int x = 0; x < dom.nobj(); ++x)
        mmap[dom.id_of[x]] = cod.id_of[omap[x]];
      mor_dfs(0);
      return;
    }
    for (int t = 0; t < cod.nobj() && !stopped; ++t) {
      if (cod_to_base && cod_to_base->obj_map[t] != dom_to_base->obj_map[o])
        continue;
      omap[o] = t;
      bool ok = true;
      for (int o2 = 0; o2 <= o && ok; ++o2) {
        if (dom_hom_ne[o2][o] && cod_hom[omap[o2]][t].empty()) ok = false;
        if (dom_hom_ne[o][o2] && cod_hom[t][omap[o2]].empty()) ok = false;
      }
      if (ok) obj_dfs(o + 1);
    }
    omap[o] = -1;
  }

  void run() {
    require(!cod_to_base == !dom_to_base, "over-base constraint needs both legs");
    omap.assign(dom.nobj(), -1);
    obj_dfs(0);
  }
};

}  // namespace

std::vector<FinFunctor> all_functors(const FinCat& dom, const FinCat& cod,
                                     const FinFunctor* cod_to_base,
                                     const FinFunctor* dom_to_base) {
  std::vector<FinFunctor> out;
  FunctorSearch s(dom, cod, cod_to_base, dom_to_base);
  s.emit = [&](const FinFunctor& f) { out.push_back(f); };
  s.run();
  return out;
}

bool for_each_functor(
    const FinCat& dom, const FinCat& cod, const FinFunctor* cod_to_base,
    const FinFunctor* dom_to_base,
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>&
        visit) {
  FunctorSearch s(dom, cod, cod_to_base, dom_to_base);
  s.visit = visit;
  s.run();
  return !s.stopped;
}

long count_functors(const FinCat& dom, const FinCat& cod,
                    const FinFunctor* cod_to_base,
                    const FinFunctor* dom_to_base) {
  FunctorSearch s(dom, cod, cod_to_base, dom_to_base);
  s.run();
  return s.count;
}

bool cat_iso_exists(const FinCat& x, const FinCat& y) {
  if (x.nobj() != y.nobj() || x.nmor() != y.nmor()) return false;
  require(x.nobj() <= 8, "cat_iso_exists: capped at 8 objects");
  return x.canonical_key() == y.canonical_key();
}

namespace {

// Backtracking enumeration of composition tables for a fixed morphism
// signature (identities plus a sorted list of (src,tgt) pairs).
struct CatEnum {
  FinCat c;                                   // signature fixed; comp mutable
  std::vector<std::pair<int, int>> entries;   // composable non-id pairs (g,f)
  std::vector<FinCat>* out;

  bool assoc_ok() const {
    int m = c.nmor();
    for (int f = 0; f < m; ++f)
      for (int g = 0; g < m; ++g) {
        if (c.tgt[f] != c.src[g]) continue;
        int gf = c.comp[g][f];
        if (gf < 0) continue;
        for (int h = 0; h < m; ++h) {
          if (c.tgt[g] != c.src[h]) continue;
          int hg = c.comp[h][g];
          if (hg < 0) continue;
          int l = c.comp[h][gf], r = c.comp[hg][f];
          if (l >= 0 && r >= 0 && l != r) return false;
        }
      }
    return true;
  }

  void dfs(size_t i) {
    if (i == entries.size()) {
      out->push_back(c);
      return;
    }
    auto [g, f] = entries[i];
    for (int h = 0; h < c.nmor(); ++h) {
      if (c.src[h] != c.src[f] || c.tgt[h] != c.tgt[g]) continue;
      c.comp[g][f] = h;
      if (assoc_ok()) dfs(i + 1);
    }
    c.comp[g][f] = -1;
  }
};

}  // namespace

const std::vector<FinCat>& categories_up_to_iso(int max_mor) {
  static std::map<int, std::vector<FinCat>> cache;
  auto it = cache.find(max_mor);
  if (it != cache.end()) return it->second;
  require(max_mor <= 7, "categories_up_to_iso: capped at 7 morphisms");

  std::vector<FinCat> result{FinCat::empty()};
  std::unordered_set<std::string> seen;
  for (int k = 1; k <= max_mor; ++k) {
    for (int t = 0; k + t <= max_mor; ++t) {
      // sorted sequences of t (src,tgt) pairs over k objects
      std::vector<std::vector<int>> sigs;
      std::vector<int> cur;
      std::function<void(int, int)> gen = [&](int pos, int minpair) {
        if (pos == t) {
          sigs.push_back(cur);
          return;
        }
        for (int pr = minpair; pr < k * k; ++pr) {
          cur.push_back(pr);
          gen(pos + 1, pr);
          cur.pop_back();
        }
      };
      gen(0, 0);
      for (auto& sig : sigs) {
        CatEnum en;
        FinCat& c = en.c;
        for (int o = 0; o < k; ++o) {
          c.obj_names.push_back(std::string(1, (char)('a' + o)));
          c.id_of.push_back(o);
          c.mor_names.push_back("1" + std::string(1, (char)('a' + o)));
          c.src.push_back(o);
          c.tgt.push_back(o);
        }
        for (int pr : sig) {
          c.mor_names.push_back("f" + std::to_string((int)c.mor_names.size()));
          c.src.push_back(pr / k);
          c.tgt.push_back(pr % k);
        }
        int m = c.nmor();
        c.comp.assign(m, std::vector<int>(m, -1));
        for (int f = 0; f < m; ++f)
          for (int g = 0; g < m; ++g) {
            if (c.tgt[f] != c.src[g]) continue;
            if (c.is_id(f)) c.comp[g][f] = g;
            else if (c.is_id(g)) c.comp[g][f] = f;
            else en.entries.push_back({g, f});
          }
        std::vector<FinCat> tables;
        en.out = &tables;
        en.dfs(0);
        for (auto& cat : tables) {
          if (!cat.is_valid()) continue;
          if (seen.insert(cat.canonical_key()).second) result.push_back(cat);
        }
      }
    }
  }
  return cache.emplace(max_mor, std::move(result)).first->second;
}

}  // namespace expokit
