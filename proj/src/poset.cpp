#include "expokit/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace expokit {

int default_cap() {
  static int cap = [] {
    if (const char* s = std::getenv("EXPOKIT_CAP")) {
      int v = std::atoi(s);
      if (v > 0) return v;
    }
    return 4;
  }();
  return cap;
}

Mask FinPoset::up_of(int i) const {
  Mask m = 0;
  for (int j = 0; j < size(); ++j)
    if (leq(i, j)) m |= Mask(1) << j;
  return m;
}

bool FinPoset::is_valid() const {
  int n = size();
  if ((int)names.size() != n || n > 62) return false;
  for (int i = 0; i < n; ++i)
    if (!bit(dn[i], i)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) return false;
      for (int k = 0; k < n; ++k)
        if (leq(i, j) && leq(j, k) && !leq(i, k)) return false;
    }
  return true;
}

Mask FinPoset::down_closure(Mask s) const {
  Mask r = 0;
  for (int i = 0; i < size(); ++i)
    if (bit(s, i)) r |= dn[i];
  return r;
}

Mask FinPoset::up_closure(Mask s) const {
  Mask r = 0;
  for (int i = 0; i < size(); ++i)
    if (bit(s, i)) r |= up_of(i);
  return r;
}

FinPoset FinPoset::restricted(Mask s) const {
  FinPoset r;
  std::vector<int> idx(size(), -1);
  for (int i = 0; i < size(); ++i)
    if (bit(s, i)) {
      idx[i] = (int)r.names.size();
      r.names.push_back(names[i]);
    }
  for (int i = 0; i < size(); ++i) {
    if (!bit(s, i)) continue;
    Mask m = 0;
    for (int j = 0; j < size(); ++j)
      if (bit(s, j) && leq(j, i)) m |= Mask(1) << idx[j];
    r.dn.push_back(m);
  }
  return r;
}

std::string FinPoset::canonical_key() const {
  int n = size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    key.reserve(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        key.push_back(leq(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

FinPoset FinPoset::chain(int n) {
  FinPoset p;
  for (int i = 0; i < n; ++i) {
    p.names.push_back(std::to_string(i));
    p.dn.push_back(full_mask(i + 1));
  }
  return p;
}

FinPoset FinPoset::antichain(int n) {
  FinPoset p;
  for (int i = 0; i < n; ++i) {
    p.names.push_back(std::to_string(i));
    p.dn.push_back(Mask(1) << i);
  }
  return p;
}

FinPoset FinPoset::product(const FinPoset& a, const FinPoset& b) {
  FinPoset p;
  int nb = b.size();
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < nb; ++j) {
      p.names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
      Mask m = 0;
      for (int i2 = 0; i2 < a.size(); ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          if (a.leq(i2, i) && b.leq(j2, j)) m |= Mask(1) << (i2 * nb + j2);
      p.dn.push_back(m);
    }
  return p;
}

FinPoset FinPoset::from_pairs(std::vector<std::string> names,
                              const std::vector<std::pair<int, int>>& le_pairs) {
  int n = (int)names.size();
  require(n <= 62, "poset too large");
  std::vector<Mask> dn(n);
  for (int i = 0; i < n; ++i) dn[i] = Mask(1) << i;
  for (auto& [a, b] : le_pairs) {
    require(a >= 0 && a < n && b >= 0 && b < n, "pair index out of range");
    dn[b] |= Mask(1) << a;
  }
  // transitive closure
  for (bool changed = true; changed;) {
    changed = false;
    for (int b = 0; b < n; ++b) {
      Mask m = dn[b];
      for (int a = 0; a < n; ++a)
        if (bit(m, a)) m |= dn[a];
      if (m != dn[b]) dn[b] = m, changed = true;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && bit(dn[j], i) && bit(dn[i], j))
        throw invalid_instance("order cycle through " + names[i] + " and " + names[j]);
  FinPoset p;
  p.names = std::move(names);
  p.dn = std::move(dn);
  return p;
}

std::vector<Mask> down_sets(const FinPoset& p) {
  int n = p.size();
  require(n <= 22, "down-set enumeration cap exceeded");
  std::vector<Mask> out;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    if (p.is_down(s)) out.push_back(s);
    if (n == 0) break;
  }
  return out;
}

std::vector<Mask> up_sets(const FinPoset& p) {
  int n = p.size();
  require(n <= 22, "up-set enumeration cap exceeded");
  std::vector<Mask> out;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    if (p.is_up(s)) out.push_back(s);
    if (n == 0) break;
  }
  return out;
}

bool is_monotone(const FinPoset& p, const FinPoset& q, const std::vector<int>& f) {
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.leq(a, b) && !q.leq(f[a], f[b])) return false;
  return true;
}

std::vector<std::vector<int>> monotone_maps(const FinPoset& p, const FinPoset& q) {
  std::vector<std::vector<int>> out;
  int n = p.size(), m = q.size();
  if (n == 0) return {std::vector<int>{}};
  if (m == 0) return {};
  std::vector<int> f(n, 0);
  while (true) {
    if (is_monotone(p, q, f)) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == m - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

std::vector<FinPoset> all_posets_labeled(int n) {
  require(n <= 6, "labeled poset enumeration cap exceeded");
  std::vector<FinPoset> out;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  // backtrack over strict pairs i<j in either direction or incomparable,
  // then filter by transitivity
  std::vector<Mask> dn(n);
  for (int i = 0; i < n; ++i) dn[i] = Mask(1) << i;
  int npairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  // 3^npairs candidates; n<=6 gives 3^15 ~ 14M, prune via transitivity check at leaves
  std::vector<int> choice(npairs, 0);
  while (true) {
    FinPoset p;
    p.names = names;
    p.dn.assign(n, 0);
    for (int i = 0; i < n; ++i) p.dn[i] = Mask(1) << i;
    for (int k = 0; k < npairs; ++k) {
      auto [i, j] = pairs[k];
      if (choice[k] == 1) p.dn[j] |= Mask(1) << i;
      if (choice[k] == 2) p.dn[i] |= Mask(1) << j;
    }
    bool trans = true;
    for (int i = 0; i < n && trans; ++i)
      for (int j = 0; j < n && trans; ++j)
        if (i != j && p.leq(i, j))
          for (int k = 0; k < n; ++k)
            if (p.leq(j, k) && !p.leq(i, k)) {
              trans = false;
              break;
            }
    if (trans) out.push_back(std::move(p));
    int k = npairs - 1;
    while (k >= 0 && choice[k] == 2) choice[k--] = 0;
    if (k < 0) break;
    ++choice[k];
  }
  return out;
}

const std::vector<FinPoset>& posets_up_to_iso(int n) {
  static std::map<int, std::vector<FinPoset>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<FinPoset> reps;
  std::vector<std::string> seen;
  for (auto& p : all_posets_labeled(n)) {
    std::string k = p.canonical_key();
    if (std::find(seen.begin(), seen.end(), k) == seen.end()) {
      seen.push_back(k);
      reps.push_back(p);
    }
  }
  return cache.emplace(n, std::move(reps)).first->second;
}

}  // namespace expokit
