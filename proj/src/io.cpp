#include "expokit/io.hpp"

#include <algorithm>
#include <map>

namespace expokit {

namespace {

int name_index(const std::vector<std::string>& names, const std::string& s) {
  auto it = std::find(names.begin(), names.end(), s);
  require(it != names.end(), "unknown element '" + s + "'");
  return (int)(it - names.begin());
}

std::vector<std::string> parse_names(const Json& j) {
  require(j.is_array(), "'elements' must be an array of names");
  std::vector<std::string> names;
  for (auto& e : j) {
    require(e.is_string(), "element names must be strings");
    names.push_back(e.get<std::string>());
  }
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t k = 0; k < i; ++k)
      require(names[i] != names[k], "duplicate element '" + names[i] + "'");
  return names;
}

Json cover_pairs(const FinPoset& p) {
  Json out = Json::array();
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      if (!p.lt(i, j)) continue;
      bool cover = true;
      for (int m = 0; m < p.size() && cover; ++m)
        if (m != i && m != j && p.lt(i, m) && p.lt(m, j)) cover = false;
      if (cover) out.push_back(Json::array({p.names[i], p.names[j]}));
    }
  return out;
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key),
          std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Doctrine parse_doctrine(const std::string& s) {
  if (s == "cat") return Doctrine::Cat;
  if (s == "top") return Doctrine::Top;
  if (s == "loc") return Doctrine::Loc;
  if (s == "pos") return Doctrine::Pos;
  if (s == "rel") return Doctrine::Rel;
  throw invalid_instance("unknown doctrine '" + s + "'");
}

Json print_poset(const FinPoset& p) {
  Json j;
  j["elements"] = p.names;
  j["leq"] = cover_pairs(p);
  return j;
}

FinPoset parse_poset(const Json& j) {
  auto names = parse_names(field(j, "elements"));
  std::vector<std::pair<int, int>> pairs;
  for (auto& e : field(j, "leq")) {
    require(e.is_array() && e.size() == 2, "leq entries are pairs of names");
    pairs.push_back({name_index(names, e[0].get<std::string>()),
                     name_index(names, e[1].get<std::string>())});
  }
  auto p = FinPoset::from_pairs(std::move(names), pairs);
  require(p.is_valid(), "not a partial order");
  return p;
}

Json print_lattice(const FinLattice& l) { return print_poset(l.order()); }

FinLattice parse_lattice(const Json& j) {
  auto p = parse_poset(j);
  auto l = FinLattice::from_poset(p);
  require(l.has_value(), "order is not a lattice");
  return *l;
}

Json print_cat(const FinCat& c) {
  Json j;
  j["objects"] = c.obj_names;
  Json mors = Json::array();
  for (int m = 0; m < c.nmor(); ++m)
    mors.push_back(Json{{"name", c.mor_names[m]},
                        {"src", c.obj_names[c.src[m]]},
                        {"tgt", c.obj_names[c.tgt[m]]}});
  j["morphisms"] = mors;
  Json ids = Json::array();
  for (int o = 0; o < c.nobj(); ++o) ids.push_back(c.mor_names[c.id_of[o]]);
  j["identities"] = ids;
  Json comp = Json::array();
  for (int g = 0; g < c.nmor(); ++g)
    for (int f = 0; f < c.nmor(); ++f)
      if (c.tgt[f] == c.src[g])
        comp.push_back(Json::array({c.mor_names[g], c.mor_names[f],
                                    c.mor_names[c.compose(g, f)]}));
  j["compose"] = comp;
  return j;
}

FinCat parse_cat(const Json& j) {
  FinCat c;
  c.obj_names = parse_names(field(j, "objects"));
  for (auto& m : field(j, "morphisms")) {
    c.mor_names.push_back(field(m, "name").get<std::string>());
    c.src.push_back(name_index(c.obj_names, field(m, "src").get<std::string>()));
    c.tgt.push_back(name_index(c.obj_names, field(m, "tgt").get<std::string>()));
  }
  for (size_t i = 0; i < c.mor_names.size(); ++i)
    for (size_t k = 0; k < i; ++k)
      require(c.mor_names[i] != c.mor_names[k],
              "duplicate morphism '" + c.mor_names[i] + "'");
  for (auto& e : field(j, "identities"))
    c.id_of.push_back(name_index(c.mor_names, e.get<std::string>()));
  require((int)c.id_of.size() == c.nobj(), "one identity per object");
  c.comp.assign(c.nmor(), std::vector<int>(c.nmor(), -1));
  for (auto& e : field(j, "compose")) {
    require(e.is_array() && e.size() == 3, "compose entries are triples");
    int g = name_index(c.mor_names, e[0].get<std::string>());
    int f = name_index(c.mor_names, e[1].get<std::string>());
    c.comp[g][f] = name_index(c.mor_names, e[2].get<std::string>());
  }
  require(c.is_valid(), "composition table is not a category");
  return c;
}

Json print_functor(const FinFunctor& f) {
  Json j;
  j["dom"] = print_cat(f.dom);
  j["cod"] = print_cat(f.cod);
  Json om = Json::array(), mm = Json::array();
  for (int o : f.obj_map) om.push_back(f.cod.obj_names[o]);
  for (int m : f.mor_map) mm.push_back(f.cod.mor_names[m]);
  j["objects"] = om;
  j["morphisms"] = mm;
  return j;
}

FinFunctor parse_functor(const Json& j) {
  FinFunctor f;
  f.dom = parse_cat(field(j, "dom"));
  f.cod = parse_cat(field(j, "cod"));
  for (auto& e : field(j, "objects"))
    f.obj_map.push_back(name_index(f.cod.obj_names, e.get<std::string>()));
  for (auto& e : field(j, "morphisms"))
    f.mor_map.push_back(name_index(f.cod.mor_names, e.get<std::string>()));
  require(f.is_valid(), "maps do not form a functor");
  return f;
}

Json print_vertical(Doctrine d, const Vertical& v) {
  Json j;
  if (auto* n = std::get_if<MeetMap>(&v)) {
    j["kind"] = "meetmap";
    j["src"] = print_lattice(n->src);
    j["tgt"] = print_lattice(n->tgt);
    Json m = Json::array();
    for (int u : n->map) m.push_back(n->tgt.names[u]);
    j["map"] = m;
  } else if (auto* i = std::get_if<OrderIdeal>(&v)) {
    j["kind"] = "ideal";
    j["src"] = print_poset(i->src);
    j["tgt"] = print_poset(i->tgt);
    Json pr = Json::array();
    for (int x = 0; x < i->src.size(); ++x)
      for (int y = 0; y < i->tgt.size(); ++y)
        if (i->has(x, y))
          pr.push_back(Json::array({i->src.names[x], i->tgt.names[y]}));
    j["pairs"] = pr;
  } else {
    auto& p = std::get<Profunctor>(v);
    j["kind"] = "profunctor";
    j["a"] = print_cat(p.a);
    j["c"] = print_cat(p.c);
    j["nelem"] = p.nelem;
    j["act_l"] = p.act_l;
    j["act_r"] = p.act_r;
  }
  (void)d;
  return j;
}

Vertical parse_vertical(Doctrine d, const Json& j) {
  auto kind = field(j, "kind").get<std::string>();
  if (kind == "meetmap") {
    require(d == Doctrine::Top || d == Doctrine::Loc,
            "meetmap vertical in a non-lattice doctrine");
    MeetMap n;
    n.src = parse_lattice(field(j, "src"));
    n.tgt = parse_lattice(field(j, "tgt"));
    for (auto& e : field(j, "map"))
      n.map.push_back(name_index(n.tgt.names, e.get<std::string>()));
    require((int)n.map.size() == n.src.size(), "one image per src element");
    require(n.is_valid(), "map does not preserve finite meets");
    return n;
  }
  if (kind == "ideal") {
    require(d == Doctrine::Pos || d == Doctrine::Rel,
            "ideal vertical in a non-order doctrine");
    OrderIdeal i;
    i.src = parse_poset(field(j, "src"));
    i.tgt = parse_poset(field(j, "tgt"));
    i.pairs.assign(i.src.size(), 0);
    for (auto& e : field(j, "pairs")) {
      require(e.is_array() && e.size() == 2, "pairs entries are name pairs");
      int x = name_index(i.src.names, e[0].get<std::string>());
      int y = name_index(i.tgt.names, e[1].get<std::string>());
      i.pairs[x] |= Mask(1) << y;
    }
    require(i.is_valid(), "pair set is not an order ideal");
    return i;
  }
  if (kind == "profunctor") {
    require(d == Doctrine::Cat, "profunctor vertical outside Cat");
    Profunctor p;
    p.a = parse_cat(field(j, "a"));
    p.c = parse_cat(field(j, "c"));
    p.nelem = field(j, "nelem").get<std::vector<std::vector<int>>>();
    p.act_l =
        field(j, "act_l").get<std::vector<std::vector<std::vector<int>>>>();
    p.act_r =
        field(j, "act_r").get<std::vector<std::vector<std::vector<int>>>>();
    require(p.is_valid(), "actions are not functorial");
    return p;
  }
  throw invalid_instance("unknown vertical kind '" + kind + "'");
}

Json print_over(const ObjectOverB& q) {
  Json j;
  j["doctrine"] = doctrine_name(q.d);
  j["base"] = print_poset(q.base);
  j["total"] = print_poset(q.total);
  Json f = Json::array();
  for (int b : q.fib) f.push_back(q.base.names[b]);
  j["fibers"] = f;
  return j;
}

ObjectOverB parse_over(const Json& j) {
  ObjectOverB q;
  q.d = parse_doctrine(field(j, "doctrine").get<std::string>());
  q.base = parse_poset(field(j, "base"));
  q.total = parse_poset(field(j, "total"));
  for (auto& e : field(j, "fibers"))
    q.fib.push_back(name_index(q.base.names, e.get<std::string>()));
  require((int)q.fib.size() == q.total.size(), "one fiber per total element");
  require(q.is_valid(), "fiber assignment is not monotone");
  return q;
}

Json print_lax(const LaxFunctor& f) {
  Json j;
  j["doctrine"] = doctrine_name(f.d);
  j["base"] = print_poset(f.base);
  Json fibs = Json::array();
  for (auto& o : f.obj) {
    switch (f.d) {
      case Doctrine::Top:
        fibs.push_back(print_poset(std::get<FinSpace>(o).specialization));
        break;
      case Doctrine::Loc:
        fibs.push_back(print_lattice(std::get<FinLattice>(o)));
        break;
      case Doctrine::Cat:
        fibs.push_back(print_cat(std::get<FinCat>(o)));
        break;
      default:
        fibs.push_back(print_poset(std::get<FinPoset>(o)));
    }
  }
  j["fibers"] = fibs;
  Json verts = Json::object();
  for (auto& [bc, v] : f.vert)
    verts[std::to_string(bc.first) + "<" + std::to_string(bc.second)] =
        print_vertical(f.d, v);
  j["verticals"] = verts;
  if (f.d == Doctrine::Cat) {
    Json comps = Json::object();
    for (auto& [t, cc] : f.comp)
      comps[std::to_string(std::get<0>(t)) + "<" +
            std::to_string(std::get<1>(t)) + "<" +
            std::to_string(std::get<2>(t))] = cc.to_bd;
    j["comparisons"] = comps;
  }
  return j;
}

LaxFunctor parse_lax(const Json& j) {
  LaxFunctor f;
  f.d = parse_doctrine(field(j, "doctrine").get<std::string>());
  f.base = parse_poset(field(j, "base"));
  auto& fibs = field(j, "fibers");
  require((int)fibs.size() == f.base.size(), "one fiber per base element");
  for (auto& o : fibs) {
    switch (f.d) {
      case Doctrine::Top:
        f.obj.push_back(FinSpace{parse_poset(o)});
        break;
      case Doctrine::Loc:
        f.obj.push_back(parse_lattice(o));
        break;
      case Doctrine::Cat:
        f.obj.push_back(parse_cat(o));
        break;
      default:
        f.obj.push_back(parse_poset(o));
    }
    require(obj_valid(f.d, f.obj.back()), "fiber fails its doctrine invariant");
  }
  for (auto& [key, v] : field(j, "verticals").items()) {
    auto lt = key.find('<');
    require(lt != std::string::npos, "vertical keys look like 'b<c'");
    int b = std::stoi(key.substr(0, lt)), c = std::stoi(key.substr(lt + 1));
    require(b >= 0 && c < f.base.size() && f.base.lt(b, c),
            "vertical key '" + key + "' is not an ascending base pair");
    f.vert[{b, c}] = parse_vertical(f.d, v);
  }
  if (f.d == Doctrine::Cat && j.contains("comparisons"))
    for (auto& [key, cc] : j.at("comparisons").items()) {
      auto l1 = key.find('<'), l2 = key.rfind('<');
      require(l1 != std::string::npos && l2 != l1,
              "comparison keys look like 'b<c<e'");
      int b = std::stoi(key.substr(0, l1));
      int c = std::stoi(key.substr(l1 + 1, l2 - l1 - 1));
      int e = std::stoi(key.substr(l2 + 1));
      require(f.base.lt(b, c) && f.base.lt(c, e),
              "comparison key '" + key + "' is not an ascending triple");
      CatComparison cmp;
      cmp.to_bd = cc.get<std::vector<std::vector<std::vector<int>>>>();
      f.comp[{b, c, e}] = cmp;
    }
  auto viol = validate(f);
  if (!viol.empty())
    throw invalid_instance("lax functor invalid at (" +
                           std::to_string(viol[0].b) + "," +
                           std::to_string(viol[0].c) + "): " + viol[0].what);
  return f;
}

Json print_report(const OracleReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["inconclusive"] = r.inconclusive;
  j["checked"] = r.checked;
  j["cap"] = r.cap;
  if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
  return j;
}

FinFunctor over_functor(const ObjectOverB& q) {
  FinFunctor f;
  f.dom = FinCat::from_poset(q.total);
  f.cod = FinCat::from_poset(q.base);
  f.obj_map = q.fib;
  for (int m = 0; m < f.dom.nmor(); ++m) {
    int a = q.fib[f.dom.src[m]], b = q.fib[f.dom.tgt[m]];
    f.mor_map.push_back(f.cod.arrow(a, b));
  }
  require(f.is_valid(), "fiber assignment is not functorial");
  return f;
}

}  // namespace expokit
