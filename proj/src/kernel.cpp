#include "chu/kernel.hpp"

#include <algorithm>
#include <numeric>

namespace chu {

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  return std::lexicographical_compare_three_way(a.kids.begin(), a.kids.end(),
                                                b.kids.begin(), b.kids.end());
}

Element atom(std::string name) {
  if (name.empty()) throw InputError("empty atom name");
  Element e;
  e.kind = Element::Kind::Atom;
  e.name = std::move(name);
  return e;
}

Element pair(Element first, Element second) {
  Element e;
  e.kind = Element::Kind::Pair;
  e.kids.push_back(std::move(first));
  e.kids.push_back(std::move(second));
  return e;
}

Element inl(Element x) {
  Element e;
  e.kind = Element::Kind::Inl;
  e.kids.push_back(std::move(x));
  return e;
}

Element inr(Element x) {
  Element e;
  e.kind = Element::Kind::Inr;
  e.kids.push_back(std::move(x));
  return e;
}

Element fn_table(std::vector<std::pair<Element, Element>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first)
      throw InputError("duplicate key in function table: " +
                       to_string(entries[i].first));
  Element e;
  e.kind = Element::Kind::Fn;
  e.kids.reserve(entries.size() * 2);
  for (auto& [k, v] : entries) {
    e.kids.push_back(std::move(k));
    e.kids.push_back(std::move(v));
  }
  return e;
}

Element cls(std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw InputError("empty equivalence class");
  Element e;
  e.kind = Element::Kind::Cls;
  e.kids = std::move(members);
  return e;
}

static void require_kind(const Element& e, Element::Kind k, const char* what) {
  if (e.kind != k) throw InputError(std::string("expected ") + what + ", got " + to_string(e));
}

const Element& pair_first(const Element& p) {
  require_kind(p, Element::Kind::Pair, "pair");
  return p.kids[0];
}

const Element& pair_second(const Element& p) {
  require_kind(p, Element::Kind::Pair, "pair");
  return p.kids[1];
}

bool is_inl(const Element& e) { return e.kind == Element::Kind::Inl; }
bool is_inr(const Element& e) { return e.kind == Element::Kind::Inr; }

const Element& tagged_payload(const Element& e) {
  if (!is_inl(e) && !is_inr(e)) throw InputError("expected tagged element, got " + to_string(e));
  return e.kids[0];
}

Element swap_tag(const Element& e) {
  if (is_inl(e)) return inr(e.kids[0]);
  if (is_inr(e)) return inl(e.kids[0]);
  throw InputError("expected tagged element, got " + to_string(e));
}

std::string to_string(const Element& e) {
  switch (e.kind) {
    case Element::Kind::Atom:
      return e.name;
    case Element::Kind::Pair:
      return "(" + to_string(e.kids[0]) + "," + to_string(e.kids[1]) + ")";
    case Element::Kind::Inl:
      return "L:" + to_string(e.kids[0]);
    case Element::Kind::Inr:
      return "R:" + to_string(e.kids[0]);
    case Element::Kind::Fn: {
      std::string s = "{";
      for (std::size_t i = 0; i < e.kids.size(); i += 2) {
        if (i) s += ",";
        s += to_string(e.kids[i]) + "->" + to_string(e.kids[i + 1]);
      }
      return s + "}";
    }
    case Element::Kind::Cls: {
      std::string s = "[";
      for (std::size_t i = 0; i < e.kids.size(); ++i) {
        if (i) s += ",";
        s += to_string(e.kids[i]);
      }
      return s + "]";
    }
  }
  return "?";
}

bool FinSet::contains(const Element& e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

std::optional<std::size_t> FinSet::index_of(const Element& e) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), e);
  if (it == elems.end() || !(*it == e)) return std::nullopt;
  return static_cast<std::size_t>(it - elems.begin());
}

FinSet make_fin_set(std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  FinSet s;
  s.elems = std::move(elems);
  return s;
}

const Element& FinMap::operator()(const Element& x) const {
  auto i = dom.index_of(x);
  if (!i) throw ElementNotInSet("map applied outside domain: " + to_string(x));
  return values[*i];
}

FinMap make_fin_map(FinSet dom, FinSet cod,
                    const std::vector<std::pair<Element, Element>>& table) {
  std::vector<Element> values(dom.size());
  std::vector<bool> seen(dom.size(), false);
  for (const auto& [k, v] : table) {
    auto i = dom.index_of(k);
    if (!i) throw ElementNotInSet("map key not in domain: " + to_string(k));
    if (seen[*i]) throw InputError("duplicate map key: " + to_string(k));
    if (!cod.contains(v))
      throw ElementNotInSet("map value not in codomain: " + to_string(v));
    values[*i] = v;
    seen[*i] = true;
  }
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (!seen[i])
      throw InputError("map not total, missing key: " + to_string(dom.elems[i]));
  FinMap m;
  m.dom = std::move(dom);
  m.cod = std::move(cod);
  m.values = std::move(values);
  return m;
}

FinMap make_fin_map_by(FinSet dom, FinSet cod,
                       const std::function<Element(const Element&)>& fn) {
  std::vector<Element> values;
  values.reserve(dom.size());
  for (const auto& x : dom.elems) {
    Element v = fn(x);
    if (!cod.contains(v))
      throw ElementNotInSet("map value not in codomain: " + to_string(v));
    values.push_back(std::move(v));
  }
  FinMap m;
  m.dom = std::move(dom);
  m.cod = std::move(cod);
  m.values = std::move(values);
  return m;
}

FinMap identity_map(const FinSet& s) {
  FinMap m;
  m.dom = s;
  m.cod = s;
  m.values = s.elems;
  return m;
}

FinMap compose_maps(const FinMap& f, const FinMap& g) {
  if (!(f.cod == g.dom))
    throw NotComposable("map codomain/domain mismatch in composition");
  FinMap m;
  m.dom = f.dom;
  m.cod = g.cod;
  m.values.reserve(f.values.size());
  for (const auto& v : f.values) m.values.push_back(g(v));
  return m;
}

bool is_injective(const FinMap& m) {
  std::vector<Element> vs = m.values;
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

bool is_surjective(const FinMap& m) {
  std::vector<Element> vs = m.values;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs.size() == m.cod.size();
}

FinMap invert_map(const FinMap& m) {
  if (!is_injective(m) || !is_surjective(m))
    throw NotBijective("map is not a bijection");
  std::vector<std::pair<Element, Element>> table;
  table.reserve(m.values.size());
  for (std::size_t i = 0; i < m.dom.size(); ++i)
    table.emplace_back(m.values[i], m.dom.elems[i]);
  return make_fin_map(m.cod, m.dom, table);
}

FinMap fn_to_map(const Element& fn, const FinSet& dom, const FinSet& cod) {
  if (fn.kind != Element::Kind::Fn)
    throw InputError("expected function table, got " + to_string(fn));
  std::vector<std::pair<Element, Element>> table;
  for (std::size_t i = 0; i < fn.kids.size(); i += 2)
    table.emplace_back(fn.kids[i], fn.kids[i + 1]);
  if (table.size() != dom.size())
    throw DomainMismatch("function table keys do not match domain");
  return make_fin_map(dom, cod, table);
}

Element map_to_fn(const FinMap& m) {
  std::vector<std::pair<Element, Element>> entries;
  entries.reserve(m.dom.size());
  for (std::size_t i = 0; i < m.dom.size(); ++i)
    entries.emplace_back(m.dom.elems[i], m.values[i]);
  return fn_table(std::move(entries));
}

std::vector<Element> enumerate_functions(const FinSet& dom, const FinSet& cod,
                                         const Budget& b) {
  const std::size_t n = dom.size(), k = cod.size();
  if (k == 0 && n > 0) return {};
  long long count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= static_cast<long long>(k);
    if (count > b.max_functions)
      throw BudgetExceeded("function space of size >= " + std::to_string(count), count);
  }
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> odo(n, 0);
  while (true) {
    std::vector<std::pair<Element, Element>> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      entries.emplace_back(dom.elems[i], cod.elems[odo[i]]);
    out.push_back(fn_table(std::move(entries)));
    // advance odometer, last position fastest
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++odo[i] < k) break;
      odo[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

DisjointUnion disjoint_union(const FinSet& s, const FinSet& t) {
  std::vector<Element> elems;
  elems.reserve(s.size() + t.size());
  for (const auto& e : s.elems) elems.push_back(inl(e));
  for (const auto& e : t.elems) elems.push_back(inr(e));
  DisjointUnion u;
  u.set = make_fin_set(std::move(elems));
  u.in_left = make_fin_map_by(s, u.set, [](const Element& e) { return inl(e); });
  u.in_right = make_fin_map_by(t, u.set, [](const Element& e) { return inr(e); });
  return u;
}

Cartesian cartesian(const FinSet& s, const FinSet& t) {
  std::vector<Element> elems;
  elems.reserve(s.size() * t.size());
  for (const auto& a : s.elems)
    for (const auto& b : t.elems) elems.push_back(pair(a, b));
  Cartesian c;
  c.set = make_fin_set(std::move(elems));
  c.proj1 = make_fin_map_by(c.set, s, [](const Element& e) { return pair_first(e); });
  c.proj2 = make_fin_map_by(c.set, t, [](const Element& e) { return pair_second(e); });
  return c;
}

namespace {
struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];  // path halving
      x = parent[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);  // smallest index wins, deterministic
    parent[b] = a;
    return true;
  }
};
}  // namespace

Quotient quotient(const FinSet& s,
                  const std::vector<std::pair<Element, Element>>& pairs) {
  UnionFind uf(s.size());
  long long merges = 0;
  for (const auto& [a, b] : pairs) {
    auto ia = s.index_of(a);
    auto ib = s.index_of(b);
    if (!ia) throw ElementNotInSet("quotient pair element: " + to_string(a));
    if (!ib) throw ElementNotInSet("quotient pair element: " + to_string(b));
    if (uf.unite(*ia, *ib)) ++merges;
  }
  std::vector<std::vector<Element>> groups(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    groups[uf.find(i)].push_back(s.elems[i]);
  std::vector<Element> class_of(s.size());
  std::vector<Element> classes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (groups[i].empty()) continue;
    Element c = cls(groups[i]);
    for (const auto& member : groups[i]) {
      auto idx = s.index_of(member);
      class_of[*idx] = c;
    }
    classes.push_back(std::move(c));
  }
  Quotient q;
  q.classes = make_fin_set(std::move(classes));
  q.merges = merges;
  FinMap proj;
  proj.dom = s;
  proj.cod = q.classes;
  proj.values = std::move(class_of);
  q.projection = std::move(proj);
  return q;
}

}  // namespace chu
