#include "chu/core.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chu {

Alphabet make_alphabet(FinSet atoms) {
  if (atoms.empty()) throw EmptyGamma("alphabet must be nonempty");
  for (const auto& e : atoms.elems)
    if (e.kind != Element::Kind::Atom)
      throw InputError("alphabet member is not an atom: " + to_string(e));
  return Alphabet{std::move(atoms)};
}

Alphabet make_alphabet(std::vector<std::string> names) {
  std::vector<Element> elems;
  elems.reserve(names.size());
  for (auto& n : names) elems.push_back(atom(std::move(n)));
  return make_alphabet(make_fin_set(std::move(elems)));
}

const Element& ChuSpace::at(const Element& a, const Element& x) const {
  auto i = carrier.index_of(a);
  if (!i) throw ElementNotInSet("row element: " + to_string(a));
  auto j = cocarrier.index_of(x);
  if (!j) throw ElementNotInSet("column element: " + to_string(x));
  return at(*i, *j);
}

ChuSpace make_space(Alphabet gamma, FinSet carrier, FinSet cocarrier,
                    std::vector<Element> matrix) {
  if (matrix.size() != carrier.size() * cocarrier.size())
    throw MatrixNotTotal("matrix has " + std::to_string(matrix.size()) +
                         " entries, expected " +
                         std::to_string(carrier.size() * cocarrier.size()));
  for (const auto& e : matrix)
    if (!gamma.atoms.contains(e))
      throw EntryOutsideGamma("matrix entry " + to_string(e));
  ChuSpace s;
  s.gamma = std::move(gamma);
  s.carrier = std::move(carrier);
  s.cocarrier = std::move(cocarrier);
  s.matrix = std::move(matrix);
  return s;
}

ChuTransform make_transform(ChuSpace dom, ChuSpace cod, FinMap forward,
                            FinMap backward) {
  if (!(dom.gamma == cod.gamma)) throw GammaMismatch("transform endpoints");
  if (!(forward.dom == dom.carrier) || !(forward.cod == cod.carrier))
    throw DomainMismatch("forward map must send carrier(dom) to carrier(cod)");
  if (!(backward.dom == cod.cocarrier) || !(backward.cod == dom.cocarrier))
    throw DomainMismatch("backward map must send cocarrier(cod) to cocarrier(dom)");
  for (std::size_t i = 0; i < dom.carrier.size(); ++i) {
    auto fi = cod.carrier.index_of(forward.values[i]);
    for (std::size_t j = 0; j < cod.cocarrier.size(); ++j) {
      auto bj = dom.cocarrier.index_of(backward.values[j]);
      if (!(dom.at(i, *bj) == cod.at(*fi, j)))
        throw AdjointnessViolated(
            "at carrier " + to_string(dom.carrier.elems[i]) + ", cocarrier " +
            to_string(cod.cocarrier.elems[j]));
    }
  }
  ChuTransform t;
  t.dom = std::move(dom);
  t.cod = std::move(cod);
  t.forward = std::move(forward);
  t.backward = std::move(backward);
  return t;
}

ChuTransform identity_transform(const ChuSpace& a) {
  ChuTransform t;
  t.dom = a;
  t.cod = a;
  t.forward = identity_map(a.carrier);
  t.backward = identity_map(a.cocarrier);
  return t;
}

ChuTransform compose(const ChuTransform& f, const ChuTransform& g) {
  if (!(f.cod == g.dom)) throw NotComposable("transform composition endpoints");
  ChuTransform t;
  t.dom = f.dom;
  t.cod = g.cod;
  t.forward = compose_maps(f.forward, g.forward);
  t.backward = compose_maps(g.backward, f.backward);
  return t;
}

ChuSpace dual(const ChuSpace& a) {
  ChuSpace d;
  d.gamma = a.gamma;
  d.carrier = a.cocarrier;
  d.cocarrier = a.carrier;
  d.matrix.resize(a.matrix.size());
  for (std::size_t i = 0; i < a.carrier.size(); ++i)
    for (std::size_t j = 0; j < a.cocarrier.size(); ++j)
      d.matrix[j * a.carrier.size() + i] = a.at(i, j);
  return d;
}

ChuTransform dual_transform(const ChuTransform& f) {
  ChuTransform t;
  t.dom = dual(f.cod);
  t.cod = dual(f.dom);
  t.forward = f.backward;
  t.backward = f.forward;
  return t;
}

namespace {

std::vector<std::vector<Element>> rows_of(const ChuSpace& a) {
  std::vector<std::vector<Element>> rows(a.carrier.size());
  for (std::size_t i = 0; i < a.carrier.size(); ++i) {
    rows[i].reserve(a.cocarrier.size());
    for (std::size_t j = 0; j < a.cocarrier.size(); ++j)
      rows[i].push_back(a.at(i, j));
  }
  return rows;
}

std::vector<std::vector<Element>> cols_of(const ChuSpace& a) {
  std::vector<std::vector<Element>> cols(a.cocarrier.size());
  for (std::size_t j = 0; j < a.cocarrier.size(); ++j) {
    cols[j].reserve(a.carrier.size());
    for (std::size_t i = 0; i < a.carrier.size(); ++i)
      cols[j].push_back(a.at(i, j));
  }
  return cols;
}

bool all_distinct(const std::vector<std::vector<Element>>& vs) {
  std::set<std::vector<Element>> seen;
  for (const auto& v : vs)
    if (!seen.insert(v).second) return false;
  return true;
}

// Pairs identifying equal lines, suitable for quotient().
std::vector<std::pair<Element, Element>> equal_line_pairs(
    const FinSet& index_set, const std::vector<std::vector<Element>>& lines) {
  std::map<std::vector<Element>, std::size_t> first;
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto [it, fresh] = first.emplace(lines[i], i);
    if (!fresh)
      out.emplace_back(index_set.elems[it->second], index_set.elems[i]);
  }
  return out;
}

}  // namespace

bool is_extensional(const ChuSpace& a) { return all_distinct(cols_of(a)); }
bool is_separable(const ChuSpace& a) { return all_distinct(rows_of(a)); }
bool is_biextensional(const ChuSpace& a) {
  return is_extensional(a) && is_separable(a);
}

Collapse collapse(const ChuSpace& a) {
  Quotient qr = quotient(a.carrier, equal_line_pairs(a.carrier, rows_of(a)));
  Quotient qc = quotient(a.cocarrier, equal_line_pairs(a.cocarrier, cols_of(a)));
  std::vector<Element> matrix;
  matrix.reserve(qr.classes.size() * qc.classes.size());
  for (const auto& rc : qr.classes.elems)
    for (const auto& cc : qc.classes.elems)
      matrix.push_back(a.at(rc.kids[0], cc.kids[0]));
  Collapse out;
  out.space = make_space(a.gamma, qr.classes, qc.classes, std::move(matrix));
  out.carrier_proj = qr.projection;
  out.cocarrier_proj = qc.projection;
  return out;
}

ChuTransform collapse_transform(const ChuTransform& f) {
  Collapse ca = collapse(f.dom);
  Collapse cb = collapse(f.cod);
  FinMap fwd = make_fin_map_by(
      ca.space.carrier, cb.space.carrier, [&](const Element& c) {
        return cb.carrier_proj(f.forward(c.kids[0]));
      });
  FinMap bwd = make_fin_map_by(
      cb.space.cocarrier, ca.space.cocarrier, [&](const Element& c) {
        return ca.cocarrier_proj(f.backward(c.kids[0]));
      });
  return make_transform(ca.space, cb.space, std::move(fwd), std::move(bwd));
}

bool is_monic(const ChuTransform& f) {
  return is_injective(f.forward) && is_surjective(f.backward);
}

bool is_epic(const ChuTransform& f) {
  return is_surjective(f.forward) && is_injective(f.backward);
}

bool brute_monic(const ChuTransform& f, const std::vector<ChuSpace>& probes,
                 const Budget& b) {
  for (const auto& probe : probes) {
    auto homs = hom_set(probe, f.dom, b);
    for (std::size_t i = 0; i < homs.size(); ++i) {
      auto gi = compose(homs[i], f);
      for (std::size_t j = i + 1; j < homs.size(); ++j)
        if (gi == compose(homs[j], f)) return false;
    }
  }
  return true;
}

ChuTransform invert(const ChuTransform& f) {
  if (!is_monic(f) || !is_epic(f))
    throw NotBijective("transform components are not bijections");
  return make_transform(f.cod, f.dom, invert_map(f.forward),
                        invert_map(f.backward));
}

namespace {

void check_function_budget(std::size_t base, std::size_t exp, const Budget& b,
                           const char* what) {
  long long count = 1;
  if (base == 0 && exp > 0) return;  // empty function space
  for (std::size_t i = 0; i < exp; ++i) {
    count *= static_cast<long long>(base);
    if (count > b.max_functions)
      throw BudgetExceeded(std::string(what) + " space of size >= " +
                               std::to_string(count),
                           count);
  }
}

// Shared enumeration. For each forward assignment (indices into b.carrier),
// the backward image of each y is constrained pointwise; visit() receives
// complete transforms in canonical order.
template <typename Visit>
void enumerate_homs(const ChuSpace& a, const ChuSpace& b, const Budget& budget,
                    bool materialize, long long& count, Visit&& visit) {
  if (!(a.gamma == b.gamma)) throw GammaMismatch("hom set endpoints");
  check_function_budget(b.carrier.size(), a.carrier.size(), budget, "forward");
  // Counting multiplies per-column candidate sizes and never builds the
  // backward tables, so only materialization pays for that space.
  if (materialize)
    check_function_budget(a.cocarrier.size(), b.cocarrier.size(), budget,
                          "backward");
  count = 0;
  const std::size_t n = a.carrier.size();
  const std::size_t yn = b.cocarrier.size();
  if (b.carrier.empty() && n > 0) return;

  std::vector<std::size_t> fwd(n, 0);
  while (true) {
    // per-y candidates for the backward image
    std::vector<std::vector<std::size_t>> valid(yn);
    bool feasible = true;
    for (std::size_t y = 0; y < yn && feasible; ++y) {
      for (std::size_t x = 0; x < a.cocarrier.size(); ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
          if (!(a.at(i, x) == b.at(fwd[i], y))) {
            ok = false;
            break;
          }
        if (ok) valid[y].push_back(x);
      }
      if (valid[y].empty()) feasible = false;
    }
    if (feasible) {
      long long here = 1;
      for (const auto& v : valid) here *= static_cast<long long>(v.size());
      count += here;
      if (materialize) {
        std::vector<std::size_t> pick(yn, 0);
        while (true) {
          ChuTransform t;
          t.dom = a;
          t.cod = b;
          t.forward.dom = a.carrier;
          t.forward.cod = b.carrier;
          for (std::size_t i = 0; i < n; ++i)
            t.forward.values.push_back(b.carrier.elems[fwd[i]]);
          t.backward.dom = b.cocarrier;
          t.backward.cod = a.cocarrier;
          for (std::size_t y = 0; y < yn; ++y)
            t.backward.values.push_back(a.cocarrier.elems[valid[y][pick[y]]]);
          visit(std::move(t));
          std::size_t y = yn;
          bool done = (yn == 0);
          while (y > 0) {
            --y;
            if (++pick[y] < valid[y].size()) break;
            pick[y] = 0;
            if (y == 0) done = true;
          }
          if (done) break;
        }
      }
    }
    // advance forward odometer
    std::size_t i = n;
    bool done = (n == 0);
    while (i > 0) {
      --i;
      if (++fwd[i] < b.carrier.size()) break;
      fwd[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
}

}  // namespace

std::vector<ChuTransform> hom_set(const ChuSpace& a, const ChuSpace& b,
                                  const Budget& budget) {
  std::vector<ChuTransform> out;
  long long count = 0;
  enumerate_homs(a, b, budget, true, count,
                 [&](ChuTransform t) { out.push_back(std::move(t)); });
  return out;
}

long long hom_count(const ChuSpace& a, const ChuSpace& b,
                    const Budget& budget) {
  long long count = 0;
  enumerate_homs(a, b, budget, false, count, [](ChuTransform) {});
  return count;
}

ChuSpace realize_set(const FinSet& points) {
  return make_space(make_alphabet({"0", "1"}), points, FinSet{}, {});
}

namespace {

Element characteristic_column(const FinSet& points, const FinSet& open) {
  std::vector<std::pair<Element, Element>> entries;
  entries.reserve(points.size());
  for (const auto& p : points.elems)
    entries.emplace_back(p, atom(open.contains(p) ? "1" : "0"));
  return fn_table(std::move(entries));
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  std::vector<Element> es = a.elems;
  es.insert(es.end(), b.elems.begin(), b.elems.end());
  return make_fin_set(std::move(es));
}

FinSet set_intersection(const FinSet& a, const FinSet& b) {
  std::vector<Element> es;
  for (const auto& e : a.elems)
    if (b.contains(e)) es.push_back(e);
  return make_fin_set(std::move(es));
}

}  // namespace

ChuSpace realize_topology(const FinSet& points,
                          const std::vector<FinSet>& opens) {
  std::set<std::vector<Element>> family;
  for (const auto& o : opens) {
    for (const auto& p : o.elems)
      if (!points.contains(p))
        throw ElementNotInSet("open contains non-point " + to_string(p));
    family.insert(o.elems);
  }
  auto has = [&](const FinSet& s) { return family.count(s.elems) > 0; };
  if (!has(FinSet{})) throw NotATopology("missing empty open");
  if (!has(points)) throw NotATopology("missing full open");
  for (const auto& o1 : opens)
    for (const auto& o2 : opens) {
      if (!has(set_union(o1, o2))) throw NotATopology("not closed under union");
      if (!has(set_intersection(o1, o2)))
        throw NotATopology("not closed under intersection");
    }
  std::vector<Element> columns;
  for (const auto& es : family) {
    FinSet o;
    o.elems = es;
    columns.push_back(characteristic_column(points, o));
  }
  FinSet cocarrier = make_fin_set(std::move(columns));
  std::vector<Element> matrix;
  matrix.reserve(points.size() * cocarrier.size());
  for (const auto& p : points.elems)
    for (const auto& col : cocarrier.elems)
      matrix.push_back(fn_to_map(col, points, make_fin_set({atom("0"), atom("1")}))(p));
  return make_space(make_alphabet({"0", "1"}), points, std::move(cocarrier),
                    std::move(matrix));
}

bool is_topological(const ChuSpace& a) {
  if (!(a.gamma == make_alphabet({"0", "1"}))) return false;
  if (!is_extensional(a)) return false;
  const Element one = atom("1");
  std::set<std::vector<bool>> family;
  for (std::size_t j = 0; j < a.cocarrier.size(); ++j) {
    std::vector<bool> col(a.carrier.size());
    for (std::size_t i = 0; i < a.carrier.size(); ++i)
      col[i] = (a.at(i, j) == one);
    family.insert(std::move(col));
  }
  std::vector<bool> empty_col(a.carrier.size(), false);
  std::vector<bool> full_col(a.carrier.size(), true);
  if (!family.count(empty_col) || !family.count(full_col)) return false;
  for (const auto& c1 : family)
    for (const auto& c2 : family) {
      std::vector<bool> un(a.carrier.size()), in(a.carrier.size());
      for (std::size_t i = 0; i < a.carrier.size(); ++i) {
        un[i] = c1[i] || c2[i];
        in[i] = c1[i] && c2[i];
      }
      if (!family.count(un) || !family.count(in)) return false;
    }
  return true;
}

}  // namespace chu
