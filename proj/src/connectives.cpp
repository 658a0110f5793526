#include "chu/connectives.hpp"

#include <algorithm>

namespace chu {

namespace {

const Element kStar = atom("*");

void require_same_gamma(const ChuSpace& a, const ChuSpace& b,
                        const char* what) {
  if (!(a.gamma == b.gamma)) throw GammaMismatch(what);
}

}  // namespace

ChuSpace unit_i(const Alphabet& g) {
  std::vector<Element> row = g.atoms.elems;
  return make_space(g, make_fin_set({kStar}), g.atoms, std::move(row));
}

ChuSpace perp(const Alphabet& g) { return dual(unit_i(g)); }

ChuSpace zero(const Alphabet& g) {
  return make_space(g, FinSet{}, make_fin_set({kStar}), {});
}

ChuSpace top(const Alphabet& g) { return dual(zero(g)); }

ChuSpace tensor(const ChuSpace& a, const ChuSpace& b, const Budget& bud) {
  require_same_gamma(a, b, "tensor operands");
  auto phis = enumerate_functions(a.carrier, b.cocarrier, bud);
  auto psis = enumerate_functions(b.carrier, a.cocarrier, bud);
  if (static_cast<long long>(phis.size()) *
          static_cast<long long>(psis.size()) >
      bud.max_elements)
    throw BudgetExceeded("tensor cocarrier candidates",
                         static_cast<long long>(phis.size()) *
                             static_cast<long long>(psis.size()));
  std::vector<Element> cocarrier_elems;
  for (const auto& phi : phis) {
    FinMap pm = fn_to_map(phi, a.carrier, b.cocarrier);
    for (const auto& psi : psis) {
      FinMap qm = fn_to_map(psi, b.carrier, a.cocarrier);
      bool ok = true;
      for (std::size_t i = 0; i < a.carrier.size() && ok; ++i)
        for (std::size_t j = 0; j < b.carrier.size() && ok; ++j)
          if (!(b.at(b.carrier.elems[j], pm.at_index(i)) ==
                a.at(a.carrier.elems[i], qm.at_index(j))))
            ok = false;
      if (ok) cocarrier_elems.push_back(pair(phi, psi));
    }
  }
  FinSet carrier = cartesian(a.carrier, b.carrier).set;
  FinSet cocarrier = make_fin_set(std::move(cocarrier_elems));
  std::vector<Element> matrix;
  matrix.reserve(carrier.size() * cocarrier.size());
  for (const auto& ab : carrier.elems) {
    const Element& ea = pair_first(ab);
    const Element& eb = pair_second(ab);
    for (const auto& co : cocarrier.elems) {
      FinMap pm = fn_to_map(pair_first(co), a.carrier, b.cocarrier);
      matrix.push_back(b.at(eb, pm(ea)));
    }
  }
  return make_space(a.gamma, std::move(carrier), std::move(cocarrier),
                    std::move(matrix));
}

ChuTransform tensor_mor(const ChuTransform& f, const ChuTransform& g,
                        const Budget& bud) {
  ChuSpace dom = tensor(f.dom, g.dom, bud);
  ChuSpace cod = tensor(f.cod, g.cod, bud);
  FinMap fwd = make_fin_map_by(dom.carrier, cod.carrier, [&](const Element& ab) {
    return pair(f.forward(pair_first(ab)), g.forward(pair_second(ab)));
  });
  FinMap bwd = make_fin_map_by(
      cod.cocarrier, dom.cocarrier, [&](const Element& co) {
        FinMap phi = fn_to_map(pair_first(co), f.cod.carrier, g.cod.cocarrier);
        FinMap psi = fn_to_map(pair_second(co), g.cod.carrier, f.cod.cocarrier);
        FinMap nphi =
            compose_maps(f.forward, compose_maps(phi, g.backward));
        FinMap npsi =
            compose_maps(g.forward, compose_maps(psi, f.backward));
        return pair(map_to_fn(nphi), map_to_fn(npsi));
      });
  return make_transform(std::move(dom), std::move(cod), std::move(fwd),
                        std::move(bwd));
}

ChuSpace lolli(const ChuSpace& a, const ChuSpace& b, const Budget& bud) {
  require_same_gamma(a, b, "lolli operands");
  auto homs = hom_set(a, b, bud);
  std::vector<Element> carrier_elems;
  carrier_elems.reserve(homs.size());
  for (const auto& h : homs)
    carrier_elems.push_back(pair(map_to_fn(h.forward), map_to_fn(h.backward)));
  FinSet carrier = make_fin_set(std::move(carrier_elems));
  FinSet cocarrier = cartesian(a.carrier, b.cocarrier).set;
  std::vector<Element> matrix;
  matrix.reserve(carrier.size() * cocarrier.size());
  for (const auto& h : carrier.elems) {
    FinMap phi = fn_to_map(pair_first(h), a.carrier, b.carrier);
    for (const auto& ay : cocarrier.elems)
      matrix.push_back(b.at(phi(pair_first(ay)), pair_second(ay)));
  }
  return make_space(a.gamma, std::move(carrier), std::move(cocarrier),
                    std::move(matrix));
}

ChuTransform lolli_mor(const ChuTransform& f, const ChuTransform& g,
                       const Budget& bud) {
  // f: A' -> A, g: B -> B'; result maps lolli(A,B) -> lolli(A',B').
  ChuSpace dom = lolli(f.cod, g.dom, bud);
  ChuSpace cod = lolli(f.dom, g.cod, bud);
  FinMap fwd = make_fin_map_by(dom.carrier, cod.carrier, [&](const Element& h) {
    FinMap phi = fn_to_map(pair_first(h), f.cod.carrier, g.dom.carrier);
    FinMap psi = fn_to_map(pair_second(h), g.dom.cocarrier, f.cod.cocarrier);
    FinMap nphi = compose_maps(f.forward, compose_maps(phi, g.forward));
    FinMap npsi = compose_maps(g.backward, compose_maps(psi, f.backward));
    return pair(map_to_fn(nphi), map_to_fn(npsi));
  });
  FinMap bwd = make_fin_map_by(
      cod.cocarrier, dom.cocarrier, [&](const Element& ay) {
        return pair(f.forward(pair_first(ay)), g.backward(pair_second(ay)));
      });
  return make_transform(std::move(dom), std::move(cod), std::move(fwd),
                        std::move(bwd));
}

ChuSpace par(const ChuSpace& a, const ChuSpace& b, const Budget& bud) {
  return dual(tensor(dual(a), dual(b), bud));
}

ChuTransform par_mor(const ChuTransform& f, const ChuTransform& g,
                     const Budget& bud) {
  return dual_transform(
      tensor_mor(dual_transform(f), dual_transform(g), bud));
}

Product with_(const ChuSpace& a, const ChuSpace& b) {
  require_same_gamma(a, b, "with operands");
  FinSet carrier = cartesian(a.carrier, b.carrier).set;
  DisjointUnion du = disjoint_union(a.cocarrier, b.cocarrier);
  std::vector<Element> matrix;
  matrix.reserve(carrier.size() * du.set.size());
  for (const auto& ab : carrier.elems)
    for (const auto& xy : du.set.elems)
      matrix.push_back(is_inl(xy)
                           ? a.at(pair_first(ab), tagged_payload(xy))
                           : b.at(pair_second(ab), tagged_payload(xy)));
  Product out;
  out.space = make_space(a.gamma, carrier, du.set, std::move(matrix));
  out.p1 = make_transform(
      out.space, a,
      make_fin_map_by(carrier, a.carrier,
                      [](const Element& ab) { return pair_first(ab); }),
      make_fin_map_by(a.cocarrier, du.set,
                      [](const Element& x) { return inl(x); }));
  out.p2 = make_transform(
      out.space, b,
      make_fin_map_by(carrier, b.carrier,
                      [](const Element& ab) { return pair_second(ab); }),
      make_fin_map_by(b.cocarrier, du.set,
                      [](const Element& y) { return inr(y); }));
  return out;
}

ChuTransform with_mor(const ChuTransform& f, const ChuTransform& g) {
  Product dom = with_(f.dom, g.dom);
  Product cod = with_(f.cod, g.cod);
  FinMap fwd = make_fin_map_by(
      dom.space.carrier, cod.space.carrier, [&](const Element& ab) {
        return pair(f.forward(pair_first(ab)), g.forward(pair_second(ab)));
      });
  FinMap bwd = make_fin_map_by(
      cod.space.cocarrier, dom.space.cocarrier, [&](const Element& xy) {
        return is_inl(xy) ? inl(f.backward(tagged_payload(xy)))
                          : inr(g.backward(tagged_payload(xy)));
      });
  return make_transform(dom.space, cod.space, std::move(fwd), std::move(bwd));
}

ChuTransform pairing(const ChuTransform& f, const ChuTransform& g) {
  if (!(f.dom == g.dom)) throw DomainMismatch("pairing legs");
  Product cod = with_(f.cod, g.cod);
  FinMap fwd = make_fin_map_by(
      f.dom.carrier, cod.space.carrier,
      [&](const Element& c) { return pair(f.forward(c), g.forward(c)); });
  FinMap bwd = make_fin_map_by(
      cod.space.cocarrier, f.dom.cocarrier, [&](const Element& xy) {
        return is_inl(xy) ? f.backward(tagged_payload(xy))
                          : g.backward(tagged_payload(xy));
      });
  return make_transform(f.dom, cod.space, std::move(fwd), std::move(bwd));
}

Coproduct plus(const ChuSpace& a, const ChuSpace& b) {
  require_same_gamma(a, b, "plus operands");
  DisjointUnion du = disjoint_union(a.carrier, b.carrier);
  FinSet cocarrier = cartesian(a.cocarrier, b.cocarrier).set;
  std::vector<Element> matrix;
  matrix.reserve(du.set.size() * cocarrier.size());
  for (const auto& ab : du.set.elems)
    for (const auto& xy : cocarrier.elems)
      matrix.push_back(is_inl(ab)
                           ? a.at(tagged_payload(ab), pair_first(xy))
                           : b.at(tagged_payload(ab), pair_second(xy)));
  Coproduct out;
  out.space = make_space(a.gamma, du.set, cocarrier, std::move(matrix));
  out.i1 = make_transform(
      a, out.space,
      make_fin_map_by(a.carrier, du.set,
                      [](const Element& x) { return inl(x); }),
      make_fin_map_by(cocarrier, a.cocarrier,
                      [](const Element& xy) { return pair_first(xy); }));
  out.i2 = make_transform(
      b, out.space,
      make_fin_map_by(b.carrier, du.set,
                      [](const Element& x) { return inr(x); }),
      make_fin_map_by(cocarrier, b.cocarrier,
                      [](const Element& xy) { return pair_second(xy); }));
  return out;
}

ChuTransform plus_mor(const ChuTransform& f, const ChuTransform& g) {
  Coproduct dom = plus(f.dom, g.dom);
  Coproduct cod = plus(f.cod, g.cod);
  FinMap fwd = make_fin_map_by(
      dom.space.carrier, cod.space.carrier, [&](const Element& ab) {
        return is_inl(ab) ? inl(f.forward(tagged_payload(ab)))
                          : inr(g.forward(tagged_payload(ab)));
      });
  FinMap bwd = make_fin_map_by(
      cod.space.cocarrier, dom.space.cocarrier, [&](const Element& xy) {
        return pair(f.backward(pair_first(xy)), g.backward(pair_second(xy)));
      });
  return make_transform(dom.space, cod.space, std::move(fwd), std::move(bwd));
}

ChuTransform copairing(const ChuTransform& f, const ChuTransform& g) {
  if (!(f.cod == g.cod)) throw DomainMismatch("copairing legs");
  Coproduct dom = plus(f.dom, g.dom);
  FinMap fwd = make_fin_map_by(
      dom.space.carrier, f.cod.carrier, [&](const Element& ab) {
        return is_inl(ab) ? f.forward(tagged_payload(ab))
                          : g.forward(tagged_payload(ab));
      });
  FinMap bwd = make_fin_map_by(
      f.cod.cocarrier, dom.space.cocarrier,
      [&](const Element& z) { return pair(f.backward(z), g.backward(z)); });
  return make_transform(dom.space, f.cod, std::move(fwd), std::move(bwd));
}

ChuTransform curry(const ChuTransform& h, const ChuSpace& a, const ChuSpace& b,
                   const ChuSpace& c, const Budget& bud) {
  if (!(h.dom == tensor(a, b, bud)))
    throw DomainMismatch("curry argument is not a transform out of the tensor");
  if (!(h.cod == c)) throw DomainMismatch("curry codomain");
  ChuSpace l = lolli(b, c, bud);
  FinMap fwd = make_fin_map_by(a.carrier, l.carrier, [&](const Element& ea) {
    std::vector<std::pair<Element, Element>> chi, omega;
    for (const auto& eb : b.carrier.elems)
      chi.emplace_back(eb, h.forward(pair(ea, eb)));
    for (const auto& z : c.cocarrier.elems) {
      FinMap phi = fn_to_map(pair_first(h.backward(z)), a.carrier, b.cocarrier);
      omega.emplace_back(z, phi(ea));
    }
    return pair(fn_table(std::move(chi)), fn_table(std::move(omega)));
  });
  FinMap bwd =
      make_fin_map_by(l.cocarrier, a.cocarrier, [&](const Element& bz) {
        const Element& z = pair_second(bz);
        FinMap psi = fn_to_map(pair_second(h.backward(z)), b.carrier, a.cocarrier);
        return psi(pair_first(bz));
      });
  return make_transform(a, std::move(l), std::move(fwd), std::move(bwd));
}

ChuTransform decurry(const ChuTransform& k, const ChuSpace& a,
                     const ChuSpace& b, const ChuSpace& c, const Budget& bud) {
  if (!(k.dom == a)) throw DomainMismatch("decurry domain");
  if (!(k.cod == lolli(b, c, bud)))
    throw DomainMismatch("decurry argument is not a transform into the hom");
  ChuSpace t = tensor(a, b, bud);
  FinMap fwd = make_fin_map_by(t.carrier, c.carrier, [&](const Element& ab) {
    FinMap chi =
        fn_to_map(pair_first(k.forward(pair_first(ab))), b.carrier, c.carrier);
    return chi(pair_second(ab));
  });
  FinMap bwd = make_fin_map_by(c.cocarrier, t.cocarrier, [&](const Element& z) {
    std::vector<std::pair<Element, Element>> phi, psi;
    for (const auto& ea : a.carrier.elems) {
      FinMap omega =
          fn_to_map(pair_second(k.forward(ea)), c.cocarrier, b.cocarrier);
      phi.emplace_back(ea, omega(z));
    }
    for (const auto& eb : b.carrier.elems)
      psi.emplace_back(eb, k.backward(pair(eb, z)));
    return pair(fn_table(std::move(phi)), fn_table(std::move(psi)));
  });
  return make_transform(std::move(t), c, std::move(fwd), std::move(bwd));
}

DoubleDual canonical_double_dual(const ChuSpace& a, const Budget& bud) {
  ChuSpace p = perp(a.gamma);
  ChuSpace l = lolli(a, p, bud);
  ChuSpace ll = lolli(l, p, bud);
  // carrier elements of l are pairs (column table, {* -> x}); the second
  // component pins the cocarrier point
  auto point_of = [&](const Element& e) -> Element {
    FinMap psi = fn_to_map(pair_second(e), p.cocarrier, a.cocarrier);
    return psi(kStar);
  };
  FinMap fwd = make_fin_map_by(a.carrier, ll.carrier, [&](const Element& ea) {
    std::vector<std::pair<Element, Element>> chi;
    for (const auto& e : l.carrier.elems)
      chi.emplace_back(e, a.at(ea, point_of(e)));
    std::vector<std::pair<Element, Element>> omega;
    omega.emplace_back(kStar, pair(ea, kStar));
    return pair(fn_table(std::move(chi)), fn_table(std::move(omega)));
  });
  FinMap bwd = make_fin_map_by(
      ll.cocarrier, a.cocarrier,
      [&](const Element& es) { return point_of(pair_first(es)); });
  DoubleDual out;
  out.d = make_transform(a, std::move(ll), std::move(fwd), std::move(bwd));
  out.iso = is_monic(out.d) && is_epic(out.d);
  return out;
}

Equalized equalizer(const ChuTransform& f, const ChuTransform& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw NotParallel("equalizer needs a parallel pair");
  const ChuSpace& a = f.dom;
  std::vector<Element> kept;
  for (const auto& e : a.carrier.elems)
    if (f.forward(e) == g.forward(e)) kept.push_back(e);
  FinSet carrier = make_fin_set(std::move(kept));
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(f.cod.cocarrier.size());
  for (const auto& y : f.cod.cocarrier.elems)
    pairs.emplace_back(f.backward(y), g.backward(y));
  // matrix restriction is well-defined on the generated classes
  for (const auto& e : carrier.elems)
    for (const auto& [x1, x2] : pairs)
      if (!(a.at(e, x1) == a.at(e, x2)))
        throw PropertyViolation("equalizer matrix not constant on classes");
  Quotient q = quotient(a.cocarrier, pairs);
  std::vector<Element> matrix;
  matrix.reserve(carrier.size() * q.classes.size());
  for (const auto& e : carrier.elems)
    for (const auto& c : q.classes.elems) matrix.push_back(a.at(e, c.kids[0]));
  Equalized out;
  out.space = make_space(a.gamma, carrier, q.classes, std::move(matrix));
  out.arrow = make_transform(
      out.space, a,
      make_fin_map_by(carrier, a.carrier, [](const Element& e) { return e; }),
      q.projection);
  return out;
}

Coequalized coequalizer(const ChuTransform& f, const ChuTransform& g) {
  if (!(f.dom == g.dom) || !(f.cod == g.cod))
    throw NotParallel("coequalizer needs a parallel pair");
  const ChuSpace& b = f.cod;
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(f.dom.carrier.size());
  for (const auto& e : f.dom.carrier.elems)
    pairs.emplace_back(f.forward(e), g.forward(e));
  std::vector<Element> kept;
  for (const auto& y : b.cocarrier.elems)
    if (f.backward(y) == g.backward(y)) kept.push_back(y);
  FinSet cocarrier = make_fin_set(std::move(kept));
  for (const auto& y : cocarrier.elems)
    for (const auto& [a1, a2] : pairs)
      if (!(b.at(a1, y) == b.at(a2, y)))
        throw PropertyViolation("coequalizer matrix not constant on classes");
  Quotient q = quotient(b.carrier, pairs);
  std::vector<Element> matrix;
  matrix.reserve(q.classes.size() * cocarrier.size());
  for (const auto& c : q.classes.elems)
    for (const auto& y : cocarrier.elems) matrix.push_back(b.at(c.kids[0], y));
  Coequalized out;
  out.space = make_space(b.gamma, q.classes, cocarrier, std::move(matrix));
  out.arrow = make_transform(
      b, out.space, q.projection,
      make_fin_map_by(cocarrier, b.cocarrier,
                      [](const Element& e) { return e; }));
  return out;
}

PullbackResult pullback(const ChuTransform& f, const ChuTransform& g) {
  if (!(f.cod == g.cod)) throw ShapeMismatch("pullback legs share a codomain");
  Product w = with_(f.dom, g.dom);
  Equalized e = equalizer(compose(w.p1, f), compose(w.p2, g));
  return PullbackResult{e.space, compose(e.arrow, w.p1),
                        compose(e.arrow, w.p2)};
}

PushoutResult pushout(const ChuTransform& f, const ChuTransform& g) {
  if (!(f.dom == g.dom)) throw ShapeMismatch("pushout legs share a domain");
  Coproduct p = plus(f.cod, g.cod);
  Coequalized q = coequalizer(compose(f, p.i1), compose(g, p.i2));
  return PushoutResult{q.space, compose(p.i1, q.arrow),
                       compose(p.i2, q.arrow)};
}

std::optional<ChuTransform> find_iso(const ChuSpace& a, const ChuSpace& b,
                                     const Budget& bud) {
  for (auto& h : hom_set(a, b, bud))
    if (is_monic(h) && is_epic(h)) return h;
  return std::nullopt;
}

}  // namespace chu
