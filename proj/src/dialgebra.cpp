#include "chu/dialgebra.hpp"

#include <optional>

namespace chu {

namespace {

bool square_commutes(const Dialgebra& da, const Dialgebra& db,
                     const ChuTransform& stem) {
  return compose(da.alpha, apply_mor(da.g, stem)) ==
         compose(apply_mor(da.f, stem), db.alpha);
}

void require_profile(const Dialgebra& da, const Dialgebra& db,
                     const char* where) {
  if (!(da.f == db.f) || !(da.g == db.g)) throw ProfileMismatch(where);
}

void require_stem_shape(const Dialgebra& da, const Dialgebra& db,
                        const ChuTransform& stem, const char* where) {
  if (!(stem.dom == da.carrier) || !(stem.cod == db.carrier))
    throw ShapeMismatch(where);
}

// The unique transform u with u;p1 = leg1 and u;p2 = leg2, if any.
std::optional<ChuTransform> find_mediator(const ChuSpace& from,
                                          const PullbackResult& pb,
                                          const ChuTransform& leg1,
                                          const ChuTransform& leg2,
                                          const Budget& bud) {
  for (const ChuTransform& u : hom_set(from, pb.space, bud))
    if (compose(u, pb.p1) == leg1 && compose(u, pb.p2) == leg2) return u;
  return std::nullopt;
}

}  // namespace

Dialgebra make_dialgebra(FunctorDescriptor f, FunctorDescriptor g,
                         ChuSpace carrier, ChuTransform alpha) {
  if (variance(f) == Variance::Contravariant ||
      variance(g) == Variance::Contravariant)
    throw VarianceError("dialgebra profile must be covariant");
  if (!(alpha.dom == apply_ob(f, carrier)) ||
      !(alpha.cod == apply_ob(g, carrier)))
    throw ShapeMismatch("structure map endpoints");
  return {std::move(f), std::move(g), std::move(carrier), std::move(alpha)};
}

DialgebraHom make_hom(const Dialgebra& d1, const Dialgebra& d2,
                      ChuTransform stem) {
  require_profile(d1, d2, "hom endpoints");
  require_stem_shape(d1, d2, stem, "hom stem endpoints");
  if (!square_commutes(d1, d2, stem))
    throw SquareViolated("hom square");
  return {d1, d2, std::move(stem)};
}

DialgebraHom identity_hom(const Dialgebra& d) {
  return make_hom(d, d, identity_transform(d.carrier));
}

DialgebraHom compose_hom(const DialgebraHom& h, const DialgebraHom& k) {
  if (!(h.cod == k.dom)) throw NotComposable("dialgebra homs");
  return make_hom(h.dom, k.cod, compose(h.stem, k.stem));
}

bool is_dialgebra_iso(const DialgebraHom& h) {
  return is_monic(h.stem) && is_epic(h.stem);
}

DialgebraHom invert_hom(const DialgebraHom& h) {
  return make_hom(h.cod, h.dom, invert(h.stem));
}

std::vector<DialgebraHom> dialgebra_hom_set(const Dialgebra& d1,
                                            const Dialgebra& d2,
                                            const Budget& bud) {
  require_profile(d1, d2, "hom endpoints");
  std::vector<DialgebraHom> out;
  for (ChuTransform& stem : hom_set(d1.carrier, d2.carrier, bud))
    if (square_commutes(d1, d2, stem))
      out.push_back({d1, d2, std::move(stem)});
  return out;
}

bool is_section(const DialgebraHom& h, const Budget& bud) {
  DialgebraHom unit = identity_hom(h.dom);
  for (const DialgebraHom& r : dialgebra_hom_set(h.cod, h.dom, bud))
    if (compose_hom(h, r) == unit) return true;
  return false;
}

bool is_retraction(const DialgebraHom& h, const Budget& bud) {
  DialgebraHom unit = identity_hom(h.cod);
  for (const DialgebraHom& s : dialgebra_hom_set(h.cod, h.dom, bud))
    if (compose_hom(s, h) == unit) return true;
  return false;
}

Relation make_relation(ChuTransform leg1, ChuTransform leg2) {
  ChuTransform phi = pairing(leg1, leg2);
  if (!is_monic(phi)) throw RelationNotMonic("relation pairing");
  ChuSpace object = leg1.dom;
  return {std::move(object), std::move(leg1), std::move(leg2),
          std::move(phi)};
}

Relation graph_arrow(const ChuTransform& f) {
  return make_relation(identity_transform(f.dom), f);
}

bool check_graph_equalizer(const ChuTransform& f, const Budget& bud) {
  Relation gr = graph_arrow(f);
  Product w = with_(f.dom, f.cod);
  ChuTransform u = compose(w.p1, f);
  const ChuTransform& v = w.p2;
  if (!(compose(gr.phi, u) == compose(gr.phi, v))) return false;
  Equalized e = equalizer(u, v);
  for (const ChuTransform& m : hom_set(gr.object, e.space, bud))
    if (compose(m, e.arrow) == gr.phi) return is_monic(m) && is_epic(m);
  return false;
}

bool is_bisimulation(const Relation& rel, const ChuTransform& rho,
                     const Dialgebra& da, const Dialgebra& db) {
  require_profile(da, db, "bisimulation endpoints");
  if (!(rel.leg1.cod == da.carrier) || !(rel.leg2.cod == db.carrier))
    throw ShapeMismatch("relation legs");
  if (!(rho.dom == apply_ob(da.f, rel.object)) ||
      !(rho.cod == apply_ob(da.g, rel.object)))
    throw ShapeMismatch("bisimulation structure map");
  Dialgebra dr{da.f, da.g, rel.object, rho};
  return square_commutes(dr, da, rel.leg1) &&
         square_commutes(dr, db, rel.leg2);
}

HomGraphCheck check_hom_iff_graph(const ChuTransform& stem,
                                  const Dialgebra& da, const Dialgebra& db,
                                  const Budget& bud) {
  require_profile(da, db, "hom-graph endpoints");
  require_stem_shape(da, db, stem, "hom-graph stem");
  HomGraphCheck out;
  out.is_hom = square_commutes(da, db, stem);
  Relation gr = graph_arrow(stem);
  ChuSpace fr = apply_ob(da.f, gr.object);
  ChuSpace gr_ = apply_ob(da.g, gr.object);
  for (const ChuTransform& rho : hom_set(fr, gr_, bud))
    if (is_bisimulation(gr, rho, da, db)) {
      out.graph_bisim_exists = true;
      break;
    }
  return out;
}

DialgebraProduct product_dialgebra(const Dialgebra& d1, const Dialgebra& d2,
                                   const Budget&) {
  require_profile(d1, d2, "product factors");
  Product w = with_(d1.carrier, d2.carrier);
  ChuTransform cmp = pairing(apply_mor(d1.g, w.p1), apply_mor(d1.g, w.p2));
  if (!(is_monic(cmp) && is_epic(cmp)))
    throw NotPreserved("second profile functor on binary products");
  ChuTransform cone = pairing(compose(apply_mor(d1.f, w.p1), d1.alpha),
                              compose(apply_mor(d1.f, w.p2), d2.alpha));
  ChuTransform lambda = compose(cone, invert(cmp));
  Dialgebra object = make_dialgebra(d1.f, d1.g, w.space, std::move(lambda));
  return {object, make_hom(object, d1, w.p1), make_hom(object, d2, w.p2)};
}

DialgebraCoproduct coproduct_dialgebra(const Dialgebra& d1,
                                       const Dialgebra& d2, const Budget&) {
  require_profile(d1, d2, "coproduct factors");
  Coproduct p = plus(d1.carrier, d2.carrier);
  ChuTransform cmp = copairing(apply_mor(d1.f, p.i1), apply_mor(d1.f, p.i2));
  if (!(is_monic(cmp) && is_epic(cmp)))
    throw NotPreserved("first profile functor on binary coproducts");
  ChuTransform cone = copairing(compose(d1.alpha, apply_mor(d1.g, p.i1)),
                                compose(d2.alpha, apply_mor(d1.g, p.i2)));
  ChuTransform lambda = compose(invert(cmp), cone);
  Dialgebra object = make_dialgebra(d1.f, d1.g, p.space, std::move(lambda));
  return {object, make_hom(d1, object, p.i1), make_hom(d2, object, p.i2)};
}

Bisimulation pullback_bisimulation(const DialgebraHom& h1,
                                   const DialgebraHom& h2, const Budget& bud) {
  if (!(h1.cod == h2.cod)) throw ShapeMismatch("pullback legs codomain");
  const Dialgebra& da = h1.dom;
  const Dialgebra& db = h2.dom;
  PullbackResult pb = pullback(h1.stem, h2.stem);
  PullbackResult gpb = pullback(apply_mor(da.g, h1.stem),
                                apply_mor(da.g, h2.stem));
  std::optional<ChuTransform> cmp =
      find_mediator(apply_ob(da.g, pb.space), gpb, apply_mor(da.g, pb.p1),
                    apply_mor(da.g, pb.p2), bud);
  if (!cmp || !is_monic(*cmp) || !is_epic(*cmp))
    throw NotPreserved("second profile functor on this pullback");
  std::optional<ChuTransform> cone = find_mediator(
      apply_ob(da.f, pb.space), gpb,
      compose(apply_mor(da.f, pb.p1), da.alpha),
      compose(apply_mor(da.f, pb.p2), db.alpha), bud);
  if (!cone) throw NotPreserved("no mediating cone into the pullback");
  ChuTransform rho = compose(*cone, invert(*cmp));
  Relation rel = make_relation(pb.p1, pb.p2);
  // validates both legs as homs out of <pullback, rho>
  Dialgebra dr = make_dialgebra(da.f, da.g, rel.object, rho);
  make_hom(dr, da, rel.leg1);
  make_hom(dr, db, rel.leg2);
  return {std::move(rel), std::move(rho)};
}

TildeDialgebra tilde_dialgebra(const Dialgebra& d) {
  return {d.carrier, dual_transform(d.alpha)};
}

bool check_tilde_correspondence(const ChuTransform& stem, const Dialgebra& da,
                                const Dialgebra& db) {
  require_profile(da, db, "tilde correspondence endpoints");
  require_stem_shape(da, db, stem, "tilde correspondence stem");
  bool plain = square_commutes(da, db, stem);
  TildeDialgebra ta = tilde_dialgebra(da);
  TildeDialgebra tb = tilde_dialgebra(db);
  bool tilded =
      compose(tb.structure, dual_transform(apply_mor(da.f, stem))) ==
      compose(dual_transform(apply_mor(da.g, stem)), ta.structure);
  return plain == tilded;
}

}  // namespace chu
