#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "chu/dialgebra.hpp"
#include "fixtures.hpp"

using namespace chu;

namespace {

const Budget bud{};

// I -> sp picking one carrier row; backward reads the row off the matrix.
ChuTransform point(const ChuSpace& sp, const Element& row) {
  ChuSpace i = fx::unit_i();
  FinMap fwd = make_fin_map(i.carrier, sp.carrier, {{atom("*"), row}});
  FinMap bwd = make_fin_map_by(
      sp.cocarrier, i.cocarrier,
      [&](const Element& y) { return sp.at(row, y); });
  return make_transform(i, sp, fwd, bwd);
}

// sp -> bot evaluating one cocarrier column.
ChuTransform col(const ChuSpace& sp, const Element& x) {
  ChuSpace b = fx::unit_bot();
  FinMap fwd = make_fin_map_by(
      sp.carrier, b.carrier, [&](const Element& c) { return sp.at(c, x); });
  FinMap bwd = make_fin_map(b.cocarrier, sp.cocarrier, {{atom("*"), x}});
  return make_transform(sp, b, fwd, bwd);
}

// The two transforms sier -> space_n (forward constant at one row).
ChuTransform sier_to_n(const char* row, const char* x_img, const char* y_img) {
  ChuSpace s = fx::sier(), n = fx::space_n();
  FinMap fwd = make_fin_map_by(
      s.carrier, n.carrier, [&](const Element&) { return atom(row); });
  FinMap bwd = make_fin_map(n.cocarrier, s.cocarrier,
                            {{atom("x"), atom(x_img)}, {atom("y"), atom(y_img)}});
  return make_transform(s, n, fwd, bwd);
}

// The unique transform sier -> I.
ChuTransform sier_to_i() {
  ChuSpace s = fx::sier(), i = fx::unit_i();
  FinMap fwd = make_fin_map_by(s.carrier, i.carrier,
                               [](const Element&) { return atom("*"); });
  FinMap bwd = make_fin_map(i.cocarrier, s.cocarrier,
                            {{fx::g0(), atom("u")}, {fx::g1(), atom("w")}});
  return make_transform(s, i, fwd, bwd);
}

// The unique transform out of the initial space.
ChuTransform zero_into(const ChuSpace& sp) {
  ChuSpace z = fx::zero_sp();
  FinMap fwd = make_fin_map(z.carrier, sp.carrier, {});
  FinMap bwd = make_fin_map_by(sp.cocarrier, z.cocarrier,
                               [](const Element&) { return atom("*"); });
  return make_transform(z, sp, fwd, bwd);
}

Dialgebra endo(const ChuSpace& sp, ChuTransform alpha) {
  return make_dialgebra(desc_id(), desc_id(), sp, std::move(alpha));
}

Dialgebra idd(const ChuSpace& sp) {
  return endo(sp, identity_transform(sp));
}

Dialgebra pointed(const ChuSpace& sp, ChuTransform pt) {
  return make_dialgebra(desc_const(fx::unit_i()), desc_id(), sp,
                        std::move(pt));
}

Dialgebra to_bot(const ChuSpace& sp, ChuTransform alpha) {
  return make_dialgebra(desc_id(), desc_const(fx::unit_bot()), sp,
                        std::move(alpha));
}

}  // namespace

TEST_CASE("dialgebra construction validates shape and variance") {
  ChuSpace s = fx::sier();
  Dialgebra dp = pointed(s, point(s, atom("a")));
  CHECK(dp.carrier == s);
  CHECK(dp.alpha.dom == fx::unit_i());
  CHECK_NOTHROW(idd(s));

  // a structure map into the one-column uplifting exists; found by search
  FunctorDescriptor up = desc_uplift2(set_id(), fx::g0());
  std::vector<ChuTransform> alphas = hom_set(s, apply_ob(up, s), bud);
  CHECK(alphas.size() == 4);
  CHECK_NOTHROW(make_dialgebra(desc_id(), up, s, alphas.front()));

  CHECK_THROWS_AS(
      make_dialgebra(desc_tilde(desc_id()), desc_id(), s,
                     identity_transform(s)),
      VarianceError);
  CHECK_THROWS_AS(
      make_dialgebra(desc_id(), desc_tilde(desc_id()), s,
                     identity_transform(s)),
      VarianceError);
  CHECK_THROWS_AS(make_dialgebra(desc_id(), desc_id(), s, point(s, atom("a"))),
                  ShapeMismatch);
}

TEST_CASE("hom validation and the category structure") {
  ChuSpace s = fx::sier(), n = fx::space_n(), b = fx::unit_bot();
  Dialgebra ds = idd(s);
  CHECK_NOTHROW(make_hom(ds, ds, identity_transform(s)));
  CHECK_NOTHROW(make_hom(ds, ds, fx::const_a()));
  CHECK(identity_hom(ds).stem == identity_transform(s));

  // between pointed spaces a stem is a hom exactly when it maps the point
  // of the domain to the point of the codomain
  Dialgebra da = pointed(s, point(s, atom("a")));
  Dialgebra db = pointed(n, point(n, atom("a")));
  ChuTransform good = sier_to_n("a", "u", "w");
  ChuTransform bad = sier_to_n("b", "w", "u");
  CHECK_NOTHROW(make_hom(da, db, good));
  CHECK_THROWS_AS(make_hom(da, db, bad), SquareViolated);
  CHECK_NOTHROW(make_hom(da, pointed(n, point(n, atom("b"))), bad));

  Dialgebra dbot = pointed(b, point(b, fx::g0()));
  DialgebraHom h1 = make_hom(da, db, good);
  DialgebraHom h2 = make_hom(db, dbot, col(n, atom("x")));
  DialgebraHom c = compose_hom(h1, h2);
  CHECK(c.dom == da);
  CHECK(c.cod == dbot);
  CHECK(c.stem == compose(good, col(n, atom("x"))));
  CHECK_THROWS_AS(compose_hom(h2, h1), NotComposable);

  CHECK_THROWS_AS(make_hom(ds, da, identity_transform(s)), ProfileMismatch);
  CHECK_THROWS_AS(make_hom(idd(n), idd(n), fx::const_a()), ShapeMismatch);
}

TEST_CASE("isos, inversion, sections and retractions") {
  Dialgebra dn = idd(fx::space_n());
  DialgebraHom sw = make_hom(dn, dn, fx::n_swap());
  CHECK(is_dialgebra_iso(sw));
  CHECK(invert_hom(sw) == sw);
  CHECK(invert_hom(identity_hom(dn)) == identity_hom(dn));

  Dialgebra ds = idd(fx::sier());
  DialgebraHom ca = make_hom(ds, ds, fx::const_a());
  CHECK_FALSE(is_dialgebra_iso(ca));
  CHECK_THROWS_AS(invert_hom(ca), NotBijective);

  CHECK(is_section(sw, bud));
  CHECK(is_retraction(sw, bud));
  CHECK_FALSE(is_section(ca, bud));
  CHECK_FALSE(is_retraction(ca, bud));

  // the point inclusion of a pointed space splits one way only
  ChuSpace s = fx::sier();
  Dialgebra dp = pointed(fx::unit_i(), identity_transform(fx::unit_i()));
  Dialgebra da = pointed(s, point(s, atom("a")));
  DialgebraHom inc = make_hom(dp, da, point(s, atom("a")));
  DialgebraHom ret = make_hom(da, dp, sier_to_i());
  CHECK(is_section(inc, bud));
  CHECK_FALSE(is_retraction(inc, bud));
  CHECK(is_retraction(ret, bud));
  CHECK_FALSE(is_section(ret, bud));
  CHECK(compose_hom(inc, ret) == identity_hom(dp));
}

TEST_CASE("hom sets over a fixed profile") {
  ChuSpace s = fx::sier();
  Dialgebra ds = idd(s);
  CHECK(dialgebra_hom_set(ds, ds, bud).size() == 3);

  Dialgebra da = pointed(s, point(s, atom("a")));
  std::vector<DialgebraHom> pe = dialgebra_hom_set(da, da, bud);
  CHECK(pe.size() == 2);
  bool saw_id = false, saw_const = false;
  for (const DialgebraHom& h : pe) {
    if (h.stem == identity_transform(s)) saw_id = true;
    if (h.stem == fx::const_a()) saw_const = true;
  }
  CHECK(saw_id);
  CHECK(saw_const);

  Dialgebra dca = endo(s, fx::const_a());
  std::vector<DialgebraHom> mixed = dialgebra_hom_set(ds, dca, bud);
  CHECK(mixed.size() == 1);
  CHECK(mixed.front().stem == fx::const_a());

  // each point of the codomain is reached by exactly one pointed stem
  ChuSpace n = fx::space_n();
  CHECK(dialgebra_hom_set(da, pointed(n, point(n, atom("a"))), bud).size() ==
        1);
  CHECK(dialgebra_hom_set(da, pointed(n, point(n, atom("b"))), bud).size() ==
        1);

  CHECK_THROWS_AS(dialgebra_hom_set(ds, da, bud), ProfileMismatch);
}

TEST_CASE("graph arrows are monic relations") {
  ChuSpace s = fx::sier();
  Relation diag = graph_arrow(identity_transform(s));
  CHECK(diag.object == s);
  CHECK(diag.leg1 == diag.leg2);
  CHECK(is_monic(diag.phi));

  Relation gr = graph_arrow(fx::const_a());
  CHECK(gr.leg1 == identity_transform(s));
  CHECK(gr.leg2 == fx::const_a());
  CHECK(gr.phi.forward(atom("a")) == pair(atom("a"), atom("a")));
  CHECK(gr.phi.forward(atom("b")) == pair(atom("b"), atom("a")));
  for (const Element& y : s.cocarrier.elems)
    CHECK(gr.phi.backward(inl(y)) == y);
  CHECK(gr.phi.backward(inr(atom("v"))) == atom("u"));
  CHECK(is_monic(gr.phi));

  CHECK_THROWS_AS(make_relation(fx::const_a(), fx::const_a()),
                  RelationNotMonic);
}

TEST_CASE("graph arrows present their domain as an equalizer") {
  CHECK(check_graph_equalizer(identity_transform(fx::sier()), bud));
  CHECK(check_graph_equalizer(fx::const_a(), bud));
  CHECK(check_graph_equalizer(fx::n_swap(), bud));
  CHECK(check_graph_equalizer(point(fx::sier(), atom("a")), bud));
  CHECK(check_graph_equalizer(col(fx::sier(), atom("u")), bud));
}

TEST_CASE("bisimulations") {
  ChuSpace s = fx::sier();
  Dialgebra ds = idd(s);
  Relation diag = graph_arrow(identity_transform(s));
  CHECK(is_bisimulation(diag, identity_transform(s), ds, ds));

  // graph of a stem that is not a hom fails with rho = alpha
  Dialgebra dca = endo(s, fx::const_a());
  CHECK_FALSE(is_bisimulation(diag, identity_transform(s), ds, dca));

  // empty relation: both squares hold vacuously
  ChuTransform leg = zero_into(s);
  Relation empty_rel = make_relation(leg, leg);
  CHECK(is_bisimulation(empty_rel, identity_transform(fx::zero_sp()), ds, ds));

  CHECK_THROWS_AS(is_bisimulation(diag, point(s, atom("a")), ds, ds),
                  ShapeMismatch);
  CHECK_THROWS_AS(
      is_bisimulation(diag, identity_transform(s), idd(fx::space_n()),
                      idd(fx::space_n())),
      ShapeMismatch);
  CHECK_THROWS_AS(
      is_bisimulation(diag, identity_transform(s), ds,
                      pointed(s, point(s, atom("a")))),
      ProfileMismatch);
}

TEST_CASE("a stem is a hom exactly when its graph carries a bisimulation") {
  ChuSpace s = fx::sier(), n = fx::space_n();
  Dialgebra ds = idd(s);
  HomGraphCheck both = check_hom_iff_graph(identity_transform(s), ds, ds, bud);
  CHECK(both.is_hom);
  CHECK(both.graph_bisim_exists);
  HomGraphCheck ca = check_hom_iff_graph(fx::const_a(), ds, ds, bud);
  CHECK(ca.is_hom);
  CHECK(ca.graph_bisim_exists);
  HomGraphCheck neither =
      check_hom_iff_graph(identity_transform(s), ds, endo(s, fx::const_a()), bud);
  CHECK_FALSE(neither.is_hom);
  CHECK_FALSE(neither.graph_bisim_exists);

  // exhaustive over endo structure maps on sier
  std::vector<ChuTransform> endos = hom_set(s, s, bud);
  int holds = 0, fails = 0;
  for (const ChuTransform& a1 : endos)
    for (const ChuTransform& a2 : endos)
      for (const ChuTransform& stem : endos) {
        HomGraphCheck out =
            check_hom_iff_graph(stem, endo(s, a1), endo(s, a2), bud);
        CHECK(out.is_hom == out.graph_bisim_exists);
        (out.is_hom ? holds : fails)++;
      }
  CHECK(holds > 0);
  CHECK(fails > 0);

  // and over pointed spaces
  Dialgebra da = pointed(s, point(s, atom("a")));
  for (const char* row : {"a", "b"})
    for (const ChuTransform& stem :
         {sier_to_n("a", "u", "w"), sier_to_n("b", "w", "u")}) {
      HomGraphCheck out =
          check_hom_iff_graph(stem, da, pointed(n, point(n, atom(row))), bud);
      CHECK(out.is_hom == out.graph_bisim_exists);
    }
}

TEST_CASE("binary products of dialgebras") {
  ChuSpace s = fx::sier(), n = fx::space_n();
  ChuTransform pa = point(s, atom("a")), pn = point(n, atom("a"));
  Dialgebra da = pointed(s, pa), db = pointed(n, pn);
  Product w = with_(s, n);

  DialgebraProduct prod = product_dialgebra(da, db, bud);
  CHECK(prod.object.carrier == w.space);
  CHECK(prod.object.alpha == pairing(pa, pn));
  CHECK(prod.p1.stem == w.p1);
  CHECK(prod.p2.stem == w.p2);

  // for every probe cone exactly one mediating hom exists
  for (const Dialgebra& probe :
       {pointed(fx::unit_i(), identity_transform(fx::unit_i())), da}) {
    for (const DialgebraHom& q1 : dialgebra_hom_set(probe, da, bud))
      for (const DialgebraHom& q2 : dialgebra_hom_set(probe, db, bud)) {
        int mediators = 0;
        for (const DialgebraHom& m :
             dialgebra_hom_set(probe, prod.object, bud))
          if (compose_hom(m, prod.p1) == q1 && compose_hom(m, prod.p2) == q2)
            ++mediators;
        CHECK(mediators == 1);
      }
  }

  // identity structure maps product to the identity on with_
  DialgebraProduct pid = product_dialgebra(idd(s), idd(n), bud);
  CHECK(pid.object.alpha == identity_transform(w.space));
  for (const DialgebraHom& q1 : dialgebra_hom_set(idd(fx::unit_i()), idd(s), bud))
    for (const DialgebraHom& q2 :
         dialgebra_hom_set(idd(fx::unit_i()), idd(n), bud)) {
      int mediators = 0;
      for (const DialgebraHom& m :
           dialgebra_hom_set(idd(fx::unit_i()), pid.object, bud))
        if (compose_hom(m, pid.p1) == q1 && compose_hom(m, pid.p2) == q2)
          ++mediators;
      CHECK(mediators == 1);
    }

  // a constant second component does not preserve binary products
  Dialgebra dc =
      make_dialgebra(desc_id(), desc_const(s), s, identity_transform(s));
  CHECK_THROWS_AS(product_dialgebra(dc, dc, bud), NotPreserved);
  CHECK_THROWS_AS(product_dialgebra(idd(s), da, bud), ProfileMismatch);
}

TEST_CASE("binary coproducts of dialgebras") {
  ChuSpace s = fx::sier(), n = fx::space_n();
  ChuTransform cu = col(s, atom("u")), cx = col(n, atom("x"));
  Dialgebra d1 = to_bot(s, cu), d2 = to_bot(n, cx);
  Coproduct p = plus(s, n);

  DialgebraCoproduct cop = coproduct_dialgebra(d1, d2, bud);
  CHECK(cop.object.carrier == p.space);
  CHECK(cop.object.alpha == copairing(cu, cx));
  CHECK(cop.i1.stem == p.i1);
  CHECK(cop.i2.stem == p.i2);

  Dialgebra q = to_bot(fx::unit_bot(), identity_transform(fx::unit_bot()));
  for (const DialgebraHom& r1 : dialgebra_hom_set(d1, q, bud))
    for (const DialgebraHom& r2 : dialgebra_hom_set(d2, q, bud)) {
      int mediators = 0;
      for (const DialgebraHom& m : dialgebra_hom_set(cop.object, q, bud))
        if (compose_hom(cop.i1, m) == r1 && compose_hom(cop.i2, m) == r2)
          ++mediators;
      CHECK(mediators == 1);
    }

  DialgebraCoproduct cid = coproduct_dialgebra(idd(s), idd(n), bud);
  CHECK(cid.object.alpha == identity_transform(p.space));
  Dialgebra qn = idd(n);
  for (const DialgebraHom& r1 : dialgebra_hom_set(idd(s), qn, bud))
    for (const DialgebraHom& r2 : dialgebra_hom_set(idd(n), qn, bud)) {
      int mediators = 0;
      for (const DialgebraHom& m : dialgebra_hom_set(cid.object, qn, bud))
        if (compose_hom(cid.i1, m) == r1 && compose_hom(cid.i2, m) == r2)
          ++mediators;
      CHECK(mediators == 1);
    }

  // a constant first component does not preserve binary coproducts
  ChuTransform pa = point(s, atom("a"));
  Dialgebra da = pointed(s, pa), db = pointed(n, point(n, atom("a")));
  CHECK_THROWS_AS(coproduct_dialgebra(da, db, bud), NotPreserved);
  CHECK_THROWS_AS(coproduct_dialgebra(d1, da, bud), ProfileMismatch);
}

TEST_CASE("pullbacks of homs yield bisimulations") {
  ChuSpace s = fx::sier(), n = fx::space_n(), b = fx::unit_bot();
  Dialgebra ds = idd(s);

  Bisimulation diag =
      pullback_bisimulation(identity_hom(ds), identity_hom(ds), bud);
  CHECK(diag.relation.leg1 == diag.relation.leg2);
  CHECK(diag.relation.object.carrier.size() == 2);
  CHECK(is_bisimulation(diag.relation, diag.rho, ds, ds));

  // pointed spaces over a common codomain: the point-compatible pairs
  Dialgebra da = pointed(s, point(s, atom("a")));
  Dialgebra db = pointed(n, point(n, atom("a")));
  Dialgebra dc = pointed(b, point(b, fx::g0()));
  DialgebraHom h1 = make_hom(da, dc, col(s, atom("u")));
  DialgebraHom h2 = make_hom(db, dc, col(n, atom("x")));
  Bisimulation bis = pullback_bisimulation(h1, h2, bud);
  CHECK(bis.relation.object.carrier ==
        make_fin_set({pair(atom("a"), atom("a")), pair(atom("b"), atom("a"))}));
  CHECK(bis.rho.forward(atom("*")) == pair(atom("a"), atom("a")));
  CHECK(is_bisimulation(bis.relation, bis.rho, da, db));

  // a constant second component preserves pullbacks, so this succeeds
  Dialgebra e1 = to_bot(s, col(s, atom("u")));
  Bisimulation cst =
      pullback_bisimulation(identity_hom(e1), identity_hom(e1), bud);
  CHECK(is_bisimulation(cst.relation, cst.rho, e1, e1));

  CHECK_THROWS_AS(pullback_bisimulation(h1, identity_hom(da), bud),
                  ShapeMismatch);  // legs do not share a codomain
}

TEST_CASE("monic stems cancel on the left") {
  ChuSpace s = fx::sier(), n = fx::space_n();
  Dialgebra dn = idd(n);
  DialgebraHom h = make_hom(dn, dn, fx::n_swap());
  CHECK(is_monic(h.stem));
  for (const Dialgebra& probe : {idd(s), idd(n), idd(fx::unit_i())}) {
    std::vector<DialgebraHom> in = dialgebra_hom_set(probe, dn, bud);
    for (const DialgebraHom& u : in)
      for (const DialgebraHom& v : in)
        if (compose_hom(u, h) == compose_hom(v, h)) CHECK(u == v);
  }

  // a non-monic stem fails cancellation
  Dialgebra ds = idd(s);
  DialgebraHom ca = make_hom(ds, ds, fx::const_a());
  DialgebraHom u = identity_hom(ds);
  CHECK(compose_hom(u, ca) == compose_hom(ca, ca));
  CHECK_FALSE(u == ca);
}

TEST_CASE("tilde duality") {
  ChuSpace s = fx::sier();
  Dialgebra ds = idd(s);
  TildeDialgebra td = tilde_dialgebra(ds);
  CHECK(td.carrier == s);
  CHECK(td.structure == identity_transform(dual(s)));

  ChuTransform pa = point(s, atom("a"));
  TildeDialgebra tp = tilde_dialgebra(pointed(s, pa));
  CHECK(tp.structure == dual_transform(pa));
  CHECK(tp.structure.dom == dual(s));
  CHECK(tp.structure.cod == dual(fx::unit_i()));
  CHECK(dual_transform(tp.structure) == pa);

  // correspondence holds whether or not the square commutes
  CHECK(check_tilde_correspondence(identity_transform(s), ds, ds));
  CHECK(check_tilde_correspondence(fx::const_a(), ds, ds));
  CHECK(check_tilde_correspondence(identity_transform(s), ds,
                                   endo(s, fx::const_a())));
  std::vector<ChuTransform> endos = hom_set(s, s, bud);
  for (const ChuTransform& a1 : endos)
    for (const ChuTransform& a2 : endos)
      for (const ChuTransform& stem : endos)
        CHECK(check_tilde_correspondence(stem, endo(s, a1), endo(s, a2)));
  ChuSpace n = fx::space_n();
  Dialgebra da = pointed(s, point(s, atom("a")));
  for (const char* row : {"a", "b"})
    for (const ChuTransform& stem :
         {sier_to_n("a", "u", "w"), sier_to_n("b", "w", "u")})
      CHECK(check_tilde_correspondence(stem, da,
                                       pointed(n, point(n, atom(row)))));

  CHECK_THROWS_AS(check_tilde_correspondence(fx::n_swap(), ds, ds),
                  ShapeMismatch);
  CHECK_THROWS_AS(
      check_tilde_correspondence(identity_transform(s), ds,
                                 pointed(s, point(s, atom("a")))),
      ProfileMismatch);
}
