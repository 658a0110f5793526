#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "chu/connectives.hpp"
#include "chu/dlc.hpp"
#include "fixtures.hpp"

using namespace chu;

namespace {

const Budget bud{};

Profile all_id() { return {desc_id(), desc_id(), desc_id(), desc_id()}; }

Dialgebra idd(const ChuSpace& sp) {
  return make_dialgebra(desc_id(), desc_id(), sp, identity_transform(sp));
}

FinSet sigma_m() { return make_fin_set({atom("m")}); }

// N on top, I on the bottom, one index m, left-tagged entries.
ZeroCell cell_ni(const Element& pos, const Element& neg) {
  Profile pr = all_id();
  ChuSpace n = fx::space_n(), i = fx::unit_i();
  FinSet sg = sigma_m();
  SuperMatrix sm{sg,
                 make_fin_map_by(sg, positive_union(pr, n, i).set,
                                 [&](const Element&) { return inl(pos); }),
                 make_fin_map_by(sg, negative_union(pr, n, i).set,
                                 [&](const Element&) { return inl(neg); })};
  return make_zero_cell(pr, idd(n), idd(i), sm);
}

ZeroCell cell_ni_plain() {
  Profile pr = all_id();
  ChuSpace n = fx::space_n(), i = fx::unit_i();
  return make_zero_cell(pr, idd(n), idd(i), empty_super_matrix(pr, n, i));
}

Profile wrapped_profile() {
  FunctorDescriptor d = desc_with(fx::top_sp());
  return {d, d, d, d};
}

Dialgebra wrapped_dialgebra(const ChuSpace& sp) {
  FunctorDescriptor d = desc_with(fx::top_sp());
  return make_dialgebra(d, d, sp, identity_transform(apply_ob(d, sp)));
}

// sp -> sp & top: the identity paired with the unique map into top.
ChuTransform comparison(const ChuSpace& sp) {
  ChuSpace t = fx::top_sp();
  FinMap fwd = make_fin_map_by(sp.carrier, t.carrier,
                               [](const Element&) { return atom("*"); });
  FinMap bwd = make_fin_map(t.cocarrier, sp.cocarrier, {});
  return pairing(identity_transform(sp), make_transform(sp, t, fwd, bwd));
}

// The N/I cell seen through the wrap: entries follow the comparison images.
ZeroCell cell_ni_wrapped(const Element& pos, const Element& neg) {
  Profile pr = wrapped_profile();
  ChuSpace n = fx::space_n(), i = fx::unit_i();
  FinSet sg = sigma_m();
  SuperMatrix sm{
      sg,
      make_fin_map_by(sg, positive_union(pr, n, i).set,
                      [&](const Element&) { return inl(pair(pos, atom("*"))); }),
      make_fin_map_by(sg, negative_union(pr, n, i).set,
                      [&](const Element&) { return inl(inl(neg)); })};
  return make_zero_cell(pr, wrapped_dialgebra(n), wrapped_dialgebra(i), sm);
}

ZeroCell cell_ni_wrapped_plain() {
  Profile pr = wrapped_profile();
  ChuSpace n = fx::space_n(), i = fx::unit_i();
  return make_zero_cell(pr, wrapped_dialgebra(n), wrapped_dialgebra(i),
                        empty_super_matrix(pr, n, i));
}

HorizontalCell swap_cell(const ZeroCell& a, const ZeroCell& b) {
  return make_horizontal(
      a, b, DialgebraHom{a.top, b.top, fx::n_swap()},
      DialgebraHom{b.bottom, a.bottom, identity_transform(fx::unit_i())});
}

VerticalCell comparison_vertical(const ZeroCell& base, const ZeroCell& wrap) {
  return make_vertical(base, wrap, comparison(fx::space_n()),
                       comparison(fx::space_n()), comparison(fx::unit_i()),
                       comparison(fx::unit_i()));
}

// One-cell dialgebra cells over I / bot used by the product tests.
ZeroCell unit_cell(const ChuSpace& sp) {
  Profile pr = all_id();
  return make_zero_cell(pr, idd(sp), idd(sp), empty_super_matrix(pr, sp, sp));
}

}  // namespace

TEST_CASE("zero cells, unions and the counterexample pair") {
  Profile pr = all_id();
  ChuSpace n = fx::space_n(), i = fx::unit_i();

  DisjointUnion pu = positive_union(pr, n, i);
  CHECK(pu.set.size() == 3);  // two rows of N, the point of I
  CHECK(pu.set.contains(inl(atom("a"))));
  CHECK(pu.set.contains(inr(atom("*"))));
  DisjointUnion nu = negative_union(pr, n, i);
  CHECK(nu.set.size() == 4);  // x, y and the two columns of I

  SuperMatrix esm = empty_super_matrix(pr, n, i);
  CHECK(esm.sigma.empty());
  CHECK(esm.s_pos.cod == pu.set);
  CHECK(esm.s_neg.cod == nu.set);

  ZeroCell c = cell_ni(atom("a"), atom("x"));
  CHECK(c.sm.s_pos(atom("m")) == inl(atom("a")));
  CHECK(c.top.carrier == n);

  auto [p1, p2] = counterexample_fixture(fx::gamma2());
  CHECK(p1.profile == p2.profile);
  CHECK(p1.sm.sigma == sigma_m());
  CHECK(is_inl(p1.sm.s_pos(atom("m"))));
  CHECK(is_inr(p2.sm.s_pos(atom("m"))));
  CHECK(p1.sm.s_neg == p2.sm.s_neg);

  SUBCASE("rows must match the profile") {
    CHECK_THROWS_AS(
        make_zero_cell(wrapped_profile(), idd(n), idd(i), esm),
        ProfileShapeMismatch);
  }
  SUBCASE("structure map endpoints must match the profile action") {
    Dialgebra bad{desc_id(), desc_id(), n, identity_transform(i)};
    CHECK_THROWS_AS(make_zero_cell(pr, bad, idd(i), esm),
                    ProfileShapeMismatch);
  }
  SUBCASE("carriers live over one alphabet") {
    ChuSpace i1 = unit_i(make_alphabet({"0"}));
    CHECK_THROWS_AS(make_zero_cell(pr, idd(n), idd(i1),
                                   empty_super_matrix(pr, n, i1)),
                    GammaMismatch);
  }
  SUBCASE("matrix rows must be total on the index set") {
    SuperMatrix part{sigma_m(), make_fin_map(FinSet{}, pu.set, {}),
                     make_fin_map(FinSet{}, nu.set, {})};
    CHECK_THROWS_AS(make_zero_cell(pr, idd(n), idd(i), part),
                    SuperMatrixNotTotal);
  }
  SUBCASE("matrix codomains are the tagged unions, bit for bit") {
    SuperMatrix off{sigma_m(),
                    make_fin_map_by(sigma_m(), nu.set,
                                    [](const Element&) { return inl(atom("x")); }),
                    make_fin_map_by(sigma_m(), nu.set,
                                    [](const Element&) { return inl(atom("x")); })};
    CHECK_THROWS_AS(make_zero_cell(pr, idd(n), idd(i), off), TagOutsideUnion);
  }
}

TEST_CASE("horizontal cells, their identities and composition") {
  ZeroCell p1m = cell_ni(atom("a"), atom("x"));
  ZeroCell q1m = cell_ni(atom("b"), atom("y"));

  HorizontalCell hs = swap_cell(p1m, q1m);
  CHECK(hs.f.stem == fx::n_swap());

  HorizontalCell ih = identity_horizontal(p1m);
  CHECK(ih.src == p1m);
  CHECK(ih.f.stem == identity_transform(fx::space_n()));

  HorizontalCell back = swap_cell(q1m, p1m);
  CHECK(compose_horizontal(hs, back) == identity_horizontal(p1m));
  CHECK(compose_horizontal(back, hs) == identity_horizontal(q1m));
  CHECK_THROWS_AS(compose_horizontal(hs, hs), NotComposable);

  SUBCASE("the swap is the only cell between the two matrices") {
    std::vector<HorizontalCell> cells = horizontal_cells(p1m, q1m, bud);
    REQUIRE(cells.size() == 1);
    CHECK(cells.front() == hs);
    CHECK(horizontal_cells(p1m, p1m, bud).size() == 1);
    CHECK(horizontal_cells(cell_ni_plain(), cell_ni_plain(), bud).size() == 2);
  }
  SUBCASE("positive matching rejects the identity stem") {
    DialgebraHom f{p1m.top, q1m.top, identity_transform(fx::space_n())};
    DialgebraHom g{q1m.bottom, p1m.bottom,
                   identity_transform(fx::unit_i())};
    CHECK_THROWS_AS(make_horizontal(p1m, q1m, f, g), PHSViolated);
  }
  SUBCASE("negative matching rejects a cell that only fixes the rows") {
    ZeroCell q_pos_only = cell_ni(atom("b"), atom("x"));
    DialgebraHom f{p1m.top, q_pos_only.top, fx::n_swap()};
    DialgebraHom g{q_pos_only.bottom, p1m.bottom,
                   identity_transform(fx::unit_i())};
    CHECK_THROWS_AS(make_horizontal(p1m, q_pos_only, f, g), NHSViolated);
    CHECK(horizontal_cells(p1m, q_pos_only, bud).empty());
  }
  SUBCASE("profile, index and shape guards") {
    CHECK_THROWS_AS(make_horizontal(p1m, cell_ni_wrapped(atom("a"), atom("x")),
                                    hs.f, hs.g),
                    ProfileMismatch);
    CHECK_THROWS_AS(make_horizontal(p1m, cell_ni_plain(), hs.f, hs.g),
                    SigmaMismatch);
    DialgebraHom bad_stem{p1m.top, q1m.top,
                          identity_transform(fx::unit_i())};
    CHECK_THROWS_AS(make_horizontal(p1m, q1m, bad_stem, hs.g), ShapeMismatch);
  }
  SUBCASE("the stem must commute with the structure maps") {
    Profile pr = all_id();
    ChuSpace s = fx::sier(), i = fx::unit_i();
    ZeroCell cs1 = make_zero_cell(
        pr, make_dialgebra(desc_id(), desc_id(), s, fx::const_a()), idd(i),
        empty_super_matrix(pr, s, i));
    ZeroCell cs2 = make_zero_cell(pr, idd(s), idd(i),
                                  empty_super_matrix(pr, s, i));
    DialgebraHom f{cs1.top, cs2.top, identity_transform(s)};
    DialgebraHom g{cs2.bottom, cs1.bottom, identity_transform(i)};
    CHECK_THROWS_AS(make_horizontal(cs1, cs2, f, g), SquareViolated);
  }
  SUBCASE("mixed-variance rows are rejected outright") {
    ChuSpace i = fx::unit_i();
    ChuSpace di = dual(i);
    ChuTransform t = make_transform(
        i, di, make_fin_map(i.carrier, di.carrier, {{atom("*"), fx::g0()}}),
        make_fin_map(di.cocarrier, i.cocarrier, {{atom("*"), fx::g0()}}));
    Profile mp{desc_id(), desc_tilde(desc_id()), desc_id(), desc_id()};
    Dialgebra mixed_top{desc_id(), desc_tilde(desc_id()), i, t};
    ZeroCell mixed = make_zero_cell(mp, mixed_top, idd(i),
                                    empty_super_matrix(mp, i, i));
    CHECK_THROWS_AS(identity_horizontal(mixed), VarianceError);
  }
}

TEST_CASE("vertical cells between matrices on shared carriers") {
  ZeroCell p1m = cell_ni(atom("a"), atom("x"));
  ZeroCell q1m = cell_ni(atom("b"), atom("y"));
  ZeroCell p1w = cell_ni_wrapped(atom("a"), atom("x"));

  VerticalCell v1c = comparison_vertical(p1m, p1w);
  CHECK(v1c.src == p1m);
  CHECK(v1c.dst == p1w);

  VerticalCell iv = identity_vertical(p1m);
  CHECK(compose_vertical(iv, v1c) == v1c);
  CHECK(compose_vertical(v1c, identity_vertical(p1w)) == v1c);
  CHECK_THROWS_AS(compose_vertical(v1c, v1c), NotComposable);

  SUBCASE("matrices may evolve along the components") {
    ChuTransform sw = fx::n_swap();
    ChuTransform idi = identity_transform(fx::unit_i());
    VerticalCell vs = make_vertical(p1m, q1m, sw, sw, idi, idi);
    VerticalCell vs_back = make_vertical(q1m, p1m, sw, sw, idi, idi);
    CHECK(compose_vertical(vs, vs_back) == identity_vertical(p1m));
  }
  SUBCASE("carrier, index and shape guards") {
    ZeroCell ic = unit_cell(fx::unit_i());
    CHECK_THROWS_AS(
        make_vertical(p1m, ic, v1c.mu, v1c.nu, v1c.theta, v1c.zeta),
        CarrierMismatch);
    CHECK_THROWS_AS(make_vertical(p1m, cell_ni_plain(), v1c.mu, v1c.nu,
                                  v1c.theta, v1c.zeta),
                    SigmaMismatch);
    ChuTransform idi = identity_transform(fx::unit_i());
    CHECK_THROWS_AS(make_vertical(p1m, p1m, idi, idi, idi, idi),
                    ShapeMismatch);
  }
  SUBCASE("the component squares must commute with the structure maps") {
    Profile pr = all_id();
    ChuSpace s = fx::sier(), i = fx::unit_i();
    ZeroCell cs1 = make_zero_cell(
        pr, make_dialgebra(desc_id(), desc_id(), s, fx::const_a()), idd(i),
        empty_super_matrix(pr, s, i));
    ZeroCell cs2 = make_zero_cell(pr, idd(s), idd(i),
                                  empty_super_matrix(pr, s, i));
    ChuTransform ids = identity_transform(s);
    ChuTransform idi = identity_transform(i);
    CHECK_THROWS_AS(make_vertical(cs1, cs2, ids, ids, idi, idi),
                    FluidSquareViolated);
  }
  SUBCASE("positive entries must push forward along mu") {
    ChuTransform idn = identity_transform(fx::space_n());
    ChuTransform idi = identity_transform(fx::unit_i());
    CHECK_THROWS_AS(make_vertical(p1m, q1m, idn, idn, idi, idi), PVSViolated);
  }
  SUBCASE("negative entries must pull back along nu") {
    ZeroCell neg_only = cell_ni(atom("a"), atom("y"));
    ChuTransform idn = identity_transform(fx::space_n());
    ChuTransform idi = identity_transform(fx::unit_i());
    CHECK_THROWS_AS(make_vertical(p1m, neg_only, idn, idn, idi, idi),
                    NVSViolated);
  }
}

TEST_CASE("cubicles compose in both directions and satisfy interchange") {
  ZeroCell p1m = cell_ni(atom("a"), atom("x"));
  ZeroCell q1m = cell_ni(atom("b"), atom("y"));
  ZeroCell p1w = cell_ni_wrapped(atom("a"), atom("x"));
  ZeroCell q1w = cell_ni_wrapped(atom("b"), atom("y"));

  HorizontalCell hs = swap_cell(p1m, q1m);
  HorizontalCell hs_back = swap_cell(q1m, p1m);
  ChuTransform idi = identity_transform(fx::unit_i());
  HorizontalCell hw = make_horizontal(
      p1w, q1w, DialgebraHom{p1w.top, q1w.top, fx::n_swap()},
      DialgebraHom{q1w.bottom, p1w.bottom, idi});
  HorizontalCell hw_back = make_horizontal(
      q1w, p1w, DialgebraHom{q1w.top, p1w.top, fx::n_swap()},
      DialgebraHom{p1w.bottom, q1w.bottom, idi});
  VerticalCell v1c = comparison_vertical(p1m, p1w);
  VerticalCell v2c = comparison_vertical(q1m, q1w);

  Cubicle c = make_cubicle(hs, v1c, v2c, hw);
  Cubicle d = make_cubicle(hs_back, v2c, v1c, hw_back);

  CHECK(hcompose_cubicles(c, d) == hidentity_cubicle(v1c));
  CHECK(hcompose_cubicles(d, c) == hidentity_cubicle(v2c));
  CHECK(vcompose_cubicles(c, videntity_cubicle(hw)) == c);
  CHECK(vcompose_cubicles(videntity_cubicle(hs), c) == c);
  CHECK(hcompose_cubicles(hidentity_cubicle(v1c), c) == c);
  CHECK(hcompose_cubicles(c, hidentity_cubicle(v2c)) == c);

  CHECK_THROWS_AS(hcompose_cubicles(c, c), NotComposable);
  CHECK_THROWS_AS(vcompose_cubicles(c, c), NotComposable);

  SUBCASE("interchange on a 2x2 grid") {
    Cubicle e = videntity_cubicle(hw);
    Cubicle f = videntity_cubicle(hw_back);
    CHECK(vcompose_cubicles(hcompose_cubicles(c, d),
                            hcompose_cubicles(e, f)) ==
          hcompose_cubicles(vcompose_cubicles(c, e),
                            vcompose_cubicles(d, f)));
  }
  SUBCASE("corners must agree") {
    CHECK_THROWS_AS(make_cubicle(hs, v1c, v1c, hw), BoundaryMismatch);
  }
  SUBCASE("all four naturality squares are enforced") {
    ZeroCell a1 = cell_ni_plain();
    ZeroCell a2 = cell_ni_wrapped_plain();
    VerticalCell u = comparison_vertical(a1, a2);
    HorizontalCell ha1 = make_horizontal(
        a1, a1, DialgebraHom{a1.top, a1.top, fx::n_swap()},
        DialgebraHom{a1.bottom, a1.bottom, idi});
    CHECK_THROWS_AS(make_cubicle(ha1, u, u, identity_horizontal(a2)),
                    ParallelogramViolated);
  }
}

TEST_CASE("horizontal dual: rows swap and matrix entries re-tag") {
  ZeroCell p1m = cell_ni(atom("a"), atom("x"));
  ZeroCell q1m = cell_ni(atom("b"), atom("y"));
  ZeroCell sp = sharp_zero(p1m);

  CHECK(sp.top == p1m.bottom);
  CHECK(sp.bottom == p1m.top);
  CHECK(sp.sm.s_pos(atom("m")) == inr(atom("a")));
  CHECK(sp.sm.s_neg(atom("m")) == inr(atom("x")));
  CHECK(sharp_zero(sp) == p1m);

  HorizontalCell hs = swap_cell(p1m, q1m);
  HorizontalCell sh = sharp_horizontal(hs);
  CHECK(sh.src == sharp_zero(q1m));
  CHECK(sh.dst == sharp_zero(p1m));
  CHECK(sh.f.stem == hs.g.stem);
  CHECK(sharp_horizontal(sh) == hs);
  CHECK(sharp_horizontal(identity_horizontal(p1m)) ==
        identity_horizontal(sp));

  VerticalCell v1c =
      comparison_vertical(p1m, cell_ni_wrapped(atom("a"), atom("x")));
  VerticalCell sv = sharp_vertical(v1c);
  CHECK(sv.src == sharp_zero(p1m));
  CHECK(sv.mu == v1c.theta);
  CHECK(sharp_vertical(sv) == v1c);
}

TEST_CASE("vertical dual: structure maps dualize and the halves swap") {
  ZeroCell p1m = cell_ni(atom("a"), atom("x"));
  ZeroCell st = star_zero(p1m);

  CHECK(st.profile.f == desc_tilde(desc_id()));
  CHECK(st.top.carrier == fx::space_n());
  CHECK(st.top.alpha == identity_transform(dual(fx::space_n())));
  CHECK(st.sm.s_pos == p1m.sm.s_neg);
  CHECK(st.sm.s_neg == p1m.sm.s_pos);
  CHECK(star_zero(st) == p1m);

  ZeroCell q1m = cell_ni(atom("b"), atom("y"));
  HorizontalCell hs = swap_cell(p1m, q1m);
  HorizontalCell sh = star_horizontal(hs);
  CHECK(sh.src == star_zero(p1m));
  CHECK(sh.dst == star_zero(q1m));
  CHECK(sh.f.stem == hs.f.stem);
  CHECK(star_horizontal(sh) == hs);

  VerticalCell v1c =
      comparison_vertical(p1m, cell_ni_wrapped(atom("a"), atom("x")));
  VerticalCell sv = star_vertical(v1c);
  CHECK(sv.src == star_zero(v1c.dst));
  CHECK(sv.dst == star_zero(v1c.src));
  CHECK(sv.mu == dual_transform(v1c.nu));
  CHECK(star_vertical(sv) == v1c);
  CHECK(star_vertical(identity_vertical(p1m)) == identity_vertical(st));

  SUBCASE("identity cells on a dualized cell still validate") {
    CHECK(identity_horizontal(st).src == st);
    CHECK(identity_vertical(st).src == st);
  }
}

TEST_CASE("the two dualities commute and generate a four-group") {
  ZeroCell p1m = cell_ni(atom("a"), atom("x"));
  ZeroCell q1m = cell_ni(atom("b"), atom("y"));
  ZeroCell p1w = cell_ni_wrapped(atom("a"), atom("x"));
  ZeroCell q1w = cell_ni_wrapped(atom("b"), atom("y"));

  CHECK(sharp_zero(star_zero(p1m)) == star_zero(sharp_zero(p1m)));
  ZeroCell cd = central_dual(p1m);
  CHECK(central_dual(cd) == p1m);
  CHECK(sharp_zero(cd) == star_zero(p1m));
  CHECK(star_zero(cd) == sharp_zero(p1m));

  HorizontalCell hs = swap_cell(p1m, q1m);
  ChuTransform idi = identity_transform(fx::unit_i());
  HorizontalCell hw = make_horizontal(
      p1w, q1w, DialgebraHom{p1w.top, q1w.top, fx::n_swap()},
      DialgebraHom{q1w.bottom, p1w.bottom, idi});
  VerticalCell v1c = comparison_vertical(p1m, p1w);
  VerticalCell v2c = comparison_vertical(q1m, q1w);
  Cubicle c = make_cubicle(hs, v1c, v2c, hw);

  CHECK(central_dual(central_dual(hs)) == hs);
  CHECK(central_dual(central_dual(v1c)) == v1c);
  CHECK(sharp_cubicle(sharp_cubicle(c)) == c);
  CHECK(star_cubicle(star_cubicle(c)) == c);
  CHECK(central_dual(central_dual(c)) == c);
  CHECK(sharp_cubicle(star_cubicle(c)) == star_cubicle(sharp_cubicle(c)));

  Cubicle ic = videntity_cubicle(identity_horizontal(p1m));
  CHECK(central_dual(ic) ==
        videntity_cubicle(identity_horizontal(central_dual(p1m))));
}

TEST_CASE("category axioms hold on generated fixtures") {
  ZeroCell p1m = cell_ni(atom("a"), atom("x"));
  ZeroCell q1m = cell_ni(atom("b"), atom("y"));

  SUBCASE("identity-only fixture") {
    DlcFixture f;
    f.cells = {p1m};
    f.horizontals = {identity_horizontal(p1m)};
    f.verticals = {identity_vertical(p1m)};
    f.cubicles = {videntity_cubicle(identity_horizontal(p1m))};
    AxiomReport rep = check_internal_axioms(f);
    CHECK(rep.ok());
    CHECK(rep.identity_checks == 4);
    CHECK(rep.boundary_checks > 0);
    CHECK(rep.unit_checks == 3);
    CHECK(rep.associativity_checks > 0);
    CHECK(rep.interchange_checks > 0);
  }
  SUBCASE("stacked verticals over one index") {
    ChuTransform sw = fx::n_swap();
    ChuTransform idi = identity_transform(fx::unit_i());
    DlcFixture f;
    f.cells = {p1m, q1m};
    f.verticals = {make_vertical(p1m, q1m, sw, sw, idi, idi),
                   make_vertical(q1m, p1m, sw, sw, idi, idi)};
    AxiomReport rep = check_internal_axioms(f);
    CHECK(rep.ok());
    CHECK(rep.associativity_checks >= 2);
  }
  SUBCASE("mixed fixture with nontrivial cubicles") {
    ZeroCell p1w = cell_ni_wrapped(atom("a"), atom("x"));
    ZeroCell q1w = cell_ni_wrapped(atom("b"), atom("y"));
    HorizontalCell hs = swap_cell(p1m, q1m);
    HorizontalCell hs_back = swap_cell(q1m, p1m);
    ChuTransform idi = identity_transform(fx::unit_i());
    HorizontalCell hw = make_horizontal(
        p1w, q1w, DialgebraHom{p1w.top, q1w.top, fx::n_swap()},
        DialgebraHom{q1w.bottom, p1w.bottom, idi});
    HorizontalCell hw_back = make_horizontal(
        q1w, p1w, DialgebraHom{q1w.top, p1w.top, fx::n_swap()},
        DialgebraHom{p1w.bottom, q1w.bottom, idi});
    VerticalCell v1c = comparison_vertical(p1m, p1w);
    VerticalCell v2c = comparison_vertical(q1m, q1w);
    Cubicle c = make_cubicle(hs, v1c, v2c, hw);
    Cubicle d = make_cubicle(hs_back, v2c, v1c, hw_back);

    DlcFixture f;
    f.cells = {p1m, q1m, p1w, q1w};
    f.horizontals = {hs, hs_back, hw, hw_back};
    f.verticals = {v1c, v2c};
    f.cubicles = {c, d, videntity_cubicle(hw), videntity_cubicle(hw_back)};
    AxiomReport rep = check_internal_axioms(f);
    CHECK(rep.violations.empty());
    CHECK(rep.unit_checks >= 4);
    CHECK(rep.interchange_checks >= 1);
  }
}

TEST_CASE("horizontal products of identity cells") {
  ZeroCell ci = unit_cell(fx::unit_i());
  ZeroCell cb = unit_cell(fx::unit_bot());
  VerticalCell v1 = identity_vertical(ci);
  VerticalCell v2 = identity_vertical(cb);

  HorizontalProduct hp = horizontal_product(v1, v2, bud);
  CHECK(hp.w == identity_vertical(hp.w.src));
  CHECK(hp.w.src.top == product_dialgebra(ci.top, cb.top, bud).object);
  CHECK(hp.w.src.bottom ==
        coproduct_dialgebra(ci.bottom, cb.bottom, bud).object);
  CHECK(hp.p1.right == v1);
  CHECK(hp.p2.right == v2);
  CHECK(hp.p1.left == hp.w);

  CHECK(horizontal_cells(hp.w.src, hp.w.src, bud).size() == 9);

  SUBCASE("an outside probe factors through exactly one cubicle") {
    ZeroCell cr = make_zero_cell(
        all_id(), idd(fx::zero_sp()), idd(fx::top_sp()),
        empty_super_matrix(all_id(), fx::zero_sp(), fx::top_sp()));
    VerticalCell ur = identity_vertical(cr);
    std::vector<Cubicle> cone1 = cubicles_between(ur, v1, bud);
    std::vector<Cubicle> cone2 = cubicles_between(ur, v2, bud);
    REQUIRE(cone1.size() == 1);
    REQUIRE(cone2.size() == 1);
    int found = 0;
    for (const Cubicle& m : cubicles_between(ur, hp.w, bud))
      if (hcompose_cubicles(m, hp.p1) == cone1.front() &&
          hcompose_cubicles(m, hp.p2) == cone2.front())
        ++found;
    CHECK(found == 1);
  }
  SUBCASE("nonempty index sets are rejected") {
    ZeroCell p1m = cell_ni(atom("a"), atom("x"));
    VerticalCell vs = identity_vertical(p1m);
    CHECK_THROWS_AS(horizontal_product(vs, vs, bud), SigmaNonEmpty);
  }
  SUBCASE("profiles must agree") {
    VerticalCell vw = identity_vertical(cell_ni_wrapped_plain());
    VerticalCell vp = identity_vertical(cell_ni_plain());
    CHECK_THROWS_AS(horizontal_product(vp, vw, bud), ProfileMismatch);
  }
  SUBCASE("a constant row kills preservation") {
    FunctorDescriptor cs = desc_const(fx::sier());
    Profile cp{cs, cs, desc_id(), desc_id()};
    ChuSpace i = fx::unit_i(), b = fx::unit_bot();
    Dialgebra dt1 = make_dialgebra(cs, cs, i, identity_transform(fx::sier()));
    Dialgebra dt2 = make_dialgebra(cs, cs, b, identity_transform(fx::sier()));
    ZeroCell cc1 = make_zero_cell(cp, dt1, idd(i),
                                  empty_super_matrix(cp, i, i));
    ZeroCell cc2 = make_zero_cell(cp, dt2, idd(b),
                                  empty_super_matrix(cp, b, b));
    CHECK_THROWS_AS(horizontal_product(identity_vertical(cc1),
                                       identity_vertical(cc2), bud),
                    NotPreserved);
  }
}

TEST_CASE("no cone covers the mismatched pair") {
  auto [p1, p2] = counterexample_fixture(fx::gamma2());

  CHECK(horizontal_cells(p1, p1, bud).size() == 1);
  CHECK(horizontal_cells(p1, p2, bud).empty());

  CHECK(check_no_cone(p1, p2, p1, bud));
  CHECK(check_no_cone(p1, p2, p2, bud));
  CHECK(check_no_cone(p1, p2, cell_ni(atom("a"), atom("x")), bud));
  CHECK(check_no_cone(p1, p2, cell_ni_plain(), bud));
  CHECK(check_no_cone(p1, p2, unit_cell(fx::unit_i()), bud));

  SUBCASE("distinct profiles settle it without enumeration") {
    CHECK(check_no_cone(p1, cell_ni_wrapped(atom("a"), atom("x")), p1, bud));
  }
  SUBCASE("an honest pair with empty index set has cones") {
    ZeroCell a = cell_ni_plain();
    CHECK_FALSE(check_no_cone(a, a, a, bud));
  }
}
