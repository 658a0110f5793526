#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <utility>
#include <vector>

#include "chu/functor_engine.hpp"
#include "fixtures.hpp"

using namespace chu;

namespace {

const Budget bud{};

FinSet st() { return make_fin_set({atom("s"), atom("t")}); }
FinSet pt() { return make_fin_set({atom("*")}); }

// Composable transform pairs drawn from small hom sets.
std::vector<std::pair<ChuTransform, ChuTransform>> law_samples() {
  std::vector<std::pair<ChuTransform, ChuTransform>> out;
  auto ends = hom_set(fx::sier(), fx::sier(), bud);
  for (const auto& f : ends)
    for (const auto& g : ends) out.emplace_back(f, g);
  for (const auto& f : hom_set(fx::unit_i(), fx::sier(), bud))
    for (const auto& g : ends) out.emplace_back(f, g);
  return out;
}

std::vector<ChuTransform> arrow_samples() {
  std::vector<ChuTransform> out = hom_set(fx::sier(), fx::sier(), bud);
  for (const auto& f : hom_set(fx::unit_i(), fx::sier(), bud)) out.push_back(f);
  out.push_back(fx::n_swap());
  out.push_back(identity_transform(fx::zero_sp()));
  return out;
}

}  // namespace

TEST_CASE("set functors act on objects") {
  FinSet ab = make_fin_set({atom("a"), atom("b")});
  CHECK(apply_set_ob(set_id(), ab) == ab);
  CHECK(apply_set_ob(set_const(st()), ab) == st());
  CHECK(apply_set_ob(set_times(st()), ab).size() == 4);
  CHECK(apply_set_ob(set_sum(pt()), make_fin_set({atom("a")})) ==
        make_fin_set({inl(atom("a")), inr(atom("*"))}));
  CHECK(apply_set_ob(set_pow(st(), bud), ab).size() == 4);
  CHECK(apply_set_ob(set_compose(set_times(st()), set_sum(pt())), ab).size() ==
        6);
  CHECK_THROWS_AS(
      apply_set_ob(set_pow(st(), Budget{.max_functions = 3}), ab),
      BudgetExceeded);
}

TEST_CASE("set functors act on maps and keep the laws") {
  FinSet ab = make_fin_set({atom("a"), atom("b")});
  FinSet cd = make_fin_set({atom("c"), atom("d")});
  FinMap m = make_fin_map(ab, cd, {{atom("a"), atom("d")}, {atom("b"), atom("c")}});
  FinMap n = make_fin_map(cd, ab, {{atom("c"), atom("a")}, {atom("d"), atom("a")}});
  CHECK(apply_set_mor(set_id(), m) == m);
  CHECK(apply_set_mor(set_const(st()), m) == identity_map(st()));

  for (const SetFunctor& f :
       {set_id(), set_const(st()), set_times(st()), set_sum(pt()),
        set_pow(st(), bud), set_compose(set_sum(pt()), set_times(st()))}) {
    CHECK(apply_set_mor(f, identity_map(ab)) ==
          identity_map(apply_set_ob(f, ab)));
    CHECK(apply_set_mor(f, compose_maps(m, n)) ==
          compose_maps(apply_set_mor(f, m), apply_set_mor(f, n)));
  }

  FinMap fm = apply_set_mor(set_times(st()), m);
  CHECK(fm(pair(atom("a"), atom("s"))) == pair(atom("d"), atom("s")));
  FinMap sm = apply_set_mor(set_sum(pt()), m);
  CHECK(sm(inr(atom("*"))) == inr(atom("*")));
  CHECK(sm(inl(atom("b"))) == inl(atom("c")));
}

TEST_CASE("descriptor equality and variance bookkeeping") {
  FunctorDescriptor id = desc_id();
  FunctorDescriptor tilde = desc_tilde(desc_id());
  CHECK(variance(id) == Variance::Covariant);
  CHECK(variance(tilde) == Variance::Contravariant);
  CHECK(variance(desc_compose(tilde, tilde)) == Variance::Covariant);
  CHECK(variance(desc_compose(desc_with(fx::unit_i()), tilde)) ==
        Variance::Contravariant);

  CHECK(desc_tilde(tilde) == id);
  CHECK(desc_uplift1(set_id()) == desc_uplift1(set_id()));
  CHECK_FALSE(desc_uplift1(set_id()) == desc_uplift2(set_id(), fx::g0()));
  CHECK_FALSE(desc_uplift2(set_id(), fx::g0()) ==
              desc_uplift2(set_id(), fx::g1()));
  CHECK_FALSE(desc_with(fx::unit_i()) == desc_plus(fx::unit_i()));
  // budgets are fuel, not identity
  CHECK(desc_tensor(fx::unit_i(), bud) ==
        desc_tensor(fx::unit_i(), Budget{.max_functions = 7}));
  CHECK_THROWS_AS(desc_uplift2(set_id(), pair(fx::g0(), fx::g1())), InputError);
}

TEST_CASE("descriptors act on objects") {
  ChuSpace s = fx::sier();
  Alphabet g = fx::gamma2();

  CHECK(apply_ob(desc_id(), s) == s);
  CHECK(apply_ob(desc_uplift1(set_id()), s) ==
        make_space(g, s.carrier, FinSet{}, {}));
  CHECK(apply_ob(desc_uplift2(set_id(), fx::g0()), s) ==
        make_space(g, s.carrier, pt(), {fx::g0(), fx::g0()}));
  CHECK(apply_ob(desc_with(fx::unit_i()), s) == with_(s, fx::unit_i()).space);
  CHECK(apply_ob(desc_with(fx::unit_i()), s).carrier.size() == 2);
  CHECK(apply_ob(desc_with(fx::unit_i()), s).cocarrier.size() == 5);
  CHECK(apply_ob(desc_plus(fx::unit_i()), s) == plus(s, fx::unit_i()).space);
  CHECK(apply_ob(desc_tensor(fx::unit_i(), bud), s) ==
        tensor(s, fx::unit_i(), bud));
  CHECK(apply_ob(desc_tilde(desc_id()), s) == dual(s));
  CHECK(apply_ob(desc_compose(desc_tilde(desc_id()), desc_tilde(desc_id())),
                 s) == s);

  ChuSpace g3 = make_space(make_alphabet({"0", "1", "2"}),
                           make_fin_set({atom("p")}), make_fin_set({atom("x")}),
                           {atom("2")});
  CHECK_THROWS_AS(apply_ob(desc_const(g3), s), GammaMismatch);
  CHECK_THROWS_AS(apply_ob(desc_uplift2(set_id(), atom("7")), s),
                  EntryOutsideGamma);
}

TEST_CASE("positive and negative parts project the applied space") {
  ChuSpace s = fx::sier();
  CHECK(positive_part(desc_id(), s) == s.carrier);
  CHECK(negative_part(desc_uplift1(set_id()), s).empty());
  CHECK(positive_part(desc_tilde(desc_id()), s) == s.cocarrier);
  CHECK(negative_part(desc_tilde(desc_id()), s) == s.carrier);
}

TEST_CASE("functor laws hold across the grammar") {
  auto samples = law_samples();
  for (const FunctorDescriptor& f :
       {desc_id(), desc_const(fx::sier()), desc_with(fx::unit_i()),
        desc_plus(fx::unit_i()), desc_tensor(fx::unit_i(), bud),
        desc_uplift1(set_id()), desc_uplift1(set_times(st())),
        desc_uplift2(set_id(), fx::g0()), desc_uplift2(set_sum(pt()), fx::g1()),
        desc_tilde(desc_id()), desc_tilde(desc_with(fx::unit_i())),
        desc_compose(desc_with(fx::unit_i()), desc_tilde(desc_id())),
        desc_compose(desc_uplift1(set_id()), desc_plus(fx::unit_i()))}) {
    LawReport rep = check_functor_laws(f, samples);
    CHECK(rep.ok());
    CHECK(rep.identity_checks == 3 * static_cast<long long>(samples.size()));
    CHECK(rep.composite_checks == static_cast<long long>(samples.size()));
  }
}

TEST_CASE("contravariant descriptors reverse arrows") {
  ChuTransform f = fx::const_a();
  ChuTransform tf = apply_mor(desc_tilde(desc_id()), f);
  CHECK(tf.dom == dual(f.cod));
  CHECK(tf.cod == dual(f.dom));
  CHECK(tf == dual_transform(f));

  FunctorDescriptor twice =
      desc_compose(desc_tilde(desc_id()), desc_tilde(desc_id()));
  CHECK(variance(twice) == Variance::Covariant);
  CHECK(apply_mor(twice, f) == f);
  CHECK(apply_ob(twice, f.dom) == f.dom);
}

TEST_CASE("both upliftings satisfy the uplifting law") {
  auto samples = arrow_samples();
  for (const SetFunctor& f : {set_id(), set_times(st()), set_sum(pt()),
                              set_pow(make_fin_set({atom("k")}), bud)}) {
    CHECK(check_uplifting(desc_uplift1(f), f, samples));
    CHECK(check_uplifting(desc_uplift2(f, fx::g0()), f, samples));
    CHECK(check_uplifting(desc_uplift2(f, fx::g1()), f, samples));
  }
  CHECK_FALSE(check_uplifting(desc_uplift1(set_id()), set_times(st()),
                              samples));
  CHECK_FALSE(check_uplifting(desc_tilde(desc_id()), set_id(), samples));

  // the two upliftings differ syntactically and pointwise
  CHECK_FALSE(desc_uplift1(set_id()) == desc_uplift2(set_id(), fx::g0()));
  ChuSpace u1 = apply_ob(desc_uplift1(set_id()), fx::sier());
  ChuSpace u2 = apply_ob(desc_uplift2(set_id(), fx::g0()), fx::sier());
  CHECK_FALSE(u1 == u2);
  CHECK(u1.cocarrier.empty());
  CHECK(u2.cocarrier.size() == 1);
}

TEST_CASE("bi-uplifting pins both projections") {
  auto samples = arrow_samples();
  CHECK(check_bi_uplifting(desc_uplift2(set_id(), fx::g0()), set_id(),
                           set_const(pt()), samples));
  CHECK(check_bi_uplifting(desc_uplift1(set_id()), set_id(),
                           set_const(FinSet{}), samples));
  CHECK(check_bi_uplifting(desc_id(), set_id(), set_id(), samples));
  CHECK_FALSE(check_bi_uplifting(desc_id(), set_id(), set_const(pt()),
                                 samples));
  CHECK_FALSE(check_bi_uplifting(desc_uplift2(set_id(), fx::g0()), set_id(),
                                 set_id(), samples));
}

TEST_CASE("preservation checks build the comparison transform") {
  ChuSpace i = fx::unit_i();
  ChuSpace s = fx::sier();

  CHECK(check_preserves_binary_products(desc_id(), s, i, bud));
  CHECK(check_preserves_binary_coproducts(desc_id(), s, i, bud));
  CHECK_FALSE(check_preserves_binary_products(desc_const(s), i, i, bud));
  CHECK(apply_ob(desc_const(s), with_(i, i).space).carrier.size() == 2);
  CHECK(with_(apply_ob(desc_const(s), i), apply_ob(desc_const(s), i))
            .space.carrier.size() == 4);
  CHECK_FALSE(check_preserves_binary_coproducts(desc_plus(i), i, i, bud));

  CHECK(check_preserves_pullbacks(desc_id(), fx::const_a(),
                                  identity_transform(s), bud));

  FunctorDescriptor tilde = desc_tilde(desc_id());
  CHECK_THROWS_AS(check_preserves_binary_products(tilde, s, i, bud),
                  VarianceError);
  CHECK_THROWS_AS(check_preserves_binary_coproducts(tilde, s, i, bud),
                  VarianceError);
  CHECK_THROWS_AS(check_preserves_pullbacks(tilde, fx::const_a(),
                                            identity_transform(s), bud),
                  VarianceError);
}
