#include "chu/functor_engine.hpp"

namespace chu {

namespace {

const Element kPoint = atom("*");

template <typename T>
bool child_eq(const std::shared_ptr<const T>& x,
              const std::shared_ptr<const T>& y) {
  if (!x || !y) return !x && !y;
  return *x == *y;
}

}  // namespace

SetFunctor set_id() { return {}; }

SetFunctor set_const(FinSet k) {
  SetFunctor f;
  f.kind = SetFunctor::Kind::Const;
  f.payload = std::move(k);
  return f;
}

SetFunctor set_times(FinSet k) {
  SetFunctor f;
  f.kind = SetFunctor::Kind::TimesFixed;
  f.payload = std::move(k);
  return f;
}

SetFunctor set_sum(FinSet k) {
  SetFunctor f;
  f.kind = SetFunctor::Kind::SumFixed;
  f.payload = std::move(k);
  return f;
}

SetFunctor set_pow(FinSet k, Budget b) {
  SetFunctor f;
  f.kind = SetFunctor::Kind::PowFixed;
  f.payload = std::move(k);
  f.budget = b;
  return f;
}

SetFunctor set_compose(SetFunctor outer, SetFunctor inner) {
  SetFunctor f;
  f.kind = SetFunctor::Kind::Compose;
  f.outer = std::make_shared<const SetFunctor>(std::move(outer));
  f.inner = std::make_shared<const SetFunctor>(std::move(inner));
  return f;
}

bool operator==(const SetFunctor& a, const SetFunctor& b) {
  return a.kind == b.kind && a.payload == b.payload &&
         child_eq(a.outer, b.outer) && child_eq(a.inner, b.inner);
}

FinSet apply_set_ob(const SetFunctor& f, const FinSet& s) {
  switch (f.kind) {
    case SetFunctor::Kind::Id:
      return s;
    case SetFunctor::Kind::Const:
      return f.payload;
    case SetFunctor::Kind::TimesFixed:
      return cartesian(s, f.payload).set;
    case SetFunctor::Kind::SumFixed:
      return disjoint_union(s, f.payload).set;
    case SetFunctor::Kind::PowFixed:
      return make_fin_set(enumerate_functions(f.payload, s, f.budget));
    case SetFunctor::Kind::Compose:
      return apply_set_ob(*f.outer, apply_set_ob(*f.inner, s));
  }
  throw InputError("unknown set functor node");
}

FinMap apply_set_mor(const SetFunctor& f, const FinMap& m) {
  switch (f.kind) {
    case SetFunctor::Kind::Id:
      return m;
    case SetFunctor::Kind::Const:
      return identity_map(f.payload);
    case SetFunctor::Kind::TimesFixed:
      return make_fin_map_by(
          apply_set_ob(f, m.dom), apply_set_ob(f, m.cod),
          [&](const Element& e) {
            return pair(m(pair_first(e)), pair_second(e));
          });
    case SetFunctor::Kind::SumFixed:
      return make_fin_map_by(
          apply_set_ob(f, m.dom), apply_set_ob(f, m.cod),
          [&](const Element& e) {
            return is_inl(e) ? inl(m(tagged_payload(e))) : e;
          });
    case SetFunctor::Kind::PowFixed:
      return make_fin_map_by(
          apply_set_ob(f, m.dom), apply_set_ob(f, m.cod),
          [&](const Element& h) {
            return map_to_fn(compose_maps(fn_to_map(h, f.payload, m.dom), m));
          });
    case SetFunctor::Kind::Compose:
      return apply_set_mor(*f.outer, apply_set_mor(*f.inner, m));
  }
  throw InputError("unknown set functor node");
}

FunctorDescriptor desc_id() { return {}; }

FunctorDescriptor desc_const(ChuSpace c) {
  FunctorDescriptor f;
  f.kind = FunctorDescriptor::Kind::Const;
  f.space = std::move(c);
  return f;
}

FunctorDescriptor desc_with(ChuSpace c) {
  FunctorDescriptor f;
  f.kind = FunctorDescriptor::Kind::WithFixed;
  f.space = std::move(c);
  return f;
}

FunctorDescriptor desc_plus(ChuSpace c) {
  FunctorDescriptor f;
  f.kind = FunctorDescriptor::Kind::PlusFixed;
  f.space = std::move(c);
  return f;
}

FunctorDescriptor desc_tensor(ChuSpace c, Budget b) {
  FunctorDescriptor f;
  f.kind = FunctorDescriptor::Kind::TensorFixed;
  f.space = std::move(c);
  f.budget = b;
  return f;
}

FunctorDescriptor desc_uplift1(SetFunctor sf) {
  FunctorDescriptor f;
  f.kind = FunctorDescriptor::Kind::Uplift1;
  f.set_part = std::move(sf);
  return f;
}

FunctorDescriptor desc_uplift2(SetFunctor sf, Element c) {
  if (c.kind != Element::Kind::Atom)
    throw InputError("uplift2 expects an alphabet atom");
  FunctorDescriptor f;
  f.kind = FunctorDescriptor::Kind::Uplift2;
  f.set_part = std::move(sf);
  f.point = std::move(c);
  return f;
}

FunctorDescriptor desc_compose(FunctorDescriptor outer,
                               FunctorDescriptor inner) {
  FunctorDescriptor f;
  f.kind = FunctorDescriptor::Kind::Compose;
  f.outer = std::make_shared<const FunctorDescriptor>(std::move(outer));
  f.inner = std::make_shared<const FunctorDescriptor>(std::move(inner));
  return f;
}

FunctorDescriptor desc_tilde(FunctorDescriptor f) {
  if (f.kind == FunctorDescriptor::Kind::Tilde) return *f.inner;
  FunctorDescriptor t;
  t.kind = FunctorDescriptor::Kind::Tilde;
  t.inner = std::make_shared<const FunctorDescriptor>(std::move(f));
  return t;
}

bool operator==(const FunctorDescriptor& a, const FunctorDescriptor& b) {
  return a.kind == b.kind && a.space == b.space && a.set_part == b.set_part &&
         a.point == b.point && child_eq(a.outer, b.outer) &&
         child_eq(a.inner, b.inner);
}

Variance variance(const FunctorDescriptor& f) {
  switch (f.kind) {
    case FunctorDescriptor::Kind::Tilde:
      return variance(*f.inner) == Variance::Covariant
                 ? Variance::Contravariant
                 : Variance::Covariant;
    case FunctorDescriptor::Kind::Compose:
      return variance(*f.outer) == variance(*f.inner)
                 ? Variance::Covariant
                 : Variance::Contravariant;
    default:
      return Variance::Covariant;
  }
}

ChuSpace apply_ob(const FunctorDescriptor& f, const ChuSpace& a) {
  switch (f.kind) {
    case FunctorDescriptor::Kind::Id:
      return a;
    case FunctorDescriptor::Kind::Const:
      if (!(f.space.gamma == a.gamma))
        throw GammaMismatch("constant functor alphabet");
      return f.space;
    case FunctorDescriptor::Kind::WithFixed:
      return with_(a, f.space).space;
    case FunctorDescriptor::Kind::PlusFixed:
      return plus(a, f.space).space;
    case FunctorDescriptor::Kind::TensorFixed:
      return tensor(a, f.space, f.budget);
    case FunctorDescriptor::Kind::Uplift1:
      return make_space(a.gamma, apply_set_ob(f.set_part, a.carrier), FinSet{},
                        {});
    case FunctorDescriptor::Kind::Uplift2: {
      if (!a.gamma.atoms.contains(f.point))
        throw EntryOutsideGamma("uplift2 fill value");
      FinSet carrier = apply_set_ob(f.set_part, a.carrier);
      std::vector<Element> matrix(carrier.size(), f.point);
      return make_space(a.gamma, std::move(carrier), make_fin_set({kPoint}),
                        std::move(matrix));
    }
    case FunctorDescriptor::Kind::Compose:
      return apply_ob(*f.outer, apply_ob(*f.inner, a));
    case FunctorDescriptor::Kind::Tilde:
      return dual(apply_ob(*f.inner, a));
  }
  throw InputError("unknown functor node");
}

ChuTransform apply_mor(const FunctorDescriptor& f, const ChuTransform& t) {
  switch (f.kind) {
    case FunctorDescriptor::Kind::Id:
      return t;
    case FunctorDescriptor::Kind::Const:
      if (!(f.space.gamma == t.dom.gamma))
        throw GammaMismatch("constant functor alphabet");
      return identity_transform(f.space);
    case FunctorDescriptor::Kind::WithFixed:
      return with_mor(t, identity_transform(f.space));
    case FunctorDescriptor::Kind::PlusFixed:
      return plus_mor(t, identity_transform(f.space));
    case FunctorDescriptor::Kind::TensorFixed:
      return tensor_mor(t, identity_transform(f.space), f.budget);
    case FunctorDescriptor::Kind::Uplift1:
      return make_transform(apply_ob(f, t.dom), apply_ob(f, t.cod),
                            apply_set_mor(f.set_part, t.forward),
                            make_fin_map(FinSet{}, FinSet{}, {}));
    case FunctorDescriptor::Kind::Uplift2:
      return make_transform(apply_ob(f, t.dom), apply_ob(f, t.cod),
                            apply_set_mor(f.set_part, t.forward),
                            identity_map(make_fin_set({kPoint})));
    case FunctorDescriptor::Kind::Compose:
      return apply_mor(*f.outer, apply_mor(*f.inner, t));
    case FunctorDescriptor::Kind::Tilde:
      return dual_transform(apply_mor(*f.inner, t));
  }
  throw InputError("unknown functor node");
}

FinSet positive_part(const FunctorDescriptor& f, const ChuSpace& a) {
  return apply_ob(f, a).carrier;
}

FinSet negative_part(const FunctorDescriptor& f, const ChuSpace& a) {
  return apply_ob(f, a).cocarrier;
}

LawReport check_functor_laws(
    const FunctorDescriptor& f,
    const std::vector<std::pair<ChuTransform, ChuTransform>>& samples) {
  LawReport rep;
  const bool covariant = variance(f) == Variance::Covariant;
  auto check_identity = [&](const ChuSpace& a, std::size_t k) {
    ++rep.identity_checks;
    if (!(apply_mor(f, identity_transform(a)) ==
          identity_transform(apply_ob(f, a))))
      rep.violations.push_back("identity law fails at sample " +
                               std::to_string(k));
  };
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const ChuTransform& s = samples[k].first;
    const ChuTransform& t = samples[k].second;
    check_identity(s.dom, k);
    check_identity(s.cod, k);
    check_identity(t.cod, k);
    ++rep.composite_checks;
    ChuTransform whole = apply_mor(f, compose(s, t));
    ChuTransform parts = covariant
                             ? compose(apply_mor(f, s), apply_mor(f, t))
                             : compose(apply_mor(f, t), apply_mor(f, s));
    if (!(whole == parts))
      rep.violations.push_back("composition law fails at sample " +
                               std::to_string(k));
  }
  return rep;
}

bool check_uplifting(const FunctorDescriptor& fhat, const SetFunctor& f,
                     const std::vector<ChuTransform>& samples) {
  for (const ChuTransform& t : samples) {
    for (const ChuSpace* a : {&t.dom, &t.cod})
      if (!(apply_ob(fhat, *a).carrier == apply_set_ob(f, a->carrier)))
        return false;
    if (!(apply_mor(fhat, t).forward == apply_set_mor(f, t.forward)))
      return false;
  }
  return true;
}

bool check_bi_uplifting(const FunctorDescriptor& h, const SetFunctor& f,
                        const SetFunctor& g,
                        const std::vector<ChuTransform>& samples) {
  if (!check_uplifting(h, f, samples)) return false;
  for (const ChuTransform& t : samples) {
    for (const ChuSpace* a : {&t.dom, &t.cod})
      if (!(apply_ob(h, *a).cocarrier == apply_set_ob(g, a->cocarrier)))
        return false;
    if (!(apply_mor(h, t).backward == apply_set_mor(g, t.backward)))
      return false;
  }
  return true;
}

namespace {

void require_covariant(const FunctorDescriptor& f, const char* where) {
  if (variance(f) == Variance::Contravariant) throw VarianceError(where);
}

}  // namespace

bool check_preserves_binary_products(const FunctorDescriptor& f,
                                     const ChuSpace& a, const ChuSpace& b,
                                     const Budget&) {
  require_covariant(f, "product preservation check");
  Product w = with_(a, b);
  ChuTransform cmp = pairing(apply_mor(f, w.p1), apply_mor(f, w.p2));
  return is_monic(cmp) && is_epic(cmp);
}

bool check_preserves_binary_coproducts(const FunctorDescriptor& f,
                                       const ChuSpace& a, const ChuSpace& b,
                                       const Budget&) {
  require_covariant(f, "coproduct preservation check");
  Coproduct p = plus(a, b);
  ChuTransform cmp = copairing(apply_mor(f, p.i1), apply_mor(f, p.i2));
  return is_monic(cmp) && is_epic(cmp);
}

bool check_preserves_pullbacks(const FunctorDescriptor& f,
                               const ChuTransform& left,
                               const ChuTransform& right, const Budget& bud) {
  require_covariant(f, "pullback preservation check");
  PullbackResult pb = pullback(left, right);
  PullbackResult fpb = pullback(apply_mor(f, left), apply_mor(f, right));
  ChuTransform fp1 = apply_mor(f, pb.p1);
  ChuTransform fp2 = apply_mor(f, pb.p2);
  for (const ChuTransform& u : hom_set(apply_ob(f, pb.space), fpb.space, bud))
    if (compose(u, fpb.p1) == fp1 && compose(u, fpb.p2) == fp2)
      return is_monic(u) && is_epic(u);
  return false;
}

}  // namespace chu
