#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "chu/connectives.hpp"

namespace chu {

// Finite-set endofunctor, closed grammar. Compose nodes apply `inner` first.
struct SetFunctor {
  enum class Kind { Id, Const, TimesFixed, SumFixed, PowFixed, Compose };
  Kind kind = Kind::Id;
  FinSet payload;  // Const / TimesFixed / SumFixed / PowFixed
  Budget budget;   // PowFixed
  std::shared_ptr<const SetFunctor> outer, inner;
};

SetFunctor set_id();
SetFunctor set_const(FinSet k);
SetFunctor set_times(FinSet k);  // S -> S x K
SetFunctor set_sum(FinSet k);    // S -> S + K
SetFunctor set_pow(FinSet k, Budget b);  // S -> S^K
SetFunctor set_compose(SetFunctor outer, SetFunctor inner);

// Syntactic equality; budgets are evaluation fuel, not identity.
bool operator==(const SetFunctor& a, const SetFunctor& b);

FinSet apply_set_ob(const SetFunctor& f, const FinSet& s);
FinMap apply_set_mor(const SetFunctor& f, const FinMap& m);

enum class Variance { Covariant, Contravariant };

// Chu endofunctor, closed grammar. Compose nodes apply `inner` first; Tilde
// children live in `inner`.
struct FunctorDescriptor {
  enum class Kind {
    Id,
    Const,
    WithFixed,
    PlusFixed,
    TensorFixed,
    Uplift1,
    Uplift2,
    Compose,
    Tilde
  };
  Kind kind = Kind::Id;
  ChuSpace space;       // Const / WithFixed / PlusFixed / TensorFixed
  Budget budget;        // TensorFixed
  SetFunctor set_part;  // Uplift1 / Uplift2
  Element point;        // Uplift2: the alphabet value filling the matrix
  std::shared_ptr<const FunctorDescriptor> outer, inner;
};

FunctorDescriptor desc_id();
FunctorDescriptor desc_const(ChuSpace c);
FunctorDescriptor desc_with(ChuSpace c);    // A -> A & C
FunctorDescriptor desc_plus(ChuSpace c);    // A -> A (+) C
FunctorDescriptor desc_tensor(ChuSpace c, Budget b);  // A -> A (x) C
FunctorDescriptor desc_uplift1(SetFunctor f);
FunctorDescriptor desc_uplift2(SetFunctor f, Element c);
FunctorDescriptor desc_compose(FunctorDescriptor outer, FunctorDescriptor inner);
// Normalizes a double tilde away, so desc_tilde(desc_tilde(f)) == f.
FunctorDescriptor desc_tilde(FunctorDescriptor f);

bool operator==(const FunctorDescriptor& a, const FunctorDescriptor& b);
Variance variance(const FunctorDescriptor& f);

ChuSpace apply_ob(const FunctorDescriptor& f, const ChuSpace& a);
// Total in either variance: a contravariant descriptor sends t: A -> B to a
// transform F(B) -> F(A).
ChuTransform apply_mor(const FunctorDescriptor& f, const ChuTransform& t);

FinSet positive_part(const FunctorDescriptor& f, const ChuSpace& a);
FinSet negative_part(const FunctorDescriptor& f, const ChuSpace& a);

struct LawReport {
  long long identity_checks = 0;
  long long composite_checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
// Samples are composable pairs (f, g) with f.cod == g.dom.
LawReport check_functor_laws(
    const FunctorDescriptor& f,
    const std::vector<std::pair<ChuTransform, ChuTransform>>& samples);

// True when the carrier of fhat(A) is f(carrier A) and forward components of
// fhat(t) are f(t forward), across the sample transforms and their endpoints.
bool check_uplifting(const FunctorDescriptor& fhat, const SetFunctor& f,
                     const std::vector<ChuTransform>& samples);
// Additionally matches cocarriers and backward components against g.
bool check_bi_uplifting(const FunctorDescriptor& h, const SetFunctor& f,
                        const SetFunctor& g,
                        const std::vector<ChuTransform>& samples);

// Each builds the canonical comparison transform and decides whether it is an
// isomorphism. Contravariant descriptors are rejected with VarianceError.
bool check_preserves_binary_products(const FunctorDescriptor& f,
                                     const ChuSpace& a, const ChuSpace& b,
                                     const Budget& bud);
bool check_preserves_binary_coproducts(const FunctorDescriptor& f,
                                       const ChuSpace& a, const ChuSpace& b,
                                       const Budget& bud);
bool check_preserves_pullbacks(const FunctorDescriptor& f,
                               const ChuTransform& left,
                               const ChuTransform& right, const Budget& bud);

}  // namespace chu
