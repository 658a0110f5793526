#pragma once

#include <optional>

#include "chu/core.hpp"

namespace chu {

// Units. unit_i has one point and one column per alphabet symbol; perp/top
// are the duals of unit_i/zero.
ChuSpace unit_i(const Alphabet& g);
ChuSpace perp(const Alphabet& g);
ChuSpace zero(const Alphabet& g);
ChuSpace top(const Alphabet& g);

// Monoidal product. Carrier is the cartesian product; cocarrier is the set of
// compatible pairs (phi: A -> Y, psi: B -> X), i.e. those with
// s(b, phi(a)) = r(a, psi(b)); matrix evaluates s(b, phi(a)).
ChuSpace tensor(const ChuSpace& a, const ChuSpace& b, const Budget& bud);
ChuTransform tensor_mor(const ChuTransform& f, const ChuTransform& g,
                        const Budget& bud);

// Internal hom. Carrier is hom(A,B) as pairs of function tables; cocarrier is
// A x Y; matrix evaluates s(phi(a), y).
ChuSpace lolli(const ChuSpace& a, const ChuSpace& b, const Budget& bud);
// Contravariant in the first slot: for f: A' -> A and g: B -> B' the result
// maps lolli(A,B) -> lolli(A',B').
ChuTransform lolli_mor(const ChuTransform& f, const ChuTransform& g,
                       const Budget& bud);

// De Morgan dual of tensor, computed bit-exactly as dual(tensor(dual,dual)).
ChuSpace par(const ChuSpace& a, const ChuSpace& b, const Budget& bud);
ChuTransform par_mor(const ChuTransform& f, const ChuTransform& g,
                     const Budget& bud);

struct Product {
  ChuSpace space;
  ChuTransform p1, p2;
};
struct Coproduct {
  ChuSpace space;
  ChuTransform i1, i2;
};

// Binary product: carrier A x B, cocarrier X + Y.
Product with_(const ChuSpace& a, const ChuSpace& b);
ChuTransform with_mor(const ChuTransform& f, const ChuTransform& g);
ChuTransform pairing(const ChuTransform& f, const ChuTransform& g);

// Binary coproduct: carrier A + B, cocarrier X x Y.
Coproduct plus(const ChuSpace& a, const ChuSpace& b);
ChuTransform plus_mor(const ChuTransform& f, const ChuTransform& g);
ChuTransform copairing(const ChuTransform& f, const ChuTransform& g);

// Currying bijection hom(A (x) B, C) ~ hom(A, B -o C). The three component
// spaces are passed explicitly because they cannot be recovered from the
// composites when carriers are empty.
ChuTransform curry(const ChuTransform& h, const ChuSpace& a, const ChuSpace& b,
                   const ChuSpace& c, const Budget& bud);
ChuTransform decurry(const ChuTransform& k, const ChuSpace& a,
                     const ChuSpace& b, const ChuSpace& c, const Budget& bud);

struct DoubleDual {
  ChuTransform d;  // A -> (A -o perp) -o perp
  bool iso;
};
DoubleDual canonical_double_dual(const ChuSpace& a, const Budget& bud);

struct Equalized {
  ChuSpace space;
  ChuTransform arrow;  // embedding into dom(f)
};
struct Coequalized {
  ChuSpace space;
  ChuTransform arrow;  // projection out of cod(f)
};
Equalized equalizer(const ChuTransform& f, const ChuTransform& g);
Coequalized coequalizer(const ChuTransform& f, const ChuTransform& g);

struct PullbackResult {
  ChuSpace space;
  ChuTransform p1, p2;
};
struct PushoutResult {
  ChuSpace space;
  ChuTransform j1, j2;
};
// Built as the equalizer of the two composites out of the binary product
// (dually for pushout).
PullbackResult pullback(const ChuTransform& f, const ChuTransform& g);
PushoutResult pushout(const ChuTransform& f, const ChuTransform& g);

// First transform with bijective components, in canonical hom order.
std::optional<ChuTransform> find_iso(const ChuSpace& a, const ChuSpace& b,
                                     const Budget& bud);

}  // namespace chu
