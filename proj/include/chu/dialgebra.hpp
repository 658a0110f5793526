#pragma once

#include "chu/functor_engine.hpp"

namespace chu {

// A structure map alpha: F(carrier) -> G(carrier) for covariant F, G.
struct Dialgebra {
  FunctorDescriptor f, g;
  ChuSpace carrier;
  ChuTransform alpha;
  friend bool operator==(const Dialgebra&, const Dialgebra&) = default;
};

struct DialgebraHom {
  Dialgebra dom, cod;
  ChuTransform stem;
  friend bool operator==(const DialgebraHom&, const DialgebraHom&) = default;
};

// A monomorphic pair of legs out of a common object, together with the monic
// pairing into the binary product.
struct Relation {
  ChuSpace object;
  ChuTransform leg1, leg2;
  ChuTransform phi;  // pairing(leg1, leg2), monic
  friend bool operator==(const Relation&, const Relation&) = default;
};

// A relation whose legs are dialgebra homomorphisms out of <object, rho>.
struct Bisimulation {
  Relation relation;
  ChuTransform rho;
  friend bool operator==(const Bisimulation&, const Bisimulation&) = default;
};

Dialgebra make_dialgebra(FunctorDescriptor f, FunctorDescriptor g,
                         ChuSpace carrier, ChuTransform alpha);
DialgebraHom make_hom(const Dialgebra& d1, const Dialgebra& d2,
                      ChuTransform stem);
DialgebraHom identity_hom(const Dialgebra& d);
DialgebraHom compose_hom(const DialgebraHom& h, const DialgebraHom& k);
bool is_dialgebra_iso(const DialgebraHom& h);
DialgebraHom invert_hom(const DialgebraHom& h);

// All homomorphisms d1 -> d2, in the stem enumeration order.
std::vector<DialgebraHom> dialgebra_hom_set(const Dialgebra& d1,
                                            const Dialgebra& d2,
                                            const Budget& bud);
// Split-mono / split-epi checks by enumerating candidate partners.
bool is_section(const DialgebraHom& h, const Budget& bud);
bool is_retraction(const DialgebraHom& h, const Budget& bud);

Relation make_relation(ChuTransform leg1, ChuTransform leg2);
Relation graph_arrow(const ChuTransform& f);
// True when the graph pairing equalizes (p1 then f, p2) out of the product
// and the canonical mediator into the constructed equalizer is an iso.
bool check_graph_equalizer(const ChuTransform& f, const Budget& bud);

bool is_bisimulation(const Relation& rel, const ChuTransform& rho,
                     const Dialgebra& da, const Dialgebra& db);

struct HomGraphCheck {
  bool is_hom = false;
  bool graph_bisim_exists = false;
};
// The two fields agree on every input; the second is decided by searching
// structure maps on the graph object within the budget.
HomGraphCheck check_hom_iff_graph(const ChuTransform& stem,
                                  const Dialgebra& da, const Dialgebra& db,
                                  const Budget& bud);

struct DialgebraProduct {
  Dialgebra object;
  DialgebraHom p1, p2;
};
struct DialgebraCoproduct {
  Dialgebra object;
  DialgebraHom i1, i2;
};
DialgebraProduct product_dialgebra(const Dialgebra& d1, const Dialgebra& d2,
                                   const Budget& bud);
DialgebraCoproduct coproduct_dialgebra(const Dialgebra& d1,
                                       const Dialgebra& d2, const Budget& bud);

Bisimulation pullback_bisimulation(const DialgebraHom& h1,
                                   const DialgebraHom& h2, const Budget& bud);

// Same carrier, structure map dualized; applying it twice gives back the
// original structure map.
struct TildeDialgebra {
  ChuSpace carrier;
  ChuTransform structure;
  friend bool operator==(const TildeDialgebra&, const TildeDialgebra&) =
      default;
};
TildeDialgebra tilde_dialgebra(const Dialgebra& d);

// Compares the homomorphism square with its dualized counterpart; the two
// answers coincide for every stem.
bool check_tilde_correspondence(const ChuTransform& stem, const Dialgebra& da,
                                const Dialgebra& db);

}  // namespace chu
