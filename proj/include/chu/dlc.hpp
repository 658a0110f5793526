#pragma once

#include "chu/dialgebra.hpp"

namespace chu {

// Functor rows of a double cell: F, G act on the top carrier and K, H on the
// bottom one.  Profiles compare syntactically, descriptor by descriptor.
struct Profile {
  FunctorDescriptor f, g, k, h;
  friend bool operator==(const Profile&, const Profile&) = default;
};

// Index set together with the two halves of the matrix: a positive row into
// F+A |_| K+B and a negative row into G-A |_| H-B, entries tagged Inl for the
// top half and Inr for the bottom one.
struct SuperMatrix {
  FinSet sigma;
  FinMap s_pos, s_neg;
  friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;
};

struct ZeroCell {
  Profile profile;
  Dialgebra top, bottom;
  SuperMatrix sm;
  friend bool operator==(const ZeroCell&, const ZeroCell&) = default;
};

// f runs along the top row, g runs backwards along the bottom:
// f: src.top -> dst.top and g: dst.bottom -> src.bottom.
struct HorizontalCell {
  ZeroCell src, dst;
  DialgebraHom f, g;
  friend bool operator==(const HorizontalCell&, const HorizontalCell&) = default;
};

// Componentwise maps between two cells on the same pair of carriers:
// mu: F1 A -> F2 A, nu: G1 A -> G2 A, theta: K1 B -> K2 B, zeta: H1 B -> H2 B.
struct VerticalCell {
  ZeroCell src, dst;
  ChuTransform mu, nu, theta, zeta;
  friend bool operator==(const VerticalCell&, const VerticalCell&) = default;
};

// A square of cells; equality of cubicles is equality of boundaries.
struct Cubicle {
  HorizontalCell top, bottom;
  VerticalCell left, right;
  friend bool operator==(const Cubicle&, const Cubicle&) = default;
};

// Codomain sets for the two matrix halves, built from the profile rows
// applied to the given carriers.
DisjointUnion positive_union(const Profile& p, const ChuSpace& a,
                             const ChuSpace& b);
DisjointUnion negative_union(const Profile& p, const ChuSpace& a,
                             const ChuSpace& b);
SuperMatrix empty_super_matrix(const Profile& p, const ChuSpace& a,
                               const ChuSpace& b);

ZeroCell make_zero_cell(Profile profile, Dialgebra top, Dialgebra bottom,
                        SuperMatrix sm);

HorizontalCell make_horizontal(const ZeroCell& src, const ZeroCell& dst,
                               DialgebraHom f, DialgebraHom g);
HorizontalCell identity_horizontal(const ZeroCell& p);
HorizontalCell compose_horizontal(const HorizontalCell& h,
                                  const HorizontalCell& k);

VerticalCell make_vertical(const ZeroCell& src, const ZeroCell& dst,
                           ChuTransform mu, ChuTransform nu, ChuTransform theta,
                           ChuTransform zeta);
VerticalCell identity_vertical(const ZeroCell& p);
VerticalCell compose_vertical(const VerticalCell& v, const VerticalCell& w);

Cubicle make_cubicle(const HorizontalCell& top, const VerticalCell& left,
                     const VerticalCell& right, const HorizontalCell& bottom);
Cubicle videntity_cubicle(const HorizontalCell& h);
Cubicle hidentity_cubicle(const VerticalCell& v);
// Composition along a shared vertical edge (right of c = left of d).
Cubicle hcompose_cubicles(const Cubicle& c, const Cubicle& d);
// Composition along a shared horizontal edge (bottom of c = top of d).
Cubicle vcompose_cubicles(const Cubicle& c, const Cubicle& d);

// Horizontal dual: swaps the two dialgebra rows and re-tags every matrix
// entry to the other half.  Horizontal cells reverse direction.
ZeroCell sharp_zero(const ZeroCell& p);
HorizontalCell sharp_horizontal(const HorizontalCell& h);
VerticalCell sharp_vertical(const VerticalCell& v);
Cubicle sharp_cubicle(const Cubicle& c);

// Vertical dual: dualizes both structure maps, turns each profile row into
// its tilde, and swaps the matrix halves.  Vertical cells reverse direction.
ZeroCell star_zero(const ZeroCell& p);
HorizontalCell star_horizontal(const HorizontalCell& h);
VerticalCell star_vertical(const VerticalCell& v);
Cubicle star_cubicle(const Cubicle& c);

// sharp then star; the two orders are checked to agree.
ZeroCell central_dual(const ZeroCell& p);
HorizontalCell central_dual(const HorizontalCell& h);
VerticalCell central_dual(const VerticalCell& v);
Cubicle central_dual(const Cubicle& c);

// All horizontal cells src -> dst within budget, enumerated from the carrier
// hom-sets and filtered by the cell conditions.
std::vector<HorizontalCell> horizontal_cells(const ZeroCell& src,
                                             const ZeroCell& dst,
                                             const Budget& bud);
// All cubicles with left edge u and right edge v.
std::vector<Cubicle> cubicles_between(const VerticalCell& u,
                                      const VerticalCell& v, const Budget& bud);

// A finite sample of cells closed enough to exercise the category axioms;
// every composable combination found in the lists is formed and checked.
struct DlcFixture {
  std::vector<ZeroCell> cells;
  std::vector<HorizontalCell> horizontals;
  std::vector<VerticalCell> verticals;
  std::vector<Cubicle> cubicles;
};

struct AxiomReport {
  int identity_checks = 0;
  int boundary_checks = 0;
  int unit_checks = 0;
  int associativity_checks = 0;
  int interchange_checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// A1 identity endpoints, A2 endpoints of composites, A3 unit laws,
// A4 associativity, plus interchange on every composable 2x2 grid.
AxiomReport check_internal_axioms(const DlcFixture& fixture);

struct HorizontalProduct {
  VerticalCell w;
  Cubicle p1, p2;
};

// Binary product of two empty-index vertical cells: the top carriers combine
// through the with connective and the bottom ones through plus.  Both rows of
// both profiles must preserve the relevant (co)products at these instances.
// The projection cubicles are checked universal against probe cones drawn
// from the inputs, within budget.
HorizontalProduct horizontal_product(const VerticalCell& v1,
                                     const VerticalCell& v2, const Budget& bud);

// A pair of one-index cells over the all-Id profile whose positive entries
// carry opposite tags, so no probe cell admits cells into both.
std::pair<ZeroCell, ZeroCell> counterexample_fixture(const Alphabet& gamma);

// True when no probe cone out of q covers both p1 and p2.  Mismatched
// profiles, index sets, or entry tags settle the question without
// enumeration; otherwise the cell sets are enumerated within budget.
bool check_no_cone(const ZeroCell& p1, const ZeroCell& p2, const ZeroCell& q,
                   const Budget& bud);

}  // namespace chu
