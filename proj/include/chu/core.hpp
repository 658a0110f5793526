#pragma once

#include "chu/kernel.hpp"

namespace chu {

struct Alphabet {
  FinSet atoms;
  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

Alphabet make_alphabet(FinSet atoms);
Alphabet make_alphabet(std::vector<std::string> names);

// Matrix is row-major, |carrier| x |cocarrier|, entries are atoms of gamma.
struct ChuSpace {
  Alphabet gamma;
  FinSet carrier, cocarrier;
  std::vector<Element> matrix;
  friend bool operator==(const ChuSpace&, const ChuSpace&) = default;

  const Element& at(std::size_t i, std::size_t j) const {
    return matrix[i * cocarrier.size() + j];
  }
  const Element& at(const Element& a, const Element& x) const;
};

ChuSpace make_space(Alphabet gamma, FinSet carrier, FinSet cocarrier,
                    std::vector<Element> matrix);

struct ChuTransform {
  ChuSpace dom, cod;
  FinMap forward;   // dom.carrier -> cod.carrier
  FinMap backward;  // cod.cocarrier -> dom.cocarrier
  friend bool operator==(const ChuTransform&, const ChuTransform&) = default;
};

ChuTransform make_transform(ChuSpace dom, ChuSpace cod, FinMap forward,
                            FinMap backward);
ChuTransform identity_transform(const ChuSpace& a);
// Diagrammatic order: compose(f, g) is "f then g".
ChuTransform compose(const ChuTransform& f, const ChuTransform& g);

ChuSpace dual(const ChuSpace& a);
ChuTransform dual_transform(const ChuTransform& f);

bool is_extensional(const ChuSpace& a);   // no repeated columns
bool is_separable(const ChuSpace& a);     // no repeated rows
bool is_biextensional(const ChuSpace& a);

struct Collapse {
  ChuSpace space;
  FinMap carrier_proj;    // carrier -> classes
  FinMap cocarrier_proj;  // cocarrier -> classes
};
Collapse collapse(const ChuSpace& a);
ChuTransform collapse_transform(const ChuTransform& f);

bool is_monic(const ChuTransform& f);
bool is_epic(const ChuTransform& f);
// Categorical probe: f monic iff post-composition with f is injective on
// hom(C, dom f) for every probe C.
bool brute_monic(const ChuTransform& f, const std::vector<ChuSpace>& probes,
                 const Budget& b);
ChuTransform invert(const ChuTransform& f);

std::vector<ChuTransform> hom_set(const ChuSpace& a, const ChuSpace& b,
                                  const Budget& budget);
long long hom_count(const ChuSpace& a, const ChuSpace& b, const Budget& budget);

ChuSpace realize_set(const FinSet& points);
// Opens must contain the empty set and all of points and be closed under
// pairwise union and intersection. Columns are characteristic tables.
ChuSpace realize_topology(const FinSet& points, const std::vector<FinSet>& opens);
bool is_topological(const ChuSpace& a);

}  // namespace chu
