#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chu {

// All library failures are typed exceptions. exit_class groups them for the CLI:
// 1 = semantic property violated, 2 = malformed/ill-typed input, 3 = budget.
struct Error : std::runtime_error {
  std::string code;
  int exit_class;
  Error(std::string c, const std::string& msg, int cls)
      : std::runtime_error(c + ": " + msg), code(std::move(c)), exit_class(cls) {}
};

#define CHU_DEFINE_ERROR(Name, cls)                                        \
  struct Name : Error {                                                    \
    explicit Name(const std::string& msg) : Error(#Name, msg, cls) {}      \
  };

// input-shaped errors
CHU_DEFINE_ERROR(InputError, 2)
CHU_DEFINE_ERROR(ElementNotInSet, 2)
CHU_DEFINE_ERROR(EmptyGamma, 2)
CHU_DEFINE_ERROR(MatrixNotTotal, 2)
CHU_DEFINE_ERROR(EntryOutsideGamma, 2)
CHU_DEFINE_ERROR(DomainMismatch, 2)
CHU_DEFINE_ERROR(GammaMismatch, 2)
CHU_DEFINE_ERROR(NotComposable, 2)
CHU_DEFINE_ERROR(NotParallel, 2)
CHU_DEFINE_ERROR(ShapeMismatch, 2)
CHU_DEFINE_ERROR(VarianceError, 2)
CHU_DEFINE_ERROR(ProfileMismatch, 2)
CHU_DEFINE_ERROR(ProfileShapeMismatch, 2)
CHU_DEFINE_ERROR(SuperMatrixNotTotal, 2)
CHU_DEFINE_ERROR(TagOutsideUnion, 2)
CHU_DEFINE_ERROR(CarrierMismatch, 2)
CHU_DEFINE_ERROR(SigmaMismatch, 2)
CHU_DEFINE_ERROR(SigmaNonEmpty, 2)
CHU_DEFINE_ERROR(BoundaryMismatch, 2)

// property violations
CHU_DEFINE_ERROR(AdjointnessViolated, 1)
CHU_DEFINE_ERROR(NotBijective, 1)
CHU_DEFINE_ERROR(NotATopology, 1)
CHU_DEFINE_ERROR(SquareViolated, 1)
CHU_DEFINE_ERROR(RelationNotMonic, 1)
CHU_DEFINE_ERROR(NotPreserved, 1)
CHU_DEFINE_ERROR(PHSViolated, 1)
CHU_DEFINE_ERROR(NHSViolated, 1)
CHU_DEFINE_ERROR(PVSViolated, 1)
CHU_DEFINE_ERROR(NVSViolated, 1)
CHU_DEFINE_ERROR(FluidSquareViolated, 1)
CHU_DEFINE_ERROR(ParallelogramViolated, 1)
CHU_DEFINE_ERROR(PropertyViolation, 1)

struct BudgetExceeded : Error {
  long long count;
  BudgetExceeded(const std::string& msg, long long n)
      : Error("BudgetExceeded", msg, 3), count(n) {}
};

struct ParseError : Error {
  int line;
  ParseError(int ln, const std::string& reason)
      : Error("ParseError", "line " + std::to_string(ln) + ": " + reason, 2), line(ln) {}
};

#undef CHU_DEFINE_ERROR

// Inductive element universe. Fn stores flattened (key,value,key,value,...)
// sorted by key; Cls stores sorted distinct members, nonempty.
struct Element {
  enum class Kind : std::uint8_t { Atom, Pair, Inl, Inr, Fn, Cls };
  Kind kind = Kind::Atom;
  std::string name;            // Atom only
  std::vector<Element> kids;

  friend bool operator==(const Element&, const Element&) = default;
};

std::strong_ordering operator<=>(const Element& a, const Element& b);
inline bool operator<(const Element& a, const Element& b) { return (a <=> b) < 0; }

Element atom(std::string name);
Element pair(Element first, Element second);
Element inl(Element e);
Element inr(Element e);
Element fn_table(std::vector<std::pair<Element, Element>> entries);
Element cls(std::vector<Element> members);

const Element& pair_first(const Element& p);
const Element& pair_second(const Element& p);
const Element& tagged_payload(const Element& e);  // Inl/Inr
bool is_inl(const Element& e);
bool is_inr(const Element& e);
Element swap_tag(const Element& e);  // Inl(x) <-> Inr(x)

std::string to_string(const Element& e);

struct FinSet {
  std::vector<Element> elems;  // sorted, distinct
  friend bool operator==(const FinSet&, const FinSet&) = default;
  std::size_t size() const { return elems.size(); }
  bool empty() const { return elems.empty(); }
  bool contains(const Element& e) const;
  std::optional<std::size_t> index_of(const Element& e) const;
};

FinSet make_fin_set(std::vector<Element> elems);

// Total map between finite sets; values[i] is the image of dom.elems[i].
struct FinMap {
  FinSet dom, cod;
  std::vector<Element> values;
  friend bool operator==(const FinMap&, const FinMap&) = default;
  const Element& operator()(const Element& x) const;
  const Element& at_index(std::size_t i) const { return values[i]; }
};

FinMap make_fin_map(FinSet dom, FinSet cod,
                    const std::vector<std::pair<Element, Element>>& table);
FinMap make_fin_map_by(FinSet dom, FinSet cod,
                       const std::function<Element(const Element&)>& fn);
FinMap identity_map(const FinSet& s);
FinMap compose_maps(const FinMap& f, const FinMap& g);  // x -> g(f(x))
bool is_injective(const FinMap& m);
bool is_surjective(const FinMap& m);
FinMap invert_map(const FinMap& m);

// Fn element <-> FinMap conversions.
FinMap fn_to_map(const Element& fn, const FinSet& dom, const FinSet& cod);
Element map_to_fn(const FinMap& m);

struct Budget {
  long long max_functions = 200000;
  long long max_elements = 100000;
};

// All functions dom -> cod as Fn elements, ordered lexicographically by the
// tuple of values (cod order), i.e. the last key varies fastest.
std::vector<Element> enumerate_functions(const FinSet& dom, const FinSet& cod,
                                         const Budget& b);

struct DisjointUnion {
  FinSet set;
  FinMap in_left, in_right;
};
DisjointUnion disjoint_union(const FinSet& s, const FinSet& t);

struct Cartesian {
  FinSet set;
  FinMap proj1, proj2;
};
Cartesian cartesian(const FinSet& s, const FinSet& t);

struct Quotient {
  FinSet classes;     // Cls elements
  FinMap projection;  // s -> classes
  long long merges;   // effective unions performed
};
Quotient quotient(const FinSet& s,
                  const std::vector<std::pair<Element, Element>>& pairs);

}  // namespace chu
