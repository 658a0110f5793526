#pragma once

#include "chu/core.hpp"

// Hand-built spaces shared across test binaries.
namespace fx {

using namespace chu;

inline Alphabet gamma2() { return make_alphabet({"0", "1"}); }

inline Element g0() { return atom("0"); }
inline Element g1() { return atom("1"); }

// Sierpinski-style space: rows a:(0,0,1), b:(0,1,1) over columns u,v,w.
inline ChuSpace sier() {
  return make_space(
      gamma2(), make_fin_set({atom("a"), atom("b")}),
      make_fin_set({atom("u"), atom("v"), atom("w")}),
      {g0(), g0(), g1(), g0(), g1(), g1()});
}

// 2x2 "negation" table: rows a:(0,1), b:(1,0).
inline ChuSpace space_n() {
  return make_space(gamma2(), make_fin_set({atom("a"), atom("b")}),
                    make_fin_set({atom("x"), atom("y")}),
                    {g0(), g1(), g1(), g0()});
}

// Tensor unit: single point, one column per alphabet symbol.
inline ChuSpace unit_i() {
  return make_space(gamma2(), make_fin_set({atom("*")}),
                    make_fin_set({g0(), g1()}), {g0(), g1()});
}

inline ChuSpace unit_bot() { return dual(unit_i()); }

// Initial object <empty, !, {*}> and terminal <{*}, !, empty>.
inline ChuSpace zero_sp() {
  return make_space(gamma2(), FinSet{}, make_fin_set({atom("*")}), {});
}
inline ChuSpace top_sp() { return dual(zero_sp()); }

// Singleton-carrier probe <{c}, t, Gamma> with t(c,s)=s.
inline ChuSpace singleton_probe() {
  return make_space(gamma2(), make_fin_set({atom("c")}),
                    make_fin_set({g0(), g1()}), {g0(), g1()});
}

// Probe with each alphabet value in two columns; separates cocarrier points
// missed by a backward map.
inline ChuSpace doubled_probe() {
  return make_space(
      gamma2(), make_fin_set({atom("c")}),
      make_fin_set({atom("z0"), atom("z1"), atom("z2"), atom("z3")}),
      {g0(), g0(), g1(), g1()});
}

// Empty-carrier probe with two columns.
inline ChuSpace empty_carrier_probe() {
  return make_space(gamma2(), FinSet{},
                    make_fin_set({atom("q1"), atom("q2")}), {});
}

// Constant endotransform of sier() hitting only row a.
inline ChuTransform const_a() {
  ChuSpace s = sier();
  FinMap fwd = make_fin_map_by(s.carrier, s.carrier,
                               [](const Element&) { return atom("a"); });
  FinMap bwd = make_fin_map(
      s.cocarrier, s.cocarrier,
      {{atom("u"), atom("u")}, {atom("v"), atom("u")}, {atom("w"), atom("w")}});
  return make_transform(s, s, fwd, bwd);
}

// Self-inverse swap on space_n().
inline ChuTransform n_swap() {
  ChuSpace n = space_n();
  FinMap fwd = make_fin_map(n.carrier, n.carrier,
                            {{atom("a"), atom("b")}, {atom("b"), atom("a")}});
  FinMap bwd = make_fin_map(n.cocarrier, n.cocarrier,
                            {{atom("x"), atom("y")}, {atom("y"), atom("x")}});
  return make_transform(n, n, fwd, bwd);
}

// Every Gamma_2 space with carrier/cocarrier sizes <= 2 (distinct labels).
inline std::vector<ChuSpace> universe_2x2() {
  std::vector<ChuSpace> out;
  const std::vector<std::vector<Element>> carriers = {
      {}, {atom("a")}, {atom("a"), atom("b")}};
  const std::vector<std::vector<Element>> cocarriers = {
      {}, {atom("x")}, {atom("x"), atom("y")}};
  for (const auto& ce : carriers)
    for (const auto& xe : cocarriers) {
      const std::size_t cells = ce.size() * xe.size();
      for (unsigned bits = 0; bits < (1u << cells); ++bits) {
        std::vector<Element> matrix;
        matrix.reserve(cells);
        for (std::size_t k = 0; k < cells; ++k)
          matrix.push_back((bits >> k) & 1 ? g1() : g0());
        out.push_back(make_space(gamma2(), make_fin_set(ce), make_fin_set(xe),
                                 std::move(matrix)));
      }
    }
  return out;
}

}  // namespace fx
