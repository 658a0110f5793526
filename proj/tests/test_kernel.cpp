#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chu/kernel.hpp"

using namespace chu;

TEST_CASE("element ordering is kind then name then kids") {
  Element a = atom("a"), b = atom("b");
  CHECK(a < b);
  CHECK(a == atom("a"));
  CHECK(a < pair(a, a));          // Atom before Pair
  CHECK(pair(a, a) < inl(a));     // Pair before Inl
  CHECK(inl(b) < inr(a));         // Inl before Inr regardless of payload
  CHECK(pair(a, a) < pair(a, b));
  CHECK(pair(a, b) < pair(b, a));
}

TEST_CASE("tag helpers") {
  Element a = atom("a");
  CHECK(is_inl(inl(a)));
  CHECK(is_inr(inr(a)));
  CHECK(tagged_payload(inl(a)) == a);
  CHECK(swap_tag(inl(a)) == inr(a));
  CHECK(swap_tag(inr(a)) == inl(a));
  CHECK_THROWS_AS(swap_tag(a), InputError);
  CHECK_THROWS_AS((void)tagged_payload(pair(a, a)), InputError);
  CHECK_THROWS_AS((void)pair_first(a), InputError);
}

TEST_CASE("fn_table sorts by key and rejects duplicates") {
  Element f = fn_table({{atom("y"), atom("1")}, {atom("x"), atom("0")}});
  CHECK(to_string(f) == "{x->0,y->1}");
  CHECK_THROWS_AS(fn_table({{atom("x"), atom("0")}, {atom("x"), atom("1")}}),
                  InputError);
}

TEST_CASE("cls sorts, dedups, and must be nonempty") {
  Element c = cls({atom("b"), atom("a"), atom("b")});
  CHECK(to_string(c) == "[a,b]");
  CHECK_THROWS_AS(cls({}), InputError);
}

TEST_CASE("to_string shapes") {
  CHECK(to_string(pair(atom("a"), inl(atom("b")))) == "(a,L:b)");
  CHECK(to_string(inr(atom("z"))) == "R:z");
}

TEST_CASE("make_fin_set sorts and dedups") {
  FinSet s = make_fin_set({atom("b"), atom("a"), atom("a")});
  REQUIRE(s.size() == 2);
  CHECK(s.elems[0] == atom("a"));
  CHECK(s.contains(atom("b")));
  CHECK(!s.contains(atom("c")));
  CHECK(s.index_of(atom("b")) == std::size_t{1});
  CHECK(!s.index_of(atom("q")).has_value());
}

TEST_CASE("make_fin_map validates totality and membership") {
  FinSet d = make_fin_set({atom("x"), atom("y")});
  FinSet c = make_fin_set({atom("0"), atom("1")});
  FinMap m = make_fin_map(d, c, {{atom("x"), atom("1")}, {atom("y"), atom("0")}});
  CHECK(m(atom("x")) == atom("1"));
  CHECK_THROWS_AS(m(atom("z")), ElementNotInSet);
  CHECK_THROWS_AS(make_fin_map(d, c, {{atom("x"), atom("1")}}), InputError);
  CHECK_THROWS_AS(
      make_fin_map(d, c, {{atom("x"), atom("1")}, {atom("q"), atom("0")}}),
      ElementNotInSet);
  CHECK_THROWS_AS(
      make_fin_map(d, c, {{atom("x"), atom("7")}, {atom("y"), atom("0")}}),
      ElementNotInSet);
  CHECK_THROWS_AS(
      make_fin_map(d, c,
                   {{atom("x"), atom("1")}, {atom("x"), atom("0")}}),
      InputError);
}

TEST_CASE("map algebra") {
  FinSet d = make_fin_set({atom("x"), atom("y")});
  FinSet c = make_fin_set({atom("0"), atom("1")});
  FinMap f = make_fin_map(d, c, {{atom("x"), atom("1")}, {atom("y"), atom("0")}});
  FinMap swap = make_fin_map(c, c, {{atom("0"), atom("1")}, {atom("1"), atom("0")}});
  FinMap g = compose_maps(f, swap);
  CHECK(g(atom("x")) == atom("0"));
  CHECK(g(atom("y")) == atom("1"));
  CHECK(compose_maps(identity_map(d), f) == f);
  CHECK(compose_maps(f, identity_map(c)) == f);
  CHECK(is_injective(f));
  CHECK(is_surjective(f));
  FinMap finv = invert_map(f);
  CHECK(compose_maps(f, finv) == identity_map(d));
  CHECK(compose_maps(finv, f) == identity_map(c));
  FinMap con = make_fin_map_by(d, c, [](const Element&) { return atom("0"); });
  CHECK(!is_injective(con));
  CHECK(!is_surjective(con));
  CHECK_THROWS_AS(invert_map(con), NotBijective);
  CHECK_THROWS_AS(compose_maps(f, f), NotComposable);
}

TEST_CASE("fn element round trip") {
  FinSet d = make_fin_set({atom("x"), atom("y")});
  FinSet c = make_fin_set({atom("0"), atom("1")});
  FinMap f = make_fin_map(d, c, {{atom("x"), atom("1")}, {atom("y"), atom("0")}});
  CHECK(fn_to_map(map_to_fn(f), d, c) == f);
  CHECK_THROWS_AS(fn_to_map(map_to_fn(f), make_fin_set({atom("x")}), c),
                  DomainMismatch);
  CHECK_THROWS_AS(fn_to_map(atom("x"), d, c), InputError);
}

TEST_CASE("enumerate_functions count and order") {
  FinSet d = make_fin_set({atom("x"), atom("y")});
  FinSet c = make_fin_set({atom("0"), atom("1"), atom("2")});
  auto fs = enumerate_functions(d, c, Budget{});
  REQUIRE(fs.size() == 9);  // 3^2
  CHECK(to_string(fs.front()) == "{x->0,y->0}");
  CHECK(to_string(fs[1]) == "{x->0,y->1}");  // last key varies fastest
  CHECK(to_string(fs.back()) == "{x->2,y->2}");

  auto none = enumerate_functions(d, FinSet{}, Budget{});
  CHECK(none.empty());
  auto one = enumerate_functions(FinSet{}, c, Budget{});
  REQUIRE(one.size() == 1);
  CHECK(to_string(one[0]) == "{}");

  Budget tight;
  tight.max_functions = 8;
  CHECK_THROWS_AS(enumerate_functions(d, c, tight), BudgetExceeded);
}

TEST_CASE("disjoint union and cartesian product") {
  FinSet s = make_fin_set({atom("a"), atom("b")});
  FinSet t = make_fin_set({atom("a")});
  DisjointUnion u = disjoint_union(s, t);
  REQUIRE(u.set.size() == 3);
  CHECK(u.in_left(atom("a")) == inl(atom("a")));
  CHECK(u.in_right(atom("a")) == inr(atom("a")));

  Cartesian p = cartesian(s, t);
  REQUIRE(p.set.size() == 2);
  CHECK(p.proj1(pair(atom("b"), atom("a"))) == atom("b"));
  CHECK(p.proj2(pair(atom("b"), atom("a"))) == atom("a"));
}

TEST_CASE("quotient by a chain of pairs") {
  FinSet s = make_fin_set({atom("0"), atom("1"), atom("2")});
  Quotient q = quotient(s, {{atom("0"), atom("1")}, {atom("1"), atom("2")}});
  REQUIRE(q.classes.size() == 1);  // single class
  CHECK(q.merges == 2);
  CHECK(q.projection(atom("2")) == cls({atom("0"), atom("1"), atom("2")}));

  Quotient r = quotient(s, {});
  CHECK(r.classes.size() == 3);
  CHECK(r.merges == 0);
  CHECK(r.projection(atom("1")) == cls({atom("1")}));

  CHECK_THROWS_AS(quotient(s, {{atom("0"), atom("9")}}), ElementNotInSet);
}

TEST_CASE("budget defaults") {
  Budget b;
  CHECK(b.max_functions == 200000);
  CHECK(b.max_elements == 100000);
}
