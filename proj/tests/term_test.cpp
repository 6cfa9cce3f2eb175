#include "bproof/term.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace bproof;

TEST_CASE("namespace tokens are validated") {
  CHECK(Namespace("^").is_machinery());
  CHECK_FALSE(Namespace("u").is_machinery());
  CHECK(Namespace("abc_123").tag() == "abc_123");
  CHECK_THROWS_AS(Namespace(""), std::invalid_argument);
  CHECK_THROWS_AS(Namespace("a b"), std::invalid_argument);
  CHECK_THROWS_AS(Namespace("a^"), std::invalid_argument);
  CHECK_THROWS_AS(Namespace("x::y"), std::invalid_argument);
}

TEST_CASE("variable helpers and ordering") {
  CHECK(mvar(3) == Var{Namespace::machinery(), 3});
  CHECK(uvar(0) == Var{Namespace::user(), 0});
  CHECK(nvar("tag", 7) == Var{Namespace("tag"), 7});
  CHECK(mvar(0) != uvar(0));
  CHECK(mvar(1) < mvar(2));
  // Namespaces order lexicographically, then indexes.
  CHECK(Var{Namespace("a"), 9} < Var{Namespace("b"), 0});
}

TEST_CASE("structural equality ignores sharing and identity") {
  const Expr a = Expr::pair(Expr::var(uvar(0)), Expr::big());
  const Expr b = Expr::pair(Expr::var(uvar(0)), Expr::big());
  CHECK(term_eq(a, b));
  CHECK(a == b);
  const Expr c = Expr::pair(Expr::big(), Expr::var(uvar(0)));
  CHECK_FALSE(term_eq(a, c));

  // The same node reached twice compares equal by pointer fast path.
  const Expr shared = Expr::pow(a);
  CHECK(term_eq(shared, Expr::pow(a)));

  const Pred p = Pred::in(a, Expr::pow(b));
  const Pred q = Pred::in(b, Expr::pow(a));
  CHECK(term_eq(p, q));
  CHECK(term_eq(Term{p}, Term{q}));
  CHECK_FALSE(term_eq(Term{p}, Term{a}));
}

TEST_CASE("nameless binders make alpha-equivalence structural") {
  // forall x. x = x, built twice with different scaffolding, is one tree.
  const Pred one = Pred::all(Pred::eq(Expr::var(mvar(0)), Expr::var(mvar(0))));
  const Pred two = Pred::all(Pred::eq(Expr::var(mvar(0)), Expr::var(mvar(0))));
  CHECK(term_eq(one, two));
}

TEST_CASE("depth counts nodes on the longest path") {
  CHECK(depth(Expr::big()) == 1);
  CHECK(depth(Expr::var(uvar(0))) == 1);
  CHECK(depth(Expr::pair(Expr::big(), Expr::pow(Expr::big()))) == 3);
  // A binder over not (BIG = BIG): all / not / eq / big.
  const Pred p = Pred::all(Pred::neg(Pred::eq(Expr::big(), Expr::big())));
  CHECK(depth(p) == 4);
  CHECK(depth(Term{p}) == 4);
  // The comprehension body counts like any child.
  const Expr c = Expr::cmp(Expr::big(), Pred::eq(Expr::var(mvar(0)), Expr::big()));
  CHECK(depth(c) == 3);
}

TEST_CASE("dump renders constructor shapes verbatim") {
  CHECK(dump(Expr::big()) == "EBig");
  CHECK(dump(Expr::var(mvar(0))) == "EVar(^,0)");
  CHECK(dump(Expr::var(nvar("ns", 4))) == "EVar(ns,4)");
  CHECK(dump(Expr::pair(Expr::big(), Expr::big())) == "EPair(EBig, EBig)");
  CHECK(dump(Expr::choice(Expr::big())) == "EChoice(EBig)");
  CHECK(dump(Expr::prod(Expr::big(), Expr::pow(Expr::big()))) ==
        "EProd(EBig, EPow(EBig))");
  const Pred body = Pred::in(Expr::var(mvar(0)), Expr::big());
  CHECK(dump(Expr::cmp(Expr::big(), body)) == "ECmp(EBig, PIn(EVar(^,0), EBig))");
  CHECK(dump(Pred::all(Pred::eq(Expr::var(mvar(0)), Expr::var(mvar(0))))) ==
        "PAll(PEq(EVar(^,0), EVar(^,0)))");
  CHECK(dump(Pred::conj(Pred::neg(Pred::in(Expr::big(), Expr::big())),
                        Pred::imp(Pred::eq(Expr::big(), Expr::big()),
                                  Pred::eq(Expr::big(), Expr::big())))) ==
        "PAnd(PNot(PIn(EBig, EBig)), PImp(PEq(EBig, EBig), PEq(EBig, EBig)))");
  CHECK(dump(mvar(2)) == "^::2");
  CHECK(dump(uvar(5)) == "u::5");
  CHECK(dump(Term{Expr::big()}) == "EBig");
}
