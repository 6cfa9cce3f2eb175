#include "bproof/syntax.hpp"

#include <doctest.h>

#include <string>
#include <vector>

#include "bproof/binder.hpp"
#include "bproof/errors.hpp"

using namespace bproof;

TEST_CASE("free identifiers intern per namespace in first-occurrence order") {
  SymbolTable table;
  const Var a = table.intern("u", "a");
  const Var b = table.intern("u", "b");
  const Var na = table.intern("ns", "a");
  CHECK(a == uvar(0));
  CHECK(b == uvar(1));
  CHECK(na == nvar("ns", 0));
  CHECK(table.intern("u", "a") == a);
  REQUIRE(table.lookup("u", "b") != nullptr);
  CHECK(table.lookup("u", "b")->var == b);
  CHECK(table.lookup("u", "zz") == nullptr);
  const auto entries = table.entries();
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "a");
  CHECK(entries[1].name == "b");
  CHECK(entries[2].ns == "ns");
}

TEST_CASE("fixed parses hit the expected trees") {
  CHECK(dump(parse_pred("a = b")) == "PEq(EVar(u,0), EVar(u,1))");
  CHECK(dump(parse_pred("a : S")) == "PIn(EVar(u,0), EVar(u,1))");
  CHECK(dump(parse_pred("!x.(x : S)")) == "PAll(PIn(EVar(^,0), EVar(u,0)))");
  CHECK(dump(parse_pred("#x.(x = x)")) ==
        "PNot(PAll(PNot(PEq(EVar(^,0), EVar(^,0)))))");
  CHECK(dump(parse_pred("!x.(#y.(y |-> x : S))")) ==
        "PAll(PNot(PAll(PNot(PIn(EPair(EVar(^,0), EVar(^,1)), EVar(u,0))))))");
  CHECK(dump(parse_pred("ns::a = a")) == "PEq(EVar(ns,0), EVar(u,0))");
  CHECK(dump(parse_expr("BIG")) == "EBig");
  CHECK(dump(parse_expr("POW(CHOICE(a))")) == "EPow(EChoice(EVar(u,0)))");
  CHECK(dump(parse_expr("{x : S | x = a}")) ==
        "ECmp(EVar(u,0), PEq(EVar(^,0), EVar(u,1)))");
}

TEST_CASE("operator precedence and associativity") {
  // Maplets associate right and bind looser than products.
  CHECK(term_eq(parse_expr("a |-> b |-> c"),
                Expr::pair(Expr::var(uvar(0)),
                           Expr::pair(Expr::var(uvar(1)), Expr::var(uvar(2))))));
  CHECK(term_eq(parse_expr("a * b * c"),
                Expr::prod(Expr::prod(Expr::var(uvar(0)), Expr::var(uvar(1))),
                           Expr::var(uvar(2)))));
  CHECK(term_eq(parse_expr("a |-> b * c"),
                Expr::pair(Expr::var(uvar(0)),
                           Expr::prod(Expr::var(uvar(1)), Expr::var(uvar(2))))));
  CHECK(term_eq(parse_expr("(a |-> b) * c"),
                Expr::prod(Expr::pair(Expr::var(uvar(0)), Expr::var(uvar(1))),
                           Expr::var(uvar(2)))));

  // not > & > or > => > <=>, with => right-associative.
  const Pred p = parse_pred("not a = b & c : S");
  CHECK(term_eq(p, Pred::conj(Pred::neg(parse_pred("a = b")),
                              Pred::in(Expr::var(uvar(2)), Expr::var(uvar(3))))));
  CHECK(term_eq(parse_pred("a = b & c = d or e = f"),
                Pred::imp(Pred::neg(Pred::conj(parse_pred("a = b"),
                                               Pred::eq(Expr::var(uvar(2)),
                                                        Expr::var(uvar(3))))),
                          Pred::eq(Expr::var(uvar(4)), Expr::var(uvar(5))))));
  {
    SymbolTable t;
    const Pred chain = parse_pred_with(t, "a = b => c = d => a = b");
    const Pred ab = parse_pred_with(t, "a = b");
    const Pred cd = parse_pred_with(t, "c = d");
    CHECK(term_eq(chain, Pred::imp(ab, Pred::imp(cd, ab))));
  }
  {
    SymbolTable t;
    const Pred iff = parse_pred_with(t, "a = b <=> c = d");
    const Pred ab = parse_pred_with(t, "a = b");
    const Pred cd = parse_pred_with(t, "c = d");
    CHECK(term_eq(iff, Pred::conj(Pred::imp(ab, cd), Pred::imp(cd, ab))));
  }
}

TEST_CASE("binder bodies bind tightest occurrence first") {
  // The same source name in nested binders refers to the innermost one.
  const Pred p = parse_pred("!x.(!x.(x = x))");
  CHECK(dump(p) == "PAll(PAll(PEq(EVar(^,0), EVar(^,0))))");
}

TEST_CASE("substitution sugar instantiates a one-variable binding") {
  SymbolTable table;
  const Pred p = parse_pred_with(table, "[x := a] (x : S)");
  const Pred expected = parse_pred_with(table, "a : S");
  CHECK(term_eq(p, expected));

  // The bound name is local to the brackets.
  SymbolTable t2;
  const Pred q = parse_pred_with(t2, "[x := a] (x |-> a : x)");
  CHECK(term_eq(q, parse_pred_with(t2, "a |-> a : a")));
}

TEST_CASE("comments and whitespace are ignored") {
  const Pred p = parse_pred("a = b // trailing words\n");
  CHECK(term_eq(p, parse_pred("  a  =  b  ")));
}

TEST_CASE("a shared table makes names stable across parses") {
  SymbolTable table;
  const Pred p1 = parse_pred_with(table, "a : S");
  const Pred p2 = parse_pred_with(table, "a = b");
  const auto* in1 = std::get_if<PIn>(&p1.node().v);
  const auto* eq2 = std::get_if<PEq>(&p2.node().v);
  REQUIRE(in1 != nullptr);
  REQUIRE(eq2 != nullptr);
  CHECK(term_eq(in1->elem, eq2->left));
}

TEST_CASE("the machinery token is rejected at the lexer") {
  CHECK_THROWS_AS(parse_pred("^ = a"), UnboundNamespaceToken);
  CHECK_THROWS_AS(parse_pred("a = b & ^0 : S"), UnboundNamespaceToken);
  CHECK_THROWS_AS(parse_expr("POW(^)"), UnboundNamespaceToken);
  try {
    parse_pred("a = ^");
    FAIL("expected UnboundNamespaceToken");
  } catch (const UnboundNamespaceToken& e) {
    CHECK(e.span().begin == 4);
    CHECK(e.span().end == 5);
  }
}

TEST_CASE("multi-variable binders point at the nested form") {
  try {
    parse_pred("!x,y.(x = y)");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    const std::string what = e.what();
    CHECK(what.find("single-variable") != std::string::npos);
    CHECK(what.find("nest") != std::string::npos);
  }
}

TEST_CASE("display names are reserved for bound variables") {
  // Free occurrences of x<digits> would collide with printed binders.
  CHECK_THROWS_AS(parse_pred("x0 = a"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("x12"), SyntaxError);
  // As bound names they are fine, and x alone is an ordinary identifier.
  CHECK(dump(parse_pred("!x0.(x0 = x0)")) == "PAll(PEq(EVar(^,0), EVar(^,0)))");
  CHECK(dump(parse_pred("x = x")) == "PEq(EVar(u,0), EVar(u,0))");
  // Qualified names are untouched: only the default namespace is at risk.
  CHECK(dump(parse_expr("ns::x0")) == "EVar(ns,0)");
}

TEST_CASE("malformed input fails with a syntax error") {
  CHECK_THROWS_AS(parse_pred(""), SyntaxError);
  CHECK_THROWS_AS(parse_pred("a ="), SyntaxError);
  CHECK_THROWS_AS(parse_pred("a = b c"), SyntaxError);
  CHECK_THROWS_AS(parse_pred("(a = b"), SyntaxError);
  CHECK_THROWS_AS(parse_pred("a = b)"), SyntaxError);
  CHECK_THROWS_AS(parse_pred("!x.(x = x"), SyntaxError);
  CHECK_THROWS_AS(parse_pred("!x(x = x)"), SyntaxError);
  CHECK_THROWS_AS(parse_pred("a"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("::a"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("a |->"), SyntaxError);
  CHECK_THROWS_AS(parse_expr("{x : S}"), SyntaxError);
  CHECK_THROWS_AS(parse_pred("[x = a] (x : S)"), SyntaxError);
  CHECK_THROWS_AS(parse_pred("not"), SyntaxError);
}

TEST_CASE("printer spells the sugar back") {
  CHECK(print_pred(parse_pred("a = b or c = d")) == "v0 = v1 or v2 = v3");
  CHECK(print_pred(parse_pred("a = b <=> c = d")) == "v0 = v1 <=> v2 = v3");
  CHECK(print_pred(parse_pred("#x.(x : S)")) == "#x0.(x0 : v0)");
  CHECK(print_pred(parse_pred("!x.(x : v0 => #y.(y |-> x : v1))")) ==
        "!x0.(x0 : v0 => #x1.(x1 |-> x0 : v1))");
  CHECK(print_pred(parse_pred("not (a = b & c = d)")) == "not (v0 = v1 & v2 = v3)");
  CHECK(print_pred(parse_pred("not a = b & c = d")) == "not v0 = v1 & v2 = v3");
  CHECK(print_expr(parse_expr("{x : S | x = a}")) == "{x0 : v0 | x0 = v1}");
  CHECK(print_expr(parse_expr("a |-> b * c")) == "v0 |-> v1 * v2");
  CHECK(print_expr(parse_expr("(a |-> b) * c")) == "(v0 |-> v1) * v2");
  CHECK(print_pred(Pred::eq(Expr::var(nvar("ns", 0)), Expr::var(uvar(1)))) ==
        "ns::v0 = v1");
}

TEST_CASE("dangling machinery leaves print unparseably") {
  const std::string s = print_pred(Pred::eq(Expr::var(mvar(0)), Expr::var(uvar(1))));
  CHECK(s == "^0 = v1");
  CHECK_THROWS_AS(parse_pred(s), SyntaxError);
}

TEST_CASE("alpha-variant sources parse to the same term") {
  CHECK(term_eq(parse_pred("!x.(x = x)"), parse_pred("!y.(y = y)")));
  CHECK(term_eq(parse_pred("#a.(a : S)"), parse_pred("#b.(b : S)")));
  CHECK(term_eq(parse_expr("{p : S | p = a}"), parse_expr("{q : S | q = a}")));
}

TEST_CASE("print then parse is the identity on fixed samples") {
  const std::vector<std::string> samples = {
      "a = b",
      "a : S & b : T",
      "not (a = b or c : S)",
      "a = b => (c : S => a = b)",
      "a = b <=> b = a",
      "!x.(x : S => #y.(x |-> y : T & y = x))",
      "#x.(!y.(y : x) <=> x = BIG)",
      "[z := CHOICE(S)] (z : S)",
      "POW(a) * b |-> CHOICE({x : a | x : b}) = c",
      "!x.(!y.(!z.(x |-> (y * z) : POW(x) => y = z)))",
  };
  for (const std::string& s : samples) {
    CAPTURE(s);
    const Pred once = parse_pred(s);
    const Pred again = parse_pred(print_pred(once));
    CHECK(term_eq(once, again));
  }
}
