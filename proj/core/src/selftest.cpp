#include "bproof/selftest.hpp"

#include <string>

#include "bproof/binder.hpp"
#include "bproof/derived.hpp"
#include "bproof/syntax.hpp"

namespace bproof {

namespace {

Expr mv(std::uint32_t i) { return Expr::var(mvar(i)); }

}  // namespace

int selftest(std::ostream& out) {
  int failed = 0;
  const auto check = [&](const char* what, bool ok) {
    out << (ok ? "ok " : "FAIL ") << what << "\n";
    if (!ok) ++failed;
  };

  // Abstraction shifts the indexes that stay dangling out of the way.
  {
    const Expr input = Expr::pair(mv(0), Expr::pair(mv(1), mv(2)));
    const Expr expect = Expr::pair(mv(1), Expr::pair(mv(0), mv(3)));
    check("abstract shifts dangling indexes",
          term_eq(abstract(mvar(1), 0, input), expect));
  }

  // Grafting lets the binder capture; substitution does not.
  {
    const Var u0{Namespace::user(), 0};
    const Pred target = Pred::all(Pred::eq(Expr::var(u0), mv(0)));
    const Pred grafted = graft(u0, mv(0), 0, target);
    const Pred substed = subst(u0, mv(0), 0, target);
    check("graft permits capture",
          term_eq(grafted, Pred::all(Pred::eq(mv(0), mv(0)))));
    check("subst avoids capture",
          term_eq(substed, Pred::all(Pred::eq(mv(1), mv(0)))));
  }

  check("depth counts every constructor",
        depth(Pred::all(Pred::neg(Pred::eq(Expr::big(), Expr::big())))) == 4);

  // A tiny proof through the kernel.
  {
    const Pred p = parse_pred("a : S");
    const Pred q = parse_pred("b = c");
    const ProofEnv env{p, q};
    const Theorem both = and_i(ax(env, p), ax(env, q));
    check("kernel conjunction round trip",
          term_eq(and_e1(both).concl(), p) && term_eq(and_e2(both).concl(), q));
    const Theorem em = excluded_middle(ProofEnv{}, p);
    check("excluded middle", term_eq(em.concl(), mk_or(p, Pred::neg(p))) &&
                                 em.env().empty());
  }

  // Printing then reparsing is the identity on bound structure.
  {
    const Pred p = parse_pred("!x.(x : v0 => #y.(y |-> x : v1))");
    const std::string text = print_pred(p);
    check("printer round trip", term_eq(parse_pred(text), p));
  }

  // Instantiating a fresh universal recovers the body.
  {
    SymbolTable table;
    const Pred body = parse_pred_with(table, "w : S & w = w");
    const Var w = table.intern("u", "w");
    const Pred all = mk_forall(w, body);
    check("instantiation inverts binding",
          term_eq(apply_forall(all, Expr::var(w)), body));
  }

  return failed;
}

}  // namespace bproof
