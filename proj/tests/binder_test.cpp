#include "bproof/binder.hpp"

#include <doctest.h>

#include "bproof/errors.hpp"

using namespace bproof;

namespace {

Expr mv(std::uint32_t i) { return Expr::var(mvar(i)); }
Expr uv(std::uint32_t i) { return Expr::var(uvar(i)); }

}  // namespace

TEST_CASE("lift_var bumps only machinery indexes at or above the threshold") {
  CHECK(lift_var(mvar(2), 2) == mvar(3));
  CHECK(lift_var(mvar(5), 2) == mvar(6));
  CHECK(lift_var(mvar(1), 2) == mvar(1));
  CHECK(lift_var(uvar(2), 0) == uvar(2));
  CHECK(lift_var(nvar("ns", 9), 0) == nvar("ns", 9));
}

TEST_CASE("lift threshold grows under binders only for the machinery namespace") {
  // Inside one binder the cutoff for "^" is d+1, so index 0 stays put.
  const Pred t = Pred::all(Pred::eq(mv(0), mv(1)));
  CHECK(term_eq(lift(Namespace::machinery(), 0, t),
                Pred::all(Pred::eq(mv(0), mv(2)))));

  // A non-machinery namespace keeps its cutoff across binders.
  const Namespace ns("ns");
  const Pred s = Pred::all(Pred::eq(Expr::var(ns.tag(), 0), Expr::var(ns.tag(), 1)));
  CHECK(term_eq(lift(ns, 1, s),
                Pred::all(Pred::eq(Expr::var(ns.tag(), 0), Expr::var(ns.tag(), 2)))));

  // Lifting one namespace never moves another.
  CHECK(term_eq(lift(ns, 0, t), t));
  CHECK(term_eq(lift(Namespace::machinery(), 0, Term{s}), Term{s}));
}

TEST_CASE("lifts at comparable thresholds commute after reindexing") {
  const Pred t = Pred::eq(mv(0), mv(1));
  const Namespace m = Namespace::machinery();
  CHECK(term_eq(lift(m, 0, lift(m, 1, t)), lift(m, 2, lift(m, 0, t))));
}

TEST_CASE("abstract shifts other machinery leaves out of the way") {
  const Expr t = Expr::pair(mv(0), Expr::pair(mv(1), mv(2)));
  const Expr expected = Expr::pair(mv(1), Expr::pair(mv(0), mv(3)));
  CHECK(term_eq(abstract(mvar(1), 0, t), expected));
}

TEST_CASE("abstract reaches under binders with a lifted probe") {
  // u0 sits under one binder, so it becomes index 1 there; the bound 0 stays.
  const Pred t = Pred::all(Pred::eq(uv(0), mv(0)));
  CHECK(term_eq(abstract(uvar(0), 0, t), Pred::all(Pred::eq(mv(1), mv(0)))));
}

TEST_CASE("app instantiates index d and slides larger indexes down") {
  CHECK(term_eq(app(Expr::big(), 0, Pred::eq(mv(0), mv(1))),
                Pred::eq(Expr::big(), mv(0))));
  // Under a binder the inserted expression is lifted, so its dangling
  // indexes keep pointing outside.
  CHECK(term_eq(app(mv(5), 0, Pred::all(Pred::eq(mv(0), mv(1)))),
                Pred::all(Pred::eq(mv(0), mv(6)))));
}

TEST_CASE("subst avoids capture where graft permits it") {
  const Pred t = Pred::all(Pred::eq(uv(0), mv(0)));
  // Substitution lifts the replacement at the binder: the dangling 0 moves
  // to 1 and stays free.
  CHECK(term_eq(subst(uvar(0), mv(0), 0, t), Pred::all(Pred::eq(mv(1), mv(0)))));
  // Grafting inserts it verbatim: the binder captures it.
  CHECK(term_eq(graft(uvar(0), mv(0), 0, t), Pred::all(Pred::eq(mv(0), mv(0)))));
}

TEST_CASE("graft lifts its probe under binders like subst does") {
  const Pred t = Pred::all(Pred::eq(mv(1), mv(0)));
  CHECK(term_eq(graft(mvar(0), Expr::big(), 0, t),
                Pred::all(Pred::eq(Expr::big(), mv(0)))));
  // Non-matching leaves are left verbatim, including dangling ones.
  const Pred u = Pred::all(Pred::eq(mv(2), mv(0)));
  CHECK(term_eq(graft(mvar(0), Expr::big(), 0, u), u));
}

TEST_CASE("free_in lifts the probe across binders") {
  const Pred t = Pred::all(Pred::eq(mv(1), mv(0)));
  CHECK(free_in(mvar(0), 0, t));
  CHECK_FALSE(free_in(mvar(1), 0, t));
  CHECK(free_in(uvar(3), 0, Pred::in(uv(3), Expr::big())));
  CHECK_FALSE(free_in(uvar(2), 0, Pred::in(uv(3), Expr::big())));
  CHECK(free_in(mvar(0), 0, Term{mv(0)}));
}

TEST_CASE("free_vars reports machinery leaves relative to the root") {
  const Pred t = Pred::all(Pred::conj(Pred::eq(mv(1), uv(3)),
                                      Pred::in(mv(0), Expr::var(nvar("ns", 2)))));
  const std::set<Var> got = free_vars(t);
  const std::set<Var> expected = {mvar(0), uvar(3), nvar("ns", 2)};
  CHECK(got == expected);
  CHECK(free_vars(Term{t}) == expected);
  CHECK(free_vars(Expr::big()).empty());
}

TEST_CASE("binder front doors abstract their variable") {
  const Var x = uvar(0);
  const Expr s = uv(1);
  const Pred p = Pred::in(Expr::var(x), s);

  const Pred fa = mk_forall(x, p);
  CHECK(term_eq(fa, Pred::all(Pred::in(mv(0), s))));
  CHECK_FALSE(free_in(x, 0, fa));

  const Pred ex = mk_exists(x, p);
  CHECK(term_eq(ex, Pred::neg(Pred::all(Pred::neg(Pred::in(mv(0), s))))));

  // The domain is outside the binder: x there stays free.
  const Expr c = mk_cmp(x, Expr::var(x), p);
  CHECK(term_eq(c, Expr::cmp(Expr::var(x), Pred::in(mv(0), s))));
}

TEST_CASE("apply_forall and apply_cmp invert the front doors") {
  const Var x = uvar(0);
  const Pred p = Pred::eq(Expr::pair(Expr::var(x), uv(1)), Expr::var(x));
  const Expr e = Expr::choice(uv(2));

  CHECK(term_eq(apply_forall(mk_forall(x, p), e), subst(x, e, 0, p)));
  CHECK_THROWS_AS(apply_forall(Pred::eq(e, e), e), RuleError);

  const Expr c = mk_cmp(x, uv(1), p);
  CHECK(term_eq(apply_cmp(c, e),
                Pred::conj(Pred::in(e, uv(1)), subst(x, e, 0, p))));
  CHECK_THROWS_AS(apply_cmp(Expr::big(), e), RuleError);
}

TEST_CASE("open_binder undoes mk_forall for a fresh name") {
  const Var x = uvar(0);
  const Pred p = Pred::imp(Pred::in(Expr::var(x), uv(1)), Pred::eq(Expr::var(x), uv(2)));
  CHECK(term_eq(open_binder(mk_forall(x, p), x), p));

  const Var y = nvar("w", 0);
  CHECK(term_eq(open_binder(mk_forall(x, p), y), rename_free(x, y, p)));

  // Opening with a name that is still free in the term is refused.
  const Pred trap = Pred::all(Pred::eq(mv(0), uv(1)));
  CHECK_THROWS_AS(open_binder(trap, uvar(1)), RuleError);
  CHECK_THROWS_AS(open_binder(Pred::eq(uv(0), uv(0)), x), RuleError);
}

TEST_CASE("rename_free renames every free occurrence and nothing else") {
  const Pred t = Pred::all(Pred::conj(Pred::in(uv(0), mv(0)),
                                      Pred::eq(uv(0), uv(1))));
  const Pred r = rename_free(uvar(0), nvar("w", 4), t);
  CHECK(term_eq(r, Pred::all(Pred::conj(Pred::in(Expr::var(nvar("w", 4)), mv(0)),
                                        Pred::eq(Expr::var(nvar("w", 4)), uv(1))))));
  CHECK(term_eq(rename_free(uvar(9), uvar(8), t), t));
}

TEST_CASE("height parameter threads through explicitly") {
  // Working at height 1 treats index 0 as bound: abstract targets slot 1.
  const Expr body = Expr::pair(uv(0), mv(0));
  CHECK(term_eq(abstract(uvar(0), 1, body), Expr::pair(mv(1), mv(0))));
  CHECK(term_eq(app(Expr::big(), 1, Expr::pair(mv(1), mv(0))),
                Expr::pair(Expr::big(), mv(0))));
  CHECK(term_eq(subst(uvar(0), mv(0), 1, body), Expr::pair(mv(0), mv(0))));
}
