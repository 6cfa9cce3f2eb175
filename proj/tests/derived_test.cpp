#include "bproof/derived.hpp"

#include <doctest.h>

#include <functional>
#include <stdexcept>

#include "bproof/errors.hpp"
#include "bproof/syntax.hpp"

using namespace bproof;

namespace {

Expr uv(std::uint32_t i) { return Expr::var(uvar(i)); }
Expr mv(std::uint32_t i) { return Expr::var(mvar(i)); }

Pred in_u(std::uint32_t e, std::uint32_t s) { return Pred::in(uv(e), uv(s)); }

ErrKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const RuleError& e) {
    return e.kind();
  }
  throw std::logic_error("expected a RuleError");
}

}  // namespace

TEST_CASE("defined connectives expand to primitives") {
  const Pred p = in_u(0, 1);
  const Pred q = in_u(2, 3);
  CHECK(term_eq(mk_or(p, q), Pred::imp(Pred::neg(p), q)));
  CHECK(term_eq(mk_iff(p, q), Pred::conj(Pred::imp(p, q), Pred::imp(q, p))));
  CHECK(term_eq(mk_subset(uv(0), uv(1)), Pred::in(uv(0), Expr::pow(uv(1)))));
}

TEST_CASE("and_split returns both projections") {
  const Pred both = Pred::conj(in_u(0, 1), in_u(2, 3));
  const auto [l, r] = and_split(ax(ProofEnv{both}, both));
  CHECK(term_eq(l.concl(), in_u(0, 1)));
  CHECK(term_eq(r.concl(), in_u(2, 3)));
}

TEST_CASE("forall_inst instantiates a generalized theorem") {
  const Theorem t = forall_i(uvar(0), eq_refl(ProofEnv{}, uv(0)));
  const Theorem i = forall_inst(t, Expr::big());
  CHECK(term_eq(i.concl(), Pred::eq(Expr::big(), Expr::big())));
}

TEST_CASE("disjunction introduction keeps the environment") {
  const Pred p = in_u(0, 1);
  const Pred q = in_u(2, 3);
  const ProofEnv env = {p};

  const Theorem l = or_i_left(ax(env, p), q);
  CHECK(term_eq(l.concl(), mk_or(p, q)));
  CHECK(l.env().set_eq(env));

  const Theorem r = or_i_right(q, ax(env, p));
  CHECK(term_eq(r.concl(), mk_or(q, p)));
  CHECK(r.env().set_eq(env));

  // Even when the scaffolding hypotheses are already present they survive.
  const ProofEnv tricky = {p, Pred::neg(p), Pred::neg(q)};
  const Theorem t = or_i_left(ax(tricky, p), q);
  CHECK(term_eq(t.concl(), mk_or(p, q)));
  CHECK(t.env().set_eq(tricky));
}

TEST_CASE("existential introduction needs the instantiated goal") {
  const Var w = uvar(5);
  const Pred p = Pred::in(Expr::var(w), uv(1));
  const ProofEnv env = {in_u(0, 1)};

  const Theorem t = exists_i(w, p, uv(0), ax(env, in_u(0, 1)));
  CHECK(term_eq(t.concl(), mk_exists(w, p)));
  CHECK(t.env().set_eq(env));

  CHECK(kind_of([&] { exists_i(w, p, uv(2), ax(env, in_u(0, 1))); }) ==
        ErrKind::PatternMismatch);
}

TEST_CASE("eq_of_syntactic only accepts equal spellings") {
  const ProofEnv env = {in_u(0, 1)};
  const Expr e = Expr::pair(uv(0), Expr::pow(uv(1)));
  const Theorem t = eq_of_syntactic(env, e, Expr::pair(uv(0), Expr::pow(uv(1))));
  CHECK(term_eq(t.concl(), Pred::eq(e, e)));
  CHECK(t.env().set_eq(env));
  CHECK(kind_of([&] { eq_of_syntactic(env, e, uv(0)); }) == ErrKind::NotSyntacticallyEqual);
}

TEST_CASE("excluded middle holds for arbitrary predicates") {
  const Pred p = Pred::all(Pred::imp(Pred::in(mv(0), uv(0)), Pred::eq(mv(0), uv(1))));
  const Theorem t = excluded_middle(ProofEnv{}, p);
  CHECK(term_eq(t.concl(), mk_or(p, Pred::neg(p))));
  CHECK(t.env().empty());

  const ProofEnv env = {in_u(0, 1), Pred::neg(p)};
  const Theorem u = excluded_middle(env, p);
  CHECK(term_eq(u.concl(), mk_or(p, Pred::neg(p))));
  CHECK(u.env().set_eq(env));
}

TEST_CASE("equivalence bookkeeping") {
  const Pred p = in_u(0, 1);
  const Pred q = in_u(2, 3);
  const ProofEnv env = {mk_iff(p, q)};

  const Theorem refl = iff_refl(env, p);
  CHECK(term_eq(refl.concl(), mk_iff(p, p)));

  const Theorem pq = ax(env, mk_iff(p, q));
  const Theorem qp = iff_sym(pq);
  CHECK(term_eq(qp.concl(), mk_iff(q, p)));

  const Theorem pp = iff_trans(pq, qp);
  CHECK(term_eq(pp.concl(), mk_iff(p, p)));

  CHECK(term_eq(and_cong(pq, qp).concl(),
                mk_iff(Pred::conj(p, q), Pred::conj(q, p))));
  CHECK(term_eq(imp_cong(pq, qp).concl(),
                mk_iff(Pred::imp(p, q), Pred::imp(q, p))));
  CHECK(term_eq(not_cong(pq).concl(), mk_iff(Pred::neg(p), Pred::neg(q))));
}

TEST_CASE("forall_cong rebinds both sides of an equivalence") {
  SymbolTable table;
  const Var w = table.intern("u", "w");
  const Expr c = parse_expr_with(table, "{x : S | x = b}");
  const Theorem unfold = mem_cmp(ProofEnv{}, Expr::var(w), c);
  const Theorem t = forall_cong(w, unfold);
  const Pred expected = parse_pred_with(
      table, "!y.(y : {x : S | x = b}) <=> !y.(y : S & y = b)");
  CHECK(term_eq(t.concl(), expected));
}

TEST_CASE("equality symmetry and transitivity") {
  const Pred ab = Pred::eq(uv(0), uv(1));
  const Pred bc = Pred::eq(uv(1), uv(2));
  const ProofEnv env = {ab, bc};

  CHECK(term_eq(eq_sym(ax(env, ab)).concl(), Pred::eq(uv(1), uv(0))));
  CHECK(term_eq(eq_trans(ax(env, ab), ax(env, bc)).concl(), Pred::eq(uv(0), uv(2))));
  CHECK(kind_of([&] { eq_sym(ax(ProofEnv{in_u(0, 1)}, in_u(0, 1))); }) ==
        ErrKind::ShapeMismatch);
}

TEST_CASE("graft congruence from a closed equation") {
  // A reflexive equation grafted into a binder-heavy target.
  const Var c = uvar(2);
  const Expr e = Expr::pair(uv(0), Expr::pow(uv(1)));
  const Theorem teq = eq_refl(ProofEnv{}, e);

  const Pred target = mk_forall(
      uvar(3), Pred::imp(Pred::in(Expr::var(c), mv(0)),
                         Pred::eq(Expr::var(c), Expr::var(uvar(3)))));
  const Pred g = graft(c, e, 0, target);
  const Theorem t = graft_cong_closed(teq, c, Term{target});
  CHECK(term_eq(t.concl(), mk_iff(g, g)));
  CHECK(t.env().empty());

  // The conclusion can be placed under any requested environment.
  const ProofEnv out = {in_u(0, 1)};
  CHECK(graft_cong_closed(teq, c, Term{target}, out).env().set_eq(out));

  // Expression targets conclude an equation.
  const Expr etarget = Expr::cmp(Expr::var(c), Pred::in(mv(0), Expr::var(c)));
  const Theorem te = graft_cong_closed(teq, c, Term{etarget});
  CHECK(term_eq(te.concl(), Pred::eq(graft(c, e, 0, etarget), graft(c, e, 0, etarget))));

  // Premises with hypotheses are rejected here.
  const Theorem open_eq = eq_refl(ProofEnv{in_u(0, 1)}, e);
  CHECK(kind_of([&] { graft_cong_closed(open_eq, c, Term{target}); }) ==
        ErrKind::ShapeMismatch);
}

TEST_CASE("graft congruence under hypotheses with distinct sides") {
  SymbolTable table;
  const Var a = table.intern("u", "a");
  const Pred hyp = parse_pred_with(table, "a = b");
  const ProofEnv env = {hyp};
  const Theorem teq = ax(env, hyp);

  const Pred target = parse_pred_with(table, "!x.(a : S => x |-> a : T)");
  const Theorem t = graft_cong_ns(teq, a, Term{target});

  const Pred expected =
      mk_iff(target, parse_pred_with(table, "!x.(b : S => x |-> b : T)"));
  CHECK(term_eq(t.concl(), expected));
  CHECK(t.env().set_eq(env));
}

TEST_CASE("graft congruence lets binders capture dangling indexes") {
  // From a = b derive (^0, a) = (^0, b), whose dangling index is then
  // captured by the target's binder on both sides at once.
  const Expr a = uv(0);
  const Expr b = uv(1);
  const ProofEnv env = {Pred::eq(a, b)};
  const Var hole = uvar(9);
  const Pred pattern = Pred::eq(Expr::pair(mv(0), a), Expr::pair(mv(0), Expr::var(hole)));
  const Theorem teq = eq_leibniz(ax(env, Pred::eq(a, b)), hole, pattern,
                                 eq_refl(env, Expr::pair(mv(0), a)));
  REQUIRE(term_eq(teq.concl(),
                  Pred::eq(Expr::pair(mv(0), a), Expr::pair(mv(0), b))));

  const Var c = uvar(2);
  const Pred target = mk_forall(
      uvar(3), Pred::eq(Expr::pair(Expr::var(uvar(3)), Expr::var(c)), Expr::var(c)));
  const Pred g1 = graft(c, Expr::pair(mv(0), a), 0, target);
  const Pred g2 = graft(c, Expr::pair(mv(0), b), 0, target);
  // Sanity: the graft really did capture the dangling index.
  CHECK(term_eq(
      g1, Pred::all(Pred::eq(Expr::pair(mv(0), Expr::pair(mv(0), a)),
                             Expr::pair(mv(0), a)))));

  const Theorem t = graft_cong_ns(teq, c, Term{target});
  CHECK(term_eq(t.concl(), mk_iff(g1, g2)));
  CHECK(t.env().set_eq(env));
}

TEST_CASE("graft congruence enforces the namespace side condition") {
  // The equation's dangling index also appears free in the environment, so
  // generalizing over it would be unsound and the rule must refuse.
  const Pred shared = Pred::eq(Expr::pair(mv(0), uv(0)), uv(1));
  const ProofEnv env = {shared};
  const Theorem teq = ax(env, shared);
  const Pred target = Pred::in(Expr::var(uvar(2)), uv(0));
  CHECK(kind_of([&] { graft_cong_ns(teq, uvar(2), Term{target}); }) ==
        ErrKind::SideConditionViolated);

  // Distinct dangling indexes on the two sides are fine.
  const ProofEnv env2 = {Pred::in(mv(1), uv(0))};
  const Theorem teq2 = eq_refl(env2, Expr::pair(mv(0), uv(0)));
  const Theorem ok = graft_cong_ns(teq2, uvar(2), Term{target});
  const Pred g = graft(uvar(2), Expr::pair(mv(0), uv(0)), 0, target);
  CHECK(term_eq(ok.concl(), mk_iff(g, g)));
  CHECK(ok.env().set_eq(env2));
}
