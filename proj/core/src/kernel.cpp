#include "bproof/kernel.hpp"

#include <array>

#include "bproof/errors.hpp"

namespace bproof {

namespace {

Pred iff_of(const Pred& p, const Pred& q) {
  return Pred::conj(Pred::imp(p, q), Pred::imp(q, p));
}

const PAll& expect_all(const Pred& p, const char* who) {
  const auto* n = std::get_if<PAll>(&p.node().v);
  if (!n) throw RuleError(ErrKind::NotAForall, std::string(who) + ": conclusion is not a forall");
  return *n;
}

void expect_same_env(const Theorem& a, const Theorem& b, const char* who) {
  if (!a.env().set_eq(b.env()))
    throw RuleError(ErrKind::EnvMismatch, std::string(who) + ": premise environments differ");
}

void expect_binder_var(const Var& v, const Expr& a, const Expr& b, const char* who) {
  if (v.ns.is_machinery())
    throw RuleError(ErrKind::NotFresh,
                    std::string(who) + ": machinery variables cannot name a binder");
  if (free_in(v, 0, a) || free_in(v, 0, b))
    throw RuleError(ErrKind::NotFresh, std::string(who) + ": " + dump(v) + " is not fresh");
}

}  // namespace

Theorem ax(const ProofEnv& env, const Pred& p) {
  if (!env.member(p)) throw RuleError(ErrKind::NotInEnv, "ax: hypothesis not in environment");
  return Theorem(env, p);
}

Theorem weaken(const Theorem& t, const ProofEnv& extra) {
  return Theorem(t.env().add_all(extra), t.concl());
}

Theorem and_i(const Theorem& t1, const Theorem& t2) {
  expect_same_env(t1, t2, "and_i");
  return Theorem(t1.env(), Pred::conj(t1.concl(), t2.concl()));
}

Theorem and_e1(const Theorem& t) {
  const auto* n = std::get_if<PAnd>(&t.concl().node().v);
  if (!n) throw RuleError(ErrKind::ShapeMismatch, "and_e1: conclusion is not a conjunction");
  return Theorem(t.env(), n->left);
}

Theorem and_e2(const Theorem& t) {
  const auto* n = std::get_if<PAnd>(&t.concl().node().v);
  if (!n) throw RuleError(ErrKind::ShapeMismatch, "and_e2: conclusion is not a conjunction");
  return Theorem(t.env(), n->right);
}

Theorem imp_i(const Pred& p, const Theorem& t) {
  if (!t.env().member(p))
    throw RuleError(ErrKind::NotInEnv, "imp_i: discharged hypothesis not in environment");
  return Theorem(t.env().remove(p), Pred::imp(p, t.concl()));
}

Theorem imp_e(const Theorem& timp, const Theorem& targ) {
  const auto* n = std::get_if<PImp>(&timp.concl().node().v);
  if (!n) throw RuleError(ErrKind::ShapeMismatch, "imp_e: conclusion is not an implication");
  expect_same_env(timp, targ, "imp_e");
  if (!term_eq(n->left, targ.concl()))
    throw RuleError(ErrKind::PatternMismatch, "imp_e: argument does not match the antecedent");
  return Theorem(timp.env(), n->right);
}

Theorem not_i(const Theorem& tq, const Theorem& tnq, const Pred& p) {
  expect_same_env(tq, tnq, "not_i");
  if (!tq.env().member(p))
    throw RuleError(ErrKind::NotInEnv, "not_i: discharged hypothesis not in environment");
  const auto* n = std::get_if<PNot>(&tnq.concl().node().v);
  if (!n || !term_eq(n->p, tq.concl()))
    throw RuleError(ErrKind::ShapeMismatch, "not_i: premises are not contradictory");
  return Theorem(tq.env().remove(p), Pred::neg(p));
}

Theorem absurd_i(const Theorem& tq, const Theorem& tnq, const Pred& p) {
  expect_same_env(tq, tnq, "absurd_i");
  const Pred np = Pred::neg(p);
  if (!tq.env().member(np))
    throw RuleError(ErrKind::NotInEnv, "absurd_i: negated goal not in environment");
  const auto* n = std::get_if<PNot>(&tnq.concl().node().v);
  if (!n || !term_eq(n->p, tq.concl()))
    throw RuleError(ErrKind::ShapeMismatch, "absurd_i: premises are not contradictory");
  return Theorem(tq.env().remove(np), p);
}

Theorem forall_i(const Var& v, const Theorem& t) {
  if (env_free(v, t.env()))
    throw RuleError(ErrKind::NotFresh, "forall_i: " + dump(v) + " is free in the environment");
  return Theorem(t.env(), mk_forall(v, t.concl()));
}

Theorem forall_e(const Theorem& t, const Expr& e) {
  expect_all(t.concl(), "forall_e");
  return Theorem(t.env(), apply_forall(t.concl(), e));
}

Theorem eq_refl(const ProofEnv& env, const Expr& e) { return Theorem(env, Pred::eq(e, e)); }

Theorem eq_leibniz(const Theorem& teq, const Var& v, const Pred& p, const Theorem& tp) {
  const auto* n = std::get_if<PEq>(&teq.concl().node().v);
  if (!n) throw RuleError(ErrKind::ShapeMismatch, "eq_leibniz: premise is not an equation");
  expect_same_env(teq, tp, "eq_leibniz");
  if (!term_eq(tp.concl(), subst(v, n->left, 0, p)))
    throw RuleError(ErrKind::PatternMismatch,
                    "eq_leibniz: second premise does not match the pattern");
  return Theorem(teq.env(), subst(v, n->right, 0, p));
}

Theorem mem_cmp(const ProofEnv& env, const Expr& e, const Expr& c) {
  if (!std::get_if<ECmp>(&c.node().v))
    throw RuleError(ErrKind::NotAComprehension, "mem_cmp: set is not a comprehension");
  return Theorem(env, iff_of(Pred::in(e, c), apply_cmp(c, e)));
}

Theorem mem_pow(const ProofEnv& env, const Expr& s, const Expr& t, const Var& v) {
  expect_binder_var(v, s, t, "mem_pow");
  const Expr vv = Expr::var(v);
  const Pred rhs = mk_forall(v, Pred::imp(Pred::in(vv, s), Pred::in(vv, t)));
  return Theorem(env, iff_of(Pred::in(s, Expr::pow(t)), rhs));
}

Theorem set_ext(const ProofEnv& env, const Expr& s, const Expr& t, const Var& v) {
  expect_binder_var(v, s, t, "set_ext");
  const Expr vv = Expr::var(v);
  const Pred rhs = mk_forall(v, iff_of(Pred::in(vv, s), Pred::in(vv, t)));
  return Theorem(env, iff_of(Pred::eq(s, t), rhs));
}

Theorem choice_i(const Theorem& t) {
  // Expected shape: not(forall(not(EVar(^,0) : S))) with the bound variable
  // absent from S, i.e. the image of mk_exists(v, v : s) for fresh v.
  const auto* n1 = std::get_if<PNot>(&t.concl().node().v);
  const auto* n2 = n1 ? std::get_if<PAll>(&n1->p.node().v) : nullptr;
  const auto* n3 = n2 ? std::get_if<PNot>(&n2->body.node().v) : nullptr;
  const auto* n4 = n3 ? std::get_if<PIn>(&n3->p.node().v) : nullptr;
  const auto* nv = n4 ? std::get_if<EVar>(&n4->elem.node().v) : nullptr;
  if (!nv || nv->v != mvar(0))
    throw RuleError(ErrKind::ShapeMismatch, "choice_i: premise is not a membership witness");
  if (free_in(mvar(0), 0, n4->set))
    throw RuleError(ErrKind::ShapeMismatch, "choice_i: set depends on the bound variable");
  // The binder variable does not occur, so instantiating with anything just
  // undoes the lift that built the body.
  const Expr s = app(Expr::big(), 0, n4->set);
  return Theorem(t.env(), Pred::in(Expr::choice(s), s));
}

std::pair<Theorem, Theorem> pair_eq_e(const Theorem& t) {
  const auto* n = std::get_if<PEq>(&t.concl().node().v);
  const auto* l = n ? std::get_if<EPair>(&n->left.node().v) : nullptr;
  const auto* r = n ? std::get_if<EPair>(&n->right.node().v) : nullptr;
  if (!l || !r)
    throw RuleError(ErrKind::ShapeMismatch, "pair_eq_e: premise is not a pair equation");
  return {Theorem(t.env(), Pred::eq(l->left, r->left)),
          Theorem(t.env(), Pred::eq(l->right, r->right))};
}

Theorem prod_mem(const ProofEnv& env, const Expr& e, const Expr& e1, const Expr& e2,
                 const Var& v1, const Var& v2) {
  if (v1 == v2) throw RuleError(ErrKind::SameVariable, "prod_mem: witnesses must differ");
  if (v1.ns.is_machinery() || v2.ns.is_machinery())
    throw RuleError(ErrKind::NotFresh, "prod_mem: machinery variables cannot name a binder");
  const std::array<Term, 3> scope{Term{e}, Term{e1}, Term{e2}};
  for (const Var& v : {v1, v2})
    for (const Term& s : scope)
      if (free_in(v, 0, s))
        throw RuleError(ErrKind::NotFresh, "prod_mem: " + dump(v) + " is not fresh");
  const Expr w1 = Expr::var(v1);
  const Expr w2 = Expr::var(v2);
  const Pred inner = mk_exists(
      v2, Pred::conj(Pred::in(w2, e2), Pred::eq(e, Expr::pair(w1, w2))));
  const Pred outer = mk_exists(v1, Pred::conj(Pred::in(w1, e1), inner));
  return Theorem(env, iff_of(outer, Pred::in(e, Expr::prod(e1, e2))));
}

}  // namespace bproof
