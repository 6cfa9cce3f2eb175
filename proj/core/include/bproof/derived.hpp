#ifndef BPROOF_DERIVED_HPP
#define BPROOF_DERIVED_HPP

#include <utility>

#include "bproof/kernel.hpp"

namespace bproof {

// Connectives that are definitions, not primitives.
Pred mk_or(const Pred& p, const Pred& q);     // not p => q
Pred mk_iff(const Pred& p, const Pred& q);    // (p => q) & (q => p)
Pred mk_subset(const Expr& s, const Expr& t); // s : POW(t)

// Everything below expands to kernel steps; nothing here can mint a Theorem
// on its own.

std::pair<Theorem, Theorem> and_split(const Theorem& t);
Theorem forall_inst(const Theorem& t, const Expr& e);

// From env |- p conclude env |- p or q (resp. env |- q, p or q).
Theorem or_i_left(const Theorem& t, const Pred& q);
Theorem or_i_right(const Pred& p, const Theorem& t);

// From env |- p[v := witness] conclude env |- exists v. p.  [PatternMismatch]
Theorem exists_i(const Var& v, const Pred& p, const Expr& witness, const Theorem& t);

// e1 and e2 must be structurally equal.           [NotSyntacticallyEqual]
Theorem eq_of_syntactic(const ProofEnv& env, const Expr& e1, const Expr& e2);

// env |- p or not p, for any p.
Theorem excluded_middle(const ProofEnv& env, const Pred& p);

// Equivalence bookkeeping used by the congruence procedures. All take and
// return theorems over one environment.
Theorem iff_refl(const ProofEnv& env, const Pred& p);
Theorem iff_sym(const Theorem& t);
Theorem iff_trans(const Theorem& t1, const Theorem& t2);
Theorem and_cong(const Theorem& ta, const Theorem& tb);
Theorem imp_cong(const Theorem& ta, const Theorem& tb);
Theorem not_cong(const Theorem& ta);
// From env |- c1 <=> c2 with w not free in env, conclude
// env |- (forall w. c1) <=> (forall w. c2).
Theorem forall_cong(const Var& w, const Theorem& t);
Theorem eq_sym(const Theorem& t);
Theorem eq_trans(const Theorem& t1, const Theorem& t2);

// Congruence of grafting: from teq proving e1 = e2, derive
//   graft(v,e1,0,target) <=> graft(v,e2,0,target)   (target a Pred)
//   graft(v,e1,0,target)  =  graft(v,e2,0,target)   (target an Expr)
// as a real kernel proof, by structural recursion over target with fresh
// variables drawn from the reserved namespace "fr".
//
// graft_cong_closed requires teq.env to be empty [ShapeMismatch] and places
// the conclusion under any requested environment.
// graft_cong_ns keeps teq's environment and instead requires the machinery
// side condition disjoint_n0(teq.env, teq.concl). [SideConditionViolated]
Theorem graft_cong_closed(const Theorem& teq, const Var& v, const Term& target,
                          const ProofEnv& out_env = {});
Theorem graft_cong_ns(const Theorem& teq, const Var& v, const Term& target);

}  // namespace bproof

#endif  // BPROOF_DERIVED_HPP
