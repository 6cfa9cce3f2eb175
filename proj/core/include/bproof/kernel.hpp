#ifndef BPROOF_KERNEL_HPP
#define BPROOF_KERNEL_HPP

#include <utility>

#include "bproof/binder.hpp"
#include "bproof/env.hpp"
#include "bproof/term.hpp"

namespace bproof {

class Theorem;

// Trusted inference rules. These free functions are the only way to build a
// Theorem (they are the class's sole friends, all defined in kernel.cpp), so
// anything of type Theorem was assembled by the rules below. Rules validate
// their premises and throw RuleError; they never return a bad sequent.

// p must be a member of env.                                   [NotInEnv]
Theorem ax(const ProofEnv& env, const Pred& p);

// Hypothesis-set monotonicity: extend the environment.
Theorem weaken(const Theorem& t, const ProofEnv& extra);

// From env |- p and env |- q conclude env |- p & q.            [EnvMismatch]
Theorem and_i(const Theorem& t1, const Theorem& t2);
Theorem and_e1(const Theorem& t);  // env |- p & q  =>  env |- p  [ShapeMismatch]
Theorem and_e2(const Theorem& t);  // env |- p & q  =>  env |- q  [ShapeMismatch]

// Discharge hypothesis p: from env |- q (p in env) conclude
// env \ {p} |- p => q.                                          [NotInEnv]
Theorem imp_i(const Pred& p, const Theorem& t);
// Modus ponens; premise environments must agree.  [ShapeMismatch|PatternMismatch|EnvMismatch]
Theorem imp_e(const Theorem& timp, const Theorem& targ);

// From env |- q and env |- not q, with p in env, conclude
// env \ {p} |- not p.                     [EnvMismatch|NotInEnv|ShapeMismatch]
Theorem not_i(const Theorem& tq, const Theorem& tnq, const Pred& p);
// Classical reductio: same premises with not p in env conclude
// env \ {not p} |- p.                     [EnvMismatch|NotInEnv|ShapeMismatch]
Theorem absurd_i(const Theorem& tq, const Theorem& tnq, const Pred& p);

// Generalization; v must not be free in the environment.        [NotFresh]
Theorem forall_i(const Var& v, const Theorem& t);
// Instantiation of env |- forall-body with e.                   [NotAForall]
Theorem forall_e(const Theorem& t, const Expr& e);

Theorem eq_refl(const ProofEnv& env, const Expr& e);
// Rewrite under a substitution pattern: from env |- e = f and
// env |- subst(v,e,0,p) conclude env |- subst(v,f,0,p).
//                                [ShapeMismatch|EnvMismatch|PatternMismatch]
Theorem eq_leibniz(const Theorem& teq, const Var& v, const Pred& p, const Theorem& tp);

// Comprehension membership axiom: e : {..} <=> unfolding.  [NotAComprehension]
Theorem mem_cmp(const ProofEnv& env, const Expr& e, const Expr& c);
// Powerset membership axiom, stated with a fresh v.             [NotFresh]
Theorem mem_pow(const ProofEnv& env, const Expr& s, const Expr& t, const Var& v);
// Set extensionality, stated with a fresh v.                    [NotFresh]
Theorem set_ext(const ProofEnv& env, const Expr& s, const Expr& t, const Var& v);

// From env |- exists x. x : s (s independent of x) conclude
// env |- CHOICE(s) : s.                                     [ShapeMismatch]
Theorem choice_i(const Theorem& t);

// From env |- a |-> b = c |-> d conclude both component equations.
//                                                           [ShapeMismatch]
std::pair<Theorem, Theorem> pair_eq_e(const Theorem& t);

// Product membership: with v1, v2 distinct non-machinery variables fresh for
// e, e1, e2, concludes
//   (exists v1. v1 : e1 & exists v2. v2 : e2 & e = v1 |-> v2) <=> e : e1 * e2.
//                                                 [SameVariable|NotFresh]
Theorem prod_mem(const ProofEnv& env, const Expr& e, const Expr& e1, const Expr& e2,
                 const Var& v1, const Var& v2);

class Theorem {
 public:
  const ProofEnv& env() const { return env_; }
  const Pred& concl() const { return concl_; }

 private:
  Theorem(ProofEnv env, Pred concl) : env_(std::move(env)), concl_(std::move(concl)) {}

  friend Theorem ax(const ProofEnv&, const Pred&);
  friend Theorem weaken(const Theorem&, const ProofEnv&);
  friend Theorem and_i(const Theorem&, const Theorem&);
  friend Theorem and_e1(const Theorem&);
  friend Theorem and_e2(const Theorem&);
  friend Theorem imp_i(const Pred&, const Theorem&);
  friend Theorem imp_e(const Theorem&, const Theorem&);
  friend Theorem not_i(const Theorem&, const Theorem&, const Pred&);
  friend Theorem absurd_i(const Theorem&, const Theorem&, const Pred&);
  friend Theorem forall_i(const Var&, const Theorem&);
  friend Theorem forall_e(const Theorem&, const Expr&);
  friend Theorem eq_refl(const ProofEnv&, const Expr&);
  friend Theorem eq_leibniz(const Theorem&, const Var&, const Pred&, const Theorem&);
  friend Theorem mem_cmp(const ProofEnv&, const Expr&, const Expr&);
  friend Theorem mem_pow(const ProofEnv&, const Expr&, const Expr&, const Var&);
  friend Theorem set_ext(const ProofEnv&, const Expr&, const Expr&, const Var&);
  friend Theorem choice_i(const Theorem&);
  friend std::pair<Theorem, Theorem> pair_eq_e(const Theorem&);
  friend Theorem prod_mem(const ProofEnv&, const Expr&, const Expr&, const Expr&, const Var&,
                          const Var&);

  ProofEnv env_;
  Pred concl_;
};

inline const ProofEnv& thm_env(const Theorem& t) { return t.env(); }
inline const Pred& thm_concl(const Theorem& t) { return t.concl(); }

}  // namespace bproof

#endif  // BPROOF_KERNEL_HPP
