#ifndef BPROOF_BINDER_HPP
#define BPROOF_BINDER_HPP

#include <set>
#include <vector>

#include "bproof/term.hpp"

namespace bproof {

// Number of binders crossed so far. Every operation below threads it; the
// public entry points fix it to 0 and the internal forms are exposed so the
// recursion can be tested level by level.
using Height = std::uint32_t;

// One-step lift of a variable probe: bump the index iff v lives in "^" and
// idx >= d. Probes outside "^" never move because binders never catch them.
Var lift_var(const Var& v, Height d);

// Shift dangling indexes of namespace ns at or above threshold d by one.
// For ns = "^" the threshold grows under each binder; for any other
// namespace it stays constant (nothing ever binds there).
Expr lift(const Namespace& ns, Height d, const Expr& t);
Pred lift(const Namespace& ns, Height d, const Pred& t);
Term lift(const Namespace& ns, Height d, const Term& t);

// Does v occur free in t, seen from under d binders?
bool free_in(const Var& v, Height d, const Expr& t);
bool free_in(const Var& v, Height d, const Pred& t);
bool free_in(const Var& v, Height d, const Term& t);

// Turn every free occurrence of v into the bound index d, shifting the other
// "^" indexes out of the way. Composing with Pred::all yields a binder.
Expr abstract(const Var& v, Height d, const Expr& t);
Pred abstract(const Var& v, Height d, const Pred& t);
Term abstract(const Var& v, Height d, const Term& t);

// Instantiate bound index d with e (the inverse of abstract): index d becomes
// e, larger indexes slide down, smaller ones stay.
Expr app(const Expr& e, Height d, const Expr& t);
Pred app(const Expr& e, Height d, const Pred& t);
Term app(const Expr& e, Height d, const Term& t);

// Capture-avoiding substitution of e for v: both the probe and the
// replacement are lifted at each binder.
Expr subst(const Var& v, const Expr& e, Height d, const Expr& t);
Pred subst(const Var& v, const Expr& e, Height d, const Pred& t);
Term subst(const Var& v, const Expr& e, Height d, const Term& t);

// Grafting: same probe discipline as subst but e is inserted verbatim, so
// binders in t may capture dangling "^" indexes of e. That is the point.
Expr graft(const Var& v, const Expr& e, Height d, const Expr& t);
Pred graft(const Var& v, const Expr& e, Height d, const Pred& t);
Term graft(const Var& v, const Expr& e, Height d, const Term& t);

Expr rename_free(const Var& v, const Var& v2, const Expr& t);
Pred rename_free(const Var& v, const Var& v2, const Pred& t);

// Binder front doors. mk_exists(v,p) is not(forall v. not p).
Pred mk_forall(const Var& v, const Pred& p);
Pred mk_exists(const Var& v, const Pred& p);
Expr mk_cmp(const Var& v, const Expr& dom, const Pred& p);

// Instantiation front doors.
// apply_forall: t must be PAll(body); yields app(e, 0, body). [NotAForall]
// apply_cmp: t must be ECmp(dom, body); yields e:dom & app(e, 0, body).
//            [NotAComprehension]
Pred apply_forall(const Pred& t, const Expr& e);
Pred apply_cmp(const Expr& t, const Expr& e);

// Open a forall with a fresh name: requires free_in(v,0,t) = false
// [NotFresh], t = PAll(..) [NotAForall]. Inverse of mk_forall for fresh v.
Pred open_binder(const Pred& t, const Var& v);

// All variables with a free occurrence in t, identified as seen from the
// root (a "^" leaf k levels under binders with index k+n reports (^, n)).
std::set<Var> free_vars(const Expr& t);
std::set<Var> free_vars(const Pred& t);
std::set<Var> free_vars(const Term& t);

}  // namespace bproof

#endif  // BPROOF_BINDER_HPP
