#include "bproof/binder.hpp"

#include "bproof/errors.hpp"

namespace bproof {

Var lift_var(const Var& v, Height d) {
  if (v.ns.is_machinery() && v.idx >= d) return Var{v.ns, v.idx + 1};
  return v;
}

Expr lift(const Namespace& ns, Height d, const Expr& t) {
  const Height down = ns.is_machinery() ? d + 1 : d;
  return std::visit(
      overloaded{
          [&](const EVar& x) {
            if (x.v.ns == ns && x.v.idx >= d) return Expr::var(Var{x.v.ns, x.v.idx + 1});
            return t;
          },
          [&](const EPair& x) { return Expr::pair(lift(ns, d, x.left), lift(ns, d, x.right)); },
          [&](const EChoice& x) { return Expr::choice(lift(ns, d, x.set)); },
          [&](const EBig&) { return t; },
          [&](const EPow& x) { return Expr::pow(lift(ns, d, x.set)); },
          [&](const EProd& x) { return Expr::prod(lift(ns, d, x.left), lift(ns, d, x.right)); },
          [&](const ECmp& x) { return Expr::cmp(lift(ns, d, x.dom), lift(ns, down, x.body)); },
      },
      t.node().v);
}

Pred lift(const Namespace& ns, Height d, const Pred& t) {
  const Height down = ns.is_machinery() ? d + 1 : d;
  return std::visit(
      overloaded{
          [&](const PAnd& x) { return Pred::conj(lift(ns, d, x.left), lift(ns, d, x.right)); },
          [&](const PImp& x) { return Pred::imp(lift(ns, d, x.left), lift(ns, d, x.right)); },
          [&](const PNot& x) { return Pred::neg(lift(ns, d, x.p)); },
          [&](const PAll& x) { return Pred::all(lift(ns, down, x.body)); },
          [&](const PEq& x) { return Pred::eq(lift(ns, d, x.left), lift(ns, d, x.right)); },
          [&](const PIn& x) { return Pred::in(lift(ns, d, x.elem), lift(ns, d, x.set)); },
      },
      t.node().v);
}

Term lift(const Namespace& ns, Height d, const Term& t) {
  if (std::holds_alternative<Pred>(t)) return lift(ns, d, std::get<Pred>(t));
  return lift(ns, d, std::get<Expr>(t));
}

bool free_in(const Var& v, Height d, const Expr& t) {
  return std::visit(
      overloaded{
          [&](const EVar& x) { return x.v == v; },
          [&](const EPair& x) { return free_in(v, d, x.left) || free_in(v, d, x.right); },
          [&](const EChoice& x) { return free_in(v, d, x.set); },
          [&](const EBig&) { return false; },
          [&](const EPow& x) { return free_in(v, d, x.set); },
          [&](const EProd& x) { return free_in(v, d, x.left) || free_in(v, d, x.right); },
          [&](const ECmp& x) {
            return free_in(v, d, x.dom) || free_in(lift_var(v, d), d + 1, x.body);
          },
      },
      t.node().v);
}

bool free_in(const Var& v, Height d, const Pred& t) {
  return std::visit(
      overloaded{
          [&](const PAnd& x) { return free_in(v, d, x.left) || free_in(v, d, x.right); },
          [&](const PImp& x) { return free_in(v, d, x.left) || free_in(v, d, x.right); },
          [&](const PNot& x) { return free_in(v, d, x.p); },
          [&](const PAll& x) { return free_in(lift_var(v, d), d + 1, x.body); },
          [&](const PEq& x) { return free_in(v, d, x.left) || free_in(v, d, x.right); },
          [&](const PIn& x) { return free_in(v, d, x.elem) || free_in(v, d, x.set); },
      },
      t.node().v);
}

bool free_in(const Var& v, Height d, const Term& t) {
  if (std::holds_alternative<Pred>(t)) return free_in(v, d, std::get<Pred>(t));
  return free_in(v, d, std::get<Expr>(t));
}

Expr abstract(const Var& v, Height d, const Expr& t) {
  return std::visit(
      overloaded{
          [&](const EVar& x) {
            if (x.v == v) return Expr::var(mvar(d));
            const Var moved = lift_var(x.v, d);
            return moved == x.v ? t : Expr::var(moved);
          },
          [&](const EPair& x) {
            return Expr::pair(abstract(v, d, x.left), abstract(v, d, x.right));
          },
          [&](const EChoice& x) { return Expr::choice(abstract(v, d, x.set)); },
          [&](const EBig&) { return t; },
          [&](const EPow& x) { return Expr::pow(abstract(v, d, x.set)); },
          [&](const EProd& x) {
            return Expr::prod(abstract(v, d, x.left), abstract(v, d, x.right));
          },
          [&](const ECmp& x) {
            return Expr::cmp(abstract(v, d, x.dom), abstract(lift_var(v, d), d + 1, x.body));
          },
      },
      t.node().v);
}

Pred abstract(const Var& v, Height d, const Pred& t) {
  return std::visit(
      overloaded{
          [&](const PAnd& x) {
            return Pred::conj(abstract(v, d, x.left), abstract(v, d, x.right));
          },
          [&](const PImp& x) {
            return Pred::imp(abstract(v, d, x.left), abstract(v, d, x.right));
          },
          [&](const PNot& x) { return Pred::neg(abstract(v, d, x.p)); },
          [&](const PAll& x) { return Pred::all(abstract(lift_var(v, d), d + 1, x.body)); },
          [&](const PEq& x) { return Pred::eq(abstract(v, d, x.left), abstract(v, d, x.right)); },
          [&](const PIn& x) { return Pred::in(abstract(v, d, x.elem), abstract(v, d, x.set)); },
      },
      t.node().v);
}

Term abstract(const Var& v, Height d, const Term& t) {
  if (std::holds_alternative<Pred>(t)) return Term{abstract(v, d, std::get<Pred>(t))};
  return Term{abstract(v, d, std::get<Expr>(t))};
}

Expr app(const Expr& e, Height d, const Expr& t) {
  return std::visit(
      overloaded{
          [&](const EVar& x) {
            if (!x.v.ns.is_machinery()) return t;
            if (x.v.idx > d) return Expr::var(mvar(x.v.idx - 1));
            if (x.v.idx == d) return e;
            return t;
          },
          [&](const EPair& x) { return Expr::pair(app(e, d, x.left), app(e, d, x.right)); },
          [&](const EChoice& x) { return Expr::choice(app(e, d, x.set)); },
          [&](const EBig&) { return t; },
          [&](const EPow& x) { return Expr::pow(app(e, d, x.set)); },
          [&](const EProd& x) { return Expr::prod(app(e, d, x.left), app(e, d, x.right)); },
          [&](const ECmp& x) {
            return Expr::cmp(app(e, d, x.dom),
                             app(lift(Namespace::machinery(), d, e), d + 1, x.body));
          },
      },
      t.node().v);
}

Pred app(const Expr& e, Height d, const Pred& t) {
  return std::visit(
      overloaded{
          [&](const PAnd& x) { return Pred::conj(app(e, d, x.left), app(e, d, x.right)); },
          [&](const PImp& x) { return Pred::imp(app(e, d, x.left), app(e, d, x.right)); },
          [&](const PNot& x) { return Pred::neg(app(e, d, x.p)); },
          [&](const PAll& x) {
            return Pred::all(app(lift(Namespace::machinery(), d, e), d + 1, x.body));
          },
          [&](const PEq& x) { return Pred::eq(app(e, d, x.left), app(e, d, x.right)); },
          [&](const PIn& x) { return Pred::in(app(e, d, x.elem), app(e, d, x.set)); },
      },
      t.node().v);
}

Term app(const Expr& e, Height d, const Term& t) {
  if (std::holds_alternative<Pred>(t)) return Term{app(e, d, std::get<Pred>(t))};
  return Term{app(e, d, std::get<Expr>(t))};
}

Expr subst(const Var& v, const Expr& e, Height d, const Expr& t) {
  return std::visit(
      overloaded{
          [&](const EVar& x) { return x.v == v ? e : t; },
          [&](const EPair& x) {
            return Expr::pair(subst(v, e, d, x.left), subst(v, e, d, x.right));
          },
          [&](const EChoice& x) { return Expr::choice(subst(v, e, d, x.set)); },
          [&](const EBig&) { return t; },
          [&](const EPow& x) { return Expr::pow(subst(v, e, d, x.set)); },
          [&](const EProd& x) {
            return Expr::prod(subst(v, e, d, x.left), subst(v, e, d, x.right));
          },
          [&](const ECmp& x) {
            return Expr::cmp(subst(v, e, d, x.dom),
                             subst(lift_var(v, d), lift(Namespace::machinery(), d, e), d + 1,
                                   x.body));
          },
      },
      t.node().v);
}

Pred subst(const Var& v, const Expr& e, Height d, const Pred& t) {
  return std::visit(
      overloaded{
          [&](const PAnd& x) {
            return Pred::conj(subst(v, e, d, x.left), subst(v, e, d, x.right));
          },
          [&](const PImp& x) {
            return Pred::imp(subst(v, e, d, x.left), subst(v, e, d, x.right));
          },
          [&](const PNot& x) { return Pred::neg(subst(v, e, d, x.p)); },
          [&](const PAll& x) {
            return Pred::all(subst(lift_var(v, d), lift(Namespace::machinery(), d, e), d + 1,
                                   x.body));
          },
          [&](const PEq& x) { return Pred::eq(subst(v, e, d, x.left), subst(v, e, d, x.right)); },
          [&](const PIn& x) { return Pred::in(subst(v, e, d, x.elem), subst(v, e, d, x.set)); },
      },
      t.node().v);
}

Term subst(const Var& v, const Expr& e, Height d, const Term& t) {
  if (std::holds_alternative<Pred>(t)) return Term{subst(v, e, d, std::get<Pred>(t))};
  return Term{subst(v, e, d, std::get<Expr>(t))};
}

Expr graft(const Var& v, const Expr& e, Height d, const Expr& t) {
  return std::visit(
      overloaded{
          [&](const EVar& x) { return x.v == v ? e : t; },
          [&](const EPair& x) {
            return Expr::pair(graft(v, e, d, x.left), graft(v, e, d, x.right));
          },
          [&](const EChoice& x) { return Expr::choice(graft(v, e, d, x.set)); },
          [&](const EBig&) { return t; },
          [&](const EPow& x) { return Expr::pow(graft(v, e, d, x.set)); },
          [&](const EProd& x) {
            return Expr::prod(graft(v, e, d, x.left), graft(v, e, d, x.right));
          },
          [&](const ECmp& x) {
            return Expr::cmp(graft(v, e, d, x.dom), graft(lift_var(v, d), e, d + 1, x.body));
          },
      },
      t.node().v);
}

Pred graft(const Var& v, const Expr& e, Height d, const Pred& t) {
  return std::visit(
      overloaded{
          [&](const PAnd& x) {
            return Pred::conj(graft(v, e, d, x.left), graft(v, e, d, x.right));
          },
          [&](const PImp& x) {
            return Pred::imp(graft(v, e, d, x.left), graft(v, e, d, x.right));
          },
          [&](const PNot& x) { return Pred::neg(graft(v, e, d, x.p)); },
          [&](const PAll& x) { return Pred::all(graft(lift_var(v, d), e, d + 1, x.body)); },
          [&](const PEq& x) { return Pred::eq(graft(v, e, d, x.left), graft(v, e, d, x.right)); },
          [&](const PIn& x) { return Pred::in(graft(v, e, d, x.elem), graft(v, e, d, x.set)); },
      },
      t.node().v);
}

Term graft(const Var& v, const Expr& e, Height d, const Term& t) {
  if (std::holds_alternative<Pred>(t)) return Term{graft(v, e, d, std::get<Pred>(t))};
  return Term{graft(v, e, d, std::get<Expr>(t))};
}

Expr rename_free(const Var& v, const Var& v2, const Expr& t) {
  return subst(v, Expr::var(v2), 0, t);
}

Pred rename_free(const Var& v, const Var& v2, const Pred& t) {
  return subst(v, Expr::var(v2), 0, t);
}

Pred mk_forall(const Var& v, const Pred& p) { return Pred::all(abstract(v, 0, p)); }

Pred mk_exists(const Var& v, const Pred& p) {
  return Pred::neg(mk_forall(v, Pred::neg(p)));
}

Expr mk_cmp(const Var& v, const Expr& dom, const Pred& p) {
  return Expr::cmp(dom, abstract(v, 0, p));
}

Pred apply_forall(const Pred& t, const Expr& e) {
  const auto* all = std::get_if<PAll>(&t.node().v);
  if (!all) throw RuleError(ErrKind::NotAForall, "apply_forall expects a forall");
  return app(e, 0, all->body);
}

Pred apply_cmp(const Expr& t, const Expr& e) {
  const auto* c = std::get_if<ECmp>(&t.node().v);
  if (!c) throw RuleError(ErrKind::NotAComprehension, "apply_cmp expects a comprehension");
  return Pred::conj(Pred::in(e, c->dom), app(e, 0, c->body));
}

Pred open_binder(const Pred& t, const Var& v) {
  if (!std::get_if<PAll>(&t.node().v))
    throw RuleError(ErrKind::NotAForall, "open_binder expects a forall");
  if (free_in(v, 0, t))
    throw RuleError(ErrKind::NotFresh, "open_binder variable occurs in the body: " + dump(v));
  return apply_forall(t, Expr::var(v));
}

namespace {

// Records v as seen from the root: a "^" index under depth binders is free
// iff idx >= depth, and names (^, idx - depth) outside.
void note_var(std::set<Var>& out, const Var& v, Height depth) {
  if (v.ns.is_machinery()) {
    if (v.idx >= depth) out.insert(mvar(v.idx - depth));
  } else {
    out.insert(v);
  }
}

void collect(std::set<Var>& out, const Expr& t, Height depth);
void collect(std::set<Var>& out, const Pred& t, Height depth);

void collect(std::set<Var>& out, const Expr& t, Height depth) {
  std::visit(
      overloaded{
          [&](const EVar& x) { note_var(out, x.v, depth); },
          [&](const EPair& x) {
            collect(out, x.left, depth);
            collect(out, x.right, depth);
          },
          [&](const EChoice& x) { collect(out, x.set, depth); },
          [&](const EBig&) {},
          [&](const EPow& x) { collect(out, x.set, depth); },
          [&](const EProd& x) {
            collect(out, x.left, depth);
            collect(out, x.right, depth);
          },
          [&](const ECmp& x) {
            collect(out, x.dom, depth);
            collect(out, x.body, depth + 1);
          },
      },
      t.node().v);
}

void collect(std::set<Var>& out, const Pred& t, Height depth) {
  std::visit(
      overloaded{
          [&](const PAnd& x) {
            collect(out, x.left, depth);
            collect(out, x.right, depth);
          },
          [&](const PImp& x) {
            collect(out, x.left, depth);
            collect(out, x.right, depth);
          },
          [&](const PNot& x) { collect(out, x.p, depth); },
          [&](const PAll& x) { collect(out, x.body, depth + 1); },
          [&](const PEq& x) {
            collect(out, x.left, depth);
            collect(out, x.right, depth);
          },
          [&](const PIn& x) {
            collect(out, x.elem, depth);
            collect(out, x.set, depth);
          },
      },
      t.node().v);
}

}  // namespace

std::set<Var> free_vars(const Expr& t) {
  std::set<Var> out;
  collect(out, t, 0);
  return out;
}

std::set<Var> free_vars(const Pred& t) {
  std::set<Var> out;
  collect(out, t, 0);
  return out;
}

std::set<Var> free_vars(const Term& t) {
  if (std::holds_alternative<Pred>(t)) return free_vars(std::get<Pred>(t));
  return free_vars(std::get<Expr>(t));
}

}  // namespace bproof
