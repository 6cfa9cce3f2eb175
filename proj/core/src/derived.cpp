#include "bproof/derived.hpp"

#include <cstdint>
#include <vector>

#include "bproof/binder.hpp"
#include "bproof/errors.hpp"

namespace bproof {

Pred mk_or(const Pred& p, const Pred& q) { return Pred::imp(Pred::neg(p), q); }

Pred mk_iff(const Pred& p, const Pred& q) {
  return Pred::conj(Pred::imp(p, q), Pred::imp(q, p));
}

Pred mk_subset(const Expr& s, const Expr& t) {
  return Pred::in(s, Expr::pow(t));
}

namespace {

// Re-root a theorem under a superset environment.
Theorem ensure_env(const Theorem& t, const ProofEnv& target) {
  if (t.env().set_eq(target)) return t;
  return weaken(t, target);
}

// env |- p => p
Theorem imp_self(const ProofEnv& env, const Pred& p) {
  const Theorem t = ax(env.add(p), p);
  return ensure_env(imp_i(p, t), env);
}

// env' |- y from env |- x => y and env' |- x, where env is a subset of env'.
Theorem apply_imp(const Theorem& timp, const Theorem& tx) {
  return imp_e(ensure_env(timp, tx.env()), tx);
}

const PAnd* expect_iff(const Theorem& t) {
  const auto* a = std::get_if<PAnd>(&t.concl().node().v);
  if (a != nullptr && std::holds_alternative<PImp>(a->left.node().v) &&
      std::holds_alternative<PImp>(a->right.node().v)) {
    return a;
  }
  throw RuleError(ErrKind::ShapeMismatch, "conclusion is not an equivalence");
}

std::pair<Pred, Pred> iff_sides(const Theorem& t) {
  const auto& fwd = std::get<PImp>(expect_iff(t)->left.node().v);
  return {fwd.left, fwd.right};
}

const PEq* expect_eq(const Theorem& t) {
  const auto* n = std::get_if<PEq>(&t.concl().node().v);
  if (n == nullptr) {
    throw RuleError(ErrKind::ShapeMismatch, "conclusion is not an equation");
  }
  return n;
}

}  // namespace

std::pair<Theorem, Theorem> and_split(const Theorem& t) {
  return {and_e1(t), and_e2(t)};
}

Theorem forall_inst(const Theorem& t, const Expr& e) { return forall_e(t, e); }

Theorem or_i_left(const Theorem& t, const Pred& q) {
  // Under not p the hypotheses contradict, so anything follows.
  const Pred np = Pred::neg(t.concl());
  const ProofEnv inner = t.env().add(np).add(Pred::neg(q));
  const Theorem tq = absurd_i(ensure_env(t, inner), ax(inner, np), q);
  const Theorem imp = imp_i(np, ensure_env(tq, t.env().add(np)));
  return ensure_env(imp, t.env());
}

Theorem or_i_right(const Pred& p, const Theorem& t) {
  const Pred np = Pred::neg(p);
  const Theorem tq = ensure_env(t, t.env().add(np));
  return ensure_env(imp_i(np, tq), t.env());
}

Theorem exists_i(const Var& v, const Pred& p, const Expr& witness,
                 const Theorem& t) {
  // exists v.p is not(forall v. not p); refute the forall from the witness.
  if (!term_eq(t.concl(), subst(v, witness, 0, p))) {
    throw RuleError(ErrKind::PatternMismatch,
                    "premise is not the predicate at the witness");
  }
  const Pred all_not = mk_forall(v, Pred::neg(p));
  const ProofEnv inner = t.env().add(all_not);
  const Theorem refut = forall_e(ax(inner, all_not), witness);
  return ensure_env(not_i(ensure_env(t, inner), refut, all_not), t.env());
}

Theorem eq_of_syntactic(const ProofEnv& env, const Expr& e1, const Expr& e2) {
  if (!term_eq(e1, e2)) {
    throw RuleError(ErrKind::NotSyntacticallyEqual,
                    "expressions are not structurally equal");
  }
  return eq_refl(env, e1);
}

Theorem excluded_middle(const ProofEnv& env, const Pred& p) {
  const Pred np = Pred::neg(p);
  return ensure_env(imp_i(np, ax(env.add(np), np)), env);
}

Theorem iff_refl(const ProofEnv& env, const Pred& p) {
  const Theorem d = imp_self(env, p);
  return and_i(d, d);
}

Theorem iff_sym(const Theorem& t) {
  expect_iff(t);
  return and_i(and_e2(t), and_e1(t));
}

Theorem iff_trans(const Theorem& t1, const Theorem& t2) {
  const auto [a, b1] = iff_sides(t1);
  const auto [b2, c] = iff_sides(t2);
  if (!term_eq(b1, b2)) {
    throw RuleError(ErrKind::PatternMismatch,
                    "equivalences do not share a middle predicate");
  }
  const ProofEnv base = t1.env();

  const ProofEnv ea = base.add(a);
  Theorem x = ax(ea, a);
  x = apply_imp(and_e1(t1), x);
  x = apply_imp(and_e1(t2), x);
  const Theorem fwd = ensure_env(imp_i(a, x), base);

  const ProofEnv ec = base.add(c);
  Theorem y = ax(ec, c);
  y = apply_imp(and_e2(t2), y);
  y = apply_imp(and_e2(t1), y);
  const Theorem bwd = ensure_env(imp_i(c, y), base);

  return and_i(fwd, bwd);
}

Theorem and_cong(const Theorem& ta, const Theorem& tb) {
  const auto [a1, a2] = iff_sides(ta);
  const auto [b1, b2] = iff_sides(tb);
  const ProofEnv base = ta.env();

  const auto one_way = [&](const Pred& la, const Pred& lb, const Theorem& da,
                           const Theorem& db) {
    const Pred h = Pred::conj(la, lb);
    const ProofEnv e = base.add(h);
    const Theorem hyp = ax(e, h);
    const Theorem l = apply_imp(da, and_e1(hyp));
    const Theorem r = apply_imp(db, and_e2(hyp));
    return ensure_env(imp_i(h, and_i(l, r)), base);
  };

  const Theorem fwd = one_way(a1, b1, and_e1(ta), and_e1(tb));
  const Theorem bwd = one_way(a2, b2, and_e2(ta), and_e2(tb));
  return and_i(fwd, bwd);
}

Theorem imp_cong(const Theorem& ta, const Theorem& tb) {
  const auto [a1, a2] = iff_sides(ta);
  const auto [b1, b2] = iff_sides(tb);
  const ProofEnv base = ta.env();

  // From la => lb conclude ra => rb, given ra => la and lb => rb.
  const auto one_way = [&](const Pred& la, const Pred& lb, const Pred& ra,
                           const Theorem& back, const Theorem& forth) {
    const Pred h = Pred::imp(la, lb);
    const ProofEnv e1 = base.add(h);
    const ProofEnv e2 = e1.add(ra);
    Theorem x = apply_imp(back, ax(e2, ra));
    x = imp_e(ax(e2, h), x);
    x = apply_imp(forth, x);
    const Theorem in = ensure_env(imp_i(ra, x), e1);
    return ensure_env(imp_i(h, in), base);
  };

  const Theorem fwd = one_way(a1, b1, a2, and_e2(ta), and_e1(tb));
  const Theorem bwd = one_way(a2, b2, a1, and_e1(ta), and_e2(tb));
  return and_i(fwd, bwd);
}

Theorem not_cong(const Theorem& ta) {
  const auto [a1, a2] = iff_sides(ta);
  const ProofEnv base = ta.env();

  // From not l conclude not r: assuming r yields l, contradicting not l.
  const auto one_way = [&](const Pred& l, const Pred& r, const Theorem& back) {
    const ProofEnv e = base.add(Pred::neg(l)).add(r);
    const Theorem pl = apply_imp(back, ax(e, r));
    const Theorem nr = not_i(pl, ax(e, Pred::neg(l)), r);
    const Theorem in = ensure_env(nr, base.add(Pred::neg(l)));
    return ensure_env(imp_i(Pred::neg(l), in), base);
  };

  const Theorem fwd = one_way(a1, a2, and_e2(ta));
  const Theorem bwd = one_way(a2, a1, and_e1(ta));
  return and_i(fwd, bwd);
}

Theorem forall_cong(const Var& w, const Theorem& t) {
  const auto [c1, c2] = iff_sides(t);
  const ProofEnv base = t.env();
  const Pred f1 = mk_forall(w, c1);
  const Pred f2 = mk_forall(w, c2);

  const auto one_way = [&](const Pred& from, const Pred& to,
                           const Theorem& dir) {
    const ProofEnv e = base.add(from);
    Theorem x = forall_e(ax(e, from), Expr::var(w));
    x = apply_imp(dir, x);
    x = forall_i(w, x);
    if (!term_eq(x.concl(), to)) {
      throw RuleError(ErrKind::ShapeMismatch,
                      "bound variable occurs in the hypothesis being opened");
    }
    return ensure_env(imp_i(from, x), base);
  };

  const Theorem fwd = one_way(f1, f2, and_e1(t));
  const Theorem bwd = one_way(f2, f1, and_e2(t));
  return and_i(fwd, bwd);
}

namespace {

// Smallest-unused counter for a scratch namespace, seeded by scanning every
// variable occurrence in the relevant terms.
class FreshSupply {
 public:
  explicit FreshSupply(const Namespace& ns) : ns_(ns) {}

  void scan(const Expr& e) {
    std::visit(overloaded{
                   [&](const EVar& x) { note(x.v); },
                   [&](const EPair& n) {
                     scan(n.left);
                     scan(n.right);
                   },
                   [&](const EChoice& n) { scan(n.set); },
                   [&](const EBig&) {},
                   [&](const EPow& n) { scan(n.set); },
                   [&](const EProd& n) {
                     scan(n.left);
                     scan(n.right);
                   },
                   [&](const ECmp& n) {
                     scan(n.dom);
                     scan(n.body);
                   },
               },
               e.node().v);
  }

  void scan(const Pred& p) {
    std::visit(overloaded{
                   [&](const PAnd& n) {
                     scan(n.left);
                     scan(n.right);
                   },
                   [&](const PImp& n) {
                     scan(n.left);
                     scan(n.right);
                   },
                   [&](const PNot& n) { scan(n.p); },
                   [&](const PAll& n) { scan(n.body); },
                   [&](const PEq& n) {
                     scan(n.left);
                     scan(n.right);
                   },
                   [&](const PIn& n) {
                     scan(n.elem);
                     scan(n.set);
                   },
               },
               p.node().v);
  }

  void scan(const Term& t) {
    std::visit([&](const auto& x) { scan(x); }, t);
  }

  void scan(const ProofEnv& env) {
    for (const Pred& p : env) scan(p);
  }

  Var take() { return Var{ns_, next_++}; }

 private:
  void note(const Var& v) {
    if (v.ns == ns_ && v.idx >= next_) next_ = v.idx + 1;
  }

  Namespace ns_;
  std::uint32_t next_ = 0;
};

struct CongCtx {
  ProofEnv env;             // environment of every intermediate theorem
  Theorem base;             // the equation as given, at its own environment
  std::vector<Var> opened;  // binder variables in scope, outermost first
  std::vector<std::uint32_t> dangling;  // machinery indexes free in base
  FreshSupply supply;
};

// Close the equation over one machinery variable and reopen it at e.
Theorem respell(const Theorem& t, std::uint32_t k, const Expr& e) {
  return forall_e(forall_i(mvar(k), t), e);
}

// The equation holding at the current binder depth: captured machinery
// variables become the opened binder variables, the rest shift down past the
// binders that enclose this site. Processing indexes in ascending order never
// rewrites an already-placed leaf: a shift lands k at k - m, strictly below
// every index still to be processed.
Theorem site_eq(const CongCtx& ctx) {
  const std::uint32_t m = static_cast<std::uint32_t>(ctx.opened.size());
  Theorem t = ctx.base;
  for (std::uint32_t k : ctx.dangling) {
    if (k < m) t = respell(t, k, Expr::var(ctx.opened[m - 1 - k]));
  }
  if (m > 0) {
    for (std::uint32_t k : ctx.dangling) {
      if (k >= m) t = respell(t, k, Expr::var(mvar(k - m)));
    }
  }
  return ensure_env(t, ctx.env);
}

Theorem go_pred(CongCtx& ctx, const Pred& skel, const Pred& t1, const Pred& t2);

// env |- x1 = x2 and env |- y1 = y2 give env |- make(x1,y1) = make(x2,y2),
// rewriting one marker hole at a time. make must not bind the hole.
template <typename Make>
Theorem eq_cong2(CongCtx& ctx, const Theorem& tl, const Theorem& tr,
                 Make make) {
  const PEq* l = expect_eq(tl);
  const PEq* r = expect_eq(tr);
  Theorem cur = eq_refl(ctx.env, make(l->left, r->left));
  if (!term_eq(l->left, l->right)) {
    const Var h = ctx.supply.take();
    const Pred pat =
        Pred::eq(make(l->left, r->left), make(Expr::var(h), r->left));
    cur = eq_leibniz(tl, h, pat, cur);
  }
  if (!term_eq(r->left, r->right)) {
    const Var h = ctx.supply.take();
    const Pred pat =
        Pred::eq(make(l->left, r->left), make(l->right, Expr::var(h)));
    cur = eq_leibniz(tr, h, pat, cur);
  }
  return cur;
}

// Same rewriting scheme for an atomic predicate: from the two component
// equations, env |- make(x1,y1) <=> make(x2,y2).
template <typename Make>
Theorem iff_cong2(CongCtx& ctx, const Theorem& tl, const Theorem& tr,
                  Make make) {
  const PEq* l = expect_eq(tl);
  const PEq* r = expect_eq(tr);
  const Pred fixed = make(l->left, r->left);
  Theorem cur = iff_refl(ctx.env, fixed);
  if (!term_eq(l->left, l->right)) {
    const Var h = ctx.supply.take();
    const Pred pat = mk_iff(fixed, make(Expr::var(h), r->left));
    cur = eq_leibniz(tl, h, pat, cur);
  }
  if (!term_eq(r->left, r->right)) {
    const Var h = ctx.supply.take();
    const Pred pat = mk_iff(fixed, make(l->right, Expr::var(h)));
    cur = eq_leibniz(tr, h, pat, cur);
  }
  return cur;
}

// env |- make(x1) = make(x2) from env |- x1 = x2, via one marker hole.
template <typename Make>
Theorem eq_cong1(CongCtx& ctx, const Theorem& ts, Make make) {
  const PEq* n = expect_eq(ts);
  const Var h = ctx.supply.take();
  const Pred pat = Pred::eq(make(n->left), make(Expr::var(h)));
  return eq_leibniz(ts, h, pat, eq_refl(ctx.env, make(n->left)));
}

Theorem go_expr(CongCtx& ctx, const Expr& skel, const Expr& t1,
                const Expr& t2) {
  if (term_eq(t1, t2)) return eq_refl(ctx.env, t1);

  return std::visit(
      overloaded{
          [&](const EVar&) {
            // A leaf the graft rewrote: the equation itself, respelled for
            // the binders crossed on the way down.
            const Theorem here = site_eq(ctx);
            const PEq* n = expect_eq(here);
            if (!term_eq(n->left, t1) || !term_eq(n->right, t2)) {
              throw RuleError(ErrKind::ShapeMismatch,
                              "rewritten subterms do not match the equation");
            }
            return here;
          },
          [&](const EBig&) { return eq_refl(ctx.env, t1); },
          [&](const EPair& s) {
            const auto* a1 = std::get_if<EPair>(&t1.node().v);
            const auto* a2 = std::get_if<EPair>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch, "pair shape lost");
            }
            const Theorem tl = go_expr(ctx, s.left, a1->left, a2->left);
            const Theorem tr = go_expr(ctx, s.right, a1->right, a2->right);
            return eq_cong2(ctx, tl, tr, [](const Expr& a, const Expr& b) {
              return Expr::pair(a, b);
            });
          },
          [&](const EProd& s) {
            const auto* a1 = std::get_if<EProd>(&t1.node().v);
            const auto* a2 = std::get_if<EProd>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch, "product shape lost");
            }
            const Theorem tl = go_expr(ctx, s.left, a1->left, a2->left);
            const Theorem tr = go_expr(ctx, s.right, a1->right, a2->right);
            return eq_cong2(ctx, tl, tr, [](const Expr& a, const Expr& b) {
              return Expr::prod(a, b);
            });
          },
          [&](const EChoice& s) {
            const auto* a1 = std::get_if<EChoice>(&t1.node().v);
            const auto* a2 = std::get_if<EChoice>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch, "choice shape lost");
            }
            const Theorem ts = go_expr(ctx, s.set, a1->set, a2->set);
            return eq_cong1(ctx, ts,
                            [](const Expr& a) { return Expr::choice(a); });
          },
          [&](const EPow& s) {
            const auto* a1 = std::get_if<EPow>(&t1.node().v);
            const auto* a2 = std::get_if<EPow>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch, "powerset shape lost");
            }
            const Theorem ts = go_expr(ctx, s.set, a1->set, a2->set);
            return eq_cong1(ctx, ts,
                            [](const Expr& a) { return Expr::pow(a); });
          },
          [&](const ECmp& s) {
            const auto* a1 = std::get_if<ECmp>(&t1.node().v);
            const auto* a2 = std::get_if<ECmp>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch,
                              "comprehension shape lost");
            }
            // Move the domain first, keeping the body.
            Theorem cur = eq_refl(ctx.env, t1);
            bool moved = false;
            if (!term_eq(a1->dom, a2->dom)) {
              const Theorem td = go_expr(ctx, s.dom, a1->dom, a2->dom);
              const Var h = ctx.supply.take();
              const Pred pat =
                  Pred::eq(t1, Expr::cmp(Expr::var(h), a1->body));
              cur = eq_leibniz(td, h, pat, cur);
              moved = true;
            }
            if (term_eq(a1->body, a2->body)) return cur;

            // Then the body, through membership and extensionality: every
            // element of {a2->dom | a1->body} is one of t2 and conversely.
            const Expr mid = Expr::cmp(a2->dom, a1->body);
            const Var w = ctx.supply.take();
            const Expr wv = Expr::var(w);
            const Pred c1 = app(wv, 0, a1->body);
            const Pred c2 = app(wv, 0, a2->body);
            ctx.opened.push_back(w);
            const Theorem sub = go_pred(ctx, s.body, c1, c2);
            ctx.opened.pop_back();

            const Theorem m1 = mem_cmp(ctx.env, wv, mid);
            const Theorem m2 = mem_cmp(ctx.env, wv, t2);
            const Theorem conj =
                and_cong(iff_refl(ctx.env, Pred::in(wv, a2->dom)), sub);
            const Theorem chain = iff_trans(m1, iff_trans(conj, iff_sym(m2)));
            const Theorem ext = set_ext(ctx.env, mid, t2, w);
            const Theorem body_eq = imp_e(and_e2(ext), forall_i(w, chain));
            return moved ? eq_trans(cur, body_eq) : body_eq;
          },
      },
      skel.node().v);
}

Theorem go_pred(CongCtx& ctx, const Pred& skel, const Pred& t1,
                const Pred& t2) {
  if (term_eq(t1, t2)) return iff_refl(ctx.env, t1);

  return std::visit(
      overloaded{
          [&](const PAnd& s) {
            const auto* a1 = std::get_if<PAnd>(&t1.node().v);
            const auto* a2 = std::get_if<PAnd>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch, "conjunction shape lost");
            }
            return and_cong(go_pred(ctx, s.left, a1->left, a2->left),
                            go_pred(ctx, s.right, a1->right, a2->right));
          },
          [&](const PImp& s) {
            const auto* a1 = std::get_if<PImp>(&t1.node().v);
            const auto* a2 = std::get_if<PImp>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch, "implication shape lost");
            }
            return imp_cong(go_pred(ctx, s.left, a1->left, a2->left),
                            go_pred(ctx, s.right, a1->right, a2->right));
          },
          [&](const PNot& s) {
            const auto* a1 = std::get_if<PNot>(&t1.node().v);
            const auto* a2 = std::get_if<PNot>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch, "negation shape lost");
            }
            return not_cong(go_pred(ctx, s.p, a1->p, a2->p));
          },
          [&](const PAll& s) {
            const auto* a1 = std::get_if<PAll>(&t1.node().v);
            const auto* a2 = std::get_if<PAll>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch, "binder shape lost");
            }
            const Var w = ctx.supply.take();
            const Expr wv = Expr::var(w);
            const Pred c1 = app(wv, 0, a1->body);
            const Pred c2 = app(wv, 0, a2->body);
            ctx.opened.push_back(w);
            const Theorem sub = go_pred(ctx, s.body, c1, c2);
            ctx.opened.pop_back();
            return forall_cong(w, sub);
          },
          [&](const PEq& s) {
            const auto* a1 = std::get_if<PEq>(&t1.node().v);
            const auto* a2 = std::get_if<PEq>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch, "equation shape lost");
            }
            const Theorem tl = go_expr(ctx, s.left, a1->left, a2->left);
            const Theorem tr = go_expr(ctx, s.right, a1->right, a2->right);
            return iff_cong2(ctx, tl, tr, [](const Expr& a, const Expr& b) {
              return Pred::eq(a, b);
            });
          },
          [&](const PIn& s) {
            const auto* a1 = std::get_if<PIn>(&t1.node().v);
            const auto* a2 = std::get_if<PIn>(&t2.node().v);
            if (a1 == nullptr || a2 == nullptr) {
              throw RuleError(ErrKind::ShapeMismatch, "membership shape lost");
            }
            const Theorem tl = go_expr(ctx, s.elem, a1->elem, a2->elem);
            const Theorem tr = go_expr(ctx, s.set, a1->set, a2->set);
            return iff_cong2(ctx, tl, tr, [](const Expr& a, const Expr& b) {
              return Pred::in(a, b);
            });
          },
      },
      skel.node().v);
}

Theorem graft_cong_impl(const Theorem& teq, const Var& v, const Term& target,
                        const ProofEnv& env) {
  const PEq* eqn = expect_eq(teq);
  const Expr e1 = eqn->left;
  const Expr e2 = eqn->right;

  CongCtx ctx{env, teq, {}, {}, FreshSupply{Namespace("fr")}};
  ctx.supply.scan(env);
  ctx.supply.scan(teq.env());
  ctx.supply.scan(teq.concl());
  ctx.supply.scan(target);
  for (const Var& x : free_vars(teq.concl())) {
    if (x.ns.is_machinery()) ctx.dangling.push_back(x.idx);
  }

  return std::visit(
      overloaded{
          [&](const Pred& p) {
            const Pred r1 = graft(v, e1, 0, p);
            const Pred r2 = graft(v, e2, 0, p);
            const Theorem out = go_pred(ctx, p, r1, r2);
            if (!term_eq(out.concl(), mk_iff(r1, r2))) {
              throw RuleError(ErrKind::ShapeMismatch,
                              "congruence produced an unexpected conclusion");
            }
            return out;
          },
          [&](const Expr& e) {
            const Expr r1 = graft(v, e1, 0, e);
            const Expr r2 = graft(v, e2, 0, e);
            const Theorem out = go_expr(ctx, e, r1, r2);
            if (!term_eq(out.concl(), Pred::eq(r1, r2))) {
              throw RuleError(ErrKind::ShapeMismatch,
                              "congruence produced an unexpected conclusion");
            }
            return out;
          },
      },
      target);
}

}  // namespace

Theorem eq_sym(const Theorem& t) {
  const PEq* n = expect_eq(t);
  FreshSupply supply{Namespace("fr")};
  supply.scan(t.concl());
  const Var h = supply.take();
  const Pred pat = Pred::eq(Expr::var(h), n->left);
  return eq_leibniz(t, h, pat, eq_refl(t.env(), n->left));
}

Theorem eq_trans(const Theorem& t1, const Theorem& t2) {
  const PEq* n1 = expect_eq(t1);
  const PEq* n2 = expect_eq(t2);
  if (!term_eq(n1->right, n2->left)) {
    throw RuleError(ErrKind::PatternMismatch,
                    "equations do not share a middle expression");
  }
  FreshSupply supply{Namespace("fr")};
  supply.scan(t1.concl());
  supply.scan(t2.concl());
  const Var h = supply.take();
  const Pred pat = Pred::eq(n1->left, Expr::var(h));
  return eq_leibniz(t2, h, pat, t1);
}

Theorem graft_cong_closed(const Theorem& teq, const Var& v, const Term& target,
                          const ProofEnv& out_env) {
  if (!teq.env().empty()) {
    throw RuleError(ErrKind::ShapeMismatch,
                    "the equation must hold without hypotheses");
  }
  return graft_cong_impl(teq, v, target, out_env);
}

Theorem graft_cong_ns(const Theorem& teq, const Var& v, const Term& target) {
  if (!disjoint_n0(teq.env(), teq.concl())) {
    throw RuleError(ErrKind::SideConditionViolated,
                    "a machinery variable is free in both the environment "
                    "and the equation");
  }
  return graft_cong_impl(teq, v, target, teq.env());
}

}  // namespace bproof
