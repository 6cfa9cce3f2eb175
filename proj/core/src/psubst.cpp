#include "bproof/psubst.hpp"

namespace bproof {

struct ParallelSubst::Rep {
  struct Identity {};
  struct Shift {
    Namespace ns;
    Height d;
  };
  struct Single {
    Var v;
    Expr e;
  };
  struct Table {
    std::vector<std::pair<Var, Expr>> entries;
  };
  struct Compose {
    ParallelSubst outer, inner;
  };

  std::variant<Identity, Shift, Single, Table, Compose> v;
  std::optional<std::vector<Var>> support;
};

ParallelSubst ParallelSubst::identity() {
  return ParallelSubst(std::make_shared<const Rep>(Rep{Rep::Identity{}, std::nullopt}));
}

ParallelSubst ParallelSubst::shift(Namespace ns, Height d) {
  return ParallelSubst(
      std::make_shared<const Rep>(Rep{Rep::Shift{std::move(ns), d}, std::nullopt}));
}

ParallelSubst ParallelSubst::single(Var v, Expr e) {
  return ParallelSubst(
      std::make_shared<const Rep>(Rep{Rep::Single{std::move(v), std::move(e)}, std::nullopt}));
}

ParallelSubst ParallelSubst::table(std::vector<std::pair<Var, Expr>> entries) {
  return ParallelSubst(
      std::make_shared<const Rep>(Rep{Rep::Table{std::move(entries)}, std::nullopt}));
}

ParallelSubst ParallelSubst::compose(ParallelSubst outer, ParallelSubst inner) {
  return ParallelSubst(std::make_shared<const Rep>(
      Rep{Rep::Compose{std::move(outer), std::move(inner)}, std::nullopt}));
}

ParallelSubst ParallelSubst::with_support(std::vector<Var> vars) const {
  auto rep = std::make_shared<Rep>(*rep_);
  rep->support = std::move(vars);
  return ParallelSubst(std::move(rep));
}

const std::optional<std::vector<Var>>& ParallelSubst::support() const { return rep_->support; }

Expr ParallelSubst::image(const Var& v) const {
  return std::visit(
      overloaded{
          [&](const Rep::Identity&) { return Expr::var(v); },
          [&](const Rep::Shift& s) {
            if (v.ns == s.ns && v.idx >= s.d) return Expr::var(Var{v.ns, v.idx + 1});
            return Expr::var(v);
          },
          [&](const Rep::Single& s) { return s.v == v ? s.e : Expr::var(v); },
          [&](const Rep::Table& tbl) {
            Expr out = Expr::var(v);
            for (const auto& [key, val] : tbl.entries)
              if (key == v) out = val;
            return out;
          },
          [&](const Rep::Compose& c) { return papply(c.outer, c.inner.image(v)); },
      },
      rep_->v);
}

namespace {

// Image of a variable seen from under d binders: bound indexes are left
// alone, free ones are resolved at height 0 and the image is re-lifted once
// per crossed binder.
Expr leaf_image(const ParallelSubst& s, const Var& v, Height d) {
  if (v.ns.is_machinery() && v.idx < d) return Expr::var(v);
  const Var base = v.ns.is_machinery() ? mvar(v.idx - d) : v;
  Expr img = s.image(base);
  for (Height i = 0; i < d; ++i) img = lift(Namespace::machinery(), 0, img);
  return img;
}

Expr papply_at(const ParallelSubst& s, Height d, const Expr& t);
Pred papply_at(const ParallelSubst& s, Height d, const Pred& t);

Expr papply_at(const ParallelSubst& s, Height d, const Expr& t) {
  return std::visit(
      overloaded{
          [&](const EVar& x) { return leaf_image(s, x.v, d); },
          [&](const EPair& x) {
            return Expr::pair(papply_at(s, d, x.left), papply_at(s, d, x.right));
          },
          [&](const EChoice& x) { return Expr::choice(papply_at(s, d, x.set)); },
          [&](const EBig&) { return t; },
          [&](const EPow& x) { return Expr::pow(papply_at(s, d, x.set)); },
          [&](const EProd& x) {
            return Expr::prod(papply_at(s, d, x.left), papply_at(s, d, x.right));
          },
          [&](const ECmp& x) {
            return Expr::cmp(papply_at(s, d, x.dom), papply_at(s, d + 1, x.body));
          },
      },
      t.node().v);
}

Pred papply_at(const ParallelSubst& s, Height d, const Pred& t) {
  return std::visit(
      overloaded{
          [&](const PAnd& x) {
            return Pred::conj(papply_at(s, d, x.left), papply_at(s, d, x.right));
          },
          [&](const PImp& x) {
            return Pred::imp(papply_at(s, d, x.left), papply_at(s, d, x.right));
          },
          [&](const PNot& x) { return Pred::neg(papply_at(s, d, x.p)); },
          [&](const PAll& x) { return Pred::all(papply_at(s, d + 1, x.body)); },
          [&](const PEq& x) {
            return Pred::eq(papply_at(s, d, x.left), papply_at(s, d, x.right));
          },
          [&](const PIn& x) {
            return Pred::in(papply_at(s, d, x.elem), papply_at(s, d, x.set));
          },
      },
      t.node().v);
}

}  // namespace

Expr papply(const ParallelSubst& s, const Expr& t) { return papply_at(s, 0, t); }
Pred papply(const ParallelSubst& s, const Pred& t) { return papply_at(s, 0, t); }

Term papply(const ParallelSubst& s, const Term& t) {
  if (std::holds_alternative<Pred>(t)) return Term{papply(s, std::get<Pred>(t))};
  return Term{papply(s, std::get<Expr>(t))};
}

}  // namespace bproof
