#include "bproof/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "bproof/errors.hpp"

namespace bproof {

namespace {

bool valid_tag(const std::string& tag) {
  if (tag == "^") return true;
  if (tag.empty()) return false;
  return std::all_of(tag.begin(), tag.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

Namespace::Namespace(std::string tag) : tag_(std::move(tag)) {
  if (!valid_tag(tag_)) throw std::invalid_argument("invalid namespace token: " + tag_);
}

const Namespace& Namespace::machinery() {
  static const Namespace n{"^"};
  return n;
}

const Namespace& Namespace::user() {
  static const Namespace n{"u"};
  return n;
}

Var mvar(std::uint32_t idx) { return Var{Namespace::machinery(), idx}; }
Var uvar(std::uint32_t idx) { return Var{Namespace::user(), idx}; }
Var nvar(const std::string& ns, std::uint32_t idx) { return Var{Namespace(ns), idx}; }

Expr Expr::var(Var v) { return Expr(std::make_shared<const ExprNode>(ExprNode{EVar{std::move(v)}})); }
Expr Expr::var(const std::string& ns, std::uint32_t idx) { return var(nvar(ns, idx)); }
Expr Expr::pair(Expr l, Expr r) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{EPair{std::move(l), std::move(r)}}));
}
Expr Expr::choice(Expr s) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{EChoice{std::move(s)}}));
}
Expr Expr::big() { return Expr(std::make_shared<const ExprNode>(ExprNode{EBig{}})); }
Expr Expr::pow(Expr s) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{EPow{std::move(s)}}));
}
Expr Expr::prod(Expr l, Expr r) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{EProd{std::move(l), std::move(r)}}));
}
Expr Expr::cmp(Expr dom, Pred body) {
  return Expr(std::make_shared<const ExprNode>(ExprNode{ECmp{std::move(dom), std::move(body)}}));
}

Pred Pred::conj(Pred l, Pred r) {
  return Pred(std::make_shared<const PredNode>(PredNode{PAnd{std::move(l), std::move(r)}}));
}
Pred Pred::imp(Pred l, Pred r) {
  return Pred(std::make_shared<const PredNode>(PredNode{PImp{std::move(l), std::move(r)}}));
}
Pred Pred::neg(Pred p) {
  return Pred(std::make_shared<const PredNode>(PredNode{PNot{std::move(p)}}));
}
Pred Pred::all(Pred body) {
  return Pred(std::make_shared<const PredNode>(PredNode{PAll{std::move(body)}}));
}
Pred Pred::eq(Expr l, Expr r) {
  return Pred(std::make_shared<const PredNode>(PredNode{PEq{std::move(l), std::move(r)}}));
}
Pred Pred::in(Expr e, Expr s) {
  return Pred(std::make_shared<const PredNode>(PredNode{PIn{std::move(e), std::move(s)}}));
}

bool term_eq(const Expr& a, const Expr& b) {
  if (a.ptr() == b.ptr()) return true;
  const auto& na = a.node().v;
  const auto& nb = b.node().v;
  if (na.index() != nb.index()) return false;
  return std::visit(
      overloaded{
          [&](const EVar& x) { return x.v == std::get<EVar>(nb).v; },
          [&](const EPair& x) {
            const auto& y = std::get<EPair>(nb);
            return term_eq(x.left, y.left) && term_eq(x.right, y.right);
          },
          [&](const EChoice& x) { return term_eq(x.set, std::get<EChoice>(nb).set); },
          [&](const EBig&) { return true; },
          [&](const EPow& x) { return term_eq(x.set, std::get<EPow>(nb).set); },
          [&](const EProd& x) {
            const auto& y = std::get<EProd>(nb);
            return term_eq(x.left, y.left) && term_eq(x.right, y.right);
          },
          [&](const ECmp& x) {
            const auto& y = std::get<ECmp>(nb);
            return term_eq(x.dom, y.dom) && term_eq(x.body, y.body);
          },
      },
      na);
}

bool term_eq(const Pred& a, const Pred& b) {
  if (a.ptr() == b.ptr()) return true;
  const auto& na = a.node().v;
  const auto& nb = b.node().v;
  if (na.index() != nb.index()) return false;
  return std::visit(
      overloaded{
          [&](const PAnd& x) {
            const auto& y = std::get<PAnd>(nb);
            return term_eq(x.left, y.left) && term_eq(x.right, y.right);
          },
          [&](const PImp& x) {
            const auto& y = std::get<PImp>(nb);
            return term_eq(x.left, y.left) && term_eq(x.right, y.right);
          },
          [&](const PNot& x) { return term_eq(x.p, std::get<PNot>(nb).p); },
          [&](const PAll& x) { return term_eq(x.body, std::get<PAll>(nb).body); },
          [&](const PEq& x) {
            const auto& y = std::get<PEq>(nb);
            return term_eq(x.left, y.left) && term_eq(x.right, y.right);
          },
          [&](const PIn& x) {
            const auto& y = std::get<PIn>(nb);
            return term_eq(x.elem, y.elem) && term_eq(x.set, y.set);
          },
      },
      na);
}

bool term_eq(const Term& a, const Term& b) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<Pred>(a)) return term_eq(std::get<Pred>(a), std::get<Pred>(b));
  return term_eq(std::get<Expr>(a), std::get<Expr>(b));
}

bool Expr::operator==(const Expr& o) const { return term_eq(*this, o); }
bool Pred::operator==(const Pred& o) const { return term_eq(*this, o); }

unsigned depth(const Expr& t) {
  return std::visit(
      overloaded{
          [](const EVar&) -> unsigned { return 1; },
          [](const EPair& x) { return 1 + std::max(depth(x.left), depth(x.right)); },
          [](const EChoice& x) { return 1 + depth(x.set); },
          [](const EBig&) -> unsigned { return 1; },
          [](const EPow& x) { return 1 + depth(x.set); },
          [](const EProd& x) { return 1 + std::max(depth(x.left), depth(x.right)); },
          [](const ECmp& x) { return 1 + std::max(depth(x.dom), depth(x.body)); },
      },
      t.node().v);
}

unsigned depth(const Pred& t) {
  return std::visit(
      overloaded{
          [](const PAnd& x) { return 1 + std::max(depth(x.left), depth(x.right)); },
          [](const PImp& x) { return 1 + std::max(depth(x.left), depth(x.right)); },
          [](const PNot& x) { return 1 + depth(x.p); },
          [](const PAll& x) { return 1 + depth(x.body); },
          [](const PEq& x) { return 1 + std::max(depth(x.left), depth(x.right)); },
          [](const PIn& x) { return 1 + std::max(depth(x.elem), depth(x.set)); },
      },
      t.node().v);
}

unsigned depth(const Term& t) {
  if (std::holds_alternative<Pred>(t)) return depth(std::get<Pred>(t));
  return depth(std::get<Expr>(t));
}

namespace {

void dump_expr(std::ostream& os, const Expr& t);
void dump_pred(std::ostream& os, const Pred& t);

void dump_expr(std::ostream& os, const Expr& t) {
  std::visit(
      overloaded{
          [&](const EVar& x) { os << "EVar(" << x.v.ns.tag() << "," << x.v.idx << ")"; },
          [&](const EPair& x) {
            os << "EPair(";
            dump_expr(os, x.left);
            os << ", ";
            dump_expr(os, x.right);
            os << ")";
          },
          [&](const EChoice& x) {
            os << "EChoice(";
            dump_expr(os, x.set);
            os << ")";
          },
          [&](const EBig&) { os << "EBig"; },
          [&](const EPow& x) {
            os << "EPow(";
            dump_expr(os, x.set);
            os << ")";
          },
          [&](const EProd& x) {
            os << "EProd(";
            dump_expr(os, x.left);
            os << ", ";
            dump_expr(os, x.right);
            os << ")";
          },
          [&](const ECmp& x) {
            os << "ECmp(";
            dump_expr(os, x.dom);
            os << ", ";
            dump_pred(os, x.body);
            os << ")";
          },
      },
      t.node().v);
}

void dump_pred(std::ostream& os, const Pred& t) {
  std::visit(
      overloaded{
          [&](const PAnd& x) {
            os << "PAnd(";
            dump_pred(os, x.left);
            os << ", ";
            dump_pred(os, x.right);
            os << ")";
          },
          [&](const PImp& x) {
            os << "PImp(";
            dump_pred(os, x.left);
            os << ", ";
            dump_pred(os, x.right);
            os << ")";
          },
          [&](const PNot& x) {
            os << "PNot(";
            dump_pred(os, x.p);
            os << ")";
          },
          [&](const PAll& x) {
            os << "PAll(";
            dump_pred(os, x.body);
            os << ")";
          },
          [&](const PEq& x) {
            os << "PEq(";
            dump_expr(os, x.left);
            os << ", ";
            dump_expr(os, x.right);
            os << ")";
          },
          [&](const PIn& x) {
            os << "PIn(";
            dump_expr(os, x.elem);
            os << ", ";
            dump_expr(os, x.set);
            os << ")";
          },
      },
      t.node().v);
}

}  // namespace

std::string dump(const Expr& t) {
  std::ostringstream os;
  dump_expr(os, t);
  return os.str();
}

std::string dump(const Pred& t) {
  std::ostringstream os;
  dump_pred(os, t);
  return os.str();
}

std::string dump(const Term& t) {
  if (std::holds_alternative<Pred>(t)) return dump(std::get<Pred>(t));
  return dump(std::get<Expr>(t));
}

std::string dump(const Var& v) {
  std::ostringstream os;
  os << v.ns.tag() << "::" << v.idx;
  return os.str();
}

const char* to_string(ErrKind k) {
  switch (k) {
    case ErrKind::NotAForall: return "NotAForall";
    case ErrKind::NotAComprehension: return "NotAComprehension";
    case ErrKind::NotFresh: return "NotFresh";
    case ErrKind::NotInEnv: return "NotInEnv";
    case ErrKind::EnvMismatch: return "EnvMismatch";
    case ErrKind::ShapeMismatch: return "ShapeMismatch";
    case ErrKind::PatternMismatch: return "PatternMismatch";
    case ErrKind::SameVariable: return "SameVariable";
    case ErrKind::SideConditionViolated: return "SideConditionViolated";
    case ErrKind::NotSyntacticallyEqual: return "NotSyntacticallyEqual";
  }
  return "UnknownError";
}

}  // namespace bproof
