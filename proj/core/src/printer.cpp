#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bproof/errors.hpp"
#include "bproof/syntax.hpp"

namespace bproof {

namespace {

// Sugar recognizers, applied before the raw connective is considered so the
// output uses the shortest spelling that re-parses to the same tree.
std::optional<std::pair<Pred, Pred>> as_iff(const Pred& p) {
  const auto* a = std::get_if<PAnd>(&p.node().v);
  if (a == nullptr) return std::nullopt;
  const auto* fwd = std::get_if<PImp>(&a->left.node().v);
  const auto* bwd = std::get_if<PImp>(&a->right.node().v);
  if (fwd == nullptr || bwd == nullptr) return std::nullopt;
  if (!term_eq(fwd->left, bwd->right) || !term_eq(fwd->right, bwd->left)) {
    return std::nullopt;
  }
  return std::make_pair(fwd->left, fwd->right);
}

std::optional<std::pair<Pred, Pred>> as_or(const Pred& p) {
  const auto* imp = std::get_if<PImp>(&p.node().v);
  if (imp == nullptr) return std::nullopt;
  const auto* neg = std::get_if<PNot>(&imp->left.node().v);
  if (neg == nullptr) return std::nullopt;
  return std::make_pair(neg->p, imp->right);
}

std::optional<Pred> as_exists(const Pred& p) {
  const auto* outer = std::get_if<PNot>(&p.node().v);
  if (outer == nullptr) return std::nullopt;
  const auto* all = std::get_if<PAll>(&outer->p.node().v);
  if (all == nullptr) return std::nullopt;
  const auto* inner = std::get_if<PNot>(&all->body.node().v);
  if (inner == nullptr) return std::nullopt;
  return inner->p;
}

// Predicate levels, loosest to tightest; a child below the position's minimum
// gets parentheses.
constexpr int kIff = 1;
constexpr int kImp = 2;
constexpr int kOr = 3;
constexpr int kAnd = 4;
constexpr int kNot = 5;
constexpr int kAtomP = 6;

constexpr int kMaplet = 1;
constexpr int kProd = 2;
constexpr int kAtomE = 3;

class Printer {
 public:
  std::string render(const Pred& p) {
    pred(p, kIff);
    return out_.str();
  }
  std::string render(const Expr& e) {
    expr(e, kMaplet);
    return out_.str();
  }

 private:
  void pred(const Pred& p, int min_level) {
    if (const auto iff = as_iff(p)) {
      wrap(kIff, min_level, [&] {
        pred(iff->first, kIff);
        out_ << " <=> ";
        pred(iff->second, kIff + 1);
      });
      return;
    }
    if (const auto ex = as_exists(p)) {
      binder('#', *ex);
      return;
    }
    if (const auto o = as_or(p)) {
      wrap(kOr, min_level, [&] {
        pred(o->first, kOr);
        out_ << " or ";
        pred(o->second, kOr + 1);
      });
      return;
    }
    std::visit(
        overloaded{
            [&](const PAnd& n) {
              wrap(kAnd, min_level, [&] {
                pred(n.left, kAnd);
                out_ << " & ";
                pred(n.right, kAnd + 1);
              });
            },
            [&](const PImp& n) {
              wrap(kImp, min_level, [&] {
                pred(n.left, kImp + 1);
                out_ << " => ";
                pred(n.right, kImp);
              });
            },
            [&](const PNot& n) {
              wrap(kNot, min_level, [&] {
                out_ << "not ";
                pred(n.p, kNot);
              });
            },
            [&](const PAll& n) { binder('!', n.body); },
            [&](const PEq& n) {
              expr(n.left, kMaplet);
              out_ << " = ";
              expr(n.right, kMaplet);
            },
            [&](const PIn& n) {
              expr(n.elem, kMaplet);
              out_ << " : ";
              expr(n.set, kMaplet);
            },
        },
        p.node().v);
  }

  void binder(char mark, const Pred& body) {
    const std::string name = "x" + std::to_string(next_display_++);
    out_ << mark << name << ".(";
    stack_.push_back(name);
    pred(body, kIff);
    stack_.pop_back();
    out_ << ")";
  }

  void expr(const Expr& e, int min_level) {
    std::visit(
        overloaded{
            [&](const EVar& n) { variable(n.v); },
            [&](const EPair& n) {
              wrap(kMaplet, min_level, [&] {
                expr(n.left, kProd);
                out_ << " |-> ";
                expr(n.right, kMaplet);
              });
            },
            [&](const EChoice& n) {
              out_ << "CHOICE(";
              expr(n.set, kMaplet);
              out_ << ")";
            },
            [&](const EBig&) { out_ << "BIG"; },
            [&](const EPow& n) {
              out_ << "POW(";
              expr(n.set, kMaplet);
              out_ << ")";
            },
            [&](const EProd& n) {
              wrap(kProd, min_level, [&] {
                expr(n.left, kProd);
                out_ << " * ";
                expr(n.right, kProd + 1);
              });
            },
            [&](const ECmp& n) {
              const std::string name = "x" + std::to_string(next_display_++);
              out_ << "{" << name << " : ";
              expr(n.dom, kMaplet);
              out_ << " | ";
              stack_.push_back(name);
              pred(n.body, kIff);
              stack_.pop_back();
              out_ << "}";
            },
        },
        e.node().v);
  }

  void variable(const Var& v) {
    if (v.ns.is_machinery()) {
      if (v.idx < stack_.size()) {
        out_ << stack_[stack_.size() - 1 - v.idx];
      } else {
        // Dangling: report the index as seen from the root. This output has
        // no parse, on purpose.
        out_ << "^" << (v.idx - stack_.size());
      }
      return;
    }
    if (!(v.ns == Namespace::user())) out_ << v.ns.tag() << "::";
    out_ << "v" << v.idx;
  }

  template <typename Body>
  void wrap(int level, int min_level, Body body) {
    const bool parens = level < min_level;
    if (parens) out_ << "(";
    body();
    if (parens) out_ << ")";
  }

  std::ostringstream out_;
  std::vector<std::string> stack_;
  unsigned next_display_ = 0;
};

}  // namespace

std::string print_pred(const Pred& p) { return Printer().render(p); }

std::string print_expr(const Expr& e) { return Printer().render(e); }

}  // namespace bproof
