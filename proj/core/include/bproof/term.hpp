#ifndef BPROOF_TERM_HPP
#define BPROOF_TERM_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>

namespace bproof {

// Variables are pairs (namespace, index). Binders bind exclusively in the
// machinery namespace "^"; indexes there are de Bruijn indexes. Every other
// namespace is a supply of eternally free names, so its indexes never shift
// under binders.
class Namespace {
 public:
  // Valid tokens: "^" or a nonempty word over [A-Za-z0-9_].
  explicit Namespace(std::string tag);

  static const Namespace& machinery();  // "^"
  static const Namespace& user();       // "u", the parser default

  bool is_machinery() const { return tag_ == "^"; }
  const std::string& tag() const { return tag_; }

  bool operator==(const Namespace& o) const { return tag_ == o.tag_; }
  std::strong_ordering operator<=>(const Namespace& o) const {
    return tag_.compare(o.tag_) <=> 0;
  }

 private:
  std::string tag_;
};

struct Var {
  Namespace ns;
  std::uint32_t idx = 0;

  bool operator==(const Var&) const = default;
  std::strong_ordering operator<=>(const Var&) const = default;
};

// Shorthand used pervasively by tests and tools.
Var mvar(std::uint32_t idx);                         // (^, idx)
Var uvar(std::uint32_t idx);                         // (u, idx)
Var nvar(const std::string& ns, std::uint32_t idx);  // (ns, idx)

class Expr;
class Pred;
struct ExprNode;
struct PredNode;

// Expressions and predicates are immutable trees with shared subterms.
// Copies are O(1); all operations build fresh spines and share the rest.
class Expr {
 public:
  static Expr var(Var v);
  static Expr var(const std::string& ns, std::uint32_t idx);
  static Expr pair(Expr left, Expr right);
  static Expr choice(Expr set);
  static Expr big();
  static Expr pow(Expr set);
  static Expr prod(Expr left, Expr right);
  // body is a one-binder scope: its (^,0) refers to the comprehension's
  // bound variable. dom is outside the binder.
  static Expr cmp(Expr dom, Pred body);

  const ExprNode& node() const { return *node_; }
  const std::shared_ptr<const ExprNode>& ptr() const { return node_; }

  bool operator==(const Expr& o) const;

 private:
  explicit Expr(std::shared_ptr<const ExprNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ExprNode> node_;
};

class Pred {
 public:
  static Pred conj(Pred left, Pred right);
  static Pred imp(Pred left, Pred right);
  static Pred neg(Pred p);
  // Raw binder constructor: body is already in de Bruijn form. The
  // binder-introducing front doors are mk_forall / mk_exists in binder.hpp.
  static Pred all(Pred body);
  static Pred eq(Expr left, Expr right);
  static Pred in(Expr elem, Expr set);

  const PredNode& node() const { return *node_; }
  const std::shared_ptr<const PredNode>& ptr() const { return node_; }

  bool operator==(const Pred& o) const;

 private:
  explicit Pred(std::shared_ptr<const PredNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const PredNode> node_;
};

struct EVar {
  Var v;
};
struct EPair {
  Expr left, right;
};
struct EChoice {
  Expr set;
};
struct EBig {};
struct EPow {
  Expr set;
};
struct EProd {
  Expr left, right;
};
struct ECmp {
  Expr dom;
  Pred body;
};

struct ExprNode {
  std::variant<EVar, EPair, EChoice, EBig, EPow, EProd, ECmp> v;
};

struct PAnd {
  Pred left, right;
};
struct PImp {
  Pred left, right;
};
struct PNot {
  Pred p;
};
struct PAll {
  Pred body;
};
struct PEq {
  Expr left, right;
};
struct PIn {
  Expr elem, set;
};

struct PredNode {
  std::variant<PAnd, PImp, PNot, PAll, PEq, PIn> v;
};

using Term = std::variant<Pred, Expr>;

// Structural equality; alpha-equivalence is free because bound variables are
// nameless. O(min size), with a pointer fast path for shared subterms.
bool term_eq(const Expr& a, const Expr& b);
bool term_eq(const Pred& a, const Pred& b);
bool term_eq(const Term& a, const Term& b);

// Leaves have depth 1, inner nodes 1 + max over children.
unsigned depth(const Expr& t);
unsigned depth(const Pred& t);
unsigned depth(const Term& t);

// Constructor-shaped rendering, e.g. "PAll(PEq(EVar(^,0), EVar(^,0)))".
// Stable across runs; used by the CLI `parse` subcommand and by tests.
std::string dump(const Expr& t);
std::string dump(const Pred& t);
std::string dump(const Term& t);
std::string dump(const Var& v);

// Helper for std::visit.
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace bproof

#endif  // BPROOF_TERM_HPP
