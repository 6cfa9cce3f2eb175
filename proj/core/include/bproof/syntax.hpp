#ifndef BPROOF_SYNTAX_HPP
#define BPROOF_SYNTAX_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bproof/term.hpp"

namespace bproof {

// Free identifiers intern to consecutive indexes per namespace, in order of
// first occurrence. One table can be shared across several parses so that the
// same name means the same variable everywhere.
class SymbolTable {
 public:
  struct Entry {
    std::string ns;
    std::string name;
    Var var;
  };

  Var intern(const std::string& ns, const std::string& name);
  const Entry* lookup(const std::string& ns, const std::string& name) const;
  std::vector<Entry> entries() const;  // insertion order

 private:
  std::map<std::pair<std::string, std::string>, std::uint32_t> map_;
  std::map<std::string, std::uint32_t> next_;
  std::vector<Entry> order_;
};

// Concrete syntax, binding tightest to loosest:
//   expressions:  id | ns::id | BIG | POW(e) | CHOICE(e) | {x : e | p} | (e)
//                 e * e   (left)        e |-> e   (right)
//   predicates:   e = e | e : e | (p)
//                 not p     p & p     p or p     p => p (right)    p <=> p
//   binders:      !x.(p)  forall     #x.(p)  exists     [x := e]p  instance
// "//" starts a line comment. The token "^" is rejected: machinery variables
// have no written form and exist only behind binders.
Pred parse_pred(const std::string& text);
Expr parse_expr(const std::string& text);
Pred parse_pred_with(SymbolTable& table, const std::string& text);
Expr parse_expr_with(SymbolTable& table, const std::string& text);

// Bound variables print as x0, x1, ... in order of first display; free
// variables print as v<idx>, qualified by their namespace unless it is the
// default one. Dangling machinery leaves print as ^<idx>, which deliberately
// does not re-parse.
std::string print_pred(const Pred& p);
std::string print_expr(const Expr& e);

}  // namespace bproof

#endif  // BPROOF_SYNTAX_HPP
