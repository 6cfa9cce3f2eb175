#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bproof/binder.hpp"
#include "bproof/errors.hpp"
#include "bproof/syntax.hpp"

namespace bproof {

Var SymbolTable::intern(const std::string& ns, const std::string& name) {
  const auto key = std::make_pair(ns, name);
  if (const auto it = map_.find(key); it != map_.end()) {
    return Var{Namespace(ns), it->second};
  }
  std::uint32_t& counter = next_[ns];
  if (counter >= (1u << 20)) {
    throw SyntaxError(SourceSpan{0, 0}, "too many distinct identifiers in namespace " + ns);
  }
  const std::uint32_t idx = counter++;
  map_.emplace(key, idx);
  order_.push_back(Entry{ns, name, Var{Namespace(ns), idx}});
  return order_.back().var;
}

const SymbolTable::Entry* SymbolTable::lookup(const std::string& ns,
                                              const std::string& name) const {
  const auto it = map_.find(std::make_pair(ns, name));
  if (it == map_.end()) return nullptr;
  for (const Entry& e : order_) {
    if (e.ns == ns && e.name == name) return &e;
  }
  return nullptr;
}

std::vector<SymbolTable::Entry> SymbolTable::entries() const { return order_; }

namespace {

// Bound variables become placeholder indexes far above anything the table can
// intern (it stops at 2^20), then vanish into binders before a parse returns.
constexpr std::uint32_t kBoundBase = 1u << 20;

struct Token {
  enum Kind { Word, Sym, End };
  Kind kind;
  std::string text;
  SourceSpan span;
};

bool word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

std::vector<Token> lex(std::string_view text) {
  static const std::string_view multi[] = {"|->", "<=>", "::", ":=", "=>"};
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '^') {
      throw UnboundNamespaceToken(SourceSpan{i, i + 1});
    }
    if (word_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && word_char(text[j])) ++j;
      out.push_back(Token{Token::Word, std::string(text.substr(i, j - i)),
                          SourceSpan{i, j}});
      i = j;
      continue;
    }
    bool matched = false;
    for (const std::string_view m : multi) {
      if (text.substr(i, m.size()) == m) {
        out.push_back(Token{Token::Sym, std::string(m), SourceSpan{i, i + m.size()}});
        i += m.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static const std::string_view singles = "()[]{}|.,=:&*!#";
    if (singles.find(c) != std::string_view::npos) {
      out.push_back(Token{Token::Sym, std::string(1, c), SourceSpan{i, i + 1}});
      ++i;
      continue;
    }
    throw SyntaxError(SourceSpan{i, i + 1}, std::string("stray character '") + c + "'");
  }
  out.push_back(Token{Token::End, "", SourceSpan{text.size(), text.size()}});
  return out;
}

bool reserved_bound_name(const std::string& s) {
  if (s.size() < 2 || s[0] != 'x') return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i])) == 0) return false;
  }
  return true;
}

bool is_keyword(const std::string& s) {
  return s == "or" || s == "not" || s == "BIG" || s == "POW" || s == "CHOICE";
}

class Parser {
 public:
  Parser(SymbolTable& table, std::string_view text)
      : table_(table), toks_(lex(text)) {}

  Pred pred_top() {
    const Pred p = p_iff();
    expect_end();
    return p;
  }

  Expr expr_top() {
    const Expr e = e_maplet();
    expect_end();
    return e;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }

  bool at_sym(std::string_view s) const {
    return cur().kind == Token::Sym && cur().text == s;
  }
  bool at_word(std::string_view s) const {
    return cur().kind == Token::Word && cur().text == s;
  }

  void advance() { ++pos_; }

  bool eat_sym(std::string_view s) {
    if (!at_sym(s)) return false;
    advance();
    return true;
  }

  void expect_sym(std::string_view s) {
    if (!eat_sym(s)) {
      throw SyntaxError(cur().span, "expected '" + std::string(s) + "'");
    }
  }

  void expect_end() {
    if (cur().kind != Token::End) {
      throw SyntaxError(cur().span, "unexpected trailing input");
    }
  }

  std::string expect_name() {
    if (cur().kind != Token::Word || is_keyword(cur().text)) {
      throw SyntaxError(cur().span, "expected an identifier");
    }
    std::string s = cur().text;
    advance();
    return s;
  }

  // -- predicates, loosest first ------------------------------------------

  Pred p_iff() {
    Pred p = p_imp();
    while (eat_sym("<=>")) {
      const Pred q = p_imp();
      p = Pred::conj(Pred::imp(p, q), Pred::imp(q, p));
    }
    return p;
  }

  Pred p_imp() {
    const Pred p = p_or();
    if (eat_sym("=>")) return Pred::imp(p, p_imp());
    return p;
  }

  Pred p_or() {
    Pred p = p_and();
    while (at_word("or")) {
      advance();
      p = Pred::imp(Pred::neg(p), p_and());
    }
    return p;
  }

  Pred p_and() {
    Pred p = p_not();
    while (eat_sym("&")) p = Pred::conj(p, p_not());
    return p;
  }

  Pred p_not() {
    if (at_word("not")) {
      advance();
      return Pred::neg(p_not());
    }
    return p_atom();
  }

  Pred p_atom() {
    if (at_sym("!") || at_sym("#")) return p_binder();
    if (at_sym("[")) return p_subst_sugar();
    if (at_sym("(")) {
      // Either a parenthesized predicate or an expression that happens to
      // start with '(' followed by = or :. Try the relation first.
      const std::size_t save = pos_;
      try {
        return p_relation();
      } catch (const SyntaxError&) {
        pos_ = save;
      }
      expect_sym("(");
      const Pred p = p_iff();
      expect_sym(")");
      return p;
    }
    return p_relation();
  }

  Pred p_relation() {
    const Expr lhs = e_maplet();
    if (eat_sym("=")) return Pred::eq(lhs, e_maplet());
    if (eat_sym(":")) return Pred::in(lhs, e_maplet());
    throw SyntaxError(cur().span, "expected '=' or ':' after expression");
  }

  Pred p_binder() {
    const bool universal = at_sym("!");
    advance();
    const std::string name = expect_name();
    if (at_sym(",")) {
      throw SyntaxError(cur().span, "single-variable binders only; nest one binder per variable");
    }
    expect_sym(".");
    expect_sym("(");
    const Var v = push_bound(name);
    const Pred body = p_iff();
    pop_bound();
    expect_sym(")");
    return universal ? mk_forall(v, body) : mk_exists(v, body);
  }

  Pred p_subst_sugar() {
    expect_sym("[");
    const std::string name = expect_name();
    expect_sym(":=");
    const Expr e = e_maplet();
    expect_sym("]");
    const Var v = push_bound(name);
    const Pred body = p_atom();
    pop_bound();
    return apply_forall(mk_forall(v, body), e);
  }

  // -- expressions ---------------------------------------------------------

  Expr e_maplet() {
    const Expr e = e_prod();
    if (eat_sym("|->")) return Expr::pair(e, e_maplet());
    return e;
  }

  Expr e_prod() {
    Expr e = e_primary();
    while (eat_sym("*")) e = Expr::prod(e, e_primary());
    return e;
  }

  Expr e_primary() {
    if (at_word("BIG")) {
      advance();
      return Expr::big();
    }
    if (at_word("POW")) {
      advance();
      expect_sym("(");
      const Expr e = e_maplet();
      expect_sym(")");
      return Expr::pow(e);
    }
    if (at_word("CHOICE")) {
      advance();
      expect_sym("(");
      const Expr e = e_maplet();
      expect_sym(")");
      return Expr::choice(e);
    }
    if (eat_sym("{")) {
      const std::string name = expect_name();
      expect_sym(":");
      const Expr dom = e_maplet();
      expect_sym("|");
      const Var v = push_bound(name);
      const Pred body = p_iff();
      pop_bound();
      expect_sym("}");
      return mk_cmp(v, dom, body);
    }
    if (eat_sym("(")) {
      const Expr e = e_maplet();
      expect_sym(")");
      return e;
    }
    if (cur().kind == Token::Word && !is_keyword(cur().text)) {
      return Expr::var(e_variable());
    }
    throw SyntaxError(cur().span, "expected an expression");
  }

  Var e_variable() {
    const Token first = cur();
    advance();
    if (eat_sym("::")) {
      const std::string name = expect_name();
      return table_.intern(first.text, name);
    }
    for (auto it = bound_.rbegin(); it != bound_.rend(); ++it) {
      if (it->first == first.text) return it->second;
    }
    if (reserved_bound_name(first.text)) {
      throw SyntaxError(first.span, "'" + first.text + "' is reserved for bound variables");
    }
    return table_.intern(Namespace::user().tag(), first.text);
  }

  Var push_bound(const std::string& name) {
    const Var v{Namespace::user(), kBoundBase + bound_serial_++};
    bound_.emplace_back(name, v);
    return v;
  }

  void pop_bound() { bound_.pop_back(); }

  SymbolTable& table_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, Var>> bound_;
  std::uint32_t bound_serial_ = 0;
};

}  // namespace

Pred parse_pred_with(SymbolTable& table, const std::string& text) {
  return Parser(table, text).pred_top();
}

Expr parse_expr_with(SymbolTable& table, const std::string& text) {
  return Parser(table, text).expr_top();
}

Pred parse_pred(const std::string& text) {
  SymbolTable table;
  return parse_pred_with(table, text);
}

Expr parse_expr(const std::string& text) {
  SymbolTable table;
  return parse_expr_with(table, text);
}

}  // namespace bproof
