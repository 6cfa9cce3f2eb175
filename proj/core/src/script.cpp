#include "bproof/script.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "bproof/derived.hpp"
#include "bproof/errors.hpp"
#include "bproof/syntax.hpp"

namespace bproof {

namespace {

struct Arg {
  bool quoted;
  std::string text;
};

// Raised for malformed script structure, as opposed to a rule refusing.
struct ScriptError {
  std::string what;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& s) {
  const std::size_t pos = s.find("//");
  return pos == std::string::npos ? s : s.substr(0, pos);
}

std::vector<Arg> split_args(const std::string& s) {
  std::vector<Arg> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c == '"') {
      const std::size_t close = s.find('"', i + 1);
      if (close == std::string::npos) throw ScriptError{"unterminated quote"};
      out.push_back(Arg{true, s.substr(i + 1, close - i - 1)});
      i = close + 1;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '"') ++j;
    out.push_back(Arg{false, s.substr(i, j - i)});
    i = j;
  }
  return out;
}

struct Ctx {
  SymbolTable table;
  ProofEnv env;
  std::map<std::string, Theorem> thms;

  const Arg& arg(const std::vector<Arg>& args, std::size_t i) {
    if (i >= args.size()) throw ScriptError{"missing argument"};
    return args[i];
  }

  Pred pred(const std::vector<Arg>& args, std::size_t i) {
    const Arg& a = arg(args, i);
    if (!a.quoted) throw ScriptError{"expected a quoted predicate"};
    return parse_pred_with(table, a.text);
  }

  Expr expr(const std::vector<Arg>& args, std::size_t i) {
    const Arg& a = arg(args, i);
    if (!a.quoted) throw ScriptError{"expected a quoted expression"};
    return parse_expr_with(table, a.text);
  }

  const Theorem& thm(const std::vector<Arg>& args, std::size_t i) {
    const Arg& a = arg(args, i);
    if (a.quoted) throw ScriptError{"expected a step label"};
    const auto it = thms.find(a.text);
    if (it == thms.end()) throw ScriptError{"unknown step label " + a.text};
    return it->second;
  }

  Var var(const std::vector<Arg>& args, std::size_t i) {
    const Arg& a = arg(args, i);
    if (a.quoted) throw ScriptError{"expected a variable name"};
    const std::size_t sep = a.text.find("::");
    if (sep == std::string::npos) {
      return table.intern(Namespace::user().tag(), a.text);
    }
    return table.intern(a.text.substr(0, sep), a.text.substr(sep + 2));
  }

  void done(const std::vector<Arg>& args, std::size_t n) const {
    if (args.size() != n) throw ScriptError{"wrong number of arguments"};
  }
};

using Handler = std::function<Theorem(Ctx&, const std::vector<Arg>&)>;

const std::map<std::string, Handler>& registry() {
  static const std::map<std::string, Handler> table = {
      {"ax",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Pred p = c.pred(a, 0);
         c.done(a, 1);
         return ax(c.env, p);
       }},
      {"hyp",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Pred p = c.pred(a, 0);
         c.done(a, 1);
         return ax(c.env.add(p), p);
       }},
      {"weaken",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         if (a.size() < 2) throw ScriptError{"missing argument"};
         ProofEnv extra;
         for (std::size_t i = 1; i < a.size(); ++i) extra = extra.add(c.pred(a, i));
         return weaken(t, extra);
       }},
      {"and_i",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem l = c.thm(a, 0);
         const Theorem r = c.thm(a, 1);
         c.done(a, 2);
         return and_i(l, r);
       }},
      {"and_e1",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         c.done(a, 1);
         return and_e1(t);
       }},
      {"and_e2",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         c.done(a, 1);
         return and_e2(t);
       }},
      {"imp_i",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Pred p = c.pred(a, 0);
         const Theorem t = c.thm(a, 1);
         c.done(a, 2);
         return imp_i(p, t);
       }},
      {"imp_e",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem l = c.thm(a, 0);
         const Theorem r = c.thm(a, 1);
         c.done(a, 2);
         return imp_e(l, r);
       }},
      {"not_i",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem q = c.thm(a, 0);
         const Theorem nq = c.thm(a, 1);
         const Pred p = c.pred(a, 2);
         c.done(a, 3);
         return not_i(q, nq, p);
       }},
      {"absurd_i",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem q = c.thm(a, 0);
         const Theorem nq = c.thm(a, 1);
         const Pred p = c.pred(a, 2);
         c.done(a, 3);
         return absurd_i(q, nq, p);
       }},
      {"forall_i",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Var v = c.var(a, 0);
         const Theorem t = c.thm(a, 1);
         c.done(a, 2);
         return forall_i(v, t);
       }},
      {"forall_e",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         const Expr e = c.expr(a, 1);
         c.done(a, 2);
         return forall_e(t, e);
       }},
      {"eq_refl",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Expr e = c.expr(a, 0);
         c.done(a, 1);
         return eq_refl(c.env, e);
       }},
      {"eq_leibniz",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem teq = c.thm(a, 0);
         const Var v = c.var(a, 1);
         const Pred p = c.pred(a, 2);
         const Theorem tp = c.thm(a, 3);
         c.done(a, 4);
         return eq_leibniz(teq, v, p, tp);
       }},
      {"mem_cmp",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Expr e = c.expr(a, 0);
         const Expr cmp = c.expr(a, 1);
         c.done(a, 2);
         return mem_cmp(c.env, e, cmp);
       }},
      {"mem_pow",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Expr s = c.expr(a, 0);
         const Expr t = c.expr(a, 1);
         const Var v = c.var(a, 2);
         c.done(a, 3);
         return mem_pow(c.env, s, t, v);
       }},
      {"set_ext",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Expr s = c.expr(a, 0);
         const Expr t = c.expr(a, 1);
         const Var v = c.var(a, 2);
         c.done(a, 3);
         return set_ext(c.env, s, t, v);
       }},
      {"choice_i",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         c.done(a, 1);
         return choice_i(t);
       }},
      {"pair_eq_e1",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         c.done(a, 1);
         return pair_eq_e(t).first;
       }},
      {"pair_eq_e2",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         c.done(a, 1);
         return pair_eq_e(t).second;
       }},
      {"prod_mem",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Expr e = c.expr(a, 0);
         const Expr e1 = c.expr(a, 1);
         const Expr e2 = c.expr(a, 2);
         const Var v1 = c.var(a, 3);
         const Var v2 = c.var(a, 4);
         c.done(a, 5);
         return prod_mem(c.env, e, e1, e2, v1, v2);
       }},
      {"and_split_l",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         c.done(a, 1);
         return and_split(t).first;
       }},
      {"and_split_r",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         c.done(a, 1);
         return and_split(t).second;
       }},
      {"or_i_left",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         const Pred q = c.pred(a, 1);
         c.done(a, 2);
         return or_i_left(t, q);
       }},
      {"or_i_right",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Pred p = c.pred(a, 0);
         const Theorem t = c.thm(a, 1);
         c.done(a, 2);
         return or_i_right(p, t);
       }},
      {"exists_i",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Var v = c.var(a, 0);
         const Pred p = c.pred(a, 1);
         const Expr w = c.expr(a, 2);
         const Theorem t = c.thm(a, 3);
         c.done(a, 4);
         return exists_i(v, p, w, t);
       }},
      {"eq_of_syntactic",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Expr e1 = c.expr(a, 0);
         const Expr e2 = c.expr(a, 1);
         c.done(a, 2);
         return eq_of_syntactic(c.env, e1, e2);
       }},
      {"excluded_middle",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Pred p = c.pred(a, 0);
         c.done(a, 1);
         return excluded_middle(c.env, p);
       }},
      {"forall_inst",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         const Expr e = c.expr(a, 1);
         c.done(a, 2);
         return forall_inst(t, e);
       }},
      {"iff_sym",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         c.done(a, 1);
         return iff_sym(t);
       }},
      {"iff_trans",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem l = c.thm(a, 0);
         const Theorem r = c.thm(a, 1);
         c.done(a, 2);
         return iff_trans(l, r);
       }},
      {"eq_sym",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         c.done(a, 1);
         return eq_sym(t);
       }},
      {"eq_trans",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem l = c.thm(a, 0);
         const Theorem r = c.thm(a, 1);
         c.done(a, 2);
         return eq_trans(l, r);
       }},
      {"graft_cong_p",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         const Var v = c.var(a, 1);
         const Pred p = c.pred(a, 2);
         c.done(a, 3);
         return graft_cong_closed(t, v, Term{p}, c.env);
       }},
      {"graft_cong_e",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         const Var v = c.var(a, 1);
         const Expr e = c.expr(a, 2);
         c.done(a, 3);
         return graft_cong_closed(t, v, Term{e}, c.env);
       }},
      {"graft_cong_ns_p",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         const Var v = c.var(a, 1);
         const Pred p = c.pred(a, 2);
         c.done(a, 3);
         return graft_cong_ns(t, v, Term{p});
       }},
      {"graft_cong_ns_e",
       [](Ctx& c, const std::vector<Arg>& a) {
         const Theorem t = c.thm(a, 0);
         const Var v = c.var(a, 1);
         const Expr e = c.expr(a, 2);
         c.done(a, 3);
         return graft_cong_ns(t, v, Term{e});
       }},
  };
  return table;
}

CheckReport fail(const std::string& name, const std::string& label,
                 const std::string& kind) {
  CheckReport r;
  r.ok = false;
  r.name = name.empty() ? "?" : name;
  r.line = "fail " + r.name + " step " + label + " kind " + kind;
  return r;
}

}  // namespace

CheckReport check_script(const std::string& text) {
  Ctx ctx;
  std::string name;
  bool saw_env = false;
  bool saw_qed = false;

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;

    if (line.rfind("theorem", 0) == 0 &&
        (line.size() == 7 || line[7] == ' ' || line[7] == '\t')) {
      if (!name.empty()) return fail(name, "header", "script");
      name = trim(line.substr(7));
      if (name.empty() || name.find(' ') != std::string::npos) {
        return fail(name, "header", "script");
      }
      continue;
    }
    if (name.empty()) return fail(name, "header", "script");

    if (line.rfind("env:", 0) == 0) {
      if (saw_env || !ctx.thms.empty()) return fail(name, "env", "script");
      saw_env = true;
      std::string rest = line.substr(4);
      std::size_t start = 0;
      try {
        while (start <= rest.size()) {
          const std::size_t sep = rest.find(';', start);
          const std::string piece =
              trim(sep == std::string::npos ? rest.substr(start)
                                            : rest.substr(start, sep - start));
          if (!piece.empty()) {
            ctx.env = ctx.env.add(parse_pred_with(ctx.table, piece));
          }
          if (sep == std::string::npos) break;
          start = sep + 1;
        }
      } catch (const SyntaxError&) {
        return fail(name, "env", "syntax");
      }
      continue;
    }

    if (line.rfind("qed", 0) == 0 &&
        (line.size() == 3 || line[3] == ' ' || line[3] == '\t')) {
      std::vector<Arg> args;
      try {
        args = split_args(line.substr(3));
      } catch (const ScriptError&) {
        return fail(name, "qed", "script");
      }
      if (args.size() != 3 || args[0].quoted || args[1].quoted ||
          args[1].text != ":" || !args[2].quoted) {
        return fail(name, "qed", "script");
      }
      const auto it = ctx.thms.find(args[0].text);
      if (it == ctx.thms.end()) return fail(name, "qed", "script");
      Pred goal = Pred::eq(Expr::big(), Expr::big());
      try {
        goal = parse_pred_with(ctx.table, args[2].text);
      } catch (const SyntaxError&) {
        return fail(name, "qed", "syntax");
      }
      if (!term_eq(it->second.concl(), goal)) return fail(name, "qed", "goal");
      if (!it->second.env().set_eq(ctx.env)) return fail(name, "qed", "env");
      saw_qed = true;
      continue;
    }

    // A proof step: LABEL: RULE args...
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) return fail(name, "?", "script");
    const std::string label = trim(line.substr(0, colon));
    if (label.empty() || label.find(' ') != std::string::npos) {
      return fail(name, label.empty() ? "?" : label, "script");
    }
    if (ctx.thms.count(label) != 0) return fail(name, label, "script");
    if (saw_qed) return fail(name, label, "script");

    std::vector<Arg> args;
    try {
      args = split_args(line.substr(colon + 1));
    } catch (const ScriptError&) {
      return fail(name, label, "script");
    }
    if (args.empty() || args[0].quoted) return fail(name, label, "script");
    const std::string rule = args[0].text;
    args.erase(args.begin());

    const auto handler = registry().find(rule);
    if (handler == registry().end()) return fail(name, label, "script");

    try {
      ctx.thms.emplace(label, handler->second(ctx, args));
    } catch (const RuleError& e) {
      return fail(name, label, to_string(e.kind()));
    } catch (const SyntaxError&) {
      return fail(name, label, "syntax");
    } catch (const ScriptError&) {
      return fail(name, label, "script");
    }
  }

  if (name.empty()) return fail(name, "header", "script");
  if (!saw_qed) return fail(name, "qed", "script");

  CheckReport r;
  r.ok = true;
  r.name = name;
  r.line = "ok " + name;
  return r;
}

}  // namespace bproof
