#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bproof/binder.hpp"
#include "bproof/errors.hpp"
#include "bproof/script.hpp"
#include "bproof/selftest.hpp"
#include "bproof/syntax.hpp"

namespace {

using namespace bproof;

Var var_from_spec(SymbolTable& table, const std::string& spec) {
  const std::size_t sep = spec.find("::");
  if (sep == std::string::npos) {
    return table.intern(Namespace::user().tag(), spec);
  }
  return table.intern(spec.substr(0, sep), spec.substr(sep + 2));
}

void show_table(const SymbolTable& table) {
  for (const auto& e : table.entries()) {
    std::cout << e.name << " -> " << e.ns << "::" << e.var.idx << "\n";
  }
}

Term parse_term(SymbolTable& table, bool as_expr, const std::string& text) {
  if (as_expr) return Term{parse_expr_with(table, text)};
  return Term{parse_pred_with(table, text)};
}

std::string print_term(const Term& t) {
  if (std::holds_alternative<Pred>(t)) return print_pred(std::get<Pred>(t));
  return print_expr(std::get<Expr>(t));
}

int run_check(const std::vector<std::string>& files) {
  bool all_ok = true;
  for (const std::string& path : files) {
    std::ifstream in(path);
    if (!in) {
      std::cout << "fail " << path << " step file kind io" << "\n";
      all_ok = false;
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const CheckReport report = check_script(buf.str());
    std::cout << report.line << "\n";
    all_ok = all_ok && report.ok;
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"namespaced de Bruijn proof checker"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  auto* check = app.add_subcommand("check", "check proof scripts");
  check->add_option("files", files, "script files")->required();

  bool as_expr = false;
  std::string text;
  auto* parse = app.add_subcommand("parse", "parse a formula and dump the tree");
  parse->add_flag("-e,--expr", as_expr, "treat the text as an expression");
  parse->add_option("text", text, "formula text")->required();

  auto* print = app.add_subcommand("print", "parse a formula and print it back");
  print->add_flag("-e,--expr", as_expr, "treat the text as an expression");
  print->add_option("text", text, "formula text")->required();

  std::string var_spec;
  auto* free_cmd = app.add_subcommand("free", "is a variable free in a formula");
  free_cmd->add_flag("-e,--expr", as_expr, "treat the text as an expression");
  free_cmd->add_option("-v,--var", var_spec, "variable (name or ns::name)")->required();
  free_cmd->add_option("text", text, "formula text")->required();

  std::string repl_text;
  auto* subst_cmd = app.add_subcommand("subst", "capture-avoiding substitution");
  subst_cmd->add_flag("-e,--expr", as_expr, "treat the text as an expression");
  subst_cmd->add_option("-v,--var", var_spec, "variable to replace")->required();
  subst_cmd->add_option("-x,--with", repl_text, "replacement expression")->required();
  subst_cmd->add_option("text", text, "formula text")->required();

  auto* graft_cmd = app.add_subcommand("graft", "capture-permitting replacement");
  graft_cmd->add_flag("-e,--expr", as_expr, "treat the text as an expression");
  graft_cmd->add_option("-v,--var", var_spec, "variable to replace")->required();
  graft_cmd->add_option("-x,--with", repl_text, "replacement expression")->required();
  graft_cmd->add_option("text", text, "formula text")->required();

  auto* self = app.add_subcommand("selftest", "run built-in sanity checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(files);
    if (self->parsed()) {
      const int failures = selftest(std::cout);
      return failures == 0 ? 0 : 1;
    }

    SymbolTable table;
    if (parse->parsed()) {
      const Term t = parse_term(table, as_expr, text);
      std::cout << dump(t) << "\n";
      show_table(table);
      return 0;
    }
    if (print->parsed()) {
      std::cout << print_term(parse_term(table, as_expr, text)) << "\n";
      return 0;
    }
    if (free_cmd->parsed()) {
      const Term t = parse_term(table, as_expr, text);
      const Var v = var_from_spec(table, var_spec);
      std::cout << (free_in(v, 0, t) ? "true" : "false") << "\n";
      return 0;
    }
    if (subst_cmd->parsed() || graft_cmd->parsed()) {
      const Term t = parse_term(table, as_expr, text);
      const Expr repl = parse_expr_with(table, repl_text);
      const Var v = var_from_spec(table, var_spec);
      const Term out = subst_cmd->parsed() ? subst(v, repl, 0, t) : graft(v, repl, 0, t);
      std::cout << print_term(out) << "\n";
      return 0;
    }
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error at " << e.span().begin << ": " << e.what() << "\n";
    return 1;
  } catch (const RuleError& e) {
    std::cerr << "rule error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
