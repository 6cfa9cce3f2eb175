#include "bproof/gen.hpp"

namespace bproof {

TermGen::TermGen(std::uint64_t seed, GenConfig cfg)
    : rng_(seed), cfg_(std::move(cfg)) {}

std::uint32_t TermGen::below(std::uint32_t n) {
  return std::uniform_int_distribution<std::uint32_t>(0, n - 1)(rng_);
}

Var TermGen::free_var() {
  const auto& ns = cfg_.namespaces[below(static_cast<std::uint32_t>(cfg_.namespaces.size()))];
  return Var{Namespace(ns), below(cfg_.max_free_idx + 1)};
}

Var TermGen::gen_var(std::uint32_t binders) {
  const std::uint32_t span = binders + cfg_.dangling_slack;
  // Half machinery when anything is in scope, otherwise named.
  if (span > 0 && below(2) == 0) return mvar(below(span));
  return free_var();
}

Expr TermGen::gen_expr(unsigned depth, std::uint32_t binders) {
  const std::uint32_t pick = depth == 0 ? below(2) : below(10);
  switch (pick) {
    case 0:
      return Expr::big();
    case 1:
    case 2:
    case 3:
      return Expr::var(gen_var(binders));
    case 4:
    case 5:
      return Expr::pair(gen_expr(depth - 1, binders), gen_expr(depth - 1, binders));
    case 6:
      return Expr::prod(gen_expr(depth - 1, binders), gen_expr(depth - 1, binders));
    case 7:
      return Expr::pow(gen_expr(depth - 1, binders));
    case 8:
      return Expr::choice(gen_expr(depth - 1, binders));
    default:
      return Expr::cmp(gen_expr(depth - 1, binders), gen_pred(depth - 1, binders + 1));
  }
}

Pred TermGen::gen_pred(unsigned depth, std::uint32_t binders) {
  const std::uint32_t pick = depth == 0 ? below(2) : below(8);
  switch (pick) {
    case 0:
      return Pred::eq(gen_expr(depth == 0 ? 0 : depth - 1, binders),
                      gen_expr(depth == 0 ? 0 : depth - 1, binders));
    case 1:
      return Pred::in(gen_expr(depth == 0 ? 0 : depth - 1, binders),
                      gen_expr(depth == 0 ? 0 : depth - 1, binders));
    case 2:
      return Pred::conj(gen_pred(depth - 1, binders), gen_pred(depth - 1, binders));
    case 3:
      return Pred::imp(gen_pred(depth - 1, binders), gen_pred(depth - 1, binders));
    case 4:
    case 5:
      return Pred::neg(gen_pred(depth - 1, binders));
    default:
      return Pred::all(gen_pred(depth - 1, binders + 1));
  }
}

Expr TermGen::expr() { return gen_expr(cfg_.max_depth, 0); }

Pred TermGen::pred() { return gen_pred(cfg_.max_depth, 0); }

Term TermGen::term() {
  if (below(2) == 0) return Term{pred()};
  return Term{expr()};
}

}  // namespace bproof
