#ifndef BPROOF_GEN_HPP
#define BPROOF_GEN_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bproof/term.hpp"

namespace bproof {

struct GenConfig {
  unsigned max_depth = 8;
  // Machinery leaves may point above the enclosing binders (dangling), up to
  // this many levels. 0 keeps every machinery leaf bound, which is what the
  // printer round-trip needs.
  std::uint32_t dangling_slack = 3;
  std::uint32_t max_free_idx = 3;
  std::vector<std::string> namespaces = {"u", "ns"};
};

// Deterministic pseudo-random terms for property tests.
class TermGen {
 public:
  explicit TermGen(std::uint64_t seed, GenConfig cfg = {});

  Expr expr();
  Pred pred();
  Term term();

  Var free_var();                      // non-machinery, within the config
  std::uint32_t below(std::uint32_t n);  // uniform in [0, n)

 private:
  Expr gen_expr(unsigned depth, std::uint32_t binders);
  Pred gen_pred(unsigned depth, std::uint32_t binders);
  Var gen_var(std::uint32_t binders);

  std::mt19937_64 rng_;
  GenConfig cfg_;
};

}  // namespace bproof

#endif  // BPROOF_GEN_HPP
