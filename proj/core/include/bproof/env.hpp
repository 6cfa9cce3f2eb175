#ifndef BPROOF_ENV_HPP
#define BPROOF_ENV_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "bproof/term.hpp"

namespace bproof {

// A finite set of hypotheses with structural-equality semantics. Iteration
// order is insertion order after deduplication, which keeps reports and
// printed sequents reproducible.
class ProofEnv {
 public:
  ProofEnv() = default;
  explicit ProofEnv(std::vector<Pred> preds);
  ProofEnv(std::initializer_list<Pred> preds);

  ProofEnv add(const Pred& p) const;
  ProofEnv add_all(const ProofEnv& other) const;
  // Removes the (unique) member equal to p; no-op when absent.
  ProofEnv remove(const Pred& p) const;

  bool member(const Pred& p) const;
  bool subset_of(const ProofEnv& other) const;
  bool set_eq(const ProofEnv& other) const;

  std::size_t size() const { return preds_.size(); }
  bool empty() const { return preds_.empty(); }
  auto begin() const { return preds_.begin(); }
  auto end() const { return preds_.end(); }

 private:
  std::vector<Pred> preds_;
};

struct Sequent {
  ProofEnv env;
  Pred concl;
};

// Is v free in some hypothesis?
bool env_free(const Var& v, const ProofEnv& env);

// Smallest index k such that (ns, k) is free in no hypothesis and in none of
// the extra terms.
Var fresh(const Namespace& ns, const ProofEnv& env, std::span<const Term> extra = {});

// No machinery-namespace variable is free both in some hypothesis and in p.
// This is the side condition of the namespace-aware congruence rule.
bool disjoint_n0(const ProofEnv& env, const Pred& p);

}  // namespace bproof

#endif  // BPROOF_ENV_HPP
