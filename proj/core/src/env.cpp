#include "bproof/env.hpp"

#include <algorithm>

#include "bproof/binder.hpp"

namespace bproof {

ProofEnv::ProofEnv(std::vector<Pred> preds) {
  for (auto& p : preds)
    if (!member(p)) preds_.push_back(std::move(p));
}

ProofEnv::ProofEnv(std::initializer_list<Pred> preds)
    : ProofEnv(std::vector<Pred>(preds)) {}

ProofEnv ProofEnv::add(const Pred& p) const {
  if (member(p)) return *this;
  ProofEnv out = *this;
  out.preds_.push_back(p);
  return out;
}

ProofEnv ProofEnv::add_all(const ProofEnv& other) const {
  ProofEnv out = *this;
  for (const auto& p : other) out = out.add(p);
  return out;
}

ProofEnv ProofEnv::remove(const Pred& p) const {
  ProofEnv out;
  for (const auto& q : preds_)
    if (!term_eq(p, q)) out.preds_.push_back(q);
  return out;
}

bool ProofEnv::member(const Pred& p) const {
  return std::any_of(preds_.begin(), preds_.end(),
                     [&](const Pred& q) { return term_eq(p, q); });
}

bool ProofEnv::subset_of(const ProofEnv& other) const {
  return std::all_of(preds_.begin(), preds_.end(),
                     [&](const Pred& p) { return other.member(p); });
}

bool ProofEnv::set_eq(const ProofEnv& other) const {
  return subset_of(other) && other.subset_of(*this);
}

bool env_free(const Var& v, const ProofEnv& env) {
  return std::any_of(env.begin(), env.end(),
                     [&](const Pred& p) { return free_in(v, 0, p); });
}

Var fresh(const Namespace& ns, const ProofEnv& env, std::span<const Term> extra) {
  for (std::uint32_t k = 0;; ++k) {
    const Var v{ns, k};
    if (env_free(v, env)) continue;
    const bool used = std::any_of(extra.begin(), extra.end(),
                                  [&](const Term& t) { return free_in(v, 0, t); });
    if (!used) return v;
  }
}

bool disjoint_n0(const ProofEnv& env, const Pred& p) {
  for (const Var& v : free_vars(p)) {
    if (!v.ns.is_machinery()) continue;
    if (env_free(v, env)) return false;
  }
  return true;
}

}  // namespace bproof
