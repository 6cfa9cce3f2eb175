#ifndef BPROOF_PSUBST_HPP
#define BPROOF_PSUBST_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "bproof/binder.hpp"
#include "bproof/term.hpp"

namespace bproof {

// A total map from variables to expressions, applied simultaneously to every
// free variable of a term. The constructors form a closed set; there is no
// general lambda case and deliberately no equality on maps (maps are compared
// observationally, by applying them).
class ParallelSubst {
 public:
  static ParallelSubst identity();
  // Same dangling-index shift as lift(ns, d, .).
  static ParallelSubst shift(Namespace ns, Height d);
  // v to e, everything else to itself.
  static ParallelSubst single(Var v, Expr e);
  // Finite overrides on top of the identity. Later entries win.
  static ParallelSubst table(std::vector<std::pair<Var, Expr>> entries);
  // papply(compose(o, i), t) behaves as papply(o, papply(i, t)).
  static ParallelSubst compose(ParallelSubst outer, ParallelSubst inner);

  // The image of a free variable at height 0.
  Expr image(const Var& v) const;

  // Advisory support hint: variables the map intends to move. Debug metadata
  // only; papply never consults it.
  ParallelSubst with_support(std::vector<Var> vars) const;
  const std::optional<std::vector<Var>>& support() const;

 private:
  struct Rep;
  explicit ParallelSubst(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// Apply a map to every free variable. Under each binder the map is shifted:
// the new bound index maps to itself and images of the remaining variables
// are lifted with lift(^, 0, .), so bound indexes are never disturbed.
Expr papply(const ParallelSubst& s, const Expr& t);
Pred papply(const ParallelSubst& s, const Pred& t);
Term papply(const ParallelSubst& s, const Term& t);

}  // namespace bproof

#endif  // BPROOF_PSUBST_HPP
