#ifndef BPROOF_SCRIPT_HPP
#define BPROOF_SCRIPT_HPP

#include <string>

#include "bproof/kernel.hpp"

namespace bproof {

// Outcome of checking one proof script. line is a single deterministic
// summary: "ok NAME" or "fail NAME step LABEL kind KIND".
struct CheckReport {
  bool ok = false;
  std::string name;
  std::string line;
};

// A script proves one theorem:
//
//   // comments and blank lines are free
//   theorem and_intro
//   env: a : S ; a = b
//   h1: ax "a : S"
//   h2: ax "a = b"
//   s1: and_i h1 h2
//   qed s1 : "a : S & a = b"
//
// Steps run top to bottom; each label names the theorem a rule produced.
// Quoted arguments hold formulas; every formula in the script shares one
// symbol table, so a name refers to the same variable throughout. Bare
// arguments are step labels or variables (name or ns::name).
// qed succeeds when the named theorem concludes the stated goal exactly,
// under exactly the declared environment.
CheckReport check_script(const std::string& text);

}  // namespace bproof

#endif  // BPROOF_SCRIPT_HPP
