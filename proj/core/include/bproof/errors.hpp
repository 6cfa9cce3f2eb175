#ifndef BPROOF_ERRORS_HPP
#define BPROOF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bproof {

// Everything partial in the library reports failure through one of these.
// Rule and builder failures carry a machine-readable kind so callers (and the
// script checker) can react without parsing messages.
enum class ErrKind {
  NotAForall,
  NotAComprehension,
  NotFresh,
  NotInEnv,
  EnvMismatch,
  ShapeMismatch,
  PatternMismatch,
  SameVariable,
  SideConditionViolated,
  NotSyntacticallyEqual,
};

const char* to_string(ErrKind k);

class RuleError : public std::runtime_error {
 public:
  RuleError(ErrKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

// Half-open byte range into the source text a diagnostic refers to.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(SourceSpan span, const std::string& what)
      : std::runtime_error(what), span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// The machinery namespace "^" is how the library spells bound variables; it
// is deliberately not writable in surface text.
class UnboundNamespaceToken : public SyntaxError {
 public:
  explicit UnboundNamespaceToken(SourceSpan span)
      : SyntaxError(span, "the namespace token '^' cannot appear in source text") {}
};

}  // namespace bproof

#endif  // BPROOF_ERRORS_HPP
