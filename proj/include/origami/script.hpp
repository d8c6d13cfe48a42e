#pragma once

#include "origami/folds.hpp"

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace origami::script {

struct SourceError : Error {
  int line, column;
  std::string token;
  SourceError(int line_, int column_, const std::string& msg, const std::string& tok)
      : Error("line " + std::to_string(line_) + ":" + std::to_string(column_) + ": " +
              msg + (tok.empty() ? "" : " (at '" + tok + "')")),
        line(line_),
        column(column_),
        token(tok) {}
};

struct EvalError : Error {
  enum class Kind { NoSolution, AssertFailed, Unbound, Invalid };
  Kind kind;
  EvalError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

// Literal / assertion expression tree.
struct Expr {
  enum class Kind { Num, Ref, Sqrt, Cbrt, Neg, Add, Sub, Mul, Div };
  Kind kind = Kind::Num;
  Rational num;              // Num
  std::string ref, field;    // Ref: object id and coordinate (x/y or a/b/c)
  std::shared_ptr<Expr> lhs, rhs;
};

struct StLevel {
  folds::Level level;
};
struct StPoint {
  std::string id;
  Expr x, y;
};
struct StMeet {
  std::string id, l1, l2;
};
struct StLine {
  enum class Form { Through, Bisector, Coeffs } form;
  std::string id, p1, p2;  // Through / Bisector
  Expr a, b, c;            // Coeffs
};
struct StFold {
  int axiom;                         // 1..6
  std::vector<std::string> args;     // ids, in axiom order
  std::vector<std::string> binders;  // bound to solutions in canonical order
  bool optional = false;             // trailing '?': missing solutions allowed
};
struct StMacro {
  std::string name;  // translate | scale | marklen
  std::vector<std::string> args;
  std::string binder;
};
struct StAssert {
  Expr lhs, rhs;
  std::string rel;  // == | < | >
};

using Statement =
    std::variant<StLevel, StPoint, StMeet, StLine, StFold, StMacro, StAssert>;

struct Program {
  folds::Level level = folds::Level::Origami;
  std::vector<Statement> statements;  // excludes the level directive

  std::string pretty() const;  // canonical source; parse(pretty()) is stable
};

Program parse(const std::string& text);

struct Environment {
  std::vector<std::pair<std::string, folds::Object>> objects;  // binding order
  int asserts_checked = 0;

  const folds::Object* find(const std::string& id) const;
};

std::pair<Environment, folds::Trace> eval(const Program& p);

// Exact literal syntax shared with the CLI: integers, fractions p/q, sqrt(e),
// cbrt(e), parenthesized arithmetic.
ExactReal parse_literal(const std::string& text);

}  // namespace origami::script
