#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "csym/formal.hpp"

namespace csym {

// The expression language of the command line:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | atom | call | '(' expr ')' | '-' factor
//   atom   := BASIS '(' index ')'          e.g. M(ab,c), m(2,1), s*(aa,a)
//   call   := NAME '(' expr (';' expr)? ')'
// Calls: coproduct, antipode, counit, chi, iota, uncolor, omega,
// pair(x; y), convert(x; basis). Letter indices select the colored layer,
// integer indices the classical layer; an empty index is colored for
// bases existing there. Indices must be canonical (p-sentence/partition
// order) where the basis demands it.

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& message, int position);
  int position;  // 0-based offset into the input
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Scalar, Atom, Add, Sub, Mul, Call };
  Kind kind;
  Rational scalar;                  // Scalar
  std::optional<BasisKey> atom;     // Atom
  std::string call_name;            // Call
  std::string call_basis;           // convert target, when given
  std::vector<ExprPtr> children;    // operands / call arguments
};

// Parses the expression language; atoms are validated against a (colors,
// canonical index order, basis legality).
ExprPtr parse_expression(const Alphabet& a, const std::string& input);

// An evaluation result: a scalar (counit/pair), a sum, or a tensor
// (coproduct at the top level).
using Value = std::variant<Rational, FormalSum, TensorSum>;

Value evaluate(const Alphabet& a, const ExprPtr& e);

std::string value_text(const Value& v);
std::string value_json(const Value& v);

}  // namespace csym
