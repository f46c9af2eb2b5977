#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncps/series.hpp"

namespace ncps {

/// Syntax error with the 0-based offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Variable naming for parsing and printing: letters 1..vars-odd_vars print
/// as x1..., the trailing odd_vars letters as y1... (supermanifold charts).
struct VarScheme {
  unsigned vars = 0;
  unsigned odd_vars = 0;  // trailing letters named y1..y_odd_vars

  unsigned even_vars() const { return vars - odd_vars; }
};

/// Parsed abstract syntax tree.
///
/// expr   := ('-')? term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := base ('^' nat)?
/// base   := rational | 'i' | var | '(' expr ')' | '[' expr ',' expr ']'
///
/// '*' is noncommutative; '[a,b]' desugars to a*b - b*a at parse time.
class Expression {
 public:
  struct Node;
  using NodePtr = std::unique_ptr<Node>;

  struct Node {
    enum class Kind { Literal, Variable, Add, Sub, Mul, Pow };
    Kind kind;
    Scalar value;       // Literal
    Letter variable{};  // Variable
    unsigned exponent{};  // Pow
    NodePtr lhs, rhs;
  };

  struct Evaluation {
    NCSeries series;
    bool truncated;  // some product overflowed the truncation degree
  };

  /// Evaluates at the given truncation degree without reordering factors.
  Evaluation evaluate(unsigned degree) const;

  const Node& root() const { return *root_; }
  const VarScheme& scheme() const { return scheme_; }

  /// Parses `text` over the given variables; throws ParseError.
  static Expression parse(std::string_view text, const VarScheme& scheme);

 private:
  Expression(NodePtr root, VarScheme scheme)
      : root_(std::move(root)), scheme_(scheme) {}

  NodePtr root_;
  VarScheme scheme_;
};

/// Convenience wrapper: parse then evaluate.
Expression::Evaluation parse_series(std::string_view text, const VarScheme& scheme,
                                    unsigned degree);

/// Canonical expression form: terms in graded-lex word order, exact scalar
/// coefficients, explicit '*', no '^'. parse_series inverts it exactly.
std::string series_str(const NCSeries& series, unsigned odd_vars = 0);

/// Same renderer on the ordered-word representation.
std::string comm_series_str(const CommSeries& series, unsigned odd_vars = 0);

}  // namespace ncps
