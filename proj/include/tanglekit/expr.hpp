#pragma once

// Tangle expression trees: rational leaves, ordered sums, circle products.
// Sum order is preserved; (-1/3 + -1/5) and (-1/5 + -1/3) are different
// expressions.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanglekit/fraction.hpp"
#include "tanglekit/twist_word.hpp"

namespace tanglekit {

struct TangleExpr;
using ExprPtr = std::shared_ptr<const TangleExpr>;

struct TangleExpr {
  enum class Kind { Leaf, Sum, Circle };

  Kind kind = Kind::Leaf;
  TangleFraction value;         // Leaf
  std::vector<ExprPtr> terms;   // Sum, >= 2 entries
  ExprPtr child;                // Circle
  TwistWord word;               // Circle

  static ExprPtr leaf(const TangleFraction& f);
  static ExprPtr sum(std::vector<ExprPtr> terms);
  static ExprPtr circle(ExprPtr child, TwistWord word);
};

// A tangle expression is rational when it is a leaf, a circle product of a
// rational expression, or a sum of one rational expression with
// integer-tangle leaves.  rational_value evaluates exactly those.
bool is_rational(const ExprPtr& e);
std::optional<TangleFraction> rational_value(const ExprPtr& e);

std::string to_string(const ExprPtr& e);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

// Grammar:
//   expr := atom | expr "o" "(" int ("," int)* ")"
//   atom := frac | "(" expr ("+" expr)* ")"
//   frac := integer | integer "/" integer
ExprPtr parse_expr(const std::string& text);

}  // namespace tanglekit
