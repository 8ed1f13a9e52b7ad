#include "tanglekit/expr.hpp"

#include <cctype>

namespace tanglekit {

ExprPtr TangleExpr::leaf(const TangleFraction& f) {
  auto e = std::make_shared<TangleExpr>();
  e->kind = Kind::Leaf;
  e->value = f;
  return e;
}

ExprPtr TangleExpr::sum(std::vector<ExprPtr> terms) {
  if (terms.size() < 2) throw std::invalid_argument("sum needs >= 2 terms");
  auto e = std::make_shared<TangleExpr>();
  e->kind = Kind::Sum;
  e->terms = std::move(terms);
  return e;
}

ExprPtr TangleExpr::circle(ExprPtr child, TwistWord word) {
  auto e = std::make_shared<TangleExpr>();
  e->kind = Kind::Circle;
  e->child = std::move(child);
  e->word = std::move(word);
  return e;
}

bool is_rational(const ExprPtr& e) { return rational_value(e).has_value(); }

std::optional<TangleFraction> rational_value(const ExprPtr& e) {
  switch (e->kind) {
    case TangleExpr::Kind::Leaf:
      return e->value;
    case TangleExpr::Kind::Circle: {
      auto v = rational_value(e->child);
      if (!v) return std::nullopt;
      return circle_product_fraction(*v, e->word);
    }
    case TangleExpr::Kind::Sum: {
      // At most one non-integer summand; integer tangles add on either side.
      std::optional<TangleFraction> core;
      std::int64_t shift = 0;
      for (const auto& t : e->terms) {
        auto v = rational_value(t);
        if (!v || v->is_infinity()) return std::nullopt;
        if (v->is_integer()) {
          shift += v->num();
        } else if (!core) {
          core = *v;
        } else {
          return std::nullopt;
        }
      }
      if (!core) return TangleFraction::integer(shift);
      return core->horizontal(shift);
    }
  }
  return std::nullopt;
}

namespace {

std::string print(const ExprPtr& e, bool as_circle_child) {
  switch (e->kind) {
    case TangleExpr::Kind::Leaf: {
      std::string s = e->value.to_string();
      return as_circle_child ? "(" + s + ")" : s;
    }
    case TangleExpr::Kind::Sum: {
      std::string s = "(";
      for (std::size_t i = 0; i < e->terms.size(); ++i) {
        if (i) s += " + ";
        s += print(e->terms[i], false);
      }
      return s + ")";
    }
    case TangleExpr::Kind::Circle: {
      std::string s = print(e->child, true);
      if (e->child->kind == TangleExpr::Kind::Circle)
        s = "(" + s + ")";
      return s + " o " + word_to_string(e->word);
    }
  }
  return {};
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_]))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::int64_t parse_int() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_])) {
      pos_ = start;
      fail("expected integer");
    }
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (std::int64_t(1) << 60)) fail("integer too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  ExprPtr parse_frac() {
    std::int64_t num = parse_int();
    if (eat('/')) {
      std::size_t den_pos = pos_;
      std::int64_t den = parse_int();
      if (den == 0 && !(num == 1)) {
        pos_ = den_pos;
        fail("zero denominator (only 1/0 is a tangle)");
      }
      return TangleExpr::leaf(TangleFraction(num, den));
    }
    return TangleExpr::leaf(TangleFraction::integer(num));
  }

  TwistWord parse_word() {
    if (!eat('(')) fail("expected '(' after 'o'");
    TwistWord word;
    word.push_back(parse_int());
    while (eat(',')) word.push_back(parse_int());
    if (!eat(')')) fail("expected ')' in twist word");
    return word;
  }

  ExprPtr parse_atom() {
    if (eat('(')) {
      std::vector<ExprPtr> terms;
      terms.push_back(parse_expr());
      while (eat('+')) terms.push_back(parse_expr());
      if (!eat(')')) fail("expected ')'");
      if (terms.size() == 1) return terms[0];
      return TangleExpr::sum(std::move(terms));
    }
    char c = peek();
    if (c == '-' || c == '+' || std::isdigit((unsigned char)c))
      return parse_frac();
    fail("expected expression");
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_atom();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'o') {
        ++pos_;
        e = TangleExpr::circle(e, parse_word());
      } else {
        break;
      }
    }
    return e;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const ExprPtr& e) { return print(e, false); }

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

TangleFraction parse_fraction(const std::string& text) {
  ExprPtr e = parse_expr(text);
  if (e->kind != TangleExpr::Kind::Leaf)
    throw ParseError("expected a fraction", 0);
  return e->value;
}

}  // namespace tanglekit
