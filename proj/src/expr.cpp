#include "ncps/expr.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace ncps {

namespace {

struct Token {
  enum class Kind { Number, Imag, Var, Plus, Minus, Star, Caret, LParen, RParen,
                    LBracket, RBracket, Comma, End };
  Kind kind;
  std::size_t position;
  Rational number;  // Number
  Letter variable;  // Var
  unsigned nat;     // Number reused for exponents
};

class Lexer {
 public:
  Lexer(std::string_view text, const VarScheme& scheme) : text_(text), scheme_(scheme) {
    advance();
  }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    current_.position = pos_;
    if (pos_ == text_.size()) {
      current_.kind = Token::Kind::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '+': current_.kind = Token::Kind::Plus; ++pos_; return;
      case '-': current_.kind = Token::Kind::Minus; ++pos_; return;
      case '*': current_.kind = Token::Kind::Star; ++pos_; return;
      case '^': current_.kind = Token::Kind::Caret; ++pos_; return;
      case '(': current_.kind = Token::Kind::LParen; ++pos_; return;
      case ')': current_.kind = Token::Kind::RParen; ++pos_; return;
      case '[': current_.kind = Token::Kind::LBracket; ++pos_; return;
      case ']': current_.kind = Token::Kind::RBracket; ++pos_; return;
      case ',': current_.kind = Token::Kind::Comma; ++pos_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      std::string num(text_.substr(start, pos_ - start));
      // optional /denominator makes a rational literal
      if (pos_ < text_.size() && text_[pos_] == '/') {
        std::size_t den_start = pos_ + 1;
        std::size_t den_end = den_start;
        while (den_end < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[den_end])))
          ++den_end;
        if (den_end == den_start) throw ParseError("expected denominator digits", den_start);
        num += "/";
        num += text_.substr(den_start, den_end - den_start);
        pos_ = den_end;
      }
      current_.kind = Token::Kind::Number;
      current_.number = parse_rational(num);
      return;
    }
    if (c == 'i' && !is_name_char(pos_ + 1)) {
      current_.kind = Token::Kind::Imag;
      ++pos_;
      return;
    }
    if (c == 'x' || c == 'y') {
      std::size_t start = pos_ + 1;
      std::size_t end = start;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
        ++end;
      if (end == start) throw ParseError("unknown symbol", pos_);
      unsigned index = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, end - start))));
      Letter letter;
      if (c == 'x') {
        if (index < 1 || index > scheme_.even_vars())
          throw ParseError("unknown variable x" + std::to_string(index), pos_);
        letter = index;
      } else {
        if (index < 1 || index > scheme_.odd_vars)
          throw ParseError("unknown variable y" + std::to_string(index), pos_);
        letter = scheme_.even_vars() + index;
      }
      current_.kind = Token::Kind::Var;
      current_.variable = letter;
      pos_ = end;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  bool is_name_char(std::size_t pos) const {
    return pos < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos])) || text_[pos] == '_');
  }

  std::string_view text_;
  VarScheme scheme_;
  std::size_t pos_ = 0;
  Token current_;
};

using Node = Expression::Node;
using NodePtr = Expression::NodePtr;

NodePtr make_literal(Scalar value) {
  auto node = std::make_unique<Node>();
  node->kind = Node::Kind::Literal;
  node->value = std::move(value);
  return node;
}

NodePtr make_variable(Letter letter) {
  auto node = std::make_unique<Node>();
  node->kind = Node::Kind::Variable;
  node->variable = letter;
  return node;
}

NodePtr make_binary(Node::Kind kind, NodePtr lhs, NodePtr rhs) {
  auto node = std::make_unique<Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

NodePtr make_pow(NodePtr base, unsigned exponent) {
  auto node = std::make_unique<Node>();
  node->kind = Node::Kind::Pow;
  node->exponent = exponent;
  node->lhs = std::move(base);
  return node;
}

NodePtr clone(const Node& node) {
  auto copy = std::make_unique<Node>();
  copy->kind = node.kind;
  copy->value = node.value;
  copy->variable = node.variable;
  copy->exponent = node.exponent;
  if (node.lhs) copy->lhs = clone(*node.lhs);
  if (node.rhs) copy->rhs = clone(*node.rhs);
  return copy;
}

class Parser {
 public:
  Parser(std::string_view text, const VarScheme& scheme) : lexer_(text, scheme) {}

  NodePtr parse() {
    NodePtr root = parse_expr();
    if (lexer_.peek().kind != Token::Kind::End)
      throw ParseError("unexpected trailing input", lexer_.peek().position);
    return root;
  }

 private:
  NodePtr parse_expr() {
    NodePtr acc;
    if (lexer_.peek().kind == Token::Kind::Minus) {
      lexer_.next();
      acc = make_binary(Node::Kind::Sub, make_literal(Scalar(0)), parse_term());
    } else {
      acc = parse_term();
    }
    while (true) {
      Token::Kind kind = lexer_.peek().kind;
      if (kind == Token::Kind::Plus) {
        lexer_.next();
        acc = make_binary(Node::Kind::Add, std::move(acc), parse_term());
      } else if (kind == Token::Kind::Minus) {
        lexer_.next();
        acc = make_binary(Node::Kind::Sub, std::move(acc), parse_term());
      } else {
        return acc;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr acc = parse_factor();
    while (lexer_.peek().kind == Token::Kind::Star) {
      lexer_.next();
      acc = make_binary(Node::Kind::Mul, std::move(acc), parse_factor());
    }
    return acc;
  }

  NodePtr parse_factor() {
    NodePtr base = parse_base();
    if (lexer_.peek().kind == Token::Kind::Caret) {
      lexer_.next();
      Token t = lexer_.next();
      if (t.kind != Token::Kind::Number || t.number.get_den() != 1 || t.number < 0)
        throw ParseError("exponent must be a nonnegative integer", t.position);
      return make_pow(std::move(base), static_cast<unsigned>(t.number.get_num().get_ui()));
    }
    return base;
  }

  NodePtr parse_base() {
    Token t = lexer_.next();
    switch (t.kind) {
      case Token::Kind::Number:
        return make_literal(Scalar(t.number));
      case Token::Kind::Imag:
        return make_literal(Scalar::i());
      case Token::Kind::Var:
        return make_variable(t.variable);
      case Token::Kind::LParen: {
        NodePtr inner = parse_expr();
        Token close = lexer_.next();
        if (close.kind != Token::Kind::RParen)
          throw ParseError("expected ')'", close.position);
        return inner;
      }
      case Token::Kind::LBracket: {
        // [a,b] desugars to a*b - b*a
        NodePtr a = parse_expr();
        Token comma = lexer_.next();
        if (comma.kind != Token::Kind::Comma)
          throw ParseError("expected ',' in commutator", comma.position);
        NodePtr b = parse_expr();
        Token close = lexer_.next();
        if (close.kind != Token::Kind::RBracket)
          throw ParseError("expected ']'", close.position);
        NodePtr ab = make_binary(Node::Kind::Mul, clone(*a), clone(*b));
        NodePtr ba = make_binary(Node::Kind::Mul, std::move(b), std::move(a));
        return make_binary(Node::Kind::Sub, std::move(ab), std::move(ba));
      }
      default:
        throw ParseError("expected a value", t.position);
    }
  }

  Lexer lexer_;
};

NCSeries evaluate_node(const Node& node, const VarScheme& scheme, unsigned degree,
                       bool& truncated) {
  switch (node.kind) {
    case Node::Kind::Literal:
      return NCSeries::constant(scheme.vars, degree, node.value);
    case Node::Kind::Variable:
      return NCSeries::variable(scheme.vars, degree, node.variable);
    case Node::Kind::Add:
      return evaluate_node(*node.lhs, scheme, degree, truncated) +
             evaluate_node(*node.rhs, scheme, degree, truncated);
    case Node::Kind::Sub:
      return evaluate_node(*node.lhs, scheme, degree, truncated) -
             evaluate_node(*node.rhs, scheme, degree, truncated);
    case Node::Kind::Mul: {
      NCSeries lhs = evaluate_node(*node.lhs, scheme, degree, truncated);
      NCSeries rhs = evaluate_node(*node.rhs, scheme, degree, truncated);
      if (!lhs.is_zero() && !rhs.is_zero() &&
          lhs.max_term_degree() + rhs.max_term_degree() > degree)
        truncated = true;
      return lhs * rhs;
    }
    case Node::Kind::Pow: {
      NCSeries base = evaluate_node(*node.lhs, scheme, degree, truncated);
      NCSeries acc = NCSeries::constant(scheme.vars, degree, Scalar(1));
      for (unsigned k = 0; k < node.exponent; ++k) {
        if (!acc.is_zero() && !base.is_zero() &&
            acc.max_term_degree() + base.max_term_degree() > degree)
          truncated = true;
        acc = acc * base;
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable expression node kind");
}

}  // namespace

Expression Expression::parse(std::string_view text, const VarScheme& scheme) {
  Parser parser(text, scheme);
  return Expression(parser.parse(), scheme);
}

Expression::Evaluation Expression::evaluate(unsigned degree) const {
  bool truncated = false;
  NCSeries series = evaluate_node(*root_, scheme_, degree, truncated);
  return Evaluation{std::move(series), truncated};
}

Expression::Evaluation parse_series(std::string_view text, const VarScheme& scheme,
                                    unsigned degree) {
  return Expression::parse(text, scheme).evaluate(degree);
}

namespace {

// Canonical coefficient rendering. Pure real and pure imaginary scalars fold
// their sign into the term separator; mixed scalars print parenthesized.
struct CoeffText {
  bool negative;
  std::string magnitude;  // without sign, without the trailing word
};

CoeffText coefficient_text(const Scalar& c, bool with_word) {
  if (c.im == 0) {
    Rational a = abs(c.re);
    std::string body;
    if (a == 1 && with_word)
      body = "";  // bare word
    else
      body = a.get_str();
    return CoeffText{c.re < 0, std::move(body)};
  }
  if (c.re == 0) {
    Rational a = abs(c.im);
    std::string body = a == 1 ? "i" : a.get_str() + "*i";
    return CoeffText{c.im < 0, std::move(body)};
  }
  return CoeffText{false, "(" + scalar_str(c) + ")"};
}

std::string render_terms(const std::map<Word, Scalar>& terms, unsigned even_letters) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, c] : terms) {
    CoeffText coeff = coefficient_text(c, !word.empty());
    if (first) {
      if (coeff.negative) out += "-";
      first = false;
    } else {
      out += coeff.negative ? " - " : " + ";
    }
    if (word.empty()) {
      out += coeff.magnitude;
    } else if (coeff.magnitude.empty()) {
      out += word_str(word, even_letters);
    } else {
      out += coeff.magnitude + "*" + word_str(word, even_letters);
    }
  }
  return out;
}

}  // namespace

std::string series_str(const NCSeries& series, unsigned odd_vars) {
  unsigned split = odd_vars == 0 ? 0 : series.vars() - odd_vars;
  return render_terms(series.terms(), split);
}

std::string comm_series_str(const CommSeries& series, unsigned odd_vars) {
  unsigned split = odd_vars == 0 ? 0 : series.vars() - odd_vars;
  return render_terms(series.terms(), split);
}

}  // namespace ncps
