#include "polyparse.hpp"

#include <cctype>

#include "errors.hpp"

namespace hilb {

namespace {

struct Token {
  enum Kind { Number, Name, Plus, Minus, Star, Caret, Slash, End } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back({Token::Number, text.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() &&
             std::isalnum(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back({Token::Name, text.substr(i, j - i)});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Plus, "+"}); break;
      case '-': out.push_back({Token::Minus, "-"}); break;
      case '*': out.push_back({Token::Star, "*"}); break;
      case '^': out.push_back({Token::Caret, "^"}); break;
      case '/': out.push_back({Token::Slash, "/"}); break;
      default:
        throw ParseError(std::string("unexpected character '") + c +
                         "' in polynomial");
    }
    ++i;
  }
  out.push_back({Token::End, ""});
  return out;
}

class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& variables)
      : tokens_(tokenize(text)), variables_(variables) {}

  SparsePoly parse() {
    SparsePoly poly;
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
        sign = peek().kind == Token::Minus ? -1 : 1;
        advance();
      } else if (!first) {
        break;
      }
      auto [expo, coeff] = parse_term();
      coeff *= sign;
      auto it = poly.find(expo);
      if (it == poly.end()) {
        if (coeff != 0) poly.emplace(std::move(expo), std::move(coeff));
      } else {
        it->second += coeff;
        if (it->second == 0) poly.erase(it);
      }
      first = false;
      if (peek().kind == Token::End) break;
      if (peek().kind != Token::Plus && peek().kind != Token::Minus)
        throw ParseError("expected '+' or '-' between terms");
    }
    if (peek().kind != Token::End) throw ParseError("trailing input");
    return poly;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  void advance() { ++pos_; }

  int variable_index(const std::string& name) const {
    for (size_t v = 0; v < variables_.size(); ++v)
      if (variables_[v] == name) return static_cast<int>(v);
    return -1;
  }

  Rational parse_number() {
    std::string num = peek().text;
    advance();
    if (peek().kind == Token::Slash) {
      advance();
      if (peek().kind != Token::Number)
        throw ParseError("expected denominator after '/'");
      num += "/" + peek().text;
      advance();
    }
    return rational_from_string(num);
  }

  std::pair<std::vector<int>, Rational> parse_term() {
    std::vector<int> expo(variables_.size(), 0);
    Rational coeff = 1;
    bool any = false;
    while (true) {
      if (peek().kind == Token::Number) {
        coeff *= parse_number();
      } else if (peek().kind == Token::Name) {
        int v = variable_index(peek().text);
        if (v < 0)
          throw ParseError("unknown variable '" + peek().text + "'");
        advance();
        int power = 1;
        if (peek().kind == Token::Caret) {
          advance();
          if (peek().kind != Token::Number)
            throw ParseError("expected exponent after '^'");
          if (peek().text.size() > 6)
            throw ParseError("exponent out of range");
          power = std::stoi(peek().text);
          advance();
        }
        expo[v] += power;
      } else {
        throw ParseError("expected a factor");
      }
      any = true;
      if (peek().kind == Token::Star) {
        advance();
        continue;
      }
      break;
    }
    if (!any) throw ParseError("empty term");
    return {std::move(expo), std::move(coeff)};
  }

  std::vector<Token> tokens_;
  std::vector<std::string> variables_;
  size_t pos_ = 0;
};

} // namespace

SparsePoly parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

std::string format_terms(
    const std::vector<std::pair<std::vector<int>, Rational>>& ordered_terms,
    const std::vector<std::string>& variables) {
  if (ordered_terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [expo, coeff] : ordered_terms) {
    Rational c = coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (size_t v = 0; v < variables.size(); ++v) {
      if (expo[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables[v];
      if (expo[v] > 1) mono += "^" + std::to_string(expo[v]);
    }
    if (mono.empty()) {
      out += rational_to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += rational_to_string(c) + "*" + mono;
    }
  }
  return out;
}

} // namespace hilb
