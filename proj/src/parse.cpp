#include "trivalent/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "trivalent/error.hpp"

namespace trivalent {
namespace {

enum class Token { kIdent, kNot, kAnd, kOr, kLParen, kRParen, kComma, kArrow, kEnd };

const char* describe(Token t) {
  switch (t) {
    case Token::kIdent: return "identifier";
    case Token::kNot: return "'~'";
    case Token::kAnd: return "'&'";
    case Token::kOr: return "'|'";
    case Token::kLParen: return "'('";
    case Token::kRParen: return "')'";
    case Token::kComma: return "','";
    case Token::kArrow: return "'=>'";
    case Token::kEnd: return "end of input";
  }
  return "token";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula formula() { return disjunction(); }

  Inference inference() {
    std::vector<Formula> premises;
    if (token_ != Token::kArrow) {
      premises.push_back(disjunction());
      while (token_ == Token::kComma) {
        advance();
        premises.push_back(disjunction());
      }
    }
    expect(Token::kArrow);
    Formula conclusion = disjunction();
    return Inference(std::move(premises), std::move(conclusion));
  }

  void expect(Token t) {
    if (token_ != t) fail(std::string("expected ") + describe(t) + ", found " + describe(token_));
    advance();
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, token_pos_); }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    token_pos_ = pos_;
    if (pos_ >= text_.size()) {
      token_ = Token::kEnd;
      return;
    }
    const char c = text_[pos_];
    if (ident_start(c)) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      ident_ = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      token_ = Token::kIdent;
      return;
    }
    ++pos_;
    switch (c) {
      case '~': token_ = Token::kNot; return;
      case '&': token_ = Token::kAnd; return;
      case '|': token_ = Token::kOr; return;
      case '(': token_ = Token::kLParen; return;
      case ')': token_ = Token::kRParen; return;
      case ',': token_ = Token::kComma; return;
      case '=':
        if (pos_ < text_.size() && text_[pos_] == '>') {
          ++pos_;
          token_ = Token::kArrow;
          return;
        }
        break;
      default:
        break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", token_pos_);
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (token_ == Token::kOr) {
      advance();
      f = Formula::disj(std::move(f), conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (token_ == Token::kAnd) {
      advance();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    switch (token_) {
      case Token::kNot:
        advance();
        return Formula::neg(unary());
      case Token::kIdent: {
        Formula f = Formula::var(ident_);
        advance();
        return f;
      }
      case Token::kLParen: {
        advance();
        Formula f = disjunction();
        expect(Token::kRParen);
        return f;
      }
      default:
        fail(std::string("expected a formula, found ") + describe(token_));
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t token_pos_ = 0;
  Token token_ = Token::kEnd;
  std::string ident_;
};

}  // namespace

Formula parse(std::string_view text) {
  Parser parser(text);
  Formula f = parser.formula();
  parser.expect(Token::kEnd);
  return f;
}

Inference parse_inference(std::string_view text) {
  Parser parser(text);
  Inference inference = parser.inference();
  parser.expect(Token::kEnd);
  return inference;
}

}  // namespace trivalent
