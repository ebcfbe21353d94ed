// proofarg/lexer.cpp - tokenizer for .arg markup
#include "lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace proofarg::markup
{

namespace
{

constexpr std::array<std::string_view, 33> kKeywords = {
    "prop",        "argument", "dialogue",  "proof",      "data",     "warrant",   "claim",
    "backing",     "qualifier", "rebuttal", "uses",       "type",     "participants",
    "stance",      "settlement", "move",    "role",       "adversarial", "kind",   "field",
    "tag",         "dialogues", "version",  "assert",     "challenge", "question", "concede",
    "retract",     "shift",     "close",    "propose",    "offer",    "threat",
};

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool is_ident_continue(unsigned char c) { return std::isalnum(c) || c == '_'; }

size_t utf8_length(unsigned char lead)
{
  if (lead >= 0xF0) {
    return 4;
  }
  if (lead >= 0xE0) {
    return 3;
  }
  if (lead >= 0xC0) {
    return 2;
  }
  return 1;
}

class Lexer
{
public:
  Lexer(std::string_view src, std::vector<Token>& tokens, std::vector<ParseError>& errors)
      : src_(src), tokens_(tokens), errors_(errors)
  {
  }

  void run()
  {
    while (pos_ < src_.size()) {
      const unsigned char c = static_cast<unsigned char>(src_[pos_]);
      if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        skip_line();
      } else if (c == '"') {
        string_literal();
      } else if (std::isdigit(c)) {
        const size_t start = mark();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          advance();
        }
        push(TokenKind::Integer, start);
      } else if (is_ident_start(c)) {
        const size_t start = mark();
        while (pos_ < src_.size() && is_ident_continue(static_cast<unsigned char>(src_[pos_]))) {
          advance();
        }
        const auto word = src_.substr(start, pos_ - start);
        push(is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, start);
      } else if (auto kind = punctuation(c)) {
        const size_t start = mark();
        advance();
        push(*kind, start);
      } else if (c == '<' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
        const size_t start = mark();
        advance();
        advance();
        push(TokenKind::Arrow, start);
      } else {
        const size_t start = mark();
        const size_t len = std::min(utf8_length(c), src_.size() - pos_);
        for (size_t i = 0; i < len; ++i) {
          advance();
        }
        errors_.push_back({span_from(start), "token", std::string(src_.substr(start, len)),
                           "characters outside strings must be ASCII punctuation, letters or digits"});
      }
    }
  }

private:
  static std::optional<TokenKind> punctuation(unsigned char c)
  {
    switch (c) {
      case ':':
        return TokenKind::Colon;
      case ',':
        return TokenKind::Comma;
      case ';':
        return TokenKind::Semicolon;
      case '{':
        return TokenKind::LBrace;
      case '}':
        return TokenKind::RBrace;
      case '(':
        return TokenKind::LParen;
      case ')':
        return TokenKind::RParen;
      default:
        return std::nullopt;
    }
  }

  size_t mark()
  {
    mark_line_ = line_;
    mark_column_ = column_;
    return pos_;
  }

  void advance()
  {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_line()
  {
    while (pos_ < src_.size() && src_[pos_] != '\n') {
      advance();
    }
  }

  SourceSpan span_from(size_t start) const
  {
    return {mark_line_, mark_column_, start, std::max<size_t>(1, pos_ - start)};
  }

  void push(TokenKind kind, size_t start, std::string value = {}, bool has_value = false)
  {
    std::string lexeme(src_.substr(start, pos_ - start));
    if (!has_value) {
      value = lexeme;
    }
    tokens_.push_back({kind, std::move(lexeme), std::move(value), span_from(start)});
  }

  void string_literal()
  {
    const size_t start = mark();
    const size_t quote_line = line_;
    const size_t quote_column = column_;
    advance();
    std::string value;
    bool bad_escape = false;
    while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
      if (src_[pos_] == '\\') {
        const size_t esc = pos_;
        const size_t esc_line = line_;
        const size_t esc_column = column_;
        advance();
        if (pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\\')) {
          value += src_[pos_];
          advance();
        } else {
          const size_t len = pos_ < src_.size() && src_[pos_] != '\n' ? 2 : 1;
          errors_.push_back({{esc_line, esc_column, esc, len},
                             "escape sequence \\\" or \\\\",
                             std::string(src_.substr(esc, len)),
                             std::nullopt});
          bad_escape = true;
          if (len == 2) {
            advance();
          }
        }
        continue;
      }
      value += src_[pos_];
      advance();
    }
    if (pos_ >= src_.size() || src_[pos_] == '\n') {
      errors_.push_back({{quote_line, quote_column, start, 1}, "closing '\"'", "\"",
                         "strings cannot span lines"});
      return;
    }
    advance();
    if (!bad_escape) {
      mark_line_ = quote_line;
      mark_column_ = quote_column;
      push(TokenKind::String, start, std::move(value), true);
    }
  }

  std::string_view src_;
  std::vector<Token>& tokens_;
  std::vector<ParseError>& errors_;
  size_t pos_ = 0;
  size_t line_ = 1;
  size_t column_ = 1;
  size_t mark_line_ = 1;
  size_t mark_column_ = 1;
};

}  // namespace

bool is_keyword(std::string_view word)
{
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::string ParseError::message() const
{
  std::string out = "expected " + expected + ", found ";
  out += found.empty() ? std::string("end of input") : "'" + found + "'";
  if (hint) {
    out += " (" + *hint + ")";
  }
  return out;
}

namespace detail
{

void lex(std::string_view source, std::vector<Token>& tokens, std::vector<ParseError>& errors)
{
  Lexer(source, tokens, errors).run();
}

}  // namespace detail

std::variant<std::vector<Token>, ParseError> tokenize(std::string_view source)
{
  std::vector<Token> tokens;
  std::vector<ParseError> errors;
  detail::lex(source, tokens, errors);
  if (!errors.empty()) {
    return errors.front();
  }
  return tokens;
}

}  // namespace proofarg::markup
