#include "chctk/lexer.hpp"

#include <cctype>

namespace chctk {

namespace {
bool isDigitChar(char c) { return c >= '0' && c <= '9'; }
}  // namespace

bool isSimpleSymbolChar(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  switch (c) {
    case '~': case '!': case '@': case '$': case '%': case '^': case '&':
    case '*': case '_': case '-': case '+': case '=': case '<': case '>':
    case '.': case '?': case '/':
      return true;
    default:
      return false;
  }
}

bool isSimpleSymbol(std::string_view s) {
  if (s.empty()) return false;
  if (isDigitChar(s[0])) return false;
  for (char c : s)
    if (!isSimpleSymbolChar(c)) return false;
  return true;
}

Lexer::Lexer(std::string_view source) : source_(source) {}

char Lexer::peek() const { return atEnd() ? '\0' : source_[offset_]; }

char Lexer::advance() {
  char c = source_[offset_++];
  if (c == '\n') {
    ++line_;
    col_ = 1;
  } else {
    ++col_;
  }
  return c;
}

void Lexer::skipTrivia() {
  while (!atEnd()) {
    char c = peek();
    if (c == ';') {
      while (!atEnd() && peek() != '\n') advance();
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
               c == '\f') {
      advance();
    } else {
      return;
    }
  }
}

Token Lexer::next() {
  // Loop rather than recurse past bad bytes; arbitrary input may contain
  // arbitrarily long runs of them.
  for (;;) {
  skipTrivia();
  SourcePos pos = here();
  if (atEnd()) return {TokenKind::End, "", pos};

  char c = advance();
  if (c == '(') return {TokenKind::LParen, "(", pos};
  if (c == ')') return {TokenKind::RParen, ")", pos};

  if (isDigitChar(c)) {
    std::string text(1, c);
    while (!atEnd() && isDigitChar(peek())) text.push_back(advance());
    // A decimal needs at least one digit after the point.
    if (!atEnd() && peek() == '.' && offset_ + 1 < source_.size() &&
        isDigitChar(source_[offset_ + 1])) {
      text.push_back(advance());
      while (!atEnd() && isDigitChar(peek())) text.push_back(advance());
      return {TokenKind::Decimal, std::move(text), pos};
    }
    return {TokenKind::Numeral, std::move(text), pos};
  }

  if (c == ':') {
    std::string text;
    while (!atEnd() && isSimpleSymbolChar(peek())) text.push_back(advance());
    if (text.empty()) {
      diagnostics_.push_back({Severity::Error, "empty keyword", pos});
      continue;
    }
    return {TokenKind::Keyword, std::move(text), pos};
  }

  if (c == '|') {
    std::string text;
    while (!atEnd() && peek() != '|') text.push_back(advance());
    if (atEnd()) {
      diagnostics_.push_back(
          {Severity::Error, "unterminated quoted symbol", pos});
      return {TokenKind::End, "", here()};
    }
    advance();  // closing '|'
    return {TokenKind::Symbol, std::move(text), pos};
  }

  if (c == '"') {
    std::string text;
    while (!atEnd()) {
      char d = advance();
      if (d == '"') {
        if (!atEnd() && peek() == '"') {  // "" escapes a quote
          text.push_back('"');
          advance();
          continue;
        }
        return {TokenKind::String, std::move(text), pos};
      }
      text.push_back(d);
    }
    diagnostics_.push_back({Severity::Error, "unterminated string", pos});
    return {TokenKind::End, "", here()};
  }

  if (isSimpleSymbolChar(c)) {
    std::string text(1, c);
    while (!atEnd() && isSimpleSymbolChar(peek())) text.push_back(advance());
    return {TokenKind::Symbol, std::move(text), pos};
  }

  diagnostics_.push_back(
      {Severity::Error,
       "invalid character (byte " +
           std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
           ")",
       pos});
  }
}

}  // namespace chctk
