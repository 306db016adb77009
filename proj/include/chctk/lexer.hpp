#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chctk/diagnostic.hpp"

namespace chctk {

enum class TokenKind {
  LParen,
  RParen,
  Symbol,
  Keyword,
  Numeral,
  Decimal,
  String,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePos pos;
};

/// Tokenizer for the SMT-LIB fragment. Comments (';' to end of line) and
/// whitespace produce no tokens. Lexical errors are recorded as diagnostics
/// and the offending bytes skipped; the lexer never throws on any input.
class Lexer {
 public:
  explicit Lexer(std::string_view source);

  Token next();
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  char peek() const;
  char advance();
  bool atEnd() const { return offset_ >= source_.size(); }
  void skipTrivia();
  SourcePos here() const { return {line_, col_}; }

  std::string_view source_;
  std::size_t offset_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::vector<Diagnostic> diagnostics_;
};

/// Characters allowed in simple (unquoted) symbols.
bool isSimpleSymbolChar(char c);
/// True iff the string needs no |...| quoting when printed as a symbol.
bool isSimpleSymbol(std::string_view s);

}  // namespace chctk
