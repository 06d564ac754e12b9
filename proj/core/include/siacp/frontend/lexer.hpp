#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "siacp/kernel/error.hpp"

namespace siacp::frontend {

enum class Tok {
  Ident,   // letter, then letters, digits, '_'; optionally a trailing '~'
  Number,
  Plus,      // +
  Dot,       // .
  Par,       // ||
  LeftMerge, // |_
  Bar,       // |
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  Semi,
  Comma,
  Equals,
  Colon,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t offset = 0;
  SourceLocation where;
};

/// Splits term source into tokens. `#` starts a comment running to the end
/// of the line. Throws SyntaxError on stray characters.
std::vector<Token> tokenize(std::string_view src);

std::string describe(Tok kind);

}  // namespace siacp::frontend
