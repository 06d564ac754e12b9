#include "siacp/frontend/lexer.hpp"

#include <cctype>

namespace siacp::frontend {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  };
  auto emit = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(src.substr(pos, len)), pos, {line, col}});
    advance(len);
  };

  while (pos < src.size()) {
    const char c = src[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (pos < src.size() && src[pos] != '\n') advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t len = 1;
      while (pos + len < src.size() && ident_char(src[pos + len])) ++len;
      if (pos + len < src.size() && src[pos + len] == '~') ++len;
      emit(Tok::Ident, len);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      while (pos + len < src.size() && std::isdigit(static_cast<unsigned char>(src[pos + len]))) {
        ++len;
      }
      emit(Tok::Number, len);
      continue;
    }
    const char d = pos + 1 < src.size() ? src[pos + 1] : '\0';
    switch (c) {
      case '+': emit(Tok::Plus, 1); break;
      case '.': emit(Tok::Dot, 1); break;
      case '|':
        if (d == '|') {
          emit(Tok::Par, 2);
        } else if (d == '_') {
          emit(Tok::LeftMerge, 2);
        } else {
          emit(Tok::Bar, 1);
        }
        break;
      case '(': emit(Tok::LParen, 1); break;
      case ')': emit(Tok::RParen, 1); break;
      case '{': emit(Tok::LBrace, 1); break;
      case '}': emit(Tok::RBrace, 1); break;
      case '[': emit(Tok::LBracket, 1); break;
      case ']': emit(Tok::RBracket, 1); break;
      case ';': emit(Tok::Semi, 1); break;
      case ',': emit(Tok::Comma, 1); break;
      case '=': emit(Tok::Equals, 1); break;
      case ':': emit(Tok::Colon, 1); break;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", {line, col});
    }
  }
  out.push_back({Tok::End, {}, src.size(), {line, col}});
  return out;
}

std::string describe(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Plus: return "'+'";
    case Tok::Dot: return "'.'";
    case Tok::Par: return "'||'";
    case Tok::LeftMerge: return "'|_'";
    case Tok::Bar: return "'|'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Equals: return "'='";
    case Tok::Colon: return "':'";
    case Tok::End: return "end of input";
  }
  return "token";
}

}  // namespace siacp::frontend
