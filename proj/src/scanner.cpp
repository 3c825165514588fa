#include "scanner.hpp"

namespace semdb::detail {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_name_char(char c) {
  return is_lower(c) || is_upper(c) || is_digit(c);
}

}  // namespace

Scanner::Scanner(std::string_view input) {
  std::size_t i = 0;
  int line = 1;
  int column = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (input[i + k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += n;
  };

  while (i < input.size()) {
    char c = input[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < input.size() && input[i] != '\n') advance(1);
      continue;
    }

    Token tok;
    tok.line = line;
    tok.column = column;

    if (is_lower(c)) {
      std::size_t start = i;
      while (i < input.size() && is_name_char(input[i])) advance(1);
      tok.kind = TokKind::Atom;
      tok.text = std::string(input.substr(start, i - start));
      tokens_.push_back(std::move(tok));
      continue;
    }
    if (is_upper(c)) {
      std::size_t start = i;
      while (i < input.size() && is_name_char(input[i])) advance(1);
      tok.kind = TokKind::Variable;
      tok.text = std::string(input.substr(start, i - start));
      tokens_.push_back(std::move(tok));
      continue;
    }
    if (is_digit(c)) {
      std::size_t start = i;
      while (i < input.size() && is_digit(input[i])) advance(1);
      tok.kind = TokKind::Integer;
      tok.text = std::string(input.substr(start, i - start));
      try {
        tok.number = std::stoll(tok.text);
      } catch (const std::out_of_range&) {
        throw Error(ErrorCode::SyntaxError, "integer out of range", tok.line,
                    tok.column);
      }
      tokens_.push_back(std::move(tok));
      continue;
    }
    if (c == '\'') {
      advance(1);
      std::string text;
      bool closed = false;
      while (i < input.size()) {
        if (input[i] == '\'') {
          if (i + 1 < input.size() && input[i + 1] == '\'') {
            text += '\'';
            advance(2);
            continue;
          }
          advance(1);
          closed = true;
          break;
        }
        text += input[i];
        advance(1);
      }
      if (!closed)
        throw Error(ErrorCode::SyntaxError, "unterminated quoted atom",
                    tok.line, tok.column);
      tok.kind = TokKind::QuotedAtom;
      tok.text = std::move(text);
      tokens_.push_back(std::move(tok));
      continue;
    }
    if (c == '"') {
      advance(1);
      std::string text;
      bool closed = false;
      while (i < input.size()) {
        if (input[i] == '\\' && i + 1 < input.size() &&
            (input[i + 1] == '"' || input[i + 1] == '\\')) {
          text += input[i + 1];
          advance(2);
          continue;
        }
        if (input[i] == '"') {
          advance(1);
          closed = true;
          break;
        }
        text += input[i];
        advance(1);
      }
      if (!closed)
        throw Error(ErrorCode::SyntaxError, "unterminated string", tok.line,
                    tok.column);
      tok.kind = TokKind::String;
      tok.text = std::move(text);
      tokens_.push_back(std::move(tok));
      continue;
    }
    if (c == '\\') {
      // Disjunction operator: backslash, optional whitespace, slash.
      std::size_t j = i + 1;
      while (j < input.size() &&
             (input[j] == ' ' || input[j] == '\t' || input[j] == '\r' ||
              input[j] == '\n'))
        ++j;
      if (j < input.size() && input[j] == '/') {
        advance(j + 1 - i);
        tok.kind = TokKind::OrOp;
        tokens_.push_back(std::move(tok));
        continue;
      }
      throw Error(ErrorCode::SyntaxError, "stray backslash", line, column);
    }
    if (c == ':') {
      if (input.substr(i, 3) == ":<<") {
        advance(3);
        tok.kind = TokKind::BaseOpen;
      } else if (input.substr(i, 2) == ":<") {
        advance(2);
        tok.kind = TokKind::ClassOpen;
      } else {
        advance(1);
        tok.kind = TokKind::Colon;
      }
      tokens_.push_back(std::move(tok));
      continue;
    }
    if (c == '>') {
      if (input.substr(i, 3) == ">>:") {
        advance(3);
        tok.kind = TokKind::BaseClose;
      } else if (input.substr(i, 2) == ">:") {
        advance(2);
        tok.kind = TokKind::ClassClose;
      } else {
        throw Error(ErrorCode::SyntaxError, "stray '>'", line, column);
      }
      tokens_.push_back(std::move(tok));
      continue;
    }

    switch (c) {
      case '(': tok.kind = TokKind::LParen; break;
      case ')': tok.kind = TokKind::RParen; break;
      case '[': tok.kind = TokKind::LBracket; break;
      case ']': tok.kind = TokKind::RBracket; break;
      case ',': tok.kind = TokKind::Comma; break;
      case '&': tok.kind = TokKind::Amp; break;
      case '~': tok.kind = TokKind::Tilde; break;
      case '.': tok.kind = TokKind::Dot; break;
      default:
        throw Error(ErrorCode::SyntaxError,
                    std::string("unexpected character '") + c + "'", line,
                    column);
    }
    advance(1);
    tokens_.push_back(std::move(tok));
  }

  Token end;
  end.kind = TokKind::End;
  end.line = line;
  end.column = column;
  tokens_.push_back(std::move(end));
}

bool Scanner::accept(TokKind kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

Token Scanner::expect(TokKind kind, std::string_view what) {
  if (peek().kind != kind) fail(peek(), "expected " + std::string(what));
  return next();
}

void Scanner::fail(const Token& at, std::string message) const {
  throw Error(ErrorCode::SyntaxError, std::move(message), at.line, at.column);
}

}  // namespace semdb::detail
