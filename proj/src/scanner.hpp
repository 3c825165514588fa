#ifndef SEMDB_SCANNER_HPP
#define SEMDB_SCANNER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "semdb/error.hpp"

namespace semdb::detail {

// One tokenizer serves every textual format of the toolchain: lexicon
// sources, rule files, catalog and alias tables, and interface terms.
// `%` starts a comment running to end of line.
enum class TokKind {
  Atom,       // unquoted: [a-z][A-Za-z0-9_]*
  QuotedAtom, // '...', internal quotes doubled
  Variable,   // [A-Z_][A-Za-z0-9_]*
  Integer,
  String,     // "..." with \" and \\ escapes (rule templates)
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Amp,
  Tilde,
  Colon,
  Dot,
  OrOp,        // \/ (whitespace allowed between the two characters)
  ClassOpen,   // :<
  ClassClose,  // >:
  BaseOpen,    // :<<
  BaseClose,   // >>:
  End,
};

struct Token {
  TokKind kind;
  std::string text;  // atom/variable text (unescaped), or digits
  long long number = 0;
  int line = 1;
  int column = 1;
};

class Scanner {
 public:
  explicit Scanner(std::string_view input);

  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_end() const { return tokens_[pos_].kind == TokKind::End; }

  bool accept(TokKind kind);
  Token expect(TokKind kind, std::string_view what);
  [[noreturn]] void fail(const Token& at, std::string message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace semdb::detail

#endif  // SEMDB_SCANNER_HPP
