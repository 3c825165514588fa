#ifndef SEMDB_TERM_HPP
#define SEMDB_TERM_HPP

#include <string>
#include <string_view>
#include <vector>

namespace semdb {

/// A logic term: atom, integer, variable, compound or list. Quoting of atoms
/// is surface syntax; equality is structural over text and numbers.
class Term {
 public:
  enum class Kind { Atom, Int, Var, Compound, List };

  static Term atom(std::string text);
  static Term integer(long long value);
  static Term variable(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);
  static Term list(std::vector<Term> elements);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_compound() const { return kind_ == Kind::Compound; }

  /// Atom text, variable name, or compound functor.
  const std::string& text() const { return text_; }
  long long number() const { return number_; }
  /// Compound arguments or list elements.
  const std::vector<Term>& args() const { return args_; }
  std::size_t arity() const { return args_.size(); }

  std::string print() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  Kind kind_ = Kind::Atom;
  std::string text_;
  long long number_ = 0;
  std::vector<Term> args_;
};

/// Parses one term from the input, consuming it entirely.
Term parse_term(std::string_view text);

/// Parses a whitespace-separated sequence of terms (e.g. a file of interface
/// terms).
std::vector<Term> parse_terms(std::string_view text);

}  // namespace semdb

#endif  // SEMDB_TERM_HPP
