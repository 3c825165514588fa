#ifndef SEMDB_VALUE_HPP
#define SEMDB_VALUE_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace semdb {

/// A constant of the lexicon formalism. Quoting is surface syntax: 'termin'
/// and termin denote the same atom, so equality compares text only. The
/// quoted flag is kept so a parsed lexicon prints back in its source form.
class Atom {
 public:
  Atom() = default;
  explicit Atom(std::string text, bool quoted = false)
      : text_(std::move(text)), quoted_(quoted) {}

  const std::string& text() const { return text_; }
  bool quoted() const { return quoted_; }

  /// True when the text cannot be written without quotes.
  bool needs_quotes() const;

  /// Source-faithful form: quoted if the source was, or if the text demands
  /// it. Internal quotes are doubled.
  std::string print() const;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.text_ == b.text_;
  }
  friend bool operator!=(const Atom& a, const Atom& b) { return !(a == b); }
  friend bool operator<(const Atom& a, const Atom& b) {
    return a.text_ < b.text_;
  }

 private:
  std::string text_;
  bool quoted_ = false;
};

/// A feature value or appropriateness condition: the unrestricted value
/// (top), a single atom, an ordered disjunction, or a negation. Disjunctions
/// are flat and duplicate-free; top never occurs nested.
class Value {
 public:
  enum class Kind { Top, Lit, Or, Not };

  Value() : kind_(Kind::Top) {}

  static Value top() { return Value(); }
  static Value lit(Atom atom);
  static Value lit(std::string text, bool quoted = false) {
    return lit(Atom(std::move(text), quoted));
  }
  /// Flattens nested disjunctions and drops duplicate alternatives. A single
  /// surviving alternative collapses to that alternative.
  static Value disjunction(std::vector<Value> alternatives);
  static Value negation(Value operand);

  Kind kind() const { return kind_; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_lit() const { return kind_ == Kind::Lit; }

  const Atom& atom() const { return atom_; }
  const std::vector<Value>& alternatives() const { return children_; }
  const Value& operand() const { return children_.front(); }

  std::string print() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

 private:
  Kind kind_;
  Atom atom_;
  std::vector<Value> children_;
};

/// Decides whether a concrete value is admitted by an appropriateness
/// condition. Top admits anything; a literal admits exactly itself; a
/// disjunction admits any value all of whose literals are admitted by some
/// alternative; negation on either side flips the verdict of its operand.
bool check_value(const Value& appropriateness, const Value& value);

}  // namespace semdb

#endif  // SEMDB_VALUE_HPP
