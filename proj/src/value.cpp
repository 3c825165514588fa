#include "semdb/value.hpp"

#include <algorithm>

namespace semdb {

namespace {

bool plain_atom_text(std::string_view text) {
  if (text.empty()) return false;
  if (text[0] < 'a' || text[0] > 'z') return false;
  return std::all_of(text.begin(), text.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

bool Atom::needs_quotes() const {
  // `top` is a keyword in value position, so print it quoted.
  return !plain_atom_text(text_) || text_ == "top";
}

std::string Atom::print() const {
  if (!quoted_ && !needs_quotes()) return text_;
  std::string out = "'";
  for (char c : text_) {
    out += c;
    if (c == '\'') out += c;
  }
  out += '\'';
  return out;
}

Value Value::lit(Atom atom) {
  Value v;
  v.kind_ = Kind::Lit;
  v.atom_ = std::move(atom);
  return v;
}

Value Value::disjunction(std::vector<Value> alternatives) {
  std::vector<Value> flat;
  for (auto& alt : alternatives) {
    if (alt.kind_ == Kind::Or) {
      for (auto& nested : alt.children_) flat.push_back(std::move(nested));
    } else {
      flat.push_back(std::move(alt));
    }
  }
  std::vector<Value> unique;
  for (auto& alt : flat) {
    if (std::find(unique.begin(), unique.end(), alt) == unique.end())
      unique.push_back(std::move(alt));
  }
  if (unique.size() == 1) return std::move(unique.front());
  Value v;
  v.kind_ = Kind::Or;
  v.children_ = std::move(unique);
  return v;
}

Value Value::negation(Value operand) {
  Value v;
  v.kind_ = Kind::Not;
  v.children_.push_back(std::move(operand));
  return v;
}

std::string Value::print() const {
  switch (kind_) {
    case Kind::Top:
      return "top";
    case Kind::Lit:
      return atom_.print();
    case Kind::Or: {
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i > 0) out += " \\/ ";
        out += children_[i].print();
      }
      out += ')';
      return out;
    }
    case Kind::Not:
      return "~" + children_.front().print();
  }
  return {};
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Value::Kind::Top:
      return true;
    case Value::Kind::Lit:
      return a.atom_ == b.atom_;
    case Value::Kind::Or:
    case Value::Kind::Not:
      return a.children_ == b.children_;
  }
  return false;
}

namespace {

// Collects the literal texts of a value built from literals and disjunctions
// only. Returns false when the value contains top or a negation.
bool collect_literals(const Value& value, std::vector<const Atom*>& out) {
  switch (value.kind()) {
    case Value::Kind::Lit:
      out.push_back(&value.atom());
      return true;
    case Value::Kind::Or: {
      for (const auto& alt : value.alternatives())
        if (!collect_literals(alt, out)) return false;
      return true;
    }
    default:
      return false;
  }
}

}  // namespace

bool check_value(const Value& appropriateness, const Value& value) {
  if (appropriateness.is_top()) return true;
  if (value.kind() == Value::Kind::Not)
    return !check_value(appropriateness, value.operand());
  if (appropriateness.kind() == Value::Kind::Not)
    return !check_value(appropriateness.operand(), value);

  switch (appropriateness.kind()) {
    case Value::Kind::Lit:
      return value.is_lit() && value.atom() == appropriateness.atom();
    case Value::Kind::Or: {
      std::vector<const Atom*> literals;
      if (!collect_literals(value, literals)) return false;
      for (const Atom* literal : literals) {
        bool admitted = false;
        for (const auto& alt : appropriateness.alternatives()) {
          if (check_value(alt, Value::lit(*literal))) {
            admitted = true;
            break;
          }
        }
        if (!admitted) return false;
      }
      return true;
    }
    default:
      return false;
  }
}

}  // namespace semdb
