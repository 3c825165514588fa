// Shared fixtures and generators for the test suites.

#ifndef SEMDB_TESTS_SUPPORT_HPP
#define SEMDB_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "semdb/lexicon.hpp"
#include "semdb/value.hpp"

namespace semdb::testing {

/// The class definitions exactly as the demo database documents them,
/// without the interface-link extensions the shipped rule sets use.
inline std::string core_classes_source() {
  return R"(class semdb_c :< top >:
    syntax_link: top &
    predname: top &
    lemma: top &
    pos: top .

class verb_c :< semdb_c >:
    sort_of_inst: top .

class transitive_c :< verb_c >:
    semclass: transitive_verb &
    predscheme: 'L,I' &
    predscheme_a1: 'L,I,I1' &
    predscheme_a2: 'L,I,I2' &
    role_a1: (arg1 \/ arg2 \/ arg3) &
    role_a2: (arg1 \/ arg2 \/ arg3) .

class common_noun_c :< semdb_c >:
    predscheme: 'L,I' &
    sort_of_inst: top &
    semclass: common_noun .
)";
}

inline std::string core_bases_source() {
  return R"(base 'Termin' :<< common_noun_c >>:
    pos: 'NN' &
    lemma: 'Termin' &
    syntax_link: 'termin' &
    predname: 'termin' &
    sort_of_inst: 'time_sit_poly' .

base 'ausmachen' :<< transitive_c >>:
    pos: 'VVFIN;VVINF' &
    lemma: 'ausmachen' &
    syntax_link: 'ausmachen' &
    predname: 'ausmachen' &
    sort_of_inst: (communicat_sit \/ mental_sit) &
    role_a1: 'arg1' &
    role_a2: 'arg3' .
)";
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int below(int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(engine_);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(engine_) < p;
  }

 private:
  std::mt19937_64 engine_;
};

inline Atom random_atom(Rng& rng) {
  static const char* plain[] = {"alpha", "beta", "gamma", "delta", "omega",
                                "arg1",  "arg2", "arg3",  "foo",   "bar"};
  static const char* quoted[] = {"L,I", "VVFIN;VVINF", "Mixed Case",
                                 "don''t", "a'b"};
  if (rng.chance(0.25)) {
    std::string text = quoted[rng.below(5)];
    // the generator table stores the doubled-quote form already unescaped
    if (text == "don''t") text = "don't";
    return Atom(text, true);
  }
  return Atom(plain[rng.below(10)], rng.chance(0.2));
}

/// Negation-free value over a small alphabet: literal or flat disjunction.
inline Value random_positive_value(Rng& rng) {
  if (rng.chance(0.55)) return Value::lit(random_atom(rng));
  int n = 2 + rng.below(3);
  std::vector<Value> alts;
  for (int i = 0; i < n; ++i) alts.push_back(Value::lit(random_atom(rng)));
  Value v = Value::disjunction(std::move(alts));
  return v;
}

/// Arbitrary value: top, literal, disjunction or negation (never nesting
/// top).
inline Value random_value(Rng& rng, int depth = 0) {
  int pick = rng.below(depth >= 2 ? 2 : 4);
  switch (pick) {
    case 0:
      return Value::lit(random_atom(rng));
    case 1:
      return Value::top();
    case 2: {
      int n = 2 + rng.below(3);
      std::vector<Value> alts;
      for (int i = 0; i < n; ++i) {
        Value alt = random_value(rng, depth + 1);
        if (alt.is_top()) alt = Value::lit(random_atom(rng));
        alts.push_back(std::move(alt));
      }
      return Value::disjunction(std::move(alts));
    }
    default: {
      Value operand = random_value(rng, depth + 1);
      if (operand.is_top()) operand = Value::lit(random_atom(rng));
      return Value::negation(std::move(operand));
    }
  }
}

/// A structurally valid lexicon: single-parent acyclic classes (parents
/// always earlier in the list) and bases assigning a subset of effective
/// features with values inside the declared range.
inline Lexicon random_lexicon(Rng& rng) {
  Lexicon lexicon;
  int class_count = 1 + rng.below(5);
  for (int c = 0; c < class_count; ++c) {
    LexClass cls;
    cls.name = Atom("class_" + std::to_string(c));
    if (c > 0 && rng.chance(0.7))
      cls.parent = lexicon.classes[static_cast<std::size_t>(rng.below(c))].name;
    int features = rng.below(4);
    for (int f = 0; f < features; ++f) {
      FeatureDecl decl;
      decl.name = Atom("f" + std::to_string(c) + "_" + std::to_string(f));
      decl.appropriateness = random_value(rng);
      if (decl.appropriateness.is_lit())
        cls.fixed_values.emplace_back(decl.name, decl.appropriateness);
      cls.features.push_back(std::move(decl));
    }
    lexicon.classes.push_back(std::move(cls));
  }

  int base_count = rng.below(4);
  for (int b = 0; b < base_count; ++b) {
    BaseEntry base;
    base.name = Atom("base_" + std::to_string(b), rng.chance(0.5));
    base.class_name =
        lexicon.classes[static_cast<std::size_t>(rng.below(class_count))].name;
    auto features = effective_features(lexicon, base.class_name.text());
    for (const auto& ef : features) {
      if (ef.fixed || !rng.chance(0.5)) continue;
      // assign something the appropriateness admits
      const Value& app = ef.decl.appropriateness;
      if (app.is_top()) {
        base.assignments.emplace_back(ef.decl.name, random_positive_value(rng));
      } else if (app.kind() == Value::Kind::Or &&
                 app.alternatives().front().is_lit()) {
        base.assignments.emplace_back(ef.decl.name,
                                      app.alternatives().front());
      }
    }
    lexicon.bases.push_back(std::move(base));
  }
  return lexicon;
}

}  // namespace semdb::testing

#endif  // SEMDB_TESTS_SUPPORT_HPP
