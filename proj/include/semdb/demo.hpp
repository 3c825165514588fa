#ifndef SEMDB_DEMO_HPP
#define SEMDB_DEMO_HPP

#include <string>

namespace semdb::demo {

/// The shipped demo lexicon: the four core classes (general superclass,
/// verb, transitive verb, common noun) plus the bases 'Termin' and
/// 'ausmachen'. Also available on disk under data/demo_lexicon.plex.
std::string lexicon_source();

/// Rule set producing the semantic-lexicon output (sem_lex records).
std::string semlex_rules_source();

/// Rule set producing the one-line-per-lemma table output.
std::string table_rules_source();

/// The appointment-scheduling example interface term.
std::string example_vit_source();

/// A synthetic term with two quantifiers over a verb group; it has exactly
/// two readings.
std::string two_quantifier_vit_source();

/// The shipped sort alias table.
std::string sort_aliases_source();

}  // namespace semdb::demo

#endif  // SEMDB_DEMO_HPP
