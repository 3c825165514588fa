#ifndef SEMDB_VIT_HPP
#define SEMDB_VIT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "semdb/term.hpp"

namespace semdb {

/// Slot 1 of an interface term: utterance identifier, an opaque mode flag,
/// and the surface string.
struct SegmentDescription {
  std::string utterance_id;
  std::string mode_flag;
  std::string surface;
};

/// The ten-slot interface term: segment description, labelled semantic
/// predicates, the most prominent label, then sortal, discourse, syntactic,
/// tense/aspect, scope, prosodic and grouping information.
struct Vit {
  SegmentDescription segment;
  std::vector<Term> semantics;
  std::string main_label;
  std::vector<Term> sorts;
  std::vector<Term> discourse;
  std::vector<Term> syntax;
  std::vector<Term> tense;
  std::vector<Term> scope;
  std::vector<Term> prosody;
  std::vector<Term> groups;
};

bool operator==(const SegmentDescription& a, const SegmentDescription& b);
bool operator==(const Vit& a, const Vit& b);
inline bool operator!=(const Vit& a, const Vit& b) { return !(a == b); }

/// Interprets a parsed term as an interface term. Throws Error(SlotArity)
/// when the functor is not vit/10, Error(SlotShape) when a slot has the
/// wrong shape. Unknown predicates inside the slot lists are accepted;
/// schema checks are the validator's job.
Vit vit_from_term(const Term& term);

/// Parses one interface term from text.
Vit parse_vit(std::string_view text);

/// Parses a file of interface terms separated by whitespace.
std::vector<Vit> parse_vits(std::string_view text);

/// Canonical form: one slot per line, list elements comma-separated, atoms
/// quoted only when required. print followed by parse is the identity up to
/// structural equality.
std::string print_vit(const Vit& vit);

Term vit_to_term(const Vit& vit);

}  // namespace semdb

#endif  // SEMDB_VIT_HPP
