#include "semdb/vit.hpp"

#include "semdb/error.hpp"

namespace semdb {

bool operator==(const SegmentDescription& a, const SegmentDescription& b) {
  return a.utterance_id == b.utterance_id && a.mode_flag == b.mode_flag &&
         a.surface == b.surface;
}

bool operator==(const Vit& a, const Vit& b) {
  return a.segment == b.segment && a.semantics == b.semantics &&
         a.main_label == b.main_label && a.sorts == b.sorts &&
         a.discourse == b.discourse && a.syntax == b.syntax &&
         a.tense == b.tense && a.scope == b.scope && a.prosody == b.prosody &&
         a.groups == b.groups;
}

namespace {

std::vector<Term> slot_list(const Term& slot, int index) {
  if (slot.kind() != Term::Kind::List)
    throw Error(ErrorCode::SlotShape,
                "slot " + std::to_string(index) + " must be a list, got " +
                    slot.print());
  for (const Term& element : slot.args())
    if (!element.is_compound())
      throw Error(ErrorCode::SlotShape,
                  "slot " + std::to_string(index) +
                      " holds a non-predicate element: " + element.print());
  return slot.args();
}

}  // namespace

Vit vit_from_term(const Term& term) {
  if (!term.is_compound() || term.text() != "vit")
    throw Error(ErrorCode::SlotShape,
                "expected a vit(...) term, got " + term.print());
  if (term.arity() != 10)
    throw Error(ErrorCode::SlotArity,
                "vit term has " + std::to_string(term.arity()) +
                    " slots, expected 10");

  const auto& slots = term.args();

  const Term& seg = slots[0];
  if (!seg.is_compound() || seg.text() != "segment_description" ||
      seg.arity() != 3 || !seg.args()[0].is_atom() ||
      !seg.args()[1].is_atom() || !seg.args()[2].is_atom())
    throw Error(ErrorCode::SlotShape,
                "slot 1 must be segment_description(id, flag, surface), got " +
                    seg.print());

  Vit vit;
  vit.segment.utterance_id = seg.args()[0].text();
  vit.segment.mode_flag = seg.args()[1].text();
  vit.segment.surface = seg.args()[2].text();

  vit.semantics = slot_list(slots[1], 2);
  if (!slots[2].is_atom())
    throw Error(ErrorCode::SlotShape,
                "slot 3 (main label) must be an atom, got " + slots[2].print());
  vit.main_label = slots[2].text();
  vit.sorts = slot_list(slots[3], 4);
  vit.discourse = slot_list(slots[4], 5);
  vit.syntax = slot_list(slots[5], 6);
  vit.tense = slot_list(slots[6], 7);
  vit.scope = slot_list(slots[7], 8);
  vit.prosody = slot_list(slots[8], 9);
  vit.groups = slot_list(slots[9], 10);
  return vit;
}

Vit parse_vit(std::string_view text) { return vit_from_term(parse_term(text)); }

std::vector<Vit> parse_vits(std::string_view text) {
  std::vector<Vit> vits;
  for (const Term& term : parse_terms(text)) vits.push_back(vit_from_term(term));
  return vits;
}

Term vit_to_term(const Vit& vit) {
  std::vector<Term> slots;
  slots.push_back(Term::compound(
      "segment_description",
      {Term::atom(vit.segment.utterance_id), Term::atom(vit.segment.mode_flag),
       Term::atom(vit.segment.surface)}));
  slots.push_back(Term::list(vit.semantics));
  slots.push_back(Term::atom(vit.main_label));
  slots.push_back(Term::list(vit.sorts));
  slots.push_back(Term::list(vit.discourse));
  slots.push_back(Term::list(vit.syntax));
  slots.push_back(Term::list(vit.tense));
  slots.push_back(Term::list(vit.scope));
  slots.push_back(Term::list(vit.prosody));
  slots.push_back(Term::list(vit.groups));
  return Term::compound("vit", std::move(slots));
}

std::string print_vit(const Vit& vit) {
  Term term = vit_to_term(vit);
  std::string out = "vit(";
  const auto& slots = term.args();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (i > 0) out += ",\n    ";
    out += slots[i].print();
  }
  out += ")\n";
  return out;
}

}  // namespace semdb
