#include "semdb/demo.hpp"

namespace semdb::demo {

std::string lexicon_source() {
  return R"(% Demo lexicon: four core classes and two German lemmata.

class semdb_c :< top >:
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
    role_a2: (arg1 \/ arg2 \/ arg3) &
    usb_macro: trans_verb_sem &
    inst_link: 'I1' .

class common_noun_c :< semdb_c >:
    predscheme: 'L,I' &
    sort_of_inst: top &
    semclass: common_noun &
    usb_macro: common_noun_sem &
    inst_link: 'I' .

base 'Termin' :<< common_noun_c >>:
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

std::string semlex_rules_source() {
  return R"(% Semantic lexicon rule set. Entries with role features take the
% transitive shape; anything with a predicate name, link and sort falls
% through to the default record.

rule trans_sem
    requires syntax_link, predname, sort_of_inst, role_a1, role_a2, usb_macro
    emits "sem_lex(Cat, ~w) short_for~n     ~w(Cat, ~w, (~w), ~n                    [~w,~w]) .~n"
    with syntax_link, usb_macro, predname, sort_of_inst, role_a1, role_a2 .

rule default_sem
    requires syntax_link, predname, sort_of_inst, usb_macro
    emits "sem_lex(Cat, ~w) short_for~n     ~w(Cat, ~w, (~w)) .~n"
    with syntax_link, usb_macro, predname, sort_of_inst .
)";
}

std::string table_rules_source() {
  return R"(% Table rule set: one logical line per lemma. Fields that no class or
% base assigns render as '-'.

rule trans_table
    requires lemma, pos, semclass, predname, predscheme, predscheme_a1,
             predscheme_a2, role_a1, role_a2, sort_of_inst, inst_link
    emits "~w ~w ~w ~w,~w,~w ~w ~w(~w),~w(~w),~w(~w) ~w/~w ~w ~w~n"
    with base, lemma, pos, predname, role_a1, role_a2, semclass,
         predname, predscheme, role_a1, predscheme_a1, role_a2, predscheme_a2,
         inst_link, sort_of_inst, a1_link, a2_link .

rule default_table
    requires lemma, pos, semclass, predname, predscheme, sort_of_inst, inst_link
    emits "~w ~w ~w ~w ~w ~w(~w) ~w/~w ~w ~w~n"
    with base, lemma, pos, predname, semclass, predname, predscheme,
         inst_link, sort_of_inst, a1_link, a2_link .
)";
}

std::string example_vit_source() {
  return R"(vit( segment_description(ttestr4u1, yes,
          'wir machen einen termin aus'),
     [termin(l6,i2),
      ausmachen(l4,i1),
      decl(l5,h1),
      arg1(l4,i1,i3),
      arg3(l4,i1,i2),
      ein_card_qua(l3,i2,l1,h2,1),
      pron(l9,i3)],
     l5,
     [s_sort(i1,ment_communicat_poly),
      s_sort(i2,&(space_time,time_sit_poly)),
      s_sort(i3,&(human,person))],
     [prontype(i3,sp_he,std)],
     [num(i3,pl),
      pers(i3,1),
      gend(i2,masc),
      num(i2,sg),
      pers(i2,3),
      cas(i2,acc),
      cas(i3,nom)],
     [ta_mood(i1,ind),
      ta_tense(i1,pres)],
     [ccom_plug(h2,l2),
      ccom_plug(h1,l3),
      leq(l2,h2),
      leq(l2,h1),
      leq(l3,h1)],
     [pros_mood(l5,decl)],
     [sem_group(l2,[l4]),
      sem_group(l1,[l6])]
   )
)";
}

std::string two_quantifier_vit_source() {
  return R"(vit( segment_description(synthq2u1, yes,
          'jeder mann trifft einen termin'),
     [decl(l0,h0),
      jeder_card_qua(l1,i1,l11,h1,1),
      ein_card_qua(l2,i2,l12,h2,1),
      treffen(l4,i0),
      arg1(l4,i0,i1),
      arg3(l4,i0,i2),
      mann(l21,i1),
      termin(l22,i2)],
     l0,
     [],
     [],
     [],
     [],
     [ccom_plug(h0,l1),
      ccom_plug(h1,l2),
      ccom_plug(h2,l3),
      leq(l3,h1),
      leq(l3,h2),
      leq(l3,h0),
      leq(l1,h0),
      leq(l2,h0)],
     [],
     [sem_group(l3,[l4]),
      sem_group(l11,[l21]),
      sem_group(l12,[l22])]
   )
)";
}

std::string sort_aliases_source() {
  return R"(% Sort alias table: an interface-term sort name on the left subsumes the
% database sort values on the right.
ment_communicat_poly: communicat_sit, mental_sit .
time_sit_poly: time_sit_poly .
)";
}

}  // namespace semdb::demo
