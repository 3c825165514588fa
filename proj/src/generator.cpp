#include "semdb/generator.hpp"

#include <random>

#include "semdb/demo.hpp"

namespace semdb {

namespace {

const char* kSorts[] = {"time_sit_poly",  "communicat_sit", "mental_sit",
                        "abstract",       "person",         "space_time",
                        "human",          "anything"};
const char* kRoles[] = {"arg1", "arg2", "arg3"};

}  // namespace

std::string make_synthetic_lexicon_source(std::size_t base_count,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sort_pick(0, 7);
  std::uniform_int_distribution<int> role_pick(0, 2);
  std::uniform_int_distribution<int> kind_pick(0, 1);

  std::string out = demo::lexicon_source();
  out += "\n% generated entries\n";
  for (std::size_t i = 0; i < base_count; ++i) {
    std::string id = std::to_string(i);
    if (kind_pick(rng) == 0) {
      out += "base 'gen_n" + id + "' :<< common_noun_c >>:\n";
      out += "    pos: 'NN' &\n";
      out += "    lemma: 'GenN" + id + "' &\n";
      out += "    syntax_link: 'gen_n" + id + "' &\n";
      out += "    predname: 'gen_n" + id + "' &\n";
      out += "    sort_of_inst: '" + std::string(kSorts[sort_pick(rng)]) +
             "' .\n\n";
    } else {
      out += "base 'gen_v" + id + "' :<< transitive_c >>:\n";
      out += "    pos: 'VVFIN' &\n";
      out += "    lemma: 'genv" + id + "' &\n";
      out += "    syntax_link: 'gen_v" + id + "' &\n";
      out += "    predname: 'gen_v" + id + "' &\n";
      out += "    sort_of_inst: (" + std::string(kSorts[sort_pick(rng)]) +
             " \\/ situation_" + id + ") &\n";
      out += "    role_a1: '" + std::string(kRoles[role_pick(rng)]) + "' &\n";
      out += "    role_a2: '" + std::string(kRoles[role_pick(rng)]) + "' .\n\n";
    }
  }
  return out;
}

}  // namespace semdb
