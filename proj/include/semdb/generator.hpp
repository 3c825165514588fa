#ifndef SEMDB_GENERATOR_HPP
#define SEMDB_GENERATOR_HPP

#include <cstdint>
#include <string>

namespace semdb {

/// Deterministically generates a lexicon source with the demo class
/// hierarchy and `base_count` bases spread over the common-noun and
/// transitive-verb classes. Every base carries the features the shipped
/// rule sets require, so compilation produces one record per base.
std::string make_synthetic_lexicon_source(std::size_t base_count,
                                          std::uint64_t seed = 1);

}  // namespace semdb

#endif  // SEMDB_GENERATOR_HPP
