#pragma once

// Named forbidden-submatrix patterns and the selector grammar used by the
// command line. Every pattern class from the recognition table is present;
// selector "chain3" expands to the gamma/delta pair.

#include <optional>
#include <string>
#include <vector>

#include "chain3/matrix.hpp"

namespace chain3 {

struct NamedPattern {
  std::string name;
  Pattern pattern;
  std::string note;  // empty when there is nothing to remark
};

const std::vector<NamedPattern>& pattern_catalog();

// Lookup by exact name; nullopt when unknown.
std::optional<Pattern> catalog_pattern(const std::string& name);

// Expands one selector: a catalog name or the set name "chain3".
// Unknown selectors yield an empty vector.
std::vector<Pattern> pattern_set(const std::string& selector);

const Pattern& gamma_pattern();
const Pattern& delta_pattern();
const Pattern& d_pattern();
const Pattern& chain_pattern();      // (0 1)
const Pattern& chain_alt_pattern();  // (1 0)

}  // namespace chain3
