#include "chain3/catalog.hpp"

namespace chain3 {

namespace {

std::vector<NamedPattern> build_catalog() {
  auto p = [](std::initializer_list<const char*> rows) {
    return Pattern::from_rows(std::vector<std::string>(rows.begin(), rows.end()));
  };
  std::vector<NamedPattern> c;
  c.push_back({"chain", p({"01"}), "equivalent to (1 0) under column reversal"});
  c.push_back({"chain_alt", p({"10"}), "column-reversed form of chain"});
  c.push_back({"D", p({"1*", "01"}), "freeable form characterizes intersections of two chains"});
  c.push_back({"conv", p({"101"}), ""});
  c.push_back({"bpg1", p({"10", "*1"}), "bipartite permutation graphs forbid bpg1 and bpg2"});
  c.push_back({"bpg2", p({"1*", "01"}), "same grid as D"});
  c.push_back({"chordal", p({"11", "01"}), ""});
  c.push_back({"stick1", p({"*1*", "101"}), "stick graphs forbid stick1, stick2 and stick3"});
  c.push_back({"stick2", p({"1*", "01", "1*"}), ""});
  c.push_back({"stick3", p({"*1*", "*01", "1**"}), ""});
  c.push_back({"segray", p({"*1*", "101"}), "same grid as stick1"});
  c.push_back({"gig", p({"*1*", "101", "*1*"}), ""});
  c.push_back({"gamma", p({"*1*", "101", "01*"}), "freeable together with delta characterizes intersections of three chains"});
  c.push_back({"delta", p({"1**", "01*", "101"}), ""});
  return c;
}

}  // namespace

const std::vector<NamedPattern>& pattern_catalog() {
  static const std::vector<NamedPattern> catalog = build_catalog();
  return catalog;
}

std::optional<Pattern> catalog_pattern(const std::string& name) {
  for (const NamedPattern& entry : pattern_catalog())
    if (entry.name == name) return entry.pattern;
  return std::nullopt;
}

std::vector<Pattern> pattern_set(const std::string& selector) {
  if (selector == "chain3") return {gamma_pattern(), delta_pattern()};
  if (auto p = catalog_pattern(selector)) return {*p};
  return {};
}

namespace {

const Pattern& fixed(const char* name) {
  for (const NamedPattern& entry : pattern_catalog())
    if (entry.name == name) return entry.pattern;
  throw error(errc::invariant_violation, "catalog entry missing");
}

}  // namespace

const Pattern& gamma_pattern() { static const Pattern& p = fixed("gamma"); return p; }
const Pattern& delta_pattern() { static const Pattern& p = fixed("delta"); return p; }
const Pattern& d_pattern() { static const Pattern& p = fixed("D"); return p; }
const Pattern& chain_pattern() { static const Pattern& p = fixed("chain"); return p; }
const Pattern& chain_alt_pattern() { static const Pattern& p = fixed("chain_alt"); return p; }

}  // namespace chain3
