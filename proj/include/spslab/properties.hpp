#pragma once

#include "spslab/congruence.hpp"
#include "spslab/diagram.hpp"

namespace spslab {

struct PatternPoset {
  std::string name;
  Poset poset;
  std::vector<std::string> max_tags; // elements that must map to Max(host)
  PatternPoset(std::string name, Poset poset, std::vector<std::string> tags = {})
      : name(std::move(name)), poset(std::move(poset)), max_tags(std::move(tags)) {}
};

/// Three crown tops a0,a1,a2 over crown bottoms b0,b1,b2 (bi below every aj
/// with j != i), plus one pendant ci below each (ai, bi) pair.
PatternPoset three_pendant_three_crown();

/// Four-crown variant with two pendants, shipped as a pattern file as well.
PatternPoset two_pendant_four_crown();

/// All injective maps f with x <= y iff f(x) <= f(y) and covers of the
/// pattern landing on covers of the host. With constrain_max, tagged
/// pattern elements may only map to maximal host elements.
std::vector<std::vector<Index>> cover_preserving_embeddings(const PatternPoset& pattern,
                                                            const Poset& host,
                                                            bool constrain_max,
                                                            std::size_t limit = 0);

struct Verdict {
  std::string check;
  bool pass = false;
  std::string witness; // machine-readable detail when failing
};

std::vector<Verdict> check_thm3(const Poset& jir);
std::vector<Verdict> check_thm4(const Poset& jir, const PatternPoset& crown4);
Verdict check_3p3c(const Poset& jir);

struct PatchReport {
  bool patch = false;              // both corners are coatoms
  int max_jir = 0;                 // number of maximal join-irreducible congruences
  bool top_boolean_split = false;  // Con L is some D0 glued under a Boolean top block
  std::vector<std::string> d0_jir; // jir congruences inside D0 (names)
  std::vector<Verdict> verdicts;
};

/// Evaluates the three equivalent patch characterizations and asserts that
/// they agree (EquivalenceViolation otherwise).
PatchReport patch_characterize(const Lattice& L, const RectDiagram* d = nullptr);

/// For a slim patch lattice: split off the Boolean top block of Con L and
/// check the inherited conditions on Jir(D0).
std::vector<Verdict> corollary62_report(const Lattice& L);

} // namespace spslab
