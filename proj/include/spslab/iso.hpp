#pragma once

#include <optional>

#include "spslab/lattice.hpp"

namespace spslab {

/// Order isomorphism P -> Q as an index mapping, or nullopt.
/// Deterministic: the search explores candidates in canonical order and
/// returns the first isomorphism found.
std::optional<std::vector<Index>> poset_isomorphism(const Poset& p, const Poset& q);

/// Lattice isomorphism; distributive inputs are matched through their
/// join-irreducible posets, everything else by refinement + backtracking.
std::optional<std::vector<Index>> lattice_isomorphism(const Lattice& a, const Lattice& b);

/// Invariant key useful for bucketing before pairwise isomorphism tests.
std::string iso_invariant_key(const Poset& p);

} // namespace spslab
