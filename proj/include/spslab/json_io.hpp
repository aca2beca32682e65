#pragma once

#include <iosfwd>
#include <optional>

#include "spslab/constructions.hpp"
#include "spslab/properties.hpp"

namespace spslab {

struct LoadedLattice {
  Lattice lattice;
  std::map<std::string, Point> coords; // empty when the file carries none
};

LoadedLattice load_lattice_json(const std::string& text);
LoadedLattice load_lattice_file(const std::string& path);

std::string lattice_to_json(const Lattice& L);
std::string diagram_to_json(const RectDiagram& d); // with "coords" filled

PatternPoset load_pattern_json(const std::string& text);
PatternPoset load_pattern_file(const std::string& path);

std::string script_to_json(const InsertionScript& s);

/// Fixture directory: SPSLAB_FIXTURES env var, else the built-in default.
std::string fixture_dir();

} // namespace spslab
