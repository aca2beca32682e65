#pragma once

#include "spslab/lamps.hpp"

namespace spslab {

/// Direct product of two chains with the join-coordinate layout.
RectDiagram grid(int m, int n);

/// Boundary chains recomputed for known corner elements; keeps the
/// left/right orientation stable across surgeries.
Corners corners_from(const Lattice& L, const std::string& cl_id, const std::string& cr_id);

/// Names of the elements a multifork insertion creates, keyed by role
/// ("f1_2", "l1", "r2", "sl1_1", ...). Doubles as the replay name hints.
using RoleNames = std::map<std::string, std::string>;

struct InsertionStep {
  std::string top; // id of the target cell's top at insertion time
  int rank = 1;
  RoleNames names; // optional: ids to reuse when replaying
};

/// Canonical generative description of a slim rectangular lattice:
/// a grid plus a sequence of multifork insertions.
struct InsertionScript {
  int m = 0, n = 0;   // lower chain lengths of the base grid
  Lattice base;       // the grid remnant, original ids preserved
  std::string cl, cr; // corner ids fixing the orientation
  std::vector<InsertionStep> steps;
};

/// Insert a rank-k multifork into the distributive 4-cell whose top is
/// `cell_top`: a fan of k(k+1)/2 elements, subdivided cell edges, and
/// staircase subdivisions propagating to the lower boundary.
RectDiagram multifork_insert(const RectDiagram& d, const std::string& cell_top, int rank,
                             const RoleNames* hints = nullptr, RoleNames* created = nullptr);

/// The rank-t multifork extension of the four-element Boolean lattice.
RectDiagram s_lattice(int t);

InsertionScript multifork_decompose(const RectDiagram& d);
RectDiagram replay(const InsertionScript& script);

/// Glued sum of the inputs; the congruence lattice of the result is the
/// direct product of the inputs' congruence lattices (verified).
Lattice theorem2_H(const std::vector<Lattice>& parts);

/// Patch lattice whose congruence lattice is the product of the inputs'
/// congruence lattices with a four-element Boolean top block (verified).
RectDiagram theorem2_L(const std::vector<Lattice>& parts);

} // namespace spslab
