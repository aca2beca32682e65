#pragma once

#include "spslab/congruence.hpp"
#include "spslab/diagram.hpp"

namespace spslab {

enum class LampKind { LeftBoundary, RightBoundary, Internal };
const char* lamp_kind_name(LampKind k);

struct NeonTube {
  Index foot = -1, peak = -1;
  bool internal = false; // steep; boundary tubes have normal slopes
};

struct Quadruple {
  long long p = 0, q = 0, r = 0, s = 0; // lambda(peak), lambda(foot), mu(foot), mu(peak)
  LampKind classify() const;            // strictness pattern of p <= q <= r <= s
};

struct Lamp {
  LampKind kind = LampKind::Internal;
  Index foot = -1, peak = -1;
  std::vector<NeonTube> tubes; // left to right
  Quadruple quad;
};

struct LightPoint {
  long long lambda = 0, mu = 0;
};

/// Lit set of a lamp in light coordinates: the points reached by light rays
/// going strictly down-left (constant lambda) or down-right (constant mu)
/// from the tube points below the peak. Its closure is the union of two
/// axis-aligned boxes, [p,q] x [0,s] and [q,0] x [r,s]; the set itself
/// omits the peak's roof lines and, for a single-tube internal lamp, the
/// tube segment (a steep tube cannot light itself).
struct LitRegion {
  Quadruple quad;
  LightPoint peak;
  std::vector<LightPoint> tube_feet;     // left to right
  std::vector<LightPoint> tube_segment;  // unlit residue of a 1-tube internal lamp
  std::vector<LightPoint> left_polygon;  // peak, (p,0), (q,0), rightmost tube foot
  std::vector<LightPoint> right_polygon; // peak, (0,s), (0,r), leftmost tube foot
  std::vector<LightPoint> body_polygon;  // foot, leftmost foot, peak, rightmost foot
  bool in_boxes(long long lambda, long long mu) const;      // closure of the lit set
  bool in_boxes_open(long long lambda, long long mu) const; // interior of the closure
  bool contains(long long lambda, long long mu) const;      // lit set proper
  bool contains_open(long long lambda, long long mu) const; // its topological interior
};

struct ShieldPair {
  std::pair<Index, Index> left, right; // edges (bottom, peak)
  bool invariant_ok = false;           // shields outreach the opposite lit strip
};

/// All lamps of a validated diagram, with the derived geometry.
/// Owns a copy of the diagram, so temporaries may be passed freely.
class LampSet {
 public:
  static LampSet compute(RectDiagram d);

  const RectDiagram& diagram() const { return d_; }
  int count() const { return static_cast<int>(lamps_.size()); }
  const Lamp& lamp(int i) const { return lamps_[i]; }
  const std::vector<Lamp>& lamps() const { return lamps_; }
  std::vector<NeonTube> tubes() const; // every tube, leftmost foot first
  int boundary_count() const;
  int internal_count() const;
  std::string name(int i) const { return d_.id(lamps_[i].foot); } // feet are unique

  LitRegion lit_region(int i) const;
  bool left_of(int i, int j) const;

  bool rho_alg(int i, int j) const;
  bool rho_foot(int i, int j) const;
  bool rho_infoot(int i, int j) const;
  bool rho_geom(int i, int j) const;

  /// Reflexive-transitive closure of rho as an ordered set over lamp names.
  /// Throws NotAntisymmetric for invalid diagrams.
  Poset lamp_poset() const;

  /// Verifies that I -> con(foot I, peak I) is an order isomorphism onto the
  /// poset of join-irreducible congruences; returns lamp -> jir index.
  std::vector<int> jir_isomorphism(const JirCongruences& jir) const;

  ShieldPair shield(int i) const; // internal lamps only

  struct KeyLemmaViolation {
    int i, j;
  };
  std::vector<KeyLemmaViolation> key_lemma_violations() const;

  /// rho_geom = rho_foot = rho_infoot = rho_alg, pairwise; returns the
  /// disagreeing pairs (expected none).
  std::vector<std::string> rho_equality_violations() const;

 private:
  explicit LampSet(RectDiagram d) : d_(std::move(d)) {}
  RectDiagram d_;
  std::vector<Lamp> lamps_;
};

} // namespace spslab
