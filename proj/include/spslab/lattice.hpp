#pragma once

#include "spslab/poset.hpp"

namespace spslab {

struct IrreducibleSets {
  std::vector<Index> jir;            // non-zero join-irreducibles
  std::vector<Index> mir;            // non-unit meet-irreducibles
  std::map<Index, Index> star;       // mir element -> its unique upper cover
};

/// Finite lattice: a poset together with total meet/join tables.
/// validate() computes the tables from the cover order and reports a
/// witness pair when some sup or inf fails to exist uniquely.
class Lattice {
 public:
  static Lattice validate(const Poset& p);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& id(Index i) const { return poset_.id(i); }
  Index index(const std::string& id) const { return poset_.index(id); }
  bool leq(Index a, Index b) const { return poset_.leq(a, b); }
  bool lt(Index a, Index b) const { return poset_.lt(a, b); }
  bool covers(Index a, Index b) const { return poset_.covers(a, b); }

  Index meet(Index a, Index b) const { return meet_[a][b]; }
  Index join(Index a, Index b) const { return join_[a][b]; }
  Index bottom() const { return bottom_; }
  Index top() const { return top_; }

  std::vector<Index> ideal(Index a) const { return poset_.down_set(a); }
  std::vector<Index> filter(Index a) const { return poset_.up_set(a); }

  IrreducibleSets irreducibles() const;
  bool is_semimodular() const;
  bool is_slim() const;
  bool is_distributive() const;
  bool is_graded() const;

  /// Sublattice induced on a meet/join-closed element set (e.g. an ideal).
  Lattice sublattice(const std::vector<Index>& elems) const;

 private:
  explicit Lattice(Poset p) : poset_(std::move(p)) {}
  Poset poset_;
  std::vector<std::vector<Index>> meet_, join_;
  Index bottom_ = -1, top_ = -1;
};

Lattice downset_lattice(const Poset& p);
Poset jir_poset(const Lattice& d);
Lattice glued_sum(const Lattice& a, const Lattice& b);
Lattice product(const Lattice& a, const Lattice& b);

} // namespace spslab
