#pragma once

#include "spslab/lattice.hpp"

namespace spslab {

struct Point {
  long long x = 0, y = 0;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }
};

enum class Slope { Normal, Steep, Invalid };
const char* slope_name(Slope s);

struct Corners {
  Index cl = -1, cr = -1;
  std::vector<Index> lower_left, lower_right; // ideal chains, bottom up
  std::vector<Index> upper_left, upper_right; // filter chains, bottom up
};

struct Cell4 {
  Index bottom, left, right, top;
  bool distributive = false;
};

struct C1Violation {
  std::string what;
  std::string detail;
};

struct C1Report {
  std::vector<C1Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string text() const;
};

/// Planar slim rectangular lattice with an exact integer-coordinate diagram.
/// In light coordinates lambda = x - y and mu = x + y, the lower-left
/// boundary chain lies on mu = 0 and the lower-right one on lambda = 0.
class RectDiagram {
 public:
  static RectDiagram make(Lattice lat, Corners corners, std::vector<Point> pos);
  static RectDiagram make_unchecked(Lattice lat, Corners corners, std::vector<Point> pos);

  const Lattice& lattice() const { return lat_; }
  const Corners& corners() const { return corners_; }
  int size() const { return lat_.size(); }
  const std::string& id(Index i) const { return lat_.id(i); }
  Index index(const std::string& id) const { return lat_.index(id); }

  Point pos(Index i) const { return pos_[i]; }
  long long lambda(Index i) const { return pos_[i].x - pos_[i].y; }
  long long mu(Index i) const { return pos_[i].x + pos_[i].y; }
  std::optional<Index> at_light(long long lambda, long long mu) const;

  /// Upper/lower covers in left-to-right order.
  const std::vector<Index>& up_ordered(Index i) const { return up_lr_[i]; }
  const std::vector<Index>& down_ordered(Index i) const { return down_lr_[i]; }

  int left_len() const { return static_cast<int>(corners_.lower_left.size()) - 1; }
  int right_len() const { return static_cast<int>(corners_.lower_right.size()) - 1; }

  bool on_lower_left(Index i) const { return mu(i) == 0; }
  bool on_lower_right(Index i) const { return lambda(i) == 0; }
  bool on_upper_left(Index i) const { return lat_.leq(corners_.cl, i); }
  bool on_upper_right(Index i) const { return lat_.leq(corners_.cr, i); }

  Slope classify_edge(Index lo, Index hi) const;
  C1Report validate_c1() const;
  std::vector<Cell4> cells() const;
  std::optional<Cell4> cell_with_top(Index top) const;

 private:
  RectDiagram(Lattice lat, Corners corners, std::vector<Point> pos);
  void build_ordered_covers();
  Lattice lat_;
  Corners corners_;
  std::vector<Point> pos_;
  std::vector<std::vector<Index>> up_lr_, down_lr_;
};

/// Identifies the two corners and the four boundary chains of a slim
/// rectangular lattice, or throws NotRectangular.
Corners recognize_rectangular(const Lattice& L);

/// Join-coordinate layout: element u goes to j*(-1,1) + i*(1,1) where j, i
/// index the largest lower-left / lower-right chain elements below u.
RectDiagram c1_layout(const Lattice& L, const Corners& corners);

/// recognize_rectangular + c1_layout.
RectDiagram layout(const Lattice& L);

} // namespace spslab
