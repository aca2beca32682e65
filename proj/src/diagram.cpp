#include "spslab/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spslab {

const char* slope_name(Slope s) {
  switch (s) {
    case Slope::Normal: return "normal";
    case Slope::Steep: return "steep";
    case Slope::Invalid: return "invalid";
  }
  return "?";
}

std::string C1Report::text() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.what << ": " << v.detail << "\n";
  return os.str();
}

Corners recognize_rectangular(const Lattice& L) {
  require(L.is_semimodular(), ErrorKind::NotRectangular, "lattice is not semimodular");
  require(L.is_slim(), ErrorKind::NotRectangular, "lattice is not slim");

  auto irr = L.irreducibles();
  std::vector<Index> cands;
  for (Index x : irr.jir) {
    if (x == L.bottom() || x == L.top()) continue;
    if (!std::binary_search(irr.mir.begin(), irr.mir.end(), x)) continue;
    if (!L.poset().is_chain(L.ideal(x)) || !L.poset().is_chain(L.filter(x))) continue;
    cands.push_back(x);
  }
  require(cands.size() == 2, ErrorKind::NotRectangular,
          "expected exactly two corner candidates, found " + std::to_string(cands.size()));
  Index x = cands[0], y = cands[1];
  require(L.join(x, y) == L.top() && L.meet(x, y) == L.bottom(), ErrorKind::NotRectangular,
          "corner candidates are not complementary");

  auto chain_of = [&](std::vector<Index> elems) {
    std::sort(elems.begin(), elems.end(),
              [&](Index a, Index b) { return L.poset().height(a) < L.poset().height(b); });
    return elems;
  };
  auto idseq = [&](const std::vector<Index>& c) {
    std::vector<std::string> s;
    for (Index i : c) s.push_back(L.id(i));
    return s;
  };
  auto ix = chain_of(L.ideal(x)), iy = chain_of(L.ideal(y));
  // reflection ambiguity: the lexicographically smaller lower chain is "left"
  if (idseq(iy) < idseq(ix)) {
    std::swap(x, y);
    std::swap(ix, iy);
  }
  Corners c;
  c.cl = x;
  c.cr = y;
  c.lower_left = ix;
  c.lower_right = iy;
  c.upper_left = chain_of(L.filter(x));
  c.upper_right = chain_of(L.filter(y));
  return c;
}

RectDiagram c1_layout(const Lattice& L, const Corners& corners) {
  const int n = L.size();
  auto rank_in = [&](const std::vector<Index>& chain, Index u) {
    // largest chain element below u; chains are sorted bottom-up
    for (int k = static_cast<int>(chain.size()) - 1; k >= 0; --k)
      if (L.leq(chain[k], u)) return k;
    fail(ErrorKind::LayoutContradiction, "no chain element below " + L.id(u));
  };
  std::vector<Point> pos(n);
  for (Index u = 0; u < n; ++u) {
    int j = rank_in(corners.lower_left, u);
    int i = rank_in(corners.lower_right, u);
    require(L.join(corners.lower_left[j], corners.lower_right[i]) == u,
            ErrorKind::LayoutContradiction,
            L.id(u) + " is not the join of its boundary projections (input not slim rectangular?)");
    pos[u] = Point{static_cast<long long>(i - j), static_cast<long long>(i + j)};
  }
  RectDiagram d = RectDiagram::make(L, corners, std::move(pos));
  auto rep = d.validate_c1();
  require(rep.ok(), ErrorKind::Internal, "join-coordinate layout failed validation:\n" + rep.text());
  return d;
}

RectDiagram layout(const Lattice& L) { return c1_layout(L, recognize_rectangular(L)); }

RectDiagram::RectDiagram(Lattice lat, Corners corners, std::vector<Point> pos)
    : lat_(std::move(lat)), corners_(std::move(corners)), pos_(std::move(pos)) {
  build_ordered_covers();
}

void RectDiagram::build_ordered_covers() {
  const int n = lat_.size();
  up_lr_.assign(n, {});
  down_lr_.assign(n, {});
  auto lr = [&](Index a, Index b) {
    if (pos_[a].x != pos_[b].x) return pos_[a].x < pos_[b].x;
    if (pos_[a].y != pos_[b].y) return pos_[a].y < pos_[b].y;
    return lat_.id(a) < lat_.id(b);
  };
  for (Index i = 0; i < n; ++i) {
    up_lr_[i] = lat_.poset().up_covers(i);
    down_lr_[i] = lat_.poset().down_covers(i);
    std::sort(up_lr_[i].begin(), up_lr_[i].end(), lr);
    std::sort(down_lr_[i].begin(), down_lr_[i].end(), lr);
  }
}

RectDiagram RectDiagram::make(Lattice lat, Corners corners, std::vector<Point> pos) {
  RectDiagram d(std::move(lat), std::move(corners), std::move(pos));
  const Lattice& L = d.lat_;
  std::set<Point> distinct;
  for (Index i = 0; i < L.size(); ++i)
    require(distinct.insert(d.pos_[i]).second, ErrorKind::LayoutContradiction,
            "coordinates not injective at " + L.id(i));
  for (auto [a, b] : L.poset().cover_pairs())
    require(d.pos_[a].y < d.pos_[b].y, ErrorKind::LayoutContradiction,
            "y does not increase along cover (" + L.id(a) + "," + L.id(b) + ")");
  require(d.pos_[L.bottom()] == Point{0, 0}, ErrorKind::LayoutContradiction,
          "bottom element must sit at the origin");
  return d;
}

RectDiagram RectDiagram::make_unchecked(Lattice lat, Corners corners, std::vector<Point> pos) {
  return RectDiagram(std::move(lat), std::move(corners), std::move(pos));
}

std::optional<Index> RectDiagram::at_light(long long lambda, long long mu) const {
  for (Index i = 0; i < size(); ++i)
    if (this->lambda(i) == lambda && this->mu(i) == mu) return i;
  return std::nullopt;
}

Slope RectDiagram::classify_edge(Index lo, Index hi) const {
  long long dx = pos_[hi].x - pos_[lo].x, dy = pos_[hi].y - pos_[lo].y;
  if (dy <= 0) return Slope::Invalid;
  long long adx = dx < 0 ? -dx : dx;
  if (adx == dy) return Slope::Normal;
  if (adx < dy) return Slope::Steep;
  return Slope::Invalid;
}

namespace {
long long cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(Point p, Point a, Point b) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// closed segment intersection with exact arithmetic
bool segments_intersect(Point a, Point b, Point c, Point d) {
  long long d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  return on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b);
}

bool strictly_inside_quad(Point p, const std::vector<Point>& quad) {
  // quad given counterclockwise or clockwise; consistent-sign test, zero = boundary
  int sign = 0;
  for (size_t i = 0; i < quad.size(); ++i) {
    Point a = quad[i], b = quad[(i + 1) % quad.size()];
    if (a == b) continue;
    long long c = cross(a, b, p);
    if (c == 0) return false;
    int s = c > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}
} // namespace

C1Report RectDiagram::validate_c1() const {
  C1Report rep;
  const Lattice& L = lat_;
  auto add = [&](const std::string& what, const std::string& detail) {
    rep.violations.push_back({what, detail});
  };

  auto irr = L.irreducibles();
  auto in_upper = [&](Index x) { return on_upper_left(x) || on_upper_right(x); };

  for (auto [a, b] : L.poset().cover_pairs()) {
    Slope s = classify_edge(a, b);
    bool is_mir_edge = irr.star.count(a) && irr.star.at(a) == b;
    bool expect_steep = is_mir_edge && !in_upper(a);
    Slope expect = expect_steep ? Slope::Steep : Slope::Normal;
    if (s != expect)
      add("slope", "edge (" + L.id(a) + "," + L.id(b) + ") expected " + slope_name(expect) +
                       ", found " + slope_name(s));
  }

  // lower boundary edges all of equal geometric length
  long long len2 = -1;
  for (const auto& chain : {corners_.lower_left, corners_.lower_right})
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
      long long dx = pos_[chain[k + 1]].x - pos_[chain[k]].x;
      long long dy = pos_[chain[k + 1]].y - pos_[chain[k]].y;
      long long l2 = dx * dx + dy * dy;
      if (len2 == -1) len2 = l2;
      if (l2 != len2)
        add("boundary-length", "lower boundary edge at " + L.id(chain[k]) + " has unequal length");
    }

  // boundary chains must lie on the sides of the full geometric rectangle
  for (Index i : corners_.lower_left)
    if (mu(i) != 0) add("boundary", "lower-left element " + L.id(i) + " off the mu=0 side");
  for (Index i : corners_.lower_right)
    if (lambda(i) != 0) add("boundary", "lower-right element " + L.id(i) + " off the lambda=0 side");
  for (Index i : corners_.upper_left)
    if (lambda(i) != lambda(corners_.cl))
      add("boundary", "upper-left element " + L.id(i) + " off the rectangle side");
  for (Index i : corners_.upper_right)
    if (mu(i) != mu(corners_.cr))
      add("boundary", "upper-right element " + L.id(i) + " off the rectangle side");

  // comparability-geometry law: u < v iff y(u) < y(v) and the u-v line is
  // steep or normal; equivalently the dominance order in light coordinates
  for (Index u = 0; u < size(); ++u)
    for (Index v = 0; v < size(); ++v) {
      if (u == v) continue;
      bool geo = lambda(v) <= lambda(u) && mu(u) <= mu(v) &&
                 (lambda(v) != lambda(u) || mu(u) != mu(v));
      if (L.lt(u, v) != geo)
        add("comparability", "pair (" + L.id(u) + "," + L.id(v) + ") order=" +
                                 (L.lt(u, v) ? "<" : "||") + " geometry=" + (geo ? "<" : "||"));
    }

  // lambda/mu bounds within the full rectangle
  long long lam_min = -2 * static_cast<long long>(left_len());
  long long mu_max = 2 * static_cast<long long>(right_len());
  for (Index i = 0; i < size(); ++i)
    if (lambda(i) < lam_min || lambda(i) > 0 || mu(i) < 0 || mu(i) > mu_max)
      add("bounds", L.id(i) + " outside the full rectangle");

  // planarity: edges only meet in shared endpoints
  auto edges = L.poset().cover_pairs();
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) {
        // shared endpoint: only that point may be common (no overlap)
        Index shared = (a == c || a == d) ? a : b;
        Index a2 = a == shared ? b : a, c2 = c == shared ? d : c;
        if (cross(pos_[shared], pos_[a2], pos_[c2]) == 0 &&
            (pos_[a2].x - pos_[shared].x) * (pos_[c2].x - pos_[shared].x) +
                    (pos_[a2].y - pos_[shared].y) * (pos_[c2].y - pos_[shared].y) >
                0)
          add("planarity", "edges overlap at " + L.id(shared));
        continue;
      }
      if (segments_intersect(pos_[a], pos_[b], pos_[c], pos_[d]))
        add("planarity",
            "edges (" + L.id(a) + "," + L.id(b) + ") and (" + L.id(c) + "," + L.id(d) + ") cross");
    }

  return rep;
}

std::vector<Cell4> RectDiagram::cells() const {
  std::vector<Cell4> out;
  for (Index o = 0; o < size(); ++o) {
    const auto& ups = up_lr_[o];
    for (size_t k = 0; k + 1 < ups.size(); ++k) {
      Index a = ups[k], b = ups[k + 1];
      Index t = lat_.join(a, b);
      require(lat_.covers(a, t) && lat_.covers(b, t), ErrorKind::Internal,
              "consecutive covers of " + id(o) + " do not span a covering square");
      std::vector<Point> quad = {pos_[o], pos_[a], pos_[t], pos_[b]};
      for (Index z = 0; z < size(); ++z)
        require(z == o || z == a || z == b || z == t || !strictly_inside_quad(pos_[z], quad),
                ErrorKind::Internal, "element " + id(z) + " inside cell of " + id(t));
      Cell4 cell{o, a, b, t, false};
      cell.distributive = lat_.sublattice(lat_.ideal(t)).is_distributive();
      out.push_back(cell);
    }
  }
  return out;
}

std::optional<Cell4> RectDiagram::cell_with_top(Index top) const {
  const auto& downs = down_lr_[top];
  if (downs.size() != 2) return std::nullopt;
  Index a = downs[0], b = downs[1];
  Index o = lat_.meet(a, b);
  if (!lat_.covers(o, a) || !lat_.covers(o, b) || lat_.join(a, b) != top) return std::nullopt;
  Cell4 cell{o, a, b, top, false};
  cell.distributive = lat_.sublattice(lat_.ideal(top)).is_distributive();
  return cell;
}

} // namespace spslab
