#include "spslab/lamps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace spslab {

const char* lamp_kind_name(LampKind k) {
  switch (k) {
    case LampKind::LeftBoundary: return "left-boundary";
    case LampKind::RightBoundary: return "right-boundary";
    case LampKind::Internal: return "internal";
  }
  return "?";
}

LampKind Quadruple::classify() const {
  require(p <= q && q <= r && r <= s, ErrorKind::Internal, "quadruple out of order");
  if (p < q && q < r && r < s) return LampKind::Internal;
  if (p == q && q < r && r < s) return LampKind::LeftBoundary;
  if (p < q && q < r && r == s) return LampKind::RightBoundary;
  fail(ErrorKind::Internal, "quadruple matches no lamp kind");
}

LampSet LampSet::compute(RectDiagram diagram) {
  LampSet out(std::move(diagram));
  const RectDiagram& d = out.d_;
  const Lattice& L = d.lattice();
  auto irr = L.irreducibles();

  std::vector<NeonTube> tubes;
  for (Index x : irr.mir) {
    Index peak = irr.star.at(x);
    Slope s = d.classify_edge(x, peak);
    bool boundary_chain = d.on_upper_left(x) || d.on_upper_right(x);
    // slope and boundary membership must tell the same story
    require(s != Slope::Invalid, ErrorKind::KindMismatch,
            "tube (" + L.id(x) + "," + L.id(peak) + ") has an invalid slope");
    require((s == Slope::Normal) == boundary_chain, ErrorKind::KindMismatch,
            "tube (" + L.id(x) + "," + L.id(peak) + ") slope disagrees with boundary membership");
    tubes.push_back({x, peak, s == Slope::Steep});
  }

  auto foot_lr = [&](const NeonTube& a, const NeonTube& b) {
    if (d.pos(a.foot).x != d.pos(b.foot).x) return d.pos(a.foot).x < d.pos(b.foot).x;
    return d.pos(a.foot).y < d.pos(b.foot).y;
  };

  std::map<Index, std::vector<NeonTube>> internal_by_peak;
  for (const auto& t : tubes) {
    if (t.internal) {
      internal_by_peak[t.peak].push_back(t);
      continue;
    }
    Lamp lamp;
    lamp.kind = d.on_upper_left(t.foot) ? LampKind::LeftBoundary : LampKind::RightBoundary;
    lamp.foot = t.foot;
    lamp.peak = t.peak;
    lamp.tubes = {t};
    out.lamps_.push_back(lamp);
  }
  for (auto& [peak, group] : internal_by_peak) {
    std::sort(group.begin(), group.end(), foot_lr);
    Lamp lamp;
    lamp.kind = LampKind::Internal;
    lamp.peak = peak;
    Index foot = group[0].foot;
    for (const auto& t : group) foot = L.meet(foot, t.foot);
    lamp.foot = foot;
    lamp.tubes = group;
    out.lamps_.push_back(lamp);
  }

  std::sort(out.lamps_.begin(), out.lamps_.end(), [&](const Lamp& a, const Lamp& b) {
    if (d.pos(a.foot).x != d.pos(b.foot).x) return d.pos(a.foot).x < d.pos(b.foot).x;
    return d.pos(a.foot).y < d.pos(b.foot).y;
  });

  std::set<Index> feet, internal_peaks;
  for (auto& lamp : out.lamps_) {
    require(feet.insert(lamp.foot).second, ErrorKind::Internal,
            "two lamps share the foot " + L.id(lamp.foot));
    lamp.quad = Quadruple{d.lambda(lamp.peak), d.lambda(lamp.foot), d.mu(lamp.foot),
                          d.mu(lamp.peak)};
    require(lamp.quad.classify() == lamp.kind, ErrorKind::Internal,
            "quadruple classification disagrees for lamp at " + L.id(lamp.foot));
    if (lamp.kind == LampKind::Internal) {
      require(internal_peaks.insert(lamp.peak).second, ErrorKind::Internal,
              "two internal lamps share the peak " + L.id(lamp.peak));
      // the body's lower sides have normal slopes: the leftmost tube foot
      // shares mu with the foot and the rightmost shares lambda
      require(d.mu(lamp.tubes.front().foot) == lamp.quad.r, ErrorKind::Internal,
              "leftmost tube foot off the floor line at " + L.id(lamp.foot));
      require(d.lambda(lamp.tubes.back().foot) == lamp.quad.q, ErrorKind::Internal,
              "rightmost tube foot off the floor line at " + L.id(lamp.foot));
    }
  }
  return out;
}

std::vector<NeonTube> LampSet::tubes() const {
  std::vector<NeonTube> out;
  for (const auto& lamp : lamps_)
    for (const auto& t : lamp.tubes) out.push_back(t);
  std::sort(out.begin(), out.end(), [&](const NeonTube& a, const NeonTube& b) {
    if (d_.pos(a.foot).x != d_.pos(b.foot).x) return d_.pos(a.foot).x < d_.pos(b.foot).x;
    return d_.pos(a.foot).y < d_.pos(b.foot).y;
  });
  return out;
}

int LampSet::boundary_count() const {
  int c = 0;
  for (const auto& l : lamps_)
    if (l.kind != LampKind::Internal) ++c;
  return c;
}

int LampSet::internal_count() const { return count() - boundary_count(); }

bool LitRegion::in_boxes(long long lambda, long long mu) const {
  const auto& [p, q, r, s] = quad;
  if (p <= lambda && lambda <= q && 0 <= mu && mu <= s) return true;
  if (q <= lambda && lambda <= 0 && r <= mu && mu <= s) return true;
  return false;
}

bool LitRegion::in_boxes_open(long long lambda, long long mu) const {
  const auto& [p, q, r, s] = quad;
  if (p < lambda && lambda < q && 0 < mu && mu < s) return true;
  if (q < lambda && lambda < 0 && r < mu && mu < s) return true;
  // the wall between the two boxes is interior where both have area
  if (lambda == q && p < q && q < 0 && r < mu && mu < s) return true;
  return false;
}

namespace {
bool on_light_segment(const std::vector<LightPoint>& seg, long long lambda, long long mu) {
  if (seg.size() != 2) return false;
  long long ax = seg[0].lambda, ay = seg[0].mu, bx = seg[1].lambda, by = seg[1].mu;
  if ((bx - ax) * (mu - ay) != (by - ay) * (lambda - ax)) return false;
  return std::min(ax, bx) <= lambda && lambda <= std::max(ax, bx) &&
         std::min(ay, by) <= mu && mu <= std::max(ay, by);
}
} // namespace

bool LitRegion::contains(long long l, long long m) const {
  if (m < 0 || l > 0) return false;
  const long long p = quad.p, s = quad.s;
  for (const auto& foot : tube_feet) {
    long long a = foot.lambda, b = foot.mu;
    // down-left rays land strictly below the tube's carrier line,
    // down-right rays strictly to its right; the line itself stays dark
    bool below = (m - s) * (a - p) < (l - p) * (b - s);
    bool right = (l - p) * (b - s) < (m - s) * (a - p);
    if (a == p) {
      // boundary-left tube: its own column below the peak is lit
      if (l == p && m < s) return true;
    } else if (l > p && l <= a && below) {
      return true;
    }
    if (b == s) {
      // boundary-right tube: its own row right of the peak is lit
      if (m == s && l > p) return true;
    } else if (m >= b && m < s && right) {
      return true;
    }
  }
  return false;
}

bool LitRegion::contains_open(long long lambda, long long mu) const {
  if (!in_boxes_open(lambda, mu)) return false;
  if (on_light_segment(tube_segment, lambda, mu)) return false;
  return true;
}

LitRegion LampSet::lit_region(int i) const {
  const Lamp& lamp = lamps_[i];
  const auto& [p, q, r, s] = lamp.quad;
  LightPoint peak{p, s}, foot{q, r};
  LightPoint lt{d_.lambda(lamp.tubes.front().foot), d_.mu(lamp.tubes.front().foot)};
  LightPoint rt{d_.lambda(lamp.tubes.back().foot), d_.mu(lamp.tubes.back().foot)};

  LitRegion region;
  region.quad = lamp.quad;
  region.peak = peak;
  for (const auto& t : lamp.tubes)
    region.tube_feet.push_back({d_.lambda(t.foot), d_.mu(t.foot)});
  if (lamp.kind == LampKind::Internal && lamp.tubes.size() == 1)
    region.tube_segment = {foot, peak};
  auto push = [](std::vector<LightPoint>& poly, LightPoint pt) {
    if (poly.empty() || poly.back().lambda != pt.lambda || poly.back().mu != pt.mu)
      poly.push_back(pt);
  };
  if (p == q) {
    region.left_polygon = {peak, {p, 0}}; // degenerate: a vertical light line
  } else {
    for (auto pt : {peak, LightPoint{p, 0}, LightPoint{q, 0}, rt}) push(region.left_polygon, pt);
  }
  if (r == s) {
    region.right_polygon = {peak, {0, s}};
  } else {
    for (auto pt : {peak, LightPoint{0, s}, LightPoint{0, r}, lt}) push(region.right_polygon, pt);
  }
  for (auto pt : {foot, lt, peak, rt}) push(region.body_polygon, pt);
  return region;
}

bool LampSet::left_of(int i, int j) const {
  return lamps_[i].quad.q <= lamps_[j].quad.p && lamps_[i].quad.s <= lamps_[j].quad.r;
}

bool LampSet::rho_alg(int i, int j) const {
  if (lamps_[i].kind != LampKind::Internal) return false;
  const Lattice& L = d_.lattice();
  return L.leq(lamps_[i].peak, lamps_[j].peak) && !L.leq(lamps_[i].foot, lamps_[j].foot);
}

bool LampSet::rho_foot(int i, int j) const {
  if (i == j || lamps_[i].kind != LampKind::Internal) return false;
  return lit_region(j).contains(d_.lambda(lamps_[i].foot), d_.mu(lamps_[i].foot));
}

bool LampSet::rho_infoot(int i, int j) const {
  if (i == j || lamps_[i].kind != LampKind::Internal) return false;
  return lit_region(j).contains_open(d_.lambda(lamps_[i].foot), d_.mu(lamps_[i].foot));
}

bool LampSet::rho_geom(int i, int j) const {
  if (i == j || lamps_[i].kind != LampKind::Internal) return false;
  LitRegion lj = lit_region(j);
  // The body is taken relatively open, so only the closure of the lit set
  // matters: the unlit residue of j can meet the body in vertices alone
  // (edges of the diagram never cross). The body is a convex quadrilateral
  // whose lower-right support corner is the foot, so vertex membership in
  // the box union decides containment.
  for (const auto& v : lit_region(i).body_polygon)
    if (!lj.in_boxes(v.lambda, v.mu)) return false;
  return true;
}

Poset LampSet::lamp_poset() const {
  const int m = count();
  std::vector<std::vector<char>> le(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) le[i][i] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && rho_alg(i, j)) le[i][j] = 1;
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      require(!(le[i][j] && le[j][i]), ErrorKind::NotAntisymmetric,
              "lamp order is not antisymmetric between " + name(i) + " and " + name(j));

  std::vector<std::string> ids;
  for (int i = 0; i < m; ++i) ids.push_back(name(i));
  CoverList covers;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !le[i][j]) continue;
      bool direct = true;
      for (int k = 0; k < m && direct; ++k)
        if (k != i && k != j && le[i][k] && le[k][j]) direct = false;
      if (direct) {
        // covers of the lamp order come from rho itself
        require(rho_alg(i, j), ErrorKind::Internal,
                "lamp cover " + name(i) + " < " + name(j) + " not witnessed by rho");
        covers.push_back({ids[i], ids[j]});
      }
    }
  return Poset(ids, covers);
}

std::vector<int> LampSet::jir_isomorphism(const JirCongruences& jir) const {
  const Lattice& L = d_.lattice();
  const int m = count();
  require(static_cast<int>(jir.cons.size()) == m, ErrorKind::IsoFailure,
          "lamp count " + std::to_string(m) + " != |Jir(Con L)| = " +
              std::to_string(jir.cons.size()));
  std::vector<int> map(m, -1);
  std::vector<char> used(m, 0);
  for (int i = 0; i < m; ++i) {
    Congruence c = principal_congruence(L, lamps_[i].foot, lamps_[i].peak);
    for (int k = 0; k < m; ++k)
      if (!used[k] && jir.cons[k] == c) {
        map[i] = k;
        used[k] = 1;
        break;
      }
    require(map[i] != -1, ErrorKind::IsoFailure,
            "con(foot,peak) of lamp " + name(i) + " is not a fresh join-irreducible congruence");
  }
  // order isomorphism: lamp order vs refinement order
  Poset lp = lamp_poset();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      bool lamp_le = lp.leq(lp.index(name(i)), lp.index(name(j)));
      bool con_le = jir.cons[map[i]].leq(jir.cons[map[j]]);
      require(lamp_le == con_le, ErrorKind::IsoFailure,
              "order mismatch at lamps " + name(i) + ", " + name(j));
    }
  return map;
}

ShieldPair LampSet::shield(int i) const {
  const Lamp& lamp = lamps_[i];
  require(lamp.kind == LampKind::Internal, ErrorKind::InvalidInput,
          "shields are defined for internal lamps");
  const Lattice& L = d_.lattice();
  Index left = -1, right = -1;
  for (Index x : L.poset().down_covers(lamp.peak)) {
    if (d_.lambda(x) == d_.lambda(lamp.peak)) {
      require(left == -1, ErrorKind::Internal, "two left shields at " + name(i));
      left = x;
    }
    if (d_.mu(x) == d_.mu(lamp.peak)) {
      require(right == -1, ErrorKind::Internal, "two right shields at " + name(i));
      right = x;
    }
  }
  require(left != -1, ErrorKind::MissingShield, "no left shield at lamp " + name(i));
  require(right != -1, ErrorKind::MissingShield, "no right shield at lamp " + name(i));
  ShieldPair out{{left, lamp.peak}, {right, lamp.peak}, false};
  // each shield must be longer than the distance between the opposite roof
  // and floor carrier lines; in light coordinates: mu(left end) < r and
  // lambda(right end) > q
  out.invariant_ok = d_.mu(left) < lamp.quad.r && d_.lambda(right) > lamp.quad.q;
  return out;
}

std::vector<LampSet::KeyLemmaViolation> LampSet::key_lemma_violations() const {
  std::vector<KeyLemmaViolation> out;
  Poset lp = lamp_poset();
  const int m = count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool common_lower_cover = false;
      for (int k = 0; k < m && !common_lower_cover; ++k)
        if (lp.covers(lp.index(name(k)), lp.index(name(i))) &&
            lp.covers(lp.index(name(k)), lp.index(name(j))))
          common_lower_cover = true;
      if (!common_lower_cover) continue;
      if (!left_of(i, j) && !left_of(j, i)) out.push_back({i, j});
    }
  return out;
}

std::vector<std::string> LampSet::rho_equality_violations() const {
  std::vector<std::string> out;
  const int m = count();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      bool a = rho_alg(i, j), f = rho_foot(i, j), o = rho_infoot(i, j), g = rho_geom(i, j);
      if (a != f || a != o || a != g) {
        std::ostringstream os;
        os << "(" << name(i) << "," << name(j) << "): alg=" << a << " foot=" << f
           << " infoot=" << o << " geom=" << g;
        out.push_back(os.str());
      }
    }
  return out;
}

} // namespace spslab
