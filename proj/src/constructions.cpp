#include "spslab/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spslab/iso.hpp"

namespace spslab {

RectDiagram grid(int m, int n) {
  require(m >= 1 && n >= 1, ErrorKind::InvalidInput, "grid needs positive chain lengths");
  auto name = [](int i, int j) { return std::to_string(i) + "," + std::to_string(j); };
  std::vector<std::string> ids;
  CoverList covers;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) {
      ids.push_back(name(i, j));
      if (i < m) covers.push_back({name(i, j), name(i + 1, j)});
      if (j < n) covers.push_back({name(i, j), name(i, j + 1)});
    }
  return layout(Lattice::validate(Poset(ids, covers)));
}

Corners corners_from(const Lattice& L, const std::string& cl_id, const std::string& cr_id) {
  Corners c;
  c.cl = L.index(cl_id);
  c.cr = L.index(cr_id);
  require(L.join(c.cl, c.cr) == L.top() && L.meet(c.cl, c.cr) == L.bottom(),
          ErrorKind::NotRectangular, "corners are not complementary");
  auto chain_of = [&](std::vector<Index> elems) {
    require(L.poset().is_chain(elems), ErrorKind::NotRectangular, "boundary is not a chain");
    std::sort(elems.begin(), elems.end(),
              [&](Index a, Index b) { return L.poset().height(a) < L.poset().height(b); });
    return elems;
  };
  c.lower_left = chain_of(L.ideal(c.cl));
  c.lower_right = chain_of(L.ideal(c.cr));
  c.upper_left = chain_of(L.filter(c.cl));
  c.upper_right = chain_of(L.filter(c.cr));
  return c;
}

namespace {

// Edges subdivided beyond the cell's own lower edge. Starting from the
// just-subdivided edge (u,v), the face on the far side has (u,v) as its
// upper-right (left side) resp. upper-left (right side) edge; its opposite
// lower edge is subdivided next, until the lower boundary is reached.
std::vector<std::pair<Index, Index>> staircase_edges(const RectDiagram& d, Index u, Index v,
                                                     bool left_side) {
  std::vector<std::pair<Index, Index>> out;
  const Lattice& L = d.lattice();
  for (;;) {
    const auto& downs = d.down_ordered(v);
    auto it = std::find(downs.begin(), downs.end(), u);
    require(it != downs.end(), ErrorKind::Internal, "staircase lost the cover " + d.id(u));
    Index neighbour = -1;
    if (left_side && it != downs.begin()) neighbour = *(it - 1);
    if (!left_side && it + 1 != downs.end()) neighbour = *(it + 1);
    if (neighbour == -1) {
      bool boundary = left_side ? (d.on_lower_left(u) && d.on_lower_left(v))
                                : (d.on_lower_right(u) && d.on_lower_right(v));
      require(boundary, ErrorKind::Internal,
              "staircase ended off the lower boundary at (" + d.id(u) + "," + d.id(v) + ")");
      return out;
    }
    Index bottom = L.meet(u, neighbour);
    require(L.covers(bottom, u) && L.covers(bottom, neighbour), ErrorKind::Internal,
            "staircase face at " + d.id(v) + " is not a covering square");
    out.push_back({bottom, neighbour});
    u = bottom;
    v = neighbour;
  }
}

std::string role_fan(int i, int j) { return "f" + std::to_string(i) + "_" + std::to_string(j); }
std::string role_side(bool left, int level, int i) {
  if (level == 0) return (left ? "l" : "r") + std::to_string(i);
  return (left ? "sl" : "sr") + std::to_string(level) + "_" + std::to_string(i);
}

} // namespace

RectDiagram multifork_insert(const RectDiagram& d, const std::string& cell_top, int rank,
                             const RoleNames* hints, RoleNames* created) {
  require(rank >= 1, ErrorKind::InvalidInput, "multifork rank must be at least 1");
  const Lattice& L = d.lattice();
  const int k = rank;
  Index t = L.index(cell_top);

  auto cell = d.cell_with_top(t);
  require(cell.has_value(), ErrorKind::NotACell, "no 4-cell with top " + cell_top);
  require(cell->distributive, ErrorKind::NotDistributiveCell,
          "cell with top " + cell_top + " is not distributive");
  Index o = cell->bottom, a = cell->left, b = cell->right;

  std::vector<std::pair<Index, Index>> left_edges = {{o, a}}, right_edges = {{o, b}};
  for (auto e : staircase_edges(d, o, a, true)) left_edges.push_back(e);
  for (auto e : staircase_edges(d, o, b, false)) right_edges.push_back(e);

  RoleNames names;
  std::set<std::string> used(L.poset().ids().begin(), L.poset().ids().end());
  auto make_name = [&](const std::string& role) {
    std::string name;
    if (hints) {
      auto it = hints->find(role);
      require(it != hints->end(), ErrorKind::ReplayMismatch,
              "replay hint missing for role " + role + " at " + cell_top);
      name = it->second;
    } else {
      name = cell_top + "#" + role;
    }
    require(used.insert(name).second, ErrorKind::ReplayMismatch,
            "created element name '" + name + "' already in use");
    names[role] = name;
    return name;
  };

  std::vector<std::string> ids = L.poset().ids();
  std::set<std::pair<std::string, std::string>> covers;
  {
    auto orig = L.poset().cover_pairs_ids();
    covers.insert(orig.begin(), orig.end());
  }
  for (auto side_edges : {&left_edges, &right_edges})
    for (auto [u, v] : *side_edges) covers.erase({L.id(u), L.id(v)});

  // fan: f[i][j] for 1 <= i <= j <= k, tubes on the diagonal
  std::vector<std::vector<std::string>> fan(k + 1, std::vector<std::string>(k + 1));
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      fan[i][j] = make_name(role_fan(i, j));
      ids.push_back(fan[i][j]);
    }
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      if (i + 1 <= j) covers.insert({fan[i][j], fan[i + 1][j]});
      if (j - 1 >= i) covers.insert({fan[i][j], fan[i][j - 1]});
    }
  for (int i = 1; i <= k; ++i) covers.insert({fan[i][i], cell_top});

  // subdivide each staircase edge; levels are cross-linked by normal covers
  std::vector<std::vector<std::string>> side_chain[2]; // [left][level][i]
  for (bool left : {true, false}) {
    auto& edges = left ? left_edges : right_edges;
    auto& chains = side_chain[left ? 0 : 1];
    for (size_t level = 0; level < edges.size(); ++level) {
      auto [u, v] = edges[level];
      std::vector<std::string> chain(k + 1);
      for (int i = 1; i <= k; ++i) {
        chain[i] = make_name(role_side(left, static_cast<int>(level), i));
        ids.push_back(chain[i]);
      }
      covers.insert({L.id(u), chain[1]});
      for (int i = 1; i < k; ++i) covers.insert({chain[i], chain[i + 1]});
      covers.insert({chain[k], L.id(v)});
      if (level > 0)
        for (int i = 1; i <= k; ++i) covers.insert({chain[i], chains[level - 1][i]});
      chains.push_back(chain);
    }
  }
  for (int j = 1; j <= k; ++j) covers.insert({side_chain[0][0][k + 1 - j], fan[1][j]});
  for (int i = 1; i <= k; ++i) covers.insert({side_chain[1][0][i], fan[i][k]});

  Lattice nl = Lattice::validate(Poset(ids, CoverList(covers.begin(), covers.end())));
  require(nl.is_semimodular(), ErrorKind::Internal, "insertion broke semimodularity");
  require(nl.is_slim(), ErrorKind::Internal, "insertion broke slimness");
  RectDiagram nd =
      c1_layout(nl, corners_from(nl, L.id(d.corners().cl), L.id(d.corners().cr)));

  // the new internal lamp has exactly k tubes with this peak
  LampSet ls = LampSet::compute(nd);
  bool lamp_ok = false;
  for (const auto& lamp : ls.lamps())
    if (lamp.kind == LampKind::Internal && nd.id(lamp.peak) == cell_top &&
        static_cast<int>(lamp.tubes.size()) == k)
      lamp_ok = true;
  require(lamp_ok, ErrorKind::Internal, "inserted lamp not found at " + cell_top);

  long long added = static_cast<long long>(k) * (k + 1) / 2 +
                    static_cast<long long>(k) * (left_edges.size() + right_edges.size());
  require(nl.size() == L.size() + added, ErrorKind::Internal, "size law violated");

  if (created) *created = names;
  return nd;
}

RectDiagram s_lattice(int t) {
  require(t >= 1, ErrorKind::InvalidInput, "rank must be positive");
  RectDiagram b2 = grid(1, 1);
  return multifork_insert(b2, b2.id(b2.lattice().top()), t);
}

namespace {

struct Removal {
  Lattice prior;
  std::string cl, cr;
  InsertionStep step;
};

// Inverse of multifork_insert for one lamp: identify the fan, the
// subdivision chains and the staircases, check that nothing else hangs on
// them, and rebuild the lattice with the subdivided edges restored.
std::optional<Removal> try_remove(const RectDiagram& d, const Lamp& lamp) {
  const Lattice& L = d.lattice();
  const int k = static_cast<int>(lamp.tubes.size());
  const Index t = lamp.peak;

  auto up_of = [&](Index x) { return L.poset().up_covers(x); };
  auto down_of = [&](Index x) { return L.poset().down_covers(x); };
  auto same_set = [](std::vector<Index> a, std::vector<Index> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  };

  std::vector<std::vector<Index>> fan(k + 1, std::vector<Index>(k + 1, -1));
  std::set<Index> fan_set;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      fan[i][j] = L.meet(lamp.tubes[i - 1].foot, lamp.tubes[j - 1].foot);
      if (!fan_set.insert(fan[i][j]).second) return std::nullopt;
    }

  std::vector<Index> lc(k + 1, -1), rc(k + 1, -1); // cell edge subdivisions
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      std::vector<Index> expect_up;
      if (i + 1 <= j) expect_up.push_back(fan[i + 1][j]);
      if (j - 1 >= i) expect_up.push_back(fan[i][j - 1]);
      if (i == j) expect_up.push_back(t);
      if (!same_set(up_of(fan[i][j]), expect_up)) return std::nullopt;

      std::vector<Index> in_fan;
      if (i - 1 >= 1) in_fan.push_back(fan[i - 1][j]);
      if (j + 1 <= k) in_fan.push_back(fan[i][j + 1]);
      std::vector<Index> extra;
      for (Index x : down_of(fan[i][j]))
        if (std::find(in_fan.begin(), in_fan.end(), x) == in_fan.end()) extra.push_back(x);
      if (down_of(fan[i][j]).size() != in_fan.size() + extra.size()) return std::nullopt;

      if (i == 1 && j == k) {
        if (extra.size() != 2) return std::nullopt;
        // left attachment has the smaller x coordinate
        if (d.pos(extra[0]).x > d.pos(extra[1]).x) std::swap(extra[0], extra[1]);
        lc[1] = extra[0];
        rc[1] = extra[1];
      } else if (i == 1) {
        if (extra.size() != 1) return std::nullopt;
        lc[k + 1 - j] = extra[0];
      } else if (j == k) {
        if (extra.size() != 1) return std::nullopt;
        rc[i] = extra[0];
      } else if (!extra.empty()) {
        return std::nullopt;
      }
    }

  Index o = L.meet(lc[1], rc[1]);
  std::set<Index> removed = fan_set;
  CoverList restored;
  std::vector<std::vector<Index>> levels[2]; // validated chains per side

  // Walk one side's subdivision chains down to the lower boundary. Level 0
  // crosses up into the fan; deeper levels cross up into the previous level
  // along lambda-constant (left) resp. mu-constant (right) covers.
  auto walk_side = [&](bool left, std::vector<Index> cur) -> bool {
    Index u = o;
    std::vector<Index> crosses(k + 1);
    for (int i = 1; i <= k; ++i) crosses[i] = left ? fan[1][k + 1 - i] : fan[i][k];
    for (;;) {
      if (!L.covers(u, cur[1])) return false;
      for (int i = 1; i < k; ++i)
        if (!L.covers(cur[i], cur[i + 1])) return false;
      Index v = -1;
      for (int i = 1; i <= k; ++i) {
        auto ups = up_of(cur[i]);
        if (ups.size() != 2) return false;
        Index other = -1;
        bool cross_found = false;
        for (Index x : ups) {
          if (x == crosses[i] && !cross_found) {
            cross_found = true;
            continue;
          }
          other = x;
        }
        if (!cross_found) return false;
        if (i < k && other != cur[i + 1]) return false;
        if (i == k) v = other;
      }
      if (v == -1) return false;
      restored.push_back({L.id(u), L.id(v)});
      for (int i = 1; i <= k; ++i) removed.insert(cur[i]);
      levels[left ? 0 : 1].push_back(cur);

      std::vector<Index> heads(k + 1, -1);
      int head_count = 0;
      for (int i = 1; i <= k; ++i) {
        Index chain_prev = (i == 1) ? u : cur[i - 1];
        auto downs = down_of(cur[i]);
        if (downs.size() > 2) return false;
        bool prev_found = false;
        for (Index x : downs) {
          if (x == chain_prev) {
            prev_found = true;
            continue;
          }
          bool aligned = left ? (d.lambda(x) == d.lambda(cur[i])) : (d.mu(x) == d.mu(cur[i]));
          if (!aligned) return false;
          heads[i] = x;
          ++head_count;
        }
        if (!prev_found) return false;
      }
      if (head_count == 0)
        return left ? (d.on_lower_left(u) && d.on_lower_left(v))
                    : (d.on_lower_right(u) && d.on_lower_right(v));
      if (head_count != k) return false;

      Index nu = -1;
      for (Index x : down_of(heads[1])) {
        bool aligned = left ? (d.lambda(x) == d.lambda(heads[1])) : (d.mu(x) == d.mu(heads[1]));
        if (aligned) continue;
        if (nu != -1) return false;
        nu = x;
      }
      if (nu == -1) return false;
      crosses.assign(cur.begin(), cur.end());
      u = nu;
      for (int i = 1; i <= k; ++i) cur[i] = heads[i];
    }
  };

  if (!walk_side(true, lc)) return std::nullopt;
  if (!walk_side(false, rc)) return std::nullopt;

  // rebuild without the removed elements
  std::vector<std::string> ids;
  for (Index i = 0; i < L.size(); ++i)
    if (!removed.count(i)) ids.push_back(L.id(i));
  CoverList covers;
  for (auto [x, y] : L.poset().cover_pairs())
    if (!removed.count(x) && !removed.count(y)) covers.push_back({L.id(x), L.id(y)});
  covers.insert(covers.end(), restored.begin(), restored.end());

  Removal out{Lattice::validate(Poset(ids, covers)), d.id(d.corners().cl),
              d.id(d.corners().cr), InsertionStep{}};
  if (!out.prior.is_semimodular() || !out.prior.is_slim()) return std::nullopt;

  out.step.top = L.id(t);
  out.step.rank = k;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) out.step.names[role_fan(i, j)] = L.id(fan[i][j]);
  for (bool left : {true, false})
    for (size_t level = 0; level < levels[left ? 0 : 1].size(); ++level)
      for (int i = 1; i <= k; ++i)
        out.step.names[role_side(left, static_cast<int>(level), i)] =
            L.id(levels[left ? 0 : 1][level][i]);
  return out;
}

bool decompose_dfs(const RectDiagram& d, const std::string& cl, const std::string& cr,
                   std::vector<InsertionStep>& steps, Lattice* base_out) {
  LampSet ls = LampSet::compute(d);
  std::vector<int> internal;
  for (int i = 0; i < ls.count(); ++i)
    if (ls.lamp(i).kind == LampKind::Internal) internal.push_back(i);
  if (internal.empty()) {
    // the remnant must be the grid
    RectDiagram g = grid(d.left_len(), d.right_len());
    if (!lattice_isomorphism(d.lattice(), g.lattice())) return false;
    *base_out = d.lattice();
    return true;
  }
  Poset lp = ls.lamp_poset();
  auto is_minimal = [&](int i) {
    Index pi = lp.index(ls.name(i));
    for (int j = 0; j < ls.count(); ++j)
      if (j != i && lp.lt(lp.index(ls.name(j)), pi)) return false;
    return true;
  };
  std::sort(internal.begin(), internal.end(), [&](int x, int y) {
    bool mx = is_minimal(x), my = is_minimal(y);
    if (mx != my) return mx;
    const auto px = d.pos(ls.lamp(x).foot), py = d.pos(ls.lamp(y).foot);
    if (px.x != py.x) return px.x < py.x;
    return px.y < py.y;
  });
  for (int i : internal) {
    auto removal = try_remove(d, ls.lamp(i));
    if (!removal) continue;
    RectDiagram prior = c1_layout(removal->prior, corners_from(removal->prior, cl, cr));
    if (decompose_dfs(prior, cl, cr, steps, base_out)) {
      steps.push_back(removal->step);
      return true;
    }
  }
  return false;
}

} // namespace

InsertionScript multifork_decompose(const RectDiagram& d) {
  std::vector<InsertionStep> steps;
  Poset trivial({"x"}, {});
  Lattice base = Lattice::validate(trivial);
  std::string cl = d.id(d.corners().cl), cr = d.id(d.corners().cr);
  require(decompose_dfs(d, cl, cr, steps, &base), ErrorKind::DecompositionFailed,
          "no multifork peeling order found (input not slim rectangular?)");
  RectDiagram base_diag = c1_layout(base, corners_from(base, cl, cr));
  InsertionScript script{base_diag.left_len(), base_diag.right_len(), base, cl, cr, steps};
  return script;
}

RectDiagram replay(const InsertionScript& script) {
  RectDiagram d = c1_layout(script.base, corners_from(script.base, script.cl, script.cr));
  for (const auto& step : script.steps)
    d = multifork_insert(d, step.top, step.rank, step.names.empty() ? nullptr : &step.names);
  return d;
}

namespace {
void require_sps_input(const Lattice& L, const std::string& which) {
  require(L.size() >= 3, ErrorKind::InvalidInput, which + " needs at least three elements");
  require(L.is_semimodular(), ErrorKind::InvalidInput, which + " is not semimodular");
  require(L.is_slim(), ErrorKind::InvalidInput, which + " is not slim");
}
} // namespace

Lattice theorem2_H(const std::vector<Lattice>& parts) {
  require(!parts.empty(), ErrorKind::InvalidInput, "need at least one summand");
  for (size_t i = 0; i < parts.size(); ++i)
    require_sps_input(parts[i], "summand " + std::to_string(i + 1));
  Lattice H = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) H = glued_sum(H, parts[i]);

  // Con H is the direct product of the summands' congruence lattices;
  // verified on the join-irreducible congruences
  Poset expected = jir_con_poset(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i)
    expected = cardinal_sum(expected, jir_con_poset(parts[i]));
  require(poset_isomorphism(jir_con_poset(H), expected).has_value(), ErrorKind::Internal,
          "glued sum congruence factorization failed");
  return H;
}

RectDiagram theorem2_L(const std::vector<Lattice>& parts) {
  require(!parts.empty(), ErrorKind::InvalidInput, "need at least one summand");
  std::vector<RectDiagram> diags;
  for (size_t i = 0; i < parts.size(); ++i) {
    require_sps_input(parts[i], "input " + std::to_string(i + 1));
    try {
      diags.push_back(layout(parts[i]));
    } catch (const Error& e) {
      if (e.kind == ErrorKind::NotRectangular)
        fail(ErrorKind::InvalidInput,
             "input " + std::to_string(i + 1) +
                 " is not rectangular; replace it by a rectangular lattice with the same "
                 "congruence lattice first");
      throw;
    }
  }

  std::vector<InsertionScript> scripts;
  std::vector<int> tcount;
  int t = 2;
  for (const auto& dg : diags) {
    scripts.push_back(multifork_decompose(dg));
    int ti = LampSet::compute(dg).boundary_count();
    tcount.push_back(ti);
    t += ti;
  }

  RectDiagram host = s_lattice(t);
  std::vector<std::string> middle_feet;
  {
    LampSet ls = LampSet::compute(host);
    const Lamp* w = nullptr;
    for (const auto& lamp : ls.lamps())
      if (lamp.kind == LampKind::Internal) w = &lamp;
    require(w && static_cast<int>(w->tubes.size()) == t, ErrorKind::Internal,
            "host is missing its rank-t lamp");
    for (int i = 1; i + 1 < t; ++i) middle_feet.push_back(host.id(w->tubes[i].foot));
  }
  for (const auto& foot : middle_feet) host = multifork_insert(host, foot, 1);

  // the new one-tube lamps, one per middle foot, listed left to right
  std::vector<std::string> a_feet;
  for (const auto& peak : middle_feet) a_feet.push_back(peak + "#f1_1");

  int offset = 0;
  for (size_t bi = 0; bi < parts.size(); ++bi) {
    const InsertionScript& script = scripts[bi];
    RectDiagram scratch = c1_layout(script.base, corners_from(script.base, script.cl, script.cr));
    const int M = scratch.left_len(), N = scratch.right_len();
    require(M + N == tcount[bi], ErrorKind::Internal, "boundary lamp count mismatch");

    if (!script.steps.empty()) {
      // lamp images of this block's boundary lamps: left lamps first, then
      // right lamps right-to-left, matching the geometric order of the feet
      LampSet ls = LampSet::compute(host);
      auto lamp_by_foot = [&](const std::string& foot) -> const Lamp& {
        for (const auto& lamp : ls.lamps())
          if (host.id(lamp.foot) == foot) return lamp;
        fail(ErrorKind::Internal, "missing lamp with foot " + foot);
      };
      auto col_lamp = [&](int a) { return lamp_by_foot(a_feet[offset + N + (M - 1 - a)]); };
      auto row_lamp = [&](int b) { return lamp_by_foot(a_feet[offset + b]); };

      // grey cells: RLit(row lamp) meets LLit(column lamp) in one 4-cell
      std::map<std::string, std::string> to_host; // scratch cell tops -> host
      for (int aa = 1; aa <= M; ++aa)
        for (int bb = 1; bb <= N; ++bb) {
          auto se = scratch.at_light(-2 * aa, 2 * bb);
          require(se.has_value(), ErrorKind::Internal, "grid remnant element missing");
          const Lamp& Y = col_lamp(aa - 1);
          const Lamp& X = row_lamp(bb - 1);
          auto top = host.at_light(Y.quad.p, X.quad.s);
          auto bot = host.at_light(Y.quad.q, X.quad.r);
          auto left = host.at_light(Y.quad.p, X.quad.r);
          auto right = host.at_light(Y.quad.q, X.quad.s);
          require(top && bot && left && right, ErrorKind::GreyCellNotFound,
                  "grey cell corners missing for block " + std::to_string(bi + 1));
          auto cell = host.cell_with_top(*top);
          require(cell && cell->bottom == *bot && cell->left == *left && cell->right == *right,
                  ErrorKind::GreyCellNotFound, "grey corners do not span a 4-cell");
          require(cell->distributive, ErrorKind::GreyCellNotFound, "grey cell not distributive");
          to_host[scratch.id(*se)] = host.id(*top);
        }

      for (const auto& step : script.steps) {
        auto it = to_host.find(step.top);
        require(it != to_host.end(), ErrorKind::ReplayMismatch,
                "no host image for cell top " + step.top);
        RoleNames host_names;
        RoleNames scratch_names;
        host = multifork_insert(host, it->second, step.rank, nullptr, &host_names);
        scratch = multifork_insert(scratch, step.top, step.rank,
                                   step.names.empty() ? nullptr : &step.names, &scratch_names);
        // corresponding created elements: fans and cell-edge subdivisions
        for (const auto& [role, sid] : scratch_names) {
          if (role[0] == 's') continue; // staircases differ between the two
          to_host[sid] = host_names.at(role);
        }
      }
    }
    offset += tcount[bi];
  }

  // expected: the disjoint sum of the inputs' Jir(Con) posets, everything
  // below a final W covered by the two boundary lamps U and V
  Poset expected = jir_con_poset(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i)
    expected = cardinal_sum(expected, jir_con_poset(parts[i]));
  expected = ordinal_sum(expected, Poset({"U", "V", "W"}, {{"W", "U"}, {"W", "V"}}));
  require(poset_isomorphism(jir_con_poset(host.lattice()), expected).has_value(),
          ErrorKind::ReplayMismatch, "congruence structure of the patch construction is off");

  // every other internal lamp has its foot in the light of the full-width
  // lamp W, and so lies below W in the lamp order
  {
    LampSet ls = LampSet::compute(host);
    int w = -1;
    for (int i = 0; i < ls.count(); ++i)
      if (ls.lamp(i).kind == LampKind::Internal && ls.lamp(i).peak == host.lattice().top())
        w = i;
    require(w != -1, ErrorKind::Internal, "full-width lamp lost");
    Poset lp = ls.lamp_poset();
    for (int i = 0; i < ls.count(); ++i)
      if (i != w && ls.lamp(i).kind == LampKind::Internal) {
        require(ls.rho_foot(i, w), ErrorKind::Internal,
                "foot of lamp " + ls.name(i) + " not lit by the full-width lamp");
        require(lp.lt(lp.index(ls.name(i)), lp.index(ls.name(w))), ErrorKind::Internal,
                "internal lamp " + ls.name(i) + " not below the full-width lamp");
      }
  }
  return host;
}

} // namespace spslab
