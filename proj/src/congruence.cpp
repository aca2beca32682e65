#include "spslab/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace spslab {

namespace {
Index uf_find(std::vector<Index>& uf, Index x) {
  while (uf[x] != x) {
    uf[x] = uf[uf[x]];
    x = uf[x];
  }
  return x;
}
} // namespace

Congruence Congruence::identity(int n) {
  Congruence c(n);
  for (Index i = 0; i < n; ++i) c.block_of_[i] = i;
  c.nblocks_ = n;
  return c;
}

Congruence Congruence::all(int n) {
  Congruence c(n);
  for (Index i = 0; i < n; ++i) c.block_of_[i] = 0;
  c.nblocks_ = 1;
  return c;
}

void Congruence::canonicalize(std::vector<Index>& uf) {
  const int n = size();
  std::vector<Index> least(n, -1);
  for (Index i = 0; i < n; ++i) {
    Index r = uf_find(uf, i);
    if (least[r] == -1) least[r] = i; // indices scanned in increasing order
  }
  nblocks_ = 0;
  for (Index i = 0; i < n; ++i) {
    block_of_[i] = least[uf_find(uf, i)];
    if (block_of_[i] == i) ++nblocks_;
  }
}

bool Congruence::leq(const Congruence& other) const {
  for (Index i = 0; i < size(); ++i)
    if (other.block_of_[i] != other.block_of_[block_of_[i]]) return false;
  return true;
}

Congruence Congruence::joined(const Congruence& other) const {
  const int n = size();
  std::vector<Index> uf(n);
  for (Index i = 0; i < n; ++i) uf[i] = i;
  auto unite = [&](Index a, Index b) {
    a = uf_find(uf, a);
    b = uf_find(uf, b);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  };
  for (Index i = 0; i < n; ++i) {
    unite(i, block_of_[i]);
    unite(i, other.block_of_[i]);
  }
  Congruence out(n);
  out.canonicalize(uf);
  return out;
}

std::vector<std::vector<Index>> Congruence::blocks() const {
  std::map<Index, std::vector<Index>> by_rep;
  for (Index i = 0; i < size(); ++i) by_rep[block_of_[i]].push_back(i);
  std::vector<std::vector<Index>> out;
  for (auto& [rep, members] : by_rep) out.push_back(members);
  return out;
}

std::string Congruence::key() const {
  std::ostringstream os;
  for (Index i = 0; i < size(); ++i) os << block_of_[i] << ",";
  return os.str();
}

Congruence principal_congruence(const Lattice& L, Index a, Index b) {
  const int n = L.size();
  std::vector<Index> uf(n);
  for (Index i = 0; i < n; ++i) uf[i] = i;
  std::deque<std::pair<Index, Index>> work;
  auto unite = [&](Index x, Index y) {
    Index rx = uf_find(uf, x), ry = uf_find(uf, y);
    if (rx == ry) return;
    uf[std::max(rx, ry)] = std::min(rx, ry);
    work.push_back({x, y});
  };
  unite(a, b);
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (Index z = 0; z < n; ++z) {
      unite(L.join(x, z), L.join(y, z));
      unite(L.meet(x, z), L.meet(y, z));
    }
  }
  Congruence out = Congruence::identity(n);
  out.canonicalize(uf);
  return out;
}

bool is_congruence(const Lattice& L, const Congruence& c) {
  const int n = L.size();
  for (Index x = 0; x < n; ++x) {
    Index y = c.rep(x);
    if (y == x) continue;
    for (Index z = 0; z < n; ++z) {
      if (!c.same(L.join(x, z), L.join(y, z))) return false;
      if (!c.same(L.meet(x, z), L.meet(y, z))) return false;
    }
  }
  return true;
}

std::vector<EdgeCon> edge_congruences(const Lattice& L) {
  std::vector<EdgeCon> out;
  for (auto [a, b] : L.poset().cover_pairs())
    out.push_back({{a, b}, principal_congruence(L, a, b)});
  return out;
}

JirCongruences jir_congruences(const Lattice& L) {
  auto edges = edge_congruences(L);
  // dedup, keeping the canonically first generating edge
  std::vector<Congruence> distinct;
  std::vector<std::pair<Index, Index>> gen;
  std::set<std::string> seen;
  for (const auto& ec : edges)
    if (seen.insert(ec.con.key()).second) {
      distinct.push_back(ec.con);
      gen.push_back(ec.edge);
    }
  // theta is join-irreducible iff it exceeds the join of the strictly
  // smaller edge congruences
  JirCongruences out{{}, {}, Poset({"x"}, {})};
  std::vector<int> keep;
  for (size_t i = 0; i < distinct.size(); ++i) {
    Congruence below = Congruence::identity(L.size());
    for (size_t j = 0; j < distinct.size(); ++j)
      if (j != i && distinct[j].leq(distinct[i])) below = below.joined(distinct[j]);
    if (!(below == distinct[i])) keep.push_back(static_cast<int>(i));
  }
  std::vector<std::string> ids;
  for (int i : keep) {
    out.cons.push_back(distinct[i]);
    out.edges.push_back(gen[i]);
    ids.push_back("con(" + L.id(gen[i].first) + "," + L.id(gen[i].second) + ")");
  }
  CoverList covers;
  const int m = static_cast<int>(keep.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !out.cons[i].leq(out.cons[j]) || out.cons[i] == out.cons[j]) continue;
      bool direct = true;
      for (int k = 0; k < m && direct; ++k)
        if (k != i && k != j && out.cons[i].leq(out.cons[k]) && out.cons[k].leq(out.cons[j]) &&
            !(out.cons[k] == out.cons[i]) && !(out.cons[k] == out.cons[j]))
          direct = false;
      if (direct) covers.push_back({ids[i], ids[j]});
    }
  out.poset = Poset(ids, covers);
  return out;
}

Poset jir_con_poset(const Lattice& L) { return jir_congruences(L).poset; }

long long con_size(const Lattice& L) { return jir_con_poset(L).downset_count(); }

ConLattice con_lattice(const Lattice& L) {
  const int n = L.size();
  auto edges = edge_congruences(L);
  std::vector<Congruence> gens;
  {
    std::set<std::string> seen;
    for (auto& ec : edges)
      if (seen.insert(ec.con.key()).second) gens.push_back(ec.con);
  }
  std::vector<Congruence> all = {Congruence::identity(n)};
  std::set<std::string> seen = {all[0].key()};
  for (size_t head = 0; head < all.size(); ++head) {
    Congruence cur = all[head]; // joins may reallocate the vector
    for (const auto& g : gens) {
      Congruence j = cur.joined(g);
      if (seen.insert(j.key()).second) all.push_back(j);
    }
  }
  require(all.size() <= 5000, ErrorKind::InvalidInput,
          "congruence lattice too large to materialize");

  std::sort(all.begin(), all.end(), [](const Congruence& a, const Congruence& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a < b;
  });
  int width = 1;
  for (size_t s = all.size(); s >= 10; s /= 10) ++width;
  auto name = [&](size_t i) {
    std::string num = std::to_string(i);
    return "c" + std::string(width - num.size(), '0') + num;
  };
  std::vector<std::string> ids;
  for (size_t i = 0; i < all.size(); ++i) ids.push_back(name(i));

  const int m = static_cast<int>(all.size());
  std::vector<std::vector<char>> below(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) below[i][j] = all[i].leq(all[j]);
  CoverList covers;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !below[i][j] || below[j][i]) continue;
      bool direct = true;
      for (int k = 0; k < m && direct; ++k)
        if (k != i && k != j && below[i][k] && below[k][j] && !below[k][i] && !below[j][k])
          direct = false;
      if (direct) covers.push_back({ids[i], ids[j]});
    }
  ConLattice out{Lattice::validate(Poset(ids, covers)), {}, {}};
  // lattice construction reorders canonically; re-associate congruences
  out.congruences.resize(m, Congruence::identity(n));
  for (int i = 0; i < m; ++i) out.congruences[out.lattice.index(ids[i])] = all[i];
  for (const auto& ec : edge_congruences(L)) {
    for (int i = 0; i < m; ++i)
      if (out.congruences[i] == ec.con) {
        out.principal[ec.edge] = i;
        break;
      }
  }
  require(out.lattice.is_distributive(), ErrorKind::Internal,
          "congruence lattice failed distributivity");
  return out;
}

} // namespace spslab
