#include "spslab/render.hpp"

#include <array>
#include <set>
#include <sstream>

namespace spslab {

namespace {

constexpr double kScale = 28.0;
constexpr double kMargin = 30.0;

struct Frame {
  double min_x = 0, max_y = 0;
  double X(double x) const { return kMargin + (x - min_x) * kScale; }
  double Y(double y) const { return kMargin + (max_y - y) * kScale; }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(1);
  os << v;
  return os.str();
}

// Lit set outline in the xy plane: the light-coordinate staircase hexagon
std::vector<std::pair<double, double>> lit_outline(const LampSet& ls, int lamp) {
  const auto& [p, q, r, s] = ls.lamp(lamp).quad;
  std::vector<std::pair<long long, long long>> lm = {{p, s}, {p, 0}, {q, 0},
                                                     {q, r}, {0, r}, {0, s}};
  std::vector<std::pair<double, double>> xy;
  for (auto [l, m] : lm) xy.push_back({(l + m) / 2.0, (m - l) / 2.0});
  return xy;
}

std::optional<int> lamp_by_foot(const LampSet& ls, const std::string& foot) {
  for (int i = 0; i < ls.count(); ++i)
    if (ls.name(i) == foot) return i;
  return std::nullopt;
}

} // namespace

std::string render_svg(const RectDiagram& d, const RenderOptions& opts) {
  const Lattice& L = d.lattice();
  Frame fr;
  for (Index i = 0; i < L.size(); ++i) {
    fr.min_x = std::min(fr.min_x, static_cast<double>(d.pos(i).x));
    fr.max_y = std::max(fr.max_y, static_cast<double>(d.pos(i).y));
  }
  double width = 0, height = 0;
  for (Index i = 0; i < L.size(); ++i) {
    width = std::max(width, fr.X(d.pos(i).x) + kMargin);
    height = std::max(height, fr.Y(0) + kMargin);
  }

  LampSet ls = LampSet::compute(d);
  std::set<Index> feet;
  std::set<std::pair<Index, Index>> tube_edges;
  for (const auto& lamp : ls.lamps()) {
    feet.insert(lamp.foot);
    for (const auto& t : lamp.tubes) tube_edges.insert({t.foot, t.peak});
  }

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
     << fmt(height) << "\">\n";

  if (!opts.lit_lamp.empty()) {
    auto lamp = lamp_by_foot(ls, opts.lit_lamp);
    require(lamp.has_value(), ErrorKind::InvalidInput, "no lamp with foot " + opts.lit_lamp);
    os << "  <polygon points=\"";
    for (auto [x, y] : lit_outline(ls, *lamp)) os << fmt(fr.X(x)) << "," << fmt(fr.Y(y)) << " ";
    os << "\" fill=\"#fff2a8\" stroke=\"none\"/>\n";
  }
  for (const auto& [blo, bhi] : opts.grey_cells) {
    auto cell = d.cell_with_top(d.index(bhi));
    require(cell && d.id(cell->bottom) == blo, ErrorKind::InvalidInput,
            "no cell " + blo + ".." + bhi);
    std::array<Index, 4> quad = {cell->bottom, cell->left, cell->top, cell->right};
    os << "  <polygon points=\"";
    for (Index i : quad)
      os << fmt(fr.X(d.pos(i).x)) << "," << fmt(fr.Y(d.pos(i).y)) << " ";
    os << "\" fill=\"#d8d8d8\" stroke=\"none\"/>\n";
  }

  for (auto [a, b] : L.poset().cover_pairs()) {
    bool tube = tube_edges.count({a, b}) != 0;
    os << "  <line x1=\"" << fmt(fr.X(d.pos(a).x)) << "\" y1=\"" << fmt(fr.Y(d.pos(a).y))
       << "\" x2=\"" << fmt(fr.X(d.pos(b).x)) << "\" y2=\"" << fmt(fr.Y(d.pos(b).y))
       << "\" stroke=\"black\" stroke-width=\"" << (tube ? "4.0" : "1.2") << "\"/>\n";
  }
  for (Index i = 0; i < L.size(); ++i) {
    bool filled = feet.count(i) != 0;
    os << "  <circle cx=\"" << fmt(fr.X(d.pos(i).x)) << "\" cy=\"" << fmt(fr.Y(d.pos(i).y))
       << "\" r=\"4.0\" fill=\"" << (filled ? "black" : "white")
       << "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
    if (opts.labels)
      os << "  <text x=\"" << fmt(fr.X(d.pos(i).x) + 6) << "\" y=\""
         << fmt(fr.Y(d.pos(i).y) - 6) << "\" font-size=\"10\">" << L.id(i) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_tikz(const RectDiagram& d, const RenderOptions& opts) {
  const Lattice& L = d.lattice();
  LampSet ls = LampSet::compute(d);
  std::set<Index> feet;
  std::set<std::pair<Index, Index>> tube_edges;
  for (const auto& lamp : ls.lamps()) {
    feet.insert(lamp.foot);
    for (const auto& t : lamp.tubes) tube_edges.insert({t.foot, t.peak});
  }
  auto coord = [&](Index i) {
    std::ostringstream os;
    os << "(" << fmt(d.pos(i).x / 2.0) << "," << fmt(d.pos(i).y / 2.0) << ")";
    return os.str();
  };

  std::ostringstream os;
  os << "\\begin{tikzpicture}[scale=1.0]\n";
  if (!opts.lit_lamp.empty()) {
    auto lamp = lamp_by_foot(ls, opts.lit_lamp);
    require(lamp.has_value(), ErrorKind::InvalidInput, "no lamp with foot " + opts.lit_lamp);
    os << "  \\fill[yellow!30] ";
    for (auto [x, y] : lit_outline(ls, *lamp))
      os << "(" << fmt(x / 2.0) << "," << fmt(y / 2.0) << ") -- ";
    os << "cycle;\n";
  }
  for (auto [a, b] : L.poset().cover_pairs()) {
    bool tube = tube_edges.count({a, b}) != 0;
    os << "  \\draw" << (tube ? "[line width=2.2pt]" : "") << " " << coord(a) << " -- "
       << coord(b) << ";\n";
  }
  for (Index i = 0; i < L.size(); ++i) {
    bool filled = feet.count(i) != 0;
    os << "  \\node[circle,draw" << (filled ? ",fill=black" : ",fill=white")
       << ",inner sep=1.6pt] at " << coord(i) << " {};\n";
    if (opts.labels)
      os << "  \\node[anchor=south west,font=\\tiny] at " << coord(i) << " {" << L.id(i)
         << "};\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

} // namespace spslab
