#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spslab/corpus.hpp"
#include "spslab/iso.hpp"
#include "spslab/json_io.hpp"
#include "spslab/render.hpp"

using namespace spslab;
using nlohmann::json;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::CycleInCovers:
    case ErrorKind::NotTransitivelyReduced:
    case ErrorKind::NotALattice:
    case ErrorKind::NotRectangular:
    case ErrorKind::LayoutContradiction:
    case ErrorKind::NotACell:
    case ErrorKind::NotDistributiveCell:
    case ErrorKind::DecompositionFailed:
      return 1;
    default:
      return 3;
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out.good()) fail(ErrorKind::InvalidInput, "cannot write " + out_path);
  out << text;
}

std::string poset_text(const Poset& p) {
  std::ostringstream os;
  os << p.size() << " elements; covers:";
  for (auto [a, b] : p.cover_pairs()) os << " " << p.id(a) << "<" << p.id(b);
  return os.str();
}

json poset_json(const Poset& p) {
  json j;
  j["elements"] = json::array();
  for (Index i = 0; i < p.size(); ++i) j["elements"].push_back(p.id(i));
  j["covers"] = json::array();
  for (auto [a, b] : p.cover_pairs()) j["covers"].push_back({p.id(a), p.id(b)});
  return j;
}

int cmd_validate(const std::string& file, bool as_json) {
  LoadedLattice in = load_lattice_file(file);
  const Lattice& L = in.lattice;
  if (as_json) {
    json j;
    j["elements"] = L.size();
    j["semimodular"] = L.is_semimodular();
    j["slim"] = L.is_slim();
    j["distributive"] = L.is_distributive();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "valid lattice: " << L.size() << " elements, bottom " << L.id(L.bottom())
              << ", top " << L.id(L.top()) << "\n"
              << "semimodular: " << (L.is_semimodular() ? "yes" : "no")
              << ", slim: " << (L.is_slim() ? "yes" : "no")
              << ", distributive: " << (L.is_distributive() ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_con(const std::string& file, bool as_json) {
  Lattice L = load_lattice_file(file).lattice;
  Poset jir = jir_con_poset(L);
  long long size = jir.downset_count();
  if (as_json) {
    json j;
    j["con_size"] = size;
    j["jir_poset"] = poset_json(jir);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "|Con L| = " << size << "\n";
  std::cout << "Jir(Con L): " << poset_text(jir) << "\n";
  // factorization over the connected components of Jir(Con L)
  std::vector<int> comp(jir.size(), -1);
  int ncomp = 0;
  for (Index s = 0; s < jir.size(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<Index> stack = {s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      Index v = stack.back();
      stack.pop_back();
      for (const auto& nb : {jir.up_covers(v), jir.down_covers(v)})
        for (Index w : nb)
          if (comp[w] == -1) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
    }
    ++ncomp;
  }
  std::cout << "factorization: |Con L| =";
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Index> elems;
    for (Index i = 0; i < jir.size(); ++i)
      if (comp[i] == c) elems.push_back(i);
    std::cout << (c ? " *" : "") << " " << jir.subposet(elems).downset_count();
  }
  std::cout << (ncomp ? "" : " 1") << "\n";
  return 0;
}

int cmd_jir(const std::string& file, bool as_json) {
  Lattice L = load_lattice_file(file).lattice;
  auto irr = L.irreducibles();
  Poset jp = jir_poset(L);
  if (as_json) {
    json j;
    j["jir"] = json::array();
    for (Index i : irr.jir) j["jir"].push_back(L.id(i));
    j["mir"] = json::array();
    for (Index i : irr.mir) j["mir"].push_back(L.id(i));
    j["star"] = json::object();
    for (auto [x, s] : irr.star) j["star"][L.id(x)] = L.id(s);
    j["jir_poset"] = poset_json(jp);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "Jir:";
  for (Index i : irr.jir) std::cout << " " << L.id(i);
  std::cout << "\nMir:";
  for (Index i : irr.mir) std::cout << " " << L.id(i) << "*=" << L.id(irr.star[i]);
  std::cout << "\nJir poset: " << poset_text(jp) << "\n";
  return 0;
}

int cmd_lamps(const std::string& file, bool as_json) {
  RectDiagram d = layout(load_lattice_file(file).lattice);
  LampSet ls = LampSet::compute(d);
  if (as_json) {
    json j = json::array();
    for (int i = 0; i < ls.count(); ++i) {
      const Lamp& lamp = ls.lamp(i);
      json e;
      e["kind"] = lamp_kind_name(lamp.kind);
      e["foot"] = d.id(lamp.foot);
      e["peak"] = d.id(lamp.peak);
      e["tubes"] = lamp.tubes.size();
      e["quadruple"] = {lamp.quad.p, lamp.quad.q, lamp.quad.r, lamp.quad.s};
      j.push_back(e);
    }
    json out;
    out["lamps"] = j;
    out["poset"] = poset_json(ls.lamp_poset());
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << ls.count() << " lamps (" << ls.boundary_count() << " boundary, "
            << ls.internal_count() << " internal)\n";
  for (int i = 0; i < ls.count(); ++i) {
    const Lamp& lamp = ls.lamp(i);
    std::cout << "  " << lamp_kind_name(lamp.kind) << " foot=" << d.id(lamp.foot)
              << " peak=" << d.id(lamp.peak) << " tubes=" << lamp.tubes.size() << " quad=("
              << lamp.quad.p << "," << lamp.quad.q << "," << lamp.quad.r << "," << lamp.quad.s
              << ")\n";
  }
  std::cout << "lamp poset: " << poset_text(ls.lamp_poset()) << "\n";
  return 0;
}

int cmd_check(const std::string& file, bool all, const std::string& pattern_file) {
  RectDiagram d = layout(load_lattice_file(file).lattice);
  std::vector<std::string> checks = {"c1", "lamp-iso", "rho-equality", "key-lemma", "shields"};
  if (all)
    checks.insert(checks.end(), {"thm3", "thm4", "3p3c", "patch", "roundtrip", "closure"});
  auto rows = run_checks(file, d, checks);
  if (all && patch_characterize(d.lattice(), &d).patch)
    for (const auto& v : corollary62_report(d.lattice()))
      rows.push_back({file, v.check, v.pass, v.witness});
  if (!pattern_file.empty()) {
    PatternPoset pat = load_pattern_file(pattern_file);
    auto embeds = cover_preserving_embeddings(pat, jir_con_poset(d.lattice()), false, 1);
    rows.push_back({file, "pattern:" + pat.name, embeds.empty(),
                    embeds.empty() ? "" : "embedding found"});
  }
  int bad = 0;
  for (const auto& r : rows) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.check
              << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
    if (!r.pass) ++bad;
  }
  std::cout << (bad == 0 ? "all checks passed" : std::to_string(bad) + " violations") << "\n";
  return bad == 0 ? 0 : 2;
}

int cmd_verify(int max_size, int jobs, const std::string& checks_csv) {
  std::vector<std::string> checks;
  if (checks_csv.empty()) {
    checks = kAllChecks;
  } else {
    std::istringstream is(checks_csv);
    std::string tok;
    while (std::getline(is, tok, ',')) checks.push_back(tok);
  }
  Corpus corpus = enumerate_corpus(max_size);
  std::cout << "corpus: " << corpus.items.size() << " lattices up to " << max_size
            << " elements\n";
  VerificationReport rep = verify_corpus(corpus, checks, jobs);
  std::cout << rep.text();
  return rep.violations() == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for slim planar semimodular lattices and their congruence lattices"};
  app.require_subcommand(1);

  std::string file, out_path, pattern_file, cell_top, checks_csv, variant = "L", lit;
  bool as_json = false, all_checks = false, no_labels = false;
  int rank = 1, max_size = 24, jobs = 1, gm = 1, gn = 1, st_rank = 1;
  std::vector<std::string> files;

  auto* c_validate = app.add_subcommand("validate", "validate a lattice file");
  c_validate->add_option("file", file)->required();
  c_validate->add_flag("--json", as_json);

  auto* c_con = app.add_subcommand("con", "congruence lattice summary");
  c_con->add_option("file", file)->required();
  c_con->add_flag("--json", as_json);

  auto* c_jir = app.add_subcommand("jir", "irreducible elements and their order");
  c_jir->add_option("file", file)->required();
  c_jir->add_flag("--json", as_json);

  auto* c_lamps = app.add_subcommand("lamps", "lamp table and lamp order");
  c_lamps->add_option("file", file)->required();
  c_lamps->add_flag("--json", as_json);

  auto* c_layout = app.add_subcommand("layout", "assign exact diagram coordinates");
  c_layout->add_option("file", file)->required();
  c_layout->add_option("-o,--output", out_path);

  auto* c_render = app.add_subcommand("render", "draw the diagram (svg or tikz)");
  c_render->add_option("file", file)->required();
  c_render->add_option("-o,--output", out_path)->required();
  c_render->add_option("--lit", lit, "shade the lit set of the lamp with this foot");
  c_render->add_flag("--no-labels", no_labels);

  auto* c_build = app.add_subcommand("build", "generative constructions");
  c_build->require_subcommand(1);
  auto* b_grid = c_build->add_subcommand("grid", "product of two chains");
  b_grid->add_option("m", gm)->required();
  b_grid->add_option("n", gn)->required();
  b_grid->add_option("-o,--output", out_path);
  auto* b_st = c_build->add_subcommand("st", "rank-t multifork of the 4-element grid");
  b_st->add_option("t", st_rank)->required();
  b_st->add_option("-o,--output", out_path);
  auto* b_fork = c_build->add_subcommand("fork", "insert a multifork into a cell");
  b_fork->add_option("file", file)->required();
  b_fork->add_option("--cell-top", cell_top)->required();
  b_fork->add_option("--rank", rank);
  b_fork->add_option("-o,--output", out_path);
  auto* b_t2 = c_build->add_subcommand("theorem2", "congruence-prescribed construction");
  b_t2->add_option("files", files)->required()->expected(-1);
  b_t2->add_option("--variant", variant)->check(CLI::IsMember({"H", "L"}));
  b_t2->add_option("-o,--output", out_path);

  auto* c_decomp = app.add_subcommand("decompose", "multifork insertion script");
  c_decomp->add_option("file", file)->required();
  c_decomp->add_flag("--json", as_json);

  auto* c_check = app.add_subcommand("check", "run verification suites on one lattice");
  c_check->add_option("file", file)->required();
  c_check->add_flag("--all", all_checks, "all suites, not only the lamp ones");
  c_check->add_flag("--lamps", "lamp suites only (default)");
  c_check->add_option("--pattern", pattern_file, "also test a user-supplied pattern poset");

  auto* c_enum = app.add_subcommand("enumerate", "enumerate the lattice corpus");
  c_enum->add_option("--max-size", max_size);
  c_enum->add_option("-o,--output", out_path);
  c_enum->add_flag("--json", as_json);

  auto* c_verify = app.add_subcommand("verify", "run every suite over the corpus");
  c_verify->add_option("--max-size", max_size);
  c_verify->add_option("--jobs", jobs);
  c_verify->add_option("--checks", checks_csv, "comma-separated subset of the suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_validate) return cmd_validate(file, as_json);
    if (*c_con) return cmd_con(file, as_json);
    if (*c_jir) return cmd_jir(file, as_json);
    if (*c_lamps) return cmd_lamps(file, as_json);
    if (*c_layout) {
      RectDiagram d = layout(load_lattice_file(file).lattice);
      emit(diagram_to_json(d), out_path);
      return 0;
    }
    if (*c_render) {
      RectDiagram d = layout(load_lattice_file(file).lattice);
      RenderOptions opts;
      opts.lit_lamp = lit;
      opts.labels = !no_labels;
      bool tikz = out_path.size() > 4 && out_path.substr(out_path.size() - 4) == ".tex";
      emit(tikz ? render_tikz(d, opts) : render_svg(d, opts), out_path);
      return 0;
    }
    if (*b_grid) {
      emit(diagram_to_json(grid(gm, gn)), out_path);
      return 0;
    }
    if (*b_st) {
      emit(diagram_to_json(s_lattice(st_rank)), out_path);
      return 0;
    }
    if (*b_fork) {
      RectDiagram d = layout(load_lattice_file(file).lattice);
      emit(diagram_to_json(multifork_insert(d, cell_top, rank)), out_path);
      return 0;
    }
    if (*b_t2) {
      std::vector<Lattice> parts;
      for (const auto& f : files) parts.push_back(load_lattice_file(f).lattice);
      if (variant == "H")
        emit(lattice_to_json(theorem2_H(parts)), out_path);
      else
        emit(diagram_to_json(theorem2_L(parts)), out_path);
      return 0;
    }
    if (*c_decomp) {
      RectDiagram d = layout(load_lattice_file(file).lattice);
      InsertionScript s = multifork_decompose(d);
      if (as_json) {
        emit(script_to_json(s), out_path);
      } else {
        std::cout << "grid(" << s.m << "," << s.n << ")";
        for (const auto& step : s.steps)
          std::cout << " + fork(top=" << step.top << ", rank=" << step.rank << ")";
        std::cout << "\n";
      }
      return 0;
    }
    if (*c_check) return cmd_check(file, all_checks, pattern_file);
    if (*c_enum) {
      Corpus corpus = enumerate_corpus(max_size);
      if (as_json || !out_path.empty()) {
        json j = json::array();
        for (const auto& item : corpus.items) {
          json e;
          e["key"] = item.key;
          e["lattice"] = json::parse(diagram_to_json(item.diagram));
          j.push_back(e);
        }
        emit(j.dump(2), out_path);
      } else {
        for (const auto& item : corpus.items)
          std::cout << item.diagram.size() << "  " << item.key << "\n";
        std::cout << corpus.items.size() << " lattices\n";
      }
      return 0;
    }
    if (*c_verify) return cmd_verify(max_size, jobs, checks_csv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
