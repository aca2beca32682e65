#include "spslab/json_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spslab {

using nlohmann::json;

namespace {
json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), ErrorKind::InvalidInput, "malformed JSON");
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
} // namespace

LoadedLattice load_lattice_json(const std::string& text) {
  json j = parse(text);
  require(j.is_object() && j.contains("elements") && j.contains("covers"),
          ErrorKind::InvalidInput, "lattice JSON needs 'elements' and 'covers'");
  std::vector<std::string> ids;
  for (const auto& e : j["elements"]) {
    require(e.is_string(), ErrorKind::InvalidInput, "elements must be strings");
    ids.push_back(e.get<std::string>());
  }
  CoverList covers;
  for (const auto& c : j["covers"]) {
    require(c.is_array() && c.size() == 2 && c[0].is_string() && c[1].is_string(),
            ErrorKind::InvalidInput, "covers must be [lo,hi] string pairs");
    covers.push_back({c[0].get<std::string>(), c[1].get<std::string>()});
  }
  LoadedLattice out{Lattice::validate(Poset(ids, covers)), {}};
  if (j.contains("coords")) {
    require(j["coords"].is_object(), ErrorKind::InvalidInput, "coords must be an object");
    for (auto it = j["coords"].begin(); it != j["coords"].end(); ++it) {
      const auto& v = it.value();
      require(v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
                  v[1].is_number_integer(),
              ErrorKind::InvalidInput, "coords entries must be integer pairs");
      require(out.lattice.poset().has(it.key()), ErrorKind::InvalidInput,
              "coords for unknown element '" + it.key() + "'");
      out.coords[it.key()] = Point{v[0].get<long long>(), v[1].get<long long>()};
    }
    require(out.coords.size() == static_cast<size_t>(out.lattice.size()),
            ErrorKind::InvalidInput, "coords must cover every element");
  }
  return out;
}

LoadedLattice load_lattice_file(const std::string& path) {
  return load_lattice_json(slurp(path));
}

namespace {
json lattice_json(const Lattice& L, const RectDiagram* d) {
  json j;
  j["elements"] = json::array();
  for (Index i = 0; i < L.size(); ++i) j["elements"].push_back(L.id(i));
  j["covers"] = json::array();
  for (auto [a, b] : L.poset().cover_pairs()) j["covers"].push_back({L.id(a), L.id(b)});
  if (d) {
    json coords = json::object();
    for (Index i = 0; i < L.size(); ++i)
      coords[L.id(i)] = {d->pos(i).x, d->pos(i).y};
    j["coords"] = coords;
  }
  return j;
}
} // namespace

std::string lattice_to_json(const Lattice& L) { return lattice_json(L, nullptr).dump(2); }

std::string diagram_to_json(const RectDiagram& d) {
  return lattice_json(d.lattice(), &d).dump(2);
}

PatternPoset load_pattern_json(const std::string& text) {
  json j = parse(text);
  require(j.is_object() && j.contains("elements") && j.contains("covers"),
          ErrorKind::InvalidInput, "pattern JSON needs 'elements' and 'covers'");
  std::vector<std::string> ids;
  for (const auto& e : j["elements"]) ids.push_back(e.get<std::string>());
  CoverList covers;
  for (const auto& c : j["covers"])
    covers.push_back({c[0].get<std::string>(), c[1].get<std::string>()});
  std::vector<std::string> tags;
  if (j.contains("max_tags"))
    for (const auto& t : j["max_tags"]) tags.push_back(t.get<std::string>());
  std::string name = j.value("name", "pattern");
  return PatternPoset(name, Poset(ids, covers), tags);
}

PatternPoset load_pattern_file(const std::string& path) {
  return load_pattern_json(slurp(path));
}

std::string script_to_json(const InsertionScript& s) {
  json j;
  j["grid"] = {s.m, s.n};
  j["base"] = parse(lattice_to_json(s.base));
  j["corners"] = {s.cl, s.cr};
  j["steps"] = json::array();
  for (const auto& step : s.steps) {
    json js;
    js["top"] = step.top;
    js["rank"] = step.rank;
    j["steps"].push_back(js);
  }
  return j.dump(2);
}

std::string fixture_dir() {
  if (const char* env = std::getenv("SPSLAB_FIXTURES")) return env;
  return SPSLAB_FIXTURE_DIR;
}

} // namespace spslab
