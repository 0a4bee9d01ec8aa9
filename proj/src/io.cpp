#include "idcode/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "idcode/errors.hpp"

namespace idcode {

namespace {

using ordered_json = nlohmann::ordered_json;

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int parse_int_token(const std::string& token, int line_no, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string("malformed ") + what + " '" + token + "'", line_no);
  }
  if (pos != token.size())
    throw ParseError(std::string("malformed ") + what + " '" + token + "'", line_no);
  return value;
}

ordered_json parse_json_object(std::string_view text, const char* what,
                               std::initializer_list<const char*> allowed_keys) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    const bool known =
        std::any_of(allowed_keys.begin(), allowed_keys.end(),
                    [&key](const char* k) { return key == k; });
    if (!known) throw ParseError(std::string(what) + ": unknown key '" + key + "'");
  }
  return j;
}

int get_size_field(const ordered_json& j, const char* what, const char* key, int max) {
  if (!j.contains(key))
    throw ParseError(std::string(what) + ": missing key '" + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + ": '" + key + "' must be an integer");
  const long long size = v.get<long long>();
  if (size < 0 || size > max)
    throw ParseError(std::string(what) + ": '" + key + "' must be in [0, " +
                     std::to_string(max) + "]");
  return static_cast<int>(size);
}

std::pair<int, int> get_pair(const ordered_json& entry, const char* what) {
  if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
      !entry[1].is_number_integer())
    throw ParseError(std::string(what) + ": expected [int, int] pairs");
  return {entry[0].get<int>(), entry[1].get<int>()};
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  std::vector<Arc> arcs;
  std::vector<std::uint64_t> seen;

  while (std::getline(stream, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);

    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "n")
        throw ParseError("expected header 'n <count>'", line_no);
      n = parse_int_token(tokens[1], line_no, "vertex count");
      if (n < 0 || n > Digraph::kMaxVertices)
        throw ParseError("vertex count must be in [0, 64]", line_no);
      seen.assign(static_cast<std::size_t>(std::max(n, 1)), 0);
      have_header = true;
      continue;
    }

    if (tokens.size() != 2) throw ParseError("expected arc '<u> <v>'", line_no);
    const int u = parse_int_token(tokens[0], line_no, "arc tail");
    const int v = parse_int_token(tokens[1], line_no, "arc head");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("arc endpoint out of range", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    if ((seen[u] & (std::uint64_t{1} << v)) != 0)
      throw ParseError("duplicate arc", line_no);
    seen[u] |= std::uint64_t{1} << v;
    arcs.push_back({u, v});
  }

  if (!have_header) throw ParseError("missing header 'n <count>'");
  return Digraph(n, arcs);
}

std::string serialize_digraph(const Digraph& d) {
  std::string out = "n " + std::to_string(d.order()) + "\n";
  for (const Arc& a : d.arcs())
    out += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return out;
}

SetSystem parse_set_system(std::string_view json_text) {
  const ordered_json j =
      parse_json_object(json_text, "set system", {"ground_size", "sets"});
  SetSystem sys;
  sys.ground_size = get_size_field(j, "set system", "ground_size", 64);
  if (!j.contains("sets") || !j.at("sets").is_array())
    throw ParseError("set system: missing 'sets' array");
  for (const auto& entry : j.at("sets")) {
    if (!entry.is_array()) throw ParseError("set system: each set must be an array");
    VertexSet s(sys.ground_size);
    for (const auto& e : entry) {
      if (!e.is_number_integer())
        throw ParseError("set system: elements must be integers");
      const int x = e.get<int>();
      if (x < 0 || x >= sys.ground_size)
        throw ParseError("set system: element " + std::to_string(x) +
                         " outside ground set of size " + std::to_string(sys.ground_size));
      if (s.contains(x))
        throw ParseError("set system: duplicate element " + std::to_string(x) +
                         " within a set");
      s.insert(x);
    }
    sys.sets.push_back(s);
  }
  return sys;
}

std::string serialize_set_system(const SetSystem& sys) {
  ordered_json j;
  j["ground_size"] = sys.ground_size;
  ordered_json sets = ordered_json::array();
  for (const VertexSet& s : sys.sets) sets.push_back(s.to_vector());
  j["sets"] = std::move(sets);
  return j.dump();
}

BipartiteGraph parse_bipartite(std::string_view json_text) {
  const ordered_json j = parse_json_object(
      json_text, "bipartite graph", {"s_size", "t_size", "edges", "matching"});
  const int s_size = get_size_field(j, "bipartite graph", "s_size", BipartiteGraph::kMaxPart);
  const int t_size = get_size_field(j, "bipartite graph", "t_size", BipartiteGraph::kMaxPart);
  BipartiteGraph g(s_size, t_size);
  if (!j.contains("edges") || !j.at("edges").is_array())
    throw ParseError("bipartite graph: missing 'edges' array");
  for (const auto& entry : j.at("edges")) {
    const auto [s, t] = get_pair(entry, "bipartite graph edges");
    if (s < 0 || s >= s_size || t < 0 || t >= t_size)
      throw ParseError("bipartite graph: edge endpoint out of range");
    if (g.has_edge(s, t)) throw ParseError("bipartite graph: duplicate edge");
    g.add_edge(s, t);
  }
  if (j.contains("matching")) {
    if (!j.at("matching").is_array())
      throw ParseError("bipartite graph: 'matching' must be an array");
    std::vector<int> t_of_s(s_size, -1);
    for (const auto& entry : j.at("matching")) {
      const auto [s, t] = get_pair(entry, "bipartite graph matching");
      if (s < 0 || s >= s_size || t < 0 || t >= t_size)
        throw ParseError("bipartite graph: matching endpoint out of range");
      if (t_of_s[s] != -1)
        throw ParseError("bipartite graph: matching reuses an S-vertex");
      t_of_s[s] = t;
    }
    try {
      g.set_matching(std::move(t_of_s));
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bipartite graph: ") + e.what());
    }
  }
  return g;
}

std::string serialize_bipartite(const BipartiteGraph& g) {
  ordered_json j;
  j["s_size"] = g.s_size();
  j["t_size"] = g.t_size();
  ordered_json edges = ordered_json::array();
  for (const auto& [s, t] : g.edges()) edges.push_back({s, t});
  j["edges"] = std::move(edges);
  if (g.has_matching()) {
    ordered_json matching = ordered_json::array();
    const auto& m = g.matching();
    for (int s = 0; s < g.s_size(); ++s)
      if (m[s] != -1) matching.push_back({s, m[s]});
    j["matching"] = std::move(matching);
  }
  return j.dump();
}

std::string serialize_forest(const RootedForest& f) {
  std::string out;
  for (int v = 0; v < f.size(); ++v)
    if (auto p = f.parent(v))
      out += std::to_string(v) + " " + std::to_string(*p) + "\n";
  return out;
}

}  // namespace idcode
