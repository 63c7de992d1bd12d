#include "multisol/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace multisol {

using nlohmann::json;

std::string format_weight(std::int64_t units, std::int64_t scale) {
  const std::int64_t d = std::gcd(units, scale);
  const std::int64_t num = units / d, den = scale / d;
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::pair<std::int64_t, std::int64_t> parse_weight(const std::string& text) {
  auto fail = [&] { return std::invalid_argument("malformed weight '" + text + "'"); };
  auto parse_int = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw fail();
    if (s.size() > 15) throw fail();
    return static_cast<std::int64_t>(std::stoll(s));
  };
  std::int64_t num = 0, den = 1;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = parse_int(text.substr(0, slash));
    den = parse_int(text.substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty()) throw fail();
    den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = (whole.empty() ? 0 : parse_int(whole)) * den + parse_int(frac);
  } else {
    num = parse_int(text);
  }
  if (den == 0) throw fail();
  const std::int64_t g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v : g.out_neighbors(u)) {
      if (!g.directed() && v < u) continue;
      edges.push_back(json::array({u, v, format_weight(g.weight_units(u, v), g.scale())}));
    }
  }
  json j;
  j["n"] = g.n();
  j["directed"] = g.directed();
  j["source"] = g.source() ? json(*g.source()) : json(nullptr);
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const bool directed = j.at("directed").get<bool>();
    struct Entry {
      Vertex u, v;
      std::int64_t num, den;
    };
    std::vector<Entry> entries;
    std::int64_t scale = 1;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw std::invalid_argument("edge must be [u, v, w]");
      const std::string text = e[2].is_string() ? e[2].get<std::string>() : e[2].dump();
      const auto [num, den] = parse_weight(text);
      if (num <= 0) throw std::invalid_argument("edge weights must be positive");
      entries.push_back({e[0].get<Vertex>(), e[1].get<Vertex>(), num, den});
      scale = std::lcm(scale, den);
    }
    Graph g(n, directed, scale);
    for (const auto& e : entries) {
      const std::int64_t units = e.num * (scale / e.den);
      if (!directed && g.has_edge(e.u, e.v) && g.weight_units(e.u, e.v) != units) {
        throw std::invalid_argument("conflicting weights for an undirected edge");
      }
      g.add_edge(e.u, e.v, units);
    }
    if (j.contains("source") && !j.at("source").is_null()) g.set_source(j.at("source").get<Vertex>());
    g.validate();
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

json distribution_to_json(const ParentDistribution& d) {
  json rows = json::array();
  for (Vertex i = 0; i < d.n(); ++i) {
    const auto row = d.row(i);
    rows.push_back(json(std::vector<double>(row.begin(), row.end())));
  }
  return json{{"n", d.n()}, {"probs", std::move(rows)}};
}

ParentDistribution distribution_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto& rows = j.at("probs");
    if (rows.size() != n) throw std::invalid_argument("distribution must have n rows");
    std::vector<double> probs;
    probs.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) throw std::invalid_argument("distribution rows must have n entries");
      for (const auto& x : row) probs.push_back(x.get<double>());
    }
    ParentDistribution d(n, std::move(probs));
    d.validate();
    return d;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed distribution JSON: ") + e.what());
  }
}

json tree_to_json(const PredecessorArray& pi) { return json(pi.parents()); }

PredecessorArray tree_from_json(const json& j) {
  try {
    return PredecessorArray(j.get<std::vector<Vertex>>());
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed predecessor array: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

std::vector<Graph> read_graphs(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  if (!j.is_array()) throw std::invalid_argument(path.string() + ": expected an array of graphs");
  std::vector<Graph> graphs;
  for (const auto& item : j) graphs.push_back(graph_from_json(item));
  return graphs;
}

std::vector<ParentDistribution> read_distributions(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  if (!j.is_array()) {
    throw std::invalid_argument(path.string() + ": expected an array of distributions");
  }
  std::vector<ParentDistribution> dists;
  for (const auto& item : j) dists.push_back(distribution_from_json(item));
  return dists;
}

}  // namespace multisol
