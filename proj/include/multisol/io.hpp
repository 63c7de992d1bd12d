#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "multisol/distribution.hpp"
#include "multisol/graph.hpp"

namespace multisol {

/// Raised for unreadable/unwritable files (CLI exit code 4).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact weight text: "2/3", or "1" when the denominator is one.
std::string format_weight(std::int64_t units, std::int64_t scale);

/// Parses "p/q", an integer, or a finite decimal such as "0.25" into a
/// reduced (numerator, denominator) pair.
std::pair<std::int64_t, std::int64_t> parse_weight(const std::string& text);

/// {"n", "directed", "source", "edges": [[u, v, "w"], ...]}. Undirected edges
/// are listed once with u < v.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json distribution_to_json(const ParentDistribution& d);
ParentDistribution distribution_from_json(const nlohmann::json& j);

nlohmann::json tree_to_json(const PredecessorArray& pi);
PredecessorArray tree_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
/// Pretty-printed (2-space indent) with a trailing newline.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

std::vector<Graph> read_graphs(const std::filesystem::path& path);
std::vector<ParentDistribution> read_distributions(const std::filesystem::path& path);

}  // namespace multisol
