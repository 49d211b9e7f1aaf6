#pragma once

#include <string>

#include "esos/graph.hpp"
#include "esos/tree.hpp"

namespace esos {

/// Edge-list text format. First line "n m" (trees may carry a trailing
/// "tree" flag), then exactly m lines "u v". Parse errors carry 1-based
/// line numbers. Serialization is canonical: edges sorted lexicographically
/// with u < v, so parse/serialize round-trips byte-identically.
Graph parse_graph(const std::string& text);
Tree parse_tree(const std::string& text);
std::string serialize_graph(const Graph& g);
std::string serialize_tree(const Tree& t);

Graph read_graph_file(const std::string& path);
Tree read_tree_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// FNV-1a 64-bit digest as fixed-width hex; used for certificate input digests.
std::string content_digest(const std::string& content);

}  // namespace esos
