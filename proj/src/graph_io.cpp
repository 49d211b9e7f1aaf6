#include "esos/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace esos {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
        if (!blank) out.push_back({number, line});
    }
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw Error("parse", "line " + std::to_string(line) + ": " + msg);
}

Graph parse_edge_list(const std::string& text, bool* tree_flag) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw Error("parse", "line 1: empty input");
    std::istringstream head(lines[0].text);
    long long n = -1, m = -1;
    std::string flag, extra;
    if (!(head >> n >> m)) parse_fail(lines[0].number, "expected header \"n m\"");
    if (head >> flag) {
        if (flag != "tree") parse_fail(lines[0].number, "unknown header flag \"" + flag + "\"");
        if (head >> extra) parse_fail(lines[0].number, "trailing tokens after header");
        if (tree_flag) *tree_flag = true;
    } else if (tree_flag) {
        *tree_flag = false;
    }
    if (n < 0 || n > 1000000) parse_fail(lines[0].number, "vertex count out of range");
    if (m < 0) parse_fail(lines[0].number, "negative edge count");
    if ((long long)lines.size() - 1 != m)
        parse_fail(lines[0].number, "header declares " + std::to_string(m) + " edges but " +
                                        std::to_string(lines.size() - 1) + " edge lines follow");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i].text);
        long long u, v;
        std::string rest;
        if (!(row >> u >> v)) parse_fail(lines[i].number, "expected \"u v\"");
        if (row >> rest) parse_fail(lines[i].number, "trailing tokens after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            parse_fail(lines[i].number, "vertex out of range [0," + std::to_string(n - 1) + "]");
        if (u == v) parse_fail(lines[i].number, "self-loop");
        edges.push_back({(int)u, (int)v});
    }
    try {
        return Graph::from_edges((int)n, std::move(edges));
    } catch (const Error& e) {
        throw Error("parse", std::string(e.what()));
    }
}

}  // namespace

Graph parse_graph(const std::string& text) { return parse_edge_list(text, nullptr); }

Tree parse_tree(const std::string& text) {
    bool flagged = false;
    Graph g = parse_edge_list(text, &flagged);
    return Tree::from_graph(std::move(g));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string serialize_tree(const Tree& t) {
    std::ostringstream out;
    out << t.order() << " " << t.edge_count() << " tree\n";
    for (auto [u, v] : t.graph().edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

Tree read_tree_file(const std::string& path) { return parse_tree(read_text_file(path)); }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot open for writing: " + path);
    out << content;
    if (!out) throw Error("io", "write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string content_digest(const std::string& content) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace esos
