#include "vat/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vat/error.hpp"

namespace vat {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok)
        out.push_back(tok);
    return out;
}

int parse_id(const std::string& tok, int line_no) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad vertex id '" + tok + "'");
    return v;
}

double parse_weight(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        double w = std::stod(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return w;
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad weight '" + tok + "'");
    }
}

// "# n=12" (spaces optional)
std::optional<int> vertex_hint(const std::string& line) {
    auto pos = line.find_first_not_of(" \t", 1);
    if (pos == std::string::npos || line.compare(pos, 2, "n=") != 0)
        return std::nullopt;
    pos += 2;
    auto end = line.find_first_of(" \t", pos);
    std::string num = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    int n = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc{} || ptr != num.data() + num.size() || n < 1)
        return std::nullopt;
    return n;
}

std::string format_weight(double w) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::optional<int> hint;
    std::vector<Edge> edges;
    std::vector<std::tuple<int, double, double>> weights;
    int max_id = -1;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        if (line[first] == '#') {
            if (!hint && edges.empty() && weights.empty())
                hint = vertex_hint(line.substr(first));
            continue;
        }
        auto tok = split_ws(line);
        if (tok[0] == "w") {
            if (tok.size() != 4)
                throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'w u cost value'");
            if (!edges.empty())
                throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": weight line after edges");
            int u = parse_id(tok[1], line_no);
            weights.emplace_back(u, parse_weight(tok[2], line_no), parse_weight(tok[3], line_no));
            max_id = std::max(max_id, u);
            continue;
        }
        if (tok.size() != 2)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
        int u = parse_id(tok[0], line_no);
        int v = parse_id(tok[1], line_no);
        edges.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }

    int n = hint.value_or(max_id + 1);
    if (n < 1)
        throw Error(ErrorCode::ParseError, "edge list describes no vertices");
    if (max_id >= n)
        throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(max_id) + " exceeds declared n=" + std::to_string(n));

    VertexWeights vw;
    if (!weights.empty()) {
        std::vector<double> costs(static_cast<std::size_t>(n), 1.0);
        std::vector<double> values(static_cast<std::size_t>(n), 1.0);
        for (auto [u, c, v] : weights) {
            costs[static_cast<std::size_t>(u)] = c;
            values[static_cast<std::size_t>(u)] = v;
        }
        vw.costs = std::move(costs);
        vw.values = std::move(values);
    }
    return Graph::build(n, edges, vw);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open " + path.string());
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# n=" << g.n() << " m=" << g.m() << '\n';
    if (!g.unit_weights())
        for (int v = 0; v < g.n(); ++v)
            out << "w " << v << ' ' << format_weight(g.cost(v)) << ' ' << format_weight(g.value(v)) << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    write_edge_list(out, g);
    if (!out)
        throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

} // namespace vat
