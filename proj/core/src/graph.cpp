#include "vat/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vat/error.hpp"

namespace vat {
namespace {

std::vector<double> checked_weights(const std::vector<double>& w, int n, const char* what) {
    if (static_cast<int>(w.size()) != n)
        throw Error(ErrorCode::BadParameter,
                    std::string(what) + " list has " + std::to_string(w.size()) + " entries, expected " + std::to_string(n));
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!(w[i] > 0.0) || !std::isfinite(w[i]))
            throw Error(ErrorCode::NonPositiveWeight, std::string(what) + " of vertex " + std::to_string(i) + " must be positive");
    return w;
}

} // namespace

Graph Graph::build(int n, std::span<const Edge> edges, const VertexWeights& weights) {
    if (n < 1)
        throw Error(ErrorCode::BadParameter, "graph needs at least one vertex");

    Graph g;
    g.n_ = n;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::BadVertexId,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (std::size_t u = 0; u < g.adjacency_.size(); ++u) {
        auto& adj = g.adjacency_[u];
        std::sort(adj.begin(), adj.end());
        auto dup = std::adjacent_find(adj.begin(), adj.end());
        if (dup != adj.end())
            throw Error(ErrorCode::DuplicateEdge,
                        "edge (" + std::to_string(u) + "," + std::to_string(*dup) + ") listed twice");
    }
    g.m_ = static_cast<std::int64_t>(edges.size());

    if (n <= 64) {
        g.neighbor_masks_.assign(static_cast<std::size_t>(n), 0);
        for (int u = 0; u < n; ++u)
            for (int v : g.adjacency_[static_cast<std::size_t>(u)])
                g.neighbor_masks_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    }

    const auto& costs = weights.costs ? weights.costs : weights.values;
    const auto& values = weights.values ? weights.values : weights.costs;
    g.costs_ = costs ? checked_weights(*costs, n, "cost") : std::vector<double>(static_cast<std::size_t>(n), 1.0);
    g.values_ = values ? checked_weights(*values, n, "value") : std::vector<double>(static_cast<std::size_t>(n), 1.0);
    g.unit_weights_ = std::all_of(g.costs_.begin(), g.costs_.end(), [](double c) { return c == 1.0; }) &&
                      std::all_of(g.values_.begin(), g.values_.end(), [](double v) { return v == 1.0; });
    return g;
}

bool Graph::has_edge(int u, int v) const {
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::with_weights(const VertexWeights& weights) const {
    auto e = edges();
    return build(n_, e, weights);
}

bool is_connected(const Graph& g) {
    return components(g, VertexSet(g.n())).size() == 1;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    const int n = g.n();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : removed.members())
        seen[static_cast<std::size_t>(v)] = 1;

    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<std::size_t>(start)])
            continue;
        VertexSet comp(n);
        seen[static_cast<std::size_t>(start)] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.insert(u);
            for (int w : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    // Discovery order is by smallest member, so a stable sort on size keeps
    // the id tie-break.
    std::stable_sort(out.begin(), out.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.count() > b.count(); });
    return out;
}

VertexSet largest_component(const Graph& g, const VertexSet& removed) {
    auto comps = components(g, removed);
    if (comps.empty())
        throw Error(ErrorCode::EmptyRemainder, "every vertex removed");
    return comps.front();
}

std::int64_t volume(const Graph& g, const VertexSet& s) {
    std::int64_t vol = 0;
    for (int v : s.members())
        vol += g.degree(v);
    return vol;
}

std::int64_t cut_size(const Graph& g, const VertexSet& s) {
    std::int64_t cut = 0;
    for (int u : s.members())
        for (int v : g.neighbors(u))
            if (!s.contains(v))
                ++cut;
    return cut;
}

std::optional<int> regularity(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != d)
            return std::nullopt;
    return d;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
    if (s.empty())
        return false;
    return components(g, s.complement()).size() == 1;
}

Graph restrict_to_largest_component(const Graph& g) {
    auto keep = largest_component(g, VertexSet(g.n()));
    if (keep.count() == g.n())
        return g;

    auto members = keep.members();
    std::vector<int> relabel(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        relabel[static_cast<std::size_t>(members[i])] = static_cast<int>(i);

    std::vector<Edge> edges;
    std::vector<double> costs, values;
    for (int u : members) {
        costs.push_back(g.cost(u));
        values.push_back(g.value(u));
        for (int v : g.neighbors(u))
            if (u < v)
                edges.emplace_back(relabel[static_cast<std::size_t>(u)], relabel[static_cast<std::size_t>(v)]);
    }
    return Graph::build(static_cast<int>(members.size()), edges, {std::move(costs), std::move(values)});
}

} // namespace vat
