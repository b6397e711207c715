#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vat/vertex_set.hpp"

namespace vat {

using Edge = std::pair<int, int>;

// Per-vertex attack costs and disconnection values. Either list may be
// omitted; a missing list mirrors the other one, and with both missing every
// vertex weighs 1.
struct VertexWeights {
    std::optional<std::vector<double>> costs;
    std::optional<std::vector<double>> values;
};

// Immutable simple undirected graph on vertex ids 0..n-1.
class Graph {
public:
    static Graph build(int n, std::span<const Edge> edges, const VertexWeights& weights = {});

    int n() const noexcept { return n_; }
    std::int64_t m() const noexcept { return m_; }

    std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    bool has_edge(int u, int v) const;

    // Neighbourhood bitmask; only populated when n <= 64.
    std::uint64_t neighbor_mask(int v) const { return neighbor_masks_[static_cast<std::size_t>(v)]; }
    bool has_masks() const noexcept { return !neighbor_masks_.empty(); }

    double cost(int v) const { return costs_[static_cast<std::size_t>(v)]; }
    double value(int v) const { return values_[static_cast<std::size_t>(v)]; }
    const std::vector<double>& costs() const noexcept { return costs_; }
    const std::vector<double>& values() const noexcept { return values_; }
    // True when every cost and value equals 1.
    bool unit_weights() const noexcept { return unit_weights_; }

    // Edge list with u < v, sorted.
    std::vector<Edge> edges() const;

    // Copy with replaced vertex weights.
    Graph with_weights(const VertexWeights& weights) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adjacency_ == b.adjacency_ && a.costs_ == b.costs_ && a.values_ == b.values_;
    }

private:
    Graph() = default;

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::uint64_t> neighbor_masks_;
    std::vector<double> costs_;
    std::vector<double> values_;
    bool unit_weights_ = true;
};

bool is_connected(const Graph& g);

// Connected components of the subgraph induced by V - removed, largest
// first; equal sizes are ordered by smallest member id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);

// Largest component of V - removed. Throws EmptyRemainder when removed = V.
VertexSet largest_component(const Graph& g, const VertexSet& removed);

std::int64_t volume(const Graph& g, const VertexSet& s);
std::int64_t cut_size(const Graph& g, const VertexSet& s);

std::optional<int> regularity(const Graph& g);

// Whether s induces a connected subgraph (false for the empty set).
bool induces_connected(const Graph& g, const VertexSet& s);

// Induced subgraph on the largest component, relabelled to 0..k-1 in
// increasing id order. Connected graphs are returned unchanged.
Graph restrict_to_largest_component(const Graph& g);

} // namespace vat
