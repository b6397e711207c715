#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vat/graph.hpp"

namespace vat {

enum class Family {
    cycle,
    complete,
    star,
    path,
    hypercube,
    complete_bipartite,
    circulant,
    random_regular,
    petersen,
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

// A named graph family plus its parameters, e.g. "cycle:6",
// "circulant:8,1+4" or "random_regular:20,3,seed=42".
struct FamilySpec {
    Family family = Family::cycle;
    std::vector<int> parameters;   // circulant: n followed by the offsets
    std::optional<std::uint64_t> seed;

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;

    Graph build() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph path(int n);
Graph hypercube(int k);
Graph complete_bipartite(int d);
Graph circulant(int n, const std::vector<int>& offsets);
Graph petersen();

inline constexpr int kRandomRegularMaxAttempts = 10'000;

// Pairing-model sampler: n*d stubs are Fisher-Yates shuffled with a
// SplitMix64 stream seeded by `seed` and paired consecutively. A pairing with
// a loop or a repeated edge is discarded and retried with seed + 1 (wrapping).
// The result is not necessarily connected.
Graph random_regular(int n, int d, std::uint64_t seed);

// Deterministic SplitMix64; exposed so the sampler's stream is testable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

private:
    std::uint64_t state_;
};

// Calls visit(graph, edge_mask) for every labelled connected d-regular graph
// on n <= 8 vertices in increasing order of edge_mask, where bit k of the
// mask is the k-th pair of K_n in (0,1),(0,2),...,(n-2,n-1) order. Stops
// early when visit returns false.
void enumerate_small_regular(int n, int d,
                             const std::function<bool(const Graph&, std::uint64_t)>& visit);

std::vector<Graph> small_regular_graphs(int n, int d);

} // namespace vat
