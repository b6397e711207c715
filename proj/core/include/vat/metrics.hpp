#pragma once

#include <optional>
#include <vector>

#include "vat/fraction.hpp"
#include "vat/graph.hpp"
#include "vat/vertex_set.hpp"

namespace vat {

inline constexpr int kDefaultEnumerationLimit = 20;
inline constexpr int kMaxEnumerationLimit = 64;

struct EnumerationOptions {
    // Largest n accepted by the exhaustive engines (hard cap 64).
    int limit = kDefaultEnumerationLimit;
    // Worker threads splitting the subset range. Results do not depend on it.
    unsigned jobs = 1;
};

enum class MetricKind { vat, conductance, alpha_beta_vat, weighted_vat };

struct AlphaBeta {
    double alpha = 1.0;
    double beta = 0.0;
    friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

struct MetricResult {
    Fraction value;
    VertexSet witness;
    MetricKind metric = MetricKind::vat;
    std::optional<AlphaBeta> parameters;
};

// Minimum of a real-weighted objective. `exact` is filled whenever the
// computation ran on the integer path (unit weights and integral alpha, beta).
struct WeightedValue {
    double value = 0.0;
    std::optional<Fraction> exact;
    VertexSet witness;
};

// |S| / (|V - S - Cmax(V - S)| + 1)
Fraction set_vat(const Graph& g, const VertexSet& s);

// Cut(S, V - S) / Vol(S); requires Vol(S) <= Vol(V) / 2.
Fraction set_conductance(const Graph& g, const VertexSet& s);

// (alpha * sum_S c + beta) / (1 + sum_V v - sum_{S + Cmax(V - S)} v)
double set_weighted_vat(const Graph& g, const VertexSet& s, double alpha = 1.0, double beta = 0.0);

// Exhaustive minimisers. Witnesses are the minimiser with the smallest
// integer encoding (bit i = vertex i).
MetricResult vat_exact(const Graph& g, const EnumerationOptions& opts = {});
MetricResult conductance_exact(const Graph& g, const EnumerationOptions& opts = {});

WeightedValue alpha_beta_vat_exact(const Graph& g, double alpha, double beta,
                                   const EnumerationOptions& opts = {});
// Uses the graph's own cost/value weights.
WeightedValue weighted_vat_exact(const Graph& g, const EnumerationOptions& opts = {});
WeightedValue alpha_beta_weighted_vat_exact(const Graph& g, double alpha, double beta,
                                            const EnumerationOptions& opts = {});

// Every set attaining conductance_exact's value, in increasing encoding.
std::vector<VertexSet> conductance_minimizers(const Graph& g, const EnumerationOptions& opts = {});

// Split of V - S for a VAT witness S: the largest component T and the
// remaining components C_1..C_q.
struct VatDecomposition {
    VertexSet largest;
    std::vector<VertexSet> others;
};

VatDecomposition vat_witness_components(const Graph& g, const MetricResult& result);

// Precondition guard shared by every exact metric: connected, n >= 2.
void require_nontrivial(const Graph& g);

} // namespace vat
