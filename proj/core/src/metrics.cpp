#include "vat/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "vat/error.hpp"
#include "wide_int.hpp"

namespace vat {
namespace {

using Mask = std::uint64_t;

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void require_width(const Graph& g, const VertexSet& s) {
    if (s.size() != g.n())
        throw Error(ErrorCode::BadParameter, "vertex set width does not match graph");
}

void require_enumerable(const Graph& g, const EnumerationOptions& opts) {
    if (opts.limit < 1 || opts.limit > kMaxEnumerationLimit)
        throw Error(ErrorCode::BadParameter, "enumeration limit must be in [1, 64]");
    if (g.n() > opts.limit)
        throw Error(ErrorCode::TooLarge, "n=" + std::to_string(g.n()) + " exceeds enumeration limit " +
                                             std::to_string(opts.limit));
}

// Flood fill inside `rest`; returns the component containing `seed`.
Mask component_of(const Graph& g, Mask rest, Mask seed) {
    Mask comp = seed, frontier = seed;
    while (frontier != 0) {
        Mask reach = 0;
        for (Mask f = frontier; f != 0; f &= f - 1)
            reach |= g.neighbor_mask(std::countr_zero(f));
        frontier = reach & rest & ~comp;
        comp |= frontier;
    }
    return comp;
}

// Largest component of the vertices in `rest`; ties go to the component
// with the smaller minimum id (the first one found).
Mask largest_component_mask(const Graph& g, Mask rest) {
    Mask best = 0;
    int best_size = 0;
    while (rest != 0 && std::popcount(rest) > best_size) {
        Mask comp = component_of(g, rest, rest & (~rest + 1));
        int size = std::popcount(comp);
        if (size > best_size) {
            best = comp;
            best_size = size;
        }
        rest &= ~comp;
    }
    return best;
}

int largest_component_size(const Graph& g, Mask rest) { return std::popcount(largest_component_mask(g, rest)); }

// Splits [begin, end) into contiguous chunks, runs `work` on each (possibly
// in parallel) and returns the per-chunk results in chunk order.
template <class Result, class Work>
std::vector<Result> run_chunks(Mask begin, Mask end, unsigned jobs, Work work) {
    const Mask span = end - begin;
    Mask chunks = std::max<Mask>(1, std::min<Mask>(jobs == 0 ? 1 : jobs, span == 0 ? 1 : span));
    std::vector<Result> results(static_cast<std::size_t>(chunks));
    auto bounds = [&](Mask c) { return begin + (span / chunks) * c + std::min<Mask>(c, span % chunks); };
    if (chunks == 1) {
        results[0] = work(begin, end);
        return results;
    }
    std::vector<std::thread> threads;
    for (Mask c = 0; c < chunks; ++c)
        threads.emplace_back([&, c] { results[static_cast<std::size_t>(c)] = work(bounds(c), bounds(c + 1)); });
    for (auto& t : threads)
        t.join();
    return results;
}

struct RatioBest {
    std::int64_t num = 1;
    std::int64_t den = 0;  // den == 0 marks "nothing found"
    Mask mask = 0;

    bool found() const { return den != 0; }
    // num/den < best, or equal with a smaller encoding.
    bool improves(std::int64_t n, std::int64_t d, Mask m) const {
        if (!found())
            return true;
        detail::int128 lhs = static_cast<detail::int128>(n) * den;
        detail::int128 rhs = static_cast<detail::int128>(num) * d;
        return lhs < rhs || (lhs == rhs && m < mask);
    }
};

RatioBest reduce(const std::vector<RatioBest>& parts) {
    RatioBest best;
    for (const auto& p : parts)
        if (p.found() && best.improves(p.num, p.den, p.mask))
            best = p;
    return best;
}

// min over nonempty proper S of (alpha |S| + beta) / (n - |S| - |Cmax| + 1)
// for integral alpha >= 1, beta >= 0. Since the denominator never exceeds n,
// a set with (alpha |S| + beta) / n >= current best cannot improve on it.
RatioBest integer_vat_search(const Graph& g, std::int64_t alpha, std::int64_t beta, unsigned jobs) {
    const int n = g.n();
    const Mask all = full_mask(n);
    auto parts = run_chunks<RatioBest>(1, all, jobs, [&](Mask lo, Mask hi) {
        RatioBest best;
        for (Mask s = lo; s < hi; ++s) {
            const int size = std::popcount(s);
            const std::int64_t num = alpha * size + beta;
            if (best.found() && static_cast<detail::int128>(num) * best.den >= static_cast<detail::int128>(best.num) * n)
                continue;
            const std::int64_t den = n - size - largest_component_size(g, all & ~s) + 1;
            if (best.improves(num, den, s))
                best = {num, den, s};
        }
        return best;
    });
    return reduce(parts);
}

struct RealBest {
    double value = std::numeric_limits<double>::infinity();
    Mask mask = 0;
    bool found = false;
};

// Real-valued weighted objective; summation runs in vertex order so the
// result is independent of the chunking.
RealBest real_vat_search(const Graph& g, double alpha, double beta, bool use_weights, unsigned jobs) {
    const int n = g.n();
    const Mask all = full_mask(n);
    auto cost = [&](int v) { return use_weights ? g.cost(v) : 1.0; };
    auto value = [&](int v) { return use_weights ? g.value(v) : 1.0; };
    double total_value = 0.0;
    for (int v = 0; v < n; ++v)
        total_value += value(v);

    auto parts = run_chunks<RealBest>(1, all, jobs, [&](Mask lo, Mask hi) {
        RealBest best;
        for (Mask s = lo; s < hi; ++s) {
            Mask gone = s | largest_component_mask(g, all & ~s);
            double c = 0.0, removed = 0.0;
            for (int v = 0; v < n; ++v) {
                if ((s >> v) & 1U)
                    c += cost(v);
                if ((gone >> v) & 1U)
                    removed += value(v);
            }
            double x = (alpha * c + beta) / (1.0 + total_value - removed);
            if (!best.found || x < best.value) {
                best = {x, s, true};
            }
        }
        return best;
    });
    RealBest best;
    for (const auto& p : parts)
        if (p.found && (!best.found || p.value < best.value || (p.value == best.value && p.mask < best.mask)))
            best = p;
    return best;
}

std::optional<std::int64_t> as_small_integer(double x) {
    if (!std::isfinite(x) || x != std::floor(x) || std::fabs(x) > 1e9)
        return std::nullopt;
    return static_cast<std::int64_t>(x);
}

void require_alpha_beta(double alpha, double beta) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw Error(ErrorCode::BadParameter, "alpha must be positive");
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw Error(ErrorCode::BadParameter, "beta must be nonnegative");
}

WeightedValue minimize_weighted(const Graph& g, double alpha, double beta, bool use_weights,
                                const EnumerationOptions& opts) {
    require_alpha_beta(alpha, beta);
    require_nontrivial(g);
    require_enumerable(g, opts);

    auto a = as_small_integer(alpha);
    auto b = as_small_integer(beta);
    if (a && b && (!use_weights || g.unit_weights())) {
        auto best = integer_vat_search(g, *a, *b, opts.jobs);
        Fraction exact(best.num, best.den);
        return {exact.to_double(), exact, VertexSet::from_mask(g.n(), best.mask)};
    }
    auto best = real_vat_search(g, alpha, beta, use_weights, opts.jobs);
    return {best.value, std::nullopt, VertexSet::from_mask(g.n(), best.mask)};
}

std::int64_t cut_of(const Graph& g, Mask s) {
    std::int64_t cut = 0;
    for (Mask f = s; f != 0; f &= f - 1)
        cut += std::popcount(g.neighbor_mask(std::countr_zero(f)) & ~s);
    return cut;
}

std::int64_t volume_of(const Graph& g, Mask s) {
    std::int64_t vol = 0;
    for (Mask f = s; f != 0; f &= f - 1)
        vol += g.degree(std::countr_zero(f));
    return vol;
}

} // namespace

void require_nontrivial(const Graph& g) {
    if (g.n() < 2)
        throw Error(ErrorCode::TrivialGraph, "metrics need at least two vertices");
    if (!is_connected(g))
        throw Error(ErrorCode::DisconnectedInput, "graph is disconnected; restrict to the largest component first");
}

Fraction set_vat(const Graph& g, const VertexSet& s) {
    require_nontrivial(g);
    require_width(g, s);
    if (s.empty())
        throw Error(ErrorCode::EmptySet, "set-VAT of the empty set");
    if (s.is_full())
        throw Error(ErrorCode::FullSet, "set-VAT of the full vertex set");
    const int cmax = largest_component(g, s).count();
    return Fraction(s.count(), g.n() - s.count() - cmax + 1);
}

Fraction set_conductance(const Graph& g, const VertexSet& s) {
    require_nontrivial(g);
    require_width(g, s);
    if (s.empty())
        throw Error(ErrorCode::EmptySet, "set-conductance of the empty set");
    const std::int64_t vol = volume(g, s);
    if (vol > g.m())
        throw Error(ErrorCode::VolumeTooLarge, "Vol(S) exceeds Vol(V)/2");
    return Fraction(cut_size(g, s), vol);
}

double set_weighted_vat(const Graph& g, const VertexSet& s, double alpha, double beta) {
    require_alpha_beta(alpha, beta);
    require_nontrivial(g);
    require_width(g, s);
    if (s.empty())
        throw Error(ErrorCode::EmptySet, "weighted VAT of the empty set");
    if (s.is_full())
        throw Error(ErrorCode::FullSet, "weighted VAT of the full vertex set");
    VertexSet gone = largest_component(g, s);
    gone |= s;
    double c = 0.0, total = 0.0, removed = 0.0;
    for (int v = 0; v < g.n(); ++v) {
        total += g.value(v);
        if (s.contains(v))
            c += g.cost(v);
        if (gone.contains(v))
            removed += g.value(v);
    }
    return (alpha * c + beta) / (1.0 + total - removed);
}

MetricResult vat_exact(const Graph& g, const EnumerationOptions& opts) {
    require_nontrivial(g);
    require_enumerable(g, opts);
    auto best = integer_vat_search(g, 1, 0, opts.jobs);
    return {Fraction(best.num, best.den), VertexSet::from_mask(g.n(), best.mask), MetricKind::vat, std::nullopt};
}

MetricResult conductance_exact(const Graph& g, const EnumerationOptions& opts) {
    require_nontrivial(g);
    require_enumerable(g, opts);
    const int n = g.n();
    const std::int64_t half = g.m();  // Vol(V) / 2
    // Gray-code walk over [lo, hi): consecutive codes differ in one vertex,
    // so the cut and volume are maintained incrementally.
    const Mask end = n == 64 ? ~Mask{0} : (Mask{1} << n);
    auto parts = run_chunks<RatioBest>(1, end, opts.jobs, [&](Mask lo, Mask hi) {
        RatioBest best;
        Mask s = lo ^ (lo >> 1);
        std::int64_t cut = cut_of(g, s), vol = volume_of(g, s);
        for (Mask i = lo; i < hi; ++i) {
            if (vol <= half && best.improves(cut, vol, s))
                best = {cut, vol, s};
            if (i + 1 == hi)
                break;
            const int v = std::countr_zero(i + 1);
            const Mask bit = Mask{1} << v;
            const int deg = g.degree(v);
            if (s & bit) {
                s &= ~bit;
                cut -= deg - 2 * std::popcount(g.neighbor_mask(v) & s);
                vol -= deg;
            } else {
                cut += deg - 2 * std::popcount(g.neighbor_mask(v) & s);
                s |= bit;
                vol += deg;
            }
        }
        return best;
    });
    auto best = reduce(parts);
    return {Fraction(best.num, best.den), VertexSet::from_mask(n, best.mask), MetricKind::conductance, std::nullopt};
}

WeightedValue alpha_beta_vat_exact(const Graph& g, double alpha, double beta, const EnumerationOptions& opts) {
    return minimize_weighted(g, alpha, beta, false, opts);
}

WeightedValue weighted_vat_exact(const Graph& g, const EnumerationOptions& opts) {
    return minimize_weighted(g, 1.0, 0.0, true, opts);
}

WeightedValue alpha_beta_weighted_vat_exact(const Graph& g, double alpha, double beta,
                                            const EnumerationOptions& opts) {
    return minimize_weighted(g, alpha, beta, true, opts);
}

std::vector<VertexSet> conductance_minimizers(const Graph& g, const EnumerationOptions& opts) {
    const auto phi = conductance_exact(g, opts);
    const Mask all = full_mask(g.n());
    std::vector<VertexSet> out;
    for (Mask s = 1; s < all; ++s) {
        const std::int64_t vol = volume_of(g, s);
        if (vol > g.m())
            continue;
        if (static_cast<detail::int128>(cut_of(g, s)) * phi.value.den() == static_cast<detail::int128>(phi.value.num()) * vol)
            out.push_back(VertexSet::from_mask(g.n(), s));
    }
    return out;
}

VatDecomposition vat_witness_components(const Graph& g, const MetricResult& result) {
    require_width(g, result.witness);
    auto comps = components(g, result.witness);
    if (comps.empty())
        throw Error(ErrorCode::EmptyRemainder, "witness removes every vertex");
    VatDecomposition out;
    out.largest = std::move(comps.front());
    out.others.assign(std::make_move_iterator(comps.begin() + 1), std::make_move_iterator(comps.end()));
    return out;
}

} // namespace vat
