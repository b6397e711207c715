#include <gtest/gtest.h>

#include <random>

#include "support/oracle.hpp"
#include "vat/corpus.hpp"
#include "vat/error.hpp"
#include "vat/generators.hpp"
#include "vat/metrics.hpp"

using namespace vat;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected vat::Error";
    return ErrorCode::IoError;
}

VertexSet set_of(int n, std::initializer_list<int> members) { return VertexSet(n, members); }

// Connected G(n, p) samples, drawn until connected.
Graph random_connected(std::mt19937_64& rng, int n) {
    std::bernoulli_distribution coin(0.35);
    while (true) {
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    e.emplace_back(u, v);
        auto g = Graph::build(n, e);
        if (is_connected(g))
            return g;
    }
}

// Corpus graphs with n <= 10 plus random irregular graphs.
std::vector<CorpusEntry> small_graphs() {
    std::vector<CorpusEntry> out;
    for (auto& e : standard_corpus(CorpusOptions{.exhaustive_max_n = 6, .family_max_n = 10, .random_count = 20,
                                                 .random_max_n = 10, .include_irregular = true}))
        if (e.graph.n() <= 10)
            out.push_back(std::move(e));
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 40; ++i) {
        const int n = 2 + i % 9;
        out.push_back({"gnp" + std::to_string(i), random_connected(rng, n)});
    }
    return out;
}

} // namespace

TEST(SetMetrics, Examples) {
    EXPECT_EQ(set_vat(star(4), set_of(5, {0})), Fraction(1, 4));
    for (int v = 0; v < 4; ++v)
        EXPECT_EQ(set_vat(cycle(4), set_of(4, {v})), Fraction(1));
    EXPECT_EQ(set_vat(cycle(6), set_of(6, {0, 3})), Fraction(2, 3));
    EXPECT_EQ(set_conductance(cycle(6), set_of(6, {0, 1, 2})), Fraction(1, 3));
    EXPECT_EQ(set_conductance(star(5), set_of(6, {0})), Fraction(1));
    EXPECT_EQ(set_conductance(complete(4), set_of(4, {0, 1})), Fraction(2, 3));
}

TEST(SetMetrics, Errors) {
    auto c6 = cycle(6);
    EXPECT_EQ(code_of([&] { set_vat(c6, VertexSet(6)); }), ErrorCode::EmptySet);
    EXPECT_EQ(code_of([&] { set_vat(c6, VertexSet::full(6)); }), ErrorCode::FullSet);
    EXPECT_EQ(code_of([&] { set_conductance(c6, VertexSet(6)); }), ErrorCode::EmptySet);
    EXPECT_EQ(code_of([&] { set_conductance(c6, set_of(6, {0, 1, 2, 3})); }), ErrorCode::VolumeTooLarge);
    EXPECT_EQ(code_of([&] { set_conductance(star(5), set_of(6, {0, 1})); }), ErrorCode::VolumeTooLarge);
    auto split = Graph::build(4, std::vector<Edge>{{0, 1}, {2, 3}});
    EXPECT_EQ(code_of([&] { set_vat(split, set_of(4, {0})); }), ErrorCode::DisconnectedInput);
    EXPECT_EQ(code_of([&] { set_conductance(split, set_of(4, {0})); }), ErrorCode::DisconnectedInput);
    auto single = Graph::build(1, {});
    EXPECT_EQ(code_of([&] { set_vat(single, set_of(1, {0})); }), ErrorCode::TrivialGraph);
}

TEST(ExactMetrics, StarGoldenValues) {
    for (int k = 3; k <= 8; ++k) {
        auto g = star(k);
        auto tau = vat_exact(g);
        EXPECT_EQ(tau.value, Fraction(1, k));
        EXPECT_EQ(tau.witness, set_of(k + 1, {0}));
        EXPECT_EQ(conductance_exact(g).value, Fraction(1));
    }
}

TEST(ExactMetrics, SmallGoldenValues) {
    struct Case {
        Graph g;
        Fraction tau;
        std::uint64_t tau_mask;
        Fraction phi;
        std::uint64_t phi_mask;
    };
    const std::vector<Case> cases = {
        {cycle(6), Fraction(2, 3), 9, Fraction(1, 3), 7},
        {complete(4), Fraction(1), 1, Fraction(2, 3), 3},
        {complete(2), Fraction(1), 1, Fraction(1), 1},
        {cycle(4), Fraction(1), 1, Fraction(1, 2), 3},
        {cycle(12), Fraction(1, 3), 65, Fraction(1, 6), 63},
        {hypercube(3), Fraction(1), 1, Fraction(1, 3), 15},
        {petersen(), Fraction(4, 5), 116, Fraction(1, 3), 31},
        {complete_bipartite(3), Fraction(1), 1, Fraction(5, 9), 11},
    };
    for (const auto& c : cases) {
        auto tau = vat_exact(c.g);
        auto phi = conductance_exact(c.g);
        EXPECT_EQ(tau.value, c.tau);
        EXPECT_EQ(tau.witness.mask(), c.tau_mask);
        EXPECT_EQ(tau.metric, MetricKind::vat);
        EXPECT_EQ(phi.value, c.phi);
        EXPECT_EQ(phi.witness.mask(), c.phi_mask);
        EXPECT_EQ(phi.metric, MetricKind::conductance);
    }
}

TEST(ExactMetrics, PreconditionErrors) {
    auto split = Graph::build(4, std::vector<Edge>{{0, 1}, {2, 3}});
    EXPECT_EQ(code_of([&] { vat_exact(split); }), ErrorCode::DisconnectedInput);
    EXPECT_EQ(code_of([&] { conductance_exact(split); }), ErrorCode::DisconnectedInput);
    EXPECT_EQ(code_of([&] { vat_exact(Graph::build(1, {})); }), ErrorCode::TrivialGraph);
    EXPECT_EQ(code_of([&] { vat_exact(cycle(21)); }), ErrorCode::TooLarge);
    EXPECT_EQ(code_of([&] { conductance_exact(cycle(8), {.limit = 7}); }), ErrorCode::TooLarge);
    EXPECT_EQ(code_of([&] { vat_exact(cycle(8), {.limit = 65}); }), ErrorCode::BadParameter);
    EXPECT_EQ(code_of([&] { alpha_beta_vat_exact(cycle(5), 0.0, 0.0); }), ErrorCode::BadParameter);
    EXPECT_EQ(code_of([&] { alpha_beta_vat_exact(cycle(5), 1.0, -1.0); }), ErrorCode::BadParameter);
    // Two antipodal removals leave paths of 9 and 10: 2 / (19 - 10 + 1).
    EXPECT_EQ(vat_exact(cycle(21), {.limit = 21}).value, Fraction(1, 5));
}

TEST(ExactMetrics, WitnessDecomposition) {
    auto c6 = cycle(6);
    auto d6 = vat_witness_components(c6, vat_exact(c6));
    EXPECT_EQ(d6.largest.count(), 2);
    ASSERT_EQ(d6.others.size(), 1U);
    EXPECT_EQ(d6.others[0].count(), 2);

    auto s5 = star(5);
    auto ds = vat_witness_components(s5, vat_exact(s5));
    EXPECT_EQ(ds.largest.count(), 1);
    EXPECT_EQ(ds.others.size(), 4U);

    auto k4 = complete(4);
    auto dk = vat_witness_components(k4, vat_exact(k4));
    EXPECT_EQ(dk.largest.count(), 3);
    EXPECT_TRUE(dk.others.empty());
}

TEST(WeightedMetrics, AlphaBetaExamples) {
    auto k2 = alpha_beta_vat_exact(complete(2), 1, 1);
    ASSERT_TRUE(k2.exact);
    EXPECT_EQ(*k2.exact, Fraction(2));
    EXPECT_EQ(k2.value, 2.0);

    auto s5 = alpha_beta_vat_exact(star(5), 2, 0);
    EXPECT_EQ(*s5.exact, Fraction(2, 5));
    EXPECT_EQ(s5.witness.mask(), 1U);

    auto s4 = alpha_beta_weighted_vat_exact(star(4), 2, 1);
    EXPECT_EQ(*s4.exact, Fraction(3, 4));
    EXPECT_EQ(s4.witness.mask(), 1U);
    EXPECT_DOUBLE_EQ(set_weighted_vat(star(4), set_of(5, {0}), 2, 1), 0.75);

    EXPECT_EQ(*alpha_beta_weighted_vat_exact(complete(2), 1, 1).exact, Fraction(2));

    // Non-integral parameters take the real path.
    auto real = alpha_beta_vat_exact(cycle(6), 1.5, 0.25);
    EXPECT_FALSE(real.exact);
    EXPECT_NEAR(real.value, (1.5 * 2 + 0.25) / 3.0, 1e-12);
}

TEST(WeightedMetrics, CostValueExamples) {
    std::vector<double> costs(6, 1.0);
    costs[0] = 10.0;
    auto s5 = star(5).with_weights({costs, std::vector<double>(6, 1.0)});
    auto r = weighted_vat_exact(s5);
    EXPECT_DOUBLE_EQ(r.value, 1.0);
    EXPECT_EQ(r.witness.mask(), 2U);
    EXPECT_FALSE(r.exact);

    auto k2 = complete(2).with_weights({std::vector<double>{3, 3}, std::vector<double>{3, 3}});
    auto rk = weighted_vat_exact(k2);
    EXPECT_DOUBLE_EQ(rk.value, 3.0);
    EXPECT_EQ(rk.witness.mask(), 1U);

    // Unit weights given explicitly still use the exact path.
    auto unit = cycle(6).with_weights({std::vector<double>(6, 1.0), std::vector<double>(6, 1.0)});
    ASSERT_TRUE(weighted_vat_exact(unit).exact);
    EXPECT_EQ(*weighted_vat_exact(unit).exact, Fraction(2, 3));
}

TEST(WeightedMetrics, RejectsNonPositiveWeights) {
    EXPECT_EQ(code_of([] { complete(2).with_weights({std::vector<double>{0, 1}, std::nullopt}); }),
              ErrorCode::NonPositiveWeight);
}

TEST(OracleEquivalence, VatAndConductanceMatchNaiveSearch) {
    for (const auto& [id, g] : small_graphs()) {
        SCOPED_TRACE(id);
        auto tau = vat_exact(g);
        auto o = oracle::vat(g);
        EXPECT_EQ(tau.value, Fraction(o.num, o.den));
        EXPECT_EQ(tau.witness.mask(), o.witness);

        auto phi = conductance_exact(g);
        auto p = oracle::conductance(g);
        EXPECT_EQ(phi.value, Fraction(p.num, p.den));
        EXPECT_EQ(phi.witness.mask(), p.witness);
    }
}

TEST(OracleEquivalence, AlphaBetaMatchesNaiveSearch) {
    const std::pair<int, int> params[] = {{1, 1}, {2, 0}, {2, 1}, {3, 5}};
    for (const auto& [id, g] : small_graphs()) {
        SCOPED_TRACE(id);
        for (auto [a, b] : params) {
            auto r = alpha_beta_vat_exact(g, a, b);
            auto o = oracle::vat(g, a, b);
            ASSERT_TRUE(r.exact);
            EXPECT_EQ(*r.exact, Fraction(o.num, o.den));
            EXPECT_EQ(r.witness.mask(), o.witness);
        }
    }
}

TEST(OracleEquivalence, RealWeightsMatchNaiveSearch) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> w(0.5, 4.0);
    for (int i = 0; i < 30; ++i) {
        const int n = 3 + i % 7;
        auto base = random_connected(rng, n);
        std::vector<double> c(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            c[static_cast<std::size_t>(x)] = w(rng);
            v[static_cast<std::size_t>(x)] = w(rng);
        }
        auto g = base.with_weights({c, v});
        auto r = alpha_beta_weighted_vat_exact(g, 1.25, 0.5);
        auto [value, mask] = oracle::weighted_vat(g, 1.25, 0.5);
        EXPECT_NEAR(r.value, value, 1e-12);
        EXPECT_NEAR(set_weighted_vat(g, r.witness, 1.25, 0.5), r.value, 1e-12);
        (void)mask;
    }
}

TEST(Invariants, UnitRangeAndWitnessConsistency) {
    for (const auto& [id, g] : small_graphs()) {
        SCOPED_TRACE(id);
        auto tau = vat_exact(g);
        EXPECT_GT(tau.value, Fraction(0));
        EXPECT_LE(tau.value, Fraction(1));
        EXPECT_FALSE(tau.witness.empty());
        EXPECT_FALSE(tau.witness.is_full());
        EXPECT_FALSE(largest_component(g, tau.witness).empty());
        EXPECT_EQ(set_vat(g, tau.witness), tau.value);

        auto phi = conductance_exact(g);
        EXPECT_GT(phi.value, Fraction(0));
        EXPECT_LE(phi.value, Fraction(1));
        EXPECT_LE(2 * volume(g, phi.witness), 2 * g.m());
        EXPECT_EQ(set_conductance(g, phi.witness), phi.value);
    }
}

TEST(Invariants, MinimumBoundsRandomSubsets) {
    std::mt19937_64 rng(5);
    for (const auto& [id, g] : small_graphs()) {
        auto tau = vat_exact(g).value;
        auto phi = conductance_exact(g).value;
        std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << g.n()) - 2);
        for (int i = 0; i < 20; ++i) {
            auto s = VertexSet::from_mask(g.n(), pick(rng));
            EXPECT_LE(tau, set_vat(g, s)) << id;
            if (volume(g, s) <= g.m())
                EXPECT_LE(phi, set_conductance(g, s)) << id;
        }
    }
}

TEST(Invariants, ReductionChain) {
    for (const auto& [id, g] : small_graphs()) {
        SCOPED_TRACE(id);
        auto tau = vat_exact(g);
        auto ab = alpha_beta_vat_exact(g, 1, 0);
        auto w = weighted_vat_exact(g);
        auto abw = alpha_beta_weighted_vat_exact(g, 1, 0);
        for (const auto* r : {&ab, &w, &abw}) {
            ASSERT_TRUE(r->exact);
            EXPECT_EQ(*r->exact, tau.value);
            EXPECT_EQ(r->witness, tau.witness);
        }
    }
}

TEST(Invariants, ParallelPartitionDoesNotChangeResults) {
    std::vector<Graph> graphs = {cycle(12), petersen(), hypercube(4), random_regular(14, 3, 3), star(9)};
    for (const auto& g : graphs) {
        auto tau1 = vat_exact(g);
        auto phi1 = conductance_exact(g);
        auto ab1 = alpha_beta_vat_exact(g, 1.5, 0.5);
        for (unsigned jobs : {2U, 3U, 8U, 64U}) {
            EnumerationOptions opts{.limit = kDefaultEnumerationLimit, .jobs = jobs};
            auto tau = vat_exact(g, opts);
            auto phi = conductance_exact(g, opts);
            auto ab = alpha_beta_vat_exact(g, 1.5, 0.5, opts);
            EXPECT_EQ(tau.value, tau1.value);
            EXPECT_EQ(tau.witness, tau1.witness);
            EXPECT_EQ(phi.value, phi1.value);
            EXPECT_EQ(phi.witness, phi1.witness);
            EXPECT_EQ(ab.value, ab1.value);
            EXPECT_EQ(ab.witness, ab1.witness);
        }
    }
}

TEST(Minimizers, AllReturnedSetsAttainTheMinimum) {
    auto k4 = conductance_minimizers(complete(4));
    EXPECT_EQ(k4.size(), 6U);
    auto c6 = conductance_minimizers(cycle(6));
    EXPECT_EQ(c6.size(), 6U);
    for (const auto& s : c6) {
        EXPECT_EQ(set_conductance(cycle(6), s), Fraction(1, 3));
        EXPECT_TRUE(induces_connected(cycle(6), s));
    }
}
