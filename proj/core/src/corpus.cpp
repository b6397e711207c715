#include "vat/corpus.hpp"

#include "vat/generators.hpp"

namespace vat {
namespace {

void add(std::vector<CorpusEntry>& out, const FamilySpec& spec) { out.push_back({spec.to_string(), spec.build()}); }

FamilySpec spec_of(Family f, std::vector<int> params, std::optional<std::uint64_t> seed = std::nullopt) {
    return FamilySpec{f, std::move(params), seed};
}

} // namespace

std::vector<CorpusEntry> exhaustive_corpus(int max_n) {
    std::vector<CorpusEntry> out;
    for (int n = 2; n <= max_n; ++n) {
        for (int d = 1; d < n; ++d) {
            if ((n * d) % 2 != 0)
                continue;
            enumerate_small_regular(n, d, [&](const Graph& g, std::uint64_t mask) {
                out.push_back({"exhaustive:" + std::to_string(n) + "," + std::to_string(d) + "#" + std::to_string(mask), g});
                return true;
            });
        }
    }
    return out;
}

std::vector<CorpusEntry> family_corpus(int max_n) {
    std::vector<CorpusEntry> out;
    for (int n = 3; n <= max_n; ++n)
        add(out, spec_of(Family::cycle, {n}));
    for (int n = 2; n <= max_n; ++n)
        add(out, spec_of(Family::complete, {n}));
    for (int k = 1; (1 << k) <= max_n && k <= 6; ++k)
        add(out, spec_of(Family::hypercube, {k}));
    for (int d = 1; 2 * d <= max_n; ++d)
        add(out, spec_of(Family::complete_bipartite, {d}));
    for (int n = 5; n <= max_n; ++n) {
        add(out, spec_of(Family::circulant, {n, 1, 2}));
        if (3 <= n / 2)
            add(out, spec_of(Family::circulant, {n, 1, 3}));
        if (n % 2 == 0 && n / 2 > 3)
            add(out, spec_of(Family::circulant, {n, 1, n / 2}));
    }
    if (max_n >= 10)
        add(out, spec_of(Family::petersen, {}));
    return out;
}

std::vector<CorpusEntry> random_regular_corpus(int count, int max_n) {
    std::vector<CorpusEntry> out;
    if (max_n < 6)
        return out;
    constexpr int kDegrees[] = {3, 4, 5};
    for (int i = 0; i < count; ++i) {
        const int n = 6 + i % (max_n - 5);
        int d = kDegrees[(i / (max_n - 5)) % 3];
        if ((n * d) % 2 != 0)
            d = 4;
        // A disconnected draw moves on to a fresh seed.
        for (std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);; seed += 100'000) {
            auto spec = spec_of(Family::random_regular, {n, d}, seed);
            Graph g = spec.build();
            if (is_connected(g)) {
                out.push_back({spec.to_string(), std::move(g)});
                break;
            }
        }
    }
    return out;
}

std::vector<CorpusEntry> irregular_corpus() {
    std::vector<CorpusEntry> out;
    for (int k = 2; k <= 8; ++k)
        add(out, spec_of(Family::star, {k}));
    for (int n = 3; n <= 10; ++n)
        add(out, spec_of(Family::path, {n}));
    return out;
}

std::vector<CorpusEntry> standard_corpus(const CorpusOptions& opts) {
    auto out = family_corpus(opts.family_max_n);
    if (opts.include_irregular) {
        auto irr = irregular_corpus();
        out.insert(out.end(), irr.begin(), irr.end());
    }
    auto rnd = random_regular_corpus(opts.random_count, opts.random_max_n);
    out.insert(out.end(), rnd.begin(), rnd.end());
    auto ex = exhaustive_corpus(opts.exhaustive_max_n);
    out.insert(out.end(), ex.begin(), ex.end());
    return out;
}

} // namespace vat
