#include "vat/generators.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "vat/error.hpp"

namespace vat {
namespace {

void require(bool ok, const std::string& msg) {
    if (!ok)
        throw Error(ErrorCode::BadParameter, msg);
}

int parse_int(std::string_view tok, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(ErrorCode::BadParameter, "bad integer '" + std::string(tok) + "' in family spec '" + std::string(whole) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::star, "star"},
    {Family::path, "path"},
    {Family::hypercube, "hypercube"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::circulant, "circulant"},
    {Family::random_regular, "random_regular"},
    {Family::petersen, "petersen"},
};

std::size_t expected_params(Family f) {
    switch (f) {
    case Family::petersen: return 0;
    case Family::random_regular: return 2;
    default: return 1;
    }
}

} // namespace

std::string_view to_string(Family f) {
    for (auto [fam, name] : kFamilyNames)
        if (fam == f)
            return name;
    return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
    for (auto [fam, n] : kFamilyNames)
        if (n == name)
            return fam;
    return std::nullopt;
}

FamilySpec FamilySpec::parse(std::string_view text) {
    auto colon = text.find(':');
    auto name = text.substr(0, colon);
    auto family = family_from_string(name);
    if (!family)
        throw Error(ErrorCode::BadParameter, "unknown graph family '" + std::string(name) + "'");

    FamilySpec spec;
    spec.family = *family;
    if (colon != std::string_view::npos) {
        auto params = split(text.substr(colon + 1), ',');
        for (std::size_t i = 0; i < params.size(); ++i) {
            auto tok = params[i];
            if (tok.starts_with("seed=")) {
                auto digits = tok.substr(5);
                std::uint64_t seed = 0;
                auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
                if (ec != std::errc{} || ptr != digits.data() + digits.size())
                    throw Error(ErrorCode::BadParameter, "bad seed in '" + std::string(text) + "'");
                spec.seed = seed;
            } else if (spec.family == Family::circulant && i == 1) {
                for (auto off : split(tok, '+'))
                    spec.parameters.push_back(parse_int(off, text));
            } else {
                spec.parameters.push_back(parse_int(tok, text));
            }
        }
    }

    if (spec.family == Family::circulant)
        require(spec.parameters.size() >= 2, "circulant needs 'n,o1+o2+...'");
    else
        require(spec.parameters.size() == expected_params(spec.family),
                "wrong parameter count for family '" + std::string(name) + "'");
    require(!spec.seed || spec.family == Family::random_regular, "seed only applies to random_regular");
    if (spec.family == Family::random_regular && !spec.seed)
        spec.seed = 0;
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out(vat::to_string(family));
    if (family == Family::petersen)
        return out;
    out += ':';
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        if (i > 0)
            out += (family == Family::circulant && i > 1) ? '+' : ',';
        out += std::to_string(parameters[i]);
    }
    if (family == Family::random_regular)
        out += ",seed=" + std::to_string(seed.value_or(0));
    return out;
}

Graph FamilySpec::build() const {
    auto p = [&](std::size_t i) {
        require(i < parameters.size(), "missing parameter for " + std::string(vat::to_string(family)));
        return parameters[i];
    };
    switch (family) {
    case Family::cycle: return cycle(p(0));
    case Family::complete: return complete(p(0));
    case Family::star: return star(p(0));
    case Family::path: return path(p(0));
    case Family::hypercube: return hypercube(p(0));
    case Family::complete_bipartite: return complete_bipartite(p(0));
    case Family::circulant:
        return circulant(p(0), std::vector<int>(parameters.begin() + 1, parameters.end()));
    case Family::random_regular: return random_regular(p(0), p(1), seed.value_or(0));
    case Family::petersen: return petersen();
    }
    throw Error(ErrorCode::BadParameter, "unknown family");
}

Graph cycle(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph::build(n, e);
}

Graph complete(int n) {
    require(n >= 2, "complete graph needs n >= 2");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph::build(n, e);
}

Graph star(int leaves) {
    require(leaves >= 2, "star needs at least 2 leaves");
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return Graph::build(leaves + 1, e);
}

Graph path(int n) {
    require(n >= 2, "path needs n >= 2");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph::build(n, e);
}

Graph hypercube(int k) {
    require(k >= 1 && k <= 6, "hypercube dimension must be in [1,6]");
    const int n = 1 << k;
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < k; ++b)
            if (int v = u ^ (1 << b); u < v)
                e.emplace_back(u, v);
    return Graph::build(n, e);
}

Graph complete_bipartite(int d) {
    require(d >= 1, "complete_bipartite needs d >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < d; ++u)
        for (int v = d; v < 2 * d; ++v)
            e.emplace_back(u, v);
    return Graph::build(2 * d, e);
}

Graph circulant(int n, const std::vector<int>& offsets) {
    require(n >= 3, "circulant needs n >= 3");
    require(!offsets.empty(), "circulant needs at least one offset");
    std::set<int> seen;
    for (int o : offsets) {
        require(o >= 1 && o <= n / 2, "circulant offset " + std::to_string(o) + " outside [1, n/2]");
        require(seen.insert(o).second, "circulant offsets must be distinct");
    }
    std::vector<Edge> e;
    for (int o : offsets) {
        // o = n/2 with n even pairs each vertex with its antipode once.
        int count = (2 * o == n) ? n / 2 : n;
        for (int i = 0; i < count; ++i)
            e.emplace_back(i, (i + o) % n);
    }
    return Graph::build(n, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph::build(10, e);
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection keeps the draw exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = 0;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

Graph random_regular(int n, int d, std::uint64_t seed) {
    require(d >= 1 && d < n, "random_regular needs 1 <= d < n");
    require((static_cast<long long>(n) * d) % 2 == 0, "random_regular needs n*d even");

    const std::size_t stubs_len = static_cast<std::size_t>(n) * static_cast<std::size_t>(d);
    std::vector<int> stubs(stubs_len);
    std::vector<Edge> edges(stubs_len / 2);
    std::uint64_t attempt_seed = seed;
    for (int attempt = 0; attempt < kRandomRegularMaxAttempts; ++attempt, ++attempt_seed) {
        for (std::size_t i = 0; i < stubs_len; ++i)
            stubs[i] = static_cast<int>(i / static_cast<std::size_t>(d));
        SplitMix64 rng(attempt_seed);
        for (std::size_t i = stubs_len - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.below(i + 1)]);

        bool simple = true;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            int u = stubs[2 * k], v = stubs[2 * k + 1];
            if (u == v) {
                simple = false;
                break;
            }
            edges[k] = {std::min(u, v), std::max(u, v)};
        }
        if (!simple)
            continue;
        auto sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            continue;
        return Graph::build(n, sorted);
    }
    throw Error(ErrorCode::RetryLimitExceeded,
                "no simple pairing after " + std::to_string(kRandomRegularMaxAttempts) + " attempts");
}

void enumerate_small_regular(int n, int d, const std::function<bool(const Graph&, std::uint64_t)>& visit) {
    require(n >= 2 && n <= 8, "exhaustive enumeration needs 2 <= n <= 8");
    require(d >= 1 && d < n, "exhaustive enumeration needs 1 <= d < n");
    require((n * d) % 2 == 0, "exhaustive enumeration needs n*d even");

    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const int total = static_cast<int>(pairs.size());

    // below[k][v]: pairs with index < k that touch v.
    std::vector<std::vector<int>> below(static_cast<std::size_t>(total) + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int k = 1; k <= total; ++k) {
        below[static_cast<std::size_t>(k)] = below[static_cast<std::size_t>(k) - 1];
        auto [u, v] = pairs[static_cast<std::size_t>(k) - 1];
        ++below[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)];
        ++below[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)];
    }

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    bool stop = false;
    // Bits are fixed from the highest pair index down with 0 tried before
    // 1, which visits masks in increasing integer order.
    std::function<void(int, std::uint64_t)> descend = [&](int k, std::uint64_t mask) {
        if (stop)
            return;
        if (k < 0) {
            std::vector<Edge> e;
            for (int i = 0; i < total; ++i)
                if ((mask >> i) & 1U)
                    e.push_back(pairs[static_cast<std::size_t>(i)]);
            Graph g = Graph::build(n, e);
            if (is_connected(g) && !visit(g, mask))
                stop = true;
            return;
        }
        auto [u, v] = pairs[static_cast<std::size_t>(k)];
        const auto& rest = below[static_cast<std::size_t>(k)];
        auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(v);
        if (deg[su] + rest[su] >= d && deg[sv] + rest[sv] >= d)
            descend(k - 1, mask);
        if (deg[su] < d && deg[sv] < d) {
            ++deg[su];
            ++deg[sv];
            descend(k - 1, mask | (std::uint64_t{1} << k));
            --deg[su];
            --deg[sv];
        }
    };
    descend(total - 1, 0);
}

std::vector<Graph> small_regular_graphs(int n, int d) {
    std::vector<Graph> out;
    enumerate_small_regular(n, d, [&](const Graph& g, std::uint64_t) {
        out.push_back(g);
        return true;
    });
    return out;
}

} // namespace vat
