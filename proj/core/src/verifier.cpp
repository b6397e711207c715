#include "vat/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "vat/error.hpp"

namespace vat {
namespace {

constexpr std::pair<Theorem, std::string_view> kTheoremNames[] = {
    {Theorem::cheeger_lower, "cheeger_lower"},
    {Theorem::cheeger_upper, "cheeger_upper"},
    {Theorem::thm12_conditional, "thm12_conditional"},
    {Theorem::thm12_unconditional, "thm12_unconditional"},
    {Theorem::thm13, "thm13"},
    {Theorem::cor14_general_lower, "cor14_general_lower"},
    {Theorem::cor14_general_upper, "cor14_general_upper"},
    {Theorem::cor14_conditional_lower, "cor14_conditional_lower"},
    {Theorem::lemma23, "lemma23"},
    {Theorem::remark21, "remark21"},
    {Theorem::remark22, "remark22"},
    {Theorem::proof_fact1, "proof_fact1"},
    {Theorem::proof_fact2, "proof_fact2"},
};

constexpr std::pair<CheckGroup, std::string_view> kCheckNames[] = {
    {CheckGroup::cheeger, "cheeger"},   {CheckGroup::thm12, "thm12"},     {CheckGroup::thm13, "thm13"},
    {CheckGroup::cor14, "cor14"},       {CheckGroup::lemma23, "lemma23"}, {CheckGroup::proof_facts, "proof_facts"},
    {CheckGroup::remarks, "remarks"},
};

// Inequalities whose equality cases go into the strictness audit.
bool audited(Theorem t) {
    switch (t) {
    case Theorem::cheeger_lower:
    case Theorem::cheeger_upper:
    case Theorem::thm12_conditional:
    case Theorem::thm12_unconditional:
    case Theorem::thm13:
    case Theorem::cor14_general_lower:
    case Theorem::cor14_general_upper:
    case Theorem::cor14_conditional_lower:
        return true;
    default:
        return false;
    }
}

// Regular-graph theorems share these preconditions.
int regular_preconditions(GraphAnalysis& a) {
    require_nontrivial(a.graph());
    return a.degree();
}

// Phi <= 1/d^2, exactly.
bool sparse_regime(const Fraction& phi, int d) { return phi <= Fraction(1, static_cast<std::int64_t>(d) * d); }

TheoremReport inequality(const GraphAnalysis& a, Theorem t, Quantity lhs, Quantity rhs) {
    auto r = a.make_report(t);
    r.lhs = lhs;
    r.rhs = rhs;
    settle(r, a.options().tolerance);
    return r;
}

} // namespace

std::string_view to_string(Theorem t) {
    for (auto [th, name] : kTheoremNames)
        if (th == t)
            return name;
    return "unknown";
}

std::optional<Theorem> theorem_from_string(std::string_view name) {
    for (auto [th, n] : kTheoremNames)
        if (n == name)
            return th;
    return std::nullopt;
}

void settle(TheoremReport& r, double tol) {
    r.slack = r.rhs.real - r.lhs.real;
    if (r.lhs.exact && r.rhs.exact) {
        r.holds = *r.lhs.exact <= *r.rhs.exact;
        r.strict_holds = *r.lhs.exact < *r.rhs.exact;
    } else {
        r.holds = r.lhs.real <= r.rhs.real + tol;
        r.strict_holds = r.lhs.real < r.rhs.real - tol;
    }
}

GraphAnalysis::GraphAnalysis(const Graph& g, std::string graph_id, VerifyOptions opts)
    : graph_(&g), id_(std::move(graph_id)), opts_(opts) {}

const MetricResult& GraphAnalysis::vat() {
    if (!vat_)
        vat_ = vat_exact(*graph_, opts_.enumeration);
    return *vat_;
}

const MetricResult& GraphAnalysis::conductance() {
    if (!conductance_)
        conductance_ = conductance_exact(*graph_, opts_.enumeration);
    return *conductance_;
}

const SpectralResult& GraphAnalysis::spectrum() {
    if (!spectrum_)
        spectrum_ = lambda2(*graph_);
    return *spectrum_;
}

int GraphAnalysis::degree() {
    auto d = regularity(*graph_);
    if (!d)
        throw Error(ErrorCode::NotRegular, "graph is not regular");
    return *d;
}

TheoremReport GraphAnalysis::make_report(Theorem t) const {
    TheoremReport r;
    r.theorem = t;
    r.graph_id = id_;
    r.n = graph_->n();
    r.m = graph_->m();
    r.d = regularity(*graph_);
    return r;
}

std::vector<TheoremReport> check_cheeger(GraphAnalysis& a) {
    regular_preconditions(a);
    const Fraction phi = a.conductance().value;
    const double gap = a.spectrum().gap;
    auto lower = inequality(a, Theorem::cheeger_lower, Quantity::of(phi * phi * Fraction(1, 2)), Quantity::of(gap));
    auto upper = inequality(a, Theorem::cheeger_upper, Quantity::of(gap), Quantity::of(phi * Fraction(2)));
    lower.witnesses = upper.witnesses = {a.conductance().witness};
    return {lower, upper};
}

std::vector<TheoremReport> check_thm12(GraphAnalysis& a) {
    const int d = regular_preconditions(a);
    const Fraction tau = a.vat().value;
    const Fraction phi = a.conductance().value;
    std::vector<TheoremReport> out;
    if (sparse_regime(phi, d))
        out.push_back(inequality(a, Theorem::thm12_conditional, Quantity::of(tau), Quantity::of(phi * Fraction(d))));
    out.push_back(inequality(a, Theorem::thm12_unconditional, Quantity::of(tau),
                             Quantity::of(phi * Fraction(static_cast<std::int64_t>(d) * d))));
    for (auto& r : out)
        r.witnesses = {a.vat().witness, a.conductance().witness};
    return out;
}

TheoremReport check_thm13(GraphAnalysis& a) {
    const int d = regular_preconditions(a);
    auto r = inequality(a, Theorem::thm13, Quantity::of(a.conductance().value), Quantity::of(a.vat().value * Fraction(d)));
    r.witnesses = {a.conductance().witness, a.vat().witness};
    return r;
}

std::vector<TheoremReport> check_cor14(GraphAnalysis& a) {
    const int d = regular_preconditions(a);
    const Fraction tau = a.vat().value;
    const Fraction phi = a.conductance().value;
    const double gap = a.spectrum().gap;
    const std::int64_t d2 = static_cast<std::int64_t>(d) * d;

    std::vector<TheoremReport> out;
    out.push_back(inequality(a, Theorem::cor14_general_lower, Quantity::of(tau * tau / Fraction(2 * d2 * d2)),
                             Quantity::of(gap)));
    out.push_back(inequality(a, Theorem::cor14_general_upper, Quantity::of(gap), Quantity::of(tau * Fraction(2 * d))));
    if (sparse_regime(phi, d))
        out.push_back(inequality(a, Theorem::cor14_conditional_lower, Quantity::of(tau * tau / Fraction(2 * d2)),
                                 Quantity::of(gap)));
    for (auto& r : out)
        r.witnesses = {a.vat().witness};
    return out;
}

TheoremReport check_lemma23(GraphAnalysis& a) {
    regular_preconditions(a);
    const Graph& g = a.graph();
    if (g.n() > a.options().all_minimizers_limit)
        throw Error(ErrorCode::TooLarge, "lemma check enumerates every minimiser; n=" + std::to_string(g.n()) +
                                             " exceeds " + std::to_string(a.options().all_minimizers_limit));
    auto minimizers = conductance_minimizers(g, a.options().enumeration);
    std::vector<VertexSet> connected;
    for (auto& s : minimizers)
        if (induces_connected(g, s))
            connected.push_back(s);

    // lhs: one connected minimiser required; rhs: how many exist.
    auto r = inequality(a, Theorem::lemma23, Quantity::of(Fraction(1)),
                        Quantity::of(Fraction(static_cast<std::int64_t>(connected.size()))));
    // An existence statement has no strict form.
    r.strict_holds = r.holds;
    if (!connected.empty())
        r.witnesses = {connected.front()};
    return r;
}

std::vector<TheoremReport> check_proof_facts(GraphAnalysis& a) {
    const int d = regular_preconditions(a);
    const Graph& g = a.graph();
    const auto& vat = a.vat();
    const auto parts = vat_witness_components(g, vat);

    std::int64_t cut_total = cut_size(g, parts.largest);
    std::int64_t size_total = parts.largest.count();
    for (const auto& c : parts.others) {
        cut_total += cut_size(g, c);
        size_total += c.count();
    }
    const std::int64_t s = vat.witness.count();
    const std::int64_t t = parts.largest.count();

    auto fact1 = inequality(a, Theorem::proof_fact1, Quantity::of(Fraction(cut_total)), Quantity::of(Fraction(d * s)));
    auto fact2 = inequality(a, Theorem::proof_fact2, Quantity::of(Fraction(g.n() - s - t + 1)),
                            Quantity::of(Fraction(size_total)));
    fact1.witnesses = fact2.witnesses = {vat.witness, parts.largest};
    return {fact1, fact2};
}

std::vector<TheoremReport> check_remarks(GraphAnalysis& a) {
    require_nontrivial(a.graph());
    const auto& vat = a.vat();
    const auto& phi = a.conductance();

    auto r21 = inequality(a, Theorem::remark21, Quantity::of(vat.value), Quantity::of(Fraction(1)));
    const bool survivor = !largest_component(a.graph(), vat.witness).empty();
    r21.holds = r21.holds && !vat.value.is_zero() && survivor;
    r21.strict_holds = r21.strict_holds && r21.holds;
    r21.witnesses = {vat.witness};

    auto r22 = inequality(a, Theorem::remark22, Quantity::of(phi.value), Quantity::of(Fraction(1)));
    r22.holds = r22.holds && !phi.value.is_zero();
    r22.strict_holds = r22.strict_holds && r22.holds;
    r22.witnesses = {phi.witness};
    return {r21, r22};
}

Fraction mediant_between(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y) {
    if (a <= 0 || x <= 0 || b <= 0 || y <= 0)
        throw Error(ErrorCode::BadParameter, "mediant needs positive numerators and denominators");
    return Fraction(a + b, x + y);
}

bool series_lower_bound(std::span<const std::pair<std::int64_t, std::int64_t>> pairs, const Fraction& c) {
    if (pairs.empty())
        throw Error(ErrorCode::BadParameter, "series bound needs at least one pair");
    std::int64_t num = 0, den = 0;
    for (auto [ai, bi] : pairs) {
        if (ai <= 0 || bi <= 0)
            throw Error(ErrorCode::BadParameter, "series bound needs positive pairs");
        num += ai;
        den += bi;
    }
    return c <= Fraction(num, den);
}

std::string_view to_string(CheckGroup c) {
    for (auto [grp, name] : kCheckNames)
        if (grp == c)
            return name;
    return "unknown";
}

std::vector<CheckGroup> all_checks() {
    std::vector<CheckGroup> out;
    for (auto [grp, name] : kCheckNames)
        out.push_back(grp);
    return out;
}

std::vector<CheckGroup> parse_checks(std::string_view text) {
    if (text == "all")
        return all_checks();
    std::vector<CheckGroup> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto pos = text.find(',', start);
        auto tok = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        bool ok = false;
        for (auto [grp, name] : kCheckNames) {
            if (name == tok) {
                if (std::find(out.begin(), out.end(), grp) == out.end())
                    out.push_back(grp);
                ok = true;
            }
        }
        if (!ok)
            throw Error(ErrorCode::BadParameter, "unknown check '" + std::string(tok) + "'");
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

std::vector<Theorem> theorems_of(CheckGroup c) {
    switch (c) {
    case CheckGroup::cheeger: return {Theorem::cheeger_lower, Theorem::cheeger_upper};
    case CheckGroup::thm12: return {Theorem::thm12_conditional, Theorem::thm12_unconditional};
    case CheckGroup::thm13: return {Theorem::thm13};
    case CheckGroup::cor14:
        return {Theorem::cor14_general_lower, Theorem::cor14_general_upper, Theorem::cor14_conditional_lower};
    case CheckGroup::lemma23: return {Theorem::lemma23};
    case CheckGroup::proof_facts: return {Theorem::proof_fact1, Theorem::proof_fact2};
    case CheckGroup::remarks: return {Theorem::remark21, Theorem::remark22};
    }
    return {};
}

namespace {

bool conditional(Theorem t) { return t == Theorem::thm12_conditional || t == Theorem::cor14_conditional_lower; }

std::vector<TheoremReport> run_group(GraphAnalysis& a, CheckGroup c) {
    switch (c) {
    case CheckGroup::cheeger: return check_cheeger(a);
    case CheckGroup::thm12: return check_thm12(a);
    case CheckGroup::thm13: return {check_thm13(a)};
    case CheckGroup::cor14: return check_cor14(a);
    case CheckGroup::lemma23: return {check_lemma23(a)};
    case CheckGroup::proof_facts: return check_proof_facts(a);
    case CheckGroup::remarks: return check_remarks(a);
    }
    return {};
}

std::vector<TheoremReport> check_one(const CorpusEntry& entry, std::span<const CheckGroup> checks,
                                     const VerifyOptions& opts) {
    GraphAnalysis a(entry.graph, entry.id, opts);
    std::vector<TheoremReport> out;
    for (auto c : checks) {
        try {
            auto reports = run_group(a, c);
            out.insert(out.end(), reports.begin(), reports.end());
        } catch (const Error& e) {
            for (auto t : theorems_of(c)) {
                if (conditional(t))
                    continue;
                auto r = a.make_report(t);
                r.skipped = std::string(to_string(e.code()));
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

} // namespace

SuiteResult run_suite(std::span<const CorpusEntry> graphs, std::span<const CheckGroup> checks,
                      const VerifyOptions& opts, unsigned jobs) {
    std::vector<std::vector<TheoremReport>> per_graph(graphs.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(graphs.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            per_graph[i] = check_one(graphs[i], checks, opts);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back([&] {
                for (std::size_t i = next++; i < graphs.size(); i = next++)
                    per_graph[i] = check_one(graphs[i], checks, opts);
            });
        for (auto& t : threads)
            t.join();
    }

    SuiteResult result;
    result.summary.graphs = graphs.size();
    for (auto& reports : per_graph) {
        for (auto& r : reports) {
            ++result.summary.reports;
            if (r.skipped) {
                ++result.summary.skipped;
            } else {
                result.summary.holds += r.holds;
                result.summary.strict += r.strict_holds;
                result.summary.failed += !r.holds;
                if (r.holds && !r.strict_holds && audited(r.theorem))
                    result.summary.equalities.emplace_back(r.graph_id, r.theorem);
            }
            result.reports.push_back(std::move(r));
        }
    }
    return result;
}

} // namespace vat
