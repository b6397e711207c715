// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
//   acceptance [--golden DIR] [--write-golden]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracle.hpp"
#include "vat/corpus.hpp"
#include "vat/generators.hpp"
#include "vat/graph_io.hpp"
#include "vat/metrics.hpp"
#include "vat/spectral.hpp"
#include "vat/verifier.hpp"
#include "vatcli/commands.hpp"

namespace fs = std::filesystem;
using namespace vat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first few problems and a summary for the criterion line.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (ok)
            return;
        ++failures_;
        if (failures_ <= 5)
            problems_ += (problems_.empty() ? "" : "; ") + what;
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }

    Outcome outcome() const {
        if (failures_ == 0)
            return {true, notes_};
        return {false, std::to_string(failures_) + " problem(s): " + problems_ + (notes_.empty() ? "" : " [" + notes_ + "]")};
    }

private:
    int failures_ = 0;
    std::string problems_;
    std::string notes_;
};

struct Context {
    fs::path golden;
    bool write_golden = false;
    std::vector<CorpusEntry> corpus;  // the standard corpus
    std::optional<SuiteResult> suite;  // criterion 4's run, reused by 5
};

std::string str(const Fraction& f) { return f.to_string(); }

bool close(double a, double b) { return std::fabs(a - b) <= 1e-9; }

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Compares against a golden file, or (re)writes it when asked to.
void golden_compare(Checker& c, const Context& ctx, const std::string& name, const std::string& content) {
    const auto path = ctx.golden / name;
    if (ctx.write_golden) {
        std::ofstream(path, std::ios::binary) << content;
        c.note("wrote " + path.string());
        return;
    }
    c.expect(fs::exists(path), "missing golden file " + path.string());
    if (fs::exists(path))
        c.expect(read_file(path) == content, name + " differs from golden");
}

// 1. Star graphs: minimally resilient but maximally conductive.
Outcome stars(Context&) {
    Checker c;
    for (int k = 3; k <= 8; ++k) {
        auto g = star(k);
        auto tau = vat_exact(g);
        auto phi = conductance_exact(g);
        auto o = oracle::vat(g);
        c.expect(tau.value == Fraction(1, k), "tau(star " + std::to_string(k) + ") = " + str(tau.value));
        c.expect(tau.witness == VertexSet(k + 1, {0}), "star witness is not the centre");
        c.expect(Fraction(o.num, o.den) == tau.value && o.witness == 1, "oracle disagrees on star");
        c.expect(phi.value == Fraction(1), "Phi(star " + std::to_string(k) + ") = " + str(phi.value));
    }
    c.note("k=3..8");
    return c.outcome();
}

// 2. Small closed-form values.
Outcome small_values(Context&) {
    Checker c;
    auto exact = [&](const std::string& name, const Graph& g, Fraction tau, Fraction phi) {
        auto t = vat_exact(g).value, p = conductance_exact(g).value;
        auto ot = oracle::vat(g), op = oracle::conductance(g);
        c.expect(t == tau && Fraction(ot.num, ot.den) == tau, name + " tau=" + str(t));
        c.expect(p == phi && Fraction(op.num, op.den) == phi, name + " Phi=" + str(p));
    };
    auto spectral = [&](const std::string& name, const Graph& g, double l2) {
        auto r = lambda2(g);
        c.expect(close(r.lambda2, l2), name + " lambda2=" + std::to_string(r.lambda2));
    };
    exact("C6", cycle(6), Fraction(2, 3), Fraction(1, 3));
    exact("K4", complete(4), Fraction(1), Fraction(2, 3));
    exact("K2", complete(2), Fraction(1), Fraction(1));
    spectral("K4", complete(4), -1.0 / 3.0);
    spectral("K2", complete(2), -1.0);
    spectral("C6", cycle(6), 0.5);
    spectral("Petersen", petersen(), 1.0 / 3.0);
    return c.outcome();
}

// 3. Optimised engines against the naive oracle on every corpus graph with n <= 10.
Outcome oracle_equivalence(Context& ctx) {
    Checker c;
    int graphs = 0;
    for (const auto& [id, g] : ctx.corpus) {
        if (g.n() > 10)
            continue;
        ++graphs;
        auto tau = vat_exact(g);
        auto phi = conductance_exact(g);
        auto ot = oracle::vat(g);
        auto op = oracle::conductance(g);
        c.expect(tau.value == Fraction(ot.num, ot.den) && tau.witness.mask() == ot.witness, id + " vat");
        c.expect(phi.value == Fraction(op.num, op.den) && phi.witness.mask() == op.witness, id + " conductance");
    }
    c.expect(graphs >= 200, "only " + std::to_string(graphs) + " graphs with n <= 10");
    c.note(std::to_string(graphs) + " graphs");
    return c.outcome();
}

// 4. Every theorem check holds on every regular corpus graph.
Outcome theorem_suite(Context& ctx) {
    Checker c;
    std::vector<CorpusEntry> regular;
    for (const auto& e : ctx.corpus)
        if (regularity(e.graph))
            regular.push_back(e);
    const auto checks = all_checks();
    ctx.suite = run_suite(regular, checks, VerifyOptions{}, 1);
    const auto& s = ctx.suite->summary;
    for (const auto& r : ctx.suite->reports) {
        if (r.skipped) {
            // Only the all-minimiser lemma has a size cap below the corpus maximum.
            const bool expected = r.theorem == Theorem::lemma23 && r.n > kAllMinimizersLimit;
            c.expect(expected, r.graph_id + " " + std::string(to_string(r.theorem)) + " skipped: " + *r.skipped);
            continue;
        }
        std::ostringstream why;
        why << r.graph_id << " " << to_string(r.theorem) << ": " << r.lhs.real << " > " << r.rhs.real;
        if (r.lhs.exact && r.rhs.exact)
            why << " (" << str(*r.lhs.exact) << " > " << str(*r.rhs.exact) << ")";
        c.expect(r.holds, why.str());
    }
    c.note(std::to_string(regular.size()) + " graphs, " + std::to_string(s.reports) + " reports, " +
           std::to_string(s.failed) + " failed, " + std::to_string(s.skipped) + " skipped");
    return c.outcome();
}

std::string audit_text(const SuiteSummary& s) {
    std::string out;
    for (const auto& [id, t] : s.equalities)
        out += id + " " + std::string(to_string(t)) + "\n";
    return out;
}

// 5. Equality cases of the two VAT/conductance bounds occur only at d = 1;
// the full audit list is stable across runs and frozen.
Outcome strictness_audit(Context& ctx) {
    Checker c;
    if (!ctx.suite)
        theorem_suite(ctx);
    std::vector<CorpusEntry> regular;
    for (const auto& e : ctx.corpus)
        if (regularity(e.graph))
            regular.push_back(e);
    const auto checks = all_checks();
    const auto rerun = run_suite(regular, checks, VerifyOptions{}, 4);
    const auto text = audit_text(ctx.suite->summary);
    c.expect(text == audit_text(rerun.summary), "audit list changed between runs");

    int bound_equalities = 0;
    for (const auto& r : ctx.suite->reports) {
        if (r.skipped || r.strict_holds || !r.holds)
            continue;
        if (r.theorem == Theorem::thm13 || r.theorem == Theorem::thm12_unconditional) {
            ++bound_equalities;
            c.expect(r.d == 1, r.graph_id + " " + std::string(to_string(r.theorem)) + " tight at d=" +
                                   std::to_string(r.d.value_or(-1)));
        }
    }
    golden_compare(c, ctx, "strictness_audit.txt", text);
    c.note(std::to_string(ctx.suite->summary.equalities.size()) + " equalities, " +
           std::to_string(bound_equalities) + " on thm13/thm12_unconditional");
    return c.outcome();
}

// 6. Mediant sandwich and series lower bound on random exact instances.
Outcome fraction_lemmas(Context&) {
    Checker c;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
    int mediants = 0;
    while (mediants < 10'000) {
        std::int64_t a = dist(rng), x = dist(rng), b = dist(rng), y = dist(rng);
        Fraction lo(a, x), hi(b, y);
        if (lo == hi)
            continue;
        if (hi < lo) {
            std::swap(a, b);
            std::swap(x, y);
            std::swap(lo, hi);
        }
        auto m = mediant_between(a, x, b, y);
        c.expect(lo < m && m < hi, "mediant outside " + str(lo) + ".." + str(hi));
        ++mediants;
    }
    std::uniform_int_distribution<int> len(1, 20);
    for (int i = 0; i < 10'000; ++i) {
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs(static_cast<std::size_t>(len(rng)));
        std::optional<Fraction> lowest;
        for (auto& [ai, bi] : pairs) {
            ai = dist(rng);
            bi = dist(rng);
            if (!lowest || Fraction(ai, bi) < *lowest)
                lowest = Fraction(ai, bi);
        }
        c.expect(series_lower_bound(pairs, *lowest), "series bound violated at c = min ratio");
    }
    c.note("10000 + 10000 instances");
    return c.outcome();
}

// 7. (1,0)-VAT = unit-weighted VAT = VAT on every corpus graph.
Outcome reduction_chain(Context& ctx) {
    Checker c;
    for (const auto& [id, g] : ctx.corpus) {
        auto tau = vat_exact(g).value;
        auto ab = alpha_beta_vat_exact(g, 1, 0);
        auto w = weighted_vat_exact(g);
        c.expect(ab.exact && *ab.exact == tau, id + " (1,0)-VAT");
        c.expect(w.exact && *w.exact == tau, id + " weighted VAT");
    }
    c.note(std::to_string(ctx.corpus.size()) + " graphs");
    return c.outcome();
}

// 8. verify output independent of --jobs; random_regular reproducible.
Outcome determinism(Context& ctx) {
    Checker c;
    auto run = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = vatcli::run(args, out, err);
        return std::tuple{code, out.str(), err.str()};
    };
    for (const auto& format : {std::string("csv"), std::string("json")}) {
        // The full standard corpus as CSV; a smaller selection as JSON.
        std::vector<std::string> base = {"verify", "--checks", "all", "--format", format};
        if (format == "csv")
            base.push_back("--standard");
        else
            base.insert(base.end(), {"--random", "100", "--family", "cycle", "--n", "3..16"});
        auto one = base, eight = base;
        one.insert(one.end(), {"--jobs", "1"});
        eight.insert(eight.end(), {"--jobs", "8"});
        auto [c1, out1, err1] = run(one);
        auto [c8, out8, err8] = run(eight);
        c.expect(c1 == c8, format + ": exit codes differ");
        c.expect(out1 == out8, format + ": reports differ between --jobs 1 and --jobs 8");
        c.expect(err1 == err8, format + ": summaries differ");
        c.expect(!out1.empty(), format + ": empty output");
        c.note(format + " " + std::to_string(out1.size()) + " bytes");
    }
    for (auto [n, d, seed] : {std::tuple{20, 3, 42ULL}, {100, 4, 7ULL}, {18, 5, 1ULL}})
        c.expect(random_regular(n, d, seed).edges() == random_regular(n, d, seed).edges(), "random_regular unstable");
    golden_compare(c, ctx, "random_regular_20_3_42.edges", to_edge_list(random_regular(20, 3, 42)));
    return c.outcome();
}

// 9. Desk-scale limits.
Outcome scale(Context&) {
    Checker c;
    using clock = std::chrono::steady_clock;
    auto secs = [](clock::time_point t0) { return std::chrono::duration<double>(clock::now() - t0).count(); };

    auto g20 = random_regular(20, 3, 2024);
    for (std::uint64_t s = 2025; !is_connected(g20); ++s)
        g20 = random_regular(20, 3, s);
    auto t0 = clock::now();
    auto tau = vat_exact(g20);
    auto phi = conductance_exact(g20);
    const double exact_s = secs(t0);
    c.expect(exact_s < 300.0, "n=20 exact metrics took " + std::to_string(exact_s) + " s");
    c.note("n=20: tau=" + str(tau.value) + " Phi=" + str(phi.value) + " in " + std::to_string(exact_s) + " s");

    auto g500 = random_regular(500, 3, 2024);
    for (std::uint64_t s = 2025; !is_connected(g500); ++s)
        g500 = random_regular(500, 3, s);
    t0 = clock::now();
    auto spec = lambda2(g500);
    auto sweep = sweep_conductance(g500, spec);
    const double spectral_s = secs(t0);
    c.expect(spectral_s < 30.0, "n=500 spectral took " + std::to_string(spectral_s) + " s");
    c.expect(spec.gap <= 2 * sweep.value + 1e-9, "1 - lambda2 > 2 sweep");
    c.note("n=500: gap=" + std::to_string(spec.gap) + " sweep=" + std::to_string(sweep.value) + " in " +
           std::to_string(spectral_s) + " s");
    return c.outcome();
}

} // namespace

int main(int argc, char** argv) {
    Context ctx;
    ctx.golden = VAT_GOLDEN_DIR;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--write-golden") {
            ctx.write_golden = true;
        } else if (arg == "--golden" && i + 1 < argc) {
            ctx.golden = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--golden DIR] [--write-golden]\n";
            return 2;
        }
    }
    ctx.corpus = standard_corpus();

    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome(Context&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "star golden values", 1.0, stars},
        {2, "small-graph golden values", 10.0, small_values},
        {3, "oracle equivalence (n <= 10)", 120.0, oracle_equivalence},
        {4, "theorem suite on the regular corpus", 600.0, theorem_suite},
        {5, "strictness audit", 600.0, strictness_audit},
        {6, "mediant and series lemmas", 10.0, fraction_lemmas},
        {7, "reduction chain", 600.0, reduction_chain},
        {8, "determinism", 600.0, determinism},
        {9, "scale", 330.0, scale},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run(ctx);
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > cr.budget_s) {
            o.pass = false;
            o.detail += " (over the " + std::to_string(cr.budget_s) + " s budget)";
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s [%d] %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name, s, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
