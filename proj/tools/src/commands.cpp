#include "vatcli/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vat/corpus.hpp"
#include "vat/error.hpp"
#include "vat/generators.hpp"
#include "vat/graph_io.hpp"
#include "vat/metrics.hpp"
#include "vat/spectral.hpp"
#include "vat/verifier.hpp"
#include "vatcli/report.hpp"

namespace fs = std::filesystem;

namespace vatcli {
namespace {

struct Common {
    std::string output;
    std::string format = "json";
    int limit = 0;  // 0: environment or built-in default
    unsigned jobs = 1;
};

int default_limit() {
    if (const char* env = std::getenv(kLimitEnv)) {
        int v = 0;
        std::string_view s(env);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1 || v > vat::kMaxEnumerationLimit)
            throw vat::Error(vat::ErrorCode::BadParameter,
                             std::string(kLimitEnv) + " must be an integer in [1, 64], got '" + env + "'");
        return v;
    }
    return vat::kDefaultEnumerationLimit;
}

vat::EnumerationOptions enumeration(const Common& c) {
    vat::EnumerationOptions opts;
    opts.limit = c.limit > 0 ? c.limit : default_limit();
    opts.jobs = c.jobs;
    if (opts.limit > vat::kMaxEnumerationLimit)
        throw vat::Error(vat::ErrorCode::BadParameter, "enumeration limit must be <= 64");
    return opts;
}

// Writes to the -o file, or to `out` when none was given.
template <class Fn>
void emit(const Common& c, std::ostream& out, Fn&& write) {
    if (c.output.empty() || c.output == "-") {
        write(out);
        return;
    }
    std::ofstream file(c.output, std::ios::binary);
    if (!file)
        throw vat::Error(vat::ErrorCode::IoError, "cannot write " + c.output);
    write(file);
    if (!file)
        throw vat::Error(vat::ErrorCode::IoError, "write failed for " + c.output);
}

void add_common(CLI::App* cmd, Common& c, bool with_format) {
    cmd->add_option("-o,--output", c.output, "Output file (default: standard output)");
    if (with_format)
        cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--limit", c.limit, "Exhaustive enumeration limit on n")->check(CLI::Range(1, 64));
    cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
}

// A path that exists is read as an edge list, anything else as a family spec.
vat::CorpusEntry load_input(const std::string& input) {
    if (fs::exists(input))
        return {fs::path(input).filename().string(), vat::read_edge_list_file(input)};
    auto spec = vat::FamilySpec::parse(input);
    return {spec.to_string(), spec.build()};
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    auto num = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw vat::Error(vat::ErrorCode::BadParameter, "bad range '" + text + "' (expected a..b)");
        return v;
    };
    std::string_view all(text);
    if (dots == std::string::npos) {
        int v = num(all);
        return {v, v};
    }
    auto lo = num(all.substr(0, dots));
    auto hi = num(all.substr(dots + 2));
    if (lo > hi)
        throw vat::Error(vat::ErrorCode::BadParameter, "empty range '" + text + "'");
    return {lo, hi};
}

std::string file_stem_for(const std::string& id) {
    std::string out;
    for (char ch : id)
        out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') ? ch : '_';
    return out;
}

// --- gen -------------------------------------------------------------------

struct GenArgs {
    std::string spec;
    std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    auto spec = vat::FamilySpec::parse(a.spec);
    auto g = spec.build();
    Common c;
    c.output = a.output;
    emit(c, out, [&](std::ostream& os) { vat::write_edge_list(os, g); });
    auto d = vat::regularity(g);
    err << spec.to_string() << ": n=" << g.n() << " m=" << g.m() << " regularity=" << (d ? std::to_string(*d) : "none")
        << '\n';
    return kOk;
}

// --- metrics ---------------------------------------------------------------

struct MetricsArgs {
    Common common;
    std::string input;
    bool vat = false;
    bool conductance = false;
    bool lambda2 = false;
    bool sweep = false;
    bool weighted = false;
    std::vector<double> alpha_beta;
    bool restrict_lcc = false;
};

int cmd_metrics(MetricsArgs a, std::ostream& out) {
    auto entry = load_input(a.input);
    vat::Graph g = a.restrict_lcc ? vat::restrict_to_largest_component(entry.graph) : entry.graph;
    vat::require_nontrivial(g);
    if (!a.vat && !a.conductance && !a.lambda2 && !a.sweep && !a.weighted && a.alpha_beta.empty())
        a.vat = a.conductance = a.lambda2 = true;

    const auto opts = enumeration(a.common);
    MetricsRecord rec;
    rec.graph_id = entry.id;
    rec.n = g.n();
    rec.m = g.m();
    rec.d = vat::regularity(g);
    if (a.vat)
        rec.vat = vat::vat_exact(g, opts);
    if (a.conductance)
        rec.conductance = vat::conductance_exact(g, opts);
    if (a.lambda2 || a.sweep)
        rec.spectrum = vat::lambda2(g);
    if (a.sweep)
        rec.sweep = vat::sweep_conductance(g, *rec.spectrum);
    if (!a.lambda2)
        rec.spectrum.reset();
    if (!a.alpha_beta.empty()) {
        rec.alpha_beta = vat::AlphaBeta{a.alpha_beta[0], a.alpha_beta[1]};
        rec.alpha_beta_vat = a.weighted ? vat::alpha_beta_weighted_vat_exact(g, a.alpha_beta[0], a.alpha_beta[1], opts)
                                        : vat::alpha_beta_vat_exact(g, a.alpha_beta[0], a.alpha_beta[1], opts);
    }
    if (a.weighted)
        rec.weighted_vat = vat::weighted_vat_exact(g, opts);

    emit(a.common, out, [&](std::ostream& os) {
        if (a.common.format == "csv")
            write_metrics_csv(os, rec);
        else
            write_metrics_json(os, rec);
    });
    return kOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    Common common;
    std::string family;
    std::string n_range;
    std::vector<std::string> graphs;
    std::vector<std::string> files;
    std::vector<int> exhaustive;
    int random = 0;
    int random_max_n = 18;
    bool standard = false;
    std::string checks = "all";
    double tolerance = vat::kSpectralTolerance;
};

std::vector<vat::CorpusEntry> verify_corpus(const VerifyArgs& a) {
    std::vector<vat::CorpusEntry> corpus;
    if (!a.family.empty()) {
        auto fam = vat::family_from_string(a.family);
        if (!fam || *fam == vat::Family::circulant || *fam == vat::Family::random_regular || *fam == vat::Family::petersen)
            throw vat::Error(vat::ErrorCode::BadParameter,
                             "--family takes a one-parameter family; use --graph for '" + a.family + "'");
        if (a.n_range.empty())
            throw vat::Error(vat::ErrorCode::BadParameter, "--family needs --n a..b");
        auto [lo, hi] = parse_range(a.n_range);
        for (int k = lo; k <= hi; ++k) {
            vat::FamilySpec spec{*fam, {k}, std::nullopt};
            corpus.push_back({spec.to_string(), spec.build()});
        }
    } else if (!a.n_range.empty()) {
        throw vat::Error(vat::ErrorCode::BadParameter, "--n needs --family");
    }
    for (const auto& s : a.graphs) {
        auto spec = vat::FamilySpec::parse(s);
        corpus.push_back({spec.to_string(), spec.build()});
    }
    for (const auto& f : a.files)
        corpus.push_back({fs::path(f).filename().string(), vat::read_edge_list_file(f)});
    if (!a.exhaustive.empty()) {
        const int n = a.exhaustive[0], d = a.exhaustive[1];
        vat::enumerate_small_regular(n, d, [&](const vat::Graph& g, std::uint64_t mask) {
            corpus.push_back({"exhaustive:" + std::to_string(n) + "," + std::to_string(d) + "#" + std::to_string(mask), g});
            return true;
        });
    }
    if (a.random > 0) {
        auto rnd = vat::random_regular_corpus(a.random, a.random_max_n);
        corpus.insert(corpus.end(), rnd.begin(), rnd.end());
    }
    if (a.standard) {
        auto std_corpus = vat::standard_corpus();
        corpus.insert(corpus.end(), std_corpus.begin(), std_corpus.end());
    }
    if (corpus.empty())
        throw vat::Error(vat::ErrorCode::BadParameter,
                         "no graphs selected (use --family/--n, --graph, --file, --exhaustive, --random or --standard)");
    return corpus;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (!(a.tolerance > 0.0))
        throw vat::Error(vat::ErrorCode::BadParameter, "--tolerance must be positive");
    const auto checks = vat::parse_checks(a.checks);
    const auto corpus = verify_corpus(a);

    vat::VerifyOptions opts;
    opts.enumeration = enumeration(a.common);
    opts.enumeration.jobs = 1;  // parallelism is across graphs
    opts.tolerance = a.tolerance;
    const auto result = vat::run_suite(corpus, checks, opts, a.common.jobs);

    emit(a.common, out, [&](std::ostream& os) {
        if (a.common.format == "csv")
            write_reports_csv(os, result);
        else
            write_reports_json(os, result);
    });

    const auto& s = result.summary;
    err << "graphs=" << s.graphs << " reports=" << s.reports << " holds=" << s.holds << " strict=" << s.strict
        << " skipped=" << s.skipped << " failed=" << s.failed << " equalities=" << s.equalities.size() << '\n';
    for (const auto& [id, thm] : s.equalities)
        err << "  non-strict: " << id << ' ' << vat::to_string(thm) << '\n';
    return result.all_hold() ? kOk : kVerificationFailed;
}

// --- corpus ----------------------------------------------------------------

struct CorpusArgs {
    std::string dir;
    vat::CorpusOptions options;
};

int cmd_corpus(const CorpusArgs& a, std::ostream& err) {
    std::error_code ec;
    fs::create_directories(a.dir, ec);
    if (ec)
        throw vat::Error(vat::ErrorCode::IoError, "cannot create " + a.dir + ": " + ec.message());

    const auto corpus = vat::standard_corpus(a.options);
    std::ostringstream manifest;
    manifest << "file\tgraph_id\tn\tm\td\n";
    for (const auto& e : corpus) {
        const std::string file = file_stem_for(e.id) + ".edges";
        vat::write_edge_list_file(fs::path(a.dir) / file, e.graph);
        auto d = vat::regularity(e.graph);
        manifest << file << '\t' << e.id << '\t' << e.graph.n() << '\t' << e.graph.m() << '\t'
                 << (d ? std::to_string(*d) : "") << '\n';
    }
    std::ofstream out(fs::path(a.dir) / "manifest.tsv", std::ios::binary);
    if (!(out << manifest.str()))
        throw vat::Error(vat::ErrorCode::IoError, "cannot write manifest in " + a.dir);
    err << "wrote " << corpus.size() << " graphs to " << a.dir << '\n';
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vertex attack tolerance, conductance and spectral-gap toolkit", "vatctl"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
    gen_cmd->add_option("spec", gen.spec, "Family spec, e.g. cycle:6 or random_regular:20,3,seed=42")->required();
    gen_cmd->add_option("-o,--output", gen.output, "Output file (default: standard output)");

    MetricsArgs met;
    auto* met_cmd = app.add_subcommand("metrics", "Compute exact and spectral metrics of one graph");
    met_cmd->add_option("input", met.input, "Edge-list file or family spec")->required();
    met_cmd->add_flag("--vat", met.vat, "Vertex attack tolerance");
    met_cmd->add_flag("--conductance", met.conductance, "Conductance");
    met_cmd->add_flag("--lambda2", met.lambda2, "Second eigenvalue of the normalized adjacency matrix");
    met_cmd->add_flag("--sweep", met.sweep, "Spectral sweep-cut conductance upper bound");
    met_cmd->add_flag("--weighted", met.weighted, "Cost/value weighted VAT from the file's weight lines");
    met_cmd->add_option("--alpha-beta", met.alpha_beta, "(alpha,beta)-VAT, e.g. --alpha-beta 2,1")
        ->delimiter(',')
        ->expected(2);
    met_cmd->add_flag("--restrict-lcc", met.restrict_lcc, "Analyse the largest connected component only");
    add_common(met_cmd, met.common, true);

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify", "Check the theorem inequalities on a corpus");
    ver_cmd->add_option("--family", ver.family, "One-parameter family (cycle, complete, star, path, hypercube, complete_bipartite)");
    ver_cmd->add_option("--n", ver.n_range, "Family parameter range a..b");
    ver_cmd->add_option("--graph", ver.graphs, "Family spec (repeatable)");
    ver_cmd->add_option("--file", ver.files, "Edge-list file (repeatable)");
    ver_cmd->add_option("--exhaustive", ver.exhaustive, "All labelled connected d-regular graphs: N D")->expected(2);
    ver_cmd->add_option("--random", ver.random, "Number of seeded random regular graphs");
    ver_cmd->add_option("--random-max-n", ver.random_max_n, "Largest n for --random")->check(CLI::Range(6, 64));
    ver_cmd->add_flag("--standard", ver.standard, "The standard corpus");
    ver_cmd->add_option("--checks", ver.checks, "all, or a comma list of cheeger,thm12,thm13,cor14,lemma23,proof_facts,remarks");
    ver_cmd->add_option("--tolerance", ver.tolerance, "Absolute tolerance for spectral comparisons");
    add_common(ver_cmd, ver.common, true);

    CorpusArgs cor;
    auto* cor_cmd = app.add_subcommand("corpus", "Materialise the standard corpus as edge-list files");
    cor_cmd->add_option("dir", cor.dir, "Output directory")->required();
    cor_cmd->add_option("--exhaustive-max-n", cor.options.exhaustive_max_n, "Largest n for exhaustive graphs")
        ->check(CLI::Range(1, 8));
    cor_cmd->add_option("--family-max-n", cor.options.family_max_n, "Largest n for named families")->check(CLI::Range(2, 64));
    cor_cmd->add_option("--random-count", cor.options.random_count, "Number of random regular samples")->check(CLI::Range(0, 100000));
    cor_cmd->add_option("--random-max-n", cor.options.random_max_n, "Largest n for random samples")->check(CLI::Range(6, 64));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "vatctl: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        if (*gen_cmd)
            return cmd_gen(gen, out, err);
        if (*met_cmd)
            return cmd_metrics(met, out);
        if (*ver_cmd)
            return cmd_verify(ver, out, err);
        if (*cor_cmd)
            return cmd_corpus(cor, err);
    } catch (const vat::Error& e) {
        err << "vatctl: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "vatctl: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

} // namespace vatcli
