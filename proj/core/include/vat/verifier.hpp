#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vat/fraction.hpp"
#include "vat/graph.hpp"
#include "vat/metrics.hpp"
#include "vat/spectral.hpp"

namespace vat {

enum class Theorem {
    cheeger_lower,
    cheeger_upper,
    thm12_conditional,
    thm12_unconditional,
    thm13,
    cor14_general_lower,
    cor14_general_upper,
    cor14_conditional_lower,
    lemma23,
    remark21,
    remark22,
    proof_fact1,
    proof_fact2,
};

std::string_view to_string(Theorem t);
std::optional<Theorem> theorem_from_string(std::string_view name);

// One side of an inequality: exact when it is built from combinatorial
// quantities only, real when a spectral value is involved.
struct Quantity {
    std::optional<Fraction> exact;
    double real = 0.0;

    static Quantity of(const Fraction& f) { return {f, f.to_double()}; }
    static Quantity of(double x) { return {std::nullopt, x}; }
};

struct TheoremReport {
    Theorem theorem = Theorem::thm13;
    std::string graph_id;
    int n = 0;
    std::int64_t m = 0;
    std::optional<int> d;
    Quantity lhs;
    Quantity rhs;
    bool holds = false;
    bool strict_holds = false;
    double slack = 0.0;  // rhs - lhs
    std::vector<VertexSet> witnesses;
    // Set when a precondition was not met; the inequality fields are unused.
    std::optional<std::string> skipped;
};

inline constexpr double kSpectralTolerance = 1e-9;
inline constexpr int kAllMinimizersLimit = 16;

struct VerifyOptions {
    EnumerationOptions enumeration;
    double tolerance = kSpectralTolerance;
    int all_minimizers_limit = kAllMinimizersLimit;
};

// Fills holds/strict_holds/slack for lhs <= rhs. Two exact sides compare
// exactly; otherwise holds means lhs <= rhs + tol and strict means
// lhs < rhs - tol.
void settle(TheoremReport& report, double tol);

// Metrics of one graph, computed on first use and shared by every check.
class GraphAnalysis {
public:
    GraphAnalysis(const Graph& g, std::string graph_id, VerifyOptions opts = {});

    const Graph& graph() const noexcept { return *graph_; }
    const std::string& id() const noexcept { return id_; }
    const VerifyOptions& options() const noexcept { return opts_; }

    const MetricResult& vat();
    const MetricResult& conductance();
    const SpectralResult& spectrum();
    // Throws NotRegular for irregular graphs.
    int degree();

    TheoremReport make_report(Theorem t) const;

private:
    const Graph* graph_;
    std::string id_;
    VerifyOptions opts_;
    std::optional<MetricResult> vat_;
    std::optional<MetricResult> conductance_;
    std::optional<SpectralResult> spectrum_;
};

// Each check requires a connected graph within the enumeration limit; every
// check except check_remarks also requires regularity.
std::vector<TheoremReport> check_cheeger(GraphAnalysis& a);
std::vector<TheoremReport> check_thm12(GraphAnalysis& a);
TheoremReport check_thm13(GraphAnalysis& a);
std::vector<TheoremReport> check_cor14(GraphAnalysis& a);
TheoremReport check_lemma23(GraphAnalysis& a);
std::vector<TheoremReport> check_proof_facts(GraphAnalysis& a);
std::vector<TheoremReport> check_remarks(GraphAnalysis& a);

// Mediant (a+b)/(x+y) of a/x and b/y; all four inputs must be positive.
Fraction mediant_between(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y);

// Whether c <= sum(a_i) / sum(b_i) for a nonempty list of positive pairs.
bool series_lower_bound(std::span<const std::pair<std::int64_t, std::int64_t>> pairs, const Fraction& c);

enum class CheckGroup { cheeger, thm12, thm13, cor14, lemma23, proof_facts, remarks };

std::string_view to_string(CheckGroup c);
std::vector<CheckGroup> all_checks();
// "all" or a comma-separated list of group names.
std::vector<CheckGroup> parse_checks(std::string_view text);
// Theorems a group can emit, in emission order.
std::vector<Theorem> theorems_of(CheckGroup c);

struct CorpusEntry {
    std::string id;
    Graph graph;
};

struct SuiteSummary {
    std::size_t graphs = 0;
    std::size_t reports = 0;
    std::size_t holds = 0;
    std::size_t strict = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
    // (graph id, theorem) for every report that holds only with equality.
    std::vector<std::pair<std::string, Theorem>> equalities;
};

struct SuiteResult {
    std::vector<TheoremReport> reports;
    SuiteSummary summary;

    bool all_hold() const noexcept { return summary.failed == 0; }
};

// Runs the selected checks on every graph. Preconditions that fail become
// skipped reports; output order follows input order for any job count.
SuiteResult run_suite(std::span<const CorpusEntry> graphs, std::span<const CheckGroup> checks,
                      const VerifyOptions& opts = {}, unsigned jobs = 1);

} // namespace vat
