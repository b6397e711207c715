#include "vatcli/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace vatcli {

double decimal12(double x) { return std::strtod(format12(x).c_str(), nullptr); }

std::string format12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json to_json(const vat::Fraction& f) {
    return {{"num", f.num()}, {"den", f.den()}, {"decimal", decimal12(f.to_double())}};
}

json to_json(const vat::VertexSet& s) { return s.members(); }

json to_json(const vat::Quantity& q) {
    if (q.exact)
        return {{"num", q.exact->num()}, {"den", q.exact->den()}, {"real", decimal12(q.real)}};
    return {{"real", decimal12(q.real)}};
}

json to_json(const vat::TheoremReport& r) {
    json j;
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["d"] = r.d ? json(*r.d) : json(nullptr);
    j["theorem"] = std::string(vat::to_string(r.theorem));
    if (r.skipped) {
        j["skipped"] = *r.skipped;
        return j;
    }
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["holds"] = r.holds;
    j["strict_holds"] = r.strict_holds;
    j["slack"] = decimal12(r.slack);
    json w = json::array();
    for (const auto& s : r.witnesses)
        w.push_back(to_json(s));
    j["witnesses"] = std::move(w);
    return j;
}

json to_json(const vat::SuiteSummary& s) {
    json eq = json::array();
    for (const auto& [id, thm] : s.equalities)
        eq.push_back({{"graph_id", id}, {"theorem", std::string(vat::to_string(thm))}});
    return {{"graphs", s.graphs},   {"reports", s.reports}, {"holds", s.holds},     {"strict_holds", s.strict},
            {"skipped", s.skipped}, {"failed", s.failed},   {"equalities", std::move(eq)}};
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + '"';
}

namespace {

std::string quantity_cells(const vat::Quantity& q) {
    std::string out;
    if (q.exact)
        out = std::to_string(q.exact->num()) + "," + std::to_string(q.exact->den()) + ",";
    else
        out = ",,";
    return out + format12(q.real);
}

std::string witness_cell(const std::vector<vat::VertexSet>& sets) {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i > 0)
            out += '|';
        bool first = true;
        for (int v : sets[i].members()) {
            if (!first)
                out += ' ';
            out += std::to_string(v);
            first = false;
        }
    }
    return out;
}

std::string members_cell(const vat::VertexSet& s) { return witness_cell({s}); }

} // namespace

std::string csv_row(const vat::TheoremReport& r) {
    std::string row = csv_field(r.graph_id) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
                      (r.d ? std::to_string(*r.d) : std::string()) + "," + std::string(vat::to_string(r.theorem)) + ",";
    if (r.skipped)
        return row + ",,,,,,skipped,skipped,,";
    row += quantity_cells(r.lhs) + "," + quantity_cells(r.rhs) + ",";
    row += std::string(r.holds ? "true" : "false") + "," + (r.strict_holds ? "true" : "false") + ",";
    row += format12(r.slack) + "," + witness_cell(r.witnesses);
    return row;
}

void write_reports_json(std::ostream& out, const vat::SuiteResult& result) {
    json reports = json::array();
    for (const auto& r : result.reports)
        reports.push_back(to_json(r));
    json doc = {{"reports", std::move(reports)}, {"summary", to_json(result.summary)}};
    out << doc.dump(2) << '\n';
}

void write_reports_csv(std::ostream& out, const vat::SuiteResult& result) {
    out << kReportCsvHeader << '\n';
    for (const auto& r : result.reports)
        out << csv_row(r) << '\n';
}

json to_json(const MetricsRecord& r) {
    json j;
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["d"] = r.d ? json(*r.d) : json(nullptr);
    if (r.vat)
        j["vat"] = {{"value", to_json(r.vat->value)}, {"witness", to_json(r.vat->witness)}};
    if (r.conductance)
        j["conductance"] = {{"value", to_json(r.conductance->value)}, {"witness", to_json(r.conductance->witness)}};
    if (r.spectrum)
        j["lambda2"] = {{"lambda2", decimal12(r.spectrum->lambda2)},
                        {"gap", decimal12(r.spectrum->gap)},
                        {"residual", r.spectrum->residual}};
    if (r.sweep)
        j["sweep_conductance"] = {{"value", to_json(r.sweep->exact)}, {"witness", to_json(r.sweep->witness)}};
    auto weighted = [](const vat::WeightedValue& w) {
        json v = w.exact ? to_json(*w.exact) : json{{"decimal", decimal12(w.value)}};
        return json{{"value", v}, {"witness", to_json(w.witness)}};
    };
    if (r.alpha_beta_vat && r.alpha_beta) {
        j["alpha_beta_vat"] = weighted(*r.alpha_beta_vat);
        j["alpha_beta_vat"]["alpha"] = r.alpha_beta->alpha;
        j["alpha_beta_vat"]["beta"] = r.alpha_beta->beta;
    }
    if (r.weighted_vat)
        j["weighted_vat"] = weighted(*r.weighted_vat);
    return j;
}

void write_metrics_json(std::ostream& out, const MetricsRecord& r) { out << to_json(r).dump(2) << '\n'; }

void write_metrics_csv(std::ostream& out, const MetricsRecord& r) {
    const std::string prefix = csv_field(r.graph_id) + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," +
                               (r.d ? std::to_string(*r.d) : std::string()) + ",";
    auto exact_row = [&](const char* name, const vat::Fraction& f, const vat::VertexSet& w) {
        out << prefix << name << ',' << f.num() << ',' << f.den() << ',' << format12(f.to_double()) << ','
            << members_cell(w) << '\n';
    };
    auto weighted_row = [&](const char* name, const vat::WeightedValue& v) {
        if (v.exact)
            exact_row(name, *v.exact, v.witness);
        else
            out << prefix << name << ",,," << format12(v.value) << ',' << members_cell(v.witness) << '\n';
    };

    out << kMetricsCsvHeader << '\n';
    if (r.vat)
        exact_row("vat", r.vat->value, r.vat->witness);
    if (r.conductance)
        exact_row("conductance", r.conductance->value, r.conductance->witness);
    if (r.spectrum) {
        out << prefix << "lambda2,,," << format12(r.spectrum->lambda2) << ",\n";
        out << prefix << "spectral_gap,,," << format12(r.spectrum->gap) << ",\n";
    }
    if (r.sweep)
        exact_row("sweep_conductance", r.sweep->exact, r.sweep->witness);
    if (r.alpha_beta_vat)
        weighted_row("alpha_beta_vat", *r.alpha_beta_vat);
    if (r.weighted_vat)
        weighted_row("weighted_vat", *r.weighted_vat);
}

} // namespace vatcli
