#include "chx/report.hpp"

#include "chx/deduce.hpp"
#include "chx/genus.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace chx {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kUnavailable = "n/a";

std::string num(const Rational& q) { return to_string(q); }

std::string escape_cell(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        if (c == '|') {
            out += "\\|";
        } else {
            out += c;
        }
    }
    return out;
}

// One invariant row: a label plus a per-record cell function that answers
// with a string or declines.
struct RowSpec {
    std::string label;
    std::function<std::optional<std::string>(const ManifoldRecord&)> cell;
};

std::optional<std::string> betti_cell(const ManifoldRecord& x, int k) {
    try {
        return std::to_string(record_betti(x, k));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<std::string> euler_cell(const ManifoldRecord& x) {
    try {
        return num(record_euler(x));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<std::string> signature_cell(const ManifoldRecord& x) {
    if (x.hodge && x.dim % 2 == 0) {
        return std::to_string(signature_from_hodge(*x.hodge));
    }
    if (const auto it = x.stored.find("signature"); it != x.stored.end()) {
        return num(it->second);
    }
    if (x.model && x.dim % 2 == 0) {
        try {
            return num(l_genus_signature(*x.model));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<std::string> legacy_signature_cell(const ManifoldRecord& x) {
    if (x.hodge && x.dim == 4) {
        return std::to_string(signature_from_hodge_legacy(*x.hodge));
    }
    if (const auto it = x.stored.find("signature_reported"); it != x.stored.end()) {
        return num(it->second);
    }
    return std::nullopt;
}

std::optional<std::string> middle_hodge_cell(const ManifoldRecord& x) {
    if (!x.hodge) {
        return std::nullopt;
    }
    std::string out = "(";
    for (int q = 0; q <= x.dim; ++q) {
        if (q > 0) {
            out += ", ";
        }
        out += std::to_string(x.hodge->hodge(x.dim - q, q));
    }
    return out + ")";
}

std::optional<std::string> chern_cell(const ManifoldRecord& x, const Partition& shape) {
    if (!x.model) {
        return std::nullopt;
    }
    try {
        return num(chern_number(*x.model, shape));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<std::string> sw_total_cell(const ManifoldRecord& x) {
    if (!x.model) {
        return std::nullopt;
    }
    try {
        return to_string(stiefel_whitney_total(*x.model));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<std::string> sw_number_cell(const ManifoldRecord& x, const Partition& shape) {
    if (!x.model) {
        return std::nullopt;
    }
    try {
        return std::to_string(stiefel_whitney_numbers(*x.model).at(shape));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<std::string> chi_cell(const ManifoldRecord& x) {
    if (x.hodge) {
        return std::to_string(chi_structure_sheaf(*x.hodge));
    }
    if (x.model) {
        try {
            return num(hrr_chi(*x.model, 0));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    if (const auto it = x.stored.find("chi0"); it != x.stored.end()) {
        return num(it->second);
    }
    return std::nullopt;
}

std::optional<std::string> degree_cell(const ManifoldRecord& x) {
    if (x.model) {
        return num(degree(*x.model));
    }
    if (const auto it = x.stored.find("degree"); it != x.stored.end()) {
        return num(it->second);
    }
    return std::nullopt;
}

std::optional<std::string> w2_cell(const ManifoldRecord& x) {
    if (x.model) {
        return w2_vanishes(*x.model) ? "yes" : "no";
    }
    if (x.tags.count("K_trivial") != 0 || x.tags.count("k_two_divisible") != 0) {
        return "yes";
    }
    return std::nullopt;
}

std::optional<std::string> pontrjagin_cell(const ManifoldRecord& x, const Partition& shape) {
    if (x.dim != 4 || !x.model) {
        return std::nullopt;
    }
    try {
        return num(pontrjagin_numbers(*x.model).at(shape));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// The fixed row order.  The topological subset is what the comparison
// verdict may cite: Chern numbers, chi(O), the Hodge row and the degree
// travel with the complex structure and the polarization, not with the
// underlying oriented manifold; Betti and Pontrjagin numbers, the signature
// and the Stiefel-Whitney parities do transfer.
std::vector<RowSpec> row_specs(int betti_through, bool topological_only) {
    std::vector<RowSpec> specs;
    specs.push_back({"dimension", [](const ManifoldRecord& x) {
                         return std::optional<std::string>(std::to_string(x.dim));
                     }});
    for (int k = 1; k <= betti_through; ++k) {
        specs.push_back({"b_" + std::to_string(k),
                         [k](const ManifoldRecord& x) { return betti_cell(x, k); }});
    }
    specs.push_back({"euler", euler_cell});
    specs.push_back({"signature", signature_cell});
    if (!topological_only) {
        specs.push_back({"signature (legacy count)", legacy_signature_cell});
        specs.push_back({"chi(O)", chi_cell});
        specs.push_back({"degree", degree_cell});
        specs.push_back({"middle hodge row", middle_hodge_cell});
        for (const Partition& shape : Partition::all_of_weight(betti_through)) {
            specs.push_back({"c_" + shape.to_string(),
                             [shape](const ManifoldRecord& x) { return chern_cell(x, shape); }});
        }
    }
    specs.push_back({"w_2 = 0", w2_cell});
    if (betti_through == 4) {
        specs.push_back({"p_1^2", [](const ManifoldRecord& x) {
                             return pontrjagin_cell(x, Partition{1, 1});
                         }});
        specs.push_back(
            {"p_2", [](const ManifoldRecord& x) { return pontrjagin_cell(x, Partition{2}); }});
    }
    if (!topological_only) {
        specs.push_back({"w (mod 2)", sw_total_cell});
    }
    for (const Partition& shape : Partition::all_of_weight(betti_through)) {
        specs.push_back({"w_" + shape.to_string(),
                         [shape](const ManifoldRecord& x) { return sw_number_cell(x, shape); }});
    }
    return specs;
}

std::string cell_or_na(const std::optional<std::string>& cell) {
    return cell.value_or(kUnavailable);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

}  // namespace

std::string render_markdown(const Report& report) {
    std::ostringstream out;
    out << "# " << report.title << "\n";
    for (const std::string& note : report.notes) {
        out << "\n" << note << "\n";
    }
    for (const ReportTable& table : report.tables) {
        out << "\n## " << table.title << "\n\n";
        out << "|";
        for (const std::string& column : table.columns) {
            out << " " << escape_cell(column) << " |";
        }
        out << "\n|";
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            out << " --- |";
        }
        out << "\n";
        for (const ReportRow& row : table.rows) {
            out << "| " << escape_cell(row.label) << " |";
            for (const std::string& cell : row.cells) {
                out << " " << escape_cell(cell) << " |";
            }
            out << "\n";
        }
    }
    if (!report.failures.empty()) {
        out << "\n## failures\n\n";
        for (const std::string& failure : report.failures) {
            out << "- " << failure << "\n";
        }
    }
    return out.str();
}

std::string render_json(const Report& report) {
    ordered_json j;
    j["title"] = report.title;
    j["notes"] = report.notes;
    j["tables"] = ordered_json::array();
    for (const ReportTable& table : report.tables) {
        ordered_json t;
        t["title"] = table.title;
        t["columns"] = table.columns;
        t["rows"] = ordered_json::array();
        for (const ReportRow& row : table.rows) {
            ordered_json r;
            r["label"] = row.label;
            r["cells"] = row.cells;
            t["rows"].push_back(std::move(r));
        }
        j["tables"].push_back(std::move(t));
    }
    j["failures"] = report.failures;
    return j.dump(2) + "\n";
}

Report invariants_report(const ManifoldRecord& x) {
    Report report;
    report.title = "invariants: " + x.name;
    if (!x.tags.empty()) {
        report.notes.push_back("tags: " + join({x.tags.begin(), x.tags.end()}, ", "));
    }
    ReportTable table;
    table.title = "invariants";
    table.columns = {"invariant", x.name};
    for (const RowSpec& spec : row_specs(x.dim, false)) {
        table.rows.push_back({spec.label, {cell_or_na(spec.cell(x))}});
    }
    report.tables.push_back(std::move(table));
    return report;
}

Report compare_report(const ManifoldRecord& a, const ManifoldRecord& b) {
    Report report;
    report.title = "compare: " + a.name + " vs " + b.name;

    ReportTable table;
    table.title = "topological invariants";
    table.columns = {"invariant", a.name, b.name};

    std::optional<std::string> verdict;
    for (const RowSpec& spec : row_specs(std::max(a.dim, b.dim), true)) {
        const std::optional<std::string> left = spec.cell(a);
        const std::optional<std::string> right = spec.cell(b);
        table.rows.push_back({spec.label, {cell_or_na(left), cell_or_na(right)}});
        if (!verdict && left && right && *left != *right) {
            verdict = "obstructed: " + spec.label + " = " + *left + " vs " + *right;
        }
    }
    report.tables.push_back(std::move(table));
    report.notes.push_back(
        verdict ? *verdict : std::string("no obstruction found among computed invariants"));
    return report;
}

Report deduction_report(const DeductionTrace& trace) {
    Report report;
    report.title = "deduction: " + trace.pipeline + " on " + trace.subject;
    report.notes.push_back("verdict: " + trace.verdict.statement);
    for (const std::string& solution : trace.verdict.solutions) {
        report.notes.push_back("solution: " + solution);
    }

    ReportTable table;
    table.title = "steps";
    table.columns = {"step", "justification", "claim", "values"};
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const TraceStep& step = trace.steps[i];
        std::vector<std::string> rendered;
        for (const TraceValue& v : step.values) {
            rendered.push_back(v.label + " = " + num(v.value));
        }
        table.rows.push_back({std::to_string(i + 1),
                              {std::string(to_string(step.tag)), step.claim,
                               join(rendered, "; ")}});
    }
    report.tables.push_back(std::move(table));
    return report;
}

RecordSet builtin_record_set() {
    RecordSet set;
    for (const std::string& name : builtin_names()) {
        set.records.push_back(build_builtin(name));
    }
    return set;
}

Report report_all(const RecordSet& set) {
    Report report;
    report.title = "obstruction calculus report";

    ReportTable catalog;
    catalog.title = "catalog";
    catalog.columns = {"record", "dimension", "euler", "signature", "status"};
    for (const ManifoldRecord& record : set.records) {
        const std::vector<std::string> problems = validate_record(record);
        std::string status = "ok";
        if (!problems.empty()) {
            status = "FAIL: " + problems.front();
            report.failures.push_back("record " + record.name + ": " + join(problems, "; "));
        }
        catalog.rows.push_back({record.name,
                                {std::to_string(record.dim), cell_or_na(euler_cell(record)),
                                 cell_or_na(signature_cell(record)), status}});
    }
    for (const auto& [file, error] : set.load_errors) {
        catalog.rows.push_back(
            {file, {kUnavailable, kUnavailable, kUnavailable, "FAIL: " + error}});
        report.failures.push_back("catalog file " + file + ": " + error);
    }
    report.tables.push_back(std::move(catalog));

    std::map<std::string, ManifoldRecord> overlay;
    for (const ManifoldRecord& record : set.records) {
        overlay.emplace(record.name, record);
    }
    const RecordResolver resolver = [&overlay](const std::string& name) {
        if (const auto it = overlay.find(name); it != overlay.end()) {
            return it->second;
        }
        return build_builtin(name);
    };

    ReportTable pinned;
    pinned.title = "pinned deductions";
    pinned.columns = {"pipeline", "target", "verdict", "status"};
    for (const VerdictPin& pin : verdict_pins()) {
        std::string verdict = kUnavailable;
        std::string status = "ok";
        try {
            const DeductionTrace trace = run_pipeline(pin.pipeline, pin.target, resolver);
            verdict = trace.verdict.statement;
            if (trace.verdict.statement != pin.statement) {
                status = "FAIL: verdict drifted";
                report.failures.push_back("pipeline " + pin.pipeline + " on " + pin.target +
                                          ": expected \"" + pin.statement + "\", got \"" +
                                          trace.verdict.statement + "\"");
            }
        } catch (const std::exception& e) {
            status = std::string("FAIL: ") + e.what();
            report.failures.push_back("pipeline " + pin.pipeline + " on " + pin.target + ": " +
                                      e.what());
        }
        pinned.rows.push_back({pin.pipeline, {pin.target, verdict, status}});
    }
    report.tables.push_back(std::move(pinned));

    report.notes.push_back(report.failures.empty()
                               ? std::string("all checks pass")
                               : "failures: " + std::to_string(report.failures.size()));
    return report;
}

}  // namespace chx
