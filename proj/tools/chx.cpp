#include "chx/catalog.hpp"
#include "chx/deduce.hpp"
#include "chx/report.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

// Exit codes: 0 success or regression match, 1 deduction or regression
// failure, 2 usage or input error.

namespace {

using namespace chx;

struct Session {
    std::string format = "md";
    std::string catalog_dir;
    std::string out_path;
    RecordSet loaded;
};

// Reads every *.json record in the catalog directory, in filename order.
// Files that refuse to load become load_errors; only report-all surfaces
// them, the lookup commands simply fall back to the builtins.
void load_catalog(Session& session) {
    if (session.catalog_dir.empty()) {
        return;
    }
    namespace fs = std::filesystem;
    if (!fs::is_directory(session.catalog_dir)) {
        throw std::invalid_argument("catalog directory not found: " + session.catalog_dir);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(session.catalog_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
        try {
            session.loaded.records.push_back(load_record(file.string()));
        } catch (const std::exception& e) {
            session.loaded.load_errors.push_back({file.filename().string(), e.what()});
        }
    }
}

ManifoldRecord resolve(const Session& session, const std::string& name) {
    for (const ManifoldRecord& record : session.loaded.records) {
        if (record.name == name) {
            return record;
        }
    }
    return build_builtin(name);
}

// Builtins plus the loaded records, loaded ones shadowing builtins of the
// same name; the full set report-all walks.
RecordSet merged_set(const Session& session) {
    RecordSet set = builtin_record_set();
    for (const ManifoldRecord& record : session.loaded.records) {
        bool shadowed = false;
        for (ManifoldRecord& builtin : set.records) {
            if (builtin.name == record.name) {
                builtin = record;
                shadowed = true;
            }
        }
        if (!shadowed) {
            set.records.push_back(record);
        }
    }
    set.load_errors = session.loaded.load_errors;
    return set;
}

int emit(const Session& session, const Report& report) {
    const std::string text =
        session.format == "json" ? render_json(report) : render_markdown(report);
    if (session.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(session.out_path, std::ios::binary);
        if (!out) {
            throw std::invalid_argument("cannot write: " + session.out_path);
        }
        out << text;
    }
    return report.failures.empty() ? 0 : 1;
}

std::string read_pin_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot read pin file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.pop_back();
    }
    return text;
}

int run_invariants(const Session& session, const std::string& name) {
    return emit(session, invariants_report(resolve(session, name)));
}

int run_compare(const Session& session, const std::string& left, const std::string& right) {
    const ManifoldRecord a = resolve(session, left);
    const ManifoldRecord b = resolve(session, right);
    if (a.dim != b.dim) {
        throw std::invalid_argument("dimension mismatch: " + a.name + " has dimension " +
                                    std::to_string(a.dim) + ", " + b.name + " has dimension " +
                                    std::to_string(b.dim));
    }
    return emit(session, compare_report(a, b));
}

int run_deduce(const Session& session, const std::string& pipeline, const std::string& target,
               const std::string& pin_path) {
    const RecordResolver resolver = [&session](const std::string& name) {
        return resolve(session, name);
    };
    const DeductionTrace trace = run_pipeline(pipeline, target, resolver);
    Report report = deduction_report(trace);

    if (!(run_pipeline(pipeline, target, resolver) == trace)) {
        report.failures.push_back("replay mismatch: " + pipeline + " on " + target);
    }
    std::optional<std::string> pinned;
    if (!pin_path.empty()) {
        pinned = read_pin_file(pin_path);
    } else {
        pinned = expected_verdict(pipeline, target);
    }
    if (pinned && *pinned != trace.verdict.statement) {
        report.failures.push_back("pinned verdict mismatch: expected \"" + *pinned +
                                  "\", got \"" + trace.verdict.statement + "\"");
    }
    return emit(session, report);
}

int run_report_all(const Session& session) { return emit(session, report_all(merged_set(session))); }

}  // namespace

int main(int argc, char** argv) {
    Session session;

    CLI::App app{"exact characteristic-class calculus for homeomorphism obstructions"};
    app.require_subcommand(1);
    app.add_option("--format", session.format, "output format")
        ->check(CLI::IsMember({"md", "json"}))
        ->capture_default_str();
    app.add_option("--catalog", session.catalog_dir,
                   "directory of record JSON files, shadowing the builtins");
    app.add_option("--out", session.out_path, "write the report here instead of stdout");

    std::string record_name;
    CLI::App* invariants = app.add_subcommand("invariants", "invariant table for one record");
    invariants->fallthrough();
    invariants->add_option("record", record_name, "record name")->required();

    std::string left;
    std::string right;
    CLI::App* compare = app.add_subcommand("compare", "side-by-side obstruction comparison");
    compare->fallthrough();
    compare->add_option("a", left, "first record")->required();
    compare->add_option("b", right, "second record")->required();

    std::string pipeline;
    std::string target;
    std::string pin_path;
    int bb_dim = -1;
    std::string bb_chi;
    CLI::App* deduce = app.add_subcommand("deduce", "run one deduction pipeline");
    deduce->fallthrough();
    deduce->add_option("pipeline", pipeline, "pipeline name")->required();
    deduce->add_option("target", target, "pipeline target (record, \"family,d\" or \"dim,chi\")");
    deduce->add_option("--dim", bb_dim, "bb pipeline: total dimension");
    deduce->add_option("--chi", bb_chi, "bb pipeline: chi(O) of the product");
    deduce->add_option("--pin", pin_path, "file holding the expected verdict statement");

    CLI::App* all = app.add_subcommand("report-all", "validate the catalog and replay every pin");
    all->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        load_catalog(session);
        if (invariants->parsed()) {
            return run_invariants(session, record_name);
        }
        if (compare->parsed()) {
            return run_compare(session, left, right);
        }
        if (deduce->parsed()) {
            if (target.empty() && pipeline == "bb") {
                if (bb_dim < 0 || bb_chi.empty()) {
                    throw std::invalid_argument(
                        "the bb pipeline needs a \"dim,chi\" target or --dim and --chi");
                }
                target = std::to_string(bb_dim) + "," + bb_chi;
            }
            if (target.empty()) {
                throw std::invalid_argument("pipeline " + pipeline + " needs a target");
            }
            return run_deduce(session, pipeline, target, pin_path);
        }
        if (all->parsed()) {
            return run_report_all(session);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
