#pragma once

#include "chx/catalog.hpp"
#include "chx/trace.hpp"

#include <string>
#include <utility>
#include <vector>

// The rendering layer: invariant tables, side-by-side comparisons and
// replayed deduction traces, emitted as Markdown or JSON.  Rendering is
// deterministic; the same inputs produce the same bytes.

namespace chx {

struct ReportRow {
    std::string label;
    std::vector<std::string> cells;
    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportTable {
    std::string title;
    std::vector<std::string> columns;  // header row, label column included
    std::vector<ReportRow> rows;       // each row carries columns.size() - 1 cells
    friend bool operator==(const ReportTable&, const ReportTable&) = default;
};

struct Report {
    std::string title;
    std::vector<std::string> notes;
    std::vector<ReportTable> tables;
    std::vector<std::string> failures;  // regressions; the CLI maps non-empty to exit 1
    friend bool operator==(const Report&, const Report&) = default;
};

[[nodiscard]] std::string render_markdown(const Report& report);
[[nodiscard]] std::string render_json(const Report& report);

// One invariant column for one record: dimension, Betti numbers through the
// middle, Euler number, signature, chi(O), degree, w_2 and the dimension-4
// Pontrjagin numbers.  Rows the record cannot answer read "n/a".
[[nodiscard]] Report invariants_report(const ManifoldRecord& x);

// Two records side by side over the topological rows only, in fixed order;
// the first row both sides answer differently decides the verdict.
[[nodiscard]] Report compare_report(const ManifoldRecord& a, const ManifoldRecord& b);

[[nodiscard]] Report deduction_report(const DeductionTrace& trace);

struct RecordSet {
    std::vector<ManifoldRecord> records;
    // file -> error, for catalog files that refused to load; they become
    // failure rows instead of aborting the report.
    std::vector<std::pair<std::string, std::string>> load_errors;
};

[[nodiscard]] RecordSet builtin_record_set();

// Catalog validation plus every pinned deduction re-run against its pinned
// verdict.  Records in the set shadow builtins of the same name when the
// pipelines resolve their subjects.
[[nodiscard]] Report report_all(const RecordSet& set);

}  // namespace chx
