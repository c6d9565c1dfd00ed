#include "chx/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace chx {

namespace {

struct WorkRow {
    std::vector<Rational> coeffs;
    Rational rhs;
    int original = 0;
    bool used_as_pivot = false;

    [[nodiscard]] bool zero_on(const std::vector<int>& vars) const {
        return std::all_of(vars.begin(), vars.end(),
                           [this](int v) { return coeffs[v] == 0; });
    }
};

std::string format_term(const std::string& var, const Rational& coeff, bool leading) {
    std::string out;
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (leading) {
        if (negative) {
            out += "-";
        }
    } else {
        out += negative ? " - " : " + ";
    }
    if (magnitude == 1 && !var.empty()) {
        out += var;
    } else if (var.empty()) {
        out += to_string(magnitude);
    } else {
        out += to_string(magnitude) + "*" + var;
    }
    return out;
}

}  // namespace

std::string to_string(const AffineExpr& e) {
    std::string out;
    for (const auto& [var, coeff] : e.coeffs) {
        if (coeff == 0) {
            continue;
        }
        out += format_term(var, coeff, out.empty());
    }
    if (e.constant != 0 || out.empty()) {
        out += format_term("", e.constant, out.empty());
    }
    return out;
}

void LinearSystem::add_variable(const std::string& name) {
    if (index_.count(name)) {
        throw std::invalid_argument("variable \"" + name + "\" declared twice");
    }
    if (!rows_.empty()) {
        throw std::invalid_argument("variables must be declared before equations");
    }
    index_[name] = static_cast<int>(variables_.size());
    variables_.push_back(name);
}

void LinearSystem::add_equation(const std::map<std::string, Rational>& coeffs,
                                const Rational& rhs, const std::string& label) {
    Row row;
    row.coeffs.assign(variables_.size(), Rational(0));
    for (const auto& [name, value] : coeffs) {
        const auto it = index_.find(name);
        if (it == index_.end()) {
            throw std::invalid_argument("equation uses undeclared variable \"" + name + "\"");
        }
        row.coeffs[it->second] = value;
    }
    row.rhs = rhs;
    row.label = label;
    rows_.push_back(std::move(row));
}

std::string LinearSystem::equation_text(int row) const {
    const Row& r = rows_.at(row);
    std::string out;
    for (std::size_t v = 0; v < variables_.size(); ++v) {
        if (r.coeffs[v] == 0) {
            continue;
        }
        out += format_term(variables_[v], r.coeffs[v], out.empty());
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " = " + to_string(r.rhs);
}

LinearSolution solve_linear(const LinearSystem& system, const std::vector<std::string>& targets) {
    const auto& variables = system.variables();
    const int nvars = static_cast<int>(variables.size());

    std::vector<bool> is_target(nvars, false);
    for (const auto& name : targets) {
        const auto it = std::find(variables.begin(), variables.end(), name);
        if (it == variables.end()) {
            throw std::invalid_argument("unknown target variable \"" + name + "\"");
        }
        is_target[it - variables.begin()] = true;
    }

    std::vector<int> non_target_order;
    std::vector<int> target_order;
    for (int v = 0; v < nvars; ++v) {
        (is_target[v] ? target_order : non_target_order).push_back(v);
    }

    std::vector<WorkRow> work;
    work.reserve(system.rows().size());
    for (std::size_t i = 0; i < system.rows().size(); ++i) {
        const auto& row = system.rows()[i];
        work.push_back({row.coeffs, row.rhs, static_cast<int>(i), false});
    }

    std::vector<int> pivot_for(nvars, -1);
    const auto eliminate = [&work, &pivot_for](int var) {
        WorkRow* pivot = nullptr;
        for (auto& row : work) {
            if (!row.used_as_pivot && row.coeffs[var] != 0) {
                pivot = &row;
                break;
            }
        }
        if (pivot == nullptr) {
            return;
        }
        pivot->used_as_pivot = true;
        pivot_for[var] = static_cast<int>(pivot - work.data());
        for (auto& row : work) {
            if (&row == pivot || row.coeffs[var] == 0) {
                continue;
            }
            const Rational factor = row.coeffs[var] / pivot->coeffs[var];
            for (std::size_t v = 0; v < row.coeffs.size(); ++v) {
                row.coeffs[v] -= factor * pivot->coeffs[v];
            }
            row.rhs -= factor * pivot->rhs;
        }
    };

    for (int v : non_target_order) {
        eliminate(v);
    }

    LinearSolution solution;

    // Rows already free of every non-target variable carry the relations
    // among the targets.  Record them now, before target elimination
    // rewrites them.
    std::vector<std::vector<Rational>> relation_matrix;
    for (const auto& row : work) {
        if (row.used_as_pivot || !row.zero_on(non_target_order)) {
            continue;
        }
        const bool all_zero = row.zero_on(target_order);
        if (all_zero) {
            continue;  // 0 = 0 rows are dropped; 0 = c surfaces as inconsistency below
        }
        AffineExpr raw;
        raw.constant = -row.rhs;
        for (int v : target_order) {
            if (row.coeffs[v] != 0) {
                raw.coeffs[variables[v]] = row.coeffs[v];
            }
        }
        solution.reduced_rows.emplace_back(row.original, raw);

        std::vector<Rational> mrow;
        mrow.reserve(target_order.size() + 1);
        for (int v : target_order) {
            mrow.push_back(row.coeffs[v]);
        }
        mrow.push_back(-row.rhs);
        relation_matrix.push_back(std::move(mrow));
    }

    // Reduced row echelon form over the targets gives a canonical basis of
    // the relation space, independent of equation order.
    {
        const std::size_t cols = target_order.size();
        std::size_t pivot_row = 0;
        for (std::size_t col = 0; col < cols && pivot_row < relation_matrix.size(); ++col) {
            std::size_t found = pivot_row;
            while (found < relation_matrix.size() && relation_matrix[found][col] == 0) {
                ++found;
            }
            if (found == relation_matrix.size()) {
                continue;
            }
            std::swap(relation_matrix[pivot_row], relation_matrix[found]);
            auto& prow = relation_matrix[pivot_row];
            const Rational lead = prow[col];
            for (auto& entry : prow) {
                entry /= lead;
            }
            for (std::size_t r = 0; r < relation_matrix.size(); ++r) {
                if (r == pivot_row || relation_matrix[r][col] == 0) {
                    continue;
                }
                const Rational factor = relation_matrix[r][col];
                for (std::size_t c = 0; c <= cols; ++c) {
                    relation_matrix[r][c] -= factor * prow[c];
                }
            }
            ++pivot_row;
        }
        for (const auto& mrow : relation_matrix) {
            const bool has_coeff =
                std::any_of(mrow.begin(), mrow.end() - 1, [](const Rational& q) { return q != 0; });
            if (!has_coeff) {
                continue;
            }
            AffineExpr rel;
            rel.constant = mrow.back();
            for (std::size_t c = 0; c < target_order.size(); ++c) {
                if (mrow[c] != 0) {
                    rel.coeffs[variables[target_order[c]]] = mrow[c];
                }
            }
            solution.relations.push_back(std::move(rel));
        }
    }

    for (int v : target_order) {
        eliminate(v);
    }

    for (const auto& row : work) {
        if (!row.used_as_pivot && row.zero_on(non_target_order) && row.zero_on(target_order) &&
            row.rhs != 0) {
            solution.inconsistent_rows.push_back(row.original);
        }
    }
    if (!solution.inconsistent_rows.empty()) {
        solution.kind = LinearSolution::Kind::inconsistent;
        return solution;
    }

    for (int v = 0; v < nvars; ++v) {
        if (pivot_for[v] < 0) {
            solution.free_variables.push_back(variables[v]);
        }
    }

    for (int v = 0; v < nvars; ++v) {
        if (pivot_for[v] < 0) {
            continue;
        }
        const WorkRow& row = work[pivot_for[v]];
        const Rational lead = row.coeffs[v];
        AffineExpr expr;
        expr.constant = row.rhs / lead;
        for (int w = 0; w < nvars; ++w) {
            if (w != v && row.coeffs[w] != 0) {
                expr.coeffs[variables[w]] = -row.coeffs[w] / lead;
            }
        }
        solution.pivot_expressions[variables[v]] = std::move(expr);
    }

    if (solution.free_variables.empty()) {
        solution.kind = LinearSolution::Kind::unique;
        for (const auto& [name, expr] : solution.pivot_expressions) {
            solution.values[name] = expr.constant;
        }
    } else {
        solution.kind = LinearSolution::Kind::parametrized;
    }
    return solution;
}

}  // namespace chx
