#pragma once

#include "chx/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace chx {

// Affine form  constant + sum_i coeffs[v_i] * v_i.  Used both for pivot
// expressions (var = expr over the free variables) and for relations
// (expr = 0 on the whole solution set).
struct AffineExpr {
    Rational constant;
    std::map<std::string, Rational> coeffs;

    [[nodiscard]] bool operator==(const AffineExpr&) const = default;
};

[[nodiscard]] std::string to_string(const AffineExpr& e);

// Exact linear system over Q.  Variable declaration order is semantic: the
// solver eliminates in that order and reports results in it, so a given
// system always reduces the same way.
class LinearSystem {
public:
    void add_variable(const std::string& name);

    // Unknown variable names throw; rows may omit variables (coefficient 0).
    void add_equation(const std::map<std::string, Rational>& coeffs, const Rational& rhs,
                      const std::string& label = "");

    [[nodiscard]] const std::vector<std::string>& variables() const { return variables_; }
    [[nodiscard]] int equation_count() const { return static_cast<int>(rows_.size()); }
    [[nodiscard]] std::string equation_text(int row) const;

    struct Row {
        std::vector<Rational> coeffs;
        Rational rhs;
        std::string label;
    };
    [[nodiscard]] const std::vector<Row>& rows() const { return rows_; }

private:
    std::vector<std::string> variables_;
    std::map<std::string, int> index_;
    std::vector<Row> rows_;
};

struct LinearSolution {
    enum class Kind { unique, parametrized, inconsistent };
    Kind kind = Kind::inconsistent;

    // kind == unique
    std::map<std::string, Rational> values;

    // kind == parametrized: pivot variable -> expression in the free variables
    std::map<std::string, AffineExpr> pivot_expressions;
    std::vector<std::string> free_variables;

    // Relations among the designated target variables, valid on the whole
    // solution set.  `relations` is the canonical reduced basis (leading
    // coefficient 1, reduced against each other, ordered by leading target),
    // independent of the order the equations were added in.  `reduced_rows`
    // keeps the raw eliminated rows keyed by original equation index, with
    // whatever scaling the elimination produced; that raw form is what a
    // replayed derivation quotes.
    std::vector<AffineExpr> relations;
    std::vector<std::pair<int, AffineExpr>> reduced_rows;

    std::vector<int> inconsistent_rows;
};

// Gaussian elimination over Q.  Pivots are chosen in variable declaration
// order, non-target variables first, taking for each variable the earliest
// usable equation.  `targets` designates the variables whose mutual
// relations should be reported after the others are eliminated.
[[nodiscard]] LinearSolution solve_linear(const LinearSystem& system,
                                          const std::vector<std::string>& targets = {});

}  // namespace chx
