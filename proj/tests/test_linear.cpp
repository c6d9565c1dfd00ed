#include "chx/linear.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace chx;

namespace {

LinearSystem hodge_partner_system(bool with_extra) {
    // The two constraints a homeomorphism imposes on the unknown middle
    // Hodge numbers (a, b, c): rank 2a + 2b + c = 23 and signature
    // 2a - 2b + c = 19.
    LinearSystem s;
    s.add_variable("a");
    s.add_variable("b");
    s.add_variable("c");
    s.add_equation({{"a", Rational(2)}, {"b", Rational(2)}, {"c", Rational(1)}}, Rational(23),
                   "rank");
    s.add_equation({{"a", Rational(2)}, {"b", Rational(-2)}, {"c", Rational(1)}}, Rational(19),
                   "signature");
    if (with_extra) {
        s.add_equation({{"a", Rational(1)}}, Rational(0), "no (4,0) classes");
    }
    return s;
}

}  // namespace

TEST_CASE("unique solution") {
    const LinearSolution sol = solve_linear(hodge_partner_system(true));
    REQUIRE(sol.kind == LinearSolution::Kind::unique);
    CHECK(sol.values.at("a") == 0);
    CHECK(sol.values.at("b") == 1);
    CHECK(sol.values.at("c") == 21);
}

TEST_CASE("parametrized solution") {
    const LinearSolution sol = solve_linear(hodge_partner_system(false));
    REQUIRE(sol.kind == LinearSolution::Kind::parametrized);
    REQUIRE(sol.free_variables == std::vector<std::string>{"c"});
    const AffineExpr& a = sol.pivot_expressions.at("a");
    CHECK(a.constant == Rational(21, 2));
    CHECK(a.coeffs.at("c") == Rational(-1, 2));
    const AffineExpr& b = sol.pivot_expressions.at("b");
    CHECK(b.constant == 1);
    CHECK(b.coeffs.count("c") == 0);
}

TEST_CASE("inconsistent system") {
    LinearSystem s;
    s.add_variable("x");
    s.add_variable("y");
    s.add_equation({{"x", Rational(1)}, {"y", Rational(1)}}, Rational(1));
    s.add_equation({{"x", Rational(1)}, {"y", Rational(1)}}, Rational(2));
    const LinearSolution sol = solve_linear(s);
    REQUIRE(sol.kind == LinearSolution::Kind::inconsistent);
    CHECK(sol.inconsistent_rows == std::vector<int>{1});
}

TEST_CASE("relations among designated targets") {
    LinearSystem s;
    s.add_variable("p");
    s.add_variable("q");
    s.add_variable("r");
    s.add_equation({{"p", Rational(1)}, {"r", Rational(1)}}, Rational(5));
    s.add_equation({{"q", Rational(1)}, {"r", Rational(2)}}, Rational(7));
    const LinearSolution sol = solve_linear(s, {"p", "q"});
    REQUIRE(sol.kind == LinearSolution::Kind::parametrized);
    REQUIRE(sol.relations.size() == 1);
    // Eliminating r leaves -2p + q = -3; canonically p - q/2 = 3/2.
    const AffineExpr& rel = sol.relations[0];
    CHECK(rel.coeffs.at("p") == 1);
    CHECK(rel.coeffs.at("q") == Rational(-1, 2));
    CHECK(rel.constant == Rational(-3, 2));
    REQUIRE(sol.reduced_rows.size() == 1);
    CHECK(sol.reduced_rows[0].first == 1);
    CHECK(sol.reduced_rows[0].second.coeffs.at("p") == -2);

    // The canonical relation must not depend on equation order.
    LinearSystem permuted;
    permuted.add_variable("p");
    permuted.add_variable("q");
    permuted.add_variable("r");
    permuted.add_equation({{"q", Rational(1)}, {"r", Rational(2)}}, Rational(7));
    permuted.add_equation({{"p", Rational(1)}, {"r", Rational(1)}}, Rational(5));
    CHECK(solve_linear(permuted, {"p", "q"}).relations == sol.relations);
}

TEST_CASE("targets are eliminated last") {
    LinearSystem s;
    s.add_variable("x");
    s.add_variable("z");
    s.add_equation({{"x", Rational(1)}, {"z", Rational(1)}}, Rational(1));
    s.add_equation({{"z", Rational(1)}}, Rational(1));
    const LinearSolution sol = solve_linear(s, {"x"});
    REQUIRE(sol.relations.size() == 1);
    CHECK(sol.relations[0].coeffs.at("x") == 1);
    CHECK(sol.relations[0].constant == 0);
    CHECK(to_string(sol.relations[0]) == "x");
}

TEST_CASE("declaration and input guards") {
    LinearSystem s;
    s.add_variable("x");
    CHECK_THROWS_AS(s.add_variable("x"), std::invalid_argument);
    CHECK_THROWS_AS(s.add_equation({{"monster", Rational(1)}}, Rational(0)),
                    std::invalid_argument);
    s.add_equation({{"x", Rational(2)}}, Rational(4));
    CHECK_THROWS_AS(s.add_variable("y"), std::invalid_argument);
    CHECK_THROWS_AS((void)solve_linear(s, {"ghost"}), std::invalid_argument);
    CHECK(s.equation_text(0) == "2*x = 4");
}
