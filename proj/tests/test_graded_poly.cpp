#include "chx/graded_poly.hpp"

#include "chx/graded.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace chx;

TEST_CASE("monomial keys are exponent partitions") {
    const GradedPolynomial x1 = GradedPolynomial::variable(6, 1);
    const GradedPolynomial x2 = GradedPolynomial::variable(6, 2);
    const GradedPolynomial product = x2 * x1 * x1;
    CHECK(product.coefficient(Partition{2, 1, 1}) == 1);
    CHECK(product.terms().size() == 1);
}

TEST_CASE("multiplication truncates above the weight bound") {
    const GradedPolynomial x3 = GradedPolynomial::variable(4, 3);
    CHECK((x3 * x3).is_zero());
    const GradedPolynomial x2 = GradedPolynomial::variable(4, 2);
    CHECK((x3 * x2).is_zero());
    CHECK(!(x2 * x2).is_zero());
}

TEST_CASE("component selects by total weight") {
    const GradedPolynomial p =
        GradedPolynomial::one(4) + GradedPolynomial::variable(4, 1) +
        GradedPolynomial::monomial(4, Partition{2, 1}, Rational(5)) +
        GradedPolynomial::monomial(4, Partition{1, 1, 1}, Rational(7));
    CHECK(p.component(0) == GradedPolynomial::one(4));
    CHECK(p.component(3).coefficient(Partition{2, 1}) == 5);
    CHECK(p.component(3).coefficient(Partition{1, 1, 1}) == 7);
    CHECK(p.component(3).coefficient(Partition{3}) == 0);
    CHECK(p.component(2).is_zero());
}

TEST_CASE("mixing truncations is an error") {
    CHECK_THROWS_AS(
        (void)(GradedPolynomial::one(3) + GradedPolynomial::one(4)), std::invalid_argument);
}

TEST_CASE("evaluation substitutes concrete classes") {
    // c1^2 + 3 c2 at c1 = 2h, c2 = 5h^2 gives 19 h^2.
    const GradedPolynomial poly =
        GradedPolynomial::monomial(2, Partition{1, 1}, Rational(1)) +
        GradedPolynomial::monomial(2, Partition{2}, Rational(3));
    const std::vector<GradedClass> values{
        GradedClass::one(2),
        GradedClass::monomial(2, 1, Rational(2)),
        GradedClass::monomial(2, 2, Rational(5)),
    };
    CHECK(evaluate(poly, values) == GradedClass::monomial(2, 2, Rational(19)));
}

TEST_CASE("evaluation rejects missing variables") {
    const GradedPolynomial poly = GradedPolynomial::variable(3, 3);
    const std::vector<GradedClass> values{GradedClass::one(3),
                                          GradedClass::monomial(3, 1, Rational(1))};
    CHECK_THROWS_AS((void)evaluate(poly, values), std::invalid_argument);
}

TEST_CASE("pairing evaluation is linear in the monomials") {
    const GradedPolynomial poly =
        GradedPolynomial::monomial(4, Partition{2, 2}, Rational(3)) +
        GradedPolynomial::monomial(4, Partition{4}, Rational(-1, 2));
    const Rational value = evaluate_pairing(poly, [](const Partition& shape) {
        if (shape == Partition{2, 2}) {
            return Rational(10);
        }
        if (shape == Partition{4}) {
            return Rational(4);
        }
        return Rational(0);
    });
    CHECK(value == 28);
}

TEST_CASE("rendering uses caret powers and the symbol family") {
    const GradedPolynomial p = GradedPolynomial::one(4) +
                               GradedPolynomial::monomial(4, Partition{1, 1}, Rational(1, 12)) +
                               GradedPolynomial::monomial(4, Partition{2}, Rational(1, 12));
    CHECK(to_string(p) == "1 + 1/12*c1^2 + 1/12*c2");
    CHECK(to_string(GradedPolynomial::variable(2, 2), "p") == "p2");
}
