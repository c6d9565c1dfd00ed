#include "chx/manifold.hpp"

#include <doctest.h>

#include <stdexcept>
#include <variant>

using namespace chx;

namespace {

const GradedClass& tangent_of(const ManifoldModel& m) {
    return std::get<UnivariateModel>(m.geometry).tangent_total;
}

}  // namespace

TEST_CASE("projective plane") {
    const ManifoldModel p2 = projective_space(2);
    CHECK(p2.dim == 2);
    CHECK(p2.canonical_index == 3);
    CHECK(chern_number(p2, Partition{1, 1}) == 9);
    CHECK(chern_number(p2, Partition{2}) == 3);
    CHECK(euler_number(p2) == 3);
    CHECK(degree(p2) == 1);
    CHECK(validate_model(p2).empty());
}

TEST_CASE("P^4 Chern data") {
    const ManifoldModel p4 = projective_space(4);
    CHECK(chern_number(p4, Partition{1, 1, 1, 1}) == 625);
    CHECK(euler_number(p4) == 5);
    CHECK(!w2_vanishes(p4));
    CHECK(validate_model(p4).empty());
}

TEST_CASE("cubic fourfold tangent class and Chern numbers") {
    const ManifoldModel cubic = complete_intersection(5, {3});
    CHECK(cubic.dim == 4);
    CHECK(cubic.canonical_index == 3);
    CHECK(degree(cubic) == 3);

    const GradedClass& c = tangent_of(cubic);
    CHECK(c.coefficient(1) == 3);
    CHECK(c.coefficient(2) == 6);
    CHECK(c.coefficient(3) == 2);
    CHECK(c.coefficient(4) == 9);

    const ChernNumbersDim4 numbers = chern_numbers_dim4(cubic);
    CHECK(numbers.c14 == 243);
    CHECK(numbers.c12c2 == 162);
    CHECK(numbers.c2sq == 108);
    CHECK(numbers.c1c3 == 18);
    CHECK(numbers.c4 == 27);
    CHECK(euler_number(cubic) == 27);
    CHECK(validate_model(cubic).empty());
}

TEST_CASE("cubic fourfold Pontrjagin data") {
    const ManifoldModel cubic = complete_intersection(5, {3});
    const auto p = pontrjagin_classes(tangent_of(cubic));
    CHECK(p[1] == GradedClass::monomial(4, 2, Rational(3)));
    CHECK(p[2].coefficient(4) == 42);

    const auto numbers = pontrjagin_numbers(cubic);
    CHECK(numbers.at(Partition{1, 1}) == 27);
    CHECK(numbers.at(Partition{2}) == 126);
}

TEST_CASE("Pontrjagin classes stop at p_3") {
    CHECK_THROWS_AS((void)pontrjagin_classes(GradedClass::one(7)), std::invalid_argument);
    CHECK_THROWS_AS((void)pontrjagin_numbers(projective_space(3)), std::invalid_argument);
}

TEST_CASE("quadric fourfold") {
    const ManifoldModel quadric = complete_intersection(5, {2});
    const GradedClass& c = tangent_of(quadric);
    CHECK(c.coefficient(1) == 4);
    CHECK(c.coefficient(2) == 7);
    CHECK(c.coefficient(3) == 6);
    CHECK(c.coefficient(4) == 3);
    CHECK(euler_number(quadric) == 6);
    CHECK(degree(quadric) == 2);
    CHECK(w2_vanishes(quadric));
}

TEST_CASE("quintic threefold") {
    const ManifoldModel quintic = complete_intersection(4, {5});
    CHECK(quintic.canonical_index == 0);
    const GradedClass& c = tangent_of(quintic);
    CHECK(c.coefficient(1) == 0);
    CHECK(c.coefficient(2) == 10);
    CHECK(c.coefficient(3) == -40);
    CHECK(euler_number(quintic) == -200);
    CHECK(degree(quintic) == 5);
    CHECK(w2_vanishes(quintic));
    CHECK(validate_model(quintic).empty());
}

TEST_CASE("G(2,5) as the trivial Grassmannian section") {
    const ManifoldModel g25 = grassmannian_complete_intersection(2, 5, 0);
    CHECK(g25.dim == 6);
    CHECK(g25.canonical_index == 5);
    CHECK(euler_number(g25) == 10);
    CHECK(degree(g25) == 5);
}

TEST_CASE("degree-5 del Pezzo fourfold") {
    const ManifoldModel dp5 = grassmannian_complete_intersection(2, 5, 2);
    CHECK(dp5.dim == 4);
    CHECK(dp5.canonical_index == 3);
    CHECK(degree(dp5) == 5);
    CHECK(euler_number(dp5) == 6);
    CHECK(chern_number(dp5, Partition{1, 1, 1, 1}) == 405);
    CHECK(!w2_vanishes(dp5));
    CHECK(validate_model(dp5).empty());

    const auto& sm = std::get<SchubertModel>(dp5.geometry);
    CHECK(sm.tangent_total.component(1) ==
          SchubertClass::sigma(2, 5, Partition{1}, Rational(3)));
}

TEST_CASE("tabulated model agrees with the ring it tabulates") {
    const ManifoldModel p2 = projective_space(2);
    TabulatedModel table;
    table.pairings[{2, Partition{}}] = 1;
    table.pairings[{1, Partition{1}}] = 3;
    table.pairings[{0, Partition{1, 1}}] = 9;
    table.pairings[{0, Partition{2}}] = 3;
    ManifoldModel tabulated{"p2_table", 2, table, 3};

    CHECK(chern_numbers(tabulated) == chern_numbers(p2));
    CHECK(euler_number(tabulated) == 3);
    CHECK(degree(tabulated) == 1);
    CHECK(pairing_number(tabulated, 1, Partition{1}) == 3);
    CHECK(pairing_number(tabulated, 0, Partition{1, 1, 1}) == 0);

    TabulatedModel sparse = table;
    sparse.pairings.erase({0, Partition{2}});
    const ManifoldModel gappy{"p2_sparse", 2, sparse, 3};
    CHECK_THROWS_AS((void)pairing_number(gappy, 0, Partition{2}), std::out_of_range);
}

TEST_CASE("Stiefel-Whitney classes are mod-2 Chern classes") {
    const ManifoldModel cubic = complete_intersection(5, {3});
    const Mod2Class w = stiefel_whitney_total(cubic);
    CHECK(w.coefficient(0) == 1);
    CHECK(w.coefficient(1) == 1);
    CHECK(w.coefficient(2) == 0);
    CHECK(w.coefficient(3) == 0);
    CHECK(w.coefficient(4) == 1);

    const auto numbers = stiefel_whitney_numbers(cubic);
    CHECK(numbers.at(Partition{1, 1, 1, 1}) == 1);
    CHECK(numbers.at(Partition{2, 1, 1}) == 0);
    CHECK(numbers.at(Partition{4}) == 1);
}

TEST_CASE("w_2 reads the canonical index parity first") {
    CHECK(!w2_vanishes(complete_intersection(5, {3})));
    CHECK(w2_vanishes(complete_intersection(5, {2})));
    CHECK(w2_vanishes(complete_intersection(3, {4})));

    ManifoldModel anonymous = complete_intersection(5, {3});
    anonymous.canonical_index.reset();
    CHECK(!w2_vanishes(anonymous));
}

TEST_CASE("validation flags structural mismatches") {
    ManifoldModel wrong_truncation = projective_space(3);
    wrong_truncation.dim = 4;
    CHECK(!validate_model(wrong_truncation).empty());

    ManifoldModel wrong_index = complete_intersection(5, {3});
    wrong_index.canonical_index = 2;
    CHECK(!validate_model(wrong_index).empty());
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS((void)projective_space(0), std::invalid_argument);
    CHECK_THROWS_AS((void)complete_intersection(3, {1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS((void)complete_intersection(4, {0}), std::invalid_argument);
    CHECK_THROWS_AS((void)grassmannian_complete_intersection(2, 5, 7), std::invalid_argument);
}
