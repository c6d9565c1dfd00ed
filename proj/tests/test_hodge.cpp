#include "chx/hodge.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace chx;

namespace {

HodgeDiamond p2_diamond() {
    return HodgeDiamond::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

HodgeDiamond k3_diamond() {
    return HodgeDiamond::from_rows({{1, 0, 1}, {0, 20, 0}, {1, 0, 1}});
}

HodgeDiamond cubic4_diamond() {
    HodgeDiamond d(4);
    for (int p = 0; p <= 4; ++p) {
        d.set(p, p, 1);
    }
    d.set(2, 2, 21);
    d.set(3, 1, 1);
    d.set(1, 3, 1);
    return d;
}

}  // namespace

TEST_CASE("projective plane diamond") {
    const HodgeDiamond d = p2_diamond();
    CHECK(d.validate().empty());
    CHECK(d.betti() == std::vector<int>{1, 0, 1, 0, 1});
    CHECK(d.euler() == 3);
    CHECK(signature_from_hodge(d) == 1);
    CHECK(chi_structure_sheaf(d) == 1);
}

TEST_CASE("K3 diamond") {
    const HodgeDiamond d = k3_diamond();
    CHECK(d.validate().empty());
    CHECK(d.betti_number(1) == 0);
    CHECK(d.betti_number(2) == 22);
    CHECK(d.euler() == 24);
    CHECK(signature_from_hodge(d) == -16);
    CHECK(chi_structure_sheaf(d) == 2);
}

TEST_CASE("cubic fourfold diamond") {
    const HodgeDiamond d = cubic4_diamond();
    CHECK(d.validate().empty());
    CHECK(d.betti_number(2) == 1);
    CHECK(d.betti_number(4) == 23);
    CHECK(d.euler() == 27);
    CHECK(chi_structure_sheaf(d) == 1);
    CHECK(signature_from_hodge(d) == 19);
    CHECK(signature_from_hodge_legacy(d) == 23);
}

TEST_CASE("the legacy count is the full count plus four") {
    const HodgeDiamond diamonds[] = {cubic4_diamond(), HodgeDiamond(4)};
    for (const HodgeDiamond& d : diamonds) {
        CHECK(signature_from_hodge_legacy(d) == signature_from_hodge(d) + 4);
    }
}

TEST_CASE("signature counts need the right dimension") {
    CHECK_THROWS_AS((void)signature_from_hodge(HodgeDiamond(3)), std::invalid_argument);
    CHECK_THROWS_AS((void)signature_from_hodge_legacy(k3_diamond()), std::invalid_argument);
}

TEST_CASE("cell access is range-checked") {
    HodgeDiamond d(4);
    CHECK_THROWS_AS((void)d.hodge(5, 0), std::out_of_range);
    CHECK_THROWS_AS(d.set(0, -1, 1), std::out_of_range);
}

TEST_CASE("from_rows rejects ragged grids") {
    CHECK_THROWS_AS((void)HodgeDiamond::from_rows({{1, 0}, {0}}), std::invalid_argument);
    CHECK_THROWS_AS((void)HodgeDiamond::from_rows({}), std::invalid_argument);
}

TEST_CASE("validation names the broken axiom") {
    HodgeDiamond asymmetric = p2_diamond();
    asymmetric.set(1, 0, 1);
    CHECK(!asymmetric.validate().empty());

    HodgeDiamond no_unit = p2_diamond();
    no_unit.set(0, 0, 2);
    no_unit.set(2, 2, 2);
    CHECK(!no_unit.validate().empty());

    HodgeDiamond negative = p2_diamond();
    negative.set(1, 1, -1);
    CHECK(!negative.validate().empty());

    // h^{1,0} = h^{0,1} keeps conjugation but breaks the Serre pairing
    // against the untouched h^{3,4} = h^{4,3} = 0.
    HodgeDiamond serre = cubic4_diamond();
    serre.set(1, 0, 1);
    serre.set(0, 1, 1);
    CHECK(!serre.validate().empty());
}
