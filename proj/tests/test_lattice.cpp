#include "chx/lattice.hpp"

#include "chx/graded.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace chx;

TEST_CASE("K3 intersection form") {
    const LatticeInvariants k3 = surface_lattice(Int(0), Int(24), true);
    CHECK(k3.rank == 22);
    CHECK(k3.signature == -16);
    CHECK(k3.parity == LatticeParity::even);
}

TEST_CASE("projective plane intersection form") {
    const LatticeInvariants p2 = surface_lattice(Int(9), Int(3), false);
    CHECK(p2.rank == 1);
    CHECK(p2.signature == 1);
    CHECK(p2.parity == LatticeParity::odd);
}

TEST_CASE("Freedman equivalence is equality of invariants") {
    const LatticeInvariants k3 = surface_lattice(Int(0), Int(24), true);
    const LatticeInvariants kodaira = surface_lattice(Int(0), Int(24), true);
    const LatticeInvariants p2 = surface_lattice(Int(9), Int(3), false);
    CHECK(freedman_equivalent(k3, kodaira));
    CHECK(!freedman_equivalent(k3, p2));

    LatticeInvariants flipped = k3;
    flipped.signature = 16;
    CHECK(!freedman_equivalent(k3, flipped));
}

TEST_CASE("Chern numbers that no surface admits are rejected") {
    CHECK_THROWS_AS((void)surface_lattice(Int(1), Int(3), false), std::invalid_argument);
    CHECK_THROWS_AS((void)surface_lattice(Int(0), Int(2), true), std::invalid_argument);
    CHECK_THROWS_AS((void)surface_lattice(Int(25), Int(5), false), std::invalid_argument);
}

TEST_CASE("two-divisibility reads the mod-2 first Chern class") {
    CHECK(two_divisible(Mod2Class::reduce(GradedClass::monomial(2, 1, Rational(4)))));
    CHECK(!two_divisible(Mod2Class::reduce(GradedClass::monomial(2, 1, Rational(3)))));
    CHECK(two_divisible(Mod2Class::reduce(GradedClass(2))));
}

TEST_CASE("rendering names all three invariants") {
    const std::string text = to_string(surface_lattice(Int(0), Int(24), true));
    CHECK(text.find("22") != std::string::npos);
    CHECK(text.find("-16") != std::string::npos);
    CHECK(text.find("even") != std::string::npos);
}
