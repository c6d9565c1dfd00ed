#include "chx/lattice.hpp"

#include <stdexcept>

namespace chx {

std::string to_string(const LatticeInvariants& l) {
    return "(" + std::to_string(l.rank) + ", " + std::to_string(l.signature) + ", " +
           (l.parity == LatticeParity::even ? "even" : "odd") + ")";
}

LatticeInvariants surface_lattice(const Int& c1sq, const Int& c2, bool k_two_divisible) {
    const Int rank = c2 - 2;
    if (rank < 1) {
        throw std::invalid_argument("second Betti number " + rank.str() + " is not positive");
    }
    const Int three_tau = c1sq - 2 * c2;
    if (three_tau % 3 != 0) {
        throw std::invalid_argument("c_1^2 - 2 c_2 = " + three_tau.str() +
                                    " is not divisible by 3; no complex surface has these "
                                    "Chern numbers");
    }
    const Int tau = three_tau / 3;
    if (tau > rank || -tau > rank) {
        throw std::invalid_argument("signature " + tau.str() + " exceeds the rank " + rank.str());
    }
    return LatticeInvariants{rank.convert_to<int>(), tau.convert_to<int>(),
                             k_two_divisible ? LatticeParity::even : LatticeParity::odd};
}

bool freedman_equivalent(const LatticeInvariants& a, const LatticeInvariants& b) { return a == b; }

bool two_divisible(const Mod2Class& c1_mod2) { return c1_mod2.coefficient(1) == 0; }

}  // namespace chx
