#pragma once

#include "chx/graded.hpp"
#include "chx/rational.hpp"

#include <string>

// Intersection-form invariants of simply connected closed oriented
// 4-manifolds: rank, signature and parity classify the form up to
// isomorphism, and the form classifies the manifold up to orientation-
// preserving homeomorphism.

namespace chx {

enum class LatticeParity { even, odd };

struct LatticeInvariants {
    int rank = 0;
    int signature = 0;
    LatticeParity parity = LatticeParity::even;
    friend bool operator==(const LatticeInvariants&, const LatticeInvariants&) = default;
};

[[nodiscard]] std::string to_string(const LatticeInvariants& l);

// Invariants of the intersection form of a simply connected complex
// surface from its Chern numbers: rank = c_2 - 2, signature =
// (c_1^2 - 2 c_2)/3, and the form is even exactly when the canonical class
// is 2-divisible.  A c_1^2 - 2 c_2 not divisible by 3 cannot come from a
// complex surface and throws.
[[nodiscard]] LatticeInvariants surface_lattice(const Int& c1sq, const Int& c2,
                                                bool k_two_divisible);

// Whether two simply connected closed oriented 4-manifolds with these
// intersection forms are orientation-preservingly homeomorphic.  For the
// even forms arising from complex surfaces this is equality of invariants.
[[nodiscard]] bool freedman_equivalent(const LatticeInvariants& a, const LatticeInvariants& b);

// Whether the canonical class is 2-divisible, read off a mod-2 first Chern
// class: the degree-1 part must vanish.
[[nodiscard]] bool two_divisible(const Mod2Class& c1_mod2);

}  // namespace chx
