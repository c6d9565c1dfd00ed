#pragma once

#include "chx/graded.hpp"
#include "chx/graded_poly.hpp"
#include "chx/partition.hpp"
#include "chx/rational.hpp"
#include "chx/schubert.hpp"
#include "chx/splitting.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

// A manifold model is whatever slice of the cohomology ring the engine can
// integrate over: a univariate subring generated by a hyperplane class, an
// ambient Grassmannian ring with a fundamental-class correction, or a bare
// table of intersection numbers for spaces given by classification results
// rather than equations.  Every invariant downstream (Chern, Pontrjagin,
// Stiefel-Whitney, Riemann-Roch) reduces to pairing_number on one of these.

namespace chx {

struct UnivariateModel {
    GradedClass tangent_total;  // truncated at the complex dimension
    Rational top;               // value of h^dim on the fundamental class
    friend bool operator==(const UnivariateModel&, const UnivariateModel&) = default;
};

struct SchubertModel {
    int k = 0;
    int n = 0;
    int codim = 0;                // number of hyperplane sections cutting X out of G(k,n)
    SchubertClass tangent_total;  // c(T_X) written in the ambient Schubert basis
    friend bool operator==(const SchubertModel&, const SchubertModel&) = default;
};

struct TabulatedModel {
    // (j, lambda) -> value of h^j c_lambda on the fundamental class, for
    // j + |lambda| equal to the dimension.
    std::map<std::pair<int, Partition>, Rational> pairings;
    friend bool operator==(const TabulatedModel&, const TabulatedModel&) = default;
};

struct ManifoldModel {
    std::string name;
    int dim = 0;
    std::variant<UnivariateModel, SchubertModel, TabulatedModel> geometry;

    // r in K = -r h, with h the recorded generator; 0 records a trivial
    // canonical class, absent means no multiple of h is known to be K.
    std::optional<int> canonical_index;

    friend bool operator==(const ManifoldModel&, const ManifoldModel&) = default;
};

[[nodiscard]] ManifoldModel projective_space(int n);

// X in P^ambient_dim cut by hypersurfaces of the given degrees, with the
// adjunction total class (1+h)^{n+1} prod (1+d_i h)^{-1}.  ambient_top
// rescales the ambient normalization, which is 1 for projective space.
[[nodiscard]] ManifoldModel complete_intersection(int ambient_dim, const std::vector<int>& degrees,
                                                  const Rational& ambient_top = Rational(1));

// X = G(k,n) meet H_1 meet ... meet H_c in the Pluecker embedding.
[[nodiscard]] ManifoldModel grassmannian_complete_intersection(int k, int n, int num_hyperplanes);

// integral of h^power . c_lambda over the model; 0 when the total degree
// misses the dimension.
[[nodiscard]] Rational pairing_number(const ManifoldModel& m, int power, const Partition& shape);

// integral of the Chern monomial c_lambda for |lambda| = dim.
[[nodiscard]] Rational chern_number(const ManifoldModel& m, const Partition& shape);

// All Chern numbers of the model, keyed by monomial shape.  Throws on a
// non-integer value: an integral model must pair integrally.
[[nodiscard]] std::map<Partition, Rational> chern_numbers(const ManifoldModel& m);

struct ChernNumbersDim4 {
    Rational c14;     // c_1^4
    Rational c12c2;   // c_1^2 c_2
    Rational c2sq;    // c_2^2
    Rational c1c3;    // c_1 c_3
    Rational c4;
    friend bool operator==(const ChernNumbersDim4&, const ChernNumbersDim4&) = default;
};

[[nodiscard]] ChernNumbersDim4 chern_numbers_dim4(const ManifoldModel& m);

[[nodiscard]] Rational euler_number(const ManifoldModel& m);

// integral of h^dim.
[[nodiscard]] Rational degree(const ManifoldModel& m);

// Pontrjagin classes of the underlying real manifold, recorded as the even
// Chern classes of the complexified tangent bundle, p_i = c_{2i}(T (x) C),
// with no alternating sign:
//   p_1 = -c_1^2 + 2 c_2
//   p_2 = c_2^2 - 2 c_1 c_3 + 2 c_4
//   p_3 = -c_3^2 - 2 c_1 c_5 + 2 c_2 c_4 + 2 c_6
// Entry 0 is the unit; entries beyond p_3 would need higher formulas, so
// rings truncated above degree 6 are rejected.
template <GradedRingElement C>
[[nodiscard]] std::vector<C> pontrjagin_classes(const C& tangent_total) {
    if (tangent_total.truncation() > 6) {
        throw std::invalid_argument("Pontrjagin classes are implemented through p_3 "
                                    "(ring truncation at most 6)");
    }
    const C c1 = tangent_total.component(1);
    const C c2 = tangent_total.component(2);
    const C c3 = tangent_total.component(3);
    const C c4 = tangent_total.component(4);
    const C c5 = tangent_total.component(5);
    const C c6 = tangent_total.component(6);
    std::vector<C> p(4, tangent_total.zero_like());
    p[0] = tangent_total.one_like();
    p[1] = c2.scaled(Rational(2)) - c1 * c1;
    p[2] = c2 * c2 - (c1 * c3).scaled(Rational(2)) + c4.scaled(Rational(2));
    p[3] = (c2 * c4).scaled(Rational(2)) + c6.scaled(Rational(2)) - c3 * c3 -
           (c1 * c5).scaled(Rational(2));
    return p;
}

// Pontrjagin numbers p_tau = integral of p_{tau_1} ... p_{tau_m} for tau a
// partition of dim/2.  Defined only in even complex dimension.
[[nodiscard]] std::map<Partition, Rational> pontrjagin_numbers(const ManifoldModel& m);

// Total Stiefel-Whitney class w = c mod 2 of a univariate model.
[[nodiscard]] Mod2Class stiefel_whitney_total(const ManifoldModel& m);

// Stiefel-Whitney numbers w_{2 lambda}: parities of the Chern numbers.
[[nodiscard]] std::map<Partition, int> stiefel_whitney_numbers(const ManifoldModel& m);

// Whether w_2 = 0, i.e. whether c_1 is 2-divisible.  Uses the canonical
// index when recorded (h is a primitive integral generator), else the
// degree-1 Chern coefficient of a univariate model.
[[nodiscard]] bool w2_vanishes(const ManifoldModel& m);

// Structural consistency problems, as human-readable strings: tangent class
// truncation vs dimension, canonical index vs c_1, pairing table degrees.
[[nodiscard]] std::vector<std::string> validate_model(const ManifoldModel& m);

}  // namespace chx
