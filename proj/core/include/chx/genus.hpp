#pragma once

#include "chx/graded_poly.hpp"
#include "chx/manifold.hpp"
#include "chx/rational.hpp"
#include "chx/splitting.hpp"

#include <vector>

// Multiplicative genera.  The Todd series x/(1 - e^{-x}) drives the
// Riemann-Roch arithmetic, and the L-series x/tanh(x) drives the signature;
// both reduce to exact power-series bookkeeping over the Chern roots.

namespace chx {

// B_0 .. B_upto with the B_1 = -1/2 convention, by the defining recurrence
// sum_{j<=m} binom(m+1, j) B_j = 0.
[[nodiscard]] std::vector<Rational> bernoulli_numbers(int upto);

// Coefficients s_1 .. s_upto of log(x / (1 - e^{-x})); entry 0 is zero.
// The Todd class of a bundle with Chern-root power sums p_m is
// exp(sum_m s_m p_m).
[[nodiscard]] std::vector<Rational> todd_log_coefficients(int upto);

// Same for log(x / tanh x), whose genus is the signature.
[[nodiscard]] std::vector<Rational> l_log_coefficients(int upto);

// The degree-d Todd polynomial in universal Chern variables, tabulated once
// through degree 6: td_1 = c1/2, td_2 = (c1^2 + c2)/12, ...
[[nodiscard]] const GradedPolynomial& todd_polynomial(int degree);

// 1 + td_1 + ... + td_n, truncated at n <= 6.
[[nodiscard]] GradedPolynomial todd_total(int n);

// Todd class of a concrete total Chern class, computed inside its own ring.
// Matches the universal polynomials; the test suite holds the two together.
template <GradedRingElement C>
[[nodiscard]] C todd_class(const C& tangent_total) {
    const int upto = tangent_total.truncation();
    const std::vector<Rational> s = todd_log_coefficients(upto);
    const std::vector<C> p = power_sums(tangent_total);
    C log_td = tangent_total.zero_like();
    for (int m = 1; m <= upto; ++m) {
        log_td = log_td + p[m].scaled(s[m]);
    }
    return exp_class(log_td);
}

// chi(X, O(multiple . h)) by Riemann-Roch: integral of e^{multiple . h} td(X).
// The result must be an integer for a consistent model; a fractional value
// throws std::domain_error.
[[nodiscard]] Rational hrr_chi(const ManifoldModel& m, int multiple);

// Signature by the index theorem, in complex dimension 2 or 4:
//   dim 2: (p_1)/3          with p_1 = c_1^2 - 2 c_2
//   dim 4: (7 p_2 - p_1^2)/45
// The index theorem wants p_i = (-1)^i c_{2i}(T (x) C), while the displayed
// formulas of pontrjagin_classes keep c_{2i}(T (x) C) bare, so odd-index
// classes enter here with the opposite sign.  Only dimension 2 feels the
// difference: dimension 4 sees p_1 squared and p_2, both sign-stable.
[[nodiscard]] Rational l_genus_signature(const ManifoldModel& m);

}  // namespace chx
