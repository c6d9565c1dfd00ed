#pragma once

#include "chx/partition.hpp"
#include "chx/rational.hpp"

#include <map>
#include <string>

namespace chx {

// Element of H^*(G(k,n); Q) in the Schubert basis: partitions inside the
// k x (n-k) box, sigma_lambda in degree |lambda| (complex codimension).
// Products expand through the Littlewood-Richardson rule, with shapes
// falling outside the box discarded.
class SchubertClass {
public:
    SchubertClass(int k, int n);  // zero class

    [[nodiscard]] static SchubertClass one(int k, int n);
    [[nodiscard]] static SchubertClass sigma(int k, int n, const Partition& shape,
                                             const Rational& coeff = Rational(1));

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int dimension() const { return k_ * (n_ - k_); }

    [[nodiscard]] Rational coefficient(const Partition& shape) const;
    void set_coefficient(const Partition& shape, const Rational& value);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] int truncation() const { return dimension(); }
    [[nodiscard]] SchubertClass component(int degree) const;
    [[nodiscard]] SchubertClass zero_like() const { return SchubertClass(k_, n_); }
    [[nodiscard]] SchubertClass one_like() const { return one(k_, n_); }
    [[nodiscard]] SchubertClass scaled(const Rational& factor) const;

    [[nodiscard]] SchubertClass pow(int exponent) const;

    friend SchubertClass operator+(const SchubertClass& a, const SchubertClass& b);
    friend SchubertClass operator-(const SchubertClass& a, const SchubertClass& b);
    friend SchubertClass operator*(const SchubertClass& a, const SchubertClass& b);
    friend bool operator==(const SchubertClass& a, const SchubertClass& b);

    [[nodiscard]] const std::map<Partition, Rational>& terms() const { return terms_; }

private:
    int k_ = 0;
    int n_ = 0;
    std::map<Partition, Rational> terms_;
};

[[nodiscard]] std::string to_string(const SchubertClass& c);

// sigma_lambda . sigma_m via the Pieri rule: horizontal strips of size m
// added to lambda, clipped to the box.  Must agree with the general rule;
// the test suite holds the two against each other.
[[nodiscard]] SchubertClass pieri_multiply(const SchubertClass& a, int m);

// Expansion of sigma_lambda . sigma_mu in the box of G(k,n).
[[nodiscard]] std::map<Partition, Int> littlewood_richardson(int k, int n,
                                                             const Partition& lambda,
                                                             const Partition& mu);

// Coefficient of the full-box class (the point class), i.e. evaluation on
// the fundamental cycle.
[[nodiscard]] Rational schubert_integrate(const SchubertClass& c);

// integral of sigma_lambda . sigma_mu: 1 exactly when mu is the box
// complement of lambda (for |lambda| + |mu| = dim), else 0.
[[nodiscard]] Rational duality_pairing(int k, int n, const Partition& lambda,
                                       const Partition& mu);

// Total Chern classes of the dual tautological subbundle S* (rank k) and
// the quotient bundle Q (rank n-k): 1 + sigma_1 + sigma_{1,1} + ... and
// 1 + sigma_1 + sigma_2 + ...
[[nodiscard]] SchubertClass dual_tautological_total(int k, int n);
[[nodiscard]] SchubertClass quotient_total(int k, int n);

// c(T_G) for T_G = S* (x) Q, via the tensor-product expansion.  Subject to
// the rank-4 tensor cap on k and n-k.
[[nodiscard]] SchubertClass grassmannian_tangent_chern(int k, int n);

}  // namespace chx
