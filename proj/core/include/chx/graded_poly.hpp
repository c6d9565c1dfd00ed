#pragma once

#include "chx/partition.hpp"
#include "chx/rational.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Universal weighted polynomial ring Q[x_1, x_2, ...] with x_j of weight j,
// truncated above a weight bound.  A monomial x_{j_1} ... x_{j_m} is keyed by
// the partition (j_1 >= ... >= j_m), so x_2 x_1^2 lives under (2, 1, 1) and
// monomial multiplication is multiset union of parts.  Genus polynomials in
// Chern or Pontrjagin variables are elements of this ring, and evaluation
// maps x_j to a concrete class or pairs the monomials against stored
// intersection numbers.

namespace chx {

class GradedPolynomial {
  public:
    GradedPolynomial() = default;

    explicit GradedPolynomial(int truncation);

    [[nodiscard]] static GradedPolynomial one(int truncation);

    // The generator x_index, of weight index.
    [[nodiscard]] static GradedPolynomial variable(int truncation, int index);

    [[nodiscard]] static GradedPolynomial monomial(int truncation, const Partition& shape,
                                                   const Rational& coeff);

    [[nodiscard]] int truncation() const { return truncation_; }

    [[nodiscard]] Rational coefficient(const Partition& shape) const;

    void set_coefficient(const Partition& shape, const Rational& value);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] GradedPolynomial component(int weight) const;

    [[nodiscard]] GradedPolynomial zero_like() const { return GradedPolynomial(truncation_); }

    [[nodiscard]] GradedPolynomial one_like() const { return one(truncation_); }

    [[nodiscard]] GradedPolynomial scaled(const Rational& factor) const;

    [[nodiscard]] GradedPolynomial operator+(const GradedPolynomial& other) const;
    [[nodiscard]] GradedPolynomial operator-(const GradedPolynomial& other) const;
    [[nodiscard]] GradedPolynomial operator*(const GradedPolynomial& other) const;

    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) {
        return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
    }

    [[nodiscard]] const std::map<Partition, Rational>& terms() const { return terms_; }

  private:
    int truncation_ = 0;
    std::map<Partition, Rational> terms_;

    void check_compatible(const GradedPolynomial& other) const;
};

// Renders "1 + 1/2*c1" or "1/12*c1^2 + 1/12*c2"; `symbol` names the variable
// family.  Terms appear in the monomial key order.
[[nodiscard]] std::string to_string(const GradedPolynomial& poly, const std::string& symbol = "c");

// Substitutes concrete ring classes for the variables: values[j] replaces
// x_j (index 0 is ignored).  Missing indices are an error, not zero.
template <class C>
[[nodiscard]] C evaluate(const GradedPolynomial& poly, const std::vector<C>& values) {
    if (values.empty()) {
        throw std::invalid_argument("no values to substitute");
    }
    C acc = values[0].zero_like();
    for (const auto& [shape, coeff] : poly.terms()) {
        C term = values[0].one_like();
        for (const int j : shape.parts()) {
            if (j >= static_cast<int>(values.size())) {
                throw std::invalid_argument("no value supplied for variable index " +
                                            std::to_string(j));
            }
            term = term * values[j];
        }
        acc = acc + term.scaled(coeff);
    }
    return acc;
}

// Pairs each monomial against a linear functional on monomials, as when the
// ring variables are Chern classes and `pair` returns stored intersection
// numbers.
[[nodiscard]] Rational evaluate_pairing(const GradedPolynomial& poly,
                                        const std::function<Rational(const Partition&)>& pair);

}  // namespace chx
