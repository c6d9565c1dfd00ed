#pragma once

#include "chx/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>

namespace chx {

// Element of Q[h]/(h^{t+1}) where t is the truncation degree.  Degrees count
// complex codimension, so a hyperplane class h sits in degree 1 and the top
// degree of an n-fold model is n.  Zero coefficients are never stored.
//
// Mixing elements of different truncations is a caller bug and throws; the
// one deliberate escape hatch is truncated(), which re-truncates explicitly.
class GradedClass {
public:
    GradedClass() = default;
    explicit GradedClass(int truncation);

    [[nodiscard]] static GradedClass one(int truncation);
    [[nodiscard]] static GradedClass monomial(int truncation, int degree, const Rational& coeff);

    [[nodiscard]] int truncation() const { return trunc_; }
    [[nodiscard]] Rational coefficient(int degree) const;
    void set_coefficient(int degree, const Rational& value);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_unit() const { return coefficient(0) != 0; }

    [[nodiscard]] GradedClass component(int degree) const;
    [[nodiscard]] GradedClass zero_like() const { return GradedClass(trunc_); }
    [[nodiscard]] GradedClass one_like() const { return one(trunc_); }
    [[nodiscard]] GradedClass scaled(const Rational& factor) const;
    [[nodiscard]] GradedClass truncated(int new_truncation) const;

    // Multiplicative inverse of a unit (nonzero degree-0 part); throws on
    // non-units.  pow accepts negative exponents for units.
    [[nodiscard]] GradedClass inverse() const;
    [[nodiscard]] GradedClass pow(int exponent) const;

    [[nodiscard]] Rational top_coefficient() const { return coefficient(trunc_); }

    friend GradedClass operator+(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator-(const GradedClass& a, const GradedClass& b);
    friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
    friend bool operator==(const GradedClass& a, const GradedClass& b);

    [[nodiscard]] const std::map<int, Rational>& terms() const { return terms_; }

private:
    int trunc_ = 0;
    std::map<int, Rational> terms_;
};

// Coefficient in the top degree times the normalization (the value of the
// top monomial on the fundamental class).
[[nodiscard]] Rational integrate(const GradedClass& c, const Rational& normalization);

[[nodiscard]] std::string to_string(const GradedClass& c, std::string_view symbol = "h");

// Mod-2 reduction of a graded class.  Degree i here still counts complex
// codimension; as a Stiefel-Whitney class the degree-i part is w_{2i}.
class Mod2Class {
public:
    Mod2Class() = default;
    explicit Mod2Class(int truncation);

    // Throws if some coefficient of c is not an integer.
    [[nodiscard]] static Mod2Class reduce(const GradedClass& c);

    [[nodiscard]] int truncation() const { return trunc_; }
    [[nodiscard]] int coefficient(int degree) const;
    void set_coefficient(int degree, int value);

    [[nodiscard]] bool is_zero() const { return degrees_.empty(); }
    [[nodiscard]] Mod2Class component(int degree) const;

    friend Mod2Class operator+(const Mod2Class& a, const Mod2Class& b);
    friend Mod2Class operator*(const Mod2Class& a, const Mod2Class& b);
    friend bool operator==(const Mod2Class& a, const Mod2Class& b);

    [[nodiscard]] const std::set<int>& degrees() const { return degrees_; }

private:
    int trunc_ = 0;
    std::set<int> degrees_;
};

// Renders nonzero parts as w_{2i}: "1 + w2 + w6".
[[nodiscard]] std::string to_string(const Mod2Class& c);

}  // namespace chx
