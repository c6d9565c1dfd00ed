#include "chx/graded.hpp"

#include <stdexcept>

namespace chx {

namespace {

void check_same_truncation(int a, int b, const char* op) {
    if (a != b) {
        throw std::invalid_argument(std::string(op) + " on classes of truncation " +
                                    std::to_string(a) + " and " + std::to_string(b));
    }
}

void check_degree(int degree, int truncation) {
    if (degree < 0 || degree > truncation) {
        throw std::out_of_range("degree " + std::to_string(degree) +
                                " outside [0, " + std::to_string(truncation) + "]");
    }
}

}  // namespace

GradedClass::GradedClass(int truncation) : trunc_(truncation) {
    if (truncation < 0) {
        throw std::invalid_argument("negative truncation");
    }
}

GradedClass GradedClass::one(int truncation) {
    GradedClass c(truncation);
    c.set_coefficient(0, Rational(1));
    return c;
}

GradedClass GradedClass::monomial(int truncation, int degree, const Rational& coeff) {
    GradedClass c(truncation);
    c.set_coefficient(degree, coeff);
    return c;
}

Rational GradedClass::coefficient(int degree) const {
    const auto it = terms_.find(degree);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedClass::set_coefficient(int degree, const Rational& value) {
    check_degree(degree, trunc_);
    if (value == 0) {
        terms_.erase(degree);
    } else {
        terms_[degree] = value;
    }
}

GradedClass GradedClass::component(int degree) const {
    GradedClass c(trunc_);
    if (degree >= 0 && degree <= trunc_) {
        c.set_coefficient(degree, coefficient(degree));
    }
    return c;
}

GradedClass GradedClass::scaled(const Rational& factor) const {
    GradedClass c(trunc_);
    if (factor == 0) {
        return c;
    }
    for (const auto& [degree, coeff] : terms_) {
        c.terms_[degree] = coeff * factor;
    }
    return c;
}

GradedClass GradedClass::truncated(int new_truncation) const {
    GradedClass c(new_truncation);
    for (const auto& [degree, coeff] : terms_) {
        if (degree <= new_truncation) {
            c.terms_[degree] = coeff;
        }
    }
    return c;
}

GradedClass GradedClass::inverse() const {
    const Rational a0 = coefficient(0);
    if (a0 == 0) {
        throw std::invalid_argument("inverse of a non-unit graded class");
    }
    // b_0 = 1/a_0, then b_k = -(1/a_0) sum_{j=1..k} a_j b_{k-j}.
    GradedClass b(trunc_);
    b.set_coefficient(0, Rational(1) / a0);
    for (int k = 1; k <= trunc_; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j) {
            acc += coefficient(j) * b.coefficient(k - j);
        }
        b.set_coefficient(k, -acc / a0);
    }
    return b;
}

GradedClass GradedClass::pow(int exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    GradedClass result = one(trunc_);
    GradedClass base = *this;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) {
            result = result * base;
        }
        if (e > 1) {
            base = base * base;
        }
    }
    return result;
}

GradedClass operator+(const GradedClass& a, const GradedClass& b) {
    check_same_truncation(a.trunc_, b.trunc_, "addition");
    GradedClass c = a;
    for (const auto& [degree, coeff] : b.terms_) {
        c.set_coefficient(degree, c.coefficient(degree) + coeff);
    }
    return c;
}

GradedClass operator-(const GradedClass& a, const GradedClass& b) {
    return a + b.scaled(Rational(-1));
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
    check_same_truncation(a.trunc_, b.trunc_, "multiplication");
    GradedClass c(a.trunc_);
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) {
            const int degree = da + db;
            if (degree > c.trunc_) {
                break;  // b.terms_ is sorted by degree
            }
            c.set_coefficient(degree, c.coefficient(degree) + ca * cb);
        }
    }
    return c;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
}

Rational integrate(const GradedClass& c, const Rational& normalization) {
    return c.top_coefficient() * normalization;
}

std::string to_string(const GradedClass& c, std::string_view symbol) {
    if (c.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [degree, coeff] : c.terms()) {
        const bool negative = coeff < 0;
        const Rational magnitude = negative ? Rational(-coeff) : coeff;
        if (out.empty()) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        if (degree >= 1) {
            mono = std::string(symbol);
            if (degree > 1) {
                mono += "^" + std::to_string(degree);
            }
        }
        if (mono.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += to_string(magnitude) + "*" + mono;
        }
    }
    return out;
}

Mod2Class::Mod2Class(int truncation) : trunc_(truncation) {
    if (truncation < 0) {
        throw std::invalid_argument("negative truncation");
    }
}

Mod2Class Mod2Class::reduce(const GradedClass& c) {
    Mod2Class m(c.truncation());
    for (const auto& [degree, coeff] : c.terms()) {
        m.set_coefficient(degree, parity(coeff));
    }
    return m;
}

int Mod2Class::coefficient(int degree) const {
    return degrees_.count(degree) ? 1 : 0;
}

void Mod2Class::set_coefficient(int degree, int value) {
    check_degree(degree, trunc_);
    if (value % 2 == 0) {
        degrees_.erase(degree);
    } else {
        degrees_.insert(degree);
    }
}

Mod2Class Mod2Class::component(int degree) const {
    Mod2Class m(trunc_);
    if (degree >= 0 && degree <= trunc_) {
        m.set_coefficient(degree, coefficient(degree));
    }
    return m;
}

Mod2Class operator+(const Mod2Class& a, const Mod2Class& b) {
    check_same_truncation(a.trunc_, b.trunc_, "addition");
    Mod2Class c(a.trunc_);
    for (int d : a.degrees_) {
        c.set_coefficient(d, c.coefficient(d) + 1);
    }
    for (int d : b.degrees_) {
        c.set_coefficient(d, c.coefficient(d) + 1);
    }
    return c;
}

Mod2Class operator*(const Mod2Class& a, const Mod2Class& b) {
    check_same_truncation(a.trunc_, b.trunc_, "multiplication");
    Mod2Class c(a.trunc_);
    for (int da : a.degrees_) {
        for (int db : b.degrees_) {
            if (da + db <= c.trunc_) {
                c.set_coefficient(da + db, c.coefficient(da + db) + 1);
            }
        }
    }
    return c;
}

bool operator==(const Mod2Class& a, const Mod2Class& b) {
    return a.trunc_ == b.trunc_ && a.degrees_ == b.degrees_;
}

std::string to_string(const Mod2Class& c) {
    if (c.is_zero()) {
        return "0";
    }
    std::string out;
    for (int degree : c.degrees()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += degree == 0 ? "1" : "w" + std::to_string(2 * degree);
    }
    return out;
}

}  // namespace chx
