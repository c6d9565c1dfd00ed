#include "chx/graded_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace chx {

namespace {

int checked_truncation(int truncation) {
    if (truncation < 0) {
        throw std::invalid_argument("negative truncation");
    }
    return truncation;
}

Partition merge_shapes(const Partition& a, const Partition& b) {
    std::vector<int> parts(a.parts());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

}  // namespace

GradedPolynomial::GradedPolynomial(int truncation) : truncation_(checked_truncation(truncation)) {}

GradedPolynomial GradedPolynomial::one(int truncation) {
    GradedPolynomial p(truncation);
    p.set_coefficient(Partition{}, Rational(1));
    return p;
}

GradedPolynomial GradedPolynomial::variable(int truncation, int index) {
    if (index < 1) {
        throw std::invalid_argument("variable index must be positive");
    }
    return monomial(truncation, Partition{index}, Rational(1));
}

GradedPolynomial GradedPolynomial::monomial(int truncation, const Partition& shape,
                                            const Rational& coeff) {
    GradedPolynomial p(truncation);
    p.set_coefficient(shape, coeff);
    return p;
}

Rational GradedPolynomial::coefficient(const Partition& shape) const {
    const auto it = terms_.find(shape);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedPolynomial::set_coefficient(const Partition& shape, const Rational& value) {
    if (shape.weight() > truncation_ || value == 0) {
        terms_.erase(shape);
        return;
    }
    terms_[shape] = value;
}

GradedPolynomial GradedPolynomial::component(int weight) const {
    GradedPolynomial out(truncation_);
    for (const auto& [shape, coeff] : terms_) {
        if (shape.weight() == weight) {
            out.terms_[shape] = coeff;
        }
    }
    return out;
}

GradedPolynomial GradedPolynomial::scaled(const Rational& factor) const {
    GradedPolynomial out(truncation_);
    if (factor == 0) {
        return out;
    }
    for (const auto& [shape, coeff] : terms_) {
        out.terms_[shape] = coeff * factor;
    }
    return out;
}

void GradedPolynomial::check_compatible(const GradedPolynomial& other) const {
    if (truncation_ != other.truncation_) {
        throw std::invalid_argument("mixing truncations " + std::to_string(truncation_) + " and " +
                                    std::to_string(other.truncation_));
    }
}

GradedPolynomial GradedPolynomial::operator+(const GradedPolynomial& other) const {
    check_compatible(other);
    GradedPolynomial out = *this;
    for (const auto& [shape, coeff] : other.terms_) {
        out.set_coefficient(shape, out.coefficient(shape) + coeff);
    }
    return out;
}

GradedPolynomial GradedPolynomial::operator-(const GradedPolynomial& other) const {
    return *this + other.scaled(Rational(-1));
}

GradedPolynomial GradedPolynomial::operator*(const GradedPolynomial& other) const {
    check_compatible(other);
    GradedPolynomial out(truncation_);
    for (const auto& [sa, ca] : terms_) {
        if (sa.weight() > truncation_) {
            continue;
        }
        for (const auto& [sb, cb] : other.terms_) {
            if (sa.weight() + sb.weight() > truncation_) {
                continue;
            }
            const Partition key = merge_shapes(sa, sb);
            out.set_coefficient(key, out.coefficient(key) + ca * cb);
        }
    }
    return out;
}

std::string to_string(const GradedPolynomial& poly, const std::string& symbol) {
    if (poly.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [shape, coeff] : poly.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string mono;
        int run_index = 0;
        int run_length = 0;
        auto flush = [&] {
            if (run_length == 0) {
                return;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += symbol + std::to_string(run_index);
            if (run_length > 1) {
                mono += "^" + std::to_string(run_length);
            }
        };
        for (auto it = shape.parts().rbegin(); it != shape.parts().rend(); ++it) {
            const int index = *it;
            if (index != run_index) {
                flush();
                run_index = index;
                run_length = 0;
            }
            ++run_length;
        }
        flush();
        if (mono.empty()) {
            out += to_string(coeff);
        } else if (coeff == 1) {
            out += mono;
        } else {
            out += to_string(coeff) + "*" + mono;
        }
    }
    return out;
}

Rational evaluate_pairing(const GradedPolynomial& poly,
                          const std::function<Rational(const Partition&)>& pair) {
    Rational acc(0);
    for (const auto& [shape, coeff] : poly.terms()) {
        acc += coeff * pair(shape);
    }
    return acc;
}

}  // namespace chx
