#include "chx/rational.hpp"

#include <stdexcept>

namespace chx {

Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }

Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    if (den < 0) {
        return Rational(-num, -den);
    }
    return Rational(num, den);
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Int to_integer(const Rational& q) {
    if (!is_integer(q)) {
        throw std::invalid_argument("expected an integer, got " + to_string(q));
    }
    return numerator(q);
}

int parity(const Rational& q) {
    Int n = to_integer(q);
    return n % 2 == 0 ? 0 : 1;
}

std::string to_string(const Rational& q) {
    if (is_integer(q)) {
        return numerator(q).str();
    }
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool is_signed_digits(const std::string& text) {
    std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (i == text.size()) {
        return false;
    }
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto bad = [&text]() {
        return std::invalid_argument("malformed rational \"" + text + "\"");
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_signed_digits(text)) {
            throw bad();
        }
        return Rational(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_signed_digits(num) || !is_signed_digits(den) || Int(den) == 0) {
        throw bad();
    }
    return make_rational(Int(num), Int(den));
}

Rational pow_rational(const Rational& base, int exponent) {
    if (exponent == 0) {
        return Rational(1);
    }
    if (base == 0 && exponent < 0) {
        throw std::invalid_argument("zero to a negative power");
    }
    Rational result(1);
    Rational factor = exponent > 0 ? base : Rational(1) / base;
    for (int i = std::abs(exponent); i > 0; --i) {
        result *= factor;
    }
    return result;
}

Int factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial of a negative number");
    }
    Int result(1);
    for (int i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) {
        return Int(0);
    }
    k = std::min(k, n - k);
    Int result(1);
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

}  // namespace chx
