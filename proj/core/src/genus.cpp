#include "chx/genus.hpp"

#include <stdexcept>

namespace chx {

namespace {

// Dense power-series coefficients c[0..upto]; just enough arithmetic for
// the genus logarithms.
using Series = std::vector<Rational>;

Series series_product(const Series& a, const Series& b, int upto) {
    Series out(upto + 1, Rational(0));
    for (int i = 0; i <= upto; ++i) {
        for (int j = 0; i + j <= upto && j <= upto; ++j) {
            if (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size())) {
                out[i + j] += a[i] * b[j];
            }
        }
    }
    return out;
}

Series series_log(const Series& a, int upto) {
    if (a.empty() || a[0] != 1) {
        throw std::invalid_argument("series log needs constant term 1");
    }
    Series u(a);
    u.resize(upto + 1, Rational(0));
    u[0] = 0;
    Series out(upto + 1, Rational(0));
    Series power{Rational(1)};
    for (int m = 1; m <= upto; ++m) {
        power = series_product(power, u, upto);
        const Rational sign = (m % 2 == 1) ? Rational(1, m) : Rational(-1, m);
        for (int i = 0; i <= upto; ++i) {
            out[i] += power[i] * sign;
        }
    }
    return out;
}

Series series_quotient(const Series& a, const Series& b, int upto) {
    if (b.empty() || b[0] == 0) {
        throw std::invalid_argument("series division by a non-unit");
    }
    Series out(upto + 1, Rational(0));
    for (int i = 0; i <= upto; ++i) {
        Rational acc = i < static_cast<int>(a.size()) ? a[i] : Rational(0);
        for (int j = 1; j <= i; ++j) {
            if (j < static_cast<int>(b.size())) {
                acc -= b[j] * out[i - j];
            }
        }
        out[i] = acc / b[0];
    }
    return out;
}

// x / (1 - e^{-x}) = sum_k (-1)^k B_k x^k / k!.
Series todd_series(int upto) {
    const std::vector<Rational> bernoulli = bernoulli_numbers(upto);
    Series q(upto + 1, Rational(0));
    for (int k = 0; k <= upto; ++k) {
        const Rational term = bernoulli[k] / Rational(factorial(k));
        q[k] = (k % 2 == 0) ? term : -term;
    }
    return q;
}

// x / tanh(x) = cosh(x) / (sinh(x)/x).
Series l_series(int upto) {
    Series cosh(upto + 1, Rational(0));
    Series sinh_over_x(upto + 1, Rational(0));
    for (int k = 0; 2 * k <= upto; ++k) {
        cosh[2 * k] = Rational(1, factorial(2 * k));
        sinh_over_x[2 * k] = Rational(1, factorial(2 * k + 1));
    }
    return series_quotient(cosh, sinh_over_x, upto);
}

}  // namespace

std::vector<Rational> bernoulli_numbers(int upto) {
    if (upto < 0) {
        throw std::invalid_argument("negative Bernoulli index");
    }
    std::vector<Rational> b;
    b.reserve(upto + 1);
    b.push_back(Rational(1));
    for (int m = 1; m <= upto; ++m) {
        Rational acc(0);
        for (int j = 0; j < m; ++j) {
            acc += Rational(binomial(m + 1, j)) * b[j];
        }
        b.push_back(-acc / Rational(m + 1));
    }
    return b;
}

std::vector<Rational> todd_log_coefficients(int upto) { return series_log(todd_series(upto), upto); }

std::vector<Rational> l_log_coefficients(int upto) { return series_log(l_series(upto), upto); }

const GradedPolynomial& todd_polynomial(int degree) {
    static const std::vector<GradedPolynomial> table = [] {
        constexpr int kMax = 6;
        GradedPolynomial total = GradedPolynomial::one(kMax);
        for (int i = 1; i <= kMax; ++i) {
            total = total + GradedPolynomial::variable(kMax, i);
        }
        const GradedPolynomial td = todd_class(total);
        std::vector<GradedPolynomial> out;
        out.reserve(kMax + 1);
        for (int d = 0; d <= kMax; ++d) {
            out.push_back(td.component(d));
        }
        return out;
    }();
    if (degree < 0 || degree >= static_cast<int>(table.size())) {
        throw std::invalid_argument("Todd polynomials are tabulated through degree 6, got " +
                                    std::to_string(degree));
    }
    return table[degree];
}

GradedPolynomial todd_total(int n) {
    if (n < 0 || n > 6) {
        throw std::invalid_argument("Todd polynomials are tabulated through degree 6, got " +
                                    std::to_string(n));
    }
    GradedPolynomial out(n);
    for (int d = 0; d <= n; ++d) {
        for (const auto& [shape, coeff] : todd_polynomial(d).terms()) {
            out.set_coefficient(shape, coeff);
        }
    }
    return out;
}

Rational hrr_chi(const ManifoldModel& m, int multiple) {
    Rational chi(0);
    if (const auto* uni = std::get_if<UnivariateModel>(&m.geometry)) {
        const GradedClass ch =
            exp_class(GradedClass::monomial(m.dim, 1, Rational(multiple)));
        chi = integrate(ch * todd_class(uni->tangent_total), uni->top);
    } else if (const auto* amb = std::get_if<SchubertModel>(&m.geometry)) {
        const SchubertClass sigma1 = SchubertClass::sigma(amb->k, amb->n, Partition{1});
        const SchubertClass ch = exp_class(sigma1.scaled(Rational(multiple)));
        chi = schubert_integrate(ch * todd_class(amb->tangent_total) * sigma1.pow(amb->codim));
    } else {
        for (int j = 0; j <= m.dim; ++j) {
            const Rational weight =
                pow_rational(Rational(multiple), j) / Rational(factorial(j));
            if (weight == 0) {
                continue;
            }
            chi += weight * evaluate_pairing(todd_polynomial(m.dim - j), [&](const Partition& shape) {
                       return pairing_number(m, j, shape);
                   });
        }
    }
    if (!is_integer(chi)) {
        throw std::domain_error("inconsistent model: chi(" + m.name + ", " +
                                std::to_string(multiple) + "h) = " + to_string(chi));
    }
    return chi;
}

Rational l_genus_signature(const ManifoldModel& m) {
    const auto cn = chern_numbers(m);
    Rational tau(0);
    if (m.dim == 2) {
        const Rational p1 = cn.at(Partition{1, 1}) - Rational(2) * cn.at(Partition{2});
        tau = p1 / 3;
    } else if (m.dim == 4) {
        const Rational c14 = cn.at(Partition{1, 1, 1, 1});
        const Rational c12c2 = cn.at(Partition{2, 1, 1});
        const Rational c2sq = cn.at(Partition{2, 2});
        const Rational c1c3 = cn.at(Partition{3, 1});
        const Rational c4 = cn.at(Partition{4});
        const Rational p1sq = c14 - Rational(4) * c12c2 + Rational(4) * c2sq;
        const Rational p2 = c2sq - Rational(2) * c1c3 + Rational(2) * c4;
        tau = (Rational(7) * p2 - p1sq) / 45;
    } else {
        throw std::invalid_argument(
            "signature by the index theorem is implemented in complex dimensions 2 and 4, got " +
            std::to_string(m.dim));
    }
    if (!is_integer(tau)) {
        throw std::domain_error("inconsistent model: signature " + to_string(tau) +
                                " of " + m.name + " is not an integer");
    }
    return tau;
}

}  // namespace chx
