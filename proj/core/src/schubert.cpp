#include "chx/schubert.hpp"

#include "chx/splitting.hpp"

#include <stdexcept>

namespace chx {

namespace {

void check_box(int k, int n) {
    if (k <= 0 || n <= k) {
        throw std::invalid_argument("G(" + std::to_string(k) + "," + std::to_string(n) +
                                    ") requires 0 < k < n");
    }
}

void check_same_ambient(const SchubertClass& a, const SchubertClass& b) {
    if (a.k() != b.k() || a.n() != b.n()) {
        throw std::invalid_argument("mixing classes from G(" + std::to_string(a.k()) + "," +
                                    std::to_string(a.n()) + ") and G(" + std::to_string(b.k()) +
                                    "," + std::to_string(b.n()) + ")");
    }
}

}  // namespace

SchubertClass::SchubertClass(int k, int n) : k_(k), n_(n) { check_box(k, n); }

SchubertClass SchubertClass::one(int k, int n) {
    return sigma(k, n, Partition{}, Rational(1));
}

SchubertClass SchubertClass::sigma(int k, int n, const Partition& shape, const Rational& coeff) {
    SchubertClass c(k, n);
    c.set_coefficient(shape, coeff);
    return c;
}

Rational SchubertClass::coefficient(const Partition& shape) const {
    const auto it = terms_.find(shape);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SchubertClass::set_coefficient(const Partition& shape, const Rational& value) {
    if (!shape.fits_in_box(k_, n_ - k_)) {
        throw std::invalid_argument("shape " + shape.to_string() + " does not fit in G(" +
                                    std::to_string(k_) + "," + std::to_string(n_) + ")");
    }
    if (value == 0) {
        terms_.erase(shape);
    } else {
        terms_[shape] = value;
    }
}

SchubertClass SchubertClass::component(int degree) const {
    SchubertClass c(k_, n_);
    for (const auto& [shape, coeff] : terms_) {
        if (shape.weight() == degree) {
            c.terms_[shape] = coeff;
        }
    }
    return c;
}

SchubertClass SchubertClass::scaled(const Rational& factor) const {
    SchubertClass c(k_, n_);
    if (factor == 0) {
        return c;
    }
    for (const auto& [shape, coeff] : terms_) {
        c.terms_[shape] = coeff * factor;
    }
    return c;
}

SchubertClass SchubertClass::pow(int exponent) const {
    if (exponent < 0) {
        throw std::invalid_argument("negative power of a Schubert class");
    }
    SchubertClass result = one(k_, n_);
    for (int i = 0; i < exponent; ++i) {
        result = result * *this;
    }
    return result;
}

SchubertClass operator+(const SchubertClass& a, const SchubertClass& b) {
    check_same_ambient(a, b);
    SchubertClass c = a;
    for (const auto& [shape, coeff] : b.terms_) {
        c.set_coefficient(shape, c.coefficient(shape) + coeff);
    }
    return c;
}

SchubertClass operator-(const SchubertClass& a, const SchubertClass& b) {
    return a + b.scaled(Rational(-1));
}

SchubertClass operator*(const SchubertClass& a, const SchubertClass& b) {
    check_same_ambient(a, b);
    SchubertClass c(a.k_, a.n_);
    for (const auto& [la, ca] : a.terms_) {
        for (const auto& [mu, cb] : b.terms_) {
            const Rational factor = ca * cb;
            for (const auto& [nu, lr] : littlewood_richardson(a.k_, a.n_, la, mu)) {
                c.set_coefficient(nu, c.coefficient(nu) + factor * Rational(lr));
            }
        }
    }
    return c;
}

bool operator==(const SchubertClass& a, const SchubertClass& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.terms_ == b.terms_;
}

std::string to_string(const SchubertClass& c) {
    if (c.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [shape, coeff] : c.terms()) {
        const bool negative = coeff < 0;
        const Rational magnitude = negative ? Rational(-coeff) : coeff;
        if (out.empty()) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string basis = shape.empty() ? "" : "s" + shape.to_string();
        if (basis.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += basis;
        } else {
            out += to_string(magnitude) + "*" + basis;
        }
    }
    return out;
}

SchubertClass pieri_multiply(const SchubertClass& a, int m) {
    if (m < 0) {
        throw std::invalid_argument("Pieri factor must be sigma_m with m >= 0");
    }
    if (m == 0) {
        return a;
    }
    const int rows = a.k();
    const int cols = a.n() - a.k();
    SchubertClass out(a.k(), a.n());
    for (const auto& [lambda, coeff] : a.terms()) {
        // Enumerate horizontal strips: mu_i in [lambda_i, min(cols, lambda_{i-1})]
        // with sum of additions m; at most one new box per column.
        std::vector<int> mu(rows, 0);
        const auto extend = [&](auto&& self, int row, int remaining) -> void {
            if (row == rows) {
                if (remaining == 0) {
                    std::vector<int> parts;
                    for (int p : mu) {
                        if (p > 0) {
                            parts.push_back(p);
                        }
                    }
                    const Partition shape(std::move(parts));
                    out.set_coefficient(shape, out.coefficient(shape) + coeff);
                }
                return;
            }
            const int lo = lambda.part(row);
            const int hi = std::min(row == 0 ? cols : lambda.part(row - 1),
                                    std::min(cols, lo + remaining));
            for (int p = lo; p <= hi; ++p) {
                if (row > 0 && p > mu[row - 1]) {
                    continue;
                }
                mu[row] = p;
                self(self, row + 1, remaining - (p - lo));
                mu[row] = 0;
            }
        };
        extend(extend, 0, m);
    }
    return out;
}

std::map<Partition, Int> littlewood_richardson(int k, int n, const Partition& lambda,
                                               const Partition& mu) {
    check_box(k, n);
    const int rows = k;
    const int cols = n - k;
    if (!lambda.fits_in_box(rows, cols) || !mu.fits_in_box(rows, cols)) {
        throw std::invalid_argument("shapes must fit in the box");
    }
    std::map<Partition, Int> out;
    const int weight = lambda.weight() + mu.weight();
    if (weight > rows * cols) {
        return out;
    }
    for (const Partition& nu : Partition::all_in_box(rows, cols, weight)) {
        const Int c = lr_coefficient(nu, lambda, mu);
        if (c != 0) {
            out[nu] = c;
        }
    }
    return out;
}

Rational schubert_integrate(const SchubertClass& c) {
    std::vector<int> full(c.k(), c.n() - c.k());
    return c.coefficient(Partition(std::move(full)));
}

Rational duality_pairing(int k, int n, const Partition& lambda, const Partition& mu) {
    return schubert_integrate(SchubertClass::sigma(k, n, lambda) *
                              SchubertClass::sigma(k, n, mu));
}

SchubertClass dual_tautological_total(int k, int n) {
    check_box(k, n);
    SchubertClass c(k, n);
    for (int i = 0; i <= k; ++i) {
        std::vector<int> column(i, 1);
        c.set_coefficient(Partition(std::move(column)), Rational(1));
    }
    return c;
}

SchubertClass quotient_total(int k, int n) {
    check_box(k, n);
    SchubertClass c(k, n);
    c.set_coefficient(Partition{}, Rational(1));
    for (int j = 1; j <= n - k; ++j) {
        c.set_coefficient(Partition{j}, Rational(1));
    }
    return c;
}

SchubertClass grassmannian_tangent_chern(int k, int n) {
    return tensor_total(dual_tautological_total(k, n), k, quotient_total(k, n), n - k);
}

}  // namespace chx
