#include "chx/manifold.hpp"

#include <stdexcept>

namespace chx {

namespace {

GradedClass hyperplane(int trunc) { return GradedClass::monomial(trunc, 1, Rational(1)); }

// (1 + x)^{-1} = 1 - x + x^2 - ... in the box-truncated Schubert ring,
// which has no general inverse method.
SchubertClass geometric_inverse(const SchubertClass& x) {
    SchubertClass acc = x.one_like();
    SchubertClass power = x.one_like();
    for (int i = 1; i <= x.truncation(); ++i) {
        power = power * x;
        if (power.is_zero()) {
            break;
        }
        acc = (i % 2 == 1) ? acc - power : acc + power;
    }
    return acc;
}

// The displayed p_i formulas as universal polynomials in Chern variables.
GradedPolynomial universal_pontrjagin(int trunc, int index) {
    GradedPolynomial p(trunc);
    switch (index) {
        case 1:
            p.set_coefficient(Partition{2}, Rational(2));
            p.set_coefficient(Partition{1, 1}, Rational(-1));
            break;
        case 2:
            p.set_coefficient(Partition{2, 2}, Rational(1));
            p.set_coefficient(Partition{3, 1}, Rational(-2));
            p.set_coefficient(Partition{4}, Rational(2));
            break;
        case 3:
            p.set_coefficient(Partition{3, 3}, Rational(-1));
            p.set_coefficient(Partition{5, 1}, Rational(-2));
            p.set_coefficient(Partition{4, 2}, Rational(2));
            p.set_coefficient(Partition{6}, Rational(2));
            break;
        default:
            throw std::invalid_argument("Pontrjagin numbers are implemented through p_3");
    }
    return p;
}

Rational checked_integer(const Rational& value, const std::string& what) {
    if (!is_integer(value)) {
        throw std::domain_error("inconsistent model: " + what + " = " + to_string(value) +
                                " is not an integer");
    }
    return value;
}

}  // namespace

ManifoldModel projective_space(int n) {
    if (n < 1) {
        throw std::invalid_argument("projective space needs positive dimension");
    }
    ManifoldModel m;
    m.name = "P^" + std::to_string(n);
    m.dim = n;
    m.geometry = UnivariateModel{(GradedClass::one(n) + hyperplane(n)).pow(n + 1), Rational(1)};
    m.canonical_index = n + 1;
    return m;
}

ManifoldModel complete_intersection(int ambient_dim, const std::vector<int>& degrees,
                                    const Rational& ambient_top) {
    const int dim = ambient_dim - static_cast<int>(degrees.size());
    if (dim < 1) {
        throw std::invalid_argument("complete intersection has nonpositive dimension");
    }
    GradedClass total = (GradedClass::one(dim) + hyperplane(dim)).pow(ambient_dim + 1);
    Rational top = ambient_top;
    int degree_sum = 0;
    std::string name = "ci(" + std::to_string(ambient_dim) + ";";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const int d = degrees[i];
        if (d < 1) {
            throw std::invalid_argument("hypersurface degree must be positive");
        }
        total = total * (GradedClass::one(dim) + hyperplane(dim).scaled(Rational(d))).inverse();
        top *= d;
        degree_sum += d;
        name += (i ? "," : "") + std::to_string(d);
    }
    ManifoldModel m;
    m.name = name + ")";
    m.dim = dim;
    m.geometry = UnivariateModel{total, top};
    m.canonical_index = ambient_dim + 1 - degree_sum;
    return m;
}

ManifoldModel grassmannian_complete_intersection(int k, int n, int num_hyperplanes) {
    const int dim = k * (n - k) - num_hyperplanes;
    if (num_hyperplanes < 0 || dim < 1) {
        throw std::invalid_argument("hyperplane count out of range for G(k,n)");
    }
    const SchubertClass sigma1 = SchubertClass::sigma(k, n, Partition{1});
    SchubertClass total = grassmannian_tangent_chern(k, n);
    total = total * geometric_inverse(sigma1).pow(num_hyperplanes);
    ManifoldModel m;
    m.name = "gci(" + std::to_string(k) + "," + std::to_string(n) + ";" +
             std::to_string(num_hyperplanes) + ")";
    m.dim = dim;
    m.geometry = SchubertModel{k, n, num_hyperplanes, total};
    m.canonical_index = n - num_hyperplanes;
    return m;
}

Rational pairing_number(const ManifoldModel& m, int power, const Partition& shape) {
    if (power < 0) {
        throw std::invalid_argument("negative hyperplane power");
    }
    if (power + shape.weight() != m.dim) {
        return Rational(0);
    }
    if (const auto* uni = std::get_if<UnivariateModel>(&m.geometry)) {
        GradedClass acc = GradedClass::monomial(m.dim, 0, Rational(1));
        for (const int part : shape.parts()) {
            acc = acc * uni->tangent_total.component(part);
        }
        return acc.coefficient(m.dim - power) * uni->top;
    }
    if (const auto* amb = std::get_if<SchubertModel>(&m.geometry)) {
        const SchubertClass sigma1 = SchubertClass::sigma(amb->k, amb->n, Partition{1});
        SchubertClass acc = sigma1.pow(power + amb->codim);
        for (const int part : shape.parts()) {
            acc = acc * amb->tangent_total.component(part);
        }
        return schubert_integrate(acc);
    }
    const auto& table = std::get<TabulatedModel>(m.geometry).pairings;
    const auto it = table.find({power, shape});
    if (it == table.end()) {
        throw std::out_of_range("model " + m.name + " records no pairing for h^" +
                                std::to_string(power) + " c_" + shape.to_string());
    }
    return it->second;
}

Rational chern_number(const ManifoldModel& m, const Partition& shape) {
    return pairing_number(m, 0, shape);
}

std::map<Partition, Rational> chern_numbers(const ManifoldModel& m) {
    std::map<Partition, Rational> out;
    for (const Partition& shape : Partition::all_of_weight(m.dim)) {
        out[shape] = checked_integer(chern_number(m, shape), "c_" + shape.to_string());
    }
    return out;
}

ChernNumbersDim4 chern_numbers_dim4(const ManifoldModel& m) {
    if (m.dim != 4) {
        throw std::invalid_argument("named Chern numbers need dimension 4, got " +
                                    std::to_string(m.dim));
    }
    const auto all = chern_numbers(m);
    return ChernNumbersDim4{all.at(Partition{1, 1, 1, 1}), all.at(Partition{2, 1, 1}),
                            all.at(Partition{2, 2}), all.at(Partition{3, 1}),
                            all.at(Partition{4})};
}

Rational euler_number(const ManifoldModel& m) {
    return checked_integer(chern_number(m, Partition{m.dim}), "c_" + std::to_string(m.dim));
}

Rational degree(const ManifoldModel& m) { return pairing_number(m, m.dim, Partition{}); }

std::map<Partition, Rational> pontrjagin_numbers(const ManifoldModel& m) {
    if (m.dim % 2 != 0) {
        throw std::invalid_argument("Pontrjagin numbers of a " + std::to_string(m.dim) +
                                    "-fold are undefined: no partition of " +
                                    std::to_string(m.dim) + "/2");
    }
    std::map<Partition, Rational> out;
    for (const Partition& tau : Partition::all_of_weight(m.dim / 2)) {
        GradedPolynomial poly = GradedPolynomial::one(m.dim);
        for (const int part : tau.parts()) {
            poly = poly * universal_pontrjagin(m.dim, part);
        }
        const Rational value =
            evaluate_pairing(poly, [&](const Partition& shape) { return chern_number(m, shape); });
        out[tau] = checked_integer(value, "p_" + tau.to_string());
    }
    return out;
}

Mod2Class stiefel_whitney_total(const ManifoldModel& m) {
    const auto* uni = std::get_if<UnivariateModel>(&m.geometry);
    if (uni == nullptr) {
        throw std::invalid_argument("total Stiefel-Whitney class needs a univariate model; " +
                                    m.name + " only has Stiefel-Whitney numbers");
    }
    return Mod2Class::reduce(uni->tangent_total);
}

std::map<Partition, int> stiefel_whitney_numbers(const ManifoldModel& m) {
    std::map<Partition, int> out;
    for (const auto& [shape, value] : chern_numbers(m)) {
        out[shape] = parity(value);
    }
    return out;
}

bool w2_vanishes(const ManifoldModel& m) {
    if (m.canonical_index) {
        return *m.canonical_index % 2 == 0;
    }
    if (const auto* uni = std::get_if<UnivariateModel>(&m.geometry)) {
        return parity(uni->tangent_total.coefficient(1)) == 0;
    }
    throw std::invalid_argument("no data to decide w_2 for " + m.name);
}

std::vector<std::string> validate_model(const ManifoldModel& m) {
    std::vector<std::string> problems;
    if (m.dim < 1) {
        problems.push_back("nonpositive dimension");
        return problems;
    }
    if (const auto* uni = std::get_if<UnivariateModel>(&m.geometry)) {
        if (uni->tangent_total.truncation() != m.dim) {
            problems.push_back("tangent class truncated at " +
                               std::to_string(uni->tangent_total.truncation()) +
                               " but dimension is " + std::to_string(m.dim));
        }
        if (uni->tangent_total.coefficient(0) != 1) {
            problems.push_back("tangent total class does not start at 1");
        }
        if (m.canonical_index &&
            uni->tangent_total.coefficient(1) != Rational(*m.canonical_index)) {
            problems.push_back("c_1 = " + to_string(uni->tangent_total.coefficient(1)) +
                               " h does not match canonical index " +
                               std::to_string(*m.canonical_index));
        }
        if (uni->top == 0) {
            problems.push_back("degenerate top normalization");
        }
    } else if (const auto* amb = std::get_if<SchubertModel>(&m.geometry)) {
        if (m.dim != amb->k * (amb->n - amb->k) - amb->codim) {
            problems.push_back("dimension does not match G(" + std::to_string(amb->k) + "," +
                               std::to_string(amb->n) + ") minus " + std::to_string(amb->codim) +
                               " hyperplanes");
        }
        if (m.canonical_index) {
            const SchubertClass expected =
                SchubertClass::sigma(amb->k, amb->n, Partition{1}, Rational(*m.canonical_index));
            if (!(amb->tangent_total.component(1) == expected)) {
                problems.push_back("c_1 does not match canonical index " +
                                   std::to_string(*m.canonical_index));
            }
        }
    } else {
        const auto& table = std::get<TabulatedModel>(m.geometry).pairings;
        if (table.empty()) {
            problems.push_back("empty pairing table");
        }
        for (const auto& [key, value] : table) {
            if (key.first < 0 || key.first + key.second.weight() != m.dim) {
                problems.push_back("pairing h^" + std::to_string(key.first) + " c_" +
                                   key.second.to_string() + " has degree " +
                                   std::to_string(key.first + key.second.weight()) +
                                   ", expected " + std::to_string(m.dim));
            }
        }
    }
    return problems;
}

}  // namespace chx
