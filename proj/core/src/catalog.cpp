#include "chx/catalog.hpp"

#include "chx/genus.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chx {

namespace {

using ordered_json = nlohmann::ordered_json;

HodgeDiamond diagonal_diamond(int n) {
    HodgeDiamond d(n);
    for (int p = 0; p <= n; ++p) {
        d.set(p, p, 1);
    }
    return d;
}

HodgeDiamond k3_diamond() {
    HodgeDiamond d(2);
    d.set(0, 0, 1);
    d.set(2, 0, 1);
    d.set(0, 2, 1);
    d.set(1, 1, 20);
    d.set(2, 2, 1);
    return d;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) {
            out += sep;
        }
        out += part;
    }
    return out;
}

// Values the engine can recompute from the record's own model or diamond;
// nullopt marks a pin the engine has no independent route to.
std::optional<Rational> recompute_stored(const ManifoldRecord& r, const std::string& key) {
    const bool surface = r.dim == 2;
    const bool fourfold = r.dim == 4;
    if (key == "euler") {
        if (r.model) {
            return euler_number(*r.model);
        }
        if (r.hodge) {
            return Rational(r.hodge->euler());
        }
        return std::nullopt;
    }
    if (key.size() == 2 && key[0] == 'b' && key[1] >= '0' && key[1] <= '9') {
        if (r.hodge) {
            return Rational(r.hodge->betti_number(key[1] - '0'));
        }
        return std::nullopt;
    }
    if (key == "chi0") {
        if (r.model) {
            return hrr_chi(*r.model, 0);
        }
        if (r.hodge) {
            return Rational(chi_structure_sheaf(*r.hodge));
        }
        return std::nullopt;
    }
    if (key == "degree") {
        if (r.model) {
            return degree(*r.model);
        }
        return std::nullopt;
    }
    if (r.model && fourfold &&
        (key == "c14" || key == "c12c2" || key == "c2sq" || key == "c1c3" || key == "c4")) {
        const ChernNumbersDim4 cn = chern_numbers_dim4(*r.model);
        if (key == "c14") {
            return cn.c14;
        }
        if (key == "c12c2") {
            return cn.c12c2;
        }
        if (key == "c2sq") {
            return cn.c2sq;
        }
        if (key == "c1c3") {
            return cn.c1c3;
        }
        return cn.c4;
    }
    if (r.model && surface && key == "c1sq") {
        return chern_number(*r.model, Partition{1, 1});
    }
    if (r.model && surface && key == "c2") {
        return chern_number(*r.model, Partition{2});
    }
    if (key == "signature") {
        if (r.model && (surface || fourfold)) {
            return l_genus_signature(*r.model);
        }
        if (r.hodge && r.dim % 2 == 0) {
            return Rational(signature_from_hodge(*r.hodge));
        }
        return std::nullopt;
    }
    if (key == "signature_reported") {
        if (r.hodge && fourfold) {
            return Rational(signature_from_hodge_legacy(*r.hodge));
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

int record_betti(const ManifoldRecord& r, int k) {
    if (r.hodge) {
        return r.hodge->betti_number(k);
    }
    const auto it = r.stored.find("b" + std::to_string(k));
    if (it != r.stored.end()) {
        return to_integer(it->second).convert_to<int>();
    }
    throw std::invalid_argument("no b_" + std::to_string(k) + " on record for " + r.name);
}

Rational record_euler(const ManifoldRecord& r) {
    if (r.model) {
        return euler_number(*r.model);
    }
    if (r.hodge) {
        return Rational(r.hodge->euler());
    }
    const auto it = r.stored.find("euler");
    if (it != r.stored.end()) {
        return it->second;
    }
    throw std::invalid_argument("no Euler number on record for " + r.name);
}

ManifoldRecord build_cubic4() {
    ManifoldRecord r;
    r.name = "cubic4";
    r.dim = 4;
    ManifoldModel m = complete_intersection(5, {3});
    m.name = r.name;
    r.model = m;
    HodgeDiamond d = diagonal_diamond(4);
    d.set(2, 2, 21);
    d.set(3, 1, 1);
    d.set(1, 3, 1);
    r.hodge = d;
    r.tags = {"fano", "simply_connected"};
    r.stored["degree"] = Rational(3);
    r.stored["euler"] = Rational(27);
    r.stored["b4"] = Rational(23);
    r.stored["signature"] = Rational(19);
    r.stored["signature_reported"] = Rational(23);
    r.provenance["signature_reported"] =
        "recorded middle-cohomology count carrying the constant +4 convention";
    return r;
}

ManifoldRecord build_quadric4() {
    ManifoldRecord r;
    r.name = "quadric4";
    r.dim = 4;
    ManifoldModel m = complete_intersection(5, {2});
    m.name = r.name;
    r.model = m;
    HodgeDiamond d = diagonal_diamond(4);
    d.set(2, 2, 2);
    r.hodge = d;
    r.tags = {"fano", "simply_connected"};
    r.stored["degree"] = Rational(2);
    r.stored["euler"] = Rational(6);
    r.stored["signature"] = Rational(2);
    return r;
}

ManifoldRecord build_pn(int n) {
    ManifoldRecord r;
    r.name = "pn(" + std::to_string(n) + ")";
    r.dim = n;
    ManifoldModel m = projective_space(n);
    m.name = r.name;
    r.model = m;
    r.hodge = diagonal_diamond(n);
    r.tags = {"fano", "simply_connected"};
    r.stored["degree"] = Rational(1);
    r.stored["euler"] = Rational(n + 1);
    if (n == 2 || n == 4) {
        r.stored["signature"] = Rational(1);
    }
    return r;
}

ManifoldRecord build_dp5() {
    ManifoldRecord r;
    r.name = "dp5";
    r.dim = 4;
    ManifoldModel m = grassmannian_complete_intersection(2, 5, 2);
    m.name = r.name;
    r.model = m;
    HodgeDiamond d = diagonal_diamond(4);
    d.set(2, 2, 2);
    r.hodge = d;
    r.tags = {"fano", "simply_connected"};
    r.stored["degree"] = Rational(5);
    r.stored["euler"] = Rational(6);
    r.stored["signature"] = Rational(2);
    return r;
}

ManifoldRecord build_k3() {
    ManifoldRecord r;
    r.name = "k3";
    r.dim = 2;
    ManifoldModel m = complete_intersection(3, {4});
    m.name = r.name;
    r.model = m;
    r.hodge = k3_diamond();
    r.tags = {"K_trivial", "simply_connected"};
    r.stored["degree"] = Rational(4);
    r.stored["euler"] = Rational(24);
    r.stored["b2"] = Rational(22);
    r.stored["c1sq"] = Rational(0);
    r.stored["c2"] = Rational(24);
    r.stored["signature"] = Rational(-16);
    r.provenance["degree"] = "a quartic surface in P^3 realizes the deformation class";
    return r;
}

ManifoldRecord build_hilb2(const ManifoldRecord& surface) {
    if (surface.dim != 2) {
        throw std::invalid_argument("Hilbert square needs a surface record, got dimension " +
                                    std::to_string(surface.dim));
    }
    const Rational e = record_euler(surface);
    const Rational e2 = (e * e - e) / 2 + 2 * e;

    ManifoldRecord r;
    r.name = surface.name + "^[2]";
    r.dim = 4;
    r.stored["euler"] = e2;
    if (surface.tags.count("simply_connected")) {
        r.tags.insert("simply_connected");
    }
    bool have_b2 = true;
    int b2_surface = 0;
    try {
        b2_surface = record_betti(surface, 2);
    } catch (const std::invalid_argument&) {
        have_b2 = false;
    }
    if (have_b2) {
        const int b2 = b2_surface + 1;
        r.stored["b2"] = Rational(b2);
        if (r.tags.count("simply_connected")) {
            r.stored["b4"] = e2 - 2 - 2 * b2;
        }
    }
    if (surface.hodge && *surface.hodge == k3_diamond()) {
        const int a = 1;
        const int b = 21;
        HodgeDiamond d(4);
        d.set(0, 0, 1);
        d.set(4, 4, 1);
        d.set(2, 0, a);
        d.set(0, 2, a);
        d.set(4, 2, a);
        d.set(2, 4, a);
        d.set(1, 1, b);
        d.set(3, 3, b);
        d.set(4, 0, a * (a + 1) / 2);
        d.set(0, 4, a * (a + 1) / 2);
        d.set(3, 1, a * b);
        d.set(1, 3, a * b);
        d.set(2, 2, b * (b + 1) / 2 + a * a);
        r.hodge = d;
        r.tags.insert("K_trivial");
        r.tags.insert("hyperkahler");
    }
    return r;
}

ManifoldRecord build_hilb2_k3() {
    ManifoldRecord r = build_hilb2(build_k3());
    r.name = "hilb2_k3";
    TabulatedModel table;
    const auto pin = [&table](int power, const Partition& shape, const Rational& value) {
        table.pairings[{power, shape}] = value;
    };
    pin(0, Partition{1, 1, 1, 1}, Rational(0));
    pin(0, Partition{2, 1, 1}, Rational(0));
    pin(0, Partition{2, 2}, Rational(828));
    pin(0, Partition{3, 1}, Rational(0));
    pin(0, Partition{4}, Rational(324));
    pin(1, Partition{1, 1, 1}, Rational(0));
    pin(1, Partition{2, 1}, Rational(0));
    pin(1, Partition{3}, Rational(0));
    pin(2, Partition{1, 1}, Rational(0));
    pin(2, Partition{2}, Rational(60));
    pin(3, Partition{1}, Rational(0));
    pin(4, Partition{}, Rational(12));
    ManifoldModel m;
    m.name = r.name;
    m.dim = 4;
    m.geometry = table;
    m.canonical_index = 0;
    r.model = m;
    r.fujiki = FujikiData{Rational(3), Rational(2)};
    r.stored["degree"] = Rational(12);
    r.stored["c2sq"] = Rational(828);
    r.stored["chi0"] = Rational(3);
    r.stored["signature"] = Rational(156);
    r.provenance["c2sq"] = "forced by chi(O) = 3 and the Euler number through Riemann-Roch";
    r.provenance["degree"] = "Fujiki relation (E^4) = 3 q(E)^2 at the square-2 polarization";
    r.provenance["h2c2"] =
        "h^2 . c_2 = 60, the standard Hilbert-square pairing at a square-2 polarization";
    r.provenance["c_odd"] =
        "odd Chern classes vanish: the symplectic form identifies T with its dual";
    return r;
}

ManifoldRecord build_kodaira_surface() {
    ManifoldRecord r;
    r.name = "kodaira_w_surface";
    r.dim = 2;
    TabulatedModel table;
    table.pairings[{0, Partition{1, 1}}] = Rational(0);
    table.pairings[{0, Partition{2}}] = Rational(24);
    table.pairings[{1, Partition{1}}] = Rational(0);
    table.pairings[{2, Partition{}}] = Rational(0);
    ManifoldModel m;
    m.name = r.name;
    m.dim = 2;
    m.geometry = table;
    m.canonical_index = -2;
    r.model = m;
    r.hodge = k3_diamond();
    r.tags = {"simply_connected"};
    r.stored["degree"] = Rational(0);
    r.stored["euler"] = Rational(24);
    r.stored["b2"] = Rational(22);
    r.stored["c1sq"] = Rational(0);
    r.stored["c2"] = Rational(24);
    r.stored["signature"] = Rational(-16);
    r.stored["kappa"] = Rational(1);
    r.provenance["kappa"] = "minimal properly elliptic: Kodaira dimension 1";
    r.provenance["degree"] =
        "the generator is the half-fiber h with K = 2h, so every h-power of c_1 pairs to zero";
    return r;
}

ManifoldRecord build_kummer2() {
    ManifoldRecord r;
    r.name = "kummer2";
    r.dim = 4;
    r.tags = {"K_trivial", "hyperkahler", "simply_connected"};
    r.stored["b2"] = Rational(7);
    r.provenance["b2"] =
        "second Betti number of the dimension-4 generalized Kummer deformation class";
    return r;
}

std::vector<std::string> builtin_names() {
    return {"cubic4", "dp5",    "hilb2_k3", "k3",    "kodaira_w_surface",
            "kummer2", "pn(2)", "pn(3)",    "pn(4)", "quadric4"};
}

ManifoldRecord build_builtin(const std::string& name) {
    if (name == "cubic4") {
        return build_cubic4();
    }
    if (name == "quadric4") {
        return build_quadric4();
    }
    if (name == "dp5") {
        return build_dp5();
    }
    if (name == "k3") {
        return build_k3();
    }
    if (name == "hilb2_k3") {
        return build_hilb2_k3();
    }
    if (name == "kodaira_w_surface") {
        return build_kodaira_surface();
    }
    if (name == "kummer2") {
        return build_kummer2();
    }
    if (name.rfind("pn(", 0) == 0 && name.size() > 4 && name.back() == ')') {
        const std::string digits = name.substr(3, name.size() - 4);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            const int n = std::stoi(digits);
            if (n >= 1 && n <= 16) {
                return build_pn(n);
            }
        }
    }
    throw std::invalid_argument("unknown record name: " + name + " (known: " +
                                join(builtin_names(), ", ") + ")");
}

std::vector<std::string> validate_record(const ManifoldRecord& r) {
    std::vector<std::string> problems;
    if (r.name.empty()) {
        problems.push_back("empty record name");
    }
    if (r.dim < 1) {
        problems.push_back("nonpositive dimension");
        return problems;
    }
    if (r.model) {
        if (r.model->name != r.name) {
            problems.push_back("model name " + r.model->name + " does not match record name " +
                               r.name);
        }
        if (r.model->dim != r.dim) {
            problems.push_back("model dimension " + std::to_string(r.model->dim) +
                               " does not match record dimension " + std::to_string(r.dim));
        }
        for (auto& p : validate_model(*r.model)) {
            problems.push_back(std::move(p));
        }
        try {
            static_cast<void>(chern_numbers(*r.model));
            static_cast<void>(hrr_chi(*r.model, 0));
        } catch (const std::exception& e) {
            problems.push_back(e.what());
        }
        if (r.model->canonical_index) {
            if (r.tags.count("fano") && *r.model->canonical_index <= 0) {
                problems.push_back("fano tag with canonical index " +
                                   std::to_string(*r.model->canonical_index));
            }
            if (r.tags.count("K_trivial") && *r.model->canonical_index != 0) {
                problems.push_back("K_trivial tag with canonical index " +
                                   std::to_string(*r.model->canonical_index));
            }
        }
    }
    if (r.hodge) {
        if (r.hodge->dim() != r.dim) {
            problems.push_back("diamond dimension " + std::to_string(r.hodge->dim()) +
                               " does not match record dimension " + std::to_string(r.dim));
        } else {
            for (auto& p : r.hodge->validate()) {
                problems.push_back(std::move(p));
            }
            if (r.model) {
                try {
                    const Rational e_model = euler_number(*r.model);
                    if (e_model != Rational(r.hodge->euler())) {
                        problems.push_back("model Euler number " + to_string(e_model) +
                                           " does not match the diamond's " +
                                           std::to_string(r.hodge->euler()));
                    }
                    const Rational chi_model = hrr_chi(*r.model, 0);
                    if (chi_model != Rational(chi_structure_sheaf(*r.hodge))) {
                        problems.push_back("model chi(O) " + to_string(chi_model) +
                                           " does not match the diamond's " +
                                           std::to_string(chi_structure_sheaf(*r.hodge)));
                    }
                    if (r.dim == 2 || r.dim == 4) {
                        const Rational tau = l_genus_signature(*r.model);
                        if (tau != Rational(signature_from_hodge(*r.hodge))) {
                            problems.push_back("index-theorem signature " + to_string(tau) +
                                               " does not match the diamond count " +
                                               std::to_string(signature_from_hodge(*r.hodge)));
                        }
                    }
                } catch (const std::exception& e) {
                    problems.push_back(e.what());
                }
            }
        }
    }
    if (r.fujiki && r.model) {
        const Rational expected = r.fujiki->constant * r.fujiki->q_generator * r.fujiki->q_generator;
        try {
            const Rational top = degree(*r.model);
            if (top != expected) {
                problems.push_back("degree " + to_string(top) + " does not match the Fujiki value " +
                                   to_string(expected));
            }
        } catch (const std::exception& e) {
            problems.push_back(e.what());
        }
    }
    for (const auto& [key, value] : r.stored) {
        try {
            const std::optional<Rational> redone = recompute_stored(r, key);
            if (redone && *redone != value) {
                problems.push_back("stored " + key + " = " + to_string(value) +
                                   " disagrees with recomputed " + to_string(*redone));
            }
        } catch (const std::exception& e) {
            problems.push_back(std::string("recomputing ") + key + ": " + e.what());
        }
    }
    return problems;
}

namespace {

// ---- JSON writing -------------------------------------------------------

ordered_json shape_to_json(const Partition& shape) {
    ordered_json arr = ordered_json::array();
    for (const int part : shape.parts()) {
        arr.push_back(part);
    }
    return arr;
}

ordered_json model_to_json(const ManifoldModel& m) {
    ordered_json j;
    if (const auto* uni = std::get_if<UnivariateModel>(&m.geometry)) {
        j["kind"] = "univariate";
        if (m.canonical_index) {
            j["canonical_index"] = *m.canonical_index;
        }
        ordered_json total;
        for (const auto& [deg, coeff] : uni->tangent_total.terms()) {
            total[std::to_string(deg)] = to_string(coeff);
        }
        j["tangent_total"] = std::move(total);
        j["top"] = to_string(uni->top);
    } else if (const auto* amb = std::get_if<SchubertModel>(&m.geometry)) {
        j["kind"] = "schubert";
        if (m.canonical_index) {
            j["canonical_index"] = *m.canonical_index;
        }
        j["k"] = amb->k;
        j["n"] = amb->n;
        j["codim"] = amb->codim;
        ordered_json total = ordered_json::array();
        for (const auto& [shape, coeff] : amb->tangent_total.terms()) {
            ordered_json term;
            term["shape"] = shape_to_json(shape);
            term["value"] = to_string(coeff);
            total.push_back(std::move(term));
        }
        j["tangent_total"] = std::move(total);
    } else {
        const auto& table = std::get<TabulatedModel>(m.geometry);
        j["kind"] = "tabulated";
        if (m.canonical_index) {
            j["canonical_index"] = *m.canonical_index;
        }
        ordered_json pairings = ordered_json::array();
        for (const auto& [key, value] : table.pairings) {
            ordered_json entry;
            entry["power"] = key.first;
            entry["shape"] = shape_to_json(key.second);
            entry["value"] = to_string(value);
            pairings.push_back(std::move(entry));
        }
        j["pairings"] = std::move(pairings);
    }
    return j;
}

// ---- JSON reading -------------------------------------------------------

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

void check_keys(const ordered_json& obj, const std::vector<std::string>& allowed,
                const std::string& path) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const auto& key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail(path + "." + item.key(), "unknown field");
        }
    }
}

const ordered_json& require(const ordered_json& obj, const char* key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(path, std::string("missing field \"") + key + "\"");
    }
    return *it;
}

int read_int(const ordered_json& j, const std::string& path) {
    if (!j.is_number_integer()) {
        fail(path, "expected an integer");
    }
    return j.get<int>();
}

std::string read_string(const ordered_json& j, const std::string& path) {
    if (!j.is_string()) {
        fail(path, "expected a string");
    }
    return j.get<std::string>();
}

Rational read_rational(const ordered_json& j, const std::string& path) {
    const std::string text = read_string(j, path);
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

Partition read_shape(const ordered_json& j, const std::string& path) {
    if (!j.is_array()) {
        fail(path, "expected an array of parts");
    }
    std::vector<int> parts;
    for (std::size_t i = 0; i < j.size(); ++i) {
        parts.push_back(read_int(j[i], path + "[" + std::to_string(i) + "]"));
    }
    try {
        return Partition(parts);
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

ManifoldModel read_model(const ordered_json& j, const std::string& name, int dim,
                         const std::string& path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    ManifoldModel m;
    m.name = name;
    m.dim = dim;
    const std::string kind = read_string(require(j, "kind", path), path + ".kind");
    if (j.contains("canonical_index")) {
        m.canonical_index = read_int(j["canonical_index"], path + ".canonical_index");
    }
    if (kind == "univariate") {
        check_keys(j, {"kind", "canonical_index", "tangent_total", "top"}, path);
        const ordered_json& total = require(j, "tangent_total", path);
        if (!total.is_object()) {
            fail(path + ".tangent_total", "expected an object of degree -> coefficient");
        }
        GradedClass tangent(dim);
        for (const auto& item : total.items()) {
            const std::string entry_path = path + ".tangent_total." + item.key();
            if (item.key().empty() ||
                item.key().find_first_not_of("0123456789") != std::string::npos) {
                fail(entry_path, "degree key must be a non-negative integer");
            }
            const int degree = std::stoi(item.key());
            if (degree > dim) {
                fail(entry_path, "degree exceeds the dimension " + std::to_string(dim));
            }
            tangent.set_coefficient(degree, read_rational(item.value(), entry_path));
        }
        m.geometry =
            UnivariateModel{tangent, read_rational(require(j, "top", path), path + ".top")};
    } else if (kind == "schubert") {
        check_keys(j, {"kind", "canonical_index", "k", "n", "codim", "tangent_total"}, path);
        const int k = read_int(require(j, "k", path), path + ".k");
        const int n = read_int(require(j, "n", path), path + ".n");
        const int codim = read_int(require(j, "codim", path), path + ".codim");
        if (k < 1 || n <= k) {
            fail(path, "need 1 <= k < n for a Grassmannian");
        }
        SchubertClass tangent(k, n);
        const ordered_json& total = require(j, "tangent_total", path);
        if (!total.is_array()) {
            fail(path + ".tangent_total", "expected an array of {shape, value} terms");
        }
        for (std::size_t i = 0; i < total.size(); ++i) {
            const std::string entry_path = path + ".tangent_total[" + std::to_string(i) + "]";
            const ordered_json& term = total[i];
            if (!term.is_object()) {
                fail(entry_path, "expected an object");
            }
            check_keys(term, {"shape", "value"}, entry_path);
            const Partition shape =
                read_shape(require(term, "shape", entry_path), entry_path + ".shape");
            if (!shape.fits_in_box(k, n - k)) {
                fail(entry_path + ".shape", "shape " + shape.to_string() +
                                                " falls outside the " + std::to_string(k) + " x " +
                                                std::to_string(n - k) + " box");
            }
            tangent.set_coefficient(
                shape, read_rational(require(term, "value", entry_path), entry_path + ".value"));
        }
        m.geometry = SchubertModel{k, n, codim, tangent};
    } else if (kind == "tabulated") {
        check_keys(j, {"kind", "canonical_index", "pairings"}, path);
        TabulatedModel table;
        const ordered_json& pairings = require(j, "pairings", path);
        if (!pairings.is_array()) {
            fail(path + ".pairings", "expected an array of {power, shape, value} entries");
        }
        for (std::size_t i = 0; i < pairings.size(); ++i) {
            const std::string entry_path = path + ".pairings[" + std::to_string(i) + "]";
            const ordered_json& entry = pairings[i];
            if (!entry.is_object()) {
                fail(entry_path, "expected an object");
            }
            check_keys(entry, {"power", "shape", "value"}, entry_path);
            const int power = read_int(require(entry, "power", entry_path), entry_path + ".power");
            const Partition shape =
                read_shape(require(entry, "shape", entry_path), entry_path + ".shape");
            if (table.pairings.count({power, shape}) != 0) {
                fail(entry_path, "duplicate pairing h^" + std::to_string(power) + " c_" +
                                     shape.to_string());
            }
            table.pairings[{power, shape}] =
                read_rational(require(entry, "value", entry_path), entry_path + ".value");
        }
        m.geometry = table;
    } else {
        fail(path + ".kind", "unknown model kind \"" + kind + "\"");
    }
    return m;
}

}  // namespace

std::string record_to_json(const ManifoldRecord& r) {
    ordered_json j;
    j["version"] = 1;
    j["name"] = r.name;
    j["dim"] = r.dim;
    if (r.model) {
        j["model"] = model_to_json(*r.model);
    }
    if (r.hodge) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : r.hodge->rows()) {
            rows.push_back(row);
        }
        j["hodge"] = std::move(rows);
    }
    if (r.fujiki) {
        ordered_json f;
        f["constant"] = to_string(r.fujiki->constant);
        f["q_generator"] = to_string(r.fujiki->q_generator);
        j["fujiki"] = std::move(f);
    }
    if (!r.tags.empty()) {
        j["tags"] = r.tags;
    }
    if (!r.provenance.empty()) {
        j["provenance"] = r.provenance;
    }
    if (!r.stored.empty()) {
        ordered_json stored;
        for (const auto& [key, value] : r.stored) {
            stored[key] = to_string(value);
        }
        j["stored"] = std::move(stored);
    }
    return j.dump(2) + "\n";
}

ManifoldRecord record_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::runtime_error(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        fail("record", "expected a JSON object");
    }
    check_keys(j, {"version", "name", "dim", "model", "hodge", "fujiki", "tags", "provenance",
                   "stored"},
               "record");
    const int version = read_int(require(j, "version", "record"), "record.version");
    if (version != 1) {
        fail("record.version", "unsupported version " + std::to_string(version));
    }
    ManifoldRecord r;
    r.name = read_string(require(j, "name", "record"), "record.name");
    r.dim = read_int(require(j, "dim", "record"), "record.dim");
    if (j.contains("model")) {
        r.model = read_model(j["model"], r.name, r.dim, "record.model");
    }
    if (j.contains("hodge")) {
        const ordered_json& grid = j["hodge"];
        if (!grid.is_array()) {
            fail("record.hodge", "expected an array of rows");
        }
        std::vector<std::vector<int>> rows;
        for (std::size_t p = 0; p < grid.size(); ++p) {
            const std::string row_path = "record.hodge[" + std::to_string(p) + "]";
            if (!grid[p].is_array()) {
                fail(row_path, "expected an array");
            }
            std::vector<int> row;
            for (std::size_t q = 0; q < grid[p].size(); ++q) {
                row.push_back(
                    read_int(grid[p][q], row_path + "[" + std::to_string(q) + "]"));
            }
            rows.push_back(std::move(row));
        }
        try {
            r.hodge = HodgeDiamond::from_rows(rows);
        } catch (const std::invalid_argument& e) {
            fail("record.hodge", e.what());
        }
    }
    if (j.contains("fujiki")) {
        const ordered_json& f = j["fujiki"];
        if (!f.is_object()) {
            fail("record.fujiki", "expected an object");
        }
        check_keys(f, {"constant", "q_generator"}, "record.fujiki");
        r.fujiki = FujikiData{
            read_rational(require(f, "constant", "record.fujiki"), "record.fujiki.constant"),
            read_rational(require(f, "q_generator", "record.fujiki"),
                          "record.fujiki.q_generator")};
    }
    if (j.contains("tags")) {
        const ordered_json& tags = j["tags"];
        if (!tags.is_array()) {
            fail("record.tags", "expected an array of strings");
        }
        for (std::size_t i = 0; i < tags.size(); ++i) {
            r.tags.insert(read_string(tags[i], "record.tags[" + std::to_string(i) + "]"));
        }
    }
    if (j.contains("provenance")) {
        const ordered_json& prov = j["provenance"];
        if (!prov.is_object()) {
            fail("record.provenance", "expected an object");
        }
        for (const auto& item : prov.items()) {
            r.provenance[item.key()] =
                read_string(item.value(), "record.provenance." + item.key());
        }
    }
    if (j.contains("stored")) {
        const ordered_json& stored = j["stored"];
        if (!stored.is_object()) {
            fail("record.stored", "expected an object");
        }
        for (const auto& item : stored.items()) {
            r.stored[item.key()] = read_rational(item.value(), "record.stored." + item.key());
        }
    }
    const std::vector<std::string> problems = validate_record(r);
    if (!problems.empty()) {
        throw std::runtime_error("invalid record " + r.name + ": " + join(problems, "; "));
    }
    return r;
}

void save_record(const ManifoldRecord& r, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << record_to_json(r);
    if (!out) {
        throw std::runtime_error("write to " + path + " failed");
    }
}

ManifoldRecord load_record(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return record_from_json(buffer.str());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace chx
