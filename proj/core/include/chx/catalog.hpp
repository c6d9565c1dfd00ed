#pragma once

#include "chx/hodge.hpp"
#include "chx/manifold.hpp"
#include "chx/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

// The catalog bundles a manifold model with whatever non-ring data is on
// record for the space: a Hodge diamond, a quadratic-form constant, tags,
// pinned numbers and the one-line notes saying where each pin comes from.
// Some records are annotation-only and carry no model at all.

namespace chx {

// For a compact holomorphic-symplectic fourfold: (E^4) = constant . q(E)^2
// for every divisor class E, and q_generator records q(h) for the model's
// generator.
struct FujikiData {
    Rational constant;
    Rational q_generator;
    friend bool operator==(const FujikiData&, const FujikiData&) = default;
};

struct ManifoldRecord {
    std::string name;
    int dim = 0;
    std::optional<ManifoldModel> model;
    std::optional<HodgeDiamond> hodge;
    std::optional<FujikiData> fujiki;
    std::set<std::string> tags;
    std::map<std::string, std::string> provenance;  // pinned-value name -> source note
    std::map<std::string, Rational> stored;         // pinned numbers
    friend bool operator==(const ManifoldRecord&, const ManifoldRecord&) = default;
};

// b_k wherever the record knows it: the diamond first, stored "b<k>" second.
// Throws when neither source has it.
[[nodiscard]] int record_betti(const ManifoldRecord& r, int k);

// Euler number from the model, the diamond or the stored pins, in that
// order of preference.  Throws when no source has it.
[[nodiscard]] Rational record_euler(const ManifoldRecord& r);

// The cubic fourfold in P^5.
[[nodiscard]] ManifoldRecord build_cubic4();

// The smooth quadric fourfold in P^5.
[[nodiscard]] ManifoldRecord build_quadric4();

[[nodiscard]] ManifoldRecord build_pn(int n);

// The degree-5 del Pezzo fourfold G(2,5) cap H_1 cap H_2.
[[nodiscard]] ManifoldRecord build_dp5();

// The K3 deformation class, modeled by a quartic surface in P^3.
[[nodiscard]] ManifoldRecord build_k3();

// Hilbert square of a simply connected surface: Euler number
// (e^2 - e)/2 + 2e, b_2 goes up by one, and for a K3-type surface the full
// diamond from the symmetric square of the middle cohomology.  Only the
// K3 case gets more than Betti bookkeeping.
[[nodiscard]] ManifoldRecord build_hilb2(const ManifoldRecord& surface);

// Hilbert square of the K3 record, polarized by a square-2 class.
[[nodiscard]] ManifoldRecord build_hilb2_k3();

// Kodaira's simply connected minimal properly elliptic surface with the
// K3 intersection form; the model generator is the half-fiber h, K = 2h.
[[nodiscard]] ManifoldRecord build_kodaira_surface();

// The dimension-4 generalized Kummer deformation class; annotation-only,
// recorded for its second Betti number.
[[nodiscard]] ManifoldRecord build_kummer2();

[[nodiscard]] std::vector<std::string> builtin_names();

// Builds any name from builtin_names(); "pn(k)" parses for general k.
[[nodiscard]] ManifoldRecord build_builtin(const std::string& name);

// Structural and numeric cross-checks: model consistency, diamond axioms,
// model-vs-diamond Euler and signature agreement, Fujiki degree, and
// re-derivation of every stored value the engine can recompute.  Returns
// problems; empty means the record is coherent.
[[nodiscard]] std::vector<std::string> validate_record(const ManifoldRecord& r);

// Strict JSON persistence.  Saving is byte-deterministic; loading rejects
// unknown keys, malformed values and any stored number that disagrees with
// recomputation, all with field-path diagnostics.
[[nodiscard]] std::string record_to_json(const ManifoldRecord& r);
[[nodiscard]] ManifoldRecord record_from_json(const std::string& text);
void save_record(const ManifoldRecord& r, const std::string& path);
[[nodiscard]] ManifoldRecord load_record(const std::string& path);

}  // namespace chx
