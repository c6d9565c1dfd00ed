#include "chx/deduce.hpp"

#include "chx/catalog.hpp"
#include "chx/graded.hpp"
#include "chx/linear.hpp"
#include "chx/manifold.hpp"
#include "chx/partition.hpp"
#include "chx/trace.hpp"

#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace chx;

namespace {

// Independent chi(O) bookkeeping for the brute-force enumerator below, kept
// deliberately separate from bb_factor_chi.
Int oracle_chi(const BBPiece& piece) {
    if (piece.kind == BBKind::cy_odd) {
        return 0;
    }
    if (piece.kind == BBKind::cy_even) {
        return 2;
    }
    return Int(piece.dim / 2 + 1);
}

// Brute-force oracle: every integer partition of dim into parts >= 2, each
// part decorated with every kind that part admits, normalized through a set.
// Only the piece inventory is shared with the implementation; the walk is a
// plain odometer over kind choices instead of a floor-bounded recursion.
std::set<BBShape> oracle_shapes(int dim, const Int& chi) {
    std::set<BBShape> out;
    for (const Partition& partition : Partition::all_of_weight(dim)) {
        const std::vector<int> parts = partition.parts();
        if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 2; })) {
            continue;
        }
        std::vector<std::vector<BBKind>> choices;
        for (const int p : parts) {
            std::vector<BBKind> kinds;
            if (p % 2 == 1) {
                kinds.push_back(BBKind::cy_odd);
            } else {
                if (p >= 4) {
                    kinds.push_back(BBKind::cy_even);
                }
                kinds.push_back(BBKind::hk);
            }
            choices.push_back(kinds);
        }
        std::vector<std::size_t> odo(choices.size(), 0);
        while (true) {
            BBShape shape;
            Int product = 1;
            for (std::size_t i = 0; i < choices.size(); ++i) {
                const BBPiece piece{choices[i][odo[i]], parts[i]};
                shape.factors.push_back(piece);
                product *= oracle_chi(piece);
            }
            std::sort(shape.factors.begin(), shape.factors.end());
            if (product == chi) {
                out.insert(shape);
            }
            std::size_t i = 0;
            while (i < odo.size() && ++odo[i] == choices[i].size()) {
                odo[i++] = 0;
            }
            if (i == odo.size()) {
                break;
            }
        }
    }
    return out;
}

const TraceStep& step_with(const DeductionTrace& trace, const std::string& fragment) {
    for (const TraceStep& step : trace.steps) {
        if (step.claim.find(fragment) != std::string::npos) {
            return step;
        }
    }
    throw std::logic_error("no step mentions: " + fragment);
}

Rational value_of(const TraceStep& step, const std::string& label) {
    for (const TraceValue& v : step.values) {
        if (v.label == label) {
            return v.value;
        }
    }
    throw std::logic_error("no value labeled: " + label);
}

ManifoldRecord hypothetical_quadric6() {
    ManifoldRecord r;
    r.name = "quadric6";
    r.dim = 6;
    r.model = complete_intersection(7, {2});
    r.model->name = "quadric6";
    r.tags = {"fano", "simply_connected"};
    r.stored["b2"] = 1;
    return r;
}

}  // namespace

TEST_CASE("decomposition pieces order by dimension then kind") {
    CHECK(bb_factor_chi({BBKind::cy_odd, 3}) == 0);
    CHECK(bb_factor_chi({BBKind::cy_even, 4}) == 2);
    CHECK(bb_factor_chi({BBKind::hk, 2}) == 2);
    CHECK(bb_factor_chi({BBKind::hk, 4}) == 3);
    CHECK(bb_factor_chi({BBKind::hk, 10}) == 6);

    CHECK(BBPiece{BBKind::hk, 2} < BBPiece{BBKind::cy_odd, 3});
    CHECK(BBPiece{BBKind::cy_even, 4} < BBPiece{BBKind::hk, 4});
    CHECK_FALSE(BBPiece{BBKind::hk, 4} < BBPiece{BBKind::hk, 4});

    CHECK(to_string(BBShape{{{BBKind::cy_odd, 3}, {BBKind::cy_odd, 3}}}) == "CY(3) x CY(3)");
    CHECK(to_string(BBShape{{{BBKind::hk, 2}}}) == "HK(2)");
}

TEST_CASE("bb decompositions agree with a brute-force enumeration") {
    for (int dim = 2; dim <= 10; ++dim) {
        for (int chi = 0; chi <= 8; ++chi) {
            const std::vector<BBShape> got = bb_decompositions(dim, Int(chi));
            CHECK(std::is_sorted(got.begin(), got.end()));
            CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
            const std::set<BBShape> expected = oracle_shapes(dim, Int(chi));
            REQUIRE(got.size() == expected.size());
            CHECK(std::equal(got.begin(), got.end(), expected.begin()));
            for (const BBShape& shape : got) {
                int total = 0;
                Int product = 1;
                for (const BBPiece& piece : shape.factors) {
                    total += piece.dim;
                    product *= bb_factor_chi(piece);
                }
                CHECK(total == dim);
                CHECK(product == chi);
            }
        }
    }
}

TEST_CASE("bb decompositions, pinned small cases") {
    CHECK(bb_decompositions(2, 0).empty());
    CHECK(bb_decompositions(4, 0).empty());

    const auto single = [](BBKind kind, int dim) { return BBShape{{{kind, dim}}}; };
    CHECK(bb_decompositions(2, 2) == std::vector<BBShape>{single(BBKind::hk, 2)});
    CHECK(bb_decompositions(3, 0) == std::vector<BBShape>{single(BBKind::cy_odd, 3)});
    CHECK(bb_decompositions(4, 2) == std::vector<BBShape>{single(BBKind::cy_even, 4)});
    CHECK(bb_decompositions(4, 3) == std::vector<BBShape>{single(BBKind::hk, 4)});
    CHECK(bb_decompositions(4, 4) ==
          std::vector<BBShape>{BBShape{{{BBKind::hk, 2}, {BBKind::hk, 2}}}});
    CHECK(bb_decompositions(6, 0) ==
          std::vector<BBShape>{BBShape{{{BBKind::cy_odd, 3}, {BBKind::cy_odd, 3}}}});
    CHECK(bb_decompositions(6, 2) == std::vector<BBShape>{single(BBKind::cy_even, 6)});

    const std::vector<BBShape> d5 = bb_decompositions(5, 0);
    REQUIRE(d5.size() == 2);
    CHECK(to_string(d5[0]) == "HK(2) x CY(3)");
    CHECK(to_string(d5[1]) == "CY(5)");

    const std::vector<BBShape> d84 = bb_decompositions(8, 4);
    REQUIRE(d84.size() == 2);
    CHECK(to_string(d84[0]) == "HK(2) x CY(6)");
    CHECK(to_string(d84[1]) == "CY(4) x CY(4)");

    CHECK_THROWS_AS((void)bb_decompositions(1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)bb_decompositions(0, 2), std::invalid_argument);
}

TEST_CASE("justification tags round-trip through their names") {
    const std::vector<std::pair<Justification, std::string>> table = {
        {Justification::pontrjagin_invariance, "pontrjagin-invariance"},
        {Justification::sw_invariance, "sw-invariance"},
        {Justification::hodge_symmetry, "hodge-symmetry"},
        {Justification::serre_duality, "serre-duality"},
        {Justification::kodaira_vanishing, "kodaira-vanishing"},
        {Justification::rr, "rr"},
        {Justification::integrality, "integrality"},
        {Justification::divisibility, "divisibility"},
        {Justification::fujiki, "fujiki"},
        {Justification::miyaoka, "miyaoka"},
        {Justification::bb_decomposition, "bb-decomposition"},
        {Justification::lefschetz, "lefschetz"},
    };
    for (const auto& [tag, name] : table) {
        CHECK(to_string(tag) == name);
        CHECK(justification_from_string(name) == tag);
    }
    CHECK_THROWS_AS((void)justification_from_string("handwaving"), std::invalid_argument);
}

TEST_CASE("every pinned verdict reproduces and replays") {
    const std::vector<VerdictPin>& pins = verdict_pins();
    CHECK(pins.size() == 18);
    for (const VerdictPin& pin : pins) {
        CAPTURE(pin.pipeline);
        CAPTURE(pin.target);
        const DeductionTrace trace = run_pipeline(pin.pipeline, pin.target);
        CHECK(trace.pipeline == pin.pipeline);
        CHECK(trace.subject == pin.target);
        CHECK(trace.verdict.statement == pin.statement);
        CHECK(replay_matches(trace));
        REQUIRE(expected_verdict(pin.pipeline, pin.target).has_value());
        CHECK(*expected_verdict(pin.pipeline, pin.target) == pin.statement);
    }
    CHECK_FALSE(expected_verdict("bb", "9,9").has_value());
    CHECK_FALSE(expected_verdict("no-such-pipeline", "cubic4").has_value());
}

TEST_CASE("the cubic partner solve does not depend on the signature evaluator") {
    const ManifoldRecord cubic = build_builtin("cubic4");
    const DeductionTrace canonical = cubic_partner_solve(cubic, SignatureEvaluator::canonical);
    const DeductionTrace legacy = cubic_partner_solve(cubic, SignatureEvaluator::legacy);
    CHECK(canonical == legacy);
    CHECK(canonical == run_pipeline("cubic-partner", "cubic4"));
}

TEST_CASE("cubic partner solve, step by step") {
    const DeductionTrace trace = cubic_partner_solve(build_builtin("cubic4"));
    REQUIRE(trace.steps.size() == 18);

    const TraceStep& row = step_with(trace, "signature matching reduces");
    CHECK(value_of(row, "a coefficient") == 2);
    CHECK(value_of(row, "b coefficient") == -2);
    CHECK(value_of(row, "c coefficient") == 1);
    CHECK(value_of(row, "right-hand side") == 19);

    CHECK(value_of(step_with(trace, "the two rows give"), "b") == 1);
    CHECK(step_with(trace, "candidates scan odd r").tag == Justification::rr);
    CHECK(value_of(step_with(trace, "candidates scan odd r"), "bound") == 19);

    // r = 5 forces chi(O_Y) = 6, and Riemann-Roch then hands L . c_3 the
    // non-integer value -258/5; the trace shows the divisibility failure.
    const TraceStep& five = step_with(trace, "r = 5 rejected");
    CHECK(five.claim == "r = 5 rejected: 5 L . c_3(Y) = -258 is not divisible by 5");
    CHECK(five.tag == Justification::divisibility);
    CHECK(value_of(five, "r L . c_3(Y)") == -258);

    const TraceStep& survivor = step_with(trace, "r = 3:");
    CHECK(value_of(survivor, "a") == 0);
    CHECK(value_of(survivor, "L . c_3(Y)") == -6);

    CHECK(trace.verdict.solutions == std::vector<std::string>{"(r, a) = (3, 0)"});

    CHECK_THROWS_AS((void)cubic_partner_solve(build_builtin("quadric4")), std::invalid_argument);
    CHECK_THROWS_AS((void)cubic_partner_solve(build_builtin("hilb2_k3")), std::invalid_argument);
}

TEST_CASE("hk partner pipeline, step by step") {
    const DeductionTrace trace = hk_partner_pipeline(build_builtin("hilb2_k3"));
    REQUIRE(trace.steps.size() == 15);

    const TraceStep& quadratic = step_with(trace, "2a^2 - 21a + 19 = 0");
    CHECK(value_of(quadratic, "discriminant") == 289);
    CHECK(value_of(quadratic, "root 1") == 1);
    CHECK(value_of(quadratic, "root 2") == Rational(19, 2));

    CHECK(value_of(step_with(trace, "gives chi(O_Y)"), "chi0") == 3);
    CHECK(value_of(step_with(trace, "p_1(Y)^2"), "p1^2") == 3312);
    CHECK(value_of(step_with(trace, "p_2(Y) = 1476"), "p2") == 1476);

    const TraceStep& eliminated = step_with(trace, "eliminating");
    CHECK(eliminated.claim ==
          "eliminating c_2^2, c_1 c_3 and c_4 leaves (15/8) c_1^4 - (15/2) c_1^2 c_2 = 0, "
          "i.e. c_1^4 = 4 c_1^2 c_2");
    CHECK(value_of(eliminated, "residual coefficient") == Rational(-1, 384));

    const TraceStep& miyaoka = step_with(trace, "against Miyaoka");
    CHECK(miyaoka.tag == Justification::miyaoka);
    CHECK(value_of(miyaoka, "coefficient") == Rational(-1, 4));

    CHECK(value_of(step_with(trace, "Fujiki:"), "fujiki constant") == 3);
    CHECK(trace.verdict.solutions == std::vector<std::string>{"nu = 0", "nu = 2"});

    CHECK_THROWS_AS((void)hk_partner_pipeline(build_builtin("cubic4")), std::invalid_argument);

    ManifoldRecord tampered = build_builtin("hilb2_k3");
    tampered.hodge->set(2, 2, 231);
    CHECK_THROWS_AS((void)hk_partner_pipeline(tampered), std::invalid_argument);
}

TEST_CASE("the eliminated relation is independent of equation order") {
    const auto solve_in = [](bool reversed) {
        LinearSystem system;
        system.add_variable("c14");
        system.add_variable("c12c2");
        system.add_variable("c2sq");
        system.add_variable("c1c3");
        system.add_variable("c4");
        std::vector<std::tuple<std::map<std::string, Rational>, Rational, std::string>> rows = {
            {{{"c4", 1}}, 324, "betti"},
            {{{"c14", 1}, {"c12c2", -4}, {"c2sq", 4}}, 3312, "p1^2"},
            {{{"c2sq", 1}, {"c1c3", -2}}, 828, "p2"},
            {{{"c14", 1}, {"c12c2", -4}, {"c2sq", -3}, {"c1c3", -1}, {"c4", 1}}, -2160, "rr"},
        };
        if (reversed) {
            std::reverse(rows.begin(), rows.end());
        }
        for (const auto& [coeffs, rhs, label] : rows) {
            system.add_equation(coeffs, rhs, label);
        }
        return solve_linear(system, {"c14", "c12c2"});
    };

    const LinearSolution forward = solve_in(false);
    const LinearSolution backward = solve_in(true);
    REQUIRE(forward.relations.size() == 1);
    CHECK(forward.relations == backward.relations);

    AffineExpr relation;
    relation.coeffs["c14"] = 1;
    relation.coeffs["c12c2"] = -4;
    CHECK(forward.relations[0] == relation);

    // The raw eliminated rr row keeps the scaling the pipeline quotes.
    AffineExpr raw;
    raw.coeffs["c14"] = Rational(15, 8);
    raw.coeffs["c12c2"] = Rational(-15, 2);
    bool found = false;
    for (const auto& [index, expr] : forward.reduced_rows) {
        if (index == 3) {
            CHECK(expr == raw);
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("divisor comparison closed forms") {
    for (int d = 1; d <= 50; ++d) {
        CAPTURE(d);
        const DeductionTrace trace = divisor_c3_compare(DivisorFamily::cubic, d);
        REQUIRE(trace.steps.size() == 3);
        const Rational dd(d);
        CHECK(value_of(trace.steps[0], "c_3(V)") == 3 * dd * (2 - 6 * dd + 3 * dd * dd - dd * dd * dd));
        CHECK(value_of(trace.steps[1], "c_3(W)") == 3 * dd * (-2 - 6 * dd - 3 * dd * dd - dd * dd * dd));
        CHECK(value_of(trace.steps[2], "difference") == 6 * dd * (2 + 3 * dd * dd));
        CHECK(trace.verdict.statement == "no match: equality would force 2 + 3 d^2 = 0");
        CHECK(replay_matches(trace));
    }

    // dp5 carries L^2 c_2(X) = 22 on the quintic del Pezzo fourfold; the
    // divisor sides then differ by the polarization term alone.
    for (int d = 1; d <= 20; ++d) {
        CAPTURE(d);
        const DeductionTrace trace = divisor_c3_compare(DivisorFamily::dp5, d);
        REQUIRE(trace.steps.size() == 3);
        const Rational dd(d);
        CHECK(value_of(trace.steps[0], "L . c_2(V)") == 22 * dd + 5 * (dd - 3) * dd * dd);
        CHECK(value_of(trace.steps[0], "(d - 3) d^2") == (dd - 3) * dd * dd);
        CHECK(value_of(trace.steps[1], "L . c_2(W)") == 22 * dd + 5 * (dd + 3) * dd * dd);
        CHECK(value_of(trace.steps[1], "(d + 3) d^2") == (dd + 3) * dd * dd);
        CHECK(value_of(trace.steps[2], "difference") == 6 * dd * dd);
        CHECK(trace.verdict.statement == "no match: equality would force (d - 3) d^2 = (d + 3) d^2");
        CHECK(replay_matches(trace));
    }

    CHECK_THROWS_AS((void)divisor_c3_compare(DivisorFamily::cubic, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)divisor_c3_compare(DivisorFamily::dp5, -1), std::invalid_argument);
}

TEST_CASE("ricci-flat exclusion filters decompositions by b_2") {
    const ManifoldRecord quadric6 = hypothetical_quadric6();
    const DeductionTrace trace = ricci_flat_exclusion(quadric6);

    CHECK(trace.steps[0].claim == "w_2(X) = 0: c_1 = 6 h is even");
    CHECK(value_of(step_with(trace, "chi(X, K/2)"), "chi") == 0);
    CHECK(value_of(step_with(trace, "decomposition shapes"), "count") == 1);

    const TraceStep& filter = step_with(trace, "needs b_2 >= 2");
    CHECK(filter.claim == "CY(3) x CY(3) needs b_2 >= 2, but b_2(X) = 1");
    CHECK(filter.tag == Justification::hodge_symmetry);

    CHECK(trace.verdict.statement ==
          "no K-trivial partner: every candidate decomposition is excluded");

    const RecordResolver resolver = [&](const std::string& name) {
        REQUIRE(name == "quadric6");
        return hypothetical_quadric6();
    };
    CHECK(run_pipeline("ricci-flat-exclusion", "quadric6", resolver) == trace);

    ManifoldRecord roomy = quadric6;
    roomy.stored["b2"] = 2;
    const DeductionTrace open = ricci_flat_exclusion(roomy);
    CHECK(open.verdict.statement == "possible K-trivial partner shapes remain");
    CHECK(open.verdict.solutions == std::vector<std::string>{"CY(3) x CY(3)"});

    CHECK_THROWS_AS((void)ricci_flat_exclusion(build_builtin("k3")), std::invalid_argument);
    ManifoldRecord bare;
    bare.name = "bare";
    bare.dim = 4;
    bare.tags = {"fano"};
    CHECK_THROWS_AS((void)ricci_flat_exclusion(bare), std::invalid_argument);
}

TEST_CASE("index match runs on odd-dimensional Fano records too") {
    const DeductionTrace trace = fano_index_match(build_builtin("pn(3)"));
    CHECK(trace.verdict.statement ==
          "any Fano partner has r_Y = r_X = 4 and c_1^3 = 64; eliminated s: -1, -2, -3, -4");
    CHECK(trace.verdict.solutions == std::vector<std::string>{"r_Y = 4"});

    CHECK_THROWS_AS((void)fano_index_match(build_builtin("hilb2_k3")), std::invalid_argument);

    ManifoldRecord doctored = build_builtin("pn(2)");
    doctored.hodge->set(0, 1, 1);
    doctored.hodge->set(1, 0, 1);
    CHECK_THROWS_AS((void)fano_index_match(doctored), std::invalid_argument);
}

TEST_CASE("general-type index guards its hypotheses") {
    // A Fano surface rigged so that chi(h) = 1: the section-count probe must
    // refuse to proceed rather than scan a vacuous window.
    UnivariateModel tiny;
    tiny.tangent_total = GradedClass::one(2);
    tiny.tangent_total.set_coefficient(1, Rational(-1));
    tiny.tangent_total.set_coefficient(2, Rational(11));
    tiny.top = Rational(1);
    ManifoldRecord probe;
    probe.name = "gt_probe";
    probe.dim = 2;
    probe.model = ManifoldModel{"gt_probe", 2, tiny, 1};
    probe.tags = {"fano"};
    probe.stored["b2"] = 1;
    CHECK_THROWS_WITH_AS((void)general_type_index(probe),
                         "hypothesis violated: h^0(gt_probe, 1 h) = 1", std::runtime_error);

    CHECK_THROWS_AS((void)general_type_index(build_builtin("pn(3)")), std::invalid_argument);

    // Without a diamond the odd-Betti hypotheses have no source; the trace
    // says so instead of silently assuming them away.
    ManifoldRecord sparse = build_builtin("cubic4");
    sparse.hodge.reset();
    sparse.stored["b2"] = 1;
    const DeductionTrace trace = general_type_index(sparse);
    CHECK(step_with(trace, "b_3").claim == "b_3 is not on record; hypothesis assumed");
    CHECK(step_with(trace, "b_5").claim == "b_5 is not on record; hypothesis assumed");
    CHECK(step_with(trace, "deviation").claim ==
          "hypothesis deviation: b_4 = 23; proceeding, the scan below re-derives the conclusion "
          "for this record");
    CHECK(trace.verdict.statement == "any general-type partner has K_Y = 3 L_Y");
}

TEST_CASE("nefness hypotheses draw on every data source") {
    CHECK(nef_hypotheses_check(build_builtin("hilb2_k3")));
    CHECK_FALSE(nef_hypotheses_check(build_builtin("cubic4")));

    ManifoldRecord abstract;
    abstract.name = "abstract_partner";
    abstract.dim = 4;
    abstract.tags = {"kappa_nonneg", "k_two_divisible"};
    abstract.fujiki = FujikiData{Rational(3), Rational(2)};
    abstract.stored["b3"] = 0;
    CHECK(nef_hypotheses_check(abstract));

    ManifoldRecord odd_b3 = abstract;
    odd_b3.stored["b3"] = 2;
    CHECK_FALSE(nef_hypotheses_check(odd_b3));

    ManifoldRecord odd_index = abstract;
    odd_index.tags = {"kappa_nonneg"};
    odd_index.model = build_builtin("cubic4").model;
    CHECK_FALSE(nef_hypotheses_check(odd_index));

    // K3 decides kappa by its diamond and b_3 by its diamond, but carries no
    // quartic form data, so the (E^4) hypothesis has no source.
    CHECK_THROWS_AS((void)nef_hypotheses_check(build_builtin("k3")), std::runtime_error);

    ManifoldRecord undecided = abstract;
    undecided.fujiki.reset();
    try {
        (void)nef_hypotheses_check(undecided);
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("(E^4)") != std::string::npos);
    }
}

TEST_CASE("pipeline dispatch and its failure modes") {
    CHECK(pipeline_names() ==
          std::vector<std::string>{"ricci-flat-exclusion", "index-match", "general-type-index",
                                   "cubic-partner", "divisor-c3", "hk-pipeline", "cy-hk", "bb"});

    CHECK_THROWS_AS((void)run_pipeline("no-such-pipeline", "cubic4"), std::invalid_argument);
    CHECK_THROWS_AS((void)run_pipeline("bb", "4"), std::invalid_argument);
    CHECK_THROWS_AS((void)run_pipeline("bb", "4,two"), std::invalid_argument);
    CHECK_THROWS_AS((void)run_pipeline("cy-hk", "x"), std::invalid_argument);
    CHECK_THROWS_AS((void)run_pipeline("divisor-c3", "quartic,2"), std::invalid_argument);
    CHECK_THROWS_AS((void)run_pipeline("divisor-c3", "cubic,0"), std::invalid_argument);
    CHECK_THROWS_AS((void)run_pipeline("cubic-partner", "no_such_record"), std::invalid_argument);

    CHECK_THROWS_AS((void)cy_hk_distinction(1), std::invalid_argument);
    CHECK_THROWS_AS((void)bb_trace(1, 0), std::invalid_argument);
}
