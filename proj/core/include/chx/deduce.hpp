#pragma once

#include "chx/catalog.hpp"
#include "chx/rational.hpp"
#include "chx/trace.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

// The obstruction pipelines.  Each one consumes catalog invariants, walks a
// fixed chain of justified steps and ends in a verdict; the same run on the
// same subject reproduces the same trace byte for byte, which is what the
// replay harness checks.

namespace chx {

// Factors available to a simply connected Ricci-flat decomposition: strict
// Calabi-Yau pieces of dimension >= 3 (split by parity, since chi(O) = 2
// for even dimension and 0 for odd) and irreducible holomorphic-symplectic
// pieces of even dimension >= 2.  K3 counts as HK(2).
enum class BBKind { cy_odd, cy_even, hk };

struct BBPiece {
    BBKind kind = BBKind::hk;
    int dim = 0;
    friend bool operator==(const BBPiece&, const BBPiece&) = default;
};

[[nodiscard]] bool operator<(const BBPiece& a, const BBPiece& b);

struct BBShape {
    std::vector<BBPiece> factors;  // sorted by (dim, kind)
    friend bool operator==(const BBShape&, const BBShape&) = default;
};

[[nodiscard]] bool operator<(const BBShape& a, const BBShape& b);

[[nodiscard]] std::string to_string(const BBShape& shape);

// chi(O) of one factor: 0 for odd CY, 2 for even CY, dim/2 + 1 for HK.
[[nodiscard]] Int bb_factor_chi(const BBPiece& piece);

// All decomposition shapes of total complex dimension dim whose chi(O)
// product equals chi, sorted.  dim >= 2.
[[nodiscard]] std::vector<BBShape> bb_decompositions(int dim, const Int& chi);

enum class SignatureEvaluator { canonical, legacy };

// Excludes a K-trivial partner for a simply connected Fano record: by the
// w_2 obstruction when the index is odd, otherwise through
// chi(X, K/2) -> decomposition shapes -> second-Betti filter.
[[nodiscard]] DeductionTrace ricci_flat_exclusion(const ManifoldRecord& x);

// Any Fano partner of a Fano record with b_2 = 1 and no higher cohomology
// of O shares the index and the top self-intersection of c_1: the twisted
// chi values eliminate every candidate shift s in [-r, -1].
[[nodiscard]] DeductionTrace fano_index_match(const ManifoldRecord& x);

// Any general-type partner of such a record has K_Y = r L_Y: candidate
// shifts with chi(s h) = 1 are cut down by Serre duality against the
// section counts h^0(m h).
[[nodiscard]] DeductionTrace general_type_index(const ManifoldRecord& x);

// The full candidate solve for a general-type partner of the cubic
// fourfold: Hodge solver, Pontrjagin transfer, Riemann-Roch per candidate
// index, parity, bound and divisibility filters.  The signature evaluator
// choice never reaches the trace: the solver only records the affine row
// the evaluator induces, and the legacy evaluator's constant offset cancels
// between the two sides of the matching equation.
[[nodiscard]] DeductionTrace cubic_partner_solve(
    const ManifoldRecord& x, SignatureEvaluator evaluator = SignatureEvaluator::canonical);

enum class DivisorFamily { cubic, dp5 };

// Compares a degree-d member of |L| on the two sides of the hypothetical
// partnership, by adjunction inside each ring: Euler numbers of the
// divisors for the cubic family, L . c_2 for the del Pezzo family.
[[nodiscard]] DeductionTrace divisor_c3_compare(DivisorFamily family, int d);

// The partner pipeline for the Hilbert square of a K3: Sym^2 bookkeeping,
// Hodge solver, linear elimination to (4 c_2 - c_1^2) c_1^2 = 0, the
// Miyaoka bound against general type, and the Fujiki argument pinning
// nu(Y) to {0, 2}.
[[nodiscard]] DeductionTrace hk_partner_pipeline(const ManifoldRecord& x);

// chi(O) separates even-dim CY from HK: 2 vs n+1 for 2n-folds, n >= 2.
[[nodiscard]] DeductionTrace cy_hk_distinction(int n);

// The four nefness hypotheses: kappa >= 0, K 2-divisible, (E^4) >= 0, and
// b_3 = 0.  True iff all four hold; throws when a hypothesis has no data
// source on the record and no earlier hypothesis already failed.
[[nodiscard]] bool nef_hypotheses_check(const ManifoldRecord& x);

// bb_decompositions wrapped as a trace, so the enumeration runs under the
// same replay and reporting machinery as the other pipelines.
[[nodiscard]] DeductionTrace bb_trace(int dim, const Int& chi);

using RecordResolver = std::function<ManifoldRecord(const std::string&)>;

// Dispatch by pipeline name: ricci-flat-exclusion, index-match,
// general-type-index, cubic-partner, hk-pipeline take a record name;
// divisor-c3 takes "family,d"; cy-hk takes "n"; bb takes "dim,chi".
[[nodiscard]] DeductionTrace run_pipeline(const std::string& pipeline, const std::string& target);
[[nodiscard]] DeductionTrace run_pipeline(const std::string& pipeline, const std::string& target,
                                          const RecordResolver& resolver);

[[nodiscard]] std::vector<std::string> pipeline_names();

// Re-runs trace.pipeline on trace.subject and compares exactly.
[[nodiscard]] bool replay_matches(const DeductionTrace& trace);

// The pinned verdict statement for a (pipeline, target) pair, where one is
// on record; the regression mode of the command line compares against it.
[[nodiscard]] std::optional<std::string> expected_verdict(const std::string& pipeline,
                                                          const std::string& target);

struct VerdictPin {
    std::string pipeline;
    std::string target;
    std::string statement;
};

// Every pinned (pipeline, target, statement) triple, in fixed order.
[[nodiscard]] const std::vector<VerdictPin>& verdict_pins();

}  // namespace chx
