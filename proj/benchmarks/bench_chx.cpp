#include "chx/catalog.hpp"
#include "chx/deduce.hpp"
#include "chx/genus.hpp"
#include "chx/graded.hpp"
#include "chx/linear.hpp"
#include "chx/manifold.hpp"
#include "chx/partition.hpp"
#include "chx/schubert.hpp"

#include <benchmark/benchmark.h>

// Microbenchmarks for the hot paths: truncated ring arithmetic, Schubert
// products, exact elimination, Riemann-Roch evaluation and the two heaviest
// pipelines.  Wall time is informational; the point is catching accidental
// complexity regressions, so the fixtures stay small and deterministic.

namespace {

using namespace chx;

GradedClass dense_class(int truncation, int seed) {
    GradedClass c(truncation);
    for (int degree = 0; degree <= truncation; ++degree) {
        c.set_coefficient(degree, Rational(seed + 3 * degree + 1, degree + 2));
    }
    return c;
}

void bm_graded_multiply(benchmark::State& state) {
    const int truncation = static_cast<int>(state.range(0));
    const GradedClass a = dense_class(truncation, 2);
    const GradedClass b = dense_class(truncation, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(bm_graded_multiply)->Arg(4)->Arg(8)->Arg(16);

void bm_graded_inverse(benchmark::State& state) {
    const int truncation = static_cast<int>(state.range(0));
    const GradedClass u = dense_class(truncation, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(u.inverse());
    }
}
BENCHMARK(bm_graded_inverse)->Arg(8)->Arg(16);

void bm_schubert_product(benchmark::State& state) {
    const SchubertClass tangent = grassmannian_tangent_chern(2, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tangent * tangent);
    }
}
BENCHMARK(bm_schubert_product);

void bm_littlewood_richardson(benchmark::State& state) {
    const Partition lambda{2, 1};
    const Partition mu{2, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(littlewood_richardson(3, 6, lambda, mu));
    }
}
BENCHMARK(bm_littlewood_richardson);

LinearSystem partner_system() {
    LinearSystem s;
    for (const char* name : {"c14", "c12c2", "c2sq", "c1c3", "c4"}) {
        s.add_variable(name);
    }
    s.add_equation({{"c4", 1}}, Rational(324), "betti");
    s.add_equation({{"c14", 1}, {"c12c2", -4}, {"c2sq", 4}}, Rational(3312), "p1^2");
    s.add_equation({{"c2sq", 1}, {"c1c3", -2}}, Rational(828), "p2");
    s.add_equation({{"c14", 1}, {"c12c2", -4}, {"c2sq", -3}, {"c1c3", -1}, {"c4", 1}},
                   Rational(-2160), "rr");
    return s;
}

void bm_solve_linear(benchmark::State& state) {
    const LinearSystem s = partner_system();
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_linear(s, {"c14", "c12c2"}));
    }
}
BENCHMARK(bm_solve_linear);

void bm_hrr_chi(benchmark::State& state) {
    const ManifoldModel cubic = complete_intersection(5, {3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hrr_chi(cubic, 3));
    }
}
BENCHMARK(bm_hrr_chi);

void bm_cubic_partner_solve(benchmark::State& state) {
    const ManifoldRecord cubic = build_builtin("cubic4");
    for (auto _ : state) {
        benchmark::DoNotOptimize(cubic_partner_solve(cubic));
    }
}
BENCHMARK(bm_cubic_partner_solve);

void bm_bb_decompositions(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bb_decompositions(dim, Int(2)));
    }
}
BENCHMARK(bm_bb_decompositions)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
