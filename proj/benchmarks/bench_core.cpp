#include <benchmark/benchmark.h>

#include <complex>

#include "genps/analysis.hpp"
#include "genps/pxi.hpp"
#include "genps/rep_theory.hpp"
#include "genps/root_system.hpp"

using namespace genps;

static void BM_BuildE8(benchmark::State& state) {
    for (auto _ : state) {
        auto rs = roots::RootSystem::build(roots::LieType(roots::Series::E, 8));
        benchmark::DoNotOptimize(rs.positive_roots().size());
    }
}
BENCHMARK(BM_BuildE8);

static void BM_FreudenthalSpin9(benchmark::State& state) {
    auto xi = rep::Irrep::spin(9, Vec{Rat(7, 2), Rat(5, 2), Rat(3, 2), Rat(1, 2)});
    for (auto _ : state) {
        auto wts = rep::freudenthal_multiplicities(xi);
        benchmark::DoNotOptimize(wts.size());
    }
}
BENCHMARK(BM_FreudenthalSpin9);

static void BM_BranchSpin7(benchmark::State& state) {
    auto xi = rep::Irrep::spin(7, Vec{Rat(9, 2), Rat(5, 2), Rat(3, 2)});
    for (auto _ : state) {
        auto js = rep::branch_to_spin3(xi);
        benchmark::DoNotOptimize(js.size());
    }
}
BENCHMARK(BM_BranchSpin7);

static void BM_PxiTypeA(benchmark::State& state) {
    Vec xi{rat(state.range(0), 2)};
    for (auto _ : state) {
        auto p = pxi::pxi_type_a(3, xi);
        benchmark::DoNotOptimize(p.total_degree());
    }
}
BENCHMARK(BM_PxiTypeA)->Arg(9)->Arg(21);

static void BM_QClosedForm(benchmark::State& state) {
    for (auto _ : state) {
        auto q = rankone::q_closed_form(state.range(0), rankone::TSign::PlusT);
        benchmark::DoNotOptimize(q.total_degree());
    }
}
BENCHMARK(BM_QClosedForm)->Arg(10)->Arg(50);

static void BM_GammaReduce(benchmark::State& state) {
    auto g = analysis::intertwining_det(5, Vec{Rat(3, 2), Rat(3, 2)});
    for (auto _ : state) {
        auto r = analysis::reduce(g);
        benchmark::DoNotOptimize(r.numerator.size());
    }
}
BENCHMARK(BM_GammaReduce);

static void BM_GammaNumeric(benchmark::State& state) {
    auto g = analysis::intertwining_det(3, Vec{Rat(9, 2)});
    std::vector<std::complex<double>> nu{{2.2, 0.4}, {0.1, -1.3}, {-2.3, 0.9}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(analysis::numeric_gamma_eval(g, nu));
    }
}
BENCHMARK(BM_GammaNumeric);

BENCHMARK_MAIN();
