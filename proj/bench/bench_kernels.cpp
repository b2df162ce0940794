#include <benchmark/benchmark.h>

#include <random>

#include "velab/diagnostics.hpp"
#include "velab/dynamics.hpp"
#include "velab/initdata.hpp"
#include "velab/reference.hpp"

using namespace velab;

namespace {

constexpr double kTwoPi = 6.283185307179586;

Grid bench_grid(const benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    return build_grid(n, n + 1, kTwoPi, kTwoPi);
}

Field2D noise(const Grid& g) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Field2D f = g.zeros();
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = u(rng);
    return f;
}

StateSnapshot bench_state(const Grid& g) {
    DisplacementSpec d;
    d.amplitude = 0.05;
    d.velocity = VelocityInit::bump;
    return piola_initial_data(g, d);
}

PhysParams viscous() {
    PhysParams p;
    p.eps = 1e-2;
    return p;
}

void BM_diff_y_omp(benchmark::State& st) {
    const Grid g = bench_grid(st);
    const Field2D f = noise(g);
    for (auto _ : st) benchmark::DoNotOptimize(diff(f, g, Axis::y));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(f.size()));
}

void BM_diff_y_serial(benchmark::State& st) {
    const Grid g = bench_grid(st);
    const Field2D f = noise(g);
    for (auto _ : st) benchmark::DoNotOptimize(reference::diff(f, g, Axis::y));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(f.size()));
}

void BM_rhs_viscous_omp(benchmark::State& st) {
    const Grid g = bench_grid(st);
    const StateSnapshot s = bench_state(g);
    const PhysParams p = viscous();
    for (auto _ : st) benchmark::DoNotOptimize(rhs_viscous(s, g, p));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(g.nx) * g.ny);
}

void BM_rhs_viscous_serial(benchmark::State& st) {
    const Grid g = bench_grid(st);
    const StateSnapshot s = bench_state(g);
    const PhysParams p = viscous();
    for (auto _ : st) benchmark::DoNotOptimize(reference::rhs_viscous(s, g, p));
    st.SetItemsProcessed(st.iterations() * static_cast<int64_t>(g.nx) * g.ny);
}

void BM_l2_omp(benchmark::State& st) {
    const Grid g = bench_grid(st);
    const Field2D f = noise(g);
    for (auto _ : st) benchmark::DoNotOptimize(l2_norm_sq(f, g));
}

void BM_l2_serial(benchmark::State& st) {
    const Grid g = bench_grid(st);
    const Field2D f = noise(g);
    for (auto _ : st) benchmark::DoNotOptimize(reference::l2_norm_sq(f, g));
}

}  // namespace

BENCHMARK(BM_diff_y_omp)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_diff_y_serial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_rhs_viscous_omp)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_rhs_viscous_serial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_l2_omp)->Arg(128)->Arg(256);
BENCHMARK(BM_l2_serial)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
