#include <tricoll/tricoll.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace tricoll;

namespace {

const EigenSolution& small_solution() {
    static const EigenSolution s = solve_spectrum(assemble_hamiltonian({40, 20.0}, {}), 200);
    return s;
}

void BM_Assemble(benchmark::State& state) {
    const GridSpec spec{static_cast<int>(state.range(0)), 40.0};
    for (auto _ : state) benchmark::DoNotOptimize(assemble_hamiltonian(spec, {}));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Assemble)->Arg(40)->Arg(80)->Arg(160);

void BM_DenseSpectrum(benchmark::State& state) {
    const auto H = assemble_hamiltonian({static_cast<int>(state.range(0)), 20.0}, {});
    for (auto _ : state) benchmark::DoNotOptimize(solve_spectrum(H, 50));
}
BENCHMARK(BM_DenseSpectrum)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Project(benchmark::State& state) {
    const auto& s = small_solution();
    const auto op = magnetic_control_operator(s.grid);
    for (auto _ : state) benchmark::DoNotOptimize(project(op, s, 200));
}
BENCHMARK(BM_Project)->Unit(benchmark::kMillisecond);

void BM_Step(benchmark::State& state) {
    const auto& s = small_solution();
    const auto B = project(dipole_operator(s.grid), s, 200);
    const Eigen::VectorXcd psi = Eigen::VectorXcd::Ones(200).normalized();
    for (auto _ : state) benchmark::DoNotOptimize(step(psi, s.energies, B.matrix, 0.1, 0.05));
}
BENCHMARK(BM_Step)->Unit(benchmark::kMillisecond);

void BM_TransitivityScan(benchmark::State& state) {
    const auto& s = small_solution();
    const auto B = project(dipole_operator(s.grid), s, 200);
    for (auto _ : state) benchmark::DoNotOptimize(transitivity_scan(B, 0, 10, 50));
}
BENCHMARK(BM_TransitivityScan);

}  // namespace

BENCHMARK_MAIN();
