#include <benchmark/benchmark.h>

#include "grmod/duality.hpp"
#include "grmod/oracle.hpp"
#include "grmod/parse.hpp"
#include "grmod/verifiers.hpp"

using namespace grmod;

namespace {

Ring ring4() { return Ring(PrimeField(32003), {"x", "y", "z", "w"}); }
Ring ring5() { return Ring(PrimeField(32003), {"a", "b", "c", "d", "e"}); }

std::vector<Polynomial> polys(const Ring& R, const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss)
        out.push_back(parse_polynomial(s, R));
    return out;
}

std::vector<std::string> twisted_cubic_gens() {
    return {"x*z - y^2", "y*w - z^2", "x*w - y*z"};
}

std::vector<std::string> rnq_gens() {
    return {"a*c - b^2", "a*d - b*c", "a*e - b*d", "b*d - c^2", "b*e - c*d", "c*e - d^2"};
}

}  // namespace

static void BM_buchberger_twisted_cubic(benchmark::State& state) {
    Ring R = ring4();
    std::vector<ModuleElement> gens;
    for (const Polynomial& f : polys(R, twisted_cubic_gens()))
        gens.push_back(ModuleElement{{f}});
    for (auto _ : state)
        benchmark::DoNotOptimize(buchberger(R, FreeModule{{0}}, gens));
}
BENCHMARK(BM_buchberger_twisted_cubic);

static void BM_resolution_rational_normal_quartic(benchmark::State& state) {
    Ring R = ring5();
    PresentedModule M = PresentedModule::quotient_ring(R, polys(R, rnq_gens()));
    for (auto _ : state)
        benchmark::DoNotOptimize(minimal_free_resolution(R, M));
}
BENCHMARK(BM_resolution_rational_normal_quartic);

static void BM_oracle_tor_twisted_cubic(benchmark::State& state) {
    Ring R = ring4();
    PresentedModule M = PresentedModule::quotient_ring(R, polys(R, twisted_cubic_gens()));
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::tor_dims(R, M.generators(), M.relations(), 0, 5));
}
BENCHMARK(BM_oracle_tor_twisted_cubic);

static void BM_koszul_tor_twisted_cubic(benchmark::State& state) {
    Ring R = ring4();
    PresentedModule M = PresentedModule::quotient_ring(R, polys(R, twisted_cubic_gens()));
    for (auto _ : state)
        benchmark::DoNotOptimize(tor_dimensions(R, M, 0, 5));
}
BENCHMARK(BM_koszul_tor_twisted_cubic);

static void BM_deficiency_modules_rational_quartic(benchmark::State& state) {
    Ring R = ring4();
    PresentedModule M = PresentedModule::quotient_ring(
        R, polys(R, {"x*w - y*z", "x^2*z - y^3", "x*z^2 - y^2*w", "y*w^2 - z^3"}));
    for (auto _ : state)
        benchmark::DoNotOptimize(deficiency_modules(R, M));
}
BENCHMARK(BM_deficiency_modules_rational_quartic);

static void BM_certify_strongly_generic(benchmark::State& state) {
    Ring R = ring4();
    PresentedModule M = PresentedModule::quotient_ring(R, polys(R, twisted_cubic_gens()));
    std::vector<DeficiencyModule> defs = deficiency_modules(R, M);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_generic_forms(R, M, defs, 2, true, seed++));
}
BENCHMARK(BM_certify_strongly_generic);

static void BM_green_table_twisted_cubic(benchmark::State& state) {
    Ring R = ring4();
    PresentedModule M = PresentedModule::quotient_ring(R, polys(R, twisted_cubic_gens()));
    std::vector<DeficiencyModule> defs = deficiency_modules(R, M);
    LinearSystem L = sample_generic_forms(R, M, defs, 2, true, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(green_table(R, M, defs, L, -9, 4));
}
BENCHMARK(BM_green_table_twisted_cubic);

static void BM_full_verification_twisted_cubic(benchmark::State& state) {
    auto corpus = builtin_corpus();
    const CorpusEntry* tc = nullptr;
    for (const auto& e : corpus)
        if (e.name == "twisted_cubic")
            tc = &e;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_corpus({*tc}, {}, 0));
}
BENCHMARK(BM_full_verification_twisted_cubic)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
