#include "qenum/corpus.hpp"
#include "qenum/invariant.hpp"
#include "qenum/macwilliams.hpp"
#include "qenum/stabilizer.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qenum;

void BM_distributions_oracle(benchmark::State& state) {
    StabilizerCode code = corpus_code(state.range(0) == 0 ? "bell2" : "rep3");
    for (auto _ : state) {
        EnumeratorSet es = distributions_oracle(code);
        benchmark::DoNotOptimize(es);
    }
}
BENCHMARK(BM_distributions_oracle)->Arg(0)->Arg(1);

void BM_distributions_symplectic(benchmark::State& state) {
    StabilizerCode code = corpus_code(state.range(0) == 0 ? "bell2" : "rep3");
    for (auto _ : state) {
        EnumeratorSet es = distributions_symplectic(code);
        benchmark::DoNotOptimize(es);
    }
}
BENCHMARK(BM_distributions_symplectic)->Arg(0)->Arg(1);

void BM_mac_D(benchmark::State& state) {
    StabilizerCode code = corpus_code("bell3");
    EnumeratorSet es = distributions_symplectic(code);
    MultiPoly dperp = enumerator_poly(es, Kind::Dperp);
    TransformContext ctx{code.spec(), code.n(), es.K};
    for (auto _ : state) {
        MultiPoly d = mac_D(dperp, ctx);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_mac_D);

void BM_verify_double_case(benchmark::State& state) {
    for (auto _ : state) {
        auto rs = verify_case(build_case(CaseId::Double, static_cast<int>(state.range(0))));
        benchmark::DoNotOptimize(rs);
    }
}
BENCHMARK(BM_verify_double_case)->Arg(2)->Arg(5);

void BM_express_weight(benchmark::State& state) {
    InvariantCase c = build_case(CaseId::Weight, 2);
    StabilizerCode code = corpus_code("bell2");
    MultiPoly b = enumerator_poly(distributions_symplectic(code), Kind::B);
    for (auto _ : state) {
        GeneratorExpression ge = express_in_generators(b, c);
        benchmark::DoNotOptimize(ge);
    }
}
BENCHMARK(BM_express_weight);

} // namespace

BENCHMARK_MAIN();
