#include "immvar/bposet.hpp"
#include "immvar/character.hpp"
#include "immvar/complexes.hpp"
#include "immvar/immanant.hpp"
#include "immvar/permgroup.hpp"
#include "immvar/rng.hpp"
#include "immvar/symtensor.hpp"

#include <benchmark/benchmark.h>

#include <memory>

namespace {

using namespace immvar;

GroupPtr share(PermGroup g) { return std::make_shared<const PermGroup>(std::move(g)); }

void bm_closure_s6(benchmark::State& state) {
    std::vector<Perm> gens = {Perm::parse("213456"), Perm::parse("234561")};
    for (auto _ : state) {
        PermGroup g = PermGroup::closure(6, gens);
        benchmark::DoNotOptimize(g.size());
    }
}
BENCHMARK(bm_closure_s6);

void bm_apply_idempotent(benchmark::State& state) {
    Character chi = Character::sign(share(PermGroup::symmetric(4)));
    SmallRng rng(7);
    SymTensor v(4, 3);
    MultiIndexRange range(3, 4);
    for (int t = 0; t < 8; ++t)
        v.add_term(range.at(rng.below(range.count())), CycloNum(rng.small_nonzero()));
    for (auto _ : state) {
        SymTensor w = apply_idempotent(chi, v);
        benchmark::DoNotOptimize(w.term_count());
    }
}
BENCHMARK(bm_apply_idempotent);

void bm_rank_of_image(benchmark::State& state) {
    Character chi = Character::trivial(share(PermGroup::symmetric(4)));
    for (auto _ : state) {
        Int r = rank_of_image(chi, 3);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_rank_of_image);

void bm_poset_build(benchmark::State& state) {
    Character chi = Character::trivial(share(PermGroup::cyclic(4)));
    for (auto _ : state) {
        BPoset p = BPoset::build(chi, 3);
        benchmark::DoNotOptimize(p.size());
    }
}
BENCHMARK(bm_poset_build);

void bm_symbolic_immanant(benchmark::State& state) {
    Character chi = Character::sign(share(PermGroup::symmetric(4)));
    Matrix<MVPoly> a = generic_matrix(4, 4);
    MultiIndex diag = MultiIndex::iota(4);
    for (auto _ : state) {
        MVPoly p = immanant(chi, diag, diag, a);
        benchmark::DoNotOptimize(p.term_count());
    }
}
BENCHMARK(bm_symbolic_immanant);

void bm_shellability(benchmark::State& state) {
    BPoset p = BPoset::build(Character::trivial(share(PermGroup::cyclic(3))), 3);
    SimplicialComplex complex = order_complex(p);
    for (auto _ : state) {
        ShellResult r = shellable(complex);
        benchmark::DoNotOptimize(r.verdict);
    }
}
BENCHMARK(bm_shellability);

} // namespace

BENCHMARK_MAIN();
