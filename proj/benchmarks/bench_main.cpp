#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "hta/ground/se.hpp"
#include "hta/kernel/checker.hpp"
#include "hta/kernel/script_json.hpp"
#include "hta/mg/parser.hpp"
#include "hta/nu/translate.hpp"

#ifndef HTA_CORPUS_DIR
#define HTA_CORPUS_DIR "corpus"
#endif

namespace {

using namespace hta;

std::string synthetic_program(int rules) {
  std::ostringstream out;
  out << "p(0).\n";
  for (int i = 0; i < rules; ++i) {
    out << "q" << i << "(X+Y) :- p(X), p(Y), X <= Y, X = 0.." << (i % 7 + 1) << ".\n";
    out << "{r" << i << "(X)} :- q" << i << "(X+1), not p(X).\n";
  }
  return out.str();
}

void BM_ParseProgram(benchmark::State& state) {
  std::string text = synthetic_program(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mg::parse_program(text));
  state.SetItemsProcessed(state.iterations() * (2 * state.range(0) + 1));
}
BENCHMARK(BM_ParseProgram)->Arg(8)->Arg(64);

void BM_Translate(benchmark::State& state) {
  mg::Program p = mg::parse_program(synthetic_program(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(nu::nu_program(p));
  state.SetItemsProcessed(state.iterations() * p.rules().size());
}
BENCHMARK(BM_Translate)->Arg(8)->Arg(64);

void BM_GroundChain(benchmark::State& state) {
  mg::Program p = mg::parse_program("p(0). p(X+1) :- p(X).");
  std::vector<fo::FOFormulaPtr> sentences = nu::nu_program(p);
  ground::Domain d;
  d.lo = 0;
  d.hi = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(ground::ground_all(sentences, d));
}
BENCHMARK(BM_GroundChain)->Arg(16)->Arg(256);

void BM_HtEnumeration(benchmark::State& state) {
  // two almost-equal programs over `n` atoms; the scan visits all 3^n pairs
  mg::Program p1 = mg::parse_program("{q(X)} :- p(X).");
  mg::Program p2 = mg::parse_program("q(X) :- p(X), not not q(X).");
  ground::Domain d;
  d.lo = 1;
  d.hi = state.range(0);
  ground::EnumerationOptions opts;
  opts.max_atoms = 20;
  for (auto _ : state) benchmark::DoNotOptimize(ground::check_se(p1, p2, d, opts));
  state.SetComplexityN(2 * state.range(0));
}
BENCHMARK(BM_HtEnumeration)->Arg(3)->Arg(5)->Arg(6);

void BM_StableModels(benchmark::State& state) {
  mg::Program p = mg::parse_program("p(0). p(X+1) :- p(X). {q(X)} :- p(X).");
  ground::Domain d;
  d.lo = 0;
  d.hi = state.range(0);
  ground::GFPtr g = ground::ground_all(nu::nu_program(p), d);
  std::vector<ground::GroundAtom> universe = ground::atom_universe({g.get()});
  ground::EnumerationOptions opts;
  opts.max_atoms = 20;
  for (auto _ : state) benchmark::DoNotOptimize(ground::stable_models(*g, universe, opts));
}
BENCHMARK(BM_StableModels)->Arg(3)->Arg(5);

void BM_CheckProof(benchmark::State& state) {
  kernel::ProofScript script =
      kernel::parse_script_file(std::string(HTA_CORPUS_DIR) + "/proofs/ordered_sum_ab.json");
  for (auto _ : state) benchmark::DoNotOptimize(kernel::check_proof(script));
  state.SetItemsProcessed(state.iterations() * script.lines.size());
}
BENCHMARK(BM_CheckProof);

void BM_ParseScript(benchmark::State& state) {
  std::ifstream in(std::string(HTA_CORPUS_DIR) + "/proofs/choice_vs_dneg_ba.json");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  for (auto _ : state) benchmark::DoNotOptimize(kernel::parse_script_text(text));
}
BENCHMARK(BM_ParseScript);

}  // namespace

BENCHMARK_MAIN();
