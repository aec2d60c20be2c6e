#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

#include "fincat/finab.hpp"
#include "fincat/modelcheck.hpp"
#include "fincat/presheaf.hpp"
#include "fincat/setcolim.hpp"
#include "fincat/sheaves.hpp"
#include "fincat/sites.hpp"

using namespace fincat;

namespace {

// diamond poset 0 < 1,2 < 12, the workhorse base for most operations
std::shared_ptr<const FinCat> diamond() {
  static auto c = std::make_shared<const FinCat>(poset_category(
      {"0", "1", "2", "12"}, {{"0", "1"}, {"0", "2"}, {"1", "12"}, {"2", "12"}}));
  return c;
}

// subsets of {1,2,3} ordered by inclusion
std::shared_ptr<const FinCat> cube() {
  static auto c = std::make_shared<const FinCat>(poset_category(
      {"0", "1", "2", "3", "12", "13", "23", "123"},
      {{"0", "1"},   {"0", "2"},   {"0", "3"},   {"1", "12"},  {"1", "13"},
       {"2", "12"},  {"2", "23"},  {"3", "13"},  {"3", "23"},  {"12", "123"},
       {"13", "123"}, {"23", "123"}}));
  return c;
}

// span-shaped gluing diagram with ten elements in total
SetFunctor glue_diagram() {
  FinGraph g;
  g.vertices = {"a", "b", "c"};
  g.edges = {{"f", "a", "b"}, {"g", "a", "c"}};
  auto base = std::make_shared<const FinCat>(free_category_on_acyclic_graph(g));
  RawSetFunctor raw;
  raw.objects["a"] = {"m0", "m1"};
  raw.objects["b"] = {"l", "x0", "x1", "y"};
  raw.objects["c"] = {"r", "z0", "z1", "w"};
  raw.actions["f"] = {{"m0", "x0"}, {"m1", "x1"}};
  raw.actions["g"] = {{"m0", "z0"}, {"m1", "z1"}};
  return require_set_functor(base, raw);
}

Presheaf two_valued_presheaf() {
  RawSetFunctor raw;
  raw.objects["0"] = {"*"};
  raw.objects["1"] = {"s", "t"};
  raw.objects["2"] = {"s", "t"};
  raw.objects["12"] = {"s", "t"};
  raw.actions["0<=1"] = {{"s", "*"}, {"t", "*"}};
  raw.actions["0<=2"] = {{"s", "*"}, {"t", "*"}};
  raw.actions["0<=12"] = {{"s", "*"}, {"t", "*"}};
  raw.actions["1<=12"] = {{"s", "s"}, {"t", "t"}};
  raw.actions["2<=12"] = {{"s", "s"}, {"t", "t"}};
  return make_presheaf(diamond(), raw);
}

Coverage cover_topology() {
  Coverage site;
  site.covers["12"] = {generate_sieve(*diamond(), "12", {"1<=12", "2<=12"})};
  return saturate_coverage(*diamond(), site);
}

IntMatrix dense_matrix(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = static_cast<int>((r * 7 + c * 3 + 1) % 19) - 9;
  return m;
}

void Colimit(benchmark::State& state) {
  SetFunctor d = glue_diagram();
  for (auto _ : state) {
    ColimitResult r = colimit(d);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(Colimit);

void VerifyUniversal(benchmark::State& state) {
  SetFunctor d = glue_diagram();
  ColimitResult r = colimit(d);
  Cocone cocone{r.apex, r.legs};
  for (auto _ : state) {
    bool ok = verify_universal(d, cocone);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(VerifyUniversal);

void YonedaLemma(benchmark::State& state) {
  Presheaf p = two_valued_presheaf();
  for (auto _ : state) {
    YonedaLemmaResult r = check_yoneda_lemma(p, "12");
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(YonedaLemma);

void YonedaEmbedding(benchmark::State& state) {
  auto base = cube();
  for (auto _ : state) {
    Report r = check_yoneda_full_faithful(base);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(YonedaEmbedding);

void CanonicalColimit(benchmark::State& state) {
  Presheaf p = two_valued_presheaf();
  for (auto _ : state) {
    Report r = check_canonical_colimit(p);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(CanonicalColimit);

void SmithNormalForm(benchmark::State& state) {
  IntMatrix m = dense_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    SmithResult r = smith_normal_form(m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SmithNormalForm)->DenseRange(2, 6);

void TensorCyclic(benchmark::State& state) {
  AbPresentation a;
  a.generators = 1;
  a.relations = IntMatrix(1, 1);
  a.relations.at(0, 0) = 8;
  AbPresentation b;
  b.generators = 1;
  b.relations = IntMatrix(1, 1);
  b.relations.at(0, 0) = 12;
  for (auto _ : state) {
    FgAbGroup g = tensor_ab(a, b);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(TensorCyclic);

void SaturateCoverage(benchmark::State& state) {
  Coverage site;
  site.covers["12"] = {generate_sieve(*diamond(), "12", {"1<=12", "2<=12"})};
  for (auto _ : state) {
    Coverage t = saturate_coverage(*diamond(), site);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(SaturateCoverage);

void TopologyAxioms(benchmark::State& state) {
  Coverage t = all_sieves_topology(*cube());
  for (auto _ : state) {
    Report r = check_topology_axioms(*cube(), t);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(TopologyAxioms);

void SheafCheck(benchmark::State& state) {
  Presheaf p = two_valued_presheaf();
  Coverage t = cover_topology();
  for (auto _ : state) {
    Report r = check_sheaf(p, t);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SheafCheck);

void Sheafify(benchmark::State& state) {
  Presheaf p = two_valued_presheaf();
  Coverage t = cover_topology();
  for (auto _ : state) {
    PlusResult r = sheafify(p, t);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(Sheafify);

void ModelAxioms(benchmark::State& state) {
  const FinCat& c = *cube();
  MorphismClasses classes;
  classes.weq = isomorphisms(c);
  for (const auto& m : c.morphisms()) classes.cof.push_back(m.id);
  classes.fib = classes.cof;
  for (auto _ : state) {
    Report r = check_model_axioms(c, classes);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(ModelAxioms);

}  // namespace

BENCHMARK_MAIN();
