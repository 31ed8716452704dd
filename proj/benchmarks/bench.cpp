#include <benchmark/benchmark.h>

#include "artin/cayley.hpp"
#include "artin/criteria.hpp"
#include "artin/deligne.hpp"

using namespace artin;

namespace {

const DefiningGraph& triangle333() {
  static const DefiningGraph g =
      DefiningGraph::parse("a b c; a b 3; b c 3; a c 3;");
  return g;
}

void bm_garside_nf(benchmark::State& state) {
  DefiningGraph g = DefiningGraph::parse("a b; a b 4;");
  MonoidContext ctx(g);
  const auto data = ctx.garside(GenSet::full(2));
  const Word w = parse_word("a b a b' a b a' b a b", g.generators());
  for (auto _ : state) {
    benchmark::DoNotOptimize(garside_nf(*data, w));
  }
}
BENCHMARK(bm_garside_nf);

void bm_positive_class(benchmark::State& state) {
  // closure of a fresh context each round; the memo would hide the work
  const PositiveWord w =
      PositiveWord::from_word(parse_word("a b a c b a", triangle333().generators()));
  for (auto _ : state) {
    MonoidContext ctx(triangle333());
    benchmark::DoNotOptimize(ctx.positive_class(w));
  }
}
BENCHMARK(bm_positive_class);

void bm_m_distance_spherical(benchmark::State& state) {
  DefiningGraph g = DefiningGraph::parse("a b; a b 3;");
  GroupEngine eng(g);
  const Word z = parse_word("a' b' a b a'", g.generators());
  for (auto _ : state) {
    benchmark::DoNotOptimize(m_distance(eng, Word{}, z, 3));
  }
}
BENCHMARK(bm_m_distance_spherical);

void bm_m_distance_bounded(benchmark::State& state) {
  const Word z = parse_word("a b c' a' b c", triangle333().generators());
  for (auto _ : state) {
    GroupEngine eng(triangle333());
    benchmark::DoNotOptimize(m_distance(eng, Word{}, z, 3));
  }
}
BENCHMARK(bm_m_distance_bounded);

void bm_coset_ball(benchmark::State& state) {
  GroupEngine eng(triangle333());
  for (auto _ : state) {
    benchmark::DoNotOptimize(cone_off(coset_poset_ball(eng, 2, 1)));
  }
}
BENCHMARK(bm_coset_ball);

void bm_suffix_criterion(benchmark::State& state) {
  for (auto _ : state) {
    GroupEngine eng(triangle333());
    benchmark::DoNotOptimize(preserved_signed_suffixes_check(eng, 3));
  }
}
BENCHMARK(bm_suffix_criterion);

}  // namespace

BENCHMARK_MAIN();
