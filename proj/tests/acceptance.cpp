// Acceptance gate: one line per criterion, nonzero exit when any fails.
// argv[1] is the CLI binary used by the determinism criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "artin/criteria.hpp"
#include "artin/deligne.hpp"
#include "artin/monoid.hpp"

using namespace artin;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::printf("AC%d %s - %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

DefiningGraph dihedral(int m) {
  return DefiningGraph::parse("a b; a b " + std::to_string(m) + ";");
}

const DefiningGraph kTriangle333 =
    DefiningGraph::parse("a b c; a b 3; b c 3; a c 3;");
const DefiningGraph kTriangle442 =
    DefiningGraph::parse("a b c; a b 4; b c 4; a c 2;");

std::vector<PositiveWord> positive_words(std::size_t rank, std::size_t len) {
  std::vector<PositiveWord> out{PositiveWord{}};
  std::size_t first = 0;
  for (std::size_t l = 1; l <= len; ++l) {
    const std::size_t last = out.size();
    for (std::size_t i = first; i < last; ++i)
      for (std::size_t g = 0; g < rank; ++g) {
        PositiveWord w = out[i];
        w.push_back(static_cast<int>(g));
        out.push_back(std::move(w));
      }
    first = last;
  }
  return out;
}

std::vector<Word> reduced_words(std::size_t rank, std::size_t len) {
  std::vector<Word> out{Word{}};
  std::size_t first = 0;
  for (std::size_t l = 1; l <= len; ++l) {
    const std::size_t last = out.size();
    for (std::size_t i = first; i < last; ++i)
      for (std::size_t g = 0; g < rank; ++g)
        for (int sign : {+1, -1}) {
          const Word& w = out[i];
          if (!w.empty()) {
            const Letter tail = w.letter(w.size() - 1);
            if (tail.gen == static_cast<int>(g) && tail.sign == -sign)
              continue;
          }
          Word child = w;
          child.push_back(Letter{static_cast<int>(g), sign});
          out.push_back(std::move(child));
        }
    first = last;
  }
  return out;
}

void criterion1() {
  std::ostringstream what;
  what << "dihedral Garside tables:";
  bool ok = true;
  for (int m : {2, 3, 4, 5}) {
    const auto t0 = Clock::now();
    MonoidContext ctx(dihedral(m));
    const auto data = ctx.garside(GenSet::full(2));
    bool here = data->delta().size() == static_cast<std::size_t>(m) &&
                data->simples().size() == static_cast<std::size_t>(2 * m);
    for (std::size_t s = 0; here && s < data->simples().size(); ++s) {
      const int id = static_cast<int>(s);
      here = data->delta_conj_simple(data->delta_conj_simple(id)) == id;
      const PositiveWord twice =
          delta_conjugation(*data, delta_conjugation(*data, data->simple_word(id)));
      here = here && ctx.monoid_equal(twice, data->simple_word(id));
    }
    const double dt = seconds_since(t0);
    here = here && dt < 1.0;
    what << " m=" << m << (here ? " ok" : " FAILED") << " ("
         << static_cast<int>(dt * 1000) << "ms)";
    ok = ok && here;
  }
  report(1, ok, what.str());
}

void criterion2() {
  bool ok = true;
  std::size_t pairs = 0;
  for (int m : {2, 3, 4, 0}) {
    DefiningGraph g = m ? dihedral(m) : DefiningGraph::parse("a b;");
    MonoidContext ctx(g);
    GroupEngine eng(g);
    const auto words = positive_words(2, 5);
    for (const auto& u : words)
      for (const auto& v : words) {
        const bool monoid = ctx.monoid_equal(u, v);
        const BoundedVerdict group = eng.equal(u.as_word(), v.as_word());
        ++pairs;
        if (group.status == Status::Inconclusive || monoid != group.holds()) {
          ok = false;
        }
      }
  }
  report(2, ok,
         "monoid equality matches group equality on " + std::to_string(pairs) +
             " positive pairs of length <= 5 over labels {2,3,4,inf}");
}

void criterion3() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream what;
  what << "monoid-generating-set diameter <= 2 with explicit paths:";
  for (auto [m, radius] : {std::pair<int, std::size_t>{2, 6}, {3, 6}, {4, 5}}) {
    GroupEngine eng(dihedral(m));
    const Diameter2Report rep = spherical_diameter2_check(eng, radius);
    bool here = rep.verdict.holds() && !rep.entries.empty();
    for (const auto& e : rep.entries) {
      here = here && e.distance <= 2;
      if (e.distance > 0) here = here && e.path.has_value();
    }
    what << " I2(" << m << ") r=" << radius << " " << rep.entries.size()
         << " elements" << (here ? "" : " FAILED");
    ok = ok && here;
  }
  const double dt = seconds_since(t0);
  ok = ok && dt < 30.0;
  what << " (" << static_cast<int>(dt * 1000) << "ms)";
  report(3, ok, what.str());
}

void criterion4() {
  DefiningGraph g = DefiningGraph::parse("s t;");
  GroupEngine eng(g);
  bool ok = true;
  Word z;
  for (std::size_t m = 1; m <= 5; ++m) {
    z = free_reduce(concat(z, parse_word("s t'", g.generators())));
    const MDistanceReport rep = m_distance(eng, Word{}, z, 3);
    ok = ok && rep.status == Status::Holds && rep.exact &&
         rep.distance == 2 * m && rep.witness &&
         rep.witness->length() == 2 * m;
  }
  report(4, ok, "free group: (s t^-1)^m sits at distance exactly 2m, m <= 5");
}

void criterion5() {
  bool ok = true;
  std::ostringstream what;
  what << "preserved signed suffixes at L=5:";
  struct Case {
    const char* name;
    DefiningGraph graph;
  };
  const Case cases[] = {{"free", DefiningGraph::parse("s t;")},
                        {"Z^2", dihedral(2)},
                        {"(3,3,3)", kTriangle333}};
  for (const auto& c : cases) {
    GroupEngine eng(c.graph);
    const BoundedVerdict v = preserved_signed_suffixes_check(eng, 5);
    const bool here = v.holds();
    what << " " << c.name << (here ? " ok" : " FAILED");
    ok = ok && here;
  }
  // harness sanity: a corrupted rule set must be caught
  {
    DefiningGraph g = dihedral(2);
    MonoidContext ctx(g);
    RewriteRuleSet rules = RewriteRuleSet::for_graph(ctx, 4);
    rules.add_rule(parse_word("b a", g.generators()),
                   parse_word("a b'", g.generators()));
    GroupOptions opts;
    opts.force_bounded = true;
    opts.rules_override = rules;
    GroupEngine mutated(g, opts);
    const BoundedVerdict v = preserved_signed_suffixes_check(mutated, 3);
    const bool here = v.status == Status::Counterexample;
    what << "; seeded mutation " << (here ? "caught" : "MISSED");
    ok = ok && here;
  }
  report(5, ok, what.str());
}

void criterion6() {
  bool ok = true;
  std::ostringstream what;
  {
    GroupEngine eng(kTriangle333);
    const auto seq = BlockingSequence::large_type(kTriangle333, 0, 1, 2);
    const SequenceCheckReport rep = verify_blocking_sequence(eng, seq, 3, 5);
    const bool here = rep.verdict.status == Status::Holds;
    what << "blocking sequence (3,3,3) n=3 L=5"
         << (here ? " holds" : " FAILED");
    ok = ok && here;
  }
  {
    GroupEngine eng(kTriangle442);
    const auto seq = BlockingSequence::three_free(kTriangle442, 0, 1, 2);
    const SequenceCheckReport rep = verify_blocking_sequence(eng, seq, 2, 4);
    const bool here = rep.verdict.status == Status::Holds;
    what << "; (4,4,2) n=2 L=4" << (here ? " holds" : " FAILED");
    ok = ok && here;
  }
  {
    DefiningGraph g = dihedral(2);
    GroupEngine eng(g);
    BlockingPairQuery q;
    q.u = parse_word("a", g.generators());
    q.x = Letter{1, +1};
    q.L = 3;
    const BoundedVerdict v = is_blocking_pair(eng, q);
    const bool here =
        v.status == Status::Counterexample && v.witness && v.witness_aux &&
        format_word(*v.witness, g.generators()) == "b'" &&
        format_word(*v.witness_aux, g.generators()) == "b' a b";
    what << "; commuting counterexample b' a b"
         << (here ? " recovered" : " MISSING");
    ok = ok && here;
  }
  report(6, ok, what.str());
}

void criterion7() {
  bool ok = true;
  std::ostringstream what;
  what << "w_n distances:";
  struct Case {
    const char* name;
    const DefiningGraph& graph;
    bool three_free;
    std::size_t B;
  };
  const Case cases[] = {{"(3,3,3)", kTriangle333, false, 3},
                        {"(4,4,2)", kTriangle442, true, 5}};
  for (const auto& c : cases) {
    GroupEngine eng(c.graph);
    const auto seq = c.three_free
                         ? BlockingSequence::three_free(c.graph, 0, 1, 2)
                         : BlockingSequence::large_type(c.graph, 0, 1, 2);
    std::size_t prev = 0;
    what << " " << c.name << " B=" << c.B << ":";
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto t0 = Clock::now();
      const WnGeodesicReport rep = verify_wn_geodesic(eng, seq, n, c.B);
      const double dt = seconds_since(t0);
      const bool here = rep.verdict.status == Status::Holds &&
                        rep.distance.distance == n && n > prev && dt < 300.0;
      if (rep.distance.distance) prev = *rep.distance.distance;
      what << " d(w_" << n << ")=" << (rep.distance.distance
                                           ? std::to_string(*rep.distance.distance)
                                           : std::string("?"))
           << (here ? "" : " FAILED");
      ok = ok && here;
    }
  }
  report(7, ok, what.str());
}

void criterion8() {
  bool ok = true;
  std::size_t runs = 0;
  for (int m : {3, 4}) {
    GroupEngine eng(dihedral(m));
    for (const PositiveWord& u : positive_words(2, 3)) {
      for (int x : {0, 1}) {
        const SphericalObstruction obs =
            spherical_blocking_obstruction(eng, u, x);
        ++runs;
        ok = ok && obs.verdict.holds();
      }
    }
  }
  report(8, ok,
         "spherical obstruction: delta^2 u stays geodesic, shortens after "
         "x^-1, across " +
             std::to_string(runs) + " guards on I2(3) and I2(4)");
}

void criterion9() {
  GroupEngine eng(kTriangle333);
  bool ok = true;
  std::size_t checked = 0;
  for (const Word& w : reduced_words(3, 4)) {
    const BoundedVerdict geo = eng.is_geodesic(w);
    if (geo.status == Status::Counterexample) continue;
    if (geo.status != Status::Holds) {
      ok = false;  // the quantifier itself must be decidable here
      break;
    }
    for (int eb : {+1, -1}) {
      for (int ea : {+1, -1}) {
        Word wba = w;
        wba.push_back(Letter{1, eb});
        wba.push_back(Letter{0, ea});
        if (!wba.is_freely_reduced()) continue;
        const GeodesicReps reps = eng.geodesic_representatives(wba);
        if (!reps.complete) {
          ok = false;
          break;
        }
        ++checked;
        for (const Word& rep : reps.words) {
          if (rep.empty()) {
            ok = false;
            break;
          }
          const int gen = rep.letter(rep.size() - 1).gen;
          if (gen != 0 && gen != 1) ok = false;
        }
      }
    }
    if (!ok) break;
  }
  report(9, ok,
         "every geodesic representative of w b^{±} a^{±} ends in a "
         "or b on (3,3,3), " +
             std::to_string(checked) + " products over |w| <= 4");
}

void criterion10() {
  bool ok = true;
  std::ostringstream what;
  what << "parabolic vs ambient monoid distances at r=3 B=3:";
  {
    GroupEngine eng(kTriangle333);
    const EmbeddingReport rep =
        isometric_embedding_check(eng, GenSet({0, 1}), 3, 3, 2'000'000);
    const bool here = rep.verdict.holds() && rep.skipped == 0;
    what << " (3,3,3) T={a,b} " << rep.pairs_checked << " pairs"
         << (here ? "" : " FAILED");
    ok = ok && here;
  }
  {
    DefiningGraph g = DefiningGraph::parse("s t u; t u 3;");
    GroupEngine eng(g);
    const EmbeddingReport rep =
        isometric_embedding_check(eng, GenSet({0, 1}), 3, 3, 2'000'000);
    const bool here = rep.verdict.holds() && rep.skipped == 0;
    what << "; free pair in the folded graph " << rep.pairs_checked
         << " pairs" << (here ? "" : " FAILED");
    ok = ok && here;
  }
  report(10, ok, what.str());
}

void criterion11() {
  bool ok = true;
  std::ostringstream what;
  what << "coned-complex distances obey d_C <= 2 d_Cay (r=3, s=2):";
  struct Case {
    const char* name;
    DefiningGraph graph;
  };
  const Case cases[] = {{"free", DefiningGraph::parse("s t;")},
                        {"(3,3,3)", kTriangle333}};
  for (const auto& c : cases) {
    GroupEngine eng(c.graph);
    ComplexBall ball = cone_off(coset_poset_ball(eng, 3, 2));
    const QiReport rep = qi_check(ball, 2, 3);
    const bool here = ball.abort_reason.empty() && rep.verdict.holds() &&
                      rep.violations.empty() && rep.max_ratio.has_value();
    what << " " << c.name << " " << rep.pairs_checked << " pairs";
    if (rep.max_ratio)
      what << " max d_Cay/d_C = " << rep.max_ratio->d_cay << "/"
           << rep.max_ratio->d_c;
    if (!here) what << " FAILED";
    ok = ok && here;
  }
  report(11, ok, what.str());
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion12(const char* cli) {
  if (!cli) {
    report(12, false, "determinism: CLI binary path not supplied");
    return;
  }
  bool ok = true;
  std::ostringstream what;
  what << "byte-identical JSON across repeated runs:";
  const std::string base = std::string(cli);
  struct Run {
    const char* label;
    std::string args;
  };
  const Run runs[] = {
      {"criterion1",
       "--graph \"a b c; a b 3; b c 3; a c 3;\" --bounds L=3 verify "
       "criterion1"},
      {"wn", "--graph \"a b c; a b 3; b c 3; a c 3;\" --bounds B=3 verify wn "
             "--n 2"},
  };
  int tag = 0;
  for (const Run& r : runs) {
    const std::string f1 = "/tmp/artin_acceptance_" + std::to_string(tag++) + ".json";
    const std::string f2 = "/tmp/artin_acceptance_" + std::to_string(tag++) + ".json";
    const std::string c1 = base + " --out " + f1 + " " + r.args + " >/dev/null 2>&1";
    const std::string c2 = base + " --out " + f2 + " " + r.args + " >/dev/null 2>&1";
    const int s1 = std::system(c1.c_str());
    const int s2 = std::system(c2.c_str());
    const std::string b1 = slurp(f1);
    const std::string b2 = slurp(f2);
    const bool here = s1 == 0 && s2 == 0 && !b1.empty() && b1 == b2;
    what << " " << r.label << (here ? " ok" : " FAILED");
    ok = ok && here;
  }
  report(12, ok, what.str());
}

}  // namespace

int main(int argc, char** argv) {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12(argc > 1 ? argv[1] : nullptr);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
