#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "artin/criteria.hpp"

using namespace artin;

namespace {

Word wp(const std::string& s, const DefiningGraph& g) {
  return parse_word(s, g.generators());
}

}  // namespace

TEST_CASE("commuting generators defeat every nontrivial blocking pair") {
  // in Z^2 the word b' a is geodesic and ends in the guard a, yet appending
  // b gives b' a b = a, three letters for a one-letter element
  DefiningGraph g = DefiningGraph::parse("a b; a b 2;");
  GroupEngine eng(g);
  BlockingPairQuery q;
  q.u = wp("a", g);
  q.x = Letter{1, +1};  // b
  q.L = 3;
  const auto v = is_blocking_pair(eng, q);
  REQUIRE(v.status == Status::Counterexample);
  CHECK(v.exact);
  REQUIRE(v.witness.has_value());
  CHECK(format_word(*v.witness, g.generators()) == "b'");
  REQUIRE(v.witness_aux.has_value());
  CHECK(format_word(*v.witness_aux, g.generators()) == "b' a b");
}

TEST_CASE("free groups block on any letter with the matching guard") {
  DefiningGraph g = DefiningGraph::parse("s t;");
  GroupEngine eng(g);
  BlockingPairQuery q;
  q.u = wp("s", g);
  q.x = Letter{1, +1};  // t: never cancels against the guard s
  q.L = 4;
  const auto v = is_blocking_pair(eng, q);
  CHECK(v.status == Status::Holds);
  CHECK(v.bound == 4u);
}

TEST_CASE("the empty guard never blocks") {
  DefiningGraph g = DefiningGraph::parse("s t;");
  GroupEngine eng(g);
  BlockingPairQuery q;
  q.u = Word{};
  q.x = Letter{0, +1};
  q.L = 2;
  const auto v = is_blocking_pair(eng, q);
  // w = s' kills it: s' s is not even freely reduced
  CHECK(v.status == Status::Counterexample);
}

TEST_CASE("signed suffixes survive in free and dihedral groups") {
  for (const char* decl : {"s t;", "a b; a b 2;", "a b; a b 3;"}) {
    DefiningGraph g = DefiningGraph::parse(decl);
    GroupEngine eng(g);
    const auto v = preserved_signed_suffixes_check(eng, 4);
    CHECK(v.holds());
    CHECK(v.bound == 4u);
  }
}

TEST_CASE("a corrupted engine loses a suffix and the check reports it") {
  // seed the false rule b a -> a b': the mutated engine believes
  // b a = a b', so prepending b to the geodesic a strips its suffix
  DefiningGraph g = DefiningGraph::parse("a b; a b 2;");
  MonoidContext ctx(g);
  RewriteRuleSet rules = RewriteRuleSet::for_graph(ctx, 4);
  rules.add_rule(wp("b a", g), wp("a b'", g));
  GroupOptions opts;
  opts.force_bounded = true;
  opts.rules_override = rules;
  GroupEngine mutated(g, opts);
  const auto v = preserved_signed_suffixes_check(mutated, 3);
  CHECK(v.status == Status::Counterexample);
  CHECK(v.witness.has_value());
}

TEST_CASE("sequence validation rejects malformed periods") {
  DefiningGraph g = DefiningGraph::parse("a b c; a b 3; b c 3; a c 3;");
  const Word ab = wp("a b", g);
  const Word neg = wp("c' a'", g);
  // odd period length
  CHECK_THROWS_AS(BlockingSequence::from_period({ab}),
                  std::invalid_argument);
  // wrong sign at an even index
  CHECK_THROWS_AS(BlockingSequence::from_period({ab, ab}),
                  std::invalid_argument);
  // mixed signs inside one block
  CHECK_THROWS_AS(BlockingSequence::from_period({wp("a b'", g), neg}),
                  std::invalid_argument);
  // empty block
  CHECK_THROWS_AS(BlockingSequence::from_period({Word{}, neg}),
                  std::invalid_argument);
  // cancelling junction: ab then b' a' starts with the inverse of b
  CHECK_THROWS_AS(BlockingSequence::from_period({ab, wp("b' a'", g)}),
                  std::invalid_argument);
  // cancelling cyclic junction: c' a' wraps onto a b
  CHECK_THROWS_AS(BlockingSequence::from_period({ab, neg}),
                  std::invalid_argument);
  // a sound period passes
  CHECK_NOTHROW(BlockingSequence::from_period({ab, wp("a' b'", g)}));
}

TEST_CASE("label prerequisites guard the stock sequences") {
  DefiningGraph small = DefiningGraph::parse("a b c; a b 2; b c 3; a c 3;");
  CHECK_THROWS_AS(BlockingSequence::large_type(small, 0, 1, 2),
                  std::invalid_argument);
  DefiningGraph lt = DefiningGraph::parse("a b c; a b 3; b c 3; a c 3;");
  CHECK_NOTHROW(BlockingSequence::large_type(lt, 0, 1, 2));
  CHECK_THROWS_AS(BlockingSequence::three_free(lt, 0, 1, 2),
                  std::invalid_argument);
  DefiningGraph tf = DefiningGraph::parse("a b c; a b 4; b c 4; a c 2;");
  CHECK_NOTHROW(BlockingSequence::three_free(tf, 0, 1, 2));
}

TEST_CASE("stock sequence words") {
  DefiningGraph lt = DefiningGraph::parse("a b c; a b 3; b c 3; a c 3;");
  const auto seq = BlockingSequence::large_type(lt, 0, 1, 2);
  REQUIRE(seq.period().size() == 6);
  CHECK(format_word(seq.alpha(1), lt.generators()) == "a b");
  CHECK(format_word(seq.alpha(2), lt.generators()) == "c' a'");
  CHECK(format_word(seq.alpha(6), lt.generators()) == "b' c'");
  // periodicity
  CHECK(format_word(seq.alpha(7), lt.generators()) == "a b");
  CHECK(format_word(seq.w(2), lt.generators()) == "a b c' a'");
  CHECK(seq.w(6).size() == 12);

  DefiningGraph tf = DefiningGraph::parse("a b c; a b 4; b c 4; a c 2;");
  const auto three = BlockingSequence::three_free(tf, 0, 1, 2);
  REQUIRE(three.period().size() == 2);
  CHECK(format_word(three.alpha(1), tf.generators()) == "b a b c");
  CHECK(format_word(three.alpha(2), tf.generators()) == "b' a' b' c'");
}

TEST_CASE("monoidal length of w(n) is n") {
  DefiningGraph lt = DefiningGraph::parse("a b c; a b 3; b c 3; a c 3;");
  const auto seq = BlockingSequence::large_type(lt, 0, 1, 2);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Word wn = seq.w(n);
    CHECK(wn.is_freely_reduced());
    CHECK(monoidal_length(wn) == n);
  }
}

TEST_CASE("spherical groups obstruct blocking pairs") {
  DefiningGraph g = DefiningGraph::parse("a b; a b 3;");
  GroupEngine eng(g);
  PositiveWord u;
  u.push_back(0);  // u = a
  const auto obs = spherical_blocking_obstruction(eng, u, 1);
  CHECK(obs.verdict.holds());
  CHECK(obs.verdict.exact);
  // delta^2 a, then b^-1 appended; the positive respelling drops a letter
  CHECK(obs.witness.size() == 7);
  CHECK(obs.appended.size() == 8);
  CHECK(obs.shorter.size() == 6);
  CHECK(eng.equal(obs.appended, obs.shorter).holds());
  CHECK(eng.is_geodesic(obs.witness).holds());
  CHECK(!eng.is_geodesic(obs.appended).holds());
}

TEST_CASE("w(n) sits at monoid distance n from the identity") {
  // the free-pair sequence (st, s^-1 t^-1, ...) in the free group
  DefiningGraph g = DefiningGraph::parse("s t;");
  GroupEngine eng(g);
  const auto seq = BlockingSequence::from_period(
      {wp("s t", g), wp("s' t'", g)});
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto rep = verify_wn_geodesic(eng, seq, n, 2);
    CHECK(rep.verdict.holds());
    CHECK(rep.distance.distance == n);
    CHECK(rep.wn.size() == 2 * n);
  }
}

TEST_CASE("the affine triangle sequence verifies at small bounds") {
  DefiningGraph g = DefiningGraph::parse("a b c; a b 3; b c 3; a c 3;");
  GroupEngine eng(g);
  const auto seq = BlockingSequence::large_type(g, 0, 1, 2);
  const auto rep = verify_blocking_sequence(eng, seq, 2, 3);
  REQUIRE(rep.verdict.status == Status::Holds);
  CHECK(rep.blocks_checked == 2);
  CHECK(rep.letters.size() == 4);  // two blocks of two letters
  // first block letters ride on positivity, second block needs guards
  CHECK(rep.letters[0].positive_base);
  CHECK(rep.letters[1].positive_base);
  CHECK(!rep.letters[2].positive_base);
  REQUIRE(rep.letters[2].guard.has_value());
  CHECK(rep.letters[2].guards_tried >= 1);
  // every guard is a genuine suffix of the guarded context
  for (const auto& rec : rep.letters)
    CHECK(rec.status == Status::Holds);
}

TEST_CASE("wn distances on the affine triangle") {
  DefiningGraph g = DefiningGraph::parse("a b c; a b 3; b c 3; a c 3;");
  GroupEngine eng(g);
  const auto seq = BlockingSequence::large_type(g, 0, 1, 2);
  const auto rep = verify_wn_geodesic(eng, seq, 2, 3);
  CHECK(rep.verdict.holds());
  CHECK(rep.distance.distance == 2u);
}
