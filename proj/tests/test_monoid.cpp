#include "doctest.h"

#include <deque>
#include <set>
#include <string>

#include "artin/monoid.hpp"

using namespace artin;

namespace {

// Independent oracle: closure of one-step braid-relation replacements on
// positive {a,b}-strings, no shared code with MonoidContext.
std::set<std::string> naive_class(const std::string& w, int m) {
  std::string lhs, rhs;
  for (int i = 0; i < m; ++i) {
    lhs += (i % 2 == 0) ? 'a' : 'b';
    rhs += (i % 2 == 0) ? 'b' : 'a';
  }
  std::set<std::string> seen{w};
  std::deque<std::string> queue{w};
  while (!queue.empty()) {
    const std::string cur = queue.front();
    queue.pop_front();
    for (const auto& [from, to] : {std::pair{lhs, rhs}, {rhs, lhs}}) {
      for (std::size_t at = 0; at + from.size() <= cur.size(); ++at) {
        if (cur.compare(at, from.size(), from) != 0) continue;
        std::string next = cur;
        next.replace(at, from.size(), to);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  return seen;
}

PositiveWord from_string(const std::string& s) {
  std::vector<int> gens;
  for (char c : s) gens.push_back(c - 'a');
  return PositiveWord(gens);
}

std::vector<std::string> positive_strings(std::size_t len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : {'a', 'b'}) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("dihedral monoid equality matches the naive closure") {
  for (int m : {2, 3, 4, 5}) {
    DefiningGraph g = DefiningGraph::parse("a b; a b " + std::to_string(m) + ";");
    MonoidContext ctx(std::move(g));
    for (std::size_t len = 1; len <= 5; ++len) {
      const auto words = positive_strings(len);
      for (const auto& u : words) {
        const auto cls = naive_class(u, m);
        for (const auto& v : words) {
          const bool expected = cls.contains(v);
          CHECK(ctx.monoid_equal(from_string(u), from_string(v)) == expected);
        }
      }
    }
  }
}

TEST_CASE("positive classes are shortlex sorted with a least canonical") {
  DefiningGraph g = DefiningGraph::parse("a b; a b 3;");
  MonoidContext ctx(std::move(g));
  const auto cls = ctx.positive_class(from_string("bab"));
  REQUIRE(cls->size() == 2);
  CHECK(format_positive_word(cls->canonical(), {"a", "b"}) == "a b a");
  CHECK(ctx.canonical(from_string("bab")).code() == from_string("aba").code());
}

TEST_CASE("divisibility in I2(3)") {
  DefiningGraph g = DefiningGraph::parse("a b; a b 3;");
  MonoidContext ctx(std::move(g));
  // b left-divides aba = bab, but b does not left-divide ab
  CHECK(ctx.left_divides(from_string("b"), from_string("aba")));
  CHECK(!ctx.left_divides(from_string("b"), from_string("ab")));
  CHECK(ctx.right_divides(from_string("a"), from_string("bab")));
  CHECK(ctx.right_divides(from_string("b"), from_string("ab")));
  CHECK(!ctx.right_divides(from_string("a"), from_string("ab")));
}

TEST_CASE("lcm of the atoms") {
  {
    DefiningGraph g = DefiningGraph::parse("a b; a b 3;");
    MonoidContext ctx(std::move(g));
    const auto r = ctx.left_lcm(from_string("a"), from_string("b"));
    REQUIRE(r.lcm.has_value());
    CHECK(format_positive_word(*r.lcm, {"a", "b"}) == "a b a");
  }
  {
    DefiningGraph g = DefiningGraph::parse("a b; a b 2;");
    MonoidContext ctx(std::move(g));
    const auto r = ctx.left_lcm(from_string("a"), from_string("b"));
    REQUIRE(r.lcm.has_value());
    CHECK(r.lcm->size() == 2);
  }
  {
    // no relation: the atoms have no common multiple at any cap
    DefiningGraph g = DefiningGraph::parse("a b;");
    MonoidContext ctx(std::move(g));
    const auto r = ctx.left_lcm(from_string("a"), from_string("b"), 8);
    CHECK(!r.lcm.has_value());
  }
}

TEST_CASE("garside structure of the dihedral monoids") {
  for (int m : {2, 3, 4, 5}) {
    DefiningGraph g = DefiningGraph::parse("a b; a b " + std::to_string(m) + ";");
    MonoidContext ctx(std::move(g));
    const auto data = ctx.garside(GenSet::full(2));
    CHECK(data->delta().size() == static_cast<std::size_t>(m));
    CHECK(data->simples().size() == static_cast<std::size_t>(2 * m));
    // delta conjugation is an involution on the atoms
    for (int gen : {0, 1})
      CHECK(data->delta_conj_atom(data->delta_conj_atom(gen)) == gen);
    // each simple s satisfies s * r_comp(s) = delta
    for (std::size_t s = 0; s < data->simples().size(); ++s) {
      const int sid = static_cast<int>(s);
      CHECK(data->prod(sid, data->r_comp(sid)) == data->delta_simple_id());
    }
  }
}

TEST_CASE("garside structure of the A3 braid parabolic") {
  DefiningGraph g = DefiningGraph::parse("a b c; a b 3; b c 3; a c 2;");
  MonoidContext ctx(std::move(g));
  const auto data = ctx.garside(GenSet::full(3));
  // half twist has length 6; simples biject with the 24 permutations
  CHECK(data->delta().size() == 6);
  CHECK(data->simples().size() == 24);
  for (int gen : {0, 1, 2})
    CHECK(data->delta_conj_atom(data->delta_conj_atom(gen)) == gen);
}

TEST_CASE("left and right complements multiply to delta") {
  DefiningGraph g = DefiningGraph::parse("a b; a b 4;");
  MonoidContext ctx(std::move(g));
  const auto data = ctx.garside(GenSet::full(2));
  for (std::size_t s = 0; s < data->simples().size(); ++s) {
    const int sid = static_cast<int>(s);
    // l_comp(s) * s = delta, verified through monoid equality
    PositiveWord left = data->simples()[static_cast<std::size_t>(data->l_comp(sid))];
    left.append(data->simples()[s]);
    CHECK(ctx.monoid_equal(left, data->delta()));
  }
}

TEST_CASE("normalize returns the delta power and delta-free tail") {
  DefiningGraph g = DefiningGraph::parse("a b; a b 3;");
  MonoidContext ctx(std::move(g));
  const auto data = ctx.garside(GenSet::full(2));
  // aba is delta itself
  {
    const auto [power, tail] = data->normalize(
        {data->atom_id(0), data->atom_id(1), data->atom_id(0)});
    CHECK(power == 1);
    CHECK(tail.empty());
  }
  // ab stays a single simple
  {
    const auto [power, tail] =
        data->normalize({data->atom_id(0), data->atom_id(1)});
    CHECK(power == 0);
    REQUIRE(tail.size() == 1);
    CHECK(format_positive_word(data->simple_word(tail[0]), {"a", "b"}) ==
          "a b");
  }
}
