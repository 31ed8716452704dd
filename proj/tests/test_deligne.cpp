#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>

#include "artin/deligne.hpp"

using namespace artin;

namespace {

Word wp(const std::string& s, const DefiningGraph& g) {
  return parse_word(s, g.generators());
}

bool has_edge(const ComplexBall& ball, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return std::find(ball.edges.begin(), ball.edges.end(),
                   std::make_pair(a, b)) != ball.edges.end();
}

std::size_t identity_coset(const ComplexBall& ball, std::size_t subset) {
  const std::size_t root = ball.coset_root[subset][0];
  return ball.coset_vertex[subset][root];
}

}  // namespace

TEST_CASE("free group ball: structure of the coset poset") {
  DefiningGraph g = DefiningGraph::parse("s t;");
  GroupEngine eng(g);
  ComplexBall ball = coset_poset_ball(eng, 2, 1);
  CHECK(ball.complete);
  CHECK(ball.abort_reason.empty());
  CHECK(ball.table_radius == 3);
  // free group: elements of length <= 3 over 2 generators,
  // 1 + 4 + 12 + 36 of them, the 17 of length <= 2 in the core
  CHECK(ball.elements.size() == 53);
  CHECK(ball.core_count == 17);
  // spherical subsets of the free pair: empty, {s}, {t}
  CHECK(ball.subsets.size() == 3);
  // identity element is index 0 and its own singleton-coset root
  CHECK(ball.elements[0].empty());
  CHECK(ball.coset_root[0][0] == 0);

  // element lookup and walking agree with the table
  const auto idx = ball.element_index(wp("s t", g));
  REQUIRE(idx.has_value());
  CHECK(ball.walk(0, wp("s t", g)) == idx);
  CHECK(ball.walk(*idx, wp("t' s'", g)) == 0u);

  // transitions stay inside the table or say npos: every length-3 element
  // has some letter stepping out
  bool some_out = false;
  for (std::size_t i = ball.core_count; i < ball.elements.size(); ++i)
    for (std::size_t slot = 0; slot < 4; ++slot)
      some_out = some_out || ball.transitions[i][slot] == ComplexBall::npos;
  CHECK(some_out);
}

TEST_CASE("coset identification is an equivalence compatible with moves") {
  DefiningGraph g = DefiningGraph::parse("a b; a b 3;");
  GroupEngine eng(g);
  ComplexBall ball = coset_poset_ball(eng, 2, 1);
  REQUIRE(ball.abort_reason.empty());
  // right moves by subset generators never change the assigned coset
  for (std::size_t sub = 0; sub < ball.subsets.size(); ++sub) {
    for (std::size_t i = 0; i < ball.elements.size(); ++i) {
      for (int gen : ball.subsets[sub].gens()) {
        for (int sign : {+1, -1}) {
          const std::size_t j =
              ball.transitions[i][ComplexBall::slot(Letter{gen, sign})];
          if (j == ComplexBall::npos) continue;
          CHECK(ball.coset_root[sub][i] == ball.coset_root[sub][j]);
        }
      }
    }
  }
  // the full dihedral subset is spherical here, so the whole table is one
  // coset of A_{a,b}
  const std::size_t full_sub = ball.subsets.size() - 1;
  CHECK(ball.subsets[full_sub].gens().size() == 2);
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < ball.elements.size(); ++i)
    roots.insert(ball.coset_root[full_sub][i]);
  CHECK(roots.size() == 1);
}

TEST_CASE("poset edges join only nested cosets") {
  DefiningGraph g = DefiningGraph::parse("s t;");
  GroupEngine eng(g);
  ComplexBall ball = coset_poset_ball(eng, 2, 1);
  for (std::size_t e = 0; e < ball.edges.size(); ++e) {
    if (ball.edge_kind[e] != 0) continue;
    const auto& [x, y] = ball.edges[e];
    const auto& vx = ball.vertices[x];
    const auto& vy = ball.vertices[y];
    REQUIRE(!vx.cone);
    REQUIRE(!vy.cone);
    const auto& sx = ball.subsets[vx.subset].gens();
    const auto& sy = ball.subsets[vy.subset].gens();
    const bool x_in_y = sx.size() < sy.size() &&
                        std::includes(sy.begin(), sy.end(), sx.begin(), sx.end());
    const bool y_in_x = sy.size() < sx.size() &&
                        std::includes(sx.begin(), sx.end(), sy.begin(), sy.end());
    CHECK((x_in_y || y_in_x));
  }
}

TEST_CASE("coned ball: every cone vertex reaches its own singleton coset") {
  DefiningGraph g = DefiningGraph::parse("s t;");
  GroupEngine eng(g);
  ComplexBall ball = cone_off(coset_poset_ball(eng, 2, 1));
  REQUIRE(ball.abort_reason.empty());
  for (std::size_t i = 0; i < ball.elements.size(); ++i) {
    const std::size_t cv = ball.cone_vertex[i];
    REQUIRE(cv != ComplexBall::npos);
    const std::size_t root = ball.coset_root[0][i];
    CHECK(has_edge(ball, cv, ball.coset_vertex[0][root]));
    CHECK(!ball.adjacency[cv].empty());
  }
  // and the identity cone vertex reaches every short positive translate:
  // d(v_e, m A_empty) = 1 for |m| <= s
  const std::size_t ve = ball.cone_vertex[0];
  for (const char* m : {"s", "t", ""}) {
    const auto mi = ball.element_index(wp(m, g));
    REQUIRE(mi.has_value());
    const std::size_t mv = ball.coset_vertex[0][ball.coset_root[0][*mi]];
    const auto d = skeleton_distance(ball, ve, mv);
    REQUIRE(d.status == Status::Holds);
    CHECK(*d.distance <= 1);
  }
}

TEST_CASE("skeleton distances: two steps between monoid-adjacent cones") {
  DefiningGraph g = DefiningGraph::parse("s t;");
  GroupEngine eng(g);
  ComplexBall ball = cone_off(coset_poset_ball(eng, 2, 1));
  // h = g m with |m| <= s: v_g and v_h share the coset g m A_empty
  const auto gi = ball.element_index(wp("s", g));
  const auto hi = ball.element_index(wp("s t", g));
  REQUIRE(gi.has_value());
  REQUIRE(hi.has_value());
  const auto d = skeleton_distance(ball, ball.cone_vertex[*gi],
                                   ball.cone_vertex[*hi]);
  REQUIRE(d.status == Status::Holds);
  CHECK(*d.distance == 2);
  // self distance is zero
  const auto self = skeleton_distance(ball, ball.cone_vertex[*gi],
                                      ball.cone_vertex[*gi]);
  CHECK(*self.distance == 0);
}

TEST_CASE("quasi-isometry inequality holds on the free-group ball") {
  DefiningGraph g = DefiningGraph::parse("s t;");
  GroupEngine eng(g);
  ComplexBall ball = cone_off(coset_poset_ball(eng, 2, 1));
  const QiReport rep = qi_check(ball, 1, 3);
  CHECK(rep.verdict.holds());
  CHECK(rep.violations.empty());
  CHECK(rep.pairs_checked > 0);
  CHECK(rep.pairs_skipped == 0);
  REQUIRE(rep.max_ratio.has_value());
  CHECK(rep.max_ratio->d_c <= 2 * rep.max_ratio->d_cay);
}

TEST_CASE("dot output lists cones dashed") {
  DefiningGraph g = DefiningGraph::parse("s t;");
  GroupEngine eng(g);
  ComplexBall ball = cone_off(coset_poset_ball(eng, 1, 1));
  const std::string dot = to_dot(ball);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("dashed") != std::string::npos);
  CHECK(dot.find("v[") != std::string::npos);
}

TEST_CASE("triangles live on mutually adjacent vertices") {
  DefiningGraph g = DefiningGraph::parse("a b; a b 2;");
  GroupEngine eng(g);
  ComplexBall ball = cone_off(coset_poset_ball(eng, 1, 1));
  for (const auto& t : ball.triangles) {
    CHECK(has_edge(ball, t[0], t[1]));
    CHECK(has_edge(ball, t[0], t[2]));
    CHECK(has_edge(ball, t[1], t[2]));
  }
  CHECK(!ball.triangles.empty());
}

TEST_CASE("identity cosets nest along the poset") {
  DefiningGraph g = DefiningGraph::parse("a b; a b 2;");
  GroupEngine eng(g);
  ComplexBall ball = coset_poset_ball(eng, 1, 1);
  // subsets come out size-ordered: empty first, full last
  REQUIRE(ball.subsets.size() == 4);
  const std::size_t empty_sub = 0;
  const std::size_t full_sub = 3;
  CHECK(ball.subsets[empty_sub].empty());
  CHECK(has_edge(ball, identity_coset(ball, empty_sub),
                 identity_coset(ball, full_sub)));
}
