#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "artin/group.hpp"

namespace artin {

/// Bounded piece of the coset complex over spherical subsets, with optional
/// cone vertices over the positive-monoid translates.
///
/// Elements are enumerated to X-length `table_radius = r + s` and identified
/// through canonical words; the extra `s` of slack keeps every intermediate
/// of a short alternating chain between radius-r endpoints inside the table.
/// Cosets g A_T are identified by a union-find over right generator moves
/// within the table, so identification is an equivalence by construction and
/// only ever under-merges (which larger radii repair).
struct ComplexBall {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  DefiningGraph graph;
  std::size_t element_radius = 0;  // r: elements whose pairs are sampled
  std::size_t monoid_radius = 0;   // s: positive translate truncation
  std::size_t table_radius = 0;    // r + s

  std::vector<Word> elements;  // canonical words, by length then shortlex
  std::size_t core_count = 0;  // prefix of `elements` with length <= r
  std::vector<GenSet> subsets; // spherical subsets including the empty one

  // transitions[i][slot(letter)]: table index of element * letter, or npos
  // when the product leaves the table.
  std::vector<std::vector<std::size_t>> transitions;

  struct Vertex {
    bool cone = false;
    std::size_t element = 0;  // cone: base element; coset: root element
    std::size_t subset = 0;   // coset only
  };
  std::vector<Vertex> vertices;
  std::vector<std::vector<std::size_t>> coset_root;    // [subset][element]
  std::vector<std::vector<std::size_t>> coset_vertex;  // [subset][root]
  std::vector<std::size_t> cone_vertex;                // [element], npos if none

  std::vector<std::pair<std::size_t, std::size_t>> edges;  // a < b
  std::vector<int> edge_kind;  // 0 = poset inclusion, 1 = cone
  std::vector<std::vector<std::size_t>> adjacency;
  std::vector<std::array<std::size_t, 3>> triangles;

  bool complete = true;        // false when enumeration hit the budget
  std::string abort_reason;    // nonempty: identification was not sound

  static std::size_t slot(const Letter& l) {
    return static_cast<std::size_t>(l.gen) * 2 + (l.sign < 0 ? 1 : 0);
  }
  std::optional<std::size_t> element_index(const Word& canonical) const;
  std::optional<std::size_t> walk(std::size_t from, const Word& w) const;
};

/// Coset vertices for every table element over every spherical subset, plus
/// poset inclusion edges g A_T < g A_R for T a proper subset of R. No cones.
ComplexBall coset_poset_ball(const GroupEngine& engine, std::size_t r,
                             std::size_t s, std::uint64_t budget = 5'000'000);

/// Adds a cone vertex v_g over each table element g and an edge from v_g to
/// every in-table vertex of the translate g * (positive monoid ball of
/// radius s), i.e. the cosets g m A_T with |m| <= s.
ComplexBall cone_off(ComplexBall ball);

struct SkeletonDistance {
  Status status = Status::Inconclusive;
  std::optional<std::size_t> distance;  // upper bound at these radii
  std::string note;
};

SkeletonDistance skeleton_distance(const ComplexBall& ball, std::size_t from,
                                   std::size_t to);

struct QiPair {
  std::size_t x = 0, y = 0;     // table indices
  std::size_t d_cay = 0, d_c = 0;
};

struct QiReport {
  BoundedVerdict verdict;
  std::size_t factor_bound = 0;  // factor length cap used for d_cay
  std::size_t max_distance = 0;  // pairs kept only when d_cay <= this
  std::size_t pairs_total = 0;
  std::size_t pairs_checked = 0;
  std::size_t pairs_excluded = 0;  // d_cay known to exceed max_distance
  std::size_t pairs_skipped = 0;   // d_cay undecided within the budget
  std::vector<QiPair> violations;  // d_c > 2 d_cay
  std::optional<QiPair> max_ratio; // maximal d_cay / d_c among checked pairs
};

/// Samples all ordered-by-index pairs of core elements, computes the
/// factor-bounded Cayley distance with a bounded-route engine (factors of
/// X-length <= factor_bound, at most max_distance of them), and asserts
/// d_C(v_x, v_y) <= 2 d_cay(x, y) in the 1-skeleton.
QiReport qi_check(const ComplexBall& ball, std::size_t factor_bound,
                  std::size_t max_distance, std::uint64_t budget = 50'000);

/// 1-skeleton in DOT form; cosets are labelled by subset and representative,
/// cone vertices by their base element.
std::string to_dot(const ComplexBall& ball);

}  // namespace artin
