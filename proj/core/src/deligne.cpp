#include "artin/deligne.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "artin/cayley.hpp"

namespace artin {

namespace {

bool proper_subset(const GenSet& a, const GenSet& b) {
  if (a.gens().size() >= b.gens().size()) return false;
  for (int g : a.gens())
    if (!b.contains(g)) return false;
  return true;
}

std::string describe(const Word& w, const std::vector<std::string>& names) {
  return w.empty() ? "e" : format_word(w, names);
}

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::optional<std::size_t> ComplexBall::element_index(
    const Word& canonical) const {
  const auto cmp = [](const Word& a, const Word& b) {
    return shortlex_less(a, b);
  };
  // elements are sorted by length then shortlex, which is shortlex overall
  auto it = std::lower_bound(elements.begin(), elements.end(), canonical, cmp);
  if (it != elements.end() && it->code() == canonical.code())
    return static_cast<std::size_t>(it - elements.begin());
  return std::nullopt;
}

std::optional<std::size_t> ComplexBall::walk(std::size_t from,
                                             const Word& w) const {
  std::size_t cur = from;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t next = transitions[cur][slot(w.letter(i))];
    if (next == npos) return std::nullopt;
    cur = next;
  }
  return cur;
}

ComplexBall coset_poset_ball(const GroupEngine& engine, std::size_t r,
                             std::size_t s, std::uint64_t budget) {
  ComplexBall ball{engine.graph()};
  ball.element_radius = r;
  ball.monoid_radius = s;
  ball.table_radius = r + s;
  ball.subsets = spherical_subsets(ball.graph);

  const std::size_t rank = ball.graph.rank();
  const auto& names = ball.graph.generators();
  std::map<std::string, std::size_t> index_of;  // canonical word code -> id

  ball.elements.push_back(Word{});
  index_of.emplace(Word{}.code(), 0);

  // canonicalize with a per-spelling cache; budget counts engine calls
  std::map<std::string, Word> canon_cache;
  auto canonical = [&](const Word& w) -> std::optional<Word> {
    auto hit = canon_cache.find(w.code());
    if (hit != canon_cache.end()) return hit->second;
    if (budget == 0) {
      ball.complete = false;
      ball.abort_reason = "canonicalization budget exhausted at " +
                          describe(w, names);
      return std::nullopt;
    }
    --budget;
    GroupEngine::Canon c = engine.canonical_word(w);
    if (!c.complete) {
      ball.complete = false;
      ball.abort_reason =
          "canonical form incomplete for " + describe(w, names) +
          "; identification would not be sound";
      return std::nullopt;
    }
    canon_cache.emplace(w.code(), c.word);
    return c.word;
  };

  std::size_t level_begin = 0;
  for (std::size_t level = 0; level < ball.table_radius; ++level) {
    const std::size_t level_end = ball.elements.size();
    std::set<std::string> fresh_codes;
    std::vector<Word> fresh;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t g = 0; g < rank; ++g)
        for (int sign : {+1, -1}) {
          Word child = ball.elements[i];
          child.push_back(Letter{static_cast<int>(g), sign});
          child = free_reduce(child);
          if (child.size() > ball.table_radius) continue;
          if (index_of.contains(child.code())) continue;
          auto canon = canonical(child);
          if (!canon) return ball;
          if (index_of.contains(canon->code()) ||
              fresh_codes.contains(canon->code()))
            continue;
          if (canon->size() <= level) {
            ball.abort_reason = "inconsistent canonical forms: " +
                                describe(child, names) + " resolves to the "
                                "unenumerated shorter word " +
                                describe(*canon, names);
            ball.complete = false;
            return ball;
          }
          fresh_codes.insert(canon->code());
          fresh.push_back(*canon);
        }
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const Word& a, const Word& b) { return shortlex_less(a, b); });
    for (Word& w : fresh) {
      index_of.emplace(w.code(), ball.elements.size());
      ball.elements.push_back(std::move(w));
    }
    level_begin = level_end;
  }

  const std::size_t n = ball.elements.size();
  ball.core_count = 0;
  while (ball.core_count < n && ball.elements[ball.core_count].size() <= r)
    ++ball.core_count;

  // full transition table; npos when the product leaves the table
  ball.transitions.assign(n, std::vector<std::size_t>(rank * 2, ComplexBall::npos));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t g = 0; g < rank; ++g)
      for (int sign : {+1, -1}) {
        const Letter l{static_cast<int>(g), sign};
        Word child = ball.elements[i];
        child.push_back(l);
        child = free_reduce(child);
        if (child.size() > ball.table_radius) continue;
        auto direct = index_of.find(child.code());
        if (direct != index_of.end()) {
          ball.transitions[i][ComplexBall::slot(l)] = direct->second;
          continue;
        }
        auto canon = canonical(child);
        if (!canon) return ball;
        auto via = index_of.find(canon->code());
        if (via == index_of.end()) {
          ball.abort_reason = "inconsistent canonical forms: " +
                              describe(child, names) +
                              " resolves outside the enumerated table";
          ball.complete = false;
          return ball;
        }
        ball.transitions[i][ComplexBall::slot(l)] = via->second;
      }

  // cosets per spherical subset by union-find over right generator moves
  ball.coset_root.assign(ball.subsets.size(), {});
  for (std::size_t t = 0; t < ball.subsets.size(); ++t) {
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
      for (int g : ball.subsets[t].gens())
        for (int sign : {+1, -1}) {
          const std::size_t j = ball.transitions[i][ComplexBall::slot({g, sign})];
          if (j != ComplexBall::npos) uf.unite(i, j);
        }
    ball.coset_root[t].resize(n);
    for (std::size_t i = 0; i < n; ++i) ball.coset_root[t][i] = uf.find(i);
  }

  ball.coset_vertex.assign(ball.subsets.size(),
                           std::vector<std::size_t>(n, ComplexBall::npos));
  for (std::size_t t = 0; t < ball.subsets.size(); ++t)
    for (std::size_t i = 0; i < n; ++i)
      if (ball.coset_root[t][i] == i) {
        ball.coset_vertex[t][i] = ball.vertices.size();
        ball.vertices.push_back({false, i, t});
      }

  std::set<std::pair<std::size_t, std::size_t>> seen_edges;
  auto add_edge = [&](std::size_t a, std::size_t b, int kind) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    if (!seen_edges.insert({a, b}).second) return;
    ball.edges.push_back({a, b});
    ball.edge_kind.push_back(kind);
  };

  std::set<std::array<std::size_t, 3>> seen_triangles;
  auto add_triangle = [&](std::array<std::size_t, 3> tri) {
    std::sort(tri.begin(), tri.end());
    if (tri[0] == tri[1] || tri[1] == tri[2]) return;
    if (seen_triangles.insert(tri).second) ball.triangles.push_back(tri);
  };

  std::vector<std::pair<std::size_t, std::size_t>> inclusions;
  for (std::size_t t1 = 0; t1 < ball.subsets.size(); ++t1)
    for (std::size_t t2 = 0; t2 < ball.subsets.size(); ++t2)
      if (proper_subset(ball.subsets[t1], ball.subsets[t2]))
        inclusions.push_back({t1, t2});

  for (std::size_t i = 0; i < n; ++i)
    for (auto [t1, t2] : inclusions)
      add_edge(ball.coset_vertex[t1][ball.coset_root[t1][i]],
               ball.coset_vertex[t2][ball.coset_root[t2][i]], 0);

  for (std::size_t i = 0; i < n; ++i)
    for (auto [t1, t2] : inclusions)
      for (std::size_t t3 = 0; t3 < ball.subsets.size(); ++t3) {
        if (!proper_subset(ball.subsets[t2], ball.subsets[t3])) continue;
        add_triangle({ball.coset_vertex[t1][ball.coset_root[t1][i]],
                      ball.coset_vertex[t2][ball.coset_root[t2][i]],
                      ball.coset_vertex[t3][ball.coset_root[t3][i]]});
      }

  ball.cone_vertex.assign(n, ComplexBall::npos);
  ball.adjacency.assign(ball.vertices.size(), {});
  for (std::size_t e = 0; e < ball.edges.size(); ++e) {
    ball.adjacency[ball.edges[e].first].push_back(ball.edges[e].second);
    ball.adjacency[ball.edges[e].second].push_back(ball.edges[e].first);
  }
  return ball;
}

ComplexBall cone_off(ComplexBall ball) {
  if (!ball.abort_reason.empty()) return ball;
  const std::size_t n = ball.elements.size();
  const std::size_t rank = ball.graph.rank();

  std::set<std::pair<std::size_t, std::size_t>> seen_edges(ball.edges.begin(),
                                                           ball.edges.end());
  std::set<std::array<std::size_t, 3>> seen_triangles(ball.triangles.begin(),
                                                      ball.triangles.end());

  ball.cone_vertex.assign(n, ComplexBall::npos);
  for (std::size_t i = 0; i < n; ++i) {
    ball.cone_vertex[i] = ball.vertices.size();
    ball.vertices.push_back({true, i, 0});
  }

  auto add_edge = [&](std::size_t a, std::size_t b, int kind) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    if (!seen_edges.insert({a, b}).second) return;
    ball.edges.push_back({a, b});
    ball.edge_kind.push_back(kind);
  };
  auto add_triangle = [&](std::array<std::size_t, 3> tri) {
    std::sort(tri.begin(), tri.end());
    if (tri[0] == tri[1] || tri[1] == tri[2]) return;
    if (seen_triangles.insert(tri).second) ball.triangles.push_back(tri);
  };

  std::vector<std::pair<std::size_t, std::size_t>> inclusions;
  for (std::size_t t1 = 0; t1 < ball.subsets.size(); ++t1)
    for (std::size_t t2 = 0; t2 < ball.subsets.size(); ++t2)
      if (proper_subset(ball.subsets[t1], ball.subsets[t2]))
        inclusions.push_back({t1, t2});

  // positive monoid ball of radius s, walked through the transition table
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> reached{i};
    std::vector<std::size_t> frontier{i};
    for (std::size_t step = 0; step < ball.monoid_radius; ++step) {
      std::vector<std::size_t> next;
      for (std::size_t cur : frontier)
        for (std::size_t g = 0; g < rank; ++g) {
          const std::size_t j =
              ball.transitions[cur][ComplexBall::slot({static_cast<int>(g), +1})];
          if (j == ComplexBall::npos) continue;
          if (reached.insert(j).second) next.push_back(j);
        }
      frontier = std::move(next);
    }
    for (std::size_t j : reached) {
      for (std::size_t t = 0; t < ball.subsets.size(); ++t)
        add_edge(ball.cone_vertex[i],
                 ball.coset_vertex[t][ball.coset_root[t][j]], 1);
      if (i < ball.core_count)
        for (auto [t1, t2] : inclusions)
          add_triangle({ball.cone_vertex[i],
                        ball.coset_vertex[t1][ball.coset_root[t1][j]],
                        ball.coset_vertex[t2][ball.coset_root[t2][j]]});
    }
  }

  ball.adjacency.assign(ball.vertices.size(), {});
  for (std::size_t e = 0; e < ball.edges.size(); ++e) {
    ball.adjacency[ball.edges[e].first].push_back(ball.edges[e].second);
    ball.adjacency[ball.edges[e].second].push_back(ball.edges[e].first);
  }
  return ball;
}

SkeletonDistance skeleton_distance(const ComplexBall& ball, std::size_t from,
                                   std::size_t to) {
  if (from >= ball.vertices.size() || to >= ball.vertices.size())
    throw std::invalid_argument("vertex index out of range");
  SkeletonDistance out;
  if (from == to) {
    out.status = Status::Holds;
    out.distance = 0;
    return out;
  }
  std::vector<std::size_t> dist(ball.vertices.size(), ComplexBall::npos);
  std::deque<std::size_t> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (std::size_t w : ball.adjacency[v])
      if (dist[w] == ComplexBall::npos) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  if (dist[to] == ComplexBall::npos) {
    out.status = Status::Inconclusive;
    out.note = "disconnected within the constructed ball";
    return out;
  }
  out.status = Status::Holds;
  out.distance = dist[to];
  out.note = "upper bound at element radius " +
             std::to_string(ball.element_radius) + ", monoid radius " +
             std::to_string(ball.monoid_radius);
  return out;
}

QiReport qi_check(const ComplexBall& ball, std::size_t factor_bound,
                  std::size_t max_distance, std::uint64_t budget) {
  QiReport report;
  report.factor_bound = factor_bound;
  report.max_distance = max_distance;
  if (!ball.abort_reason.empty() || ball.cone_vertex.empty() ||
      ball.cone_vertex[0] == ComplexBall::npos) {
    report.verdict = BoundedVerdict::inconclusive(
        ball.abort_reason.empty() ? "ball has no cone vertices"
                                  : ball.abort_reason);
    return report;
  }

  // The truncated ball only contains cone fans over monoid elements of
  // X-length <= s, so the compatible Cayley metric is the factor-bounded
  // one; exact free or spherical routes would count factorizations whose
  // factors the ball cannot see. A bounded-route twin engine keeps every
  // distance at the same truncation.
  GroupOptions opts;
  opts.force_bounded = true;
  GroupEngine bounded(ball.graph, opts);

  std::map<std::string, MDistanceReport> memo;
  auto bounded_distance = [&](const Word& z) -> const MDistanceReport& {
    auto it = memo.find(z.code());
    if (it != memo.end()) return it->second;
    MDistanceReport d = m_distance(bounded, Word{}, z, factor_bound, budget, 0,
                                   max_distance);
    auto [pos, _] = memo.emplace(z.code(), std::move(d));
    memo.emplace(z.inverse().code(), pos->second);
    return pos->second;
  };

  std::vector<std::size_t> dist;  // BFS distances from the current source
  const auto bfs_from = [&](std::size_t src) {
    dist.assign(ball.vertices.size(), ComplexBall::npos);
    std::deque<std::size_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : ball.adjacency[v])
        if (dist[w] == ComplexBall::npos) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
  };

  const auto& names = ball.graph.generators();
  for (std::size_t i = 0; i < ball.core_count; ++i) {
    bfs_from(ball.cone_vertex[i]);
    for (std::size_t j = i; j < ball.core_count; ++j) {
      ++report.pairs_total;
      if (i == j) {
        ++report.pairs_checked;
        continue;
      }
      const Word z = free_reduce(
          concat(ball.elements[i].inverse(), ball.elements[j]));
      if (z.size() > factor_bound * max_distance) {
        ++report.pairs_excluded;  // k factors of length <= B spell <= kB letters
        continue;
      }
      const MDistanceReport& d = bounded_distance(z);
      if (d.status != Status::Holds) {
        if (d.refuted_below > max_distance)
          ++report.pairs_excluded;
        else
          ++report.pairs_skipped;
        continue;
      }
      const std::size_t d_cay = *d.distance;
      if (d_cay > max_distance) {
        ++report.pairs_excluded;
        continue;
      }
      const std::size_t d_c = dist[ball.cone_vertex[j]];
      ++report.pairs_checked;
      const QiPair entry{i, j, d_cay, d_c};
      if (d_c == ComplexBall::npos || d_c > 2 * d_cay) {
        report.violations.push_back(entry);
        continue;
      }
      if (d_c > 0) {
        if (!report.max_ratio ||
            entry.d_cay * report.max_ratio->d_c >
                report.max_ratio->d_cay * entry.d_c)
          report.max_ratio = entry;
      }
    }
  }

  if (!report.violations.empty()) {
    const QiPair& v = report.violations.front();
    BoundedVerdict out = BoundedVerdict::counterexample(
        ball.elements[v.x], false,
        "skeleton distance " + std::to_string(v.d_c) +
            " exceeds twice the bounded Cayley distance " +
            std::to_string(v.d_cay) + " for the pair (" +
            describe(ball.elements[v.x], names) + ", " +
            describe(ball.elements[v.y], names) + ")");
    out.witness_aux = ball.elements[v.y];
    report.verdict = out;
  } else if (report.pairs_checked == 0) {
    report.verdict = BoundedVerdict::inconclusive("no pair was decidable");
  } else {
    report.verdict = BoundedVerdict::holds_up_to(
        ball.table_radius,
        "skeleton distance within twice the bounded Cayley distance on " +
            std::to_string(report.pairs_checked) + " pairs");
  }
  return report;
}

std::string to_dot(const ComplexBall& ball) {
  const auto& names = ball.graph.generators();
  std::string out = "graph complex_ball {\n  node [fontsize=10];\n";
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    const auto& vx = ball.vertices[v];
    out += "  v" + std::to_string(v) + " [label=\"";
    if (vx.cone) {
      out += "v[" + describe(ball.elements[vx.element], names) + "]";
      out += "\" shape=diamond";
    } else {
      out += describe(ball.elements[vx.element], names) + ".A{";
      const auto& gens = ball.subsets[vx.subset].gens();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) out += ",";
        out += names[gens[k]];
      }
      out += "}\" shape=ellipse";
    }
    out += "];\n";
  }
  for (std::size_t e = 0; e < ball.edges.size(); ++e) {
    out += "  v" + std::to_string(ball.edges[e].first) + " -- v" +
           std::to_string(ball.edges[e].second);
    if (ball.edge_kind[e] == 1) out += " [style=dashed]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace artin
