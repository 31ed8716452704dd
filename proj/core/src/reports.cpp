#include "artin/reports.hpp"

namespace artin::reports {

namespace {

json opt_word(const std::optional<Word>& w,
              const std::vector<std::string>& names) {
  if (!w) return nullptr;
  return format_word(*w, names);
}

json factorization_json(const MFactorization& f,
                        const std::vector<std::string>& names) {
  json factors = json::array();
  int sign = f.first_sign;
  for (const PositiveWord& p : f.factors) {
    factors.push_back({{"sign", sign > 0 ? "+" : "-"},
                       {"word", format_word(p.as_word(), names)}});
    sign = -sign;
  }
  return {{"first_sign", f.first_sign}, {"factors", factors}};
}

json subset_json(const GenSet& subset, const std::vector<std::string>& names) {
  json out = json::array();
  for (int g : subset.gens()) out.push_back(names[g]);
  return out;
}

}  // namespace

json word_json(const Word& w, const std::vector<std::string>& names) {
  return format_word(w, names);
}

json verdict_json(const BoundedVerdict& v,
                  const std::vector<std::string>& names) {
  json out{{"status", to_string(v.status)}, {"exact", v.exact}};
  if (v.bound) out["bound"] = *v.bound;
  out["witness"] = opt_word(v.witness, names);
  out["witness_aux"] = opt_word(v.witness_aux, names);
  out["note"] = v.note;
  return out;
}

json bounds_json(const Bounds& b) {
  return {{"L", b.L}, {"B", b.B},         {"K", b.K},
          {"b", b.b}, {"r", b.r},         {"s", b.s},
          {"budget", b.budget}};
}

json graph_json(const DefiningGraph& graph) {
  return json::parse(graph.to_json());
}

json classify_json(const DefiningGraph& graph, const TheoremCase& c) {
  json witness = json::array();
  for (int g : c.witness) witness.push_back(graph.generators()[g]);
  return {{"schema", "artin/classify/1"},
          {"graph", graph_json(graph)},
          {"case", to_string(c.kind)},
          {"witness", witness}};
}

json distance_json(const MDistanceReport& r,
                   const std::vector<std::string>& names) {
  json out{{"schema", "artin/distance/1"},
           {"source", format_word(r.source, names)},
           {"target", format_word(r.target, names)},
           {"difference", format_word(r.difference, names)},
           {"factor_bound", r.factor_bound},
           {"first_sign", r.first_sign},
           {"status", to_string(r.status)},
           {"exact", r.exact}};
  out["distance"] = r.distance ? json(*r.distance) : json(nullptr);
  out["upper_bound"] = r.upper_bound ? json(*r.upper_bound) : json(nullptr);
  out["witness"] = r.witness ? factorization_json(*r.witness, names) : json(nullptr);
  out["refuted_below"] = r.refuted_below;
  out["note"] = r.note;
  return out;
}

json diameter2_json(const Diameter2Report& r,
                    const std::vector<std::string>& names) {
  json entries = json::array();
  for (const Diameter2Entry& e : r.entries) {
    json row{{"element", format_word(e.element, names)},
             {"geodesic_length", e.geodesic_length},
             {"distance", e.distance}};
    row["path"] = e.path ? factorization_json(*e.path, names) : json(nullptr);
    entries.push_back(std::move(row));
  }
  return {{"schema", "artin/diameter2/1"},
          {"radius", r.radius},
          {"verdict", verdict_json(r.verdict, names)},
          {"elements", r.entries.size()},
          {"entries", entries}};
}

json embedding_json(const EmbeddingReport& r,
                    const std::vector<std::string>& names) {
  return {{"schema", "artin/embedding/1"},
          {"subset", subset_json(r.subset, names)},
          {"radius", r.radius},
          {"factor_bound", r.factor_bound},
          {"pairs_checked", r.pairs_checked},
          {"skipped", r.skipped},
          {"verdict", verdict_json(r.verdict, names)}};
}

json criterion1_json(const BoundedVerdict& v, std::size_t L,
                     const std::vector<std::string>& names) {
  return {{"schema", "artin/preserved-suffixes/1"},
          {"L", L},
          {"verdict", verdict_json(v, names)}};
}

json blocking_pair_json(const BlockingPairQuery& q, const BoundedVerdict& v,
                        const std::vector<std::string>& names) {
  Word xw;
  xw.push_back(q.x);
  return {{"schema", "artin/blocking-pair/1"},
          {"guard", format_word(q.u, names)},
          {"letter", format_word(xw, names)},
          {"L", q.L},
          {"verdict", verdict_json(v, names)}};
}

json sequence_json(const SequenceCheckReport& r,
                   const std::vector<std::string>& names) {
  json letters = json::array();
  for (const SequenceLetterRecord& rec : r.letters) {
    Word xw;
    xw.push_back(rec.x);
    json row{{"block", rec.block},
             {"position", rec.position},
             {"letter", format_word(xw, names)},
             {"positive_base", rec.positive_base}};
    row["guard"] = opt_word(rec.guard, names);
    row["guards_tried"] = rec.guards_tried;
    row["status"] = to_string(rec.status);
    letters.push_back(std::move(row));
  }
  return {{"schema", "artin/blocking-sequence/1"},
          {"blocks", r.blocks_checked},
          {"L", r.L},
          {"verdict", verdict_json(r.verdict, names)},
          {"letters", letters}};
}

json obstruction_json(const SphericalObstruction& r,
                      const std::vector<std::string>& names) {
  return {{"schema", "artin/spherical-obstruction/1"},
          {"witness", format_word(r.witness, names)},
          {"appended", format_word(r.appended, names)},
          {"shorter", format_word(r.shorter, names)},
          {"verdict", verdict_json(r.verdict, names)}};
}

json wn_json(const WnGeodesicReport& r, const std::vector<std::string>& names) {
  return {{"schema", "artin/wn-geodesic/1"},
          {"n", r.n},
          {"wn", format_word(r.wn, names)},
          {"distance", distance_json(r.distance, names)},
          {"verdict", verdict_json(r.verdict, names)}};
}

json qi_json(const QiReport& r, const ComplexBall& ball) {
  const auto& names = ball.graph.generators();
  json violations = json::array();
  for (const QiPair& p : r.violations)
    violations.push_back({{"x", format_word(ball.elements[p.x], names)},
                          {"y", format_word(ball.elements[p.y], names)},
                          {"d_cay", p.d_cay},
                          {"d_complex", p.d_c}});
  json ratio = nullptr;
  if (r.max_ratio)
    ratio = {{"x", format_word(ball.elements[r.max_ratio->x], names)},
             {"y", format_word(ball.elements[r.max_ratio->y], names)},
             {"d_cay", r.max_ratio->d_cay},
             {"d_complex", r.max_ratio->d_c}};
  return {{"schema", "artin/qi/1"},
          {"element_radius", ball.element_radius},
          {"monoid_radius", ball.monoid_radius},
          {"factor_bound", r.factor_bound},
          {"max_distance", r.max_distance},
          {"pairs_total", r.pairs_total},
          {"pairs_checked", r.pairs_checked},
          {"pairs_excluded", r.pairs_excluded},
          {"pairs_skipped", r.pairs_skipped},
          {"violations", violations},
          {"max_ratio_pair", ratio},
          {"verdict", verdict_json(r.verdict, names)}};
}

json poset_json(const ComplexBall& ball) {
  const auto& names = ball.graph.generators();
  json subsets = json::array();
  for (const GenSet& t : ball.subsets) subsets.push_back(subset_json(t, names));
  json vertices = json::array();
  for (const auto& v : ball.vertices) {
    if (v.cone)
      vertices.push_back(
          {{"kind", "cone"},
           {"element", format_word(ball.elements[v.element], names)}});
    else
      vertices.push_back(
          {{"kind", "coset"},
           {"rep", format_word(ball.elements[v.element], names)},
           {"subset", v.subset}});
  }
  json edges = json::array();
  for (std::size_t e = 0; e < ball.edges.size(); ++e)
    edges.push_back({{"a", ball.edges[e].first},
                     {"b", ball.edges[e].second},
                     {"kind", ball.edge_kind[e] == 1 ? "cone" : "poset"}});
  return {{"schema", "artin/poset/1"},
          {"graph", graph_json(ball.graph)},
          {"element_radius", ball.element_radius},
          {"monoid_radius", ball.monoid_radius},
          {"table_radius", ball.table_radius},
          {"elements", ball.elements.size()},
          {"core_elements", ball.core_count},
          {"complete", ball.complete},
          {"abort_reason", ball.abort_reason},
          {"subsets", subsets},
          {"vertices", vertices},
          {"edges", edges},
          {"triangles", ball.triangles.size()}};
}

}  // namespace artin::reports
