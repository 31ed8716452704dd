#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "artin/cayley.hpp"
#include "artin/criteria.hpp"
#include "artin/deligne.hpp"
#include "artin/reports.hpp"

using namespace artin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNotCovered = 2;
constexpr int kExitCounterexample = 3;
constexpr int kExitInconclusive = 4;

int exit_for(Status s) {
  switch (s) {
    case Status::Holds:
      return kExitOk;
    case Status::Counterexample:
      return kExitCounterexample;
    case Status::Inconclusive:
      return kExitInconclusive;
  }
  return kExitInconclusive;
}

struct Output {
  std::string format = "json";  // json | dot | text
  std::string path;             // empty: stdout

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream out(path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  }
  void emit_json(const reports::json& j) const { emit(j.dump(2)); }

  /// text: one "key: value" line per top-level field, compact containers;
  /// the graph echo is dropped since the caller supplied it
  void emit_report(const reports::json& j) const {
    if (format != "text") {
      emit_json(j);
      return;
    }
    std::ostringstream ss;
    for (const auto& [key, value] : j.items()) {
      if (key == "schema" || key == "graph") continue;
      ss << key << ": ";
      if (value.is_string())
        ss << value.get<std::string>();
      else
        ss << value.dump();
      ss << '\n';
    }
    emit(ss.str());
  }
};

/// --graph accepts a file path or an inline description like "a b; a b 3;".
DefiningGraph load_graph(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return DefiningGraph::parse(buf.str());
  }
  return DefiningGraph::parse(arg);
}

/// --bounds L=5,B=3,budget=200000
Bounds parse_bounds(const std::string& arg) {
  Bounds b;
  std::stringstream in(arg);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bounds item needs key=value: " + item);
    const std::string key = item.substr(0, eq);
    const std::uint64_t value = std::stoull(item.substr(eq + 1));
    if (key == "L")
      b.L = value;
    else if (key == "B")
      b.B = value;
    else if (key == "K")
      b.K = value;
    else if (key == "b")
      b.b = value;
    else if (key == "r")
      b.r = value;
    else if (key == "s")
      b.s = value;
    else if (key == "budget")
      b.budget = value;
    else
      throw std::invalid_argument("unknown bounds key: " + key);
  }
  return b;
}

GenSet parse_subset(const std::string& arg, const DefiningGraph& graph) {
  std::vector<int> gens;
  std::stringstream in(arg);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    const int idx = graph.generator_index(name);
    if (idx < 0) throw std::invalid_argument("unknown generator: " + name);
    gens.push_back(idx);
  }
  return GenSet(gens);
}

/// The covered sequence for the graph's theorem case, or nullopt.
std::optional<BlockingSequence> covered_sequence(const DefiningGraph& graph,
                                                 const TheoremCase& c) {
  switch (c.kind) {
    case TheoremCaseKind::InfiniteLabelPair: {
      const int i = c.witness[0], j = c.witness[1];
      return BlockingSequence::from_period(
          {Word(std::vector<Letter>{{i, +1}, {j, +1}}),
           Word(std::vector<Letter>{{i, -1}, {j, -1}})});
    }
    case TheoremCaseKind::LargeTriangle:
      return BlockingSequence::large_type(graph, c.witness[0], c.witness[1],
                                          c.witness[2]);
    case TheoremCaseKind::ThreeFreeTriangle:
      return BlockingSequence::three_free(graph, c.witness[0], c.witness[1],
                                          c.witness[2]);
    case TheoremCaseKind::NotCovered:
      return std::nullopt;
  }
  return std::nullopt;
}

/// "LargeTriangle (a,b,c)": the case name plus its witness tuple.
std::string classify_line(const TheoremCase& c,
                          const std::vector<std::string>& names) {
  std::string line = to_string(c.kind);
  if (!c.witness.empty()) {
    line += " (";
    for (std::size_t i = 0; i < c.witness.size(); ++i) {
      if (i) line += ',';
      line += names[c.witness[i]];
    }
    line += ')';
  }
  return line;
}

int run(int argc, char** argv) {
  CLI::App app{"exact desk-scale computation in Artin groups and monoids"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::string bounds_arg;
  Output out;
  app.add_option("--graph", graph_arg,
                 "defining graph: file path or inline \"a b c; a b 3;\"");
  app.add_option("--bounds", bounds_arg, "bounds, e.g. L=5,B=3,budget=200000");
  app.add_option("--format", out.format, "json, dot or text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--out", out.path, "write the report to a file");

  auto* classify = app.add_subcommand("classify", "theorem case for the graph");

  auto* verify = app.add_subcommand("verify", "run a bounded verification");
  verify->require_subcommand(1);
  auto* v_crit1 = verify->add_subcommand(
      "criterion1", "preserved signed suffixes at bound L");
  std::string guard_arg, letter_arg;
  std::size_t n_arg = 3;
  auto* v_crit2 = verify->add_subcommand(
      "criterion2", "blocking sequence; or one pair with --guard/--letter");
  v_crit2->add_option("--guard", guard_arg, "guard word u");
  v_crit2->add_option("--letter", letter_arg, "appended letter x");
  v_crit2->add_option("--n", n_arg, "blocks to verify");
  auto* v_wn = verify->add_subcommand("wn", "m-distance of w_n is n");
  v_wn->add_option("--n", n_arg, "block count n");
  std::size_t radius_arg = 4;
  auto* v_diam = verify->add_subcommand("diameter2",
                                        "spherical monoid-distance diameter");
  v_diam->add_option("--radius", radius_arg, "generator-ball radius");
  std::string subset_arg;
  auto* v_embed = verify->add_subcommand(
      "embedding", "parabolic m-distances match ambient ones");
  v_embed->add_option("--subset", subset_arg, "comma-separated generators")
      ->required();
  v_embed->add_option("--radius", radius_arg, "parabolic ball radius");
  std::size_t maxd_arg = 3;
  auto* v_qi = verify->add_subcommand(
      "qi", "skeleton distance within twice the bounded Cayley distance");
  v_qi->add_option("--max-distance", maxd_arg, "sample pairs up to this d");

  std::string source_arg = "e", target_arg = "e";
  int first_sign_arg = 0;
  std::size_t max_factors_arg = 0;
  auto* distance = app.add_subcommand("distance", "m-distance between words");
  distance->add_option("source", source_arg, "source word")->required();
  distance->add_option("target", target_arg, "target word")->required();
  distance->add_option("--first-sign", first_sign_arg,
                       "+1 or -1 to pin the first factor's sign");
  distance->add_option("--max-factors", max_factors_arg,
                       "cap the factor count (0: from the block bound)");

  auto* poset = app.add_subcommand("poset", "coset complex ball");

  auto* sequence =
      app.add_subcommand("sequence", "the covered blocking sequence's words");
  sequence->add_option("--n", n_arg, "blocks to spell");

  CLI11_PARSE(app, argc, argv);

  if (graph_arg.empty()) {
    std::cerr << "--graph is required\n";
    return kExitParse;
  }
  const DefiningGraph graph = load_graph(graph_arg);
  const auto& names = graph.generators();
  Bounds bounds = bounds_arg.empty() ? Bounds{} : parse_bounds(bounds_arg);
  GroupOptions opts;
  opts.bounds = bounds;
  const GroupEngine engine(graph, opts);

  auto finish = [&](reports::json j, Status status) {
    j["bounds"] = reports::bounds_json(bounds);
    out.emit_report(j);
    return exit_for(status);
  };

  if (*classify) {
    const TheoremCase c = classify_theorem_case(graph);
    const int code =
        c.kind == TheoremCaseKind::NotCovered ? kExitNotCovered : kExitOk;
    if (out.format == "text") {
      out.emit(classify_line(c, names));
      return code;
    }
    reports::json j = reports::classify_json(graph, c);
    j["bounds"] = reports::bounds_json(bounds);
    out.emit_report(j);
    return code;
  }

  if (*v_crit1) {
    const BoundedVerdict v =
        preserved_signed_suffixes_check(engine, bounds.L, bounds.budget);
    return finish(reports::criterion1_json(v, bounds.L, names), v.status);
  }

  if (*v_crit2) {
    if (!guard_arg.empty() || !letter_arg.empty()) {
      const Word u = parse_word(guard_arg, names);
      const Word x = parse_word(letter_arg, names);
      if (x.size() != 1) {
        std::cerr << "--letter must be a single letter\n";
        return kExitParse;
      }
      const BlockingPairQuery q{u, x.letter(0), bounds.L};
      const BoundedVerdict v = is_blocking_pair(engine, q, bounds.budget);
      return finish(reports::blocking_pair_json(q, v, names), v.status);
    }
    const TheoremCase c = classify_theorem_case(graph);
    const auto seq = covered_sequence(graph, c);
    if (!seq) {
      out.emit_report(reports::classify_json(graph, c));
      return kExitNotCovered;
    }
    const SequenceCheckReport rep =
        verify_blocking_sequence(engine, *seq, n_arg, bounds.L, bounds.budget);
    return finish(reports::sequence_json(rep, names), rep.verdict.status);
  }

  if (*v_wn) {
    const TheoremCase c = classify_theorem_case(graph);
    const auto seq = covered_sequence(graph, c);
    if (!seq) {
      out.emit_report(reports::classify_json(graph, c));
      return kExitNotCovered;
    }
    const WnGeodesicReport rep =
        verify_wn_geodesic(engine, *seq, n_arg, bounds.B, bounds.budget);
    return finish(reports::wn_json(rep, names), rep.verdict.status);
  }

  if (*v_diam) {
    const Diameter2Report rep = spherical_diameter2_check(engine, radius_arg);
    return finish(reports::diameter2_json(rep, names), rep.verdict.status);
  }

  if (*v_embed) {
    const GenSet subset = parse_subset(subset_arg, graph);
    const EmbeddingReport rep = isometric_embedding_check(
        engine, subset, radius_arg, bounds.B, bounds.budget);
    return finish(reports::embedding_json(rep, names), rep.verdict.status);
  }

  if (*v_qi) {
    const ComplexBall ball =
        cone_off(coset_poset_ball(engine, bounds.r, bounds.s));
    // the cones only fan over monoid elements of X-length <= s, so the
    // compatible Cayley metric caps factors at s
    const QiReport rep = qi_check(ball, bounds.s, maxd_arg, bounds.budget);
    return finish(reports::qi_json(rep, ball), rep.verdict.status);
  }

  if (*distance) {
    const Word source = parse_word(source_arg, names);
    const Word target = parse_word(target_arg, names);
    const MDistanceReport rep =
        m_distance(engine, source, target, bounds.B, bounds.budget,
                   first_sign_arg, max_factors_arg);
    return finish(reports::distance_json(rep, names), rep.status);
  }

  if (*poset) {
    const ComplexBall ball =
        cone_off(coset_poset_ball(engine, bounds.r, bounds.s));
    if (out.format == "dot") {
      out.emit(to_dot(ball));
      return ball.abort_reason.empty() ? kExitOk : kExitInconclusive;
    }
    reports::json j = reports::poset_json(ball);
    j["bounds"] = reports::bounds_json(bounds);
    out.emit_report(j);
    return ball.abort_reason.empty() ? kExitOk : kExitInconclusive;
  }

  if (*sequence) {
    const TheoremCase c = classify_theorem_case(graph);
    const auto seq = covered_sequence(graph, c);
    if (!seq) {
      out.emit_report(reports::classify_json(graph, c));
      return kExitNotCovered;
    }
    reports::json period = reports::json::array();
    for (const Word& block : seq->period())
      period.push_back(format_word(block, names));
    reports::json j{{"schema", "artin/sequence/1"},
                    {"case", to_string(c.kind)},
                    {"period", period},
                    {"n", n_arg},
                    {"wn", format_word(seq->w(n_arg), names)}};
    j["bounds"] = reports::bounds_json(bounds);
    out.emit_report(j);
    return kExitOk;
  }

  return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconclusive;
  }
}
