#include "artin/presentation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace artin {

Label Label::finite(int m) {
  if (m < 2) throw std::invalid_argument("finite labels must be >= 2");
  Label l;
  l.finite_ = true;
  l.m_ = m;
  return l;
}

int Label::value() const {
  if (!finite_) throw std::logic_error("value() on infinite label");
  return m_;
}

GenSet::GenSet(std::vector<int> gens) : gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  if (!gens_.empty() && gens_.front() < 0)
    throw std::invalid_argument("negative generator index");
}

GenSet GenSet::full(std::size_t rank) {
  std::vector<int> g(rank);
  for (std::size_t i = 0; i < rank; ++i) g[i] = static_cast<int>(i);
  return GenSet(std::move(g));
}

bool GenSet::contains(int g) const {
  return std::binary_search(gens_.begin(), gens_.end(), g);
}

DefiningGraph::DefiningGraph(std::vector<std::string> generators)
    : names_(std::move(generators)) {
  if (names_.empty()) throw std::invalid_argument("graph needs at least one generator");
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty generator name");
    if (n.find('\'') != std::string::npos || n.find(';') != std::string::npos)
      throw std::invalid_argument("generator name contains reserved character: " + n);
  }
  auto sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate generator name");
}

int DefiningGraph::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown generator name: " + name);
}

void DefiningGraph::set_label(int i, int j, Label m) {
  if (i == j) throw std::invalid_argument("self-labels are not allowed");
  if (i < 0 || j < 0 || i >= static_cast<int>(rank()) || j >= static_cast<int>(rank()))
    throw std::out_of_range("generator index out of range");
  auto key = std::minmax(i, j);
  if (!m.is_finite()) {
    finite_labels_.erase({key.first, key.second});
    return;
  }
  auto it = finite_labels_.find({key.first, key.second});
  if (it != finite_labels_.end() && it->second != m.value())
    throw std::invalid_argument("conflicting labels for one generator pair");
  finite_labels_[{key.first, key.second}] = m.value();
}

Label DefiningGraph::label(int i, int j) const {
  if (i == j) throw std::invalid_argument("label(i, i) is undefined");
  auto key = std::minmax(i, j);
  auto it = finite_labels_.find({key.first, key.second});
  if (it == finite_labels_.end()) return Label::infinity();
  return Label::finite(it->second);
}

std::optional<int> DefiningGraph::max_finite_label() const {
  std::optional<int> best;
  for (const auto& [k, m] : finite_labels_)
    if (!best || m > *best) best = m;
  return best;
}

bool DefiningGraph::all_finite_labels_even() const {
  for (const auto& [k, m] : finite_labels_)
    if (m % 2 != 0) return false;
  return true;
}

DefiningGraph DefiningGraph::parse(const std::string& text) {
  std::vector<std::string> chunks;
  std::string cur;
  for (char c : text) {
    if (c == ';') {
      chunks.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  chunks.push_back(cur);
  if (chunks.size() < 1) throw std::invalid_argument("empty graph text");

  auto tokens = [](const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
  };

  auto names = tokens(chunks[0]);
  if (names.empty()) throw std::invalid_argument("no generator names before ';'");
  DefiningGraph g(names);

  for (std::size_t i = 1; i < chunks.size(); ++i) {
    auto toks = tokens(chunks[i]);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw std::invalid_argument("label entry needs 'g h m': " + chunks[i]);
    int a = g.generator_index(toks[0]);
    int b = g.generator_index(toks[1]);
    int m = 0;
    try {
      std::size_t pos = 0;
      m = std::stoi(toks[2], &pos);
      if (pos != toks[2].size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("label is not an integer: " + toks[2]);
    }
    if (m < 2) throw std::invalid_argument("labels must be >= 2");
    g.set_label(a, b, Label::finite(m));
  }
  return g;
}

std::string DefiningGraph::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ' ';
    out += names_[i];
  }
  out += ';';
  for (const auto& [key, m] : finite_labels_) {
    out += ' ' + names_[static_cast<std::size_t>(key.first)] + ' ' +
           names_[static_cast<std::size_t>(key.second)] + ' ' + std::to_string(m) + ';';
  }
  return out;
}

std::string DefiningGraph::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "artin/graph-v1";
  j["generators"] = names_;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [key, m] : finite_labels_) {
    nlohmann::ordered_json e;
    e["u"] = names_[static_cast<std::size_t>(key.first)];
    e["v"] = names_[static_cast<std::size_t>(key.second)];
    e["m"] = m;
    edges.push_back(e);
  }
  j["edges"] = edges;
  return j.dump(2);
}

DefiningGraph DefiningGraph::from_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  DefiningGraph g(j.at("generators").get<std::vector<std::string>>());
  for (const auto& e : j.at("edges")) {
    int a = g.generator_index(e.at("u").get<std::string>());
    int b = g.generator_index(e.at("v").get<std::string>());
    g.set_label(a, b, Label::finite(e.at("m").get<int>()));
  }
  return g;
}

namespace {

// Diagram component classification. Edges are pairs with label != 2
// (including infinite labels). Returns true when the component names a
// finite Coxeter group.
bool component_is_finite(const DefiningGraph& g, const std::vector<int>& comp) {
  const std::size_t k = comp.size();
  if (k == 1) return true;

  struct Edge {
    int a, b, m;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Label l = g.label(comp[i], comp[j]);
      if (!l.is_finite()) return false;
      if (l.value() >= 3) edges.push_back({static_cast<int>(i), static_cast<int>(j), l.value()});
    }

  if (k == 2) return true;           // I2(m), m finite
  if (edges.size() != k - 1) return false;  // cycle

  std::vector<int> deg(k, 0);
  std::vector<std::vector<std::pair<int, int>>> adj(k);  // (neighbor, label)
  for (const auto& e : edges) {
    deg[static_cast<std::size_t>(e.a)]++;
    deg[static_cast<std::size_t>(e.b)]++;
    adj[static_cast<std::size_t>(e.a)].push_back({e.b, e.m});
    adj[static_cast<std::size_t>(e.b)].push_back({e.a, e.m});
  }

  int branch = -1;
  for (std::size_t i = 0; i < k; ++i) {
    if (deg[i] >= 4) return false;
    if (deg[i] == 3) {
      if (branch >= 0) return false;
      branch = static_cast<int>(i);
    }
  }

  if (branch >= 0) {
    // D or E shapes: every label 3, branch arm lengths decide.
    for (const auto& e : edges)
      if (e.m != 3) return false;
    std::vector<int> arms;
    for (auto [nb, m] : adj[static_cast<std::size_t>(branch)]) {
      int len = 1, prev = branch, cur = nb;
      while (deg[static_cast<std::size_t>(cur)] == 2) {
        for (auto [nx, mm] : adj[static_cast<std::size_t>(cur)])
          if (nx != prev) {
            prev = cur;
            cur = nx;
            break;
          }
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return true;                     // D_n
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return true;     // E6, E7, E8
    return false;
  }

  // Path. Walk from one endpoint collecting labels in order.
  int start = -1;
  for (std::size_t i = 0; i < k; ++i)
    if (deg[i] == 1) {
      start = static_cast<int>(i);
      break;
    }
  std::vector<int> labels;
  int prev = -1, cur = start;
  while (labels.size() < k - 1) {
    for (auto [nb, m] : adj[static_cast<std::size_t>(cur)])
      if (nb != prev) {
        labels.push_back(m);
        prev = cur;
        cur = nb;
        break;
      }
  }

  std::size_t high = 0, high_pos = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] >= 4) {
      ++high;
      high_pos = i;
    }
  if (high == 0) return true;  // A_n
  if (high >= 2) return false;

  bool terminal = (high_pos == 0 || high_pos == labels.size() - 1);
  int m = labels[high_pos];
  if (m == 4) {
    if (terminal) return true;                       // B_n
    if (k == 4 && high_pos == 1) return true;        // F4
    return false;
  }
  if (m == 5) {
    if (terminal && (k == 3 || k == 4)) return true;  // H3, H4
    return false;
  }
  return false;
}

}  // namespace

bool is_spherical(const DefiningGraph& graph, const GenSet& subset) {
  for (int g : subset.gens())
    if (g >= static_cast<int>(graph.rank())) throw std::out_of_range("subset exceeds rank");
  if (subset.empty()) return true;

  const auto& gens = subset.gens();
  const std::size_t n = gens.size();
  // Union-find over diagram edges (label != 2).
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Label l = graph.label(gens[i], gens[j]);
      if (!l.is_finite() || l.value() != 2) parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::vector<int>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(gens[i]);
  for (const auto& [root, comp] : comps)
    if (!component_is_finite(graph, comp)) return false;
  return true;
}

std::vector<GenSet> spherical_subsets(const DefiningGraph& graph) {
  const std::size_t n = graph.rank();
  if (n > 20) throw std::invalid_argument("rank too large for subset enumeration");
  std::vector<GenSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> gens;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) gens.push_back(static_cast<int>(i));
    GenSet s(std::move(gens));
    if (is_spherical(graph, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const GenSet& a, const GenSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.gens() < b.gens();
  });
  return out;
}

TheoremCase classify_theorem_case(const DefiningGraph& graph) {
  const int n = static_cast<int>(graph.rank());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!graph.label(i, j).is_finite())
        return {TheoremCaseKind::InfiniteLabelPair, {i, j}};

  auto lab = [&](int i, int j) { return graph.label(i, j).value(); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (lab(i, j) >= 3 && lab(j, k) >= 3 && lab(i, k) >= 3)
          return {TheoremCaseKind::LargeTriangle, {i, j, k}};

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::array<int, 3> ms{lab(i, j), lab(j, k), lab(i, k)};
        bool has3 = std::count(ms.begin(), ms.end(), 3) > 0;
        auto twos = std::count(ms.begin(), ms.end(), 2);
        if (!has3 && twos <= 1)
          return {TheoremCaseKind::ThreeFreeTriangle, {i, j, k}};
      }

  return {TheoremCaseKind::NotCovered, {}};
}

std::optional<std::array<int, 3>> find_3free_triangle(const DefiningGraph& graph) {
  const int n = static_cast<int>(graph.rank());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Label l = graph.label(i, j);
      if (!l.is_finite()) throw std::invalid_argument("graph has an infinite label");
      if (l.value() == 3) throw std::invalid_argument("graph has a label equal to 3");
    }
  auto lab = [&](int i, int j) { return graph.label(i, j).value(); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::array<std::pair<int, int>, 3> pairs{{{i, j}, {j, k}, {i, k}}};
        int twos = 0;
        for (auto [a, b] : pairs)
          if (lab(a, b) == 2) ++twos;
        if (twos > 1) continue;
        if (twos == 0) return std::array<int, 3>{i, j, k};
        // Exactly one label-2 edge: orient so it joins the outer generators.
        for (auto [a, b] : pairs)
          if (lab(a, b) == 2) {
            int mid = i + j + k - a - b;
            return std::array<int, 3>{std::min(a, b), mid, std::max(a, b)};
          }
      }
  return std::nullopt;
}

std::string to_string(TheoremCaseKind kind) {
  switch (kind) {
    case TheoremCaseKind::InfiniteLabelPair: return "InfiniteLabelPair";
    case TheoremCaseKind::LargeTriangle: return "LargeTriangle";
    case TheoremCaseKind::ThreeFreeTriangle: return "ThreeFreeTriangle";
    case TheoremCaseKind::NotCovered: return "NotCovered";
  }
  return "unknown";
}

}  // namespace artin
