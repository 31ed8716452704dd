#include "artin/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace artin {

namespace {

// Fold certificates need a parabolic ball as large as the queried word;
// past this radius the rank-2 balls get expensive and the closure takes over.
constexpr std::size_t kCertificateRadius = 12;

struct BfsOutcome {
  int end = 1;  // 0 stopped, 1 exhausted, 2 budget
  Word stop_word;
  std::size_t min_len = 0;
  std::vector<Word> min_words;
  std::vector<std::string> top_codes;
  std::uint64_t expanded = 0;
};

// Length-nonincreasing rewrite BFS: rule replacements plus the free
// cancellations they expose. `start` must be freely reduced. The stop
// predicate is tested on every newly discovered word.
BfsOutcome rewrite_bfs(const RewriteRuleSet& rules, const Word& start,
                       std::uint64_t budget, bool always_collect,
                       const std::function<bool(const Word&)>& stop) {
  BfsOutcome out;
  out.min_len = start.size();
  std::unordered_set<std::string> visited{start.code()};
  if (stop && stop(start)) {
    out.end = 0;
    out.stop_word = start;
    return out;
  }
  std::deque<std::string> queue{start.code()};
  while (!queue.empty()) {
    if (out.expanded >= budget) {
      out.end = 2;
      break;
    }
    std::string s = std::move(queue.front());
    queue.pop_front();
    ++out.expanded;
    for (std::size_t pos = 0; pos < s.size() && out.end == 1; ++pos) {
      for (std::size_t idx : rules.bucket(s[pos])) {
        const auto& rule = rules.rules()[idx];
        const std::string& lhs = rule.lhs.code();
        if (pos + lhs.size() > s.size()) continue;
        if (s.compare(pos, lhs.size(), lhs) != 0) continue;
        std::string cand = s.substr(0, pos);
        cand += rule.rhs.code();
        cand.append(s, pos + lhs.size(), std::string::npos);
        Word next = free_reduce(Word::from_code(std::move(cand)));
        if (!visited.insert(next.code()).second) continue;
        if (next.size() < out.min_len) out.min_len = next.size();
        if (stop && stop(next)) {
          out.end = 0;
          out.stop_word = next;
          break;
        }
        queue.push_back(next.code());
      }
    }
    if (out.end == 0) break;
  }
  if (out.end == 1 || always_collect) {
    for (const auto& c : visited) {
      if (c.size() == out.min_len) out.min_words.push_back(Word::from_code(c));
      if (c.size() == start.size()) out.top_codes.push_back(c);
    }
    std::sort(out.min_words.begin(), out.min_words.end(),
              [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  }
  return out;
}

// Equality search widened by trivial-pair insertions, bounded by |z| + slack.
BoundedVerdict insertion_equal(const RewriteRuleSet& rules, std::size_t rank,
                               const Word& z, std::size_t slack,
                               std::uint64_t budget) {
  const std::size_t max_len = z.size() + slack;
  std::unordered_set<std::string> visited{z.code()};
  std::deque<std::string> queue{z.code()};
  std::uint64_t expanded = 0;
  while (!queue.empty()) {
    if (expanded >= budget)
      return BoundedVerdict::inconclusive(
          "expansion budget exhausted in the insertion-widened search");
    std::string s = std::move(queue.front());
    queue.pop_front();
    ++expanded;
    auto offer = [&](Word next) -> bool {
      if (next.size() > max_len) return false;
      if (!visited.insert(next.code()).second) return false;
      if (next.empty()) return true;
      queue.push_back(next.code());
      return false;
    };
    for (std::size_t pos = 0; pos < s.size(); ++pos)
      for (std::size_t idx : rules.bucket(s[pos])) {
        const auto& rule = rules.rules()[idx];
        const std::string& lhs = rule.lhs.code();
        if (pos + lhs.size() > s.size()) continue;
        if (s.compare(pos, lhs.size(), lhs) != 0) continue;
        std::string cand = s.substr(0, pos);
        cand += rule.rhs.code();
        cand.append(s, pos + lhs.size(), std::string::npos);
        if (offer(free_reduce(Word::from_code(std::move(cand)))))
          return BoundedVerdict::holds_exact(
              "insertion-widened rewriting reaches the empty word");
      }
    for (std::size_t pos = 0; pos <= s.size(); ++pos)
      for (int g = 0; g < static_cast<int>(rank); ++g)
        for (int sign : {+1, -1}) {
          Word pair(std::vector<Letter>{{g, sign}, {g, -sign}});
          std::string cand = s.substr(0, pos);
          cand += pair.code();
          cand.append(s, pos, std::string::npos);
          if (offer(free_reduce(Word::from_code(std::move(cand)))))
            return BoundedVerdict::holds_exact(
                "insertion-widened rewriting reaches the empty word");
        }
  }
  auto v = BoundedVerdict::counterexample(
      z, false, "empty word unreachable within the insertion slack");
  v.bound = slack;
  return v;
}

}  // namespace

std::size_t Bounds::effective_rule_bound(const DefiningGraph& graph) const {
  if (b != 0) return b;
  auto m = graph.max_finite_label();
  return m ? 2 * static_cast<std::size_t>(*m) : 4;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "holds";
    case Status::Counterexample:
      return "counterexample";
    default:
      return "inconclusive";
  }
}

BoundedVerdict BoundedVerdict::holds_exact(std::string note) {
  BoundedVerdict v;
  v.status = Status::Holds;
  v.exact = true;
  v.note = std::move(note);
  return v;
}

BoundedVerdict BoundedVerdict::holds_up_to(std::size_t bound,
                                           std::string note) {
  BoundedVerdict v;
  v.status = Status::Holds;
  v.bound = bound;
  v.note = std::move(note);
  return v;
}

BoundedVerdict BoundedVerdict::counterexample(Word witness, bool exact,
                                              std::string note) {
  BoundedVerdict v;
  v.status = Status::Counterexample;
  v.exact = exact;
  v.witness = std::move(witness);
  v.note = std::move(note);
  return v;
}

BoundedVerdict BoundedVerdict::inconclusive(std::string note) {
  BoundedVerdict v;
  v.note = std::move(note);
  return v;
}

const std::vector<std::size_t> RewriteRuleSet::empty_bucket_{};

RewriteRuleSet RewriteRuleSet::dihedral(const MonoidContext& ctx, int i, int j,
                                        std::size_t rule_bound) {
  RewriteRuleSet out;
  Label m = ctx.graph().label(i, j);
  if (!m.is_finite()) return out;  // free pair: only free cancellation
  std::shared_ptr<const SphericalData> data;
  if (m.value() >= 3) data = ctx.garside(GenSet({i, j}));

  std::vector<Letter> alphabet{{i, +1}, {i, -1}, {j, +1}, {j, -1}};
  std::sort(alphabet.begin(), alphabet.end(),
            [](const Letter& a, const Letter& b) {
              return letter_key(a) < letter_key(b);
            });

  // bucket key: (length, exact element token); DFS emits each length in
  // letter order, so bucket fronts are shortlex-least
  std::map<std::pair<std::size_t, std::string>, std::vector<Word>> buckets;
  std::function<void(const Word&)> walk = [&](const Word& w) {
    if (w.size() == rule_bound) return;
    for (const Letter& l : alphabet) {
      if (!w.empty()) {
        Letter last = w.letter(w.size() - 1);
        if (last.gen == l.gen && last.sign != l.sign) continue;
      }
      Word x = w;
      x.push_back(l);
      std::string tok;
      if (m.value() == 2) {
        int ei = 0, ej = 0;
        for (const Letter& y : x.letters()) (y.gen == i ? ei : ej) += y.sign;
        tok = std::to_string(ei) + ":" + std::to_string(ej);
      } else {
        tok = garside_nf(*data, x).token();
      }
      buckets[{x.size(), tok}].push_back(x);
      walk(x);
    }
  };
  walk(Word());

  for (const auto& [key, words] : buckets) {
    if (words.size() < 2) continue;
    const Word& canon = words.front();
    for (std::size_t k = 1; k < words.size(); ++k) {
      out.rules_.push_back({words[k], canon});
      out.buckets_[words[k].code()[0]].push_back(out.rules_.size() - 1);
      out.rules_.push_back({canon, words[k]});
      out.buckets_[canon.code()[0]].push_back(out.rules_.size() - 1);
    }
  }
  return out;
}

RewriteRuleSet RewriteRuleSet::for_graph(const MonoidContext& ctx,
                                         std::size_t rule_bound) {
  RewriteRuleSet out;
  const DefiningGraph& g = ctx.graph();
  for (int i = 0; i < static_cast<int>(g.rank()); ++i)
    for (int j = i + 1; j < static_cast<int>(g.rank()); ++j) {
      Label m = g.label(i, j);
      if (!m.is_finite()) continue;
      std::size_t b = std::max(rule_bound, static_cast<std::size_t>(m.value()));
      RewriteRuleSet pair = dihedral(ctx, i, j, b);
      for (const auto& r : pair.rules_) {
        out.rules_.push_back(r);
        out.buckets_[r.lhs.code()[0]].push_back(out.rules_.size() - 1);
      }
    }
  return out;
}

void RewriteRuleSet::add_rule(const Word& lhs, const Word& rhs) {
  if (lhs.empty() || rhs.empty() || lhs == rhs)
    throw std::invalid_argument(
        "rewrite rule must relate two distinct nonempty words");
  rules_.push_back({lhs, rhs});
  buckets_[lhs.code()[0]].push_back(rules_.size() - 1);
  rules_.push_back({rhs, lhs});
  buckets_[rhs.code()[0]].push_back(rules_.size() - 1);
}

bool RewriteRuleSet::contains(const Word& lhs, const Word& rhs) const {
  for (const auto& r : rules_)
    if (r.lhs == lhs && r.rhs == rhs) return true;
  return false;
}

const std::vector<std::size_t>& RewriteRuleSet::bucket(char first) const {
  auto it = buckets_.find(first);
  return it == buckets_.end() ? empty_bucket_ : it->second;
}

std::string GarsideNF::token() const {
  std::string t = std::to_string(power);
  t += '|';
  for (std::size_t k = 0; k < simples.size(); ++k) {
    if (k) t += ',';
    t += std::to_string(simples[k]);
  }
  return t;
}

GarsideNF nf_append(const SphericalData& data, GarsideNF nf, const Letter& l) {
  if (l.sign > 0) {
    nf.simples.push_back(data.atom_id(l.gen));
  } else {
    // x^-1 = delta^-1 * l_comp(x), and moving delta^-1 left conjugates the
    // simples (the conjugation is an involution)
    nf.power -= 1;
    for (int& s : nf.simples) s = data.delta_conj_simple(s);
    nf.simples.push_back(data.l_comp(data.atom_id(l.gen)));
  }
  auto [dk, seq] = data.normalize(std::move(nf.simples));
  nf.power += dk;
  nf.simples = std::move(seq);
  PositiveWord tail;
  for (int s : nf.simples) tail.append(data.simple_word(s));
  nf.tail = std::move(tail);
  return nf;
}

GarsideNF garside_nf(const SphericalData& data, const Word& w) {
  GarsideNF nf;
  for (const Letter& l : w.letters()) nf = nf_append(data, std::move(nf), l);
  return nf;
}

Word nf_to_word(const SphericalData& data, const GarsideNF& nf) {
  Word out;
  Word dw = data.delta().as_word();
  if (nf.power < 0) dw = dw.inverse();
  for (int k = std::abs(nf.power); k > 0; --k) out.append(dw);
  out.append(nf.tail.as_word());
  return free_reduce(out);
}

Word Retraction::apply(const Word& w) const {
  Word out;
  for (const Letter& l : w.letters()) {
    int im = image[static_cast<std::size_t>(l.gen)];
    if (im < 0) continue;
    out.push_back({im, l.sign});
  }
  return free_reduce(out);
}

int total_exponent(const Word& w) {
  int e = 0;
  for (const Letter& l : w.letters()) e += l.sign;
  return e;
}

// Generator-set reductions: kill x when every finite label at x is even
// (the braid relation maps to a valid power identity), fold x onto y when
// every third generator sees x and y with identical labels. Both moves are
// homomorphisms onto standard parabolics that fix the target.
struct RetractionBuilder {
  const DefiningGraph& graph;

  static std::vector<int> alive_of(const std::vector<int>& cur) {
    std::vector<int> a;
    for (int v : cur)
      if (v >= 0) a.push_back(v);
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
  }

  bool kill_ok(const std::vector<int>& alive, int x) const {
    for (int z : alive) {
      if (z == x) continue;
      Label m = graph.label(x, z);
      if (m.is_finite() && m.value() % 2 != 0) return false;
    }
    return true;
  }

  bool fold_ok(const std::vector<int>& alive, int x, int y) const {
    for (int z : alive) {
      if (z == x || z == y) continue;
      if (!(graph.label(z, x) == graph.label(z, y))) return false;
    }
    return true;
  }

  template <class F>
  void for_successors(const std::vector<int>& cur, bool folds_only,
                      F&& f) const {
    auto alive = alive_of(cur);
    if (!folds_only)
      for (int x : alive)
        if (kill_ok(alive, x)) {
          auto next = cur;
          for (int& v : next)
            if (v == x) v = -1;
          f(next);
        }
    for (int x : alive)
      for (int y : alive) {
        if (x == y || !fold_ok(alive, x, y)) continue;
        auto next = cur;
        for (int& v : next)
          if (v == x) v = y;
        f(next);
      }
  }

  std::vector<Retraction> reductions(bool folds_only) const {
    std::vector<Retraction> out;
    std::set<std::vector<int>> visited;
    std::deque<std::vector<int>> queue;
    std::vector<int> init(graph.rank());
    std::iota(init.begin(), init.end(), 0);
    visited.insert(init);
    queue.push_back(init);
    std::size_t guard = 0;
    while (!queue.empty() && ++guard < 200'000) {
      auto cur = queue.front();
      queue.pop_front();
      auto alive = alive_of(cur);
      if (!alive.empty() && alive.size() <= 2)
        out.push_back({cur, GenSet(alive)});
      for_successors(cur, folds_only, [&](const std::vector<int>& next) {
        if (visited.insert(next).second) queue.push_back(next);
      });
    }
    return out;
  }

  std::optional<Retraction> onto(const GenSet& target) const {
    std::set<std::vector<int>> visited;
    std::deque<std::vector<int>> queue;
    std::vector<int> init(graph.rank());
    std::iota(init.begin(), init.end(), 0);
    visited.insert(init);
    queue.push_back(init);
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      auto alive = alive_of(cur);
      if (GenSet(alive) == target) return Retraction{cur, target};
      // alive sets only shrink, so prune once the target is unreachable
      if (alive.size() <= target.size()) continue;
      if (!std::includes(alive.begin(), alive.end(), target.gens().begin(),
                         target.gens().end()))
        continue;
      for_successors(cur, false, [&](const std::vector<int>& next) {
        if (visited.insert(next).second) queue.push_back(next);
      });
    }
    return std::nullopt;
  }
};

GroupEngine::GroupEngine(DefiningGraph graph, GroupOptions opts)
    : graph_(std::move(graph)),
      opts_(std::move(opts)),
      ctx_(graph_),
      rules_(opts_.rules_override
                 ? *opts_.rules_override
                 : RewriteRuleSet::for_graph(
                       ctx_, opts_.bounds.effective_rule_bound(graph_))) {
  RetractionBuilder rb{graph_};
  projections_ = rb.reductions(false);
  fold_certs_ = rb.reductions(true);
}

GenSet GroupEngine::support(const Word& w) const {
  std::vector<bool> seen(graph_.rank(), false);
  for (const Letter& l : w.letters()) seen[static_cast<std::size_t>(l.gen)] = true;
  std::vector<int> gens;
  for (int g = 0; g < static_cast<int>(graph_.rank()); ++g)
    if (seen[static_cast<std::size_t>(g)]) gens.push_back(g);
  return GenSet(gens);
}

Route GroupEngine::route_for(const GenSet& sup) const {
  if (sup.empty()) return {RouteKind::Trivial, sup};
  if (opts_.force_bounded) return {RouteKind::Bounded, {}};
  if (!retraction_onto(sup)) return {RouteKind::Bounded, {}};
  bool all_infinite = true;
  const auto& gens = sup.gens();
  for (std::size_t a = 0; a < gens.size() && all_infinite; ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (graph_.label(gens[a], gens[b]).is_finite()) {
        all_infinite = false;
        break;
      }
  if (all_infinite) return {RouteKind::Free, sup};
  if (is_spherical(graph_, sup)) return {RouteKind::Spherical, sup};
  return {RouteKind::Bounded, {}};
}

std::optional<Retraction> GroupEngine::retraction_onto(
    const GenSet& target) const {
  {
    std::lock_guard lk(closure_mu_);
    auto it = retract_cache_.find(target);
    if (it != retract_cache_.end()) return it->second;
  }
  auto r = RetractionBuilder{graph_}.onto(target);
  std::lock_guard lk(closure_mu_);
  retract_cache_[target] = r;
  return r;
}

GroupEngine::SearchHit GroupEngine::bounded_search(
    const Word& start0, SearchMode mode, std::size_t len_target) const {
  Word start = free_reduce(start0);
  std::shared_ptr<const ClosureOutcome> memo;
  {
    std::lock_guard lk(closure_mu_);
    auto it = closure_memo_.find(start.code());
    if (it != closure_memo_.end()) memo = it->second;
  }
  if (memo) {
    SearchHit hit;
    hit.outcome = memo;
    hit.expanded = memo->expanded;
    bool stopped = false;
    switch (mode) {
      case SearchMode::StopShorter:
        stopped = memo->min_len < memo->start_len;
        break;
      case SearchMode::StopEmpty:
        stopped = memo->min_len == 0;
        break;
      case SearchMode::StopAtLength:
        stopped = memo->min_len <= len_target;
        break;
      case SearchMode::Full:
        break;
    }
    if (stopped) {
      hit.end = 0;
      hit.stop_word = memo->min_words.front();
    } else {
      hit.end = memo->complete ? 1 : 2;
    }
    return hit;
  }

  std::function<bool(const Word&)> stop;
  switch (mode) {
    case SearchMode::StopShorter:
      stop = [len = start.size()](const Word& w) { return w.size() < len; };
      break;
    case SearchMode::StopEmpty:
      stop = [](const Word& w) { return w.empty(); };
      break;
    case SearchMode::StopAtLength:
      stop = [len_target](const Word& w) { return w.size() <= len_target; };
      break;
    case SearchMode::Full:
      break;
  }
  BfsOutcome res = rewrite_bfs(rules_, start, opts_.bounds.budget,
                               mode == SearchMode::Full, stop);
  SearchHit hit;
  hit.expanded = res.expanded;
  if (res.end == 0) {
    hit.end = 0;
    hit.stop_word = res.stop_word;
    return hit;
  }
  hit.end = res.end;
  if (res.end == 1 || mode == SearchMode::Full) {
    auto out = std::make_shared<ClosureOutcome>();
    out->start_len = start.size();
    out->min_len = res.min_len;
    out->min_words = std::move(res.min_words);
    out->complete = res.end == 1;
    out->expanded = res.expanded;
    hit.outcome = out;
    // every visited word of the start length has the same reachable set:
    // equal-length steps are reversible, so the closure is shared
    std::lock_guard lk(closure_mu_);
    closure_memo_[start.code()] = out;
    for (const auto& c : res.top_codes) closure_memo_[c] = out;
  }
  return hit;
}

std::shared_ptr<const ClosureOutcome> GroupEngine::closure(const Word& w) const {
  return bounded_search(w, SearchMode::Full).outcome;
}

BoundedVerdict GroupEngine::equal(const Word& u, const Word& v) const {
  Word z = free_reduce(concat(u, v.inverse()));
  if (z.empty())
    return BoundedVerdict::holds_exact("identical after free reduction");
  Route rt = route_for(support(z));
  if (rt.kind == RouteKind::Free)
    return BoundedVerdict::counterexample(
        z, true,
        "difference is a nonempty reduced word over a free-parabolic support");
  if (rt.kind == RouteKind::Spherical) {
    auto data = ctx_.garside(rt.target);
    GarsideNF nf = garside_nf(*data, z);
    if (nf.power == 0 && nf.simples.empty())
      return BoundedVerdict::holds_exact("difference has trivial normal form");
    return BoundedVerdict::counterexample(
        z, true, "difference has normal form " + nf.token());
  }
  return equal_bounded(z);
}

BoundedVerdict GroupEngine::equal_bounded(const Word& z) const {
  if (opts_.use_insertion_search)
    return insertion_equal(rules_, graph_.rank(), z, opts_.bounds.K,
                           opts_.bounds.budget);
  auto hit = bounded_search(z, SearchMode::StopEmpty);
  if (hit.end == 0)
    return BoundedVerdict::holds_exact("rewriting reaches the empty word");
  if (hit.end == 1) {
    auto v = BoundedVerdict::counterexample(
        z, false, "empty word unreachable in the complete rewrite closure");
    v.bound = opts_.bounds.effective_rule_bound(graph_);
    return v;
  }
  return BoundedVerdict::inconclusive(
      "expansion budget exhausted before the rewrite closure completed");
}

BoundedVerdict GroupEngine::is_geodesic(const Word& w) const {
  if (!w.is_freely_reduced())
    return BoundedVerdict::counterexample(free_reduce(w), true,
                                          "word is not freely reduced");
  if (w.empty()) return BoundedVerdict::holds_exact("empty word");
  {
    std::lock_guard lk(closure_mu_);
    auto it = geo_cache_.find(w.code());
    if (it != geo_cache_.end()) return it->second;
  }
  BoundedVerdict v = [&]() -> BoundedVerdict {
    Route rt = route_for(support(w));
    if (rt.kind == RouteKind::Free)
      return BoundedVerdict::holds_exact(
          "freely reduced over a free-parabolic support");
    if (rt.kind == RouteKind::Spherical) {
      Ball& ball = ensure_ball(rt.target, w.size());
      GarsideNF nf = garside_nf(*ball.data, w);
      std::size_t g = ball.gl.at(nf.token());
      if (g == w.size())
        return BoundedVerdict::holds_exact(
            "length matches the parabolic ball distance");
      return BoundedVerdict::counterexample(
          least_geodesic_word(ball, nf), true,
          "parabolic ball distance is " + std::to_string(g));
    }
    if (!opts_.force_bounded && w.size() <= kCertificateRadius) {
      for (const Retraction& f : fold_certs_) {
        Word img = f.apply(w);
        if (img.size() != w.size()) continue;  // image cancelled; no info
        const auto& tg = f.target.gens();
        bool img_geodesic;
        if (tg.size() < 2 || !graph_.label(tg[0], tg[1]).is_finite()) {
          img_geodesic = true;  // free target: reduced means geodesic
        } else {
          Ball& b2 = ensure_ball(f.target, img.size());
          img_geodesic =
              b2.gl.at(garside_nf(*b2.data, img).token()) == img.size();
        }
        if (img_geodesic)
          return BoundedVerdict::holds_exact(
              "a length-preserving fold image onto a rank-2 parabolic is "
              "geodesic");
      }
    }
    auto hit = bounded_search(w, SearchMode::StopShorter);
    if (hit.end == 0)
      return BoundedVerdict::counterexample(
          hit.stop_word, true, "rewriting reaches a strictly shorter word");
    if (hit.end == 1)
      return BoundedVerdict::holds_up_to(
          opts_.bounds.effective_rule_bound(graph_),
          "no shorter word in the complete rewrite closure");
    return BoundedVerdict::inconclusive(
        "expansion budget exhausted before the rewrite closure completed");
  }();
  std::lock_guard lk(closure_mu_);
  geo_cache_[w.code()] = v;
  return v;
}

GeodesicReps GroupEngine::geodesic_representatives(const Word& w) const {
  Word z = free_reduce(w);
  GeodesicReps out;
  if (z.empty()) {
    out.words = {Word()};
    out.exact = out.complete = true;
    return out;
  }
  Route rt = route_for(support(z));
  if (rt.kind == RouteKind::Free) {
    out.words = {z};
    out.exact = out.complete = true;
    return out;
  }
  if (rt.kind == RouteKind::Spherical) {
    Ball& ball = ensure_ball(rt.target, z.size());
    out.words = enumerate_geodesic_words(ball, garside_nf(*ball.data, z));
    out.exact = out.complete = true;
    return out;
  }
  auto hit = bounded_search(z, SearchMode::Full);
  out.words = hit.outcome->min_words;
  out.complete = hit.outcome->complete;
  return out;
}

LengthResult GroupEngine::geodesic_length(const Word& w) const {
  Word z = free_reduce(w);
  if (z.empty()) return {0, true, true};
  Route rt = route_for(support(z));
  if (rt.kind == RouteKind::Free) return {z.size(), true, true};
  if (rt.kind == RouteKind::Spherical) {
    Ball& ball = ensure_ball(rt.target, z.size());
    return {ball.gl.at(garside_nf(*ball.data, z).token()), true, true};
  }
  BoundedVerdict v = is_geodesic(z);
  if (v.holds() && v.exact) return {z.size(), true, true};
  auto hit = bounded_search(z, SearchMode::Full);
  return {hit.outcome->min_len, false, hit.outcome->complete};
}

BoundedVerdict GroupEngine::positive_membership(const Word& w) const {
  Word z = free_reduce(w);
  if (z.empty()) return BoundedVerdict::holds_exact("empty word");
  {
    std::lock_guard lk(closure_mu_);
    auto it = memb_cache_.find(z.code());
    if (it != memb_cache_.end()) return it->second;
  }
  BoundedVerdict v = [&]() -> BoundedVerdict {
    if (z.constant_sign(+1))
      return BoundedVerdict::holds_exact("positive word");
    int e = total_exponent(z);
    Route rt = route_for(support(z));
    if (rt.kind == RouteKind::Free)
      return BoundedVerdict::counterexample(
          z, true,
          "reduced word over a free-parabolic support has a negative letter");
    if (rt.kind == RouteKind::Spherical) {
      auto data = ctx_.garside(rt.target);
      GarsideNF nf = garside_nf(*data, z);
      if (nf.power >= 0) {
        auto h = BoundedVerdict::holds_exact(
            "normal form has nonnegative delta power");
        h.witness = nf_to_word(*data, nf);
        return h;
      }
      return BoundedVerdict::counterexample(
          z, true, "normal form delta power is " + std::to_string(nf.power));
    }
    if (e < 0)
      return BoundedVerdict::counterexample(z, true,
                                            "total exponent is negative");
    if (!opts_.force_bounded) {
      auto member_rank2 = [&](const Word& img, const GenSet& target) -> bool {
        if (img.constant_sign(+1)) return true;
        const auto& tg = target.gens();
        if (tg.size() < 2) return false;  // rank-1 image with a negative letter
        Label m = graph_.label(tg[0], tg[1]);
        if (!m.is_finite()) return false;  // free image, not positive
        auto data = ctx_.garside(target);
        return garside_nf(*data, img).power >= 0;
      };
      for (const Retraction& p : projections_) {
        Word img = p.apply(z);
        if (member_rank2(img, p.target)) continue;
        auto c = BoundedVerdict::counterexample(
            z, true,
            "a projection onto a rank <= 2 parabolic maps the word outside "
            "the positive monoid");
        c.witness_aux = img;
        return c;
      }
    }
    if (e == 0) {
      auto eq = equal(z, Word());
      if (eq.status == Status::Holds) {
        eq.note = "total exponent zero and the element is trivial: " + eq.note;
        return eq;
      }
      if (eq.status == Status::Counterexample) {
        eq.note =
            "total exponent zero but the element is nontrivial: " + eq.note;
        return eq;
      }
      return eq;
    }
    auto hit =
        bounded_search(z, SearchMode::StopAtLength, static_cast<std::size_t>(e));
    if (hit.end == 0) {
      if (hit.stop_word.size() == static_cast<std::size_t>(e) &&
          hit.stop_word.constant_sign(+1)) {
        auto h = BoundedVerdict::holds_exact(
            "rewriting reaches a positive representative");
        h.witness = hit.stop_word;
        return h;
      }
      if (hit.stop_word.size() < static_cast<std::size_t>(e))
        return BoundedVerdict::counterexample(
            hit.stop_word, true,
            "rewriting reaches a word shorter than the total exponent");
      return BoundedVerdict::inconclusive(
          "reached the exponent length without positivity; rule set is "
          "inconsistent");
    }
    if (hit.end == 1) {
      auto c = BoundedVerdict::counterexample(
          z, false,
          "no positive representative in the complete rewrite closure");
      c.bound = opts_.bounds.effective_rule_bound(graph_);
      return c;
    }
    return BoundedVerdict::inconclusive(
        "expansion budget exhausted before the rewrite closure completed");
  }();
  std::lock_guard lk(closure_mu_);
  memb_cache_[z.code()] = v;
  return v;
}

GroupEngine::Canon GroupEngine::canonical_word(const Word& w) const {
  Word z = free_reduce(w);
  Canon out;
  if (z.empty()) {
    out.exact = out.complete = true;
    return out;
  }
  Route rt = route_for(support(z));
  if (rt.kind == RouteKind::Free) {
    out.word = z;
    out.exact = out.complete = true;
    return out;
  }
  if (rt.kind == RouteKind::Spherical) {
    Ball& ball = ensure_ball(rt.target, z.size());
    out.word = least_geodesic_word(ball, garside_nf(*ball.data, z));
    out.exact = out.complete = true;
    return out;
  }
  auto hit = bounded_search(z, SearchMode::Full);
  out.word = hit.outcome->min_words.front();
  out.complete = hit.outcome->complete;
  return out;
}

std::vector<std::pair<GarsideNF, std::size_t>> GroupEngine::spherical_ball(
    const GenSet& subset, std::size_t radius) const {
  Ball& ball = ensure_ball(subset, radius);
  std::vector<std::pair<GarsideNF, std::size_t>> out;
  out.reserve(ball.nf.size());
  for (const auto& [tok, nf] : ball.nf) out.push_back({nf, ball.gl.at(tok)});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first.token() < b.first.token();
  });
  return out;
}

GroupEngine::Ball& GroupEngine::ensure_ball(const GenSet& subset,
                                            std::size_t radius) const {
  std::lock_guard lk(ball_mu_);
  Ball& ball = balls_[subset];
  if (!ball.data) {
    ball.data = ctx_.garside(subset);
    GarsideNF e;
    ball.gl.emplace(e.token(), 0);
    ball.nf.emplace(e.token(), e);
  }
  while (ball.radius < radius) {
    std::vector<const GarsideNF*> frontier;
    for (const auto& [tok, g] : ball.gl)
      if (g == ball.radius) frontier.push_back(&ball.nf.at(tok));
    ++ball.radius;
    for (const GarsideNF* nf : frontier)
      for (int gen : subset.gens())
        for (int sign : {+1, -1}) {
          GarsideNF next = nf_append(*ball.data, *nf, Letter{gen, sign});
          std::string tok = next.token();
          if (ball.gl.contains(tok)) continue;
          ball.gl.emplace(tok, ball.radius);
          ball.nf.emplace(std::move(tok), std::move(next));
        }
  }
  return ball;
}

std::vector<Word> GroupEngine::enumerate_geodesic_words(
    const Ball& ball, const GarsideNF& nf) const {
  const SphericalData& data = *ball.data;
  std::unordered_map<std::string, std::vector<Word>> memo;
  std::function<std::vector<Word>(const GarsideNF&, std::size_t)> rec =
      [&](const GarsideNF& cur, std::size_t g) -> std::vector<Word> {
    std::string tok = cur.token();
    auto found = memo.find(tok);
    if (found != memo.end()) return found->second;
    std::vector<Word> words;
    if (g == 0) {
      words.push_back(Word());
    } else {
      for (int gen : data.subset().gens())
        for (int sign : {+1, -1}) {
          // last letter (gen, sign): recurse on g * l^-1
          GarsideNF prev = nf_append(data, cur, Letter{gen, -sign});
          auto it = ball.gl.find(prev.token());
          if (it == ball.gl.end() || it->second != g - 1) continue;
          for (const Word& head : rec(prev, g - 1)) {
            Word w = head;
            w.push_back({gen, sign});
            words.push_back(std::move(w));
          }
        }
    }
    memo.emplace(std::move(tok), words);
    return words;
  };
  std::vector<Word> out = rec(nf, ball.gl.at(nf.token()));
  std::sort(out.begin(), out.end(),
            [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  return out;
}

Word GroupEngine::least_geodesic_word(const Ball& ball,
                                      const GarsideNF& nf) const {
  const SphericalData& data = *ball.data;
  Word out;
  GarsideNF cur = nf;
  std::size_t g = ball.gl.at(cur.token());
  while (g > 0) {
    bool advanced = false;
    for (int gen : data.subset().gens()) {
      for (int sign : {+1, -1}) {
        // candidate first letter l; remainder is l^-1 * g
        Word rem(std::vector<Letter>{{gen, -sign}});
        rem.append(nf_to_word(data, cur));
        GarsideNF rest = garside_nf(data, free_reduce(rem));
        auto it = ball.gl.find(rest.token());
        if (it == ball.gl.end() || it->second != g - 1) continue;
        out.push_back({gen, sign});
        cur = std::move(rest);
        --g;
        advanced = true;
        break;
      }
      if (advanced) break;
    }
    if (!advanced) throw std::logic_error("geodesic descent stalled");
  }
  return out;
}

}  // namespace artin
