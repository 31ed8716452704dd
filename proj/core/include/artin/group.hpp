#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/monoid.hpp"
#include "artin/presentation.hpp"
#include "artin/words.hpp"

namespace artin {

/// Search bounds shared across the bounded checkers. Every verdict echoes the
/// bounds it ran with; nothing here is global state.
struct Bounds {
  std::size_t L = 4;   // |w| bound when quantifying over geodesic prefixes
  std::size_t B = 3;   // factor-length bound in monoid-generating-set distances
  std::size_t K = 4;   // slack for the optional insertion-widened equality search
  std::size_t b = 0;   // rewrite-rule length bound; 0 means 2 * max finite label
  std::size_t r = 2;   // element radius for complex balls
  std::size_t s = 2;   // monoid radius for complex balls
  std::uint64_t budget = 500'000;  // node-expansion budget per bounded search

  std::size_t effective_rule_bound(const DefiningGraph& graph) const;
};

enum class Status { Holds, Counterexample, Inconclusive };

std::string to_string(Status s);

/// Three-valued outcome of a bounded universal check. `exact` marks verdicts
/// established by an exact oracle (free reduction, Garside normal form, or a
/// concrete verified witness) rather than a bounded search.
struct BoundedVerdict {
  Status status = Status::Inconclusive;
  bool exact = false;
  std::optional<std::size_t> bound;
  std::optional<Word> witness;
  std::optional<Word> witness_aux;
  std::string note;

  bool holds() const { return status == Status::Holds; }

  static BoundedVerdict holds_exact(std::string note = {});
  static BoundedVerdict holds_up_to(std::size_t bound, std::string note = {});
  static BoundedVerdict counterexample(Word witness, bool exact,
                                       std::string note = {});
  static BoundedVerdict inconclusive(std::string note);
};

/// Equal-length relation pairs over single generator pairs, applied as
/// subword rewrites in both directions. Every stored pair is verified by the
/// exact two-generator oracle; add_rule bypasses verification and exists so
/// tests can seed deliberate corruption.
class RewriteRuleSet {
 public:
  struct Rule {
    Word lhs, rhs;
  };

  RewriteRuleSet() = default;

  static RewriteRuleSet dihedral(const MonoidContext& ctx, int i, int j,
                                 std::size_t rule_bound);
  static RewriteRuleSet for_graph(const MonoidContext& ctx,
                                  std::size_t rule_bound);

  void add_rule(const Word& lhs, const Word& rhs);

  const std::vector<Rule>& rules() const { return rules_; }
  bool contains(const Word& lhs, const Word& rhs) const;
  std::size_t size() const { return rules_.size(); }

  /// Indices of rules whose lhs starts with the given packed letter code.
  const std::vector<std::size_t>& bucket(char first) const;

 private:
  std::vector<Rule> rules_;  // ordered; both directions stored
  std::unordered_map<char, std::vector<std::size_t>> buckets_;
  static const std::vector<std::size_t> empty_bucket_;
};

/// Delta-power normal form over one spherical parabolic: the element equals
/// delta^power times the product of the listed simples (delta-free,
/// left-weighted, no trivial entries).
struct GarsideNF {
  int power = 0;
  std::vector<int> simples;
  PositiveWord tail;  // concatenation of the simple words

  friend bool operator==(const GarsideNF& a, const GarsideNF& b) {
    return a.power == b.power && a.simples == b.simples;
  }
  std::string token() const;
};

GarsideNF garside_nf(const SphericalData& data, const Word& w);
GarsideNF nf_append(const SphericalData& data, GarsideNF nf, const Letter& l);
Word nf_to_word(const SphericalData& data, const GarsideNF& nf);

/// A homomorphism onto a standard parabolic given letterwise: image[i] is a
/// generator index of the target subset or -1 (letter killed). Valid kills
/// need every finite label at the killed generator even; valid folds x -> y
/// need m_{z,x} = m_{z,y} for every other surviving z.
struct Retraction {
  std::vector<int> image;  // by source generator index
  GenSet target;

  Word apply(const Word& w) const;
};

struct GroupOptions {
  Bounds bounds;
  bool force_bounded = false;          // testing: skip exact routes
  bool use_insertion_search = false;   // widen equality search to |z| + K
  std::optional<RewriteRuleSet> rules_override;
};

enum class RouteKind { Trivial, Free, Spherical, Bounded };

struct Route {
  RouteKind kind = RouteKind::Bounded;
  GenSet target;  // meaningful for Free/Spherical
};

/// One length-nonincreasing rewrite closure: everything reachable from the
/// start word by rule applications and the free cancellations they expose.
struct ClosureOutcome {
  std::size_t start_len = 0;
  std::size_t min_len = 0;
  std::vector<Word> min_words;  // shortlex sorted; partial if !complete
  bool complete = false;
  std::uint64_t expanded = 0;
};

struct GeodesicReps {
  std::vector<Word> words;  // shortlex sorted
  bool exact = false;
  bool complete = false;
};

struct LengthResult {
  std::optional<std::size_t> length;  // upper bound when !complete
  bool exact = false;
  bool complete = false;
};

/// Group-level equality, geodesic and monoid-membership verdicts. Exact on
/// supports that retract onto free or spherical parabolics; a bounded rewrite
/// closure with explicit budgets everywhere else.
class GroupEngine {
 public:
  explicit GroupEngine(DefiningGraph graph, GroupOptions opts = {});

  const DefiningGraph& graph() const { return graph_; }
  const MonoidContext& monoid() const { return ctx_; }
  const RewriteRuleSet& rules() const { return rules_; }
  const GroupOptions& options() const { return opts_; }

  GenSet support(const Word& w) const;
  Route route_for(const GenSet& support) const;

  BoundedVerdict equal(const Word& u, const Word& v) const;
  BoundedVerdict is_geodesic(const Word& w) const;
  GeodesicReps geodesic_representatives(const Word& w) const;
  LengthResult geodesic_length(const Word& w) const;
  /// Does w represent an element of the positive monoid?
  BoundedVerdict positive_membership(const Word& w) const;
  /// Shortlex-least representative found; exact on exact routes.
  struct Canon {
    Word word;
    bool exact = false;
    bool complete = false;
  };
  Canon canonical_word(const Word& w) const;

  std::shared_ptr<const ClosureOutcome> closure(const Word& w) const;

  /// Exact X-ball of a spherical parabolic: (normal form, geodesic length),
  /// sorted by length then token.
  std::vector<std::pair<GarsideNF, std::size_t>> spherical_ball(
      const GenSet& subset, std::size_t radius) const;

  std::shared_ptr<const SphericalData> garside(const GenSet& subset) const {
    return ctx_.garside(subset);
  }

  /// Letterwise homomorphisms onto rank <= 2 parabolics, used for exact
  /// membership refutations.
  const std::vector<Retraction>& projections() const { return projections_; }

  /// The fold-only (letter-preserving) subset of the projections. When some
  /// fold image of w is geodesic in its rank <= 2 target, w itself is
  /// geodesic: a shorter word for the element would fold to a shorter word
  /// for the image.
  const std::vector<Retraction>& fold_certificates() const {
    return fold_certs_;
  }

 private:
  struct Ball {
    std::shared_ptr<const SphericalData> data;
    std::unordered_map<std::string, std::size_t> gl;  // nf token -> length
    std::unordered_map<std::string, GarsideNF> nf;
    std::size_t radius = 0;
  };

  DefiningGraph graph_;
  GroupOptions opts_;
  MonoidContext ctx_;
  RewriteRuleSet rules_;
  std::vector<Retraction> projections_;
  std::vector<Retraction> fold_certs_;  // length-preserving, rank <= 2 targets

  mutable std::mutex closure_mu_;
  mutable std::unordered_map<std::string, std::shared_ptr<const ClosureOutcome>>
      closure_memo_;
  mutable std::unordered_map<std::string, BoundedVerdict> geo_cache_;
  mutable std::unordered_map<std::string, BoundedVerdict> memb_cache_;
  mutable std::map<GenSet, std::optional<Retraction>> retract_cache_;
  mutable std::mutex ball_mu_;
  mutable std::map<GenSet, Ball> balls_;

  enum class SearchMode { Full, StopShorter, StopEmpty, StopAtLength };
  struct SearchHit {
    int end = 1;  // 0 stop condition met, 1 search space exhausted, 2 budget
    Word stop_word;
    std::shared_ptr<const ClosureOutcome> outcome;  // set when exhaustive
    std::uint64_t expanded = 0;
  };
  /// One rewrite BFS from the free reduction of start, with the closure memo
  /// consulted first and fed on exhaustion.
  SearchHit bounded_search(const Word& start, SearchMode mode,
                           std::size_t len_target = 0) const;

  /// Try to retract the whole generator set onto `target` by repeated kills
  /// and folds; empty when no reduction sequence reaches it.
  std::optional<Retraction> retraction_onto(const GenSet& target) const;
  Ball& ensure_ball(const GenSet& subset, std::size_t radius) const;
  std::vector<Word> enumerate_geodesic_words(const Ball& ball,
                                             const GarsideNF& nf) const;
  Word least_geodesic_word(const Ball& ball, const GarsideNF& nf) const;
  BoundedVerdict equal_bounded(const Word& z) const;
  friend struct RetractionBuilder;
};

int total_exponent(const Word& w);

}  // namespace artin
