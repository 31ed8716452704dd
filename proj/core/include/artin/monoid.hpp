#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/words.hpp"

namespace artin {

struct MonoidOptions {
  /// Abort guard for class closures; classes of defining-relation BFS are
  /// finite but can be large for long words over many generators.
  std::uint64_t class_node_cap = 5'000'000;
  /// Default lcm search cap is lcm_cap_factor * max(|u|,|v|) * max(2, max m).
  std::size_t lcm_cap_factor = 2;
};

/// All positive words equal to a given one in the monoid, closed under
/// replacing one side of a defining relation by the other. Members share a
/// common length; canonical() is the shortlex-least member.
class PositiveClass {
 public:
  explicit PositiveClass(std::vector<PositiveWord> members);
  const std::vector<PositiveWord>& members() const { return members_; }
  const PositiveWord& canonical() const { return members_.front(); }
  bool contains(const PositiveWord& w) const;
  std::size_t size() const { return members_.size(); }

 private:
  std::vector<PositiveWord> members_;  // shortlex sorted
};

struct LcmResult {
  std::optional<PositiveWord> lcm;  // canonical
  std::size_t cap;                  // length bound the search ran with
};

class SphericalData;

/// Monoid-level computations for one defining graph. Class closures are
/// memoized; the memo admits concurrent readers with serialized inserts.
class MonoidContext {
 public:
  explicit MonoidContext(DefiningGraph graph, MonoidOptions opts = {});

  const DefiningGraph& graph() const { return graph_; }
  const MonoidOptions& options() const { return opts_; }

  std::shared_ptr<const PositiveClass> positive_class(const PositiveWord& w) const;
  PositiveWord canonical(const PositiveWord& w) const;
  bool monoid_equal(const PositiveWord& u, const PositiveWord& v) const;
  bool left_divides(const PositiveWord& u, const PositiveWord& v) const;
  bool right_divides(const PositiveWord& u, const PositiveWord& v) const;

  /// Least-length common right-multiple of u and v, shortlex-least among
  /// that length, or nullopt when none exists within the cap. cap == 0
  /// selects the default. `within` restricts the extension alphabet.
  LcmResult left_lcm(const PositiveWord& u, const PositiveWord& v,
                     std::size_t cap = 0,
                     const std::optional<GenSet>& within = std::nullopt) const;
  LcmResult right_lcm(const PositiveWord& u, const PositiveWord& v,
                      std::size_t cap = 0,
                      const std::optional<GenSet>& within = std::nullopt) const;

  /// Garside structure of the standard parabolic on a spherical subset.
  /// Built once per subset and cached.
  std::shared_ptr<const SphericalData> garside(const GenSet& subset) const;

 private:
  friend class SphericalData;
  struct Rel {
    std::string lhs, rhs;  // packed codes, equal length
  };

  DefiningGraph graph_;
  MonoidOptions opts_;
  std::vector<Rel> rels_;

  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::string, std::shared_ptr<const PositiveClass>> cache_;
  mutable std::mutex sph_mu_;
  mutable std::map<GenSet, std::shared_ptr<const SphericalData>> sph_;
};

/// Garside element, simples and the lattice tables that drive greedy normal
/// forms for a spherical parabolic.
class SphericalData {
 public:
  SphericalData(const MonoidContext& ctx, GenSet subset);

  const GenSet& subset() const { return subset_; }
  const PositiveWord& delta() const { return delta_; }
  const std::vector<PositiveWord>& simples() const { return simples_; }

  int simple_id(const PositiveWord& canonical_word) const;
  int eps_id() const { return eps_; }
  int delta_simple_id() const { return delta_id_; }
  int atom_id(int gen) const;

  /// Generator image under conjugation by delta; an involution on atoms.
  int delta_conj_atom(int gen) const;
  int delta_conj_simple(int s) const;

  int r_comp(int s) const { return r_comp_[static_cast<std::size_t>(s)]; }
  int l_comp(int s) const { return l_comp_[static_cast<std::size_t>(s)]; }
  bool left_divides_simple(int s, int t) const;
  int gcd_left(int s, int t) const;
  /// t = s * (s \ t); requires s | t.
  int left_quot(int s, int t) const;
  /// s * u as a simple; requires u | r_comp(s).
  int prod(int s, int u) const;

  /// Left-greedy normalization: returns the delta power absorbed from the
  /// left plus the delta-free left-weighted tail.
  std::pair<int, std::vector<int>> normalize(std::vector<int> seq) const;

  const PositiveWord& simple_word(int s) const {
    return simples_[static_cast<std::size_t>(s)];
  }

 private:
  const MonoidContext& ctx_;
  GenSet subset_;
  PositiveWord delta_;
  std::vector<PositiveWord> simples_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> atom_ids_;          // by position in subset
  std::vector<int> delta_conj_atom_;   // by position in subset
  std::vector<int> r_comp_, l_comp_, delta_conj_simple_;
  std::vector<std::vector<bool>> divides_;
  std::vector<std::vector<int>> gcd_, quot_;
  mutable std::mutex prod_mu_;
  mutable std::map<std::pair<int, int>, int> prod_;
  int eps_ = -1, delta_id_ = -1;

  int subset_pos(int gen) const;
};

/// Positive word w' with delta * w' = w * delta; the letterwise image of w
/// under the delta conjugation permutation.
PositiveWord delta_conjugation(const SphericalData& data, const PositiveWord& w);

}  // namespace artin
