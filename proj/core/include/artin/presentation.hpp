#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace artin {

/// Edge label of a defining graph: an integer >= 2 or infinity. Infinity is
/// a distinct state, not a sentinel integer.
class Label {
 public:
  static Label finite(int m);
  static Label infinity() { return Label(); }

  bool is_finite() const { return finite_; }
  /// Only valid for finite labels.
  int value() const;

  friend bool operator==(const Label&, const Label&) = default;

 private:
  Label() = default;
  bool finite_ = false;
  int m_ = 0;
};

/// Ordered set of generator indices; the subgroup they generate is the
/// standard parabolic on that subset.
class GenSet {
 public:
  GenSet() = default;
  explicit GenSet(std::vector<int> gens);

  static GenSet full(std::size_t rank);

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  bool contains(int g) const;
  const std::vector<int>& gens() const { return gens_; }

  friend bool operator==(const GenSet&, const GenSet&) = default;
  friend bool operator<(const GenSet& a, const GenSet& b) { return a.gens_ < b.gens_; }

 private:
  std::vector<int> gens_;  // strictly increasing
};

/// Symmetric labelled graph on an ordered generator list. Pairs without an
/// entry carry the infinite label.
class DefiningGraph {
 public:
  explicit DefiningGraph(std::vector<std::string> generators);

  /// Text form: generator names terminated by ';', then 'g h m' entries
  /// separated by ';'. Example: "a b c; a b 3; b c 3; a c 3".
  static DefiningGraph parse(const std::string& text);
  std::string serialize() const;

  static DefiningGraph from_json(const std::string& json_text);
  std::string to_json() const;

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& generators() const { return names_; }
  int generator_index(const std::string& name) const;

  void set_label(int i, int j, Label m);
  Label label(int i, int j) const;

  /// Largest finite label, or nullopt when every pair is infinite.
  std::optional<int> max_finite_label() const;
  bool all_finite_labels_even() const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, int> finite_labels_;  // key (i,j) with i<j
};

/// Finite-type recognition by matching each diagram component (edges are
/// pairs with label != 2) against the classification table.
bool is_spherical(const DefiningGraph& graph, const GenSet& subset);

/// All spherical subsets including the empty one, in size-then-lex order.
std::vector<GenSet> spherical_subsets(const DefiningGraph& graph);

enum class TheoremCaseKind {
  InfiniteLabelPair,
  LargeTriangle,
  ThreeFreeTriangle,
  NotCovered,
};

struct TheoremCase {
  TheoremCaseKind kind;
  std::vector<int> witness;  // pair or triple of generator indices, ascending
};

/// Scan order: an infinite-label pair, then a triangle with all labels >= 3,
/// then a triangle with no label 3 and at most one label 2. First witness in
/// generator order wins.
TheoremCase classify_theorem_case(const DefiningGraph& graph);

/// For a graph with no label 3 and no infinite label: a triple (a, b, c)
/// with m_ab > 3 and m_bc > 3 (so any label-2 edge is ac), if one exists.
std::optional<std::array<int, 3>> find_3free_triangle(const DefiningGraph& graph);

std::string to_string(TheoremCaseKind kind);

}  // namespace artin
