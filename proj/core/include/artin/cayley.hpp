#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin/group.hpp"
#include "artin/presentation.hpp"
#include "artin/words.hpp"

namespace artin {

/// Product of nonempty positive factors with strictly alternating signs:
/// f1^s f2^{-s} f3^s ... with s = first_sign.
struct MFactorization {
  int first_sign = 1;
  std::vector<PositiveWord> factors;

  Word spelled() const;
  std::size_t length() const { return factors.size(); }
};

/// Distance from source to target in the Cayley graph of the group over the
/// whole positive monoid as generating set. Searches cap every factor at
/// factor_bound letters, so Holds values from the bounded route are upper
/// bounds for the true distance; `exact` marks values that are independent
/// of every bound.
struct MDistanceReport {
  Word source, target;
  Word difference;  // free reduction of source^{-1} target
  std::size_t factor_bound = 0;
  int first_sign = 0;  // 0 = either sign may start the factorization
  Status status = Status::Inconclusive;
  std::optional<std::size_t> distance;
  std::optional<std::size_t> upper_bound;
  bool exact = false;
  std::optional<MFactorization> witness;
  /// No factorization of fewer factors exists at the factor bound.
  std::size_t refuted_below = 0;
  std::string note;
};

MDistanceReport m_distance(const GroupEngine& engine, const Word& source,
                           const Word& target, std::size_t factor_bound,
                           std::uint64_t budget = 200'000, int first_sign = 0,
                           std::size_t max_factors = 0);

/// Search for a factorization of exactly k alternating factors, each of
/// 1..factor_bound letters. `exact` marks a refutation that does not depend
/// on the engine's rewrite bounds.
struct AlternatingSearch {
  std::optional<MFactorization> factorization;
  bool inconclusive = false;
  bool exact = true;
};

AlternatingSearch alternating_expression_search(const GroupEngine& engine,
                                                const Word& w, std::size_t k,
                                                std::size_t factor_bound,
                                                std::uint64_t budget = 200'000,
                                                int first_sign = 0);

struct Diameter2Entry {
  Word element;  // delta-power spelling of the normal form
  std::string token;
  std::size_t geodesic_length = 0;
  std::size_t distance = 0;            // exact: 0, 1 or 2
  std::optional<MFactorization> path;  // absent for the identity
};

/// Spherical groups only: every element of the standard-generator ball lies
/// within monoid-distance 2 of the identity, witnessed by a verified path.
struct Diameter2Report {
  BoundedVerdict verdict;
  std::size_t radius = 0;
  std::vector<Diameter2Entry> entries;  // ball order: length, then token
};

Diameter2Report spherical_diameter2_check(const GroupEngine& engine,
                                          std::size_t radius);

/// Monoid distances computed inside the standard parabolic on `subset`
/// compared against the same distances computed in the whole group, over all
/// pairs of parabolic elements within the given geodesic radius.
struct EmbeddingReport {
  BoundedVerdict verdict;
  GenSet subset;
  std::size_t radius = 0;
  std::size_t factor_bound = 0;
  std::size_t pairs_checked = 0;
  std::size_t skipped = 0;  // pairs some side of which stayed undecided
};

EmbeddingReport isometric_embedding_check(const GroupEngine& engine,
                                          const GenSet& subset,
                                          std::size_t radius,
                                          std::size_t factor_bound,
                                          std::uint64_t budget = 200'000);

}  // namespace artin
