#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "artin/cayley.hpp"
#include "artin/group.hpp"
#include "artin/presentation.hpp"
#include "artin/words.hpp"

namespace artin {

/// (u, x) blocks when every geodesic word of the form w u stays geodesic
/// after appending x.
struct BlockingPairQuery {
  Word u;          // the guard word, freely reduced
  Letter x;        // the appended letter
  std::size_t L;   // quantifier bound on |w|
};

/// Quantifies over every freely reduced w with |w| <= L for which w u is
/// geodesic. The reported counterexample is the shortlex-least such w; its
/// witness_aux is the failing word w u x.
BoundedVerdict is_blocking_pair(const GroupEngine& engine,
                                const BlockingPairQuery& q,
                                std::uint64_t budget = 2'000'000);

/// For every geodesic word w with |w| <= L ending in a sign-s letter, u its
/// longest proper constant-sign suffix, and every sign-s letter a: some
/// geodesic representative of a w must keep the suffix u. A counterexample
/// carries the reduction of a w as witness and w as witness_aux.
BoundedVerdict preserved_signed_suffixes_check(const GroupEngine& engine,
                                               std::size_t L,
                                               std::uint64_t budget = 2'000'000);

/// Periodic sequence of nonempty constant-sign words with alternating signs,
/// positive at odd indices: alpha(i) = period[(i-1) mod p], w(n) their
/// concatenation.
class BlockingSequence {
 public:
  /// ab, c^-1 a^-1, bc, a^-1 b^-1, ca, b^-1 c^-1. Requires all three pairwise
  /// labels >= 3 (finite or infinite).
  static BlockingSequence large_type(const DefiningGraph& graph, int a, int b,
                                     int c);
  /// babc at odd indices, b^-1 a^-1 b^-1 c^-1 at even. Requires
  /// m_ab > 3, m_bc > 3, m_ac = 2.
  static BlockingSequence three_free(const DefiningGraph& graph, int a, int b,
                                     int c);
  /// Any explicit period; validated for alternation, constant signs and
  /// reduced junctions (cyclically).
  static BlockingSequence from_period(std::vector<Word> period);

  const std::vector<Word>& period() const { return period_; }
  Word alpha(std::size_t i) const;  // 1-based
  Word w(std::size_t n) const;      // alpha(1) ... alpha(n)

 private:
  explicit BlockingSequence(std::vector<Word> period);
  std::vector<Word> period_;
};

/// One letter of a verified sequence: either covered by the positivity of
/// the first block, or by the first guard suffix that formed a blocking pair.
struct SequenceLetterRecord {
  std::size_t block = 0;     // i, 1-based
  std::size_t position = 0;  // j, 1-based within alpha(i)
  Letter x{0, 1};
  bool positive_base = false;       // i == 1: geodesic by positivity
  std::optional<Word> guard;        // successful u for i >= 2
  std::size_t guards_tried = 0;
  Status status = Status::Holds;
};

struct SequenceCheckReport {
  BoundedVerdict verdict;
  std::size_t blocks_checked = 0;  // n
  std::size_t L = 0;
  std::vector<SequenceLetterRecord> letters;
};

/// For each letter x of alpha(i), i <= n: the first block must stay geodesic
/// through x (positivity); later blocks need some suffix u of
/// alpha(i-1) * (alpha(i) up to x) with (u, x) a blocking pair at bound L,
/// shortest suffix first.
SequenceCheckReport verify_blocking_sequence(const GroupEngine& engine,
                                             const BlockingSequence& seq,
                                             std::size_t n, std::size_t L,
                                             std::uint64_t budget = 2'000'000);

/// Spherical graphs never admit blocking pairs (u, x^-1) with u positive:
/// delta^2 u is geodesic (it is positive) yet delta^2 u x^-1 shortens, since
/// x right-divides delta. Verifies all three facts through the engine.
struct SphericalObstruction {
  Word witness;    // delta^2 u
  Word appended;   // delta^2 u x^-1 as written
  Word shorter;    // u delta lcomp(x): positive, one letter shorter
  BoundedVerdict verdict;
};

SphericalObstruction spherical_blocking_obstruction(const GroupEngine& engine,
                                                    const PositiveWord& u,
                                                    int x);

/// w(n) should sit at monoid distance exactly n from the identity: the block
/// factorization gives the upper bound and bounded search refutes every
/// smaller factor count at factor bound B.
struct WnGeodesicReport {
  std::size_t n = 0;
  Word wn;
  MDistanceReport distance;
  BoundedVerdict verdict;
};

WnGeodesicReport verify_wn_geodesic(const GroupEngine& engine,
                                    const BlockingSequence& seq, std::size_t n,
                                    std::size_t B,
                                    std::uint64_t budget = 2'000'000);

}  // namespace artin
