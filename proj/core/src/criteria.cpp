#include "artin/criteria.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace artin {

namespace {

struct GeodesicLevels {
  std::vector<std::vector<Word>> levels;  // [k]: geodesic words of k letters
  bool inconclusive = false;
};

/// Geodesic words are prefix-closed, so each level extends the previous one.
/// Levels come out shortlex sorted because parents are visited in order and
/// letters in letter_key order.
GeodesicLevels geodesic_levels(const GroupEngine& engine, std::size_t L,
                               std::uint64_t& budget) {
  GeodesicLevels out;
  out.levels.resize(L + 1);
  out.levels[0].push_back(Word{});
  const std::size_t rank = engine.graph().rank();
  for (std::size_t len = 1; len <= L; ++len) {
    for (const Word& w : out.levels[len - 1]) {
      for (std::size_t g = 0; g < rank; ++g) {
        for (int sign : {+1, -1}) {
          if (!w.empty()) {
            const Letter last = w.letter(w.size() - 1);
            if (last.gen == static_cast<int>(g) && last.sign == -sign)
              continue;
          }
          Word child = w;
          child.push_back(Letter{static_cast<int>(g), sign});
          if (budget == 0) {
            out.inconclusive = true;
            return out;
          }
          --budget;
          const BoundedVerdict v = engine.is_geodesic(child);
          if (v.holds())
            out.levels[len].push_back(std::move(child));
          else if (v.status == Status::Inconclusive)
            out.inconclusive = true;
        }
      }
    }
  }
  return out;
}

Word single(const Letter& l) {
  Word w;
  w.push_back(l);
  return w;
}

}  // namespace

BoundedVerdict is_blocking_pair(const GroupEngine& engine,
                                const BlockingPairQuery& q,
                                std::uint64_t budget) {
  if (!q.u.is_freely_reduced())
    throw std::invalid_argument("blocking-pair guard must be freely reduced");
  std::uint64_t left = budget;
  GeodesicLevels lv = geodesic_levels(engine, q.L, left);
  bool undecided = lv.inconclusive;
  const Word xw = single(q.x);
  for (const auto& level : lv.levels) {
    for (const Word& w : level) {
      const Word wu = concat(w, q.u);
      if (!wu.is_freely_reduced()) continue;  // not a word of the form w u
      if (left == 0) {
        undecided = true;
        break;
      }
      --left;
      const BoundedVerdict vg = engine.is_geodesic(wu);
      if (vg.status == Status::Inconclusive) {
        undecided = true;
        continue;
      }
      if (!vg.holds()) continue;
      const Word wux = concat(wu, xw);
      if (!wux.is_freely_reduced()) {
        BoundedVerdict out = BoundedVerdict::counterexample(
            w, vg.exact, "appending the letter cancels the guarded geodesic");
        out.witness_aux = wux;
        return out;
      }
      if (left == 0) {
        undecided = true;
        break;
      }
      --left;
      const BoundedVerdict vx = engine.is_geodesic(wux);
      if (vx.status == Status::Inconclusive) {
        undecided = true;
        continue;
      }
      if (!vx.holds()) {
        BoundedVerdict out = BoundedVerdict::counterexample(
            w, vg.exact && vx.exact,
            "the guarded word is geodesic but stops being one after the "
            "letter");
        out.witness_aux = wux;
        return out;
      }
    }
  }
  if (undecided)
    return BoundedVerdict::inconclusive(
        "some geodesic sub-verdicts stayed undecided within the budget");
  return BoundedVerdict::holds_up_to(q.L, "no failing prefix within the bound");
}

BoundedVerdict preserved_signed_suffixes_check(const GroupEngine& engine,
                                               std::size_t L,
                                               std::uint64_t budget) {
  std::uint64_t left = budget;
  GeodesicLevels lv = geodesic_levels(engine, L, left);
  bool undecided = lv.inconclusive;
  const auto& names = engine.graph().generators();
  // Single letters have an empty proper suffix, which every word keeps.
  for (std::size_t len = 2; len <= L && len < lv.levels.size(); ++len) {
    for (const Word& w : lv.levels[len]) {
      const int sign = w.letter(w.size() - 1).sign;
      const Word u = longest_signed_suffix(w, sign);
      if (u.empty()) continue;
      for (std::size_t g = 0; g < names.size(); ++g) {
        const Word aw =
            free_reduce(concat(single(Letter{static_cast<int>(g), sign}), w));
        if (left == 0)
          return BoundedVerdict::inconclusive("budget exhausted");
        --left;
        const GeodesicReps reps = engine.geodesic_representatives(aw);
        bool kept = false;
        for (const Word& rep : reps.words)
          if (rep.ends_with(u)) {
            kept = true;
            break;
          }
        if (kept) continue;
        if (!reps.complete) {
          undecided = true;
          continue;
        }
        BoundedVerdict out = BoundedVerdict::counterexample(
            aw, reps.exact,
            "prepending " + names[g] + (sign < 0 ? "^-1" : "") +
                " loses the suffix " + format_word(u, names));
        out.witness_aux = w;
        return out;
      }
    }
  }
  if (undecided)
    return BoundedVerdict::inconclusive(
        "some representative sets stayed undecided within the budget");
  return BoundedVerdict::holds_up_to(
      L, "all signed suffixes survive same-sign extension within the bound");
}

BlockingSequence::BlockingSequence(std::vector<Word> period)
    : period_(std::move(period)) {
  if (period_.empty() || period_.size() % 2 != 0)
    throw std::invalid_argument("sequence period must be nonempty and even");
  for (std::size_t k = 0; k < period_.size(); ++k) {
    const int sign = (k % 2 == 0) ? +1 : -1;
    if (period_[k].empty() || !period_[k].constant_sign(sign))
      throw std::invalid_argument(
          "sequence blocks must be nonempty and alternate sign by parity");
  }
  for (std::size_t k = 0; k < period_.size(); ++k) {
    const Word& cur = period_[k];
    const Word& nxt = period_[(k + 1) % period_.size()];
    if (cur.letter(cur.size() - 1).gen == nxt.letter(0).gen)
      throw std::invalid_argument("sequence junction cancels");
  }
}

BlockingSequence BlockingSequence::from_period(std::vector<Word> period) {
  return BlockingSequence(std::move(period));
}

namespace {

void require_distinct(const DefiningGraph& graph, int a, int b, int c) {
  const int rank = static_cast<int>(graph.rank());
  if (a == b || b == c || a == c || a < 0 || b < 0 || c < 0 || a >= rank ||
      b >= rank || c >= rank)
    throw std::invalid_argument("need three distinct generators");
}

Word pos(int g0, int g1) {
  return Word(std::vector<Letter>{{g0, +1}, {g1, +1}});
}

Word neg(int g0, int g1) {
  return Word(std::vector<Letter>{{g0, -1}, {g1, -1}});
}

}  // namespace

BlockingSequence BlockingSequence::large_type(const DefiningGraph& graph,
                                              int a, int b, int c) {
  require_distinct(graph, a, b, c);
  for (auto [i, j] : {std::pair{a, b}, {b, c}, {a, c}}) {
    const Label m = graph.label(i, j);
    if (m.is_finite() && m.value() < 3)
      throw std::invalid_argument("large-type sequence needs labels >= 3");
  }
  return BlockingSequence({pos(a, b), neg(c, a), pos(b, c), neg(a, b),
                           pos(c, a), neg(b, c)});
}

BlockingSequence BlockingSequence::three_free(const DefiningGraph& graph,
                                              int a, int b, int c) {
  require_distinct(graph, a, b, c);
  const Label ab = graph.label(a, b);
  const Label bc = graph.label(b, c);
  const Label ac = graph.label(a, c);
  if (!ab.is_finite() || ab.value() <= 3 || !bc.is_finite() ||
      bc.value() <= 3 || !ac.is_finite() || ac.value() != 2)
    throw std::invalid_argument(
        "needs finite labels with m_ab > 3, m_bc > 3, m_ac = 2");
  const Word odd(std::vector<Letter>{{b, +1}, {a, +1}, {b, +1}, {c, +1}});
  const Word even(std::vector<Letter>{{b, -1}, {a, -1}, {b, -1}, {c, -1}});
  return BlockingSequence({odd, even});
}

Word BlockingSequence::alpha(std::size_t i) const {
  if (i == 0) throw std::invalid_argument("blocks are indexed from 1");
  return period_[(i - 1) % period_.size()];
}

Word BlockingSequence::w(std::size_t n) const {
  Word out;
  for (std::size_t i = 1; i <= n; ++i) out.append(alpha(i));
  return out;
}

SequenceCheckReport verify_blocking_sequence(const GroupEngine& engine,
                                             const BlockingSequence& seq,
                                             std::size_t n, std::size_t L,
                                             std::uint64_t budget) {
  SequenceCheckReport report;
  report.blocks_checked = n;
  report.L = L;
  bool any_undecided = false;
  std::optional<Word> failure;

  for (std::size_t i = 1; i <= n; ++i) {
    const Word block = seq.alpha(i);
    for (std::size_t j = 1; j <= block.size(); ++j) {
      SequenceLetterRecord rec;
      rec.block = i;
      rec.position = j;
      rec.x = block.letter(j - 1);
      if (i == 1) {
        // No preceding block: the growing word so far is a positive prefix,
        // geodesic outright, and no guard is consumed.
        rec.positive_base = true;
        const BoundedVerdict v = engine.is_geodesic(block.prefix(j));
        rec.status = v.holds() ? Status::Holds : v.status;
        if (!v.holds() && v.status == Status::Counterexample && !failure)
          failure = block.prefix(j);
        if (v.status == Status::Inconclusive) any_undecided = true;
        report.letters.push_back(std::move(rec));
        continue;
      }
      const Word ctx = concat(seq.alpha(i - 1), block.prefix(j - 1));
      bool letter_undecided = false;
      for (std::size_t len = 0; len <= ctx.size(); ++len) {
        const Word u = ctx.suffix(len);
        ++rec.guards_tried;
        const BoundedVerdict v =
            is_blocking_pair(engine, BlockingPairQuery{u, rec.x, L}, budget);
        if (v.holds()) {
          rec.guard = u;
          break;
        }
        if (v.status == Status::Inconclusive) letter_undecided = true;
      }
      if (!rec.guard) {
        rec.status =
            letter_undecided ? Status::Inconclusive : Status::Counterexample;
        if (rec.status == Status::Counterexample && !failure)
          failure = concat(ctx, single(rec.x));
        if (rec.status == Status::Inconclusive) any_undecided = true;
      }
      report.letters.push_back(std::move(rec));
    }
  }

  if (failure) {
    report.verdict = BoundedVerdict::counterexample(
        *failure, false, "no guard suffix blocks this letter at the bound");
  } else if (any_undecided) {
    report.verdict =
        BoundedVerdict::inconclusive("some letters stayed undecided");
  } else {
    report.verdict = BoundedVerdict::holds_up_to(
        L, "every letter is covered by positivity or a guard suffix");
  }
  return report;
}

SphericalObstruction spherical_blocking_obstruction(const GroupEngine& engine,
                                                    const PositiveWord& u,
                                                    int x) {
  const DefiningGraph& graph = engine.graph();
  const GenSet full = GenSet::full(graph.rank());
  if (!is_spherical(graph, full))
    throw std::invalid_argument("needs a spherical defining graph");
  if (x < 0 || x >= static_cast<int>(graph.rank()))
    throw std::invalid_argument("generator index out of range");

  auto data = engine.garside(full);
  const Word dw = data->delta().as_word();

  SphericalObstruction out;
  out.witness = concat(concat(dw, dw), u.as_word());
  out.appended = concat(out.witness, single(Letter{x, -1}));
  // delta^2 is central and lcomp(x) x = delta, so delta^2 u x^-1 equals the
  // positive word u delta lcomp(x), one letter shorter than the witness.
  const PositiveWord lcomp =
      data->simple_word(data->l_comp(data->atom_id(x)));
  out.shorter = concat(u.as_word(), concat(dw, lcomp.as_word()));

  const BoundedVerdict geodesic = engine.is_geodesic(out.witness);
  if (!geodesic.holds()) {
    out.verdict = BoundedVerdict::counterexample(
        out.witness, true, "positive witness failed the geodesic check");
    return out;
  }
  const BoundedVerdict appended = engine.is_geodesic(out.appended);
  if (appended.holds()) {
    out.verdict = BoundedVerdict::counterexample(
        out.appended, true,
        "appending the inverse generator failed to shorten");
    return out;
  }
  const BoundedVerdict same = engine.equal(out.appended, out.shorter);
  if (!same.holds()) {
    out.verdict = BoundedVerdict::counterexample(
        out.shorter, true, "shorter positive spelling is not equal");
    return out;
  }
  out.verdict = BoundedVerdict::holds_exact(
      "positive witness is geodesic and shortens by one after the inverse "
      "generator");
  return out;
}

WnGeodesicReport verify_wn_geodesic(const GroupEngine& engine,
                                    const BlockingSequence& seq, std::size_t n,
                                    std::size_t B, std::uint64_t budget) {
  WnGeodesicReport report;
  report.n = n;
  report.wn = seq.w(n);
  if (monoidal_length(report.wn) != n)
    throw std::logic_error("sequence blocks collapsed in the concatenation");
  report.distance = m_distance(engine, Word{}, report.wn, B, budget);
  const auto& d = report.distance;
  if (d.status == Status::Holds && d.distance == n) {
    report.verdict =
        d.exact ? BoundedVerdict::holds_exact("distance is exactly n")
                : BoundedVerdict::holds_up_to(
                      B, "distance is n against factors within the bound");
  } else if (d.status == Status::Holds) {
    report.verdict = BoundedVerdict::counterexample(
        report.wn, d.exact,
        "distance " + std::to_string(d.distance.value_or(0)) +
            " differs from the block count " + std::to_string(n));
  } else {
    report.verdict = BoundedVerdict::inconclusive(d.note);
  }
  return report;
}

}  // namespace artin
