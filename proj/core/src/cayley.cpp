#include "artin/cayley.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace artin {

Word MFactorization::spelled() const {
  Word out;
  int sign = first_sign;
  for (const auto& f : factors) {
    out.append(f.as_word(sign));
    sign = -sign;
  }
  return out;
}

namespace {

struct Membership {
  int verdict = 0;               // 1 member, 0 refuted, -1 undecided
  bool exact_unbounded = false;  // refutation valid for factors of any length
  PositiveWord rep;
};

/// Is w a positive element whose positive spelling fits in `bound` letters?
/// A positive word's letter count equals its total exponent, so the exponent
/// settles the length side before any search runs.
Membership positive_factor(const GroupEngine& engine, const Word& w,
                           std::size_t bound) {
  Membership out;
  const Word z = free_reduce(w);
  const int e = total_exponent(z);
  if (e < 1) {
    out.exact_unbounded = true;
    return out;
  }
  if (static_cast<std::size_t>(e) > bound) return out;
  BoundedVerdict v = engine.positive_membership(z);
  if (v.holds()) {
    out.verdict = 1;
    out.rep = PositiveWord::from_word(v.witness.value_or(z));
    return out;
  }
  if (v.status == Status::Counterexample) {
    out.exact_unbounded = v.exact;
    return out;
  }
  out.verdict = -1;
  return out;
}

/// Can k alternating factors of 1..bound letters, starting with sign s,
/// multiply to an element of total exponent e?
bool exponent_feasible(int e, std::size_t k, int s, std::size_t bound) {
  const long long pos = (s > 0) ? (k + 1) / 2 : k / 2;
  const long long neg = static_cast<long long>(k) - pos;
  const long long b = static_cast<long long>(bound);
  return e >= pos - neg * b && e <= pos * b - neg;
}

/// Same question with the length cap removed; false here is an exact
/// refutation of every factorization of this shape.
bool exponent_feasible_any(int e, std::size_t k, int s) {
  const long long pos = (s > 0) ? (k + 1) / 2 : k / 2;
  const long long neg = static_cast<long long>(k) - pos;
  if (neg == 0) return e >= pos;
  if (pos == 0) return e <= -neg;
  return true;
}

/// Positive words of exactly len letters, lexicographic order. fn returns
/// false to abort; the return value mirrors that.
bool each_positive(std::size_t rank, std::size_t len,
                   const std::function<bool(const PositiveWord&)>& fn) {
  std::vector<int> idx(len, 0);
  for (;;) {
    PositiveWord w;
    for (int g : idx) w.push_back(g);
    if (!fn(w)) return false;
    std::size_t i = len;
    while (i > 0 && idx[i - 1] + 1 == static_cast<int>(rank)) idx[--i] = 0;
    if (i == 0) return true;
    ++idx[i - 1];
  }
}

struct LevelResult {
  std::optional<MFactorization> found;
  bool inconclusive = false;
  bool exact_unbounded = true;  // refutation needs no factor-length cap
};

/// Exactly k alternating factors starting with sign s. Candidate order is
/// factor length then lex, so the first hit is deterministic.
LevelResult solve_level(const GroupEngine& engine, const Word& z,
                        std::size_t k, int s, std::size_t bound,
                        std::uint64_t& budget) {
  LevelResult out;
  const std::size_t rank = engine.graph().rank();
  const int e = total_exponent(z);
  if (!exponent_feasible(e, k, s, bound)) {
    out.exact_unbounded = !exponent_feasible_any(e, k, s);
    return out;
  }
  auto spend = [&budget]() {
    if (budget == 0) return false;
    --budget;
    return true;
  };

  if (k == 1) {
    if (!spend()) {
      out.inconclusive = true;
      return out;
    }
    Membership m = positive_factor(engine, s > 0 ? z : z.inverse(), bound);
    if (m.verdict == 1) {
      out.found = MFactorization{s, {m.rep}};
    } else if (m.verdict == 0) {
      out.exact_unbounded = m.exact_unbounded;
    } else {
      out.inconclusive = true;
    }
    return out;
  }

  if (k == 2) {
    // z = f1 f2^{-1} (s > 0) or f1^{-1} f2 (s < 0). Fixing the factor on the
    // s^{-1} side pins the other's length through the exponent, so only the
    // short side is enumerated.
    out.exact_unbounded = false;
    for (std::size_t l = 1; l <= bound && !out.found; ++l) {
      // e = |positive factor| - |negative factor| and the enumerated side is
      // always the negative one, so the other length is e + l in both cases.
      const long long other = static_cast<long long>(e) + static_cast<long long>(l);
      if (other < 1 || other > static_cast<long long>(bound)) continue;
      each_positive(rank, l, [&](const PositiveWord& f) {
        if (!spend()) {
          out.inconclusive = true;
          return false;
        }
        const Word probe = s > 0 ? concat(z, f.as_word())
                                 : concat(f.as_word(), z);
        Membership m = positive_factor(engine, probe, bound);
        if (m.verdict == 1) {
          out.found = s > 0 ? MFactorization{s, {m.rep, f}}
                            : MFactorization{s, {f, m.rep}};
          return false;
        }
        if (m.verdict == -1) out.inconclusive = true;
        return true;
      });
    }
    if (out.found) out.inconclusive = false;
    return out;
  }

  // k >= 3: peel the first factor and recurse.
  out.exact_unbounded = false;
  for (std::size_t l = 1; l <= bound && !out.found; ++l) {
    each_positive(rank, l, [&](const PositiveWord& f) {
      if (!spend()) {
        out.inconclusive = true;
        return false;
      }
      const int rest_e = e - s * static_cast<int>(l);
      if (!exponent_feasible(rest_e, k - 1, -s, bound)) return true;
      const Word rest = free_reduce(concat(f.as_word(-s), z));
      LevelResult sub = solve_level(engine, rest, k - 1, -s, bound, budget);
      if (sub.found) {
        sub.found->first_sign = s;
        sub.found->factors.insert(sub.found->factors.begin(), f);
        out.found = std::move(sub.found);
        return false;
      }
      if (sub.inconclusive) out.inconclusive = true;
      return true;
    });
  }
  if (out.found) out.inconclusive = false;
  return out;
}

LevelResult solve_k(const GroupEngine& engine, const Word& z, std::size_t k,
                    std::size_t bound, int first_sign, std::uint64_t& budget) {
  if (first_sign != 0) return solve_level(engine, z, k, first_sign, bound, budget);
  LevelResult plus = solve_level(engine, z, k, +1, bound, budget);
  if (plus.found) return plus;
  LevelResult minus = solve_level(engine, z, k, -1, bound, budget);
  if (minus.found) return minus;
  LevelResult out;
  out.inconclusive = plus.inconclusive || minus.inconclusive;
  out.exact_unbounded = plus.exact_unbounded && minus.exact_unbounded;
  return out;
}

MFactorization block_factorization(const Word& z) {
  const std::vector<Word> blocks = sign_blocks(z);
  MFactorization f;
  f.first_sign = blocks.front().letter(0).sign;
  int sign = f.first_sign;
  for (const Word& b : blocks) {
    f.factors.push_back(PositiveWord::from_word(b, sign));
    sign = -sign;
  }
  return f;
}

PositiveWord delta_power(const SphericalData& data, int n) {
  PositiveWord out;
  for (int i = 0; i < n; ++i) out.append(data.delta());
  return out;
}

}  // namespace

MDistanceReport m_distance(const GroupEngine& engine, const Word& source,
                           const Word& target, std::size_t factor_bound,
                           std::uint64_t budget, int first_sign,
                           std::size_t max_factors) {
  MDistanceReport rep;
  rep.source = source;
  rep.target = target;
  rep.factor_bound = factor_bound;
  rep.first_sign = first_sign;
  rep.difference = free_reduce(concat(source.inverse(), target));
  const Word& z = rep.difference;

  if (z.empty()) {
    rep.status = Status::Holds;
    rep.distance = rep.upper_bound = 0;
    rep.exact = true;
    rep.note = "the endpoints are equal";
    return rep;
  }
  if (factor_bound == 0) {
    rep.status = Status::Inconclusive;
    rep.note = "factor bound is zero";
    return rep;
  }

  const Route route = engine.route_for(engine.support(z));

  if (first_sign == 0 && route.kind == RouteKind::Free) {
    MFactorization f = block_factorization(z);
    rep.status = Status::Holds;
    rep.exact = true;
    rep.distance = rep.upper_bound = rep.refuted_below = f.factors.size();
    rep.note =
        "free parabolic: alternation survives free reduction, so the sign "
        "block count is the exact distance";
    for (const PositiveWord& p : f.factors)
      if (p.size() > factor_bound)
        rep.note += "; a witness factor exceeds the factor bound";
    rep.witness = std::move(f);
    return rep;
  }

  if (first_sign == 0 && route.kind == RouteKind::Spherical) {
    auto data = engine.garside(route.target);
    const GarsideNF nf = garside_nf(*data, z);
    rep.status = Status::Holds;
    rep.exact = true;
    if (nf.power >= 0) {
      MFactorization f{+1, {concat(delta_power(*data, nf.power), nf.tail)}};
      rep.distance = rep.upper_bound = rep.refuted_below = 1;
      rep.witness = std::move(f);
      rep.note = "positive element of a spherical parabolic";
      return rep;
    }
    const GarsideNF inv = garside_nf(*data, z.inverse());
    if (inv.power >= 0) {
      MFactorization f{-1, {concat(delta_power(*data, inv.power), inv.tail)}};
      rep.distance = rep.upper_bound = rep.refuted_below = 1;
      rep.witness = std::move(f);
      rep.note = "inverse-positive element of a spherical parabolic";
      return rep;
    }
    // Neither the element nor its inverse is positive, so the distance is
    // exactly 2: central even delta powers give g = (delta^{n+p} tail) delta^{-n}.
    const int p = nf.power;
    const int n = -p + ((-p) % 2);
    MFactorization f{+1,
                     {concat(delta_power(*data, n + p), nf.tail),
                      delta_power(*data, n)}};
    if (!(garside_nf(*data, free_reduce(f.spelled())) == nf))
      throw std::logic_error("spherical 2-path fails to spell its element");
    rep.distance = rep.upper_bound = rep.refuted_below = 2;
    rep.witness = std::move(f);
    rep.note = "spherical parabolic: neither sign is positive, distance 2";
    return rep;
  }

  // Bounded route: iterative deepening over factor counts at the bound.
  const std::vector<Word> blocks = sign_blocks(z);
  bool upper_ok = first_sign == 0 || blocks.front().letter(0).sign == first_sign;
  for (const Word& b : blocks)
    if (b.size() > factor_bound) upper_ok = false;
  const std::size_t upper = blocks.size();
  const std::size_t cap =
      max_factors ? max_factors : (upper_ok ? upper : z.size() + 2);
  if (upper_ok) rep.upper_bound = upper;

  bool refutations_unbounded = true;
  std::uint64_t left = budget;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (upper_ok && k == upper) {
      rep.witness = block_factorization(z);
      rep.distance = k;
      break;
    }
    LevelResult r = solve_k(engine, z, k, factor_bound, first_sign, left);
    if (r.found) {
      rep.witness = std::move(r.found);
      rep.distance = k;
      break;
    }
    if (r.inconclusive) {
      rep.status = Status::Inconclusive;
      rep.refuted_below = k;
      rep.note = "search budget exhausted at " + std::to_string(k) +
                 " factors; smaller counts are refuted at the bound";
      if (upper_ok && !rep.witness) rep.witness = block_factorization(z);
      return rep;
    }
    refutations_unbounded = refutations_unbounded && r.exact_unbounded;
    rep.refuted_below = k + 1;
  }

  if (rep.distance) {
    rep.status = Status::Holds;
    rep.upper_bound = rep.distance;
    rep.refuted_below = *rep.distance;
    rep.exact = refutations_unbounded;
    rep.note = rep.exact
                   ? "witness found; every smaller count is refuted without "
                     "length caps"
                   : "witness found; smaller counts are refuted at the factor "
                     "bound only";
  } else {
    rep.status = Status::Inconclusive;
    rep.note = "no factorization within " + std::to_string(cap) +
               " factors at the bound";
  }
  return rep;
}

AlternatingSearch alternating_expression_search(const GroupEngine& engine,
                                                const Word& w, std::size_t k,
                                                std::size_t factor_bound,
                                                std::uint64_t budget,
                                                int first_sign) {
  AlternatingSearch out;
  const Word z = free_reduce(w);
  if (k == 0) {
    if (z.empty())
      out.factorization = MFactorization{first_sign ? first_sign : +1, {}};
    return out;
  }
  if (factor_bound == 0) {
    out.inconclusive = true;
    out.exact = false;
    return out;
  }
  std::uint64_t left = budget;
  LevelResult r = solve_k(engine, z, k, factor_bound, first_sign, left);
  out.factorization = std::move(r.found);
  out.inconclusive = !out.factorization && r.inconclusive;
  out.exact = out.factorization ? true : (!r.inconclusive && r.exact_unbounded);
  return out;
}

Diameter2Report spherical_diameter2_check(const GroupEngine& engine,
                                          std::size_t radius) {
  Diameter2Report out;
  out.radius = radius;
  const GenSet full = GenSet::full(engine.graph().rank());
  if (!is_spherical(engine.graph(), full)) {
    out.verdict =
        BoundedVerdict::inconclusive("the defining graph is not spherical");
    return out;
  }
  auto data = engine.garside(full);
  for (const auto& [nf, gl] : engine.spherical_ball(full, radius)) {
    Diameter2Entry entry;
    entry.token = nf.token();
    entry.geodesic_length = gl;
    entry.element = nf_to_word(*data, nf);
    if (gl == 0) {
      out.entries.push_back(std::move(entry));
      continue;
    }
    if (nf.power >= 0) {
      entry.distance = 1;
      entry.path =
          MFactorization{+1, {concat(delta_power(*data, nf.power), nf.tail)}};
    } else {
      const GarsideNF inv = garside_nf(*data, entry.element.inverse());
      if (inv.power >= 0) {
        entry.distance = 1;
        entry.path = MFactorization{
            -1, {concat(delta_power(*data, inv.power), inv.tail)}};
      } else {
        // delta^{2m} is central: g = (delta^{n+p} tail) delta^{-n}, n even.
        const int p = nf.power;
        const int n = -p + ((-p) % 2);
        entry.distance = 2;
        entry.path = MFactorization{+1,
                                    {concat(delta_power(*data, n + p), nf.tail),
                                     delta_power(*data, n)}};
      }
    }
    if (!(garside_nf(*data, free_reduce(entry.path->spelled())) == nf)) {
      out.verdict = BoundedVerdict::counterexample(
          entry.element, true,
          "constructed path does not spell its element: " + entry.token);
      out.entries.push_back(std::move(entry));
      return out;
    }
    out.entries.push_back(std::move(entry));
  }
  out.verdict = BoundedVerdict::holds_up_to(
      radius, "every element within the radius has monoid distance <= 2");
  return out;
}

EmbeddingReport isometric_embedding_check(const GroupEngine& engine,
                                          const GenSet& subset,
                                          std::size_t radius,
                                          std::size_t factor_bound,
                                          std::uint64_t budget) {
  EmbeddingReport out;
  out.subset = subset;
  out.radius = radius;
  out.factor_bound = factor_bound;
  const DefiningGraph& graph = engine.graph();
  if (subset.empty()) {
    out.verdict = BoundedVerdict::holds_up_to(radius, "empty parabolic");
    return out;
  }

  std::vector<std::string> names;
  for (int g : subset.gens())
    names.push_back(graph.generators()[static_cast<std::size_t>(g)]);
  DefiningGraph sub(names);
  const auto& gens = subset.gens();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      sub.set_label(static_cast<int>(i), static_cast<int>(j),
                    graph.label(gens[i], gens[j]));
  GroupOptions sub_opts = engine.options();
  sub_opts.rules_override.reset();  // seeded rules target the parent alphabet
  GroupEngine sub_engine(std::move(sub), sub_opts);

  // Parabolic ball, enumerated over the subgraph alphabet.
  std::vector<Word> elements{Word{}};
  std::unordered_set<std::string> seen{std::string()};
  std::vector<Word> frontier{Word{}};
  bool enumeration_incomplete = false;
  for (std::size_t depth = 1; depth <= radius; ++depth) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (std::size_t g = 0; g < names.size(); ++g) {
        for (int sign : {+1, -1}) {
          if (!w.empty()) {
            const Letter last = w.letter(w.size() - 1);
            if (last.gen == static_cast<int>(g) && last.sign == -sign) continue;
          }
          Word child = w;
          child.push_back(Letter{static_cast<int>(g), sign});
          GroupEngine::Canon canon = sub_engine.canonical_word(child);
          if (!canon.complete) {
            enumeration_incomplete = true;
            continue;
          }
          if (!seen.insert(canon.word.code()).second) continue;
          elements.push_back(canon.word);
          next.push_back(canon.word);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(elements.begin(), elements.end(),
            [](const Word& a, const Word& b) { return shortlex_less(a, b); });

  auto to_full = [&gens](const Word& w) {
    Word out_w;
    for (const Letter& l : w.letters())
      out_w.push_back(Letter{gens[static_cast<std::size_t>(l.gen)], l.sign});
    return out_w;
  };

  struct PairDist {
    std::optional<std::size_t> sub, full;
  };
  std::unordered_map<std::string, PairDist> memo;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const Word z = free_reduce(concat(elements[i].inverse(), elements[j]));
      auto it = memo.find(z.code());
      if (it == memo.end()) {
        PairDist d;
        MDistanceReport ds =
            m_distance(sub_engine, Word{}, z, factor_bound, budget);
        if (ds.status == Status::Holds) d.sub = ds.distance;
        MDistanceReport df =
            m_distance(engine, Word{}, to_full(z), factor_bound, budget);
        if (df.status == Status::Holds) d.full = df.distance;
        it = memo.emplace(z.code(), d).first;
      }
      ++out.pairs_checked;
      const PairDist& d = it->second;
      if (d.sub && d.full) {
        if (*d.sub != *d.full) {
          out.verdict = BoundedVerdict::counterexample(
              to_full(z), false,
              "parabolic distance " + std::to_string(*d.sub) +
                  " differs from ambient distance " + std::to_string(*d.full));
          return out;
        }
      } else {
        ++out.skipped;
      }
    }
  }
  if (enumeration_incomplete) {
    out.verdict = BoundedVerdict::inconclusive(
        "parabolic enumeration hit incomplete canonical forms");
  } else if (out.skipped > 0) {
    out.verdict = BoundedVerdict::inconclusive(
        std::to_string(out.skipped) + " pairs stayed undecided at the bounds");
  } else {
    out.verdict = BoundedVerdict::holds_up_to(
        radius, "parabolic and ambient monoid distances agree on the ball");
  }
  return out;
}

}  // namespace artin
