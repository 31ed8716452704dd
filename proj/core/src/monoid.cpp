#include "artin/monoid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace artin {

namespace {

std::string alternating_code(int first, int second, int len) {
  std::string s;
  s.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i)
    s.push_back(static_cast<char>((i % 2 == 0 ? first : second) + 1));
  return s;
}

bool positive_shortlex(const PositiveWord& a, const PositiveWord& b) {
  return shortlex_less(a, b);
}

}  // namespace

PositiveClass::PositiveClass(std::vector<PositiveWord> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), positive_shortlex);
}

bool PositiveClass::contains(const PositiveWord& w) const {
  return std::binary_search(members_.begin(), members_.end(), w, positive_shortlex);
}

MonoidContext::MonoidContext(DefiningGraph graph, MonoidOptions opts)
    : graph_(std::move(graph)), opts_(opts) {
  const int n = static_cast<int>(graph_.rank());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Label m = graph_.label(i, j);
      if (!m.is_finite()) continue;
      std::string lhs = alternating_code(i, j, m.value());
      std::string rhs = alternating_code(j, i, m.value());
      rels_.push_back({lhs, rhs});
      rels_.push_back({rhs, lhs});
    }
}

std::shared_ptr<const PositiveClass> MonoidContext::positive_class(
    const PositiveWord& w) const {
  {
    std::shared_lock lk(mu_);
    auto it = cache_.find(w.code());
    if (it != cache_.end()) return it->second;
  }

  std::unordered_set<std::string> seen;
  std::deque<std::string> queue;
  seen.insert(w.code());
  queue.push_back(w.code());
  while (!queue.empty()) {
    if (seen.size() > opts_.class_node_cap)
      throw std::runtime_error("positive class exceeded node cap");
    std::string cur = std::move(queue.front());
    queue.pop_front();
    for (const Rel& r : rels_) {
      if (r.lhs.size() > cur.size()) continue;
      for (std::size_t pos = 0; pos + r.lhs.size() <= cur.size(); ++pos) {
        if (cur.compare(pos, r.lhs.size(), r.lhs) != 0) continue;
        std::string next = cur;
        next.replace(pos, r.lhs.size(), r.rhs);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }

  std::vector<PositiveWord> members;
  members.reserve(seen.size());
  for (const std::string& s : seen) members.push_back(PositiveWord::from_code(s));
  auto cls = std::make_shared<const PositiveClass>(std::move(members));
  {
    std::unique_lock lk(mu_);
    for (const PositiveWord& m : cls->members()) cache_.emplace(m.code(), cls);
  }
  return cls;
}

PositiveWord MonoidContext::canonical(const PositiveWord& w) const {
  return positive_class(w)->canonical();
}

bool MonoidContext::monoid_equal(const PositiveWord& u, const PositiveWord& v) const {
  if (u.size() != v.size()) return false;
  return positive_class(u)->contains(v);
}

bool MonoidContext::left_divides(const PositiveWord& u, const PositiveWord& v) const {
  if (u.size() > v.size()) return false;
  if (u.empty()) return true;
  auto uc = positive_class(u);
  auto vc = positive_class(v);
  for (const PositiveWord& m : vc->members())
    if (uc->contains(m.subword(0, u.size()))) return true;
  return false;
}

bool MonoidContext::right_divides(const PositiveWord& u, const PositiveWord& v) const {
  if (u.size() > v.size()) return false;
  if (u.empty()) return true;
  auto uc = positive_class(u);
  auto vc = positive_class(v);
  for (const PositiveWord& m : vc->members())
    if (uc->contains(m.subword(m.size() - u.size(), u.size()))) return true;
  return false;
}

LcmResult MonoidContext::left_lcm(const PositiveWord& u, const PositiveWord& v,
                                  std::size_t cap,
                                  const std::optional<GenSet>& within) const {
  if (cap == 0) {
    std::size_t m = 2;
    if (auto mf = graph_.max_finite_label())
      m = static_cast<std::size_t>(std::max(2, *mf));
    cap = opts_.lcm_cap_factor * std::max<std::size_t>({u.size(), v.size(), 1}) * m;
  }
  if (u.empty()) return {canonical(v), cap};
  if (v.empty()) return {canonical(u), cap};

  std::vector<int> alphabet;
  if (within) {
    alphabet = within->gens();
  } else {
    for (int g = 0; g < static_cast<int>(graph_.rank()); ++g) alphabet.push_back(g);
  }

  // Level n holds the canonical forms of every length-n right-multiple of u.
  // Equal-length canonical codes sort bytewise, so set order is shortlex.
  std::set<std::string> frontier;
  frontier.insert(canonical(u).code());
  std::size_t len = u.size();
  while (true) {
    for (const std::string& code : frontier) {
      PositiveWord w = PositiveWord::from_code(code);
      if (left_divides(v, w)) return {w, cap};
    }
    if (len >= cap || frontier.empty()) break;
    std::set<std::string> next;
    for (const std::string& code : frontier) {
      PositiveWord w = PositiveWord::from_code(code);
      for (int g : alphabet) {
        PositiveWord e = w;
        e.push_back(g);
        next.insert(canonical(e).code());
      }
    }
    frontier = std::move(next);
    ++len;
  }
  return {std::nullopt, cap};
}

LcmResult MonoidContext::right_lcm(const PositiveWord& u, const PositiveWord& v,
                                   std::size_t cap,
                                   const std::optional<GenSet>& within) const {
  if (cap == 0) {
    std::size_t m = 2;
    if (auto mf = graph_.max_finite_label())
      m = static_cast<std::size_t>(std::max(2, *mf));
    cap = opts_.lcm_cap_factor * std::max<std::size_t>({u.size(), v.size(), 1}) * m;
  }
  if (u.empty()) return {canonical(v), cap};
  if (v.empty()) return {canonical(u), cap};

  std::vector<int> alphabet;
  if (within) {
    alphabet = within->gens();
  } else {
    for (int g = 0; g < static_cast<int>(graph_.rank()); ++g) alphabet.push_back(g);
  }

  std::set<std::string> frontier;
  frontier.insert(canonical(u).code());
  std::size_t len = u.size();
  while (true) {
    for (const std::string& code : frontier) {
      PositiveWord w = PositiveWord::from_code(code);
      if (right_divides(v, w)) return {w, cap};
    }
    if (len >= cap || frontier.empty()) break;
    std::set<std::string> next;
    for (const std::string& code : frontier) {
      PositiveWord w = PositiveWord::from_code(code);
      for (int g : alphabet) {
        PositiveWord e;
        e.push_back(g);
        e.append(w);
        next.insert(canonical(e).code());
      }
    }
    frontier = std::move(next);
    ++len;
  }
  return {std::nullopt, cap};
}

std::shared_ptr<const SphericalData> MonoidContext::garside(const GenSet& subset) const {
  {
    std::lock_guard lk(sph_mu_);
    auto it = sph_.find(subset);
    if (it != sph_.end()) return it->second;
  }
  auto data = std::make_shared<const SphericalData>(*this, subset);
  std::lock_guard lk(sph_mu_);
  return sph_.emplace(subset, data).first->second;
}

SphericalData::SphericalData(const MonoidContext& ctx, GenSet subset)
    : ctx_(ctx), subset_(std::move(subset)) {
  if (!is_spherical(ctx.graph(), subset_))
    throw std::invalid_argument("garside data requested for a non-spherical subset");

  PositiveWord d;
  for (int g : subset_.gens()) {
    PositiveWord atom;
    atom.push_back(g);
    LcmResult r = ctx.left_lcm(d, atom, 0, subset_);
    if (!r.lcm) throw std::runtime_error("atom lcm not found within cap");
    d = *r.lcm;
  }
  delta_ = ctx.canonical(d);

  // The same element has to arise as an iterated right-lcm; anything else is
  // an engine bug, not a property of the input.
  PositiveWord d2;
  for (int g : subset_.gens()) {
    PositiveWord atom;
    atom.push_back(g);
    LcmResult r = ctx.right_lcm(d2, atom, 0, subset_);
    if (!r.lcm) throw std::runtime_error("atom right-lcm not found within cap");
    d2 = *r.lcm;
  }
  if (!ctx.monoid_equal(delta_, d2))
    throw std::logic_error("left and right atom lcms disagree");

  // Left divisors of delta are exactly the prefixes of its class members.
  auto dc = ctx.positive_class(delta_);
  std::set<std::string> sset;
  for (const PositiveWord& m : dc->members())
    for (std::size_t n = 0; n <= m.size(); ++n)
      sset.insert(ctx.canonical(m.subword(0, n)).code());
  for (const std::string& code : sset)
    simples_.push_back(PositiveWord::from_code(code));
  std::sort(simples_.begin(), simples_.end(), positive_shortlex);
  for (std::size_t i = 0; i < simples_.size(); ++i)
    index_.emplace(simples_[i].code(), static_cast<int>(i));
  eps_ = index_.at(std::string());
  delta_id_ = index_.at(delta_.code());

  for (int g : subset_.gens()) {
    PositiveWord atom;
    atom.push_back(g);
    atom_ids_.push_back(index_.at(ctx.canonical(atom).code()));
  }

  const int n = static_cast<int>(simples_.size());
  std::vector<std::shared_ptr<const PositiveClass>> scls;
  scls.reserve(simples_.size());
  for (const PositiveWord& s : simples_) scls.push_back(ctx.positive_class(s));

  r_comp_.assign(simples_.size(), -1);
  l_comp_.assign(simples_.size(), -1);
  for (int s = 0; s < n; ++s) {
    std::size_t sl = simples_[static_cast<std::size_t>(s)].size();
    for (const PositiveWord& m : dc->members()) {
      if (r_comp_[static_cast<std::size_t>(s)] < 0 &&
          scls[static_cast<std::size_t>(s)]->contains(m.subword(0, sl))) {
        PositiveWord rest = m.subword(sl, m.size() - sl);
        r_comp_[static_cast<std::size_t>(s)] = index_.at(ctx.canonical(rest).code());
      }
      if (l_comp_[static_cast<std::size_t>(s)] < 0 &&
          scls[static_cast<std::size_t>(s)]->contains(m.subword(m.size() - sl, sl))) {
        PositiveWord rest = m.subword(0, m.size() - sl);
        l_comp_[static_cast<std::size_t>(s)] = index_.at(ctx.canonical(rest).code());
      }
    }
    if (r_comp_[static_cast<std::size_t>(s)] < 0 || l_comp_[static_cast<std::size_t>(s)] < 0)
      throw std::logic_error("simple has no complement in delta");
  }

  divides_.assign(simples_.size(), std::vector<bool>(simples_.size(), false));
  for (int t = 0; t < n; ++t) {
    const auto& tc = scls[static_cast<std::size_t>(t)];
    for (int s = 0; s < n; ++s) {
      std::size_t sl = simples_[static_cast<std::size_t>(s)].size();
      if (sl > simples_[static_cast<std::size_t>(t)].size()) continue;
      for (const PositiveWord& m : tc->members()) {
        if (scls[static_cast<std::size_t>(s)]->contains(m.subword(0, sl))) {
          divides_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = true;
          break;
        }
      }
    }
  }

  gcd_.assign(simples_.size(), std::vector<int>(simples_.size(), eps_));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      int best = eps_;
      std::size_t best_len = 0;
      bool tie = false;
      for (int d2i = 0; d2i < n; ++d2i) {
        if (!divides_[static_cast<std::size_t>(d2i)][static_cast<std::size_t>(s)] ||
            !divides_[static_cast<std::size_t>(d2i)][static_cast<std::size_t>(t)])
          continue;
        std::size_t len = simples_[static_cast<std::size_t>(d2i)].size();
        if (len > best_len) {
          best = d2i;
          best_len = len;
          tie = false;
        } else if (len == best_len && len > 0 && d2i != best) {
          tie = true;
        }
      }
      if (tie) throw std::logic_error("common-divisor maximum is not unique");
      gcd_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = best;
    }

  quot_.assign(simples_.size(), std::vector<int>(simples_.size(), -1));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (!divides_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]) continue;
      std::size_t sl = simples_[static_cast<std::size_t>(s)].size();
      for (const PositiveWord& m : scls[static_cast<std::size_t>(t)]->members()) {
        if (!scls[static_cast<std::size_t>(s)]->contains(m.subword(0, sl))) continue;
        PositiveWord rest = m.subword(sl, m.size() - sl);
        quot_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
            index_.at(ctx.canonical(rest).code());
        break;
      }
    }

  delta_conj_atom_.assign(subset_.size(), -1);
  const auto& gens = subset_.gens();
  for (std::size_t xi = 0; xi < gens.size(); ++xi) {
    PositiveWord xd;
    xd.push_back(gens[xi]);
    xd.append(delta_);
    for (int y : gens) {
      PositiveWord dy = delta_;
      dy.push_back(y);
      if (ctx.monoid_equal(xd, dy)) {
        delta_conj_atom_[xi] = y;
        break;
      }
    }
    if (delta_conj_atom_[xi] < 0)
      throw std::logic_error("delta conjugation does not permute the atoms");
  }

  delta_conj_simple_.assign(simples_.size(), -1);
  for (int s = 0; s < n; ++s) {
    const PositiveWord& w = simples_[static_cast<std::size_t>(s)];
    PositiveWord image;
    for (std::size_t i = 0; i < w.size(); ++i)
      image.push_back(delta_conj_atom_[static_cast<std::size_t>(subset_pos(w.gen(i)))]);
    delta_conj_simple_[static_cast<std::size_t>(s)] =
        index_.at(ctx.canonical(image).code());
  }
}

int SphericalData::simple_id(const PositiveWord& canonical_word) const {
  auto it = index_.find(canonical_word.code());
  return it == index_.end() ? -1 : it->second;
}

int SphericalData::subset_pos(int gen) const {
  const auto& gens = subset_.gens();
  auto it = std::lower_bound(gens.begin(), gens.end(), gen);
  if (it == gens.end() || *it != gen)
    throw std::invalid_argument("generator outside the subset");
  return static_cast<int>(it - gens.begin());
}

int SphericalData::atom_id(int gen) const {
  return atom_ids_[static_cast<std::size_t>(subset_pos(gen))];
}

int SphericalData::delta_conj_atom(int gen) const {
  return delta_conj_atom_[static_cast<std::size_t>(subset_pos(gen))];
}

int SphericalData::delta_conj_simple(int s) const {
  return delta_conj_simple_[static_cast<std::size_t>(s)];
}

bool SphericalData::left_divides_simple(int s, int t) const {
  return divides_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
}

int SphericalData::gcd_left(int s, int t) const {
  return gcd_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
}

int SphericalData::left_quot(int s, int t) const {
  int q = quot_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
  if (q < 0) throw std::invalid_argument("left_quot requires s | t");
  return q;
}

int SphericalData::prod(int s, int u) const {
  {
    std::lock_guard lk(prod_mu_);
    auto it = prod_.find({s, u});
    if (it != prod_.end()) return it->second;
  }
  PositiveWord w = simple_word(s);
  w.append(simple_word(u));
  int id = simple_id(ctx_.canonical(w));
  if (id < 0) throw std::logic_error("product of simples left the simple set");
  std::lock_guard lk(prod_mu_);
  prod_.emplace(std::make_pair(s, u), id);
  return id;
}

std::pair<int, std::vector<int>> SphericalData::normalize(std::vector<int> seq) const {
  std::erase(seq, eps_);
  if (delta_.empty()) return {0, {}};

  std::size_t total = 0;
  for (int s : seq) total += simple_word(s).size();
  std::size_t guard = seq.size() * total + 2;

  bool changed = true;
  while (changed) {
    if (guard-- == 0) throw std::logic_error("normalization did not converge");
    changed = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      int s = seq[i];
      int t = seq[i + 1];
      int u = gcd_left(r_comp(s), t);
      if (u == eps_) continue;
      seq[i] = prod(s, u);
      seq[i + 1] = left_quot(u, t);
      changed = true;
    }
    std::erase(seq, eps_);
  }

  int k = 0;
  std::size_t lead = 0;
  while (lead < seq.size() && seq[lead] == delta_id_) {
    ++k;
    ++lead;
  }
  seq.erase(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(lead));
  return {k, seq};
}

PositiveWord delta_conjugation(const SphericalData& data, const PositiveWord& w) {
  PositiveWord out;
  for (std::size_t i = 0; i < w.size(); ++i)
    out.push_back(data.delta_conj_atom(w.gen(i)));
  return out;
}

}  // namespace artin
