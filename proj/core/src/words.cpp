#include "artin/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace artin {

namespace {

char encode(const Letter& l) {
  if (l.gen < 0 || l.gen > 119) throw std::invalid_argument("generator index out of range");
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
  char c = static_cast<char>(l.gen + 1);
  return l.sign > 0 ? c : static_cast<char>(-c);
}

Letter decode(char c) {
  if (c > 0) return Letter{c - 1, +1};
  return Letter{-c - 1, -1};
}

}  // namespace

int letter_key(const Letter& l) { return l.gen * 2 + (l.sign < 0 ? 1 : 0); }

Word::Word(const std::vector<Letter>& letters) {
  code_.reserve(letters.size());
  for (const auto& l : letters) code_.push_back(encode(l));
}

Word Word::from_code(std::string code) {
  Word w;
  w.code_ = std::move(code);
  return w;
}

Letter Word::letter(std::size_t i) const { return decode(code_.at(i)); }

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  out.reserve(code_.size());
  for (char c : code_) out.push_back(decode(c));
  return out;
}

void Word::push_back(const Letter& l) { code_.push_back(encode(l)); }

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > code_.size() || pos + len > code_.size())
    throw std::out_of_range("subword out of range");
  return from_code(code_.substr(pos, len));
}

Word Word::suffix(std::size_t n) const {
  if (n > code_.size()) throw std::out_of_range("suffix longer than word");
  return from_code(code_.substr(code_.size() - n));
}

bool Word::ends_with(const Word& w) const {
  return code_.size() >= w.code_.size() &&
         code_.compare(code_.size() - w.code_.size(), w.code_.size(), w.code_) == 0;
}

Word Word::inverse() const {
  std::string out;
  out.reserve(code_.size());
  for (auto it = code_.rbegin(); it != code_.rend(); ++it)
    out.push_back(static_cast<char>(-*it));
  return from_code(std::move(out));
}

bool Word::is_freely_reduced() const {
  for (std::size_t i = 1; i < code_.size(); ++i)
    if (code_[i] == -code_[i - 1]) return false;
  return true;
}

bool Word::constant_sign(int sign) const {
  for (char c : code_)
    if ((c > 0) != (sign > 0)) return false;
  return true;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word free_reduce(const Word& w) {
  std::string out;
  out.reserve(w.code().size());
  for (char c : w.code()) {
    if (!out.empty() && out.back() == -c)
      out.pop_back();
    else
      out.push_back(c);
  }
  return Word::from_code(std::move(out));
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& x = a.code();
  const auto& y = b.code();
  for (std::size_t i = 0; i < x.size(); ++i) {
    int kx = letter_key(Letter{x[i] > 0 ? x[i] - 1 : -x[i] - 1, x[i] > 0 ? 1 : -1});
    int ky = letter_key(Letter{y[i] > 0 ? y[i] - 1 : -y[i] - 1, y[i] > 0 ? 1 : -1});
    if (kx != ky) return kx < ky;
  }
  return false;
}

PositiveWord::PositiveWord(const std::vector<int>& gens) {
  code_.reserve(gens.size());
  for (int g : gens) {
    if (g < 0 || g > 119) throw std::invalid_argument("generator index out of range");
    code_.push_back(static_cast<char>(g + 1));
  }
}

PositiveWord PositiveWord::from_code(std::string code) {
  PositiveWord w;
  w.code_ = std::move(code);
  return w;
}

int PositiveWord::gen(std::size_t i) const { return code_.at(i) - 1; }

void PositiveWord::push_back(int g) {
  if (g < 0 || g > 119) throw std::invalid_argument("generator index out of range");
  code_.push_back(static_cast<char>(g + 1));
}

PositiveWord PositiveWord::subword(std::size_t pos, std::size_t len) const {
  if (pos > code_.size() || pos + len > code_.size())
    throw std::out_of_range("subword out of range");
  return from_code(code_.substr(pos, len));
}

Word PositiveWord::as_word(int sign) const {
  std::string out = code_;
  if (sign < 0) {
    std::reverse(out.begin(), out.end());
    for (char& c : out) c = static_cast<char>(-c);
  }
  return Word::from_code(std::move(out));
}

PositiveWord PositiveWord::from_word(const Word& w, int sign) {
  if (!w.constant_sign(sign)) throw std::invalid_argument("word is not constant-sign");
  std::string out = w.code();
  if (sign < 0) {
    std::reverse(out.begin(), out.end());
    for (char& c : out) c = static_cast<char>(-c);
  }
  return from_code(std::move(out));
}

PositiveWord concat(const PositiveWord& a, const PositiveWord& b) {
  PositiveWord out = a;
  out.append(b);
  return out;
}

bool shortlex_less(const PositiveWord& a, const PositiveWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.code() < b.code();
}

std::vector<Word> sign_blocks(const Word& w) {
  if (!w.is_freely_reduced()) throw std::invalid_argument("sign_blocks: word not freely reduced");
  std::vector<Word> blocks;
  const auto& code = w.code();
  std::size_t start = 0;
  for (std::size_t i = 1; i <= code.size(); ++i) {
    if (i == code.size() || (code[i] > 0) != (code[start] > 0)) {
      blocks.push_back(Word::from_code(code.substr(start, i - start)));
      start = i;
    }
  }
  return blocks;
}

std::size_t monoidal_length(const Word& w) { return sign_blocks(free_reduce(w)).size(); }

std::vector<Syllable> syllable_decomposition(const Word& w) {
  if (!w.is_freely_reduced())
    throw std::invalid_argument("syllable_decomposition: word not freely reduced");
  std::vector<Syllable> out;
  for (const Letter& l : w.letters()) {
    if (!out.empty() && out.back().gen == l.gen)
      out.back().exponent += l.sign;
    else
      out.push_back(Syllable{l.gen, l.sign});
  }
  return out;
}

Word longest_signed_suffix(const Word& w, int sign) {
  if (w.empty()) throw std::invalid_argument("longest_signed_suffix: empty word");
  if (!w.is_freely_reduced())
    throw std::invalid_argument("longest_signed_suffix: word not freely reduced");
  const auto& code = w.code();
  std::size_t n = 0;
  while (n < code.size() && ((code[code.size() - 1 - n] > 0) == (sign > 0))) ++n;
  if (n == code.size()) --n;  // proper suffix only
  return w.suffix(n);
}

namespace {

int name_index(const std::string& name, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  if (toks.size() == 1 && (toks[0] == "e" || toks[0] == "1") &&
      name_index(toks[0], names) < 0)
    return out;
  for (const auto& t : toks) {
    std::string base = t;
    int sign = +1;
    if (base.size() > 3 && base.compare(base.size() - 3, 3, "^-1") == 0) {
      sign = -1;
      base.resize(base.size() - 3);
    } else if (base.size() > 1 && base.back() == '\'') {
      sign = -1;
      base.pop_back();
    }
    int idx = name_index(base, names);
    if (idx < 0) throw std::invalid_argument("unknown generator name: " + t);
    out.push_back(Letter{idx, sign});
  }
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += names.at(static_cast<std::size_t>(l.gen));
    if (l.sign < 0) out += '\'';
  }
  return out;
}

PositiveWord parse_positive_word(const std::string& text,
                                 const std::vector<std::string>& names) {
  Word w = parse_word(text, names);
  return PositiveWord::from_word(w);
}

std::string format_positive_word(const PositiveWord& w,
                                 const std::vector<std::string>& names) {
  return format_word(w.as_word(), names);
}

}  // namespace artin
