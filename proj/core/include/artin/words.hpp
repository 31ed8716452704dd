#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace artin {

/// One signed generator occurrence. `gen` indexes into a generator list,
/// `sign` is +1 or -1.
struct Letter {
  int gen;
  int sign;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Order used everywhere a deterministic letter order is needed:
/// generators in list order, positive before negative.
int letter_key(const Letter& l);

class PositiveWord;

/// A word over signed generators. Immutable value type; letters are packed
/// one per byte, so words up to ~120 generators are supported.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  static Word from_code(std::string code);

  std::size_t size() const { return code_.size(); }
  bool empty() const { return code_.empty(); }
  Letter letter(std::size_t i) const;
  std::vector<Letter> letters() const;

  void push_back(const Letter& l);
  void append(const Word& w) { code_ += w.code_; }
  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t n) const { return subword(0, n); }
  Word suffix(std::size_t n) const;
  bool ends_with(const Word& w) const;
  Word inverse() const;

  bool is_freely_reduced() const;
  /// True when every letter has the given sign. The empty word qualifies.
  bool constant_sign(int sign) const;

  const std::string& code() const { return code_; }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string code_;
};

Word concat(const Word& a, const Word& b);
Word free_reduce(const Word& w);

/// Length then letter_key order; total, deterministic.
bool shortlex_less(const Word& a, const Word& b);

/// A word over unsigned generators (an element of the positive monoid as a
/// word, not as an element).
class PositiveWord {
 public:
  PositiveWord() = default;
  explicit PositiveWord(const std::vector<int>& gens);

  static PositiveWord from_code(std::string code);

  std::size_t size() const { return code_.size(); }
  bool empty() const { return code_.empty(); }
  int gen(std::size_t i) const;

  void push_back(int gen);
  void append(const PositiveWord& w) { code_ += w.code_; }
  PositiveWord subword(std::size_t pos, std::size_t len) const;

  Word as_word(int sign = +1) const;
  /// Requires every letter positive (or every letter negative with sign=-1).
  static PositiveWord from_word(const Word& w, int sign = +1);

  const std::string& code() const { return code_; }

  friend bool operator==(const PositiveWord&, const PositiveWord&) = default;

 private:
  std::string code_;
};

PositiveWord concat(const PositiveWord& a, const PositiveWord& b);
bool shortlex_less(const PositiveWord& a, const PositiveWord& b);

/// Maximal constant-sign blocks, in order. Input must be freely reduced.
std::vector<Word> sign_blocks(const Word& w);

/// Number of sign blocks of the free reduction. Zero only for trivial words.
std::size_t monoidal_length(const Word& w);

struct Syllable {
  int gen;
  int exponent;  // nonzero; sign gives the letter sign

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Maximal single-generator runs of a freely reduced word.
std::vector<Syllable> syllable_decomposition(const Word& w);

/// Longest proper suffix whose letters all have `sign`. May be empty.
/// Input must be nonempty and freely reduced.
Word longest_signed_suffix(const Word& w, int sign);

/// Text form: whitespace-separated generator names, inverse marked by a
/// trailing apostrophe (emitted) or ^-1 (accepted). Blank input is the empty
/// word; "e" and "1" are accepted for it when they are not generator names.
Word parse_word(const std::string& text, const std::vector<std::string>& names);
std::string format_word(const Word& w, const std::vector<std::string>& names);
PositiveWord parse_positive_word(const std::string& text,
                                 const std::vector<std::string>& names);
std::string format_positive_word(const PositiveWord& w,
                                 const std::vector<std::string>& names);

}  // namespace artin

template <>
struct std::hash<artin::Word> {
  std::size_t operator()(const artin::Word& w) const noexcept {
    return std::hash<std::string>{}(w.code());
  }
};

template <>
struct std::hash<artin::PositiveWord> {
  std::size_t operator()(const artin::PositiveWord& w) const noexcept {
    return std::hash<std::string>{}(w.code());
  }
};
