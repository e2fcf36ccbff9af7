#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace fillings {

// A letter is a signed generator code: +i means generator i, -i its inverse
// (i in 1..m). Letter 0 is not a letter.
using Letter = signed char;

inline Letter inverse(Letter x) { return static_cast<Letter>(-x); }
inline int letter_index(Letter x) { return x < 0 ? -x : x; }
inline bool is_positive(Letter x) { return x > 0; }

// Ordered generator symbols. Text encoding: the lowercase symbol is the
// generator, its uppercase form the inverse, so "aB" reads a b^-1.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view symbols);
  static Alphabet first_n(int m);

  int size() const { return static_cast<int>(symbols_.size()); }
  char symbol(int index) const { return symbols_[index - 1]; } // 1-based
  char letter_char(Letter x) const;
  // Returns 0 for characters outside the alphabet.
  Letter letter_of_char(char c) const;
  // Canonical letter order: generators in alphabet order, then inverses.
  int rank(Letter x) const { return x > 0 ? x - 1 : size() + (-x) - 1; }
  Letter letter_of_rank(int r) const {
    return static_cast<Letter>(r < size() ? r + 1 : -(r - size() + 1));
  }

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<Letter, 256> decode_{};
};

// A word over an alphabet with inverses. Unreduced words are first-class;
// nothing here reduces implicitly. Letters are stored as signed codes in a
// byte string, so words are cheap to copy, compare and hash.
class Word {
 public:
  Word() = default;
  explicit Word(std::string raw) : raw_(std::move(raw)) {}

  int size() const { return static_cast<int>(raw_.size()); }
  bool empty() const { return raw_.empty(); }
  Letter operator[](int i) const { return static_cast<Letter>(raw_[static_cast<size_t>(i)]); }
  void push_back(Letter x) { raw_.push_back(static_cast<char>(x)); }
  void append(const Word& w) { raw_ += w.raw_; }
  Word subword(int begin, int end) const {
    return Word(raw_.substr(static_cast<size_t>(begin), static_cast<size_t>(end - begin)));
  }
  void insert(int pos, const Word& w) { raw_.insert(static_cast<size_t>(pos), w.raw_); }
  void erase(int begin, int end) {
    raw_.erase(static_cast<size_t>(begin), static_cast<size_t>(end - begin));
  }
  const std::string& raw() const { return raw_; }

  bool operator==(const Word& other) const { return raw_ == other.raw_; }
  bool operator!=(const Word& other) const { return raw_ != other.raw_; }
  // Arbitrary strict order usable for deterministic sets; not the canonical
  // alphabet order (see lex_less).
  bool operator<(const Word& other) const { return raw_ < other.raw_; }

 private:
  std::string raw_;
};

struct WordHash {
  size_t operator()(const Word& w) const { return std::hash<std::string>()(w.raw()); }
};

// Shortlex order with letters ranked generators-first (a < b < ... < A < B < ...).
bool lex_less(const Alphabet& a, const Word& lhs, const Word& rhs);

Word concat(const Word& a, const Word& b);
Word invert(const Word& w);
Word power(const Word& w, int e); // w^e, inverting when e < 0
// [a,b] in the preset encoding a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);
Word free_reduce(const Word& w);
Word rotated(const Word& w, int offset);
// All distinct rotations, including w itself; {epsilon} for the empty word.
std::vector<Word> cyclic_conjugates(const Word& w);

// Parses the text encoding; "1" and "" denote the empty word. Rejects
// characters outside the alphabet with a position-indexed error.
Word parse_word(const Alphabet& a, std::string_view text);
std::string format_word(const Alphabet& a, const Word& w); // epsilon -> "1"

// Single letters as words, for test convenience.
Word letters(std::initializer_list<Letter> xs);

} // namespace fillings
