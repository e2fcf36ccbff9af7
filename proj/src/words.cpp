#include "words.hpp"

#include <algorithm>
#include <cctype>

namespace fillings {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) fail(ErrorCode::Parse, "alphabet must have at least one generator");
  if (symbols_.size() > 26) fail(ErrorCode::Parse, "at most 26 generators supported");
  decode_.fill(0);
  for (size_t i = 0; i < symbols_.size(); ++i) {
    char c = symbols_[i];
    if (!std::islower(static_cast<unsigned char>(c)))
      fail(ErrorCode::Parse, std::string("generator symbol must be a lowercase letter: '") + c + "'");
    if (decode_[static_cast<unsigned char>(c)] != 0)
      fail(ErrorCode::Parse, std::string("duplicate generator symbol '") + c + "'");
    Letter x = static_cast<Letter>(i + 1);
    decode_[static_cast<unsigned char>(c)] = x;
    decode_[static_cast<unsigned char>(std::toupper(static_cast<unsigned char>(c)))] =
        static_cast<Letter>(-x);
  }
}

Alphabet Alphabet::first_n(int m) {
  std::string s;
  for (int i = 0; i < m; ++i) s.push_back(static_cast<char>('a' + i));
  return Alphabet(s);
}

char Alphabet::letter_char(Letter x) const {
  char c = symbols_[static_cast<size_t>(letter_index(x) - 1)];
  return x > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

Letter Alphabet::letter_of_char(char c) const { return decode_[static_cast<unsigned char>(c)]; }

bool lex_less(const Alphabet& a, const Word& lhs, const Word& rhs) {
  int n = std::min(lhs.size(), rhs.size());
  for (int i = 0; i < n; ++i) {
    int rl = a.rank(lhs[i]), rr = a.rank(rhs[i]);
    if (rl != rr) return rl < rr;
  }
  return lhs.size() < rhs.size();
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.append(b);
  return r;
}

Word invert(const Word& w) {
  Word r;
  for (int i = w.size() - 1; i >= 0; --i) r.push_back(inverse(w[i]));
  return r;
}

Word power(const Word& w, int e) {
  const Word base = e < 0 ? invert(w) : w;
  int k = e < 0 ? -e : e;
  Word r;
  for (int i = 0; i < k; ++i) r.append(base);
  return r;
}

Word commutator(const Word& a, const Word& b) {
  Word r = a;
  r.append(b);
  r.append(invert(a));
  r.append(invert(b));
  return r;
}

Word free_reduce(const Word& w) {
  // Stack-based cancellation; confluence makes the strategy irrelevant.
  std::string out;
  out.reserve(static_cast<size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i) {
    Letter x = w[i];
    if (!out.empty() && static_cast<Letter>(out.back()) == inverse(x))
      out.pop_back();
    else
      out.push_back(static_cast<char>(x));
  }
  return Word(std::move(out));
}

Word rotated(const Word& w, int offset) {
  int n = w.size();
  if (n == 0) return w;
  offset = ((offset % n) + n) % n;
  Word r;
  for (int i = 0; i < n; ++i) r.push_back(w[(i + offset) % n]);
  return r;
}

std::vector<Word> cyclic_conjugates(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) {
    out.push_back(w);
    return out;
  }
  for (int i = 0; i < w.size(); ++i) out.push_back(rotated(w, i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Word parse_word(const Alphabet& a, std::string_view text) {
  if (text == "1" || text == "") return Word();
  Word w;
  for (size_t i = 0; i < text.size(); ++i) {
    Letter x = a.letter_of_char(text[i]);
    if (x == 0)
      fail(ErrorCode::Parse, "character '" + std::string(1, text[i]) + "' at position " +
                                 std::to_string(i) + " is not in the alphabet");
    w.push_back(x);
  }
  return w;
}

std::string format_word(const Alphabet& a, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  s.reserve(static_cast<size_t>(w.size()));
  for (int i = 0; i < w.size(); ++i) s.push_back(a.letter_char(w[i]));
  return s;
}

Word letters(std::initializer_list<Letter> xs) {
  Word w;
  for (Letter x : xs) w.push_back(x);
  return w;
}

} // namespace fillings
