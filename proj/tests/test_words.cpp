#include <doctest.h>

#include <algorithm>
#include <random>

#include "words.hpp"

using namespace fillings;

namespace {

const Alphabet kAb = Alphabet("ab");
const Alphabet kXy = Alphabet("xy");

Word W(const Alphabet& a, const char* text) { return parse_word(a, text); }

// Reference reduction cancelling at a randomly chosen reducible position
// each step; free reduction is confluent, so any order must agree with the
// leftmost strategy.
Word random_order_reduce(Word w, std::mt19937& rng) {
  while (true) {
    std::vector<int> spots;
    for (int i = 0; i + 1 < w.size(); ++i)
      if (w[i] == inverse(w[i + 1])) spots.push_back(i);
    if (spots.empty()) return w;
    int at = spots[std::uniform_int_distribution<size_t>(0, spots.size() - 1)(rng)];
    w.erase(at, at + 2);
  }
}

Word random_word(const Alphabet& a, int len, std::mt19937& rng) {
  Word w;
  std::uniform_int_distribution<int> pick(0, 2 * a.size() - 1);
  for (int i = 0; i < len; ++i) w.push_back(a.letter_of_rank(pick(rng)));
  return w;
}

} // namespace

TEST_CASE("parsing and formatting") {
  CHECK(format_word(kAb, W(kAb, "aB")) == "aB");
  CHECK(format_word(kAb, Word()) == "1");
  CHECK(parse_word(kAb, "1").empty());
  CHECK_THROWS_AS(parse_word(kAb, "axb"), Error);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(W(kXy, "xXy")) == W(kXy, "y"));
  CHECK(free_reduce(Word()).empty());
  CHECK(free_reduce(W(kAb, "abBA")).empty());
}

TEST_CASE("free reduction is confluent") {
  std::mt19937 rng(20240607);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(kAb, trial % 17, rng);
    CHECK(random_order_reduce(w, rng) == free_reduce(w));
  }
}

TEST_CASE("inversion") {
  CHECK(format_word(kXy, invert(W(kXy, "xy"))) == "YX");
  CHECK(invert(Word()).empty());
  Alphabet abc("abc");
  CHECK(format_word(abc, invert(parse_word(abc, "aBc"))) == "CbA");
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_word(kAb, trial % 13, rng);
    CHECK(invert(invert(w)) == w);
    CHECK(invert(w).size() == w.size());
    CHECK(free_reduce(concat(w, invert(w))).empty());
  }
}

TEST_CASE("cyclic conjugates") {
  auto cc = cyclic_conjugates(W(kAb, "ab"));
  CHECK(cc.size() == 2);
  CHECK(std::count(cc.begin(), cc.end(), W(kAb, "ab")) == 1);
  CHECK(std::count(cc.begin(), cc.end(), W(kAb, "ba")) == 1);
  CHECK(cyclic_conjugates(W(kAb, "aa")).size() == 1);
  CHECK(cyclic_conjugates(Word()).size() == 1);
}

TEST_CASE("canonical letter order ranks generators before inverses") {
  CHECK(lex_less(kAb, W(kAb, "b"), W(kAb, "A")));
  CHECK(lex_less(kAb, W(kAb, "a"), W(kAb, "b")));
  CHECK(lex_less(kAb, W(kAb, "A"), W(kAb, "B")));
  CHECK(lex_less(kAb, W(kAb, "a"), W(kAb, "ab")));
}
