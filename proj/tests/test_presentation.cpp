#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "ball.hpp"
#include "oracle.hpp"
#include "presentation.hpp"

using namespace fillings;

namespace {
Word W(const Presentation& p, const char* text) { return parse_word(p.alphabet, text); }
} // namespace

TEST_CASE("relator closure of the commutator relator") {
  Presentation z2 = preset_presentation("z2");
  RelatorClosure c = RelatorClosure::of(z2);
  CHECK(c.words().size() == 8); // 4 rotations x 2 inverses
  CHECK(c.contains(W(z2, "abAB")));
  CHECK(c.contains(W(z2, "baBA")));
  CHECK(c.contains(W(z2, "aBAb")));
  CHECK(!c.contains(W(z2, "ab")));
}

TEST_CASE("relator closure edge cases") {
  Presentation free2 = preset_presentation("f2");
  CHECK(RelatorClosure::of(free2).words().empty());

  Presentation p;
  p.alphabet = Alphabet("a");
  p.relators.push_back(parse_word(p.alphabet, "aa"));
  RelatorClosure c = RelatorClosure::of(p);
  CHECK(c.words().size() == 2);
  CHECK(c.contains(parse_word(p.alphabet, "aa")));
  CHECK(c.contains(parse_word(p.alphabet, "AA")));
}

TEST_CASE("presentation file round-trip") {
  Presentation z2 = preset_presentation("z2");
  std::string text = format_presentation(z2);
  std::istringstream in(text);
  Presentation back = parse_presentation(in, "mem");
  CHECK(back.alphabet == z2.alphabet);
  CHECK(back.relators == z2.relators);
  std::istringstream bad("gens: a b\nrel: abq\n");
  CHECK_THROWS_AS(parse_presentation(bad, "mem"), Error);
}

TEST_CASE("fatten") {
  Presentation z1 = preset_presentation("z1");
  Presentation fat = fatten(z1);
  CHECK(fat.alphabet.size() == 2);
  REQUIRE(fat.relators.size() == 6); // 5 + |X|
  CHECK(format_word(fat.alphabet, fat.relators[0]) == "z");
  CHECK(format_word(fat.alphabet, fat.relators[1]) == "zz");
  CHECK(format_word(fat.alphabet, fat.relators[2]) == "zzz");
  CHECK(format_word(fat.alphabet, fat.relators[3]) == "zZ");
  CHECK(format_word(fat.alphabet, fat.relators[4]) == "zzZ");
  CHECK(format_word(fat.alphabet, fat.relators[5]) == "zaZA");
  CHECK_THROWS_AS(fatten(fat), Error);
  CHECK(fat.relators.size() == z1.relators.size() + 5 + 1);
}

TEST_CASE("oracle verdicts") {
  Presentation z2 = preset_presentation("z2");
  WordOracle expsum = WordOracle::exponent_sum(z2);
  CHECK(expsum.is_trivial(W(z2, "abAB")) == Verdict::Trivial);
  CHECK(expsum.is_trivial(W(z2, "ab")) == Verdict::Nontrivial);

  Presentation bs = preset_presentation("bs12");
  WordOracle bso = WordOracle::bs12_matrix(bs);
  CHECK(bso.is_trivial(W(bs, "BabAA")) == Verdict::Trivial);
  CHECK(bso.is_trivial(W(bs, "ab")) == Verdict::Nontrivial);
  CHECK(bso.is_trivial(W(bs, "ABAbaBab")) == Verdict::Trivial); // [a, a^b]

  Presentation h3 = preset_presentation("h3");
  WordOracle h3o = WordOracle::heisenberg_matrix(h3);
  CHECK(h3o.is_trivial(W(h3, "xyXYZ")) == Verdict::Trivial);
  CHECK(h3o.is_trivial(W(h3, "xyXY")) == Verdict::Nontrivial);
  CHECK(h3o.is_trivial(W(h3, "z")) == Verdict::Nontrivial);

  CHECK_THROWS_AS(WordOracle::exponent_sum(bs), Error);
  CHECK_THROWS_AS(expsum.is_trivial(parse_word(Alphabet("abc"), "c")), Error);
}

TEST_CASE("cayley balls") {
  Presentation f2 = preset_presentation("f2");
  CayleyBall bf = cayley_ball(f2, WordOracle::free_reduction(f2), 2);
  CHECK(bf.size() == 17); // 1 + 4 + 12

  Presentation z2 = preset_presentation("z2");
  WordOracle oz = WordOracle::exponent_sum(z2);
  CHECK(cayley_ball(z2, oz, 1).size() == 5);
  CayleyBall bz = cayley_ball(z2, oz, 2);
  CHECK(bz.size() == 13);

  // d(1,g) equals the canonical form's length, and the triangle inequality
  // holds for exact distances.
  for (int v = 0; v < bz.size(); ++v) CHECK(bz.distance(v) == bz.canonical(v).size());
  for (int g = 0; g < bz.size(); ++g)
    for (int h = 0; h < bz.size(); ++h) {
      auto d = bz.exact_distance(g, h);
      if (!d) continue;
      CHECK(*d <= bz.distance(g) + bz.distance(h));
    }
}

TEST_CASE("ball canonical forms are lexicographically least geodesics") {
  Presentation z2 = preset_presentation("z2");
  CayleyBall b = cayley_ball(z2, WordOracle::exponent_sum(z2), 2);
  // a*b and b*a are the same element; canonical form must be "ab".
  auto v = b.walk(0, W(z2, "ba"));
  REQUIRE(v);
  CHECK(format_word(z2.alphabet, b.canonical(*v)) == "ab");
}

TEST_CASE("pairwise-oracle ball agrees with fingerprint ball") {
  Presentation z2 = preset_presentation("z2");
  SearchBudget budget;
  budget.max_word_len = 10;
  CayleyBall via_search = cayley_ball(z2, WordOracle::bounded_search(z2, budget), 2);
  CayleyBall via_sum = cayley_ball(z2, WordOracle::exponent_sum(z2), 2);
  REQUIRE(via_search.size() == via_sum.size());
  for (int v = 0; v < via_search.size(); ++v)
    CHECK(via_search.canonical(v) == via_sum.canonical(v));
}

TEST_CASE("four point delta") {
  Presentation f2 = preset_presentation("f2");
  CHECK(four_point_delta(cayley_ball(f2, WordOracle::free_reduction(f2), 3)) == 0);
  Presentation z2 = preset_presentation("z2");
  CHECK(four_point_delta(cayley_ball(z2, WordOracle::exponent_sum(z2), 3)) >= 2);
  CHECK(four_point_delta(cayley_ball(z2, WordOracle::exponent_sum(z2), 0)) == 0);
}

TEST_CASE("l-delta") {
  Presentation f2 = preset_presentation("f2");
  CayleyBall bf = cayley_ball(f2, WordOracle::free_reduction(f2), 3);
  CHECK(l_delta_check(bf, 0));
  Presentation z2 = preset_presentation("z2");
  CayleyBall bz = cayley_ball(z2, WordOracle::exponent_sum(z2), 2);
  CHECK(l_delta_check(bz, 0));
  CHECK(l_delta_check(bz, 2 * bz.radius()));
}
