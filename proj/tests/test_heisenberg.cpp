#include <doctest.h>

#include "heisenberg.hpp"

using namespace fillings;

namespace {
Word W(const char* text) { return parse_word(h3_presentation().alphabet, text); }

bool represents_z_power(const Word& u, long s) {
  Word target = concat(u, power(W("Z"), static_cast<int>(s)));
  return h3_oracle().is_trivial(target) == Verdict::Trivial;
}
} // namespace

TEST_CASE("compression words") {
  CHECK(format_word(h3_presentation().alphabet, compression_word(16, 4)) == "XXXXYYYYxxxxyyyy");
  CHECK(format_word(h3_presentation().alphabet, compression_word(5, 2)) == "zXXYYxxyy");
  CHECK(compression_word(0, 3).empty());
  for (int n = 2; n <= 5; ++n)
    for (long s = 0; s <= 25; ++s) {
      Word u = compression_word(s, n);
      CHECK(represents_z_power(u, s));
      CHECK(u.size() <= 4 * n + 4 * n * ((s / (n * n)) + 1));
    }
}

TEST_CASE("compression sequences replay and land on u(s)") {
  for (auto [s, n] : std::vector<std::pair<long, int>>{{1, 2}, {4, 2}, {5, 2}, {16, 4}, {9, 3}}) {
    NullSequence ns = compress_sequence(s, n);
    ReplayResult rep = replay(ns, h3_presentation());
    REQUIRE(rep.valid);
    CHECK(rep.words.front() == power(W("z"), static_cast<int>(s)));
    CHECK(rep.words.back() == compression_word(s, n));
  }
  // s = 1, n = 2: u(1) = z, no moves needed
  CHECK(compress_sequence(1, 2).moves.empty());
  CHECK_THROWS_AS(compress_sequence(100, 2), Error);
}

TEST_CASE("compression cost fits K2 n^3 with one constant") {
  double worst = 0, best = 1e18;
  for (int n = 2; n <= 5; ++n) {
    long s = 4L * n * n;
    NullSequence ns = compress_sequence(s, n);
    ReplayResult rep = replay(ns, h3_presentation());
    REQUIRE(rep.valid);
    double ratio = static_cast<double>(rep.stats.relator_count) / (static_cast<double>(n) * n * n);
    worst = std::max(worst, ratio);
    best = std::min(best, ratio);
    // intermediate lengths stay within s plus a linear sliver
    CHECK(rep.stats.max_len <= static_cast<int>(s) + 12 * n);
  }
  CHECK(worst <= 4 * best); // a single K2 genuinely covers the range
}

TEST_CASE("h3_fill on a relator takes one move") {
  H3Fill f = h3_fill(W("xyXYZ"));
  CHECK(f.stats.relator_count == 1);
  ReplayResult rep = replay(f.seq, h3_presentation());
  REQUIRE(rep.valid);
  CHECK(rep.ends_empty());
}

TEST_CASE("h3_fill handles commutator words") {
  for (const char* text : {"xyXYZ", "xxyyXXYYZZZZ", "zxZX", "xyxyXYXYZZ", "xXyY"}) {
    Word w = W(text);
    if (h3_oracle().is_trivial(w) != Verdict::Trivial) continue;
    H3Fill f = h3_fill(w);
    ReplayResult rep = replay(f.seq, h3_presentation());
    REQUIRE(rep.valid);
    CHECK(rep.ends_empty());
    CHECK(rep.stats.relator_count == f.stats.relator_count);
    CHECK(rep.stats.max_len == f.stats.max_len);
  }
}

TEST_CASE("h3_fill length stays linear over the commutator family") {
  double worst = 0;
  for (int n = 2; n <= 4; ++n) {
    Word w = concat(invert(power(W("x"), n)), concat(invert(power(W("y"), n)), concat(power(W("x"), n), power(W("y"), n)))); // [x^n, y^n] = z^{n^2}
    w.append(power(W("Z"), n * n));
    REQUIRE(h3_oracle().is_trivial(w) == Verdict::Trivial);
    H3Fill f = h3_fill(w);
    ReplayResult rep = replay(f.seq, h3_presentation());
    REQUIRE(rep.valid);
    REQUIRE(rep.ends_empty());
    double len_ratio = static_cast<double>(f.stats.max_len) / w.size();
    worst = std::max(worst, len_ratio);
    double cubic = static_cast<double>(w.size());
    CHECK(f.stats.relator_count <= 8 * cubic * cubic * cubic);
  }
  CHECK(worst <= 12.0);
}

TEST_CASE("h3_fill rejects nontrivial words") {
  CHECK_THROWS_AS(h3_fill(W("z")), Error);
  CHECK_THROWS_AS(h3_fill(W("xy")), Error);
}

TEST_CASE("h3_fill area cross-check against exact search") {
  Word w = W("xyXYZ");
  H3Fill f = h3_fill(w);
  SearchBudget b;
  b.max_word_len = 9;
  SearchOutcome area = area_search(w, h3_presentation(), b);
  REQUIRE(area.verdict == Verdict::Trivial);
  CHECK(area.value <= f.stats.relator_count);
}
