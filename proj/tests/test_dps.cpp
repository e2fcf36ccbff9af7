#include <doctest.h>

#include <cmath>

#include "dps.hpp"
#include "oracle.hpp"

using namespace fillings;

namespace {

Word W(const Presentation& p, const char* text) { return parse_word(p.alphabet, text); }

SearchBudget budget(int len) {
  SearchBudget b;
  b.max_word_len = len;
  return b;
}

// Dehn-ized Z^2: relators are all nonempty reduced null-homotopic words of
// length <= 6 (built by brute enumeration against exponent sums).
Presentation dehnized_z2() {
  Presentation z2 = preset_presentation("z2");
  WordOracle o = WordOracle::exponent_sum(z2);
  Presentation p;
  p.alphabet = z2.alphabet;
  p.name = "z2-dehn";
  std::vector<Word> stack{Word()};
  while (!stack.empty()) {
    Word u = stack.back();
    stack.pop_back();
    if (!u.empty() && o.is_trivial(u) == Verdict::Trivial) p.relators.push_back(u);
    if (u.size() < 6) {
      for (int r = 0; r < 4; ++r) {
        Letter x = p.alphabet.letter_of_rank(r);
        if (!u.empty() && u[u.size() - 1] == inverse(x)) continue;
        Word nu = u;
        nu.push_back(x);
        stack.push_back(nu);
      }
    }
  }
  return p;
}

} // namespace

TEST_CASE("replay validates the spec examples") {
  Presentation z2 = preset_presentation("z2");
  NullSequence ns;
  ns.start = W(z2, "abAB");
  ns.moves.push_back(Move::apply_relator(W(z2, "abAB"), 0, 4)); // delete whole relator
  ReplayResult r = replay(ns, z2);
  CHECK(r.valid);
  CHECK(r.ends_empty());
  CHECK(r.stats.relator_count == 1);
  CHECK(r.stats.max_len == 4);

  Presentation f1 = preset_presentation("f1");
  Presentation fx;
  fx.alphabet = Alphabet("xy");
  NullSequence ns2;
  ns2.start = parse_word(fx.alphabet, "xX");
  ns2.moves.push_back(Move::free_reduce(0));
  ReplayResult r2 = replay(ns2, fx);
  CHECK(r2.valid);
  CHECK(r2.ends_empty());
  CHECK(r2.stats.relator_count == 0);
  CHECK(r2.stats.max_len == 2);

  Presentation f2 = preset_presentation("f2");
  NullSequence bad;
  bad.start = W(f2, "abAB");
  bad.moves.push_back(Move::apply_relator(W(f2, "abAB"), 0, 4));
  ReplayResult r3 = replay(bad, f2);
  CHECK(!r3.valid);
  CHECK(r3.first_bad_move == 0);
}

TEST_CASE("witness serialization round-trips through replay") {
  Presentation z2 = preset_presentation("z2");
  SearchOutcome out = area_search(W(z2, "aabbAABB"), z2, budget(12));
  REQUIRE(out.verdict == Verdict::Trivial);
  std::string text = serialize_witness(out.witness, z2.alphabet);
  NullSequence back = parse_witness(z2.alphabet, text);
  ReplayResult a = replay(out.witness, z2);
  ReplayResult b = replay(back, z2);
  REQUIRE(a.valid);
  REQUIRE(b.valid);
  CHECK(a.words == b.words);
  CHECK(serialize_witness(back, z2.alphabet) == text);
}

TEST_CASE("area search on the spec examples") {
  Presentation z2 = preset_presentation("z2");
  SearchOutcome a1 = area_search(W(z2, "abAB"), z2, budget(12));
  CHECK(a1.verdict == Verdict::Trivial);
  CHECK(a1.value == 1);
  CHECK(a1.exact);

  Presentation f2 = preset_presentation("f2");
  SearchOutcome a2 = area_search(W(f2, "aA"), f2, budget(8));
  CHECK(a2.value == 0);

  SearchOutcome a3 = area_search(W(z2, "aabbAABB"), z2, budget(12));
  CHECK(a3.value == 4);
  ReplayResult r = replay(a3.witness, z2);
  CHECK(r.ends_empty());
  CHECK(r.stats.relator_count == 4);

  Presentation bs = preset_presentation("bs12");
  SearchOutcome a4 = area_search(W(bs, "ABAbaBab"), bs, budget(12));
  CHECK(a4.value == 2);
  CHECK(a4.exact);
}

TEST_CASE("fl search on the spec examples") {
  Presentation f2 = preset_presentation("f2");
  Presentation fx;
  fx.alphabet = Alphabet("xy");
  SearchOutcome f1 = fl_search(parse_word(fx.alphabet, "xyYX"), fx, budget(10));
  CHECK(f1.value == 4);

  Presentation z2 = preset_presentation("z2");
  SearchOutcome f2o = fl_search(W(z2, "abAB"), z2, budget(12));
  CHECK(f2o.value == 6);
  CHECK(f2o.exact);
  ReplayResult r = replay(f2o.witness, z2);
  REQUIRE(r.valid);
  CHECK(r.ends_empty());
  CHECK(r.stats.max_len == 6);

  SearchOutcome fe = fl_search(Word(), z2, budget(12));
  CHECK(fe.value == 0);
}

TEST_CASE("ffl search") {
  Presentation z2 = preset_presentation("z2");
  SearchOutcome f = ffl_search(W(z2, "abAB"), z2, budget(12));
  CHECK(f.value == 6);
  ReplayResult r = replay(f.witness, z2, ShiftPolicy::Allow);
  REQUIRE(r.valid);
  CHECK(r.ends_empty());
  CHECK(r.stats.max_len == 6);

  // FFL <= FL for a sample of null-homotopic words.
  for (const char* text : {"abAB", "aabAbAA", "abABabAB"}) {
    Word w = W(z2, text);
    if (WordOracle::exponent_sum(z2).is_trivial(w) != Verdict::Trivial) continue;
    SearchOutcome fl = fl_search(w, z2, budget(12));
    SearchOutcome ffl = ffl_search(w, z2, budget(12));
    REQUIRE(fl.verdict == Verdict::Trivial);
    REQUIRE(ffl.verdict == Verdict::Trivial);
    CHECK(ffl.value <= fl.value);
  }
}

TEST_CASE("search results are non-increasing in the length budget") {
  Presentation z2 = preset_presentation("z2");
  Word w = W(z2, "aabbAABB");
  SearchOutcome small_a = area_search(w, z2, budget(10));
  SearchOutcome big_a = area_search(w, z2, budget(12));
  REQUIRE(small_a.verdict == Verdict::Trivial);
  REQUIRE(big_a.verdict == Verdict::Trivial);
  CHECK(big_a.value <= small_a.value);
  SearchOutcome small_f = fl_search(w, z2, budget(10));
  SearchOutcome big_f = fl_search(w, z2, budget(12));
  CHECK(big_f.value <= small_f.value);
}

TEST_CASE("brute-force reference agrees on small words") {
  Presentation z2 = preset_presentation("z2");
  CHECK(brute_area(W(z2, "abAB"), z2, 10) == 1);
  CHECK(brute_area(W(z2, "aabbAABB"), z2, 12) == 4);
  CHECK(brute_fl(W(z2, "abAB"), z2, 10) == 6);
}

TEST_CASE("dehn algorithm") {
  Presentation f2 = preset_presentation("f2");
  DehnRun r1 = dehn_algorithm(parse_word(f2.alphabet, "abBA"), f2);
  CHECK(r1.decision == Verdict::Trivial);
  CHECK(r1.replacements == 0);
  CHECK(r1.log.moves.size() == 2);
  CHECK(replay(r1.log, f2).ends_empty());

  Presentation dz = dehnized_z2();
  DehnRun r2 = dehn_algorithm(parse_word(dz.alphabet, "abAB"), dz);
  CHECK(r2.decision == Verdict::Trivial);
  CHECK(r2.replacements == 1);
  CHECK(replay(r2.log, dz).ends_empty());

  DehnRun r3 = dehn_algorithm(parse_word(dz.alphabet, "ab"), dz);
  CHECK(r3.decision == Verdict::Nontrivial);
  CHECK(format_word(dz.alphabet, r3.final_word) == "ab");
}

TEST_CASE("chain inequalities on sampled null words") {
  Presentation z2 = preset_presentation("z2");
  int B = z2.max_relator_length();
  long K = z2.space_time_base();
  for (const char* text : {"abAB", "aabbAABB", "abABbaBA", "aabAbAA"}) {
    Word w = W(z2, text);
    if (WordOracle::exponent_sum(z2).is_trivial(w) != Verdict::Trivial) continue;
    SearchOutcome area = area_search(w, z2, budget(12));
    SearchOutcome fl = fl_search(w, z2, budget(12));
    REQUIRE(area.verdict == Verdict::Trivial);
    REQUIRE(fl.verdict == Verdict::Trivial);
    CHECK(w.size() <= fl.value);
    CHECK(fl.value <= B * area.value + w.size());
    double bound = std::pow(static_cast<double>(K), static_cast<double>(fl.value));
    CHECK(static_cast<double>(area.value) <= bound);
  }
}

TEST_CASE("coarse fill") {
  Presentation z2 = preset_presentation("z2");
  WordOracle o = WordOracle::exponent_sum(z2);
  CoarseFillOutcome c1 = coarse_fill(W(z2, "abAB"), z2, o, Ratio{1, 2}, 4, 3, budget(14));
  REQUIRE(c1.feasible);
  CHECK(c1.pieces == 1);

  Presentation f2 = preset_presentation("f2");
  WordOracle of = WordOracle::free_reduction(f2);
  CoarseFillOutcome c2 = coarse_fill(W(f2, "abBA"), f2, of, Ratio{1, 2}, 4, 3, budget(12));
  REQUIRE(c2.feasible);
  CHECK(c2.pieces == 0);

  CoarseFillOutcome c3 = coarse_fill(W(z2, "aabbAABB"), z2, o, Ratio{1, 2}, 2, 8, budget(16));
  REQUIRE(c3.feasible);
  CHECK(c3.pieces <= 4);
  // The witness replays under the generalized cell rule.
  auto is_cell = [&](const Word& u) {
    return u.size() <= c3.bound && o.is_trivial(u) == Verdict::Trivial;
  };
  ReplayResult r = replay_generalized(c3.witness, is_cell, ShiftPolicy::Forbid);
  REQUIRE(r.valid);
  CHECK(r.ends_empty());
  CHECK(r.stats.relator_count == c3.pieces);
}
