#include <doctest.h>

#include "bridges.hpp"
#include "oracle.hpp"

using namespace fillings;

namespace {

Word W(const Presentation& p, const char* text) { return parse_word(p.alphabet, text); }

SearchBudget budget(int len) {
  SearchBudget b;
  b.max_word_len = len;
  return b;
}

} // namespace

TEST_CASE("single relator move gives the one-cell diagram") {
  Presentation z2 = preset_presentation("z2");
  NullSequence ns;
  ns.start = W(z2, "abAB");
  ns.moves.push_back(Move::apply_relator(W(z2, "abAB"), 0, 4));
  Diagram d = sequence_to_diagram(ns, z2);
  CHECK(d.area() == 1);
  CHECK(d.edges() == 4);
  CHECK(d.vertices() == 4);
  CHECK(format_word(z2.alphabet, d.boundary_word()) == "abAB");
  CHECK(d.check(z2));
}

TEST_CASE("single free reduction gives the arc diagram") {
  Presentation f2 = preset_presentation("f2");
  NullSequence ns;
  ns.start = W(f2, "aA");
  ns.moves.push_back(Move::free_reduce(0));
  Diagram d = sequence_to_diagram(ns, f2);
  CHECK(d.area() == 0);
  CHECK(d.edges() == 1);
  CHECK(d.vertices() == 2);
  CHECK(format_word(f2.alphabet, d.boundary_word()) == "aA");
}

TEST_CASE("nested reductions give a tree diagram") {
  Presentation f2 = preset_presentation("f2");
  NullSequence ns;
  ns.start = W(f2, "abBA");
  ns.moves.push_back(Move::free_reduce(1));
  ns.moves.push_back(Move::free_reduce(0));
  Diagram d = sequence_to_diagram(ns, f2);
  CHECK(d.area() == 0);
  CHECK(d.edges() == 2);
  CHECK(format_word(f2.alphabet, d.boundary_word()) == "abBA");
}

TEST_CASE("area witness maps to a valid diagram") {
  Presentation z2 = preset_presentation("z2");
  Word w = W(z2, "aabbAABB");
  SearchOutcome out = area_search(w, z2, budget(12));
  REQUIRE(out.verdict == Verdict::Trivial);
  Diagram d = sequence_to_diagram(out.witness, z2);
  CHECK(d.boundary_word() == w);
  CHECK(d.check(z2));
  CHECK(d.area() <= out.value);
  CHECK(d.area() == 4); // optimal witness: area equals the relator count
}

TEST_CASE("fl witness maps to a diagram whose exact FL is at most the search value") {
  Presentation z2 = preset_presentation("z2");
  Word w = W(z2, "abAB");
  SearchOutcome out = fl_search(w, z2, budget(12));
  REQUIRE(out.verdict == Verdict::Trivial);
  Diagram d = sequence_to_diagram(out.witness, z2);
  CHECK(d.boundary_word() == w);
  CHECK(d.check(z2));
  ShellFlResult fl = shell_fl_exact(d);
  CHECK(fl.value <= out.value);
}

TEST_CASE("witnesses with free expansions still build") {
  Presentation z2 = preset_presentation("z2");
  NullSequence ns;
  ns.start = W(z2, "abAB");
  ns.moves.push_back(Move::free_expand(2, 1));                    // ab aA AB
  ns.moves.push_back(Move::free_reduce(2));                       // back
  ns.moves.push_back(Move::apply_relator(W(z2, "abAB"), 0, 4));
  Diagram d = sequence_to_diagram(ns, z2);
  CHECK(d.boundary_word() == ns.start);
  CHECK(d.check(z2));
  CHECK(d.area() == 1);
}

TEST_CASE("dehn algorithm logs build diagrams") {
  Presentation z2 = preset_presentation("z2");
  // Dehn-ized presentation: relators = null-homotopic words up to length 6.
  Presentation dz;
  dz.alphabet = z2.alphabet;
  WordOracle o = WordOracle::exponent_sum(z2);
  std::vector<Word> stack{Word()};
  while (!stack.empty()) {
    Word u = stack.back();
    stack.pop_back();
    if (!u.empty() && o.is_trivial(u) == Verdict::Trivial) dz.relators.push_back(u);
    if (u.size() < 6)
      for (int r = 0; r < 4; ++r) {
        Letter x = dz.alphabet.letter_of_rank(r);
        if (!u.empty() && u[u.size() - 1] == inverse(x)) continue;
        Word nu = u;
        nu.push_back(x);
        stack.push_back(nu);
      }
  }
  DehnRun run = dehn_algorithm(W(dz, "abAB"), dz);
  REQUIRE(run.decision == Verdict::Trivial);
  Diagram d = sequence_to_diagram(run.log, dz);
  CHECK(d.boundary_word() == W(dz, "abAB"));
  CHECK(d.check(dz));
}

TEST_CASE("diagram to sequence and back") {
  Presentation z2 = preset_presentation("z2");
  // the square via its own witness
  NullSequence ns;
  ns.start = W(z2, "abAB");
  ns.moves.push_back(Move::apply_relator(W(z2, "abAB"), 0, 4));
  Diagram d = sequence_to_diagram(ns, z2);

  ShellFlResult fl = shell_fl_exact(d);
  REQUIRE(fl.exact);
  NullSequence back = diagram_to_sequence(d, fl.witness);
  ReplayResult rep = replay(back, z2);
  REQUIRE(rep.valid);
  CHECK(rep.ends_empty());
  CHECK(rep.stats.relator_count == d.area());
  CHECK(rep.stats.max_len == fl.value);
  CHECK(rep.stats.max_len == 6);
}

TEST_CASE("empty word and single vertex") {
  Presentation z2 = preset_presentation("z2");
  NullSequence ns;
  Diagram d = sequence_to_diagram(ns, z2);
  CHECK(d.area() == 0);
  CHECK(d.vertices() == 1);
  NullSequence back = diagram_to_sequence(d, Shelling{});
  CHECK(back.start.empty());
}

TEST_CASE("invalid sequences are rejected") {
  Presentation f2 = preset_presentation("f2");
  NullSequence ns;
  ns.start = W(f2, "ab");
  CHECK_THROWS_AS(sequence_to_diagram(ns, f2), Error);
}
