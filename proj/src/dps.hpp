#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "verdict.hpp"

namespace fillings {

class WordOracle;

// One rewriting move of the Dehn proof system.
//
// ApplyRelator carries the closure word c = u v^-1 together with the length
// of the matched prefix u: the move rewrites w = alpha u beta into
// alpha v beta. match_len 0 inserts v = c^-1 whole; match_len = |c| deletes
// an occurrence of c. The serialized form writes the match length
// explicitly; the spec'd line `R <closure-word> @<pos>` does not determine
// the split, so a missing length falls back to the maximal match.
struct Move {
  enum class Kind : uint8_t { FreeReduce, FreeExpand, ApplyRelator, CyclicShift };
  Kind kind = Kind::FreeReduce;
  int pos = 0;       // FreeReduce / FreeExpand / ApplyRelator
  Letter letter = 0; // FreeExpand: inserts letter letter^-1 at pos
  Word closure;      // ApplyRelator
  int match_len = 0; // ApplyRelator: |u|
  int offset = 0;    // CyclicShift: left rotation

  static Move free_reduce(int pos) { return Move{Kind::FreeReduce, pos, 0, Word(), 0, 0}; }
  static Move free_expand(int pos, Letter x) { return Move{Kind::FreeExpand, pos, x, Word(), 0, 0}; }
  static Move apply_relator(Word closure, int pos, int match_len) {
    Move m;
    m.kind = Kind::ApplyRelator;
    m.pos = pos;
    m.closure = std::move(closure);
    m.match_len = match_len;
    return m;
  }
  static Move cyclic_shift(int offset) { return Move{Kind::CyclicShift, 0, 0, Word(), 0, offset}; }
};

// A word plus a move log. When the replay ends at the empty word this is a
// null-sequence, the computational witness for Area/FL/FFL.
struct NullSequence {
  Word start;
  std::vector<Move> moves;
};

struct SearchBudget {
  int max_word_len = 12;
  long max_states = 2000000;
  long max_cost = 1000000; // cap on relator moves along a path
};

enum class ShiftPolicy { Forbid, Allow };

struct ReplayStats {
  int relator_count = 0;
  int max_len = 0;
};

struct ReplayResult {
  std::vector<Word> words; // w_0 .. w_m
  ReplayStats stats;
  bool valid = true;
  int first_bad_move = -1;
  std::string error;
  bool ends_empty() const { return valid && !words.empty() && words.back().empty(); }
};

// Validates every move against the move semantics and the relator closure.
ReplayResult replay(const NullSequence& ns, const Presentation& p,
                    ShiftPolicy shifts = ShiftPolicy::Forbid);

// Applies one move to w; returns nullopt (and an error message) if illegal.
std::optional<Word> apply_move(const Word& w, const Move& m, const RelatorClosure& closure,
                               ShiftPolicy shifts, std::string* error);

// Witness wire format, one move per line:
//   R <closure-word> @<pos> =<matchlen>
//   FR @<pos>
//   FE <letter> @<pos>
//   CS <offset>
// preceded by a `start <word>` line.
std::string serialize_witness(const NullSequence& ns, const Alphabet& a);
NullSequence parse_witness(const Alphabet& a, const std::string& text);

struct SearchOutcome {
  Verdict verdict = Verdict::Unknown; // Trivial: empty word reached
  long value = -1;                    // area or fl / ffl
  bool exact = false;                 // false: value is only an upper bound
  NullSequence witness;               // meaningful when verdict == Trivial
  long states = 0;
  bool evicted = false; // transposition table overflowed
  int length_cap = 0;
};

// Exact Area(w) as 0/1-cost shortest path in the state graph of words of
// length <= budget.max_word_len. Edges mirror shelling moves: free
// reduction/expansion at cost 0 and single-letter relator replacement
// (u of length 1, v the complement of the cell) at cost 1.
SearchOutcome area_search(const Word& w, const Presentation& p, const SearchBudget& b);

// Minimal L such that the empty word is reachable through words of length
// <= L; binary search on L over plain reachability.
SearchOutcome fl_search(const Word& w, const Presentation& p, const SearchBudget& b);

// As fl_search with 0-cost cyclic shifts allowed (base point forgotten).
SearchOutcome ffl_search(const Word& w, const Presentation& p, const SearchBudget& b);

// Canonicalizes the free-move segments of a sequence: each run of free
// moves between relator applications (or shifts) is replaced by the V-path
// through the freely reduced form -- reductions first, then the reversed
// reduction of the target. Never raises the length profile, never changes
// the relator count, and removes insert-then-cancel noise.
NullSequence simplify_null_sequence(const NullSequence& ns, const Presentation& p);

// Brute-force oracles used by the acceptance suite: plain breadth-first
// layers, no deque and no binary search. Independent of the paths above.
long brute_area(const Word& w, const Presentation& p, int max_word_len);
long brute_fl(const Word& w, const Presentation& p, int max_word_len, bool shifts = false);

// Dehn's algorithm: free-reduce, then repeatedly replace a subword u by the
// shorter v of a closure word u v^-1. Decision is Trivial when the empty
// word is reached, Nontrivial when stuck (sound for Dehn presentations).
struct DehnRun {
  Verdict decision = Verdict::Unknown;
  NullSequence log;
  Word final_word; // empty on success; the stuck word otherwise
  int replacements = 0;
};
DehnRun dehn_algorithm(const Word& w, const Presentation& p);

struct Ratio {
  long num = 1;
  long den = 1;
};

struct CoarseFillOutcome {
  bool feasible = false;
  int pieces = 0; // minimal count <= K
  NullSequence witness;
  long bound = 0; // piece length bound lambda*l(w) + L
};

// Coarse filling search: relator application generalized to insertion or
// deletion of any oracle-trivial word of length <= lambda*l(w) + L.
CoarseFillOutcome coarse_fill(const Word& w, const Presentation& p, const WordOracle& oracle,
                              Ratio lambda, long L, int K, const SearchBudget& b);

} // namespace fillings
