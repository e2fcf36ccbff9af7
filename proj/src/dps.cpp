#include "dps.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "oracle.hpp"

namespace fillings {

namespace {

int maximal_match(const Word& w, const Word& c, int pos) {
  int k = 0;
  while (k < c.size() && pos + k < w.size() && w[pos + k] == c[k]) ++k;
  return k;
}

} // namespace

// ---------------------------------------------------------------------------
// Move application and replay
// ---------------------------------------------------------------------------

std::optional<Word> apply_move(const Word& w, const Move& m, const RelatorClosure& closure,
                               ShiftPolicy shifts, std::string* error) {
  auto err = [&](const std::string& msg) -> std::optional<Word> {
    if (error) *error = msg;
    return std::nullopt;
  };
  switch (m.kind) {
    case Move::Kind::FreeReduce: {
      if (m.pos < 0 || m.pos + 2 > w.size()) return err("free reduction out of range");
      if (w[m.pos] != inverse(w[m.pos + 1])) return err("letters at position do not cancel");
      Word r = w;
      r.erase(m.pos, m.pos + 2);
      return r;
    }
    case Move::Kind::FreeExpand: {
      if (m.pos < 0 || m.pos > w.size()) return err("free expansion out of range");
      if (m.letter == 0) return err("free expansion needs a letter");
      Word r = w;
      Word pair = letters({m.letter, inverse(m.letter)});
      r.insert(m.pos, pair);
      return r;
    }
    case Move::Kind::ApplyRelator: {
      if (!closure.contains(m.closure)) return err("word is not in the relator closure");
      int k = m.match_len;
      if (k < 0) k = maximal_match(w, m.closure, m.pos);
      if (k > m.closure.size()) return err("match length exceeds closure word");
      if (m.pos < 0 || m.pos + k > w.size()) return err("relator application out of range");
      for (int i = 0; i < k; ++i)
        if (w[m.pos + i] != m.closure[i]) return err("matched prefix disagrees with the word");
      Word r = w.subword(0, m.pos);
      r.append(invert(m.closure.subword(k, m.closure.size())));
      r.append(w.subword(m.pos + k, w.size()));
      return r;
    }
    case Move::Kind::CyclicShift: {
      if (shifts == ShiftPolicy::Forbid) return err("cyclic shift not permitted outside FFL mode");
      return rotated(w, m.offset);
    }
  }
  return err("unknown move kind");
}

ReplayResult replay(const NullSequence& ns, const Presentation& p, ShiftPolicy shifts) {
  RelatorClosure closure = RelatorClosure::of(p);
  ReplayResult res;
  res.words.push_back(ns.start);
  res.stats.max_len = ns.start.size();
  Word cur = ns.start;
  for (size_t i = 0; i < ns.moves.size(); ++i) {
    std::string msg;
    auto next = apply_move(cur, ns.moves[i], closure, shifts, &msg);
    if (!next) {
      res.valid = false;
      res.first_bad_move = static_cast<int>(i);
      res.error = msg;
      return res;
    }
    cur = *next;
    res.words.push_back(cur);
    res.stats.max_len = std::max(res.stats.max_len, cur.size());
    if (ns.moves[i].kind == Move::Kind::ApplyRelator) ++res.stats.relator_count;
  }
  return res;
}

std::string serialize_witness(const NullSequence& ns, const Alphabet& a) {
  std::ostringstream out;
  out << "start " << format_word(a, ns.start) << '\n';
  for (const Move& m : ns.moves) {
    switch (m.kind) {
      case Move::Kind::FreeReduce: out << "FR @" << m.pos << '\n'; break;
      case Move::Kind::FreeExpand:
        out << "FE " << a.letter_char(m.letter) << " @" << m.pos << '\n';
        break;
      case Move::Kind::ApplyRelator:
        out << "R " << format_word(a, m.closure) << " @" << m.pos << " =" << m.match_len << '\n';
        break;
      case Move::Kind::CyclicShift: out << "CS " << m.offset << '\n'; break;
    }
  }
  return out.str();
}

NullSequence parse_witness(const Alphabet& a, const std::string& text) {
  NullSequence ns;
  std::istringstream in(text);
  std::string line;
  bool have_start = false;
  int lineno = 0;
  auto parse_pos = [&](const std::string& tok) {
    if (tok.size() < 2 || tok[0] != '@')
      fail(ErrorCode::Parse, "witness line " + std::to_string(lineno) + ": expected @<pos>");
    return std::stoi(tok.substr(1));
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "start") {
      std::string wtext;
      ls >> wtext;
      ns.start = parse_word(a, wtext);
      have_start = true;
    } else if (key == "FR") {
      std::string pos;
      ls >> pos;
      ns.moves.push_back(Move::free_reduce(parse_pos(pos)));
    } else if (key == "FE") {
      std::string lt, pos;
      ls >> lt >> pos;
      if (lt.size() != 1 || a.letter_of_char(lt[0]) == 0)
        fail(ErrorCode::Parse, "witness line " + std::to_string(lineno) + ": bad letter");
      ns.moves.push_back(Move::free_expand(parse_pos(pos), a.letter_of_char(lt[0])));
    } else if (key == "R") {
      std::string ctext, pos, match;
      ls >> ctext >> pos;
      int k = -1; // spec'd short form: fall back to the maximal match
      if (ls >> match) {
        if (match.size() < 2 || match[0] != '=')
          fail(ErrorCode::Parse, "witness line " + std::to_string(lineno) + ": expected =<len>");
        k = std::stoi(match.substr(1));
      }
      ns.moves.push_back(Move::apply_relator(parse_word(a, ctext), parse_pos(pos), k));
    } else if (key == "CS") {
      int off = 0;
      ls >> off;
      ns.moves.push_back(Move::cyclic_shift(off));
    } else {
      fail(ErrorCode::Parse,
           "witness line " + std::to_string(lineno) + ": unknown move '" + key + "'");
    }
  }
  if (!have_start) fail(ErrorCode::Parse, "witness has no start line");
  return ns;
}

// ---------------------------------------------------------------------------
// Search engine
//
// States are exact unreduced words, packed 5 bits per letter into 128 bits;
// exact searches are capped at 24 letters and 15 generators. Free moves are
// 0-cost edges. Relator application is restricted to the shelling mirror: a
// single matched letter replaced by the complement of the cell, so that the
// length profile of a search path is the boundary-length profile of some
// shelling. General matches remain legal in replay; they decompose into a
// mirror move plus free reductions without changing the relator count.
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxPackedLen = 24;
constexpr int kMaxPackedGens = 15;

struct Packed {
  uint64_t lo = 0, hi = 0;
  bool operator==(const Packed& o) const { return lo == o.lo && hi == o.hi; }
};

uint64_t letter_code(Letter x) {
  return static_cast<uint64_t>(2 * (letter_index(x) - 1) + (x < 0 ? 1 : 0) + 1);
}

Letter letter_of_code(uint64_t c) {
  Letter lt = static_cast<Letter>((c - 1) / 2 + 1);
  return ((c - 1) & 1) ? inverse(lt) : lt;
}

Packed pack(const Word& w) {
  Packed p;
  for (int i = 0; i < w.size(); ++i) {
    uint64_t code = letter_code(w[i]);
    if (i < 12)
      p.lo |= code << (5 * i);
    else
      p.hi |= code << (5 * (i - 12));
  }
  return p;
}

Word unpack(const Packed& p) {
  Word w;
  for (int i = 0; i < 12; ++i) {
    uint64_t c = (p.lo >> (5 * i)) & 31u;
    if (c == 0) return w;
    w.push_back(letter_of_code(c));
  }
  for (int i = 0; i < 12; ++i) {
    uint64_t c = (p.hi >> (5 * i)) & 31u;
    if (c == 0) return w;
    w.push_back(letter_of_code(c));
  }
  return w;
}

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t hash_packed(const Packed& p) { return mix64(p.lo ^ mix64(p.hi)); }

// kind(2) | pos(5) | aux(5) | idx(14) | preshift(5)
struct Via {
  uint32_t bits = 0;
  enum : uint32_t { FR = 0, FE = 1, AR = 2 };
  static uint32_t make(uint32_t kind, uint32_t pos, uint32_t aux, uint32_t idx, uint32_t pre) {
    return kind | (pos << 2) | (aux << 7) | (idx << 12) | (pre << 26);
  }
  uint32_t kind() const { return bits & 3u; }
  uint32_t pos() const { return (bits >> 2) & 31u; }
  uint32_t aux() const { return (bits >> 7) & 31u; }
  uint32_t idx() const { return (bits >> 12) & 16383u; }
  uint32_t pre() const { return (bits >> 26) & 31u; }
};

struct LogEntry {
  int32_t parent;
  uint32_t via;
  Packed key;
  int32_t cost;
};

class StateTable {
 public:
  explicit StateTable(long max_states) {
    size_t want = static_cast<size_t>(max_states + max_states / 2 + 16);
    cap_ = 1;
    while (cap_ < want) cap_ <<= 1;
    slots_.assign(cap_, Slot{});
    limit_ = static_cast<size_t>(max_states);
  }

  int32_t find(const Packed& key) const {
    size_t i = hash_packed(key) & (cap_ - 1);
    while (slots_[i].log >= 0) {
      if (slots_[i].key == key) return slots_[i].log;
      i = (i + 1) & (cap_ - 1);
    }
    return -1;
  }

  // Inserts or updates; returns false when at capacity.
  bool put(const Packed& key, int32_t log) {
    size_t i = hash_packed(key) & (cap_ - 1);
    while (slots_[i].log >= 0) {
      if (slots_[i].key == key) {
        slots_[i].log = log;
        return true;
      }
      i = (i + 1) & (cap_ - 1);
    }
    if (used_ >= limit_) return false;
    slots_[i] = Slot{key, log};
    ++used_;
    return true;
  }

  long used() const { return static_cast<long>(used_); }

 private:
  struct Slot {
    Packed key;
    int32_t log = -1;
  };
  std::vector<Slot> slots_;
  size_t cap_ = 0, used_ = 0, limit_ = 0;
};

struct EngineConfig {
  int alphabet_size = 0;
  int length_cap = 0;
  bool zero_one = false; // minimize relator moves (deque order); else plain BFS
  bool shifts = false;   // FFL: states canonicalized up to rotation
  long max_states = 0;
  long max_cost = 0;
  const RelatorClosure* closure = nullptr;
};

struct EngineResult {
  bool found = false;
  int32_t goal = -1;
  long cost = -1;
  long states = 0;
  bool budget_hit = false;
  std::vector<LogEntry> log;
};

int canonical_rotation_offset(const Word& w) {
  int n = w.size();
  int best = 0;
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      char a = w.raw()[static_cast<size_t>((best + i) % n)];
      char b = w.raw()[static_cast<size_t>((k + i) % n)];
      if (a != b) {
        if (b < a) best = k;
        break;
      }
    }
  }
  return best;
}

Word canonical_rotation(const Word& w, bool shifts) {
  if (!shifts || w.size() <= 1) return w;
  return rotated(w, canonical_rotation_offset(w));
}

EngineResult run_engine(const Word& start, const EngineConfig& cfg) {
  EngineResult res;
  StateTable table(cfg.max_states);
  std::deque<int32_t> queue;

  Word start_c = canonical_rotation(start, cfg.shifts);
  res.log.push_back(LogEntry{-1, 0, pack(start_c), 0});
  table.put(res.log[0].key, 0);
  queue.push_back(0);

  while (!queue.empty()) {
    int32_t cur = queue.front();
    queue.pop_front();
    const LogEntry entry = res.log[static_cast<size_t>(cur)];
    if (table.find(entry.key) != cur) continue; // superseded by a cheaper path
    Word w = unpack(entry.key);

    if (w.empty()) {
      res.found = true;
      res.goal = cur;
      res.cost = entry.cost;
      res.states = table.used();
      return res;
    }
    if (cfg.zero_one && cfg.max_cost > 0 && entry.cost >= cfg.max_cost) continue;

    auto push = [&](Word&& nw, uint32_t via, bool costly) -> bool {
      int32_t ncost = entry.cost + (costly ? 1 : 0);
      Packed key = pack(canonical_rotation(nw, cfg.shifts));
      int32_t existing = table.find(key);
      if (existing >= 0 &&
          (!cfg.zero_one || res.log[static_cast<size_t>(existing)].cost <= ncost))
        return true;
      res.log.push_back(LogEntry{cur, via, key, ncost});
      int32_t idx = static_cast<int32_t>(res.log.size() - 1);
      if (!table.put(key, idx)) {
        res.log.pop_back();
        res.budget_hit = true;
        return false;
      }
      if (cfg.zero_one && !costly)
        queue.push_front(idx);
      else
        queue.push_back(idx);
      return true;
    };

    bool ok = true;
    int pre_count = cfg.shifts ? w.size() : 1;
    for (int pre = 0; ok && pre < pre_count; ++pre) {
      Word base = pre == 0 ? w : rotated(w, pre);
      const int n = base.size();
      const uint32_t upre = static_cast<uint32_t>(pre);
      for (int i = 0; ok && i + 1 < n; ++i) {
        if (base[i] == inverse(base[i + 1])) {
          Word r = base;
          r.erase(i, i + 2);
          ok = push(std::move(r), Via::make(Via::FR, static_cast<uint32_t>(i), 0, 0, upre), false);
        }
      }
      if (n + 2 <= cfg.length_cap) {
        for (int i = 0; ok && i <= n; ++i) {
          for (uint32_t aux = 0; ok && aux < 2u * static_cast<uint32_t>(cfg.alphabet_size);
               ++aux) {
            Letter lt = letter_of_code(aux + 1);
            Word r = base;
            Word pair = letters({lt, inverse(lt)});
            r.insert(i, pair);
            ok = push(std::move(r), Via::make(Via::FE, static_cast<uint32_t>(i), aux, 0, upre),
                      false);
          }
        }
      }
      if (cfg.closure) {
        for (int i = 0; ok && i < n; ++i) {
          for (int ci : cfg.closure->starting_with(base[i])) {
            const Word& c = cfg.closure->words()[static_cast<size_t>(ci)];
            if (n + c.size() - 2 > cfg.length_cap) continue;
            Word r = base.subword(0, i);
            r.append(invert(c.subword(1, c.size())));
            r.append(base.subword(i + 1, base.size()));
            ok = push(std::move(r),
                      Via::make(Via::AR, static_cast<uint32_t>(i), 0, static_cast<uint32_t>(ci),
                                upre),
                      true);
            if (!ok) break;
          }
        }
      }
    }
    if (!ok) {
      res.states = table.used();
      return res;
    }
  }
  res.states = table.used();
  return res;
}

// Rebuilds the move list along the log chain ending at `goal`.
std::vector<Move> reconstruct_moves(const EngineResult& er, const EngineConfig& cfg,
                                    const Word& start) {
  std::vector<int32_t> chain;
  for (int32_t i = er.goal; i >= 0; i = er.log[static_cast<size_t>(i)].parent) chain.push_back(i);
  std::reverse(chain.begin(), chain.end());

  std::vector<Move> moves;
  Word w = canonical_rotation(start, cfg.shifts);
  if (cfg.shifts && !(w == start)) {
    int off = canonical_rotation_offset(start);
    moves.push_back(Move::cyclic_shift(off));
  }
  for (size_t s = 1; s < chain.size(); ++s) {
    Via v{er.log[static_cast<size_t>(chain[s])].via};
    if (cfg.shifts && v.pre() != 0) {
      moves.push_back(Move::cyclic_shift(static_cast<int>(v.pre())));
      w = rotated(w, static_cast<int>(v.pre()));
    }
    Word next;
    switch (v.kind()) {
      case Via::FR: {
        moves.push_back(Move::free_reduce(static_cast<int>(v.pos())));
        next = w;
        next.erase(static_cast<int>(v.pos()), static_cast<int>(v.pos()) + 2);
        break;
      }
      case Via::FE: {
        Letter lt = letter_of_code(v.aux() + 1);
        moves.push_back(Move::free_expand(static_cast<int>(v.pos()), lt));
        next = w;
        Word pair = letters({lt, inverse(lt)});
        next.insert(static_cast<int>(v.pos()), pair);
        break;
      }
      case Via::AR: {
        const Word& c = cfg.closure->words()[v.idx()];
        moves.push_back(Move::apply_relator(c, static_cast<int>(v.pos()), 1));
        next = w.subword(0, static_cast<int>(v.pos()));
        next.append(invert(c.subword(1, c.size())));
        next.append(w.subword(static_cast<int>(v.pos()) + 1, w.size()));
        break;
      }
    }
    if (cfg.shifts) {
      int off = canonical_rotation_offset(next);
      if (off != 0 && next.size() > 1) {
        Word canon = rotated(next, off);
        moves.push_back(Move::cyclic_shift(off));
        next = canon;
      }
    }
    w = next;
  }
  assert(w.empty());
  return moves;
}

void check_search_supported(const Word& w, const Presentation& p, const SearchBudget& b) {
  if (p.alphabet.size() > kMaxPackedGens)
    fail(ErrorCode::Unsupported, "exact searches support at most 15 generators");
  if (b.max_word_len > kMaxPackedLen)
    fail(ErrorCode::Unsupported, "exact searches support max-word-len up to 24");
  if (w.size() > b.max_word_len)
    fail(ErrorCode::OutOfRange, "word longer than the search length cap");
}

EngineConfig base_config(const Presentation& p, const RelatorClosure& closure,
                         const SearchBudget& b) {
  EngineConfig cfg;
  cfg.alphabet_size = p.alphabet.size();
  cfg.length_cap = b.max_word_len;
  cfg.max_states = b.max_states;
  cfg.max_cost = b.max_cost;
  cfg.closure = &closure;
  return cfg;
}

} // namespace

SearchOutcome area_search(const Word& w, const Presentation& p, const SearchBudget& b) {
  check_search_supported(w, p, b);
  RelatorClosure closure = RelatorClosure::of(p);
  EngineConfig cfg = base_config(p, closure, b);
  cfg.zero_one = true;

  SearchOutcome out;
  out.length_cap = b.max_word_len;
  EngineResult er = run_engine(w, cfg);
  out.states = er.states;
  out.evicted = er.budget_hit;
  if (er.found) {
    out.verdict = Verdict::Trivial;
    out.value = er.cost;
    out.exact = !er.budget_hit;
    out.witness.start = w;
    out.witness.moves = reconstruct_moves(er, cfg, w);
    out.witness = simplify_null_sequence(out.witness, p);
  } else {
    out.verdict = er.budget_hit ? Verdict::Unknown : Verdict::Nontrivial;
  }
  return out;
}

namespace {

SearchOutcome length_capped_search(const Word& w, const Presentation& p, const SearchBudget& b,
                                   bool shifts) {
  check_search_supported(w, p, b);
  SearchOutcome out;
  out.length_cap = b.max_word_len;
  if (w.empty()) {
    out.verdict = Verdict::Trivial;
    out.value = 0;
    out.exact = true;
    out.witness.start = w;
    return out;
  }
  RelatorClosure closure = RelatorClosure::of(p);

  auto reach = [&](int cap) {
    EngineConfig cfg = base_config(p, closure, b);
    cfg.length_cap = cap;
    cfg.shifts = shifts;
    cfg.max_cost = 0;
    return run_engine(w, cfg);
  };

  // fl >= l(w) always: w itself is in every sequence. Binary search on the
  // cap, with a galloping phase first so cheap small-cap runs do the bulk of
  // the work.
  bool all_decisive = true;
  int fail_cap = w.size() - 1, found_cap = -1;
  for (int step = 1; fail_cap < b.max_word_len; step *= 2) {
    int cap = std::min(fail_cap + step, b.max_word_len);
    EngineResult er = reach(cap);
    out.states = std::max(out.states, er.states);
    if (er.found) {
      found_cap = cap;
      break;
    }
    if (er.budget_hit) all_decisive = false;
    fail_cap = cap;
  }
  if (found_cap < 0) {
    out.verdict = all_decisive ? Verdict::Nontrivial : Verdict::Unknown;
    out.evicted = !all_decisive;
    return out;
  }
  int lo = fail_cap + 1, hi = found_cap;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    EngineResult er = reach(mid);
    out.states = std::max(out.states, er.states);
    if (er.found) {
      hi = mid;
    } else {
      if (er.budget_hit) all_decisive = false;
      lo = mid + 1;
    }
  }
  EngineResult fin = reach(lo);
  assert(fin.found);
  out.verdict = Verdict::Trivial;
  out.value = lo;
  out.exact = all_decisive && !fin.budget_hit;
  out.witness.start = w;
  EngineConfig cfg = base_config(p, closure, b);
  cfg.length_cap = lo;
  cfg.shifts = shifts;
  out.witness.moves = reconstruct_moves(fin, cfg, w);
  out.witness = simplify_null_sequence(out.witness, p);
  return out;
}

} // namespace

SearchOutcome fl_search(const Word& w, const Presentation& p, const SearchBudget& b) {
  return length_capped_search(w, p, b, false);
}

SearchOutcome ffl_search(const Word& w, const Presentation& p, const SearchBudget& b) {
  return length_capped_search(w, p, b, true);
}

NullSequence simplify_null_sequence(const NullSequence& ns, const Presentation& p) {
  ReplayResult rep = replay(ns, p, ShiftPolicy::Allow);
  if (!rep.valid) fail(ErrorCode::InvalidSequence, "cannot simplify an invalid sequence");

  NullSequence out;
  out.start = ns.start;
  // Leftmost reduction path: list of (position, letter) removed.
  auto reduction_path = [](Word w) {
    std::vector<std::pair<int, Letter>> path;
    bool hit = true;
    while (hit) {
      hit = false;
      for (int i = 0; i + 1 < w.size(); ++i)
        if (w[i] == inverse(w[i + 1])) {
          path.emplace_back(i, w[i]);
          w.erase(i, i + 2);
          hit = true;
          break;
        }
    }
    return path;
  };
  auto emit_segment = [&](const Word& from, const Word& to) {
    auto down = reduction_path(from);
    auto up = reduction_path(to);
    for (auto [pos, letter] : down) {
      (void)letter;
      out.moves.push_back(Move::free_reduce(pos));
    }
    for (auto it = up.rbegin(); it != up.rend(); ++it)
      out.moves.push_back(Move::free_expand(it->first, it->second));
  };

  size_t seg_start = 0; // index into rep.words of the segment head
  for (size_t i = 0; i < ns.moves.size(); ++i) {
    const Move& m = ns.moves[i];
    if (m.kind == Move::Kind::FreeReduce || m.kind == Move::Kind::FreeExpand) continue;
    emit_segment(rep.words[seg_start], rep.words[i]);
    out.moves.push_back(m);
    seg_start = i + 1;
  }
  emit_segment(rep.words[seg_start], rep.words[ns.moves.size()]);

  ReplayResult check = replay(out, p, ShiftPolicy::Allow);
  if (!check.valid || check.words.back() != rep.words.back() ||
      check.stats.relator_count != rep.stats.relator_count ||
      check.stats.max_len > rep.stats.max_len)
    fail(ErrorCode::Internal, "sequence simplification went wrong");
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force reference paths (acceptance oracles)
// ---------------------------------------------------------------------------

namespace {

// All words free-move-reachable from the seed layer within the length cap.
void free_saturate(std::unordered_set<Word, WordHash>& layer, int m, int cap) {
  std::vector<Word> stack(layer.begin(), layer.end());
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    for (int i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == inverse(w[i + 1])) {
        Word r = w;
        r.erase(i, i + 2);
        if (layer.insert(r).second) stack.push_back(r);
      }
    }
    if (w.size() + 2 <= cap) {
      for (int i = 0; i <= w.size(); ++i) {
        for (int g = 1; g <= m; ++g) {
          for (Letter lt : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
            Word r = w;
            Word pair = letters({lt, inverse(lt)});
            r.insert(i, pair);
            if (layer.insert(r).second) stack.push_back(r);
          }
        }
      }
    }
  }
}

} // namespace

long brute_area(const Word& w, const Presentation& p, int max_word_len) {
  if (w.size() > max_word_len) return -1;
  RelatorClosure closure = RelatorClosure::of(p);
  int m = p.alphabet.size();
  std::unordered_set<Word, WordHash> seen;
  std::unordered_set<Word, WordHash> layer{w};
  free_saturate(layer, m, max_word_len);
  for (long k = 0;; ++k) {
    if (layer.count(Word())) return k;
    std::unordered_set<Word, WordHash> next;
    for (const Word& u : layer) seen.insert(u);
    for (const Word& u : layer) {
      for (int i = 0; i < u.size(); ++i) {
        for (int ci : closure.starting_with(u[i])) {
          const Word& c = closure.words()[static_cast<size_t>(ci)];
          if (u.size() + c.size() - 2 > max_word_len) continue;
          Word r = u.subword(0, i);
          r.append(invert(c.subword(1, c.size())));
          r.append(u.subword(i + 1, u.size()));
          if (!seen.count(r)) next.insert(r);
        }
      }
    }
    if (next.empty()) return -1;
    free_saturate(next, m, max_word_len);
    for (const Word& u : seen)
      next.erase(u);
    if (next.empty()) return -1;
    layer = std::move(next);
  }
}

long brute_fl(const Word& w, const Presentation& p, int max_word_len, bool shifts) {
  if (w.empty()) return 0;
  RelatorClosure closure = RelatorClosure::of(p);
  int m = p.alphabet.size();
  for (int cap = w.size(); cap <= max_word_len; ++cap) {
    std::unordered_set<Word, WordHash> seen{w};
    std::deque<Word> queue{w};
    bool found = false;
    while (!queue.empty() && !found) {
      Word u = queue.front();
      queue.pop_front();
      if (u.empty()) {
        found = true;
        break;
      }
      std::vector<Word> nbrs;
      int rotations = shifts ? u.size() : 1;
      for (int pre = 0; pre < rotations; ++pre) {
        Word base = pre == 0 ? u : rotated(u, pre);
        if (shifts && pre > 0) nbrs.push_back(base);
        for (int i = 0; i + 1 < base.size(); ++i) {
          if (base[i] == inverse(base[i + 1])) {
            Word r = base;
            r.erase(i, i + 2);
            nbrs.push_back(r);
          }
        }
        if (base.size() + 2 <= cap) {
          for (int i = 0; i <= base.size(); ++i)
            for (int g = 1; g <= m; ++g)
              for (Letter lt : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
                Word r = base;
                Word pair = letters({lt, inverse(lt)});
                r.insert(i, pair);
                nbrs.push_back(r);
              }
        }
        for (int i = 0; i < base.size(); ++i) {
          for (int ci : closure.starting_with(base[i])) {
            const Word& c = closure.words()[static_cast<size_t>(ci)];
            if (base.size() + c.size() - 2 > cap) continue;
            Word r = base.subword(0, i);
            r.append(invert(c.subword(1, c.size())));
            r.append(base.subword(i + 1, base.size()));
            nbrs.push_back(r);
          }
        }
      }
      for (Word& r : nbrs) {
        if (r.empty()) {
          found = true;
          break;
        }
        if (seen.insert(r).second) queue.push_back(r);
      }
    }
    if (found) return cap;
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Dehn's algorithm
// ---------------------------------------------------------------------------

DehnRun dehn_algorithm(const Word& w, const Presentation& p) {
  RelatorClosure closure = RelatorClosure::of(p);
  DehnRun run;
  run.log.start = w;
  Word cur = w;
  auto reduce_fully = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i + 1 < cur.size(); ++i) {
        if (cur[i] == inverse(cur[i + 1])) {
          run.log.moves.push_back(Move::free_reduce(i));
          cur.erase(i, i + 2);
          changed = true;
          break;
        }
      }
    }
  };
  while (true) {
    reduce_fully();
    if (cur.empty()) {
      run.decision = Verdict::Trivial;
      run.final_word = cur;
      return run;
    }
    // Leftmost position, then longest matched prefix u with l(v) < l(u).
    bool applied = false;
    for (int i = 0; i < cur.size() && !applied; ++i) {
      for (const Word& c : closure.words()) {
        int most = maximal_match(cur, c, i);
        // need k > lambda - k, i.e. the matched part longer than the rest
        if (2 * most > c.size()) {
          run.log.moves.push_back(Move::apply_relator(c, i, most));
          Word v = invert(c.subword(most, c.size()));
          Word r = cur.subword(0, i);
          r.append(v);
          r.append(cur.subword(i + most, cur.size()));
          cur = r;
          ++run.replacements;
          applied = true;
          break;
        }
      }
    }
    if (!applied) {
      run.decision = Verdict::Nontrivial;
      run.final_word = cur;
      return run;
    }
  }
}

// ---------------------------------------------------------------------------
// Coarse filling (partitioning words, finite form)
// ---------------------------------------------------------------------------

namespace {

std::vector<Word> reduced_words_up_to(const Presentation& p, int len) {
  std::vector<Word> out;
  std::vector<Word> stack{Word()};
  while (!stack.empty()) {
    Word u = stack.back();
    stack.pop_back();
    out.push_back(u);
    if (u.size() < len) {
      for (int r = 2 * p.alphabet.size() - 1; r >= 0; --r) {
        Letter x = p.alphabet.letter_of_rank(r);
        if (!u.empty() && u[u.size() - 1] == inverse(x)) continue;
        Word nu = u;
        nu.push_back(x);
        stack.push_back(nu);
      }
    }
  }
  return out;
}

} // namespace

// States are freely reduced words; one piece move inserts gamma t gamma^-1
// (t oracle-trivial within the bound, gamma a tunnel into the insertion
// point) and reduces. Deleting a trivial subword Q is the gamma = empty,
// t = Q^-1 case, so deletions need no edges of their own. Piece count is
// insensitive to free moves, which makes this quotient exact as long as the
// unreduced intermediate gamma t gamma^-1 splice respects the length cap.
CoarseFillOutcome coarse_fill(const Word& w, const Presentation& p, const WordOracle& oracle,
                              Ratio lambda, long L, int K, const SearchBudget& b) {
  if (lambda.den <= 0 || lambda.num < 0 || lambda.num > lambda.den)
    fail(ErrorCode::OutOfRange, "lambda must lie in (0,1)");
  CoarseFillOutcome out;
  out.bound = (lambda.num * w.size()) / lambda.den + L;
  if (out.bound < 1) out.bound = 1;
  const int cap = std::max(b.max_word_len, w.size() + static_cast<int>(out.bound));

  std::vector<Word> pieces;
  for (const Word& t : reduced_words_up_to(p, static_cast<int>(out.bound))) {
    if (t.empty()) continue;
    Verdict v = oracle.is_trivial(t);
    if (v == Verdict::Unknown)
      fail(ErrorCode::OracleIndecisive, "oracle indecisive on a candidate piece");
    if (v == Verdict::Trivial) pieces.push_back(t);
  }
  std::vector<Word> tunnels = reduced_words_up_to(p, (cap - 1) / 2);

  struct Edge {
    int parent;
    int pos;
    int tunnel;
    int piece;
  };
  std::unordered_map<Word, int, WordHash> index;
  std::vector<Word> words;
  std::vector<Edge> via;
  std::vector<int> cost;
  auto intern = [&](const Word& u, Edge e, int c) {
    auto [it, fresh] = index.emplace(u, static_cast<int>(words.size()));
    if (!fresh) return -1;
    words.push_back(u);
    via.push_back(e);
    cost.push_back(c);
    return it->second;
  };

  Word start = free_reduce(w);
  intern(start, Edge{-1, 0, 0, 0}, 0);
  std::deque<int> queue{0};
  int goal = -1;
  while (!queue.empty() && goal < 0) {
    int cur = queue.front();
    queue.pop_front();
    Word u = words[static_cast<size_t>(cur)];
    if (u.empty()) {
      goal = cur;
      break;
    }
    if (cost[static_cast<size_t>(cur)] >= K) continue;
    if (static_cast<long>(words.size()) > b.max_states) break;
    for (size_t g = 0; g < tunnels.size(); ++g) {
      const Word& gamma = tunnels[g];
      for (size_t t = 0; t < pieces.size(); ++t) {
        int splice = u.size() + 2 * gamma.size() + pieces[t].size();
        if (splice > cap) continue;
        for (int i = 0; i <= u.size(); ++i) {
          Word v = u.subword(0, i);
          v.append(gamma);
          v.append(pieces[t]);
          v.append(invert(gamma));
          v.append(u.subword(i, u.size()));
          Word r = free_reduce(v);
          int id = intern(r, Edge{cur, i, static_cast<int>(g), static_cast<int>(t)},
                          cost[static_cast<size_t>(cur)] + 1);
          if (id >= 0) {
            if (r.empty()) {
              goal = id;
              break;
            }
            queue.push_back(id);
          }
        }
        if (goal >= 0) break;
      }
      if (goal >= 0) break;
    }
  }
  if (goal < 0) return out;

  out.feasible = true;
  out.pieces = cost[static_cast<size_t>(goal)];
  // Unfold the path into legal moves: expansions build the tunnel, one
  // relator move inserts the piece, reductions renormalize.
  std::vector<int> path;
  for (int v = goal; v >= 0; v = via[static_cast<size_t>(v)].parent) path.push_back(v);
  std::reverse(path.begin(), path.end());
  NullSequence ns;
  ns.start = w;
  Word cur = w;
  auto reduce_all = [&](Word u) {
    while (true) {
      bool hit = false;
      for (int i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == inverse(u[i + 1])) {
          ns.moves.push_back(Move::free_reduce(i));
          u.erase(i, i + 2);
          hit = true;
          break;
        }
      }
      if (!hit) return u;
    }
  };
  cur = reduce_all(cur);
  for (size_t s = 1; s < path.size(); ++s) {
    const Edge& e = via[static_cast<size_t>(path[s])];
    const Word& gamma = tunnels[static_cast<size_t>(e.tunnel)];
    const Word& piece = pieces[static_cast<size_t>(e.piece)];
    for (int i = 0; i < gamma.size(); ++i) {
      ns.moves.push_back(Move::free_expand(e.pos + i, gamma[i]));
      Word pair = letters({gamma[i], inverse(gamma[i])});
      cur.insert(e.pos + i, pair);
    }
    ns.moves.push_back(Move::apply_relator(invert(piece), e.pos + gamma.size(), 0));
    cur.insert(e.pos + gamma.size(), piece);
    cur = reduce_all(cur);
  }
  if (!cur.empty()) fail(ErrorCode::Internal, "coarse witness did not close");
  out.witness = std::move(ns);
  return out;
}

} // namespace fillings
