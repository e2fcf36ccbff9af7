#include "heisenberg.hpp"

#include <algorithm>
#include <cassert>

namespace fillings {

namespace {

constexpr Letter kX = 1, kY = 2, kZ = 3;

struct H3Tables {
  Presentation pres;
  WordOracle oracle;
  RelatorClosure closure;
  H3Tables()
      : pres(preset_presentation("h3")),
        oracle(WordOracle::heisenberg_matrix(pres)),
        closure(RelatorClosure::of(pres)) {}
};

const H3Tables& tables() {
  static H3Tables t;
  return t;
}

// Builds a sequence move by move, validating every application.
struct SeqBuilder {
  NullSequence ns;
  Word cur;
  ReplayStats stats;

  explicit SeqBuilder(Word start) : cur(std::move(start)) {
    ns.start = cur;
    stats.max_len = cur.size();
  }
  void bump() { stats.max_len = std::max(stats.max_len, cur.size()); }
  void step(Move m) {
    std::string err;
    auto next = apply_move(cur, m, tables().closure, ShiftPolicy::Forbid, &err);
    if (!next) fail(ErrorCode::Internal, "h3 move failed: " + err);
    cur = *next;
    if (m.kind == Move::Kind::ApplyRelator) ++stats.relator_count;
    ns.moves.push_back(std::move(m));
    bump();
  }
  void fr(int pos) { step(Move::free_reduce(pos)); }
  void fe(int pos, Letter x) { step(Move::free_expand(pos, x)); }
  // Rewrites the |v|-complement: replaces the two letters at pos by v.
  void swap_to(int pos, const Word& v) {
    Word u = cur.subword(pos, pos + 2);
    Word c = concat(u, invert(v));
    if (!tables().closure.contains(c))
      fail(ErrorCode::Internal, "h3 rewrite is not a relator: " +
                                    format_word(tables().pres.alphabet, c));
    step(Move::apply_relator(c, pos, 2));
  }
};

// Two-letter rewrites used throughout; target words over {x,y,z}.
Word w_of(const char* t) { return parse_word(tables().pres.alphabet, t); }

// Commute a z one step right / a z^-1 one step left past the letter t.
Word z_right_target(Letter t) {
  Word v = letters({t, kZ});
  return v;
}
Word z_left_target(Letter t) {
  Word v = letters({static_cast<Letter>(-kZ), t});
  return v;
}

// The compressed block z^c [x^n, y^k] ([x^n, y^n])^B in right-style
// coordinates. absorb_ops() lists the moves that fold a full buffer
// z^n into the commutator; positions are relative to the block start at
// entry and remain valid because the ops never touch anything outside.
struct Absorber {
  int n;
  long c = 0, k = 0, blocks = 0;

  explicit Absorber(int scale) : n(scale) {}

  long value() const { return c + k * n + blocks * static_cast<long>(n) * n; }
  int struct_len() const {
    int comm = k > 0 ? 2 * n + 2 * static_cast<int>(k) : 0;
    return static_cast<int>(c) + comm + static_cast<int>(blocks) * 4 * n;
  }

  struct Op {
    enum class Kind { Fr, Fe, Swap } kind;
    int pos;
    Letter letter = 0; // Fe
    Word v;            // Swap target
  };

  bool full() const { return c == n; }

  // Requires a full buffer: z^n X^n Y^k x^n y^k -> X^n Y^{k+1} x^n y^{k+1}.
  std::vector<Op> absorb_ops() const {
    std::vector<Op> ops;
    int kk = static_cast<int>(k);
    if (kk == 0) {
      // conjure the empty commutator X^n x^n after the buffer
      for (int i = 0; i < n; ++i)
        ops.push_back(Op{Op::Kind::Fe, n + i, static_cast<Letter>(-kX), Word()});
    }
    // transiting y just before x^n
    ops.push_back(Op{Op::Kind::Fe, 2 * n + kk, static_cast<Letter>(-kY), Word()});
    const int P = 2 * n + kk + 1; // the transit pair (y, x) stays here
    for (int i = 0; i < n; ++i) {
      ops.push_back(Op{Op::Kind::Swap, P, 0, w_of("Zxy")}); // yx -> Zxy
      for (int q = P - 1; q >= n - i; --q) {
        // the byproduct walks left: (t, Z) -> (Z, t)
        ops.push_back(Op{Op::Kind::Swap, q, 0, Word()}); // v filled at apply time
      }
      ops.push_back(Op{Op::Kind::Fr, n - i - 1, 0, Word()});
    }
    return ops;
  }

  void finish_absorb() {
    c = 0;
    k += 1;
    if (k == n) {
      k = 0;
      blocks += 1;
    }
  }
};

// Applies absorber ops at a fixed base offset (right-style orientation).
void apply_ops_right(SeqBuilder& sb, const std::vector<Absorber::Op>& ops, int base) {
  for (const auto& op : ops) {
    switch (op.kind) {
      case Absorber::Op::Kind::Fr: sb.fr(base + op.pos); break;
      case Absorber::Op::Kind::Fe: sb.fe(base + op.pos, op.letter); break;
      case Absorber::Op::Kind::Swap: {
        Word v = op.v;
        if (v.empty()) {
          // left-walking byproduct: pair is (t, Z)
          Letter t = sb.cur[base + op.pos];
          v = z_left_target(t);
        }
        sb.swap_to(base + op.pos, v);
        break;
      }
    }
  }
}

// Mirror application: the left block L is the inverse of a virtual
// right-style word R; position p with span s in R is position m - p - s in
// L, where m tracks R's running length.
void apply_ops_left(SeqBuilder& sb, const std::vector<Absorber::Op>& ops, int m_entry) {
  int m = m_entry;
  for (const auto& op : ops) {
    switch (op.kind) {
      case Absorber::Op::Kind::Fr:
        sb.fr(m - op.pos - 2);
        m -= 2;
        break;
      case Absorber::Op::Kind::Fe:
        sb.fe(m - op.pos, op.letter);
        m += 2;
        break;
      case Absorber::Op::Kind::Swap: {
        int at = m - op.pos - 2;
        Word rv = op.v;
        if (rv.empty()) {
          // byproduct walk: in R the pair is (t, Z); L reads (z, t^-1)
          Letter t = inverse(sb.cur[at + 1]);
          rv = z_left_target(t);
        }
        sb.swap_to(at, invert(rv));
        m += 1;
        break;
      }
    }
  }
}

} // namespace

const Presentation& h3_presentation() { return tables().pres; }
const WordOracle& h3_oracle() { return tables().oracle; }

namespace {

// [u, v] in the notation-table sense u^-1 v^-1 u v; the absorption
// machinery reads z^n x^-n y^-k x^n y^k off the word directly.
Word paper_commutator(const Word& u, const Word& v) {
  Word out = invert(u);
  out.append(invert(v));
  out.append(u);
  out.append(v);
  return out;
}

} // namespace

Word compression_word(long s, int n) {
  if (s < 0 || n < 1) fail(ErrorCode::OutOfRange, "compression needs s >= 0, n >= 1");
  long nn = static_cast<long>(n) * n;
  long b = s / nn, a = s % nn;
  long a0 = a % n, a1 = a / n;
  Word xs = power(letters({kX}), n);
  Word out = power(letters({kZ}), static_cast<int>(a0));
  if (a1 > 0) out.append(paper_commutator(xs, power(letters({kY}), static_cast<int>(a1))));
  Word block = paper_commutator(xs, power(letters({kY}), n));
  for (long i = 0; i < b; ++i) out.append(block);
  return out;
}

NullSequence compress_sequence(long s, int n, long k1) {
  if (n < 1 || s < 0 || s > k1 * n * n)
    fail(ErrorCode::OutOfRange, "compression wants 0 <= s <= K1 n^2");
  SeqBuilder sb(power(letters({kZ}), static_cast<int>(s)));
  Absorber ab(n);
  long raw = s;
  while (raw > 0) {
    --raw;
    ++ab.c;
    if (ab.full()) {
      apply_ops_right(sb, ab.absorb_ops(), static_cast<int>(raw));
      ab.finish_absorb();
    }
  }
  if (!(sb.cur == compression_word(s, n)))
    fail(ErrorCode::Internal, "compression did not reach u(s)");
  return sb.ns;
}

H3Fill h3_fill(const Word& w) {
  const H3Tables& t = tables();
  if (t.oracle.is_trivial(w) != Verdict::Trivial)
    fail(ErrorCode::NotNullHomotopic, "h3_fill needs a null-homotopic word");

  // Fast path: one closure-word deletion plus free reduction.
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j) {
      Word u = w.subword(i, j);
      if (!t.closure.contains(u)) continue;
      SeqBuilder sb(w);
      sb.step(Move::apply_relator(u, i, u.size()));
      while (true) {
        bool hit = false;
        for (int p = 0; p + 1 < sb.cur.size(); ++p)
          if (sb.cur[p] == inverse(sb.cur[p + 1])) {
            sb.fr(p);
            hit = true;
            break;
          }
        if (!hit) break;
      }
      if (sb.cur.empty()) {
        H3Fill out;
        out.seq = sb.ns;
        out.stats = sb.stats;
        out.scale = 1;
        return out;
      }
    }

  const int n = std::max(2, w.size());
  SeqBuilder sb(w);
  Absorber right(n), left(n);
  auto left_len = [&] { return left.struct_len(); };
  auto right_len = [&] { return right.struct_len(); };

  while (true) {
    int lo = left_len(), hi = sb.cur.size() - right_len();
    bool act = false;
    for (int i = lo; i + 1 < hi && !act; ++i)
      if (sb.cur[i] == inverse(sb.cur[i + 1])) {
        sb.fr(i);
        act = true;
      }
    if (act) continue;
    // z letters travel right into the buffer
    for (int i = hi - 1; i >= lo && !act; --i) {
      if (sb.cur[i] != kZ) continue;
      if (i == hi - 1) {
        ++right.c;
        if (right.full()) {
          apply_ops_right(sb, right.absorb_ops(), i);
          right.finish_absorb();
        }
      } else {
        sb.swap_to(i, z_right_target(sb.cur[i + 1]));
      }
      act = true;
    }
    if (act) continue;
    // z^-1 letters travel left into the mirrored buffer
    for (int i = lo; i < hi && !act; ++i) {
      if (sb.cur[i] != -kZ) continue;
      if (i == lo) {
        ++left.c;
        if (left.full()) {
          apply_ops_left(sb, left.absorb_ops(), left.struct_len());
          left.finish_absorb();
        }
      } else {
        sb.swap_to(i - 1, z_left_target(sb.cur[i - 1]));
      }
      act = true;
    }
    if (act) continue;
    // leftmost out-of-order pair (y-type before x-type)
    for (int i = lo; i + 1 < hi && !act; ++i) {
      Letter p = sb.cur[i], q = sb.cur[i + 1];
      if (letter_index(p) != kY || letter_index(q) != kX) continue;
      if (p == kY && q == kX) {
        sb.swap_to(i, w_of("Zxy"));
      } else if (p == kY && q == -kX) {
        sb.swap_to(i, w_of("Xzy"));
      } else if (p == -kY && q == -kX) {
        sb.swap_to(i, w_of("XYZ"));
      } else {
        // Yx -> xYz via a z^-1 z detour
        sb.fe(i + 2, static_cast<Letter>(-kZ)); // Y x Z z
        sb.swap_to(i + 1, w_of("Zx"));          // Y Z x z
        sb.swap_to(i, w_of("xYX"));             // x Y X x z
        sb.fr(i + 2);                           // x Y z
      }
      act = true;
    }
    if (!act) break;
  }
  if (static_cast<int>(sb.cur.size()) != left_len() + right_len())
    fail(ErrorCode::Internal, "middle failed to sort away");
  if (left.value() != right.value())
    fail(ErrorCode::Internal, "unbalanced central letters in a trivial word");

  // cur = invert(W) W for the canonical compressed W: cancel inward.
  while (!sb.cur.empty()) {
    int mid = sb.cur.size() / 2;
    if (sb.cur[mid - 1] != inverse(sb.cur[mid]))
      fail(ErrorCode::Internal, "compressed halves do not cancel");
    sb.fr(mid - 1);
  }

  H3Fill out;
  out.seq = sb.ns;
  out.stats = sb.stats;
  out.scale = n;
  return out;
}

} // namespace fillings
