#include "combing.hpp"

#include <algorithm>

namespace fillings {

Word bs12_normal_form(const Word& w) {
  // letters over {a=1, b=2}; patterns tried leftmost, cancellations first
  struct Rule {
    Word from, to;
  };
  static const std::vector<Rule>& rules = *[] {
    Alphabet ab("ab");
    auto* rs = new std::vector<Rule>;
    auto add = [&](const char* f, const char* t) {
      rs->push_back(Rule{parse_word(ab, f), parse_word(ab, t)});
    };
    add("aA", "1");
    add("Aa", "1");
    add("bB", "1");
    add("Bb", "1");
    add("ab", "baa");
    add("Ab", "bAA");
    add("aaB", "Ba");
    add("AB", "aBA");
    return rs;
  }();
  Word cur = w;
  for (long guard = 0;; ++guard) {
    if (guard > 100000) fail(ErrorCode::Internal, "BS(1,2) rewriting did not terminate");
    bool applied = false;
    for (int i = 0; i < cur.size() && !applied; ++i) {
      for (const Rule& r : rules) {
        if (i + r.from.size() > cur.size()) continue;
        bool match = true;
        for (int j = 0; j < r.from.size(); ++j)
          if (cur[i + j] != r.from[j]) {
            match = false;
            break;
          }
        if (!match) continue;
        Word next = cur.subword(0, i);
        next.append(r.to);
        next.append(cur.subword(i + r.from.size(), cur.size()));
        cur = next;
        applied = true;
        break;
      }
    }
    if (!applied) return cur;
  }
}

bool is_bs12_normal(const Word& w) {
  int i = 0, n = w.size();
  // b^r (all b or all B)
  if (i < n && letter_index(w[i]) == 2) {
    Letter sign = w[i];
    while (i < n && w[i] == sign) ++i;
    if (sign == -2) {
      // after B^r, u must not start with b^-1 and cannot supply more b's:
      // only a^s may follow... or u-blocks starting with a.
    }
  }
  // u over {aB, B}, not starting with B
  bool first_block = true;
  while (i < n) {
    if (w[i] == 1 && i + 1 < n && w[i + 1] == -2) {
      i += 2;
      first_block = false;
      continue;
    }
    if (w[i] == -2 && !first_block) {
      ++i;
      continue;
    }
    break;
  }
  // a^s
  if (i < n) {
    Letter sign = w[i];
    if (letter_index(sign) != 1) return false;
    while (i < n && w[i] == sign) ++i;
  }
  return i == n;
}

Combing standard_combing(CombingKind kind, const CayleyBall& ball, const WordOracle& oracle) {
  Combing c;
  c.forms.resize(static_cast<size_t>(ball.size()));
  const Alphabet& a = ball.presentation().alphabet;
  for (int v = 0; v < ball.size(); ++v) {
    Word form;
    switch (kind) {
      case CombingKind::Geodesic: form = ball.canonical(v); break;
      case CombingKind::ExponentCollected: {
        std::vector<long> sums(static_cast<size_t>(a.size()), 0);
        const Word& g = ball.canonical(v);
        for (int i = 0; i < g.size(); ++i)
          sums[static_cast<size_t>(letter_index(g[i]) - 1)] += g[i] > 0 ? 1 : -1;
        for (int j = 0; j < a.size(); ++j) {
          long s = sums[static_cast<size_t>(j)];
          Word block = power(letters({static_cast<Letter>(j + 1)}), static_cast<int>(s));
          form.append(block);
        }
        break;
      }
      case CombingKind::Bs12NormalForm: {
        form = bs12_normal_form(ball.canonical(v));
        if (!is_bs12_normal(form))
          fail(ErrorCode::Internal, "rewriting left the normal-form language");
        break;
      }
    }
    if (oracle.is_trivial(free_reduce(concat(form, invert(ball.canonical(v))))) !=
        Verdict::Trivial)
      fail(ErrorCode::Internal, "normal form does not represent its element");
    c.forms[static_cast<size_t>(v)] = form;
  }
  return c;
}

namespace {

// Ball vertices along a combing path from the identity; BallTooSmall if the
// walk escapes.
std::vector<int> line_vertices(const CayleyBall& ball, const Word& form) {
  std::vector<int> out{0};
  int cur = 0;
  for (int i = 0; i < form.size(); ++i) {
    cur = ball.step(cur, form[i]);
    if (cur < 0) fail(ErrorCode::BallTooSmall, "combing path leaves the ball");
    out.push_back(cur);
  }
  return out;
}

int pair_distance(const CayleyBall& ball, int g, int h) {
  auto d = ball.exact_distance(g, h);
  if (!d) fail(ErrorCode::BallTooSmall, "distance query leaves the ball");
  return *d;
}

// Minimal over monotone reparametrizations of the max pointwise distance,
// with the optimal staircase path.
struct DpResult {
  int k;
  std::vector<std::pair<int, int>> path; // grid nodes from (0,0) to (|P|,|Q|)
};

DpResult fellow_dp(const CayleyBall& ball, const std::vector<int>& pv,
                   const std::vector<int>& qv) {
  int np = static_cast<int>(pv.size()), nq = static_cast<int>(qv.size());
  std::vector<std::vector<int>> cost(static_cast<size_t>(np),
                                     std::vector<int>(static_cast<size_t>(nq)));
  for (int s = 0; s < np; ++s)
    for (int t = 0; t < nq; ++t)
      cost[static_cast<size_t>(s)][static_cast<size_t>(t)] =
          pair_distance(ball, pv[static_cast<size_t>(s)], qv[static_cast<size_t>(t)]);
  std::vector<std::vector<int>> best(static_cast<size_t>(np),
                                     std::vector<int>(static_cast<size_t>(nq), 1 << 29));
  best[0][0] = cost[0][0];
  for (int s = 0; s < np; ++s)
    for (int t = 0; t < nq; ++t) {
      if (s == 0 && t == 0) continue;
      int incoming = 1 << 29;
      if (s > 0) incoming = std::min(incoming, best[static_cast<size_t>(s - 1)][static_cast<size_t>(t)]);
      if (t > 0) incoming = std::min(incoming, best[static_cast<size_t>(s)][static_cast<size_t>(t - 1)]);
      if (s > 0 && t > 0)
        incoming = std::min(incoming, best[static_cast<size_t>(s - 1)][static_cast<size_t>(t - 1)]);
      best[static_cast<size_t>(s)][static_cast<size_t>(t)] =
          std::max(incoming, cost[static_cast<size_t>(s)][static_cast<size_t>(t)]);
    }
  DpResult res;
  res.k = best[static_cast<size_t>(np - 1)][static_cast<size_t>(nq - 1)];
  int s = np - 1, t = nq - 1;
  std::vector<std::pair<int, int>> rev{{s, t}};
  while (s > 0 || t > 0) {
    int target = 1 << 29;
    int ns = s, nt = t;
    auto consider = [&](int cs, int ct) {
      if (cs < 0 || ct < 0) return;
      if (best[static_cast<size_t>(cs)][static_cast<size_t>(ct)] < target) {
        target = best[static_cast<size_t>(cs)][static_cast<size_t>(ct)];
        ns = cs;
        nt = ct;
      }
    };
    consider(s - 1, t - 1);
    consider(s - 1, t);
    consider(s, t - 1);
    s = ns;
    t = nt;
    rev.emplace_back(s, t);
  }
  std::reverse(rev.begin(), rev.end());
  res.path = std::move(rev);
  return res;
}

} // namespace

FellowTravel fellow_traveler_check(const Combing& c, const CayleyBall& ball, int within) {
  if (within < 0) within = ball.radius();
  FellowTravel ft;
  const Alphabet& a = ball.presentation().alphabet;
  for (int g = 0; g < ball.size(); ++g) {
    if (ball.distance(g) > within) continue;
    std::vector<int> pg = line_vertices(ball, c.of(g));
    for (int r = 0; r < a.size(); ++r) {
      Letter x = static_cast<Letter>(r + 1);
      int h = ball.step(g, x);
      if (h < 0 || ball.distance(h) > within) continue;
      std::vector<int> ph = line_vertices(ball, c.of(h));
      int worst = 0;
      int T = std::max(static_cast<int>(pg.size()), static_cast<int>(ph.size()));
      for (int t = 0; t < T; ++t) {
        int pv = pg[static_cast<size_t>(std::min<int>(t, static_cast<int>(pg.size()) - 1))];
        int qv = ph[static_cast<size_t>(std::min<int>(t, static_cast<int>(ph.size()) - 1))];
        worst = std::max(worst, pair_distance(ball, pv, qv));
      }
      ft.sync_k = std::max(ft.sync_k, worst);
      ft.async_k = std::max(ft.async_k, fellow_dp(ball, pg, ph).k);
    }
  }
  return ft;
}

int length_function(const Combing& c, const CayleyBall& ball, int n) {
  if (n > ball.radius()) fail(ErrorCode::BallTooSmall, "length function beyond the ball radius");
  int best = 0;
  for (int v = 0; v < ball.size(); ++v)
    if (ball.distance(v) <= n) best = std::max(best, c.of(v).size());
  return best;
}

Presentation derived_presentation(const WordOracle& oracle, int bound) {
  Presentation p;
  p.alphabet = oracle.presentation().alphabet;
  p.name = oracle.presentation().name + "-cells" + std::to_string(bound);
  std::vector<Word> stack{Word()};
  while (!stack.empty()) {
    Word u = stack.back();
    stack.pop_back();
    if (!u.empty() && oracle.is_trivial(u) == Verdict::Trivial) p.relators.push_back(u);
    if (u.size() < bound) {
      for (int r = 0; r < 2 * p.alphabet.size(); ++r) {
        Word nu = u;
        nu.push_back(p.alphabet.letter_of_rank(r));
        stack.push_back(nu);
      }
    }
  }
  std::sort(p.relators.begin(), p.relators.end());
  return p;
}

Cockleshell cockleshell(const Word& w, const Combing& c, const CayleyBall& ball,
                        const WordOracle& oracle) {
  if (oracle.is_trivial(w) != Verdict::Trivial)
    fail(ErrorCode::NotNullHomotopic, "cockleshell needs a null-homotopic word");
  Cockleshell out;
  int n = w.size();

  // Prefix elements and their combing lines.
  std::vector<int> prefix{0};
  for (int i = 0; i < n; ++i) {
    int to = ball.step(prefix.back(), w[i]);
    if (to < 0) fail(ErrorCode::BallTooSmall, "boundary prefix leaves the ball");
    prefix.push_back(to);
  }
  if (!c.of(0).empty()) fail(ErrorCode::Internal, "identity normal form is not empty");

  NullSequence ns;
  ns.start = w;
  Word cur = w;
  auto rung_word = [&](int gv, int hv) {
    Word t = free_reduce(concat(invert(ball.canonical(gv)), ball.canonical(hv)));
    auto id = ball.walk(0, t);
    if (!id) fail(ErrorCode::BallTooSmall, "rung element leaves the ball");
    return ball.canonical(*id);
  };
  auto emit_free_path = [&](int at, const Word& from, const Word& to) {
    // from ~ to freely: reduce down, then expand up, inside [at, at+|from|)
    Word u = from;
    while (true) {
      bool hit = false;
      for (int i = 0; i + 1 < u.size(); ++i)
        if (u[i] == inverse(u[i + 1])) {
          ns.moves.push_back(Move::free_reduce(at + i));
          u.erase(i, i + 2);
          hit = true;
          break;
        }
      if (!hit) break;
    }
    std::vector<std::pair<int, Letter>> up;
    Word v = to;
    while (true) {
      bool hit = false;
      for (int i = 0; i + 1 < v.size(); ++i)
        if (v[i] == inverse(v[i + 1])) {
          up.emplace_back(i, v[i]);
          v.erase(i, i + 2);
          hit = true;
          break;
        }
      if (!hit) break;
    }
    if (!(u == v)) fail(ErrorCode::Internal, "ladder step is not a free equality");
    for (auto it = up.rbegin(); it != up.rend(); ++it)
      ns.moves.push_back(Move::free_expand(at + it->first, it->second));
  };

  for (int j = 0; j < n; ++j) {
    const Word& sigma_from = c.of(prefix[static_cast<size_t>(j)]);
    const Word& sigma_to = c.of(prefix[static_cast<size_t>(j + 1)]);
    std::vector<int> pv = line_vertices(ball, sigma_from);
    std::vector<int> qv = line_vertices(ball, sigma_to);
    DpResult dp = fellow_dp(ball, pv, qv);
    out.rung_bound = std::max(out.rung_bound, dp.k);
    // Rungs along the staircase; the last rung is the boundary letter.
    int T = static_cast<int>(dp.path.size()) - 1;
    std::vector<Word> rung(static_cast<size_t>(T + 1));
    for (int t = 0; t <= T; ++t) {
      auto [s, q] = dp.path[static_cast<size_t>(t)];
      rung[static_cast<size_t>(t)] =
          t == T ? letters({w[j]})
                 : rung_word(pv[static_cast<size_t>(s)], qv[static_cast<size_t>(q)]);
    }
    // Invariant here: cur = sigma_from + w[j] + rest.
    for (int t = T; t >= 1; --t) {
      auto [s1, q1] = dp.path[static_cast<size_t>(t - 1)];
      auto [s2, q2] = dp.path[static_cast<size_t>(t)];
      Word x = sigma_from.subword(s1, s2);
      Word y = sigma_to.subword(q1, q2);
      Word u = concat(x, rung[static_cast<size_t>(t)]);
      Word v = concat(rung[static_cast<size_t>(t - 1)], y);
      if (u == v) continue;
      Word cell = concat(u, invert(v));
      int at = s1;
      if (free_reduce(cell).empty()) {
        emit_free_path(at, u, v);
      } else {
        ns.moves.push_back(Move::apply_relator(cell, at, u.size()));
        ++out.cells;
      }
      Word next = cur.subword(0, at);
      next.append(v);
      next.append(cur.subword(at + u.size(), cur.size()));
      cur = next;
    }
    // cur now reads sigma_to + rest
  }
  // cur reads the identity normal form = empty once every ladder is done.
  if (!cur.empty()) fail(ErrorCode::Internal, "ladders did not close the word");

  out.derived = derived_presentation(oracle, 2 * out.rung_bound + 2);
  out.sequence = ns;
  out.diagram = sequence_to_diagram(ns, out.derived);
  return out;
}

} // namespace fillings
