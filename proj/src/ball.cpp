#include "ball.hpp"

#include <algorithm>
#include <deque>

namespace fillings {

std::optional<int> CayleyBall::walk(int v, const Word& w) const {
  int cur = v;
  for (int i = 0; i < w.size(); ++i) {
    cur = step(cur, w[i]);
    if (cur < 0) return std::nullopt;
  }
  return cur;
}

std::optional<int> CayleyBall::exact_distance(int g, int h) const {
  Word t = concat(invert(canonical(g)), canonical(h));
  // Free reduction can only help the walk stay inside the ball.
  auto v = walk(0, free_reduce(t));
  if (!v) return std::nullopt;
  return distance(*v);
}

CayleyBall cayley_ball(const Presentation& p, const WordOracle& oracle, int radius) {
  if (radius < 0) fail(ErrorCode::OutOfRange, "radius must be non-negative");
  CayleyBall ball;
  ball.pres_ = p;
  ball.radius_ = radius;

  const int m = p.alphabet.size();
  const bool fp = oracle.has_fingerprint();
  std::unordered_map<std::string, int> by_fp;
  auto oracle_equal = [&](const Word& u, const Word& v) {
    Verdict verdict = oracle.is_trivial(free_reduce(concat(u, invert(v))));
    if (verdict == Verdict::Unknown)
      fail(ErrorCode::OracleIndecisive, "oracle indecisive while canonicalizing the ball");
    return verdict == Verdict::Trivial;
  };
  // Finds an existing vertex equal to w, or -1.
  auto lookup = [&](const Word& w) -> int {
    if (fp) {
      auto it = by_fp.find(oracle.fingerprint(w));
      return it == by_fp.end() ? -1 : it->second;
    }
    for (int v = 0; v < static_cast<int>(ball.canon_.size()); ++v)
      if (oracle_equal(ball.canon_[static_cast<size_t>(v)], w)) return v;
    return -1;
  };
  auto add_vertex = [&](const Word& w, int d) {
    ball.canon_.push_back(w);
    ball.dist_.push_back(d);
    if (fp) by_fp.emplace(oracle.fingerprint(w), static_cast<int>(ball.canon_.size()) - 1);
    return static_cast<int>(ball.canon_.size()) - 1;
  };

  add_vertex(Word(), 0);
  // Shell by shell; canonical forms extend canonical forms, and scanning
  // parents in canonical order with letters in rank order yields the
  // lexicographically least shortest word for each new element.
  std::vector<int> shell{0};
  for (int d = 0; d < radius; ++d) {
    std::vector<int> next;
    for (int v : shell) {
      for (int r = 0; r < 2 * m; ++r) {
        Letter x = p.alphabet.letter_of_rank(r);
        Word w = ball.canon_[static_cast<size_t>(v)];
        w.push_back(x);
        if (lookup(w) < 0) next.push_back(add_vertex(w, d + 1));
      }
    }
    shell = std::move(next);
  }

  // Edges: (g, g*x) when both endpoints lie in the ball.
  int n = ball.size();
  ball.steps_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(2 * m), -1));
  ball.adj_.assign(static_cast<size_t>(n), {});
  for (int v = 0; v < n; ++v) {
    for (int r = 0; r < 2 * m; ++r) {
      Letter x = p.alphabet.letter_of_rank(r);
      Word w = ball.canon_[static_cast<size_t>(v)];
      w.push_back(x);
      int to = lookup(free_reduce(w));
      ball.steps_[static_cast<size_t>(v)][static_cast<size_t>(r)] = to;
      if (to >= 0 && x > 0) {
        ball.adj_[static_cast<size_t>(v)].push_back(to);
        ball.adj_[static_cast<size_t>(to)].push_back(v);
      }
    }
  }

  // All-pairs in-ball BFS distances.
  ball.inball_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& row = ball.inball_[static_cast<size_t>(s)];
    std::deque<int> q{s};
    row[static_cast<size_t>(s)] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int to : ball.adj_[static_cast<size_t>(v)]) {
        if (row[static_cast<size_t>(to)] < 0) {
          row[static_cast<size_t>(to)] = row[static_cast<size_t>(v)] + 1;
          q.push_back(to);
        }
      }
    }
  }
  return ball;
}

long four_point_delta(const CayleyBall& ball, bool strict) {
  int n = ball.size();
  std::vector<std::vector<bool>> usable;
  if (strict) {
    usable.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto exact = ball.exact_distance(i, j);
        usable[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            exact && *exact == ball.inball_distance(i, j);
      }
  }
  long delta = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        for (int w = z + 1; w < n; ++w) {
          int q[4] = {x, y, z, w};
          if (strict) {
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i)
              for (int j = i + 1; j < 4; ++j)
                if (!usable[static_cast<size_t>(q[i])][static_cast<size_t>(q[j])]) {
                  ok = false;
                  break;
                }
            if (!ok) continue;
          }
          long dxy = ball.inball_distance(q[0], q[1]), dzw = ball.inball_distance(q[2], q[3]);
          long dxz = ball.inball_distance(q[0], q[2]), dyw = ball.inball_distance(q[1], q[3]);
          long dxw = ball.inball_distance(q[0], q[3]), dyz = ball.inball_distance(q[1], q[2]);
          // The largest of the three pairings minus the middle one.
          long s1 = dxy + dzw, s2 = dxz + dyw, s3 = dxw + dyz;
          long hi = std::max({s1, s2, s3});
          long mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
          delta = std::max(delta, hi - mid);
        }
  return delta;
}

bool l_delta_check(const CayleyBall& ball, long delta) {
  int n = ball.size();
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      for (int z = y; z < n; ++z) {
        bool found = false;
        for (int t = 0; t < n && !found; ++t) {
          long d1 = ball.inball_distance(x, t) + ball.inball_distance(t, y) -
                    ball.inball_distance(x, y);
          long d2 = ball.inball_distance(y, t) + ball.inball_distance(t, z) -
                    ball.inball_distance(y, z);
          long d3 = ball.inball_distance(z, t) + ball.inball_distance(t, x) -
                    ball.inball_distance(z, x);
          if (std::max({d1, d2, d3}) <= delta) found = true;
        }
        if (!found) return false;
      }
  return true;
}

} // namespace fillings
