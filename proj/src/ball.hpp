#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "oracle.hpp"

namespace fillings {

// A radius-r ball in the Cayley graph. Vertex 0 is the identity; every
// vertex carries its canonical form, the lexicographically least among the
// shortest words representing it (letters ranked generators-first).
class CayleyBall {
 public:
  int radius() const { return radius_; }
  int size() const { return static_cast<int>(canon_.size()); }
  const Presentation& presentation() const { return pres_; }
  const Word& canonical(int v) const { return canon_[static_cast<size_t>(v)]; }
  int distance(int v) const { return dist_[static_cast<size_t>(v)]; } // d_X(1, v)

  // Neighbour along a letter edge, or -1 when it leaves the ball.
  int step(int v, Letter x) const {
    return steps_[static_cast<size_t>(v)][static_cast<size_t>(pres_.alphabet.rank(x))];
  }
  // Follows a word from v; nullopt when the walk leaves the ball.
  std::optional<int> walk(int v, const Word& w) const;

  // Exact word metric between ball elements, via d_X(g,h) = d(1, g^-1 h);
  // nullopt when the translate cannot be resolved inside the ball.
  std::optional<int> exact_distance(int g, int h) const;

  // Path distance inside the induced subgraph (may exceed d_X near the rim).
  int inball_distance(int g, int h) const { return inball_[static_cast<size_t>(g)][static_cast<size_t>(h)]; }

  // Undirected adjacency of the induced subgraph.
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

 private:
  friend CayleyBall cayley_ball(const Presentation&, const WordOracle&, int);
  Presentation pres_;
  int radius_ = 0;
  std::vector<Word> canon_;
  std::vector<int> dist_;
  std::vector<std::vector<int>> steps_; // [vertex][letter rank] -> vertex or -1
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> inball_;
};

// BFS ball construction. Element identity is resolved through the oracle
// (fingerprints when available, pairwise triviality tests of g1 g2^-1
// otherwise); any Unknown answer raises OracleIndecisive.
CayleyBall cayley_ball(const Presentation& p, const WordOracle& oracle, int radius);

// Minimal delta >= 0 such that every vertex 4-tuple satisfies the four-point
// condition under in-ball distances. With strict=true only 4-tuples whose
// pairwise in-ball distances equal the exact word metric are considered
// (rim truncation otherwise inflates delta).
long four_point_delta(const CayleyBall& ball, bool strict = false);

// Chatterji's L_delta property over the ball: every triple admits a t with
// max of the three defect sums at most delta.
bool l_delta_check(const CayleyBall& ball, long delta);

} // namespace fillings
