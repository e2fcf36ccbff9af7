#pragma once

#include <optional>
#include <vector>

#include "diagram.hpp"

namespace fillings {

// One shelling move. Collapses reference cells of the ambient diagram;
// 1-cell expansion cuts along an edge, duplicating it (the copy is tracked
// as a phantom spike in the replay).
struct ShellMove {
  enum class Kind { OneCellCollapse, OneCellExpand, TwoCellCollapse };
  Kind kind = Kind::OneCellCollapse;
  int face = -1; // TwoCellCollapse
  int edge = -1; // the collapsed / cut edge
};

using Shelling = std::vector<ShellMove>;

struct ShellCaps {
  int max_faces = 14;
  int max_edges = 60;
  long max_states = 4000000;
};

struct ShellFlResult {
  int value = 0;
  bool exact = false;
  Shelling witness; // populated in exact mode
};

// Exact FL(Delta) by branch-and-bound over collapse shellings with
// memoization; spikes whose free end is not the base are collapsed greedily
// (doing so never raises the profile). 1-cell expansions are not searched:
// the collapse-only value can in principle overestimate FL, which is the
// flagged restricted-expansion mode.
ShellFlResult shell_fl_exact(const Diagram& d, const ShellCaps& caps = {});

// Reachability variant: can the diagram be shelled keeping every boundary
// length <= cap? nullopt when the state budget trips.
std::optional<bool> shell_fl_at_most(const Diagram& d, int cap, const ShellCaps& caps = {});

// Constructive shelling of the FL-by-DGL theorem: follow the tree tour,
// shelling the 2-cells along each dual geodesic; returns its max boundary
// length, which satisfies Diam(T) + 2*lambda*Diam(T*) + l(boundary).
ShellFlResult shell_fl_upper(const Diagram& d, const TreePair& tp);

// Replays a shelling: validates the moves, returns the boundary words of
// every stage (w_0 = the boundary word of d, last = empty).
struct ShellReplay {
  bool valid = false;
  std::string error;
  int first_bad_move = -1;
  std::vector<Word> words;
  int max_len = 0;
  int two_cell_collapses = 0;
  // Per move: the position in the word before it and the boundary dart
  // involved (for the DPS bridge).
  std::vector<int> positions;
  std::vector<int> move_darts;
};
ShellReplay replay_shelling(const Diagram& d, const Shelling& s);

} // namespace fillings
