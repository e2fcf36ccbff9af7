#pragma once

#include "diagram.hpp"
#include "shelling.hpp"

namespace fillings {

// The dyadic-arc multigraphs: vertices 0..2^n on a line, path edges, and one
// nested arc over every dyadic interval of length >= 2. Realized as a
// diagram so the dual machinery applies.
struct GammaReport {
  Diagram diagram;
  int diam_graph = 0;
  int diam_dual = 0;
  int horizontal_diam = 0;      // = 2^n
  int horizontal_dual_diam = 0; // Diam(T_n^*)
  bool horizontal_dual_geodesic = false;
  TreePair searched;            // S_n from the heuristic search
  int searched_value = 0;       // Diam(S_n) + Diam(S_n^*)
};
GammaReport gamma_n(int n);

// Ternary trees: T_1 is an edge, T_n glues three copies of T_{n-1} at a
// leaf of each. Edge count 3^{n-1}.
Multigraph ternary_tree(int n);

// Minimal over edge-removal orders of the maximal front, where removing e
// meets 2 (both sides of e) plus every unswept edge sharing a vertex with
// it. Exhaustive subset DP; the lemma predicts >= n+1.
int ternary_sweep_width(int n);

// Fattened trees with a halving skirt. Delta_1 is a single cell; Delta_2 a
// 2-thick fattened tripod; Delta_3 a 3-thick fattened T_3, with concentric
// rings (each with half as many faces as the one inside) until the length
// drops to 8.
struct DeltaReport {
  Diagram diagram;
  DiagramMeasures measures;
  int boundary = 0;
  int fl_exact = -1;          // n <= 2, probe mode only
  int fl_lower_evidence = 0;  // largest L with a completed FL > L proof
  int fl_upper = 0;           // tree-pair constructive shelling
};
// With fl_probe the expensive filling-length work runs too: exhaustive
// shelling for n <= 2, the branch-and-bound infeasibility ladder for n = 3.
DeltaReport delta_n(int n, bool fl_probe = false);

// The fattened tree without its skirt (used for comparisons).
Diagram fat_tree_core(int n);
// A round-grid polyomino disc with the given number of cells.
Diagram round_grid_disc(int cells);

} // namespace fillings
