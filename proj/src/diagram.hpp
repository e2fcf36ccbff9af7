#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ball.hpp"
#include "presentation.hpp"

namespace fillings {

// A van Kampen diagram as a combinatorial map: darts (half-edges) with a
// twin involution and a counterclockwise rotation at each vertex. Edge e
// owns darts 2e and 2e+1. label(d) is read traversing d from its origin;
// twin labels are inverse. Faces are the orbits of d -> next(twin(d)); the
// face of a dart lies to its left, interior faces read counterclockwise,
// and one distinguished orbit is the outer face. Arcs and cut vertices
// (singular discs) are fine; Euler's formula is enforced.
class Diagram {
 public:
  struct Dart {
    int twin = -1;
    int next = -1; // ccw successor around the origin
    int origin = -1;
    Letter label = 0;
  };

  static Diagram single_vertex();
  // Takes raw map data; computes faces and the boundary, validates Euler.
  // outer_dart names a dart whose left face is the outer one. boundary_from
  // picks the base corner: a boundary position whose vertex is the base.
  static Diagram from_parts(std::vector<Dart> darts, int vertices, int base_vertex,
                            int outer_dart, int boundary_from = -1);

  int vertices() const { return vertices_; }
  int edges() const { return static_cast<int>(darts_.size()) / 2; }
  int area() const { return static_cast<int>(faces_.size()); }
  int base_vertex() const { return base_vertex_; }
  const std::vector<Dart>& darts() const { return darts_; }

  // Anticlockwise boundary circuit from the base corner; arcs appear twice.
  const std::vector<int>& boundary_darts() const { return boundary_; }
  Word boundary_word() const;
  int boundary_length() const { return static_cast<int>(boundary_.size()); }

  // Interior faces only; face_cycle(f) lists darts counterclockwise.
  const std::vector<std::vector<int>>& face_cycles() const { return faces_; }
  Word face_word(int f) const;
  // Interior face to the left of dart d, or -1 for the outer face.
  int face_left_of(int d) const { return face_of_[static_cast<size_t>(d)]; }

  bool on_boundary_vertex(int v) const { return boundary_vertex_[static_cast<size_t>(v)]; }

  // Every interior face word lies in the relator closure (any corner, either
  // orientation -- the closure is rotation- and inversion-closed).
  bool check(const Presentation& p) const;

  std::string serialize() const;
  static Diagram parse(const std::string& text);

  // 1-skeleton as an edge list multigraph (edge id = dart pair id).
  struct Skeleton {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
  };
  Skeleton skeleton() const;

  // Dual 1-skeleton: vertices 0..area-1 are interior faces, vertex `area`
  // is dual to the outer face; one dual edge per primal edge.
  struct Dual {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // indexed like primal edges
  };
  Dual dual() const;

 private:
  void finalize(int outer_dart, int boundary_from);

  std::vector<Dart> darts_;
  int vertices_ = 1;
  int base_vertex_ = 0;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_;
  std::vector<int> boundary_;
  std::vector<bool> boundary_vertex_;
};

struct DiagramMeasures {
  int area = 0;
  int idiam = 0;
  int rad = 0;
  int gl = 0;
};

DiagramMeasures measure(const Diagram& d);

// Extrinsic diameter: vertices are mapped to group elements by walking
// labels from the base vertex, distances through the ball's word metric.
// Fails with BallTooSmall if anything escapes the ball.
int ediam(const Diagram& d, const CayleyBall& ball);

// --- multigraph helpers -----------------------------------------------------

struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Number of spanning trees (Kirchhoff), exact.
long long count_spanning_trees(const Multigraph& g);
// Calls fn for each spanning tree (as an edge subset); stops early if fn
// returns false.
void enumerate_spanning_trees(const Multigraph& g,
                              const std::function<bool(const std::vector<char>&)>& fn);
// Diameter of the spanning tree given by `in_tree` (combinatorial metric).
int subtree_diameter(const Multigraph& g, const std::vector<char>& in_tree);
int graph_diameter(const Multigraph& g);
// Geodesic (BFS) spanning tree rooted at root; lowest parent index wins ties.
std::vector<char> geodesic_spanning_tree(const Multigraph& g, int root);
std::vector<int> bfs_distances(const Multigraph& g, int source);

// --- dual pairs of spanning trees -------------------------------------------

struct TreePair {
  std::vector<char> tree;      // primal edges in T
  std::vector<char> dual_tree; // complement, as dual edges (T*)
  int tree_diam = 0;
  int dual_diam = 0;
};

// T* = duals of the non-tree edges; asserts it is a spanning tree of the
// dual. Throws NotSpanning if `tree` is not a spanning tree.
TreePair tree_pair(const Diagram& d, const std::vector<char>& tree);

struct DglResult {
  int value = 0;
  bool exact = false;
  TreePair best;
  long long tree_count = 0;
};

enum class DglMode { Exact, Heuristic };

// min over spanning trees T of Diam(T) + Diam(T*). Exact mode enumerates
// (TooManyTrees beyond the cap); Heuristic takes BFS trees from every root
// plus edge-swap descent and reports an upper bound.
DglResult dgl(const Diagram& d, DglMode mode, long long tree_cap = 2000000);

// --- geometric construction helper -------------------------------------------

// Builds planar maps from vertex coordinates; rotations come from sorting
// dart departure angles (explicit angles override the segment direction,
// which is how curved arcs nest).
class PlanarBuilder {
 public:
  int add_vertex(double x, double y);
  int add_edge(int u, int v, Letter label);
  int add_edge_angles(int u, int v, Letter label, double angle_u, double angle_v);
  // outer_dart = 2*edge (+1 for the backward dart) whose left face is outer.
  Diagram finish(int outer_dart, int base_vertex, int boundary_from = -1);

 private:
  struct HalfSpec {
    int vertex;
    double angle;
  };
  std::vector<std::pair<double, double>> coords_;
  std::vector<Diagram::Dart> darts_;
  std::vector<HalfSpec> half_;
};

} // namespace fillings
