#include "families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace fillings {

namespace {

// Polyomino diagrams on the unit grid: horizontal edges 'a', vertical 'b'.
Diagram polyomino(const std::set<std::pair<int, int>>& cells) {
  if (cells.empty()) fail(ErrorCode::Internal, "empty polyomino");
  PlanarBuilder b;
  std::map<std::pair<int, int>, int> corner;
  auto vertex = [&](int x, int y) {
    auto [it, fresh] = corner.emplace(std::make_pair(x, y), -1);
    if (fresh) it->second = b.add_vertex(x, y);
    return it->second;
  };
  auto has = [&](int x, int y) { return cells.count({x, y}) != 0; };
  int outer_edge = -1;
  int base = -1;
  // horizontal edges: between (x,y)-(x+1,y) when a cell above or below
  for (auto [x, y] : cells) {
    (void)x;
    (void)y;
  }
  std::set<std::pair<std::pair<int, int>, char>> seen;
  for (auto [cx, cy] : cells) {
    for (int y = cy; y <= cy + 1; ++y) {
      if (seen.insert({{cx, y}, 'h'}).second) {
        int e = b.add_edge(vertex(cx, y), vertex(cx + 1, y), 1);
        if (outer_edge < 0 && y == cy && !has(cx, cy - 1)) {
          // bottom edge of a lowest cell: outer face below
          bool lowest = true;
          for (auto [ox, oy] : cells)
            if (oy < cy || (oy == cy && ox < cx)) lowest = false;
          if (lowest) {
            outer_edge = e;
            base = vertex(cx, y);
          }
        }
      }
    }
    for (int x = cx; x <= cx + 1; ++x)
      if (seen.insert({{x, cy}, 'v'}).second)
        b.add_edge(vertex(x, cy), vertex(x, cy + 1), 2);
  }
  if (outer_edge < 0) fail(ErrorCode::Internal, "no boundary edge found");
  return b.finish(2 * outer_edge + 1, base);
}

std::set<std::pair<int, int>> block(int x0, int y0, int x1, int y1) {
  std::set<std::pair<int, int>> out;
  for (int x = x0; x < x1; ++x)
    for (int y = y0; y < y1; ++y) out.insert({x, y});
  return out;
}

void add_all(std::set<std::pair<int, int>>& into, const std::set<std::pair<int, int>>& from) {
  into.insert(from.begin(), from.end());
}

// One halving ring outside the boundary: ceil(L/2) new faces, new circle of
// the same count. Radials run bottom-to-top, the new circle reads 'a'.
Diagram attach_ring(const Diagram& d) {
  const auto& B = d.boundary_darts();
  int L = static_cast<int>(B.size());
  if (L < 4) fail(ErrorCode::Internal, "boundary too short for a ring");
  int Q = (L + 1) / 2;
  std::vector<Diagram::Dart> darts = d.darts();
  int nv = d.vertices();
  auto origin_of = [&](int dart) { return darts[static_cast<size_t>(dart)].origin; };
  // new vertices r_0..r_{Q-1}
  std::vector<int> ring(static_cast<size_t>(Q));
  for (int i = 0; i < Q; ++i) ring[static_cast<size_t>(i)] = nv++;
  auto new_edge = [&](int u, int v, Letter lt) {
    int id = static_cast<int>(darts.size());
    darts.push_back(Diagram::Dart{id + 1, -1, u, lt});
    darts.push_back(Diagram::Dart{id, -1, v, inverse(lt)});
    return id;
  };
  std::vector<int> up(static_cast<size_t>(Q)), top(static_cast<size_t>(Q));
  for (int i = 0; i < Q; ++i)
    up[static_cast<size_t>(i)] = new_edge(origin_of(B[static_cast<size_t>(2 * i)]),
                                          ring[static_cast<size_t>(i)], 2);
  for (int i = 0; i < Q; ++i)
    top[static_cast<size_t>(i)] =
        new_edge(ring[static_cast<size_t>(i)], ring[static_cast<size_t>((i + 1) % Q)], 1);
  // rotations: u_i sits in the outer gap between twin(B[2i-1]) and B[2i]
  for (int i = 0; i < Q; ++i) {
    int bj = B[static_cast<size_t>(2 * i)];
    int prev_twin = darts[static_cast<size_t>(B[static_cast<size_t>((2 * i + L - 1) % L)])].twin;
    if (darts[static_cast<size_t>(prev_twin)].next != bj)
      fail(ErrorCode::Internal, "outer gap is not where expected");
    darts[static_cast<size_t>(prev_twin)].next = up[static_cast<size_t>(i)];
    darts[static_cast<size_t>(up[static_cast<size_t>(i)])].next = bj;
  }
  // ring vertex rotation: twin(t_{i-1}) -> t_i -> down_i -> back
  for (int i = 0; i < Q; ++i) {
    int tin = darts[static_cast<size_t>(top[static_cast<size_t>((i + Q - 1) % Q)])].twin;
    int tout = top[static_cast<size_t>(i)];
    int down = darts[static_cast<size_t>(up[static_cast<size_t>(i)])].twin;
    darts[static_cast<size_t>(tin)].next = tout;
    darts[static_cast<size_t>(tout)].next = down;
    darts[static_cast<size_t>(down)].next = tin;
  }
  int outer = darts[static_cast<size_t>(top[0])].twin;
  return Diagram::from_parts(std::move(darts), nv, ring[0], outer, top[0]);
}

} // namespace

Diagram fat_tree_core(int n) {
  std::set<std::pair<int, int>> cells;
  switch (n) {
    case 1:
      cells = block(0, 0, 1, 1);
      break;
    case 2:
      // 2-thick fattened tripod: junction block plus three 2x2 arms
      add_all(cells, block(0, 0, 2, 2));    // junction
      add_all(cells, block(2, 0, 4, 2));    // east arm
      add_all(cells, block(0, 2, 2, 4));    // north arm
      add_all(cells, block(-2, 0, 0, 2));   // west arm
      break;
    case 3: {
      // 3-thick fattened T_3: centre, three trunks, three junctions, six
      // children (a tripod of tripods of 3x3 blocks)
      add_all(cells, block(0, 0, 3, 3));
      add_all(cells, block(3, 0, 6, 3));
      add_all(cells, block(6, 0, 9, 3));
      add_all(cells, block(6, 3, 9, 6));
      add_all(cells, block(6, -3, 9, 0));
      add_all(cells, block(0, 3, 3, 6));
      add_all(cells, block(0, 6, 3, 9));
      add_all(cells, block(3, 6, 6, 9));
      add_all(cells, block(-3, 6, 0, 9));
      add_all(cells, block(-3, 0, 0, 3));
      add_all(cells, block(-6, 0, -3, 3));
      add_all(cells, block(-6, 3, -3, 6));
      add_all(cells, block(-6, -3, -3, 0));
      break;
    }
    default: fail(ErrorCode::OutOfRange, "fat trees are built for n <= 3");
  }
  return polyomino(cells);
}

Diagram round_grid_disc(int want) {
  std::vector<std::pair<int, int>> all;
  for (int x = -6; x <= 6; ++x)
    for (int y = -6; y <= 6; ++y) all.emplace_back(x, y);
  std::sort(all.begin(), all.end(), [](auto p, auto q) {
    auto r = [](std::pair<int, int> c) {
      double x = c.first + 0.5, y = c.second + 0.5;
      return x * x + y * y;
    };
    if (r(p) != r(q)) return r(p) < r(q);
    return p < q;
  });
  std::set<std::pair<int, int>> cells(all.begin(), all.begin() + want);
  return polyomino(cells);
}

DeltaReport delta_n(int n, bool fl_probe) {
  DeltaReport rep;
  Diagram d = fat_tree_core(n);
  // The skirt's job is collapsing diameters, which only matters once the
  // tree outgrows its own thickness; below n = 3 the bare fattened tree is
  // the family member.
  if (n >= 3) {
    while (d.boundary_length() > 8) d = attach_ring(d);
  }
  rep.boundary = d.boundary_length();
  rep.measures = measure(d);
  ShellCaps caps;
  caps.max_faces = 20;
  caps.max_states = 8000000;
  if (fl_probe && n <= 2) {
    ShellFlResult fl = shell_fl_exact(d, caps);
    if (fl.exact) rep.fl_exact = fl.value;
  }
  // branch-and-bound lower evidence: the largest cap proven infeasible
  rep.fl_lower_evidence = std::max(rep.measures.idiam, rep.boundary);
  for (int L = rep.fl_lower_evidence;; ++L) {
    auto ok = shell_fl_at_most(d, L, caps);
    if (!ok || *ok) break;
    rep.fl_lower_evidence = L + 1;
  }
  Multigraph sk{d.vertices(), d.skeleton().edges};
  TreePair tp = tree_pair(d, geodesic_spanning_tree(sk, d.base_vertex()));
  rep.fl_upper = shell_fl_upper(d, tp).value;
  rep.diagram = std::move(d);
  return rep;
}

GammaReport gamma_n(int n) {
  if (n < 1 || n > 6) fail(ErrorCode::OutOfRange, "gamma_n is built for 1 <= n <= 6");
  int len = 1 << n;
  PlanarBuilder b;
  std::vector<int> vtx;
  for (int i = 0; i <= len; ++i) vtx.push_back(b.add_vertex(i, 0));
  int first = -1;
  for (int i = 0; i < len; ++i) {
    int e = b.add_edge(vtx[static_cast<size_t>(i)], vtx[static_cast<size_t>(i + 1)], 1);
    if (i == 0) first = e;
  }
  // One nested arc per dyadic interval of length 2^j; levels alternate
  // sides of the line so that pocket depth equals dual distance, which is
  // what makes the horizontal tree's dual geodesic from the outer vertex.
  int big_arc = -1;
  for (int j = 1; j <= n; ++j) {
    bool above = j % 2 == 1;
    for (int k = 0; k * (1 << j) < len; ++k) {
      int lo = k * (1 << j), hi = (k + 1) * (1 << j);
      double a_left = 0.3 + 0.1 * j;
      double a_right = M_PI - 0.3 - 0.1 * j;
      if (!above) {
        a_left = -a_left;
        a_right = -a_right;
      }
      int e = b.add_edge_angles(vtx[static_cast<size_t>(lo)], vtx[static_cast<size_t>(hi)], 2,
                                a_left, a_right);
      if (j == n) big_arc = e;
    }
  }
  (void)first;
  GammaReport rep;
  // the unbounded face sits on the outer side of the outermost arc
  int outer_dart = n % 2 == 1 ? 2 * big_arc : 2 * big_arc + 1;
  rep.diagram = b.finish(outer_dart, vtx[0]);
  if (rep.diagram.area() != len - 1)
    fail(ErrorCode::Internal, "gamma_n face census is off");

  Multigraph sk{rep.diagram.vertices(), rep.diagram.skeleton().edges};
  rep.diam_graph = graph_diameter(sk);
  auto dual = rep.diagram.dual();
  Multigraph dg{dual.n, dual.edges};
  rep.diam_dual = graph_diameter(dg);

  std::vector<char> horizontal(sk.edges.size(), 0);
  for (int e = 0; e < len; ++e) horizontal[static_cast<size_t>(e)] = 1;
  TreePair htp = tree_pair(rep.diagram, horizontal);
  rep.horizontal_diam = htp.tree_diam;
  rep.horizontal_dual_diam = htp.dual_diam;

  // T* should be a geodesic spanning tree of the dual based at the outer
  // vertex: tree distances from the outer root equal dual BFS distances.
  {
    Multigraph tstar{dual.n, {}};
    for (size_t e = 0; e < htp.dual_tree.size(); ++e)
      if (htp.dual_tree[e]) tstar.edges.push_back(dual.edges[e]);
    auto din = bfs_distances(dg, dual.n - 1);
    auto dtree = bfs_distances(tstar, dual.n - 1);
    rep.horizontal_dual_geodesic = din == dtree;
  }

  DglResult heur = dgl(rep.diagram, DglMode::Heuristic);
  rep.searched = heur.best;
  rep.searched_value = heur.value;
  return rep;
}

Multigraph ternary_tree(int n) {
  if (n < 1) fail(ErrorCode::OutOfRange, "ternary trees need n >= 1");
  if (n == 1) return Multigraph{2, {{0, 1}}};
  Multigraph sub = ternary_tree(n - 1);
  // a leaf of the subtree to glue at (lowest-degree, highest id)
  std::vector<int> deg(static_cast<size_t>(sub.n), 0);
  for (auto [u, v] : sub.edges) {
    ++deg[static_cast<size_t>(u)];
    ++deg[static_cast<size_t>(v)];
  }
  int leaf = -1;
  for (int v = sub.n - 1; v >= 0; --v)
    if (deg[static_cast<size_t>(v)] == 1) {
      leaf = v;
      break;
    }
  Multigraph out;
  out.n = 1 + 3 * (sub.n - 1);
  auto remap = [&](int copy, int v) {
    if (v == leaf) return 0;
    int idx = v < leaf ? v : v - 1;
    return 1 + copy * (sub.n - 1) + idx;
  };
  for (int copy = 0; copy < 3; ++copy)
    for (auto [u, v] : sub.edges) out.edges.emplace_back(remap(copy, u), remap(copy, v));
  return out;
}

int ternary_sweep_width(int n) {
  Multigraph t = ternary_tree(n);
  int m = static_cast<int>(t.edges.size());
  if (m > 20) fail(ErrorCode::TooManyCells, "sweep enumeration is exponential in edges");
  // adjacency between edges (shared vertex)
  std::vector<unsigned> adj(static_cast<size_t>(m), 0);
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f) {
      if (e == f) continue;
      auto [a, b1] = t.edges[static_cast<size_t>(e)];
      auto [c, d] = t.edges[static_cast<size_t>(f)];
      if (a == c || a == d || b1 == c || b1 == d) adj[static_cast<size_t>(e)] |= 1u << f;
    }
  std::vector<int> memo(static_cast<size_t>(1) << m, -1);
  memo[0] = 0;
  // value(U) = min over e in U of max(front(U,e), value(U \ e))
  std::function<int(unsigned)> go = [&](unsigned u) -> int {
    if (memo[u] >= 0) return memo[u];
    int best = 1 << 29;
    for (int e = 0; e < m; ++e) {
      if (!(u >> e & 1)) continue;
      unsigned rest = u & ~(1u << e);
      int front = 2 + __builtin_popcount(adj[static_cast<size_t>(e)] & rest);
      best = std::min(best, std::max(front, go(rest)));
    }
    memo[u] = best;
    return best;
  };
  return go((m == 32 ? ~0u : (1u << m) - 1));
}

} // namespace fillings
