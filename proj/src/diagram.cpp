#include "diagram.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace fillings {

Diagram Diagram::single_vertex() {
  Diagram d;
  d.vertices_ = 1;
  d.base_vertex_ = 0;
  d.boundary_vertex_.assign(1, true);
  return d;
}

Diagram Diagram::from_parts(std::vector<Dart> darts, int vertices, int base_vertex,
                            int outer_dart, int boundary_from) {
  Diagram d;
  d.darts_ = std::move(darts);
  d.vertices_ = vertices;
  d.base_vertex_ = base_vertex;
  d.finalize(outer_dart, boundary_from);
  return d;
}

void Diagram::finalize(int outer_dart, int boundary_from) {
  const int n = static_cast<int>(darts_.size());
  if (n == 0) {
    if (vertices_ != 1) fail(ErrorCode::Internal, "dartless diagram must be a single vertex");
    boundary_vertex_.assign(1, true);
    return;
  }
  if (n % 2 != 0) fail(ErrorCode::Internal, "odd number of darts");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    const Dart& d = darts_[static_cast<size_t>(i)];
    if (d.twin < 0 || d.twin >= n || d.twin == i ||
        darts_[static_cast<size_t>(d.twin)].twin != i)
      fail(ErrorCode::Internal, "twin is not an involution");
    if (darts_[static_cast<size_t>(d.twin)].label != inverse(d.label))
      fail(ErrorCode::Internal, "twin labels are not inverse");
    if (d.origin < 0 || d.origin >= vertices_) fail(ErrorCode::Internal, "bad origin");
    if (d.next < 0 || d.next >= n || darts_[static_cast<size_t>(d.next)].origin != d.origin)
      fail(ErrorCode::Internal, "rotation leaves the vertex");
  }
  for (int i = 0; i < n; ++i) {
    int s = darts_[static_cast<size_t>(i)].next;
    if (seen[static_cast<size_t>(s)]) fail(ErrorCode::Internal, "rotation is not a permutation");
    seen[static_cast<size_t>(s)] = 1;
  }

  // Face orbits of d -> prev(twin(d)): with counterclockwise rotations this
  // walks the face to the left of each dart.
  std::vector<int> prev(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) prev[static_cast<size_t>(darts_[static_cast<size_t>(i)].next)] = i;
  face_of_.assign(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < n; ++i) {
    if (face_of_[static_cast<size_t>(i)] >= 0) continue;
    std::vector<int> cycle;
    int d = i;
    while (face_of_[static_cast<size_t>(d)] < 0) {
      face_of_[static_cast<size_t>(d)] = static_cast<int>(orbits.size());
      cycle.push_back(d);
      d = prev[static_cast<size_t>(darts_[static_cast<size_t>(d)].twin)];
    }
    if (d != i) fail(ErrorCode::Internal, "face orbit did not close");
    orbits.push_back(std::move(cycle));
  }
  if (outer_dart < 0 || outer_dart >= n) fail(ErrorCode::Internal, "bad outer dart");
  int outer_orbit = face_of_[static_cast<size_t>(outer_dart)];

  // Connectivity.
  std::vector<std::vector<int>> vadj(static_cast<size_t>(vertices_));
  for (int i = 0; i < n; ++i)
    vadj[static_cast<size_t>(darts_[static_cast<size_t>(i)].origin)].push_back(
        darts_[static_cast<size_t>(darts_[static_cast<size_t>(i)].twin)].origin);
  std::vector<char> vseen(static_cast<size_t>(vertices_), 0);
  std::deque<int> q{darts_[0].origin};
  vseen[static_cast<size_t>(darts_[0].origin)] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : vadj[static_cast<size_t>(v)])
      if (!vseen[static_cast<size_t>(w)]) {
        vseen[static_cast<size_t>(w)] = 1;
        ++reached;
        q.push_back(w);
      }
  }
  if (reached != vertices_) fail(ErrorCode::Internal, "diagram is not connected");

  // Euler: V - E + F = 2 counting the outer face; with connectivity this
  // pins genus 0, so the complex is a (possibly singular) disc.
  int euler = vertices_ - n / 2 + static_cast<int>(orbits.size());
  if (euler != 2) fail(ErrorCode::Internal, "Euler characteristic is not 2");

  std::vector<int> remap(orbits.size(), -1);
  faces_.clear();
  for (size_t f = 0; f < orbits.size(); ++f) {
    if (static_cast<int>(f) == outer_orbit) continue;
    remap[f] = static_cast<int>(faces_.size());
    faces_.push_back(orbits[f]);
  }
  for (int i = 0; i < n; ++i) {
    int f = face_of_[static_cast<size_t>(i)];
    face_of_[static_cast<size_t>(i)] = f == outer_orbit ? -1 : remap[static_cast<size_t>(f)];
  }

  // Anticlockwise boundary = reversed twins of the outer orbit.
  const std::vector<int>& outer = orbits[static_cast<size_t>(outer_orbit)];
  std::vector<int> bd;
  for (auto it = outer.rbegin(); it != outer.rend(); ++it)
    bd.push_back(darts_[static_cast<size_t>(*it)].twin);
  int start = -1;
  for (int i = 0; i < static_cast<int>(bd.size()); ++i) {
    int d = bd[static_cast<size_t>(i)];
    if (boundary_from >= 0 ? d == boundary_from
                           : darts_[static_cast<size_t>(d)].origin == base_vertex_) {
      start = i;
      break;
    }
  }
  if (start < 0) fail(ErrorCode::Internal, "base vertex is not on the boundary");
  boundary_.clear();
  for (size_t i = 0; i < bd.size(); ++i)
    boundary_.push_back(bd[(start + i) % bd.size()]);

  boundary_vertex_.assign(static_cast<size_t>(vertices_), false);
  for (int d : boundary_)
    boundary_vertex_[static_cast<size_t>(darts_[static_cast<size_t>(d)].origin)] = true;
}

Word Diagram::boundary_word() const {
  Word w;
  for (int d : boundary_) w.push_back(darts_[static_cast<size_t>(d)].label);
  return w;
}

Word Diagram::face_word(int f) const {
  Word w;
  for (int d : faces_[static_cast<size_t>(f)]) w.push_back(darts_[static_cast<size_t>(d)].label);
  return w;
}

bool Diagram::check(const Presentation& p) const {
  for (int f = 0; f < area(); ++f)
    for (int i = 0; i < face_word(f).size(); ++i)
      if (letter_index(face_word(f)[i]) > p.alphabet.size()) return false;
  RelatorClosure closure = RelatorClosure::of(p);
  for (int f = 0; f < area(); ++f)
    if (!closure.contains(face_word(f))) return false;
  return true;
}

Diagram::Skeleton Diagram::skeleton() const {
  Skeleton s;
  s.n = vertices_;
  for (int e = 0; e < edges(); ++e)
    s.edges.emplace_back(darts_[static_cast<size_t>(2 * e)].origin,
                         darts_[static_cast<size_t>(2 * e + 1)].origin);
  return s;
}

Diagram::Dual Diagram::dual() const {
  Dual g;
  g.n = area() + 1;
  auto side = [&](int dart) {
    int f = face_of_[static_cast<size_t>(dart)];
    return f < 0 ? area() : f;
  };
  for (int e = 0; e < edges(); ++e)
    g.edges.emplace_back(side(2 * e), side(2 * e + 1));
  return g;
}

std::string Diagram::serialize() const {
  std::ostringstream out;
  out << "diagram v1\n";
  out << "vertices " << vertices_ << "\n";
  out << "base " << base_vertex_ << "\n";
  out << "darts " << darts_.size() << "\n";
  for (const Dart& d : darts_)
    out << "d " << d.twin << ' ' << d.origin << ' ' << static_cast<int>(d.label) << ' '
        << d.next << "\n";
  if (!darts_.empty()) {
    out << "outer " << darts_[static_cast<size_t>(boundary_[0])].twin << "\n";
    out << "from " << boundary_[0] << "\n";
  }
  return out.str();
}

Diagram Diagram::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line, key;
  if (!std::getline(in, line) || line != "diagram v1")
    fail(ErrorCode::Parse, "not a diagram serialization");
  int vertices = 0, base = 0, ndarts = 0, outer = -1, from = -1;
  std::vector<Dart> darts;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (!(ls >> key)) continue;
    if (key == "vertices") ls >> vertices;
    else if (key == "base") ls >> base;
    else if (key == "darts") ls >> ndarts;
    else if (key == "d") {
      Dart d;
      int label = 0;
      ls >> d.twin >> d.origin >> label >> d.next;
      d.label = static_cast<Letter>(label);
      darts.push_back(d);
    } else if (key == "outer") ls >> outer;
    else if (key == "from") ls >> from;
    else fail(ErrorCode::Parse, "unknown diagram line '" + key + "'");
  }
  if (static_cast<int>(darts.size()) != ndarts) fail(ErrorCode::Parse, "dart count mismatch");
  if (darts.empty()) {
    if (vertices != 1) fail(ErrorCode::Parse, "dartless diagram must have one vertex");
    return single_vertex();
  }
  return from_parts(std::move(darts), vertices, base, outer, from);
}

// --- measurements ------------------------------------------------------------

namespace {

std::vector<std::vector<int>> adjacency(const Multigraph& g) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.n));
  for (auto [u, v] : g.edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    if (u != v) adj[static_cast<size_t>(v)].push_back(u);
  }
  return adj;
}

} // namespace

std::vector<int> bfs_distances(const Multigraph& g, int source) {
  auto adj = adjacency(g);
  std::vector<int> dist(static_cast<size_t>(g.n), -1);
  std::deque<int> q{source};
  dist[static_cast<size_t>(source)] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[static_cast<size_t>(v)])
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

int graph_diameter(const Multigraph& g) {
  int best = 0;
  for (int v = 0; v < g.n; ++v)
    for (int d : bfs_distances(g, v)) {
      if (d < 0) fail(ErrorCode::Internal, "diameter of a disconnected graph");
      best = std::max(best, d);
    }
  return best;
}

DiagramMeasures measure(const Diagram& d) {
  DiagramMeasures m;
  m.area = d.area();
  Multigraph sk{d.vertices(), d.skeleton().edges};
  m.idiam = d.vertices() <= 1 ? 0 : graph_diameter(sk);

  auto adj = adjacency(sk);
  std::vector<int> dist(static_cast<size_t>(d.vertices()), -1);
  std::deque<int> q;
  for (int v = 0; v < d.vertices(); ++v)
    if (d.on_boundary_vertex(v)) {
      dist[static_cast<size_t>(v)] = 0;
      q.push_back(v);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[static_cast<size_t>(v)])
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        q.push_back(w);
      }
  }
  for (int v = 0; v < d.vertices(); ++v) m.rad = std::max(m.rad, dist[static_cast<size_t>(v)]);

  auto dual = d.dual();
  Multigraph dg{dual.n, dual.edges};
  m.gl = dual.n <= 1 ? 0 : graph_diameter(dg);
  return m;
}

int ediam(const Diagram& d, const CayleyBall& ball) {
  std::vector<int> elem(static_cast<size_t>(d.vertices()), -1);
  elem[static_cast<size_t>(d.base_vertex())] = 0;
  std::deque<int> q{d.base_vertex()};
  std::vector<std::vector<std::pair<int, Letter>>> adj(static_cast<size_t>(d.vertices()));
  for (const auto& dart : d.darts()) {
    int u = dart.origin;
    int v = d.darts()[static_cast<size_t>(dart.twin)].origin;
    adj[static_cast<size_t>(u)].emplace_back(v, dart.label);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto [w, x] : adj[static_cast<size_t>(v)]) {
      if (elem[static_cast<size_t>(w)] >= 0) continue;
      int to = ball.step(elem[static_cast<size_t>(v)], x);
      if (to < 0) fail(ErrorCode::BallTooSmall, "diagram walks outside the ball");
      elem[static_cast<size_t>(w)] = to;
      q.push_back(w);
    }
  }
  int best = 0;
  for (int a = 0; a < d.vertices(); ++a)
    for (int b = a + 1; b < d.vertices(); ++b) {
      auto dist = ball.exact_distance(elem[static_cast<size_t>(a)], elem[static_cast<size_t>(b)]);
      if (!dist) fail(ErrorCode::BallTooSmall, "pairwise distance escapes the ball");
      best = std::max(best, *dist);
    }
  return best;
}

// --- spanning trees ----------------------------------------------------------

long long count_spanning_trees(const Multigraph& g) {
  if (g.n <= 1) return 1;
  // Kirchhoff minor determinant, fraction-free elimination on __int128.
  int n = g.n - 1;
  std::vector<std::vector<__int128>> a(static_cast<size_t>(n),
                                       std::vector<__int128>(static_cast<size_t>(n), 0));
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    if (u < n) a[static_cast<size_t>(u)][static_cast<size_t>(u)] += 1;
    if (v < n) a[static_cast<size_t>(v)][static_cast<size_t>(v)] += 1;
    if (u < n && v < n) {
      a[static_cast<size_t>(u)][static_cast<size_t>(v)] -= 1;
      a[static_cast<size_t>(v)][static_cast<size_t>(u)] -= 1;
    }
  }
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            (a[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                 a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
             a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                 a[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
            prev;
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  long long det = static_cast<long long>(a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)]);
  return sign * det;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
    return true;
  }
};

bool enumerate_rec(const Multigraph& g, size_t idx, int chosen, std::vector<char>& take,
                   const UnionFind& uf, const std::function<bool(const std::vector<char>&)>& fn) {
  const int need = g.n - 1;
  if (chosen == need) return fn(take);
  if (idx >= g.edges.size()) return true;
  if (g.edges.size() - idx < static_cast<size_t>(need - chosen)) return true;
  auto [u, v] = g.edges[idx];
  if (u != v) {
    UnionFind with = uf;
    if (with.unite(u, v)) {
      take[idx] = 1;
      if (!enumerate_rec(g, idx + 1, chosen + 1, take, with, fn)) return false;
      take[idx] = 0;
    }
  }
  // Excluding idx stays viable only if the remaining edges can still connect
  // everything the current forest has not.
  UnionFind rest = uf;
  for (size_t i = idx + 1; i < g.edges.size(); ++i) {
    auto [a, b] = g.edges[i];
    if (a != b) rest.unite(a, b);
  }
  int root = rest.find(0);
  for (int x = 1; x < g.n; ++x)
    if (rest.find(x) != root) return true;
  return enumerate_rec(g, idx + 1, chosen, take, uf, fn);
}

} // namespace

void enumerate_spanning_trees(const Multigraph& g,
                              const std::function<bool(const std::vector<char>&)>& fn) {
  if (g.n <= 1) {
    std::vector<char> none(g.edges.size(), 0);
    fn(none);
    return;
  }
  std::vector<char> take(g.edges.size(), 0);
  enumerate_rec(g, 0, 0, take, UnionFind(g.n), fn);
}

int subtree_diameter(const Multigraph& g, const std::vector<char>& in_tree) {
  Multigraph t;
  t.n = g.n;
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (in_tree[e]) t.edges.push_back(g.edges[e]);
  if (t.edges.empty()) return 0;
  return graph_diameter(t);
}

std::vector<char> geodesic_spanning_tree(const Multigraph& g, int root) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(g.n));
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if (u == v) continue;
    adj[static_cast<size_t>(u)].emplace_back(v, static_cast<int>(e));
    adj[static_cast<size_t>(v)].emplace_back(u, static_cast<int>(e));
  }
  for (auto& lst : adj) std::sort(lst.begin(), lst.end());
  std::vector<char> take(g.edges.size(), 0);
  std::vector<int> dist(static_cast<size_t>(g.n), -1);
  std::deque<int> q{root};
  dist[static_cast<size_t>(root)] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (auto [w, e] : adj[static_cast<size_t>(v)])
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        take[static_cast<size_t>(e)] = 1;
        q.push_back(w);
      }
  }
  for (int v = 0; v < g.n; ++v)
    if (dist[static_cast<size_t>(v)] < 0)
      fail(ErrorCode::Internal, "geodesic tree of a disconnected graph");
  return take;
}

TreePair tree_pair(const Diagram& d, const std::vector<char>& tree) {
  Multigraph sk{d.vertices(), d.skeleton().edges};
  int chosen = 0;
  UnionFind uf(d.vertices());
  for (size_t e = 0; e < tree.size(); ++e)
    if (tree[e]) {
      ++chosen;
      auto [u, v] = sk.edges[e];
      if (u == v || !uf.unite(u, v)) fail(ErrorCode::NotSpanning, "edge set has a cycle");
    }
  if (chosen != d.vertices() - 1) fail(ErrorCode::NotSpanning, "edge set does not span");

  TreePair tp;
  tp.tree = tree;
  tp.dual_tree.assign(tree.size(), 0);
  auto dual = d.dual();
  Multigraph dg;
  dg.n = dual.n;
  UnionFind duf(dual.n);
  int dual_edges = 0;
  for (size_t e = 0; e < tree.size(); ++e) {
    if (tree[e]) continue;
    tp.dual_tree[e] = 1;
    ++dual_edges;
    auto [f1, f2] = dual.edges[e];
    if (f1 == f2 || !duf.unite(f1, f2))
      fail(ErrorCode::Internal, "dual complement is not acyclic");
    dg.edges.push_back(dual.edges[e]);
  }
  if (dual_edges != dual.n - 1) fail(ErrorCode::Internal, "dual complement does not span");
  tp.tree_diam = subtree_diameter(sk, tp.tree);
  tp.dual_diam = dual.n <= 1 ? 0 : graph_diameter(dg);
  return tp;
}

DglResult dgl(const Diagram& d, DglMode mode, long long tree_cap) {
  DglResult res;
  Multigraph sk{d.vertices(), d.skeleton().edges};
  if (d.vertices() <= 1) {
    res.exact = true;
    res.value = 0;
    res.tree_count = 1;
    return res;
  }
  res.tree_count = count_spanning_trees(sk);
  if (mode == DglMode::Exact) {
    if (res.tree_count > tree_cap)
      fail(ErrorCode::TooManyTrees, "spanning tree count " + std::to_string(res.tree_count) +
                                        " exceeds the exact-mode cap");
    int best = -1;
    std::vector<char> best_tree;
    enumerate_spanning_trees(sk, [&](const std::vector<char>& take) {
      TreePair tp = tree_pair(d, take);
      int v = tp.tree_diam + tp.dual_diam;
      // Enumeration order is lexicographic with taken-first, so the first
      // minimizer seen is the lexicographically least edge set.
      if (best < 0 || v < best) {
        best = v;
        best_tree = take;
      }
      return true;
    });
    res.value = best;
    res.exact = true;
    res.best = tree_pair(d, best_tree);
    return res;
  }
  int best = -1;
  std::vector<char> best_tree;
  auto consider = [&](const std::vector<char>& take) {
    TreePair tp = tree_pair(d, take);
    int v = tp.tree_diam + tp.dual_diam;
    if (best < 0 || v < best) {
      best = v;
      best_tree = take;
      return true;
    }
    return false;
  };
  for (int root = 0; root < d.vertices(); ++root)
    consider(geodesic_spanning_tree(sk, root));
  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<char> cur = best_tree;
    for (size_t e = 0; e < cur.size() && !improved; ++e) {
      if (cur[e]) continue;
      auto [u, v] = sk.edges[e];
      if (u == v) continue;
      for (size_t f = 0; f < cur.size() && !improved; ++f) {
        if (!cur[f] || f == e) continue;
        std::vector<char> cand = cur;
        cand[e] = 1;
        cand[f] = 0;
        try {
          if (consider(cand)) improved = true;
        } catch (const Error&) {
          // not spanning; skip
        }
      }
    }
  }
  res.value = best;
  res.exact = false;
  res.best = tree_pair(d, best_tree);
  return res;
}

// --- geometric builder ---------------------------------------------------------

int PlanarBuilder::add_vertex(double x, double y) {
  coords_.emplace_back(x, y);
  return static_cast<int>(coords_.size()) - 1;
}

int PlanarBuilder::add_edge(int u, int v, Letter label) {
  auto [ux, uy] = coords_[static_cast<size_t>(u)];
  auto [vx, vy] = coords_[static_cast<size_t>(v)];
  return add_edge_angles(u, v, label, std::atan2(vy - uy, vx - ux),
                         std::atan2(uy - vy, ux - vx));
}

int PlanarBuilder::add_edge_angles(int u, int v, Letter label, double angle_u, double angle_v) {
  Diagram::Dart fwd, bwd;
  fwd.origin = u;
  fwd.label = label;
  fwd.twin = static_cast<int>(darts_.size()) + 1;
  bwd.origin = v;
  bwd.label = inverse(label);
  bwd.twin = static_cast<int>(darts_.size());
  darts_.push_back(fwd);
  half_.push_back(HalfSpec{u, angle_u});
  darts_.push_back(bwd);
  half_.push_back(HalfSpec{v, angle_v});
  return static_cast<int>(darts_.size()) / 2 - 1;
}

Diagram PlanarBuilder::finish(int outer_dart, int base_vertex, int boundary_from) {
  std::vector<std::vector<int>> at(coords_.size());
  for (size_t i = 0; i < darts_.size(); ++i)
    at[static_cast<size_t>(half_[i].vertex)].push_back(static_cast<int>(i));
  for (auto& lst : at) {
    std::sort(lst.begin(), lst.end(), [&](int a, int b) {
      if (half_[static_cast<size_t>(a)].angle != half_[static_cast<size_t>(b)].angle)
        return half_[static_cast<size_t>(a)].angle < half_[static_cast<size_t>(b)].angle;
      return a < b;
    });
    for (size_t i = 0; i + 1 < lst.size(); ++i)
      if (half_[static_cast<size_t>(lst[i])].angle == half_[static_cast<size_t>(lst[i + 1])].angle)
        fail(ErrorCode::Internal, "coincident dart angles in planar builder");
    for (size_t i = 0; i < lst.size(); ++i)
      darts_[static_cast<size_t>(lst[i])].next = lst[(i + 1) % lst.size()];
  }
  return Diagram::from_parts(darts_, static_cast<int>(coords_.size()), base_vertex, outer_dart,
                             boundary_from);
}

} // namespace fillings
