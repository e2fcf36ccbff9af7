#include <doctest.h>

#include <random>

#include "diagram.hpp"
#include "shelling.hpp"

using namespace fillings;

namespace {

// A single square cell with boundary abAB, built geometrically.
Diagram square() {
  PlanarBuilder b;
  int v0 = b.add_vertex(0, 0), v1 = b.add_vertex(1, 0);
  int v2 = b.add_vertex(1, 1), v3 = b.add_vertex(0, 1);
  int e0 = b.add_edge(v0, v1, 1); // a
  b.add_edge(v1, v2, 2);          // b
  b.add_edge(v3, v2, 1);          // a
  b.add_edge(v0, v3, 2);          // b
  // outer face lies right of v0->v1, i.e. left of the backward dart
  return b.finish(2 * e0 + 1, v0);
}

// m x n grid of unit squares, base at the origin corner; horizontal edges a,
// vertical edges b. Boundary from the base reads a^m b^n A^m B^n.
Diagram grid(int m, int n) {
  PlanarBuilder b;
  std::vector<std::vector<int>> v(static_cast<size_t>(m + 1),
                                  std::vector<int>(static_cast<size_t>(n + 1)));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) v[static_cast<size_t>(i)][static_cast<size_t>(j)] =
        b.add_vertex(i, j);
  int first = -1;
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i < m; ++i) {
      int e = b.add_edge(v[static_cast<size_t>(i)][static_cast<size_t>(j)],
                         v[static_cast<size_t>(i + 1)][static_cast<size_t>(j)], 1);
      if (i == 0 && j == 0) first = e;
    }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= m; ++i)
      b.add_edge(v[static_cast<size_t>(i)][static_cast<size_t>(j)],
                 v[static_cast<size_t>(i)][static_cast<size_t>(j + 1)], 2);
  return b.finish(2 * first + 1, v[0][0]);
}

Word W(const char* text) { return parse_word(Alphabet("ab"), text); }

} // namespace

TEST_CASE("single vertex diagram") {
  Diagram d = Diagram::single_vertex();
  CHECK(d.boundary_word().empty());
  DiagramMeasures m = measure(d);
  CHECK(m.area == 0);
  CHECK(m.idiam == 0);
  CHECK(m.rad == 0);
  CHECK(m.gl == 0);
}

TEST_CASE("square basics") {
  Diagram d = square();
  CHECK(format_word(Alphabet("ab"), d.boundary_word()) == "abAB");
  CHECK(d.area() == 1);
  CHECK(d.edges() == 4);
  CHECK(d.vertices() == 4);
  DiagramMeasures m = measure(d);
  CHECK(m.area == 1);
  CHECK(m.idiam == 2);
  CHECK(m.rad == 0);
  CHECK(m.gl == 1);
  CHECK(d.check(preset_presentation("z2")));
  CHECK(!d.check(preset_presentation("f2")));
}

TEST_CASE("grid measures match the spec") {
  Diagram d = grid(2, 2);
  CHECK(format_word(Alphabet("ab"), d.boundary_word()) == "aabbAABB");
  DiagramMeasures m = measure(d);
  CHECK(m.area == 4);
  CHECK(m.idiam == 4);
  CHECK(m.rad == 1);
  CHECK(m.gl == 2);
  CHECK(d.check(preset_presentation("z2")));
}

TEST_CASE("serialization round-trip") {
  for (const Diagram& d : {square(), grid(2, 2), Diagram::single_vertex()}) {
    std::string text = d.serialize();
    Diagram back = Diagram::parse(text);
    CHECK(back.serialize() == text);
    CHECK(back.boundary_word() == d.boundary_word());
    CHECK(back.area() == d.area());
  }
}

TEST_CASE("ediam") {
  Presentation z2 = preset_presentation("z2");
  CayleyBall ball = cayley_ball(z2, WordOracle::exponent_sum(z2), 4);
  CHECK(ediam(square(), ball) == 2);
  Diagram g22 = grid(2, 2);
  int ed = ediam(g22, ball);
  DiagramMeasures m = measure(g22);
  CHECK(ed <= m.idiam);
  CHECK(ed == 4);
}

TEST_CASE("tree pair on the square") {
  Diagram d = square();
  // edges 0..3; tree = {0,1,3} leaves edge 2 dual
  std::vector<char> tree{1, 1, 0, 1};
  TreePair tp = tree_pair(d, tree);
  CHECK(tp.tree_diam == 3);
  CHECK(tp.dual_diam == 1);
  std::vector<char> bad{1, 1, 0, 0};
  CHECK_THROWS_AS(tree_pair(d, bad), Error);
}

TEST_CASE("spanning tree counting and enumeration") {
  Diagram d = square();
  Multigraph sk{d.vertices(), d.skeleton().edges};
  CHECK(count_spanning_trees(sk) == 4);
  int seen = 0;
  enumerate_spanning_trees(sk, [&](const std::vector<char>&) {
    ++seen;
    return true;
  });
  CHECK(seen == 4);

  Diagram g = grid(2, 2);
  Multigraph gsk{g.vertices(), g.skeleton().edges};
  CHECK(count_spanning_trees(gsk) == 192);
  seen = 0;
  enumerate_spanning_trees(gsk, [&](const std::vector<char>&) {
    ++seen;
    return true;
  });
  CHECK(seen == 192);
}

TEST_CASE("dgl exact and heuristic") {
  Diagram d = square();
  DglResult r = dgl(d, DglMode::Exact);
  CHECK(r.value == 4);
  CHECK(r.exact);
  CHECK(r.tree_count == 4);

  Diagram g = grid(2, 2);
  DglResult rg = dgl(g, DglMode::Exact);
  CHECK(rg.tree_count == 192);
  DglResult rh = dgl(g, DglMode::Heuristic);
  CHECK(rh.value >= rg.value);

  DiagramMeasures m = measure(g);
  CHECK(m.gl <= rg.value);
}

TEST_CASE("geodesic spanning tree") {
  // 4-cycle
  Multigraph g{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  auto t = geodesic_spanning_tree(g, 0);
  auto dist = bfs_distances(g, 0);
  Multigraph tg{4, {}};
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (t[e]) tg.edges.push_back(g.edges[e]);
  auto tdist = bfs_distances(tg, 0);
  for (int v = 0; v < 4; ++v) CHECK(dist[static_cast<size_t>(v)] == tdist[static_cast<size_t>(v)]);
  CHECK(dist[2] == 2);
}

TEST_CASE("exact shelling of the square") {
  Diagram d = square();
  ShellFlResult r = shell_fl_exact(d);
  CHECK(r.value == 6);
  CHECK(r.exact);
  ShellReplay rep = replay_shelling(d, r.witness);
  REQUIRE(rep.valid);
  CHECK(rep.max_len == 6);
  CHECK(rep.two_cell_collapses == 1);
  CHECK(rep.words.back().empty());

  CHECK(shell_fl_at_most(d, 5).value() == false);
  CHECK(shell_fl_at_most(d, 6).value() == true);
}

TEST_CASE("exact shelling of the single vertex") {
  CHECK(shell_fl_exact(Diagram::single_vertex()).value == 0);
}

TEST_CASE("grid shelling, exact vs tree-pair upper bound") {
  Diagram g = grid(2, 2);
  ShellFlResult ex = shell_fl_exact(g);
  CHECK(ex.exact);
  CHECK(ex.value >= g.boundary_length());
  ShellReplay rep = replay_shelling(g, ex.witness);
  REQUIRE(rep.valid);
  CHECK(rep.max_len == ex.value);

  Multigraph sk{g.vertices(), g.skeleton().edges};
  for (int root = 0; root < g.vertices(); ++root) {
    TreePair tp = tree_pair(g, geodesic_spanning_tree(sk, root));
    ShellFlResult ub = shell_fl_upper(g, tp);
    CHECK(ub.value >= ex.value);
    ShellReplay urep = replay_shelling(g, ub.witness);
    REQUIRE(urep.valid);
    CHECK(urep.words.back().empty());
    CHECK(urep.max_len == ub.value);
  }
}

TEST_CASE("idiam is at most exact FL; measures chain") {
  for (const Diagram& d : {square(), grid(2, 2), grid(3, 1)}) {
    DiagramMeasures m = measure(d);
    ShellFlResult fl = shell_fl_exact(d);
    CHECK(m.idiam <= fl.value);
    DglResult dg = dgl(d, DglMode::Exact);
    CHECK(m.gl <= dg.value);
  }
}

TEST_CASE("random spanning trees give dual spanning trees") {
  std::mt19937 rng(123);
  for (const Diagram& d : {square(), grid(2, 2), grid(3, 2)}) {
    Multigraph sk{d.vertices(), d.skeleton().edges};
    for (int trial = 0; trial < 60; ++trial) {
      // random spanning tree by random-weight kruskal
      std::vector<int> order(sk.edges.size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<char> take(sk.edges.size(), 0);
      std::vector<int> parent(static_cast<size_t>(sk.n));
      for (int i = 0; i < sk.n; ++i) parent[static_cast<size_t>(i)] = i;
      std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
      };
      for (int e : order) {
        auto [u, v] = sk.edges[static_cast<size_t>(e)];
        int ru = find(u), rv = find(v);
        if (ru != rv) {
          parent[static_cast<size_t>(ru)] = rv;
          take[static_cast<size_t>(e)] = 1;
        }
      }
      TreePair tp = tree_pair(d, take); // throws if T* fails to span
      CHECK(tp.dual_diam >= 0);
    }
  }
}
