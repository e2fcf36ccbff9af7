#include "shelling.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace fillings {

namespace {

struct Ctx {
  const Diagram* d = nullptr;
  int E = 0, F = 0;
  std::vector<std::array<int, 2>> sides; // interior faces left of darts 2e, 2e+1 (-1 outer)
  std::vector<std::array<int, 2>> ends;
  std::vector<int> lambda;
  int base = 0;

  explicit Ctx(const Diagram& dia) : d(&dia) {
    E = dia.edges();
    F = dia.area();
    base = dia.base_vertex();
    sides.resize(static_cast<size_t>(E));
    ends.resize(static_cast<size_t>(E));
    for (int e = 0; e < E; ++e) {
      sides[static_cast<size_t>(e)] = {dia.face_left_of(2 * e), dia.face_left_of(2 * e + 1)};
      ends[static_cast<size_t>(e)] = {dia.darts()[static_cast<size_t>(2 * e)].origin,
                                      dia.darts()[static_cast<size_t>(2 * e + 1)].origin};
    }
    lambda.resize(static_cast<size_t>(F));
    for (int f = 0; f < F; ++f)
      lambda[static_cast<size_t>(f)] = static_cast<int>(dia.face_cycles()[static_cast<size_t>(f)].size());
  }
};

// --- exact search over bitmask states ----------------------------------------

struct MaskKey {
  uint64_t faces, edges;
  bool operator==(const MaskKey& o) const { return faces == o.faces && edges == o.edges; }
};
struct MaskKeyHash {
  size_t operator()(const MaskKey& k) const {
    uint64_t x = k.faces * 0x9e3779b97f4a7c15ULL ^ (k.edges + 0xbf58476d1ce4e5b9ULL);
    x ^= x >> 29;
    x *= 0x94d049bb133111ebULL;
    return static_cast<size_t>(x ^ (x >> 32));
  }
};

struct ExactSearch {
  const Ctx& ctx;
  const ShellCaps& caps;
  std::unordered_map<MaskKey, int, MaskKeyHash> memo;
  long states = 0;
  bool budget_hit = false;

  ExactSearch(const Ctx& c, const ShellCaps& cp) : ctx(c), caps(cp) {}

  int filled(const MaskKey& s, int e) const {
    int k = 0;
    for (int side : ctx.sides[static_cast<size_t>(e)])
      if (side >= 0 && (s.faces >> side & 1)) ++k;
    return k;
  }

  int boundary_len(const MaskKey& s) const {
    int len = 2 * __builtin_popcountll(s.edges);
    for (int f = 0; f < ctx.F; ++f)
      if (s.faces >> f & 1) len -= ctx.lambda[static_cast<size_t>(f)];
    return len;
  }

  // Collapses every spike whose free end is not the base; records moves.
  MaskKey sweep(MaskKey s, Shelling* moves = nullptr) const {
    bool again = true;
    while (again) {
      again = false;
      std::vector<int> deg(static_cast<size_t>(ctx.d->vertices()), 0);
      for (int e = 0; e < ctx.E; ++e)
        if (s.edges >> e & 1) {
          ++deg[static_cast<size_t>(ctx.ends[static_cast<size_t>(e)][0])];
          ++deg[static_cast<size_t>(ctx.ends[static_cast<size_t>(e)][1])];
        }
      for (int e = 0; e < ctx.E && !again; ++e) {
        if (!(s.edges >> e & 1) || filled(s, e) != 0) continue;
        auto [a, b] = ctx.ends[static_cast<size_t>(e)];
        if (a == b) continue;
        int tip = -1;
        if (deg[static_cast<size_t>(a)] == 1 && a != ctx.base) tip = a;
        else if (deg[static_cast<size_t>(b)] == 1 && b != ctx.base) tip = b;
        if (tip < 0) continue;
        s.edges &= ~(1ULL << e);
        if (moves) moves->push_back(ShellMove{ShellMove::Kind::OneCellCollapse, -1, e});
        again = true;
      }
    }
    return s;
  }

  // Legal 2-cell collapses from a state.
  std::vector<std::pair<int, int>> collapses(const MaskKey& s) const {
    std::vector<std::pair<int, int>> out;
    for (int f = 0; f < ctx.F; ++f) {
      if (!(s.faces >> f & 1)) continue;
      for (int e = 0; e < ctx.E; ++e) {
        if (!(s.edges >> e & 1)) continue;
        auto [l, r] = ctx.sides[static_cast<size_t>(e)];
        bool lf = l == f && (r < 0 || !(s.faces >> r & 1) || r == f);
        bool rf = r == f && (l < 0 || !(s.faces >> l & 1) || l == f);
        if (l == f && r == f) continue; // both sides the same face: not on the boundary
        if (lf || rf) out.emplace_back(f, e);
      }
    }
    return out;
  }

  // Any-order rollout; a valid upper bound when the state budget trips.
  int greedy_upper(MaskKey s) const {
    int peak = boundary_len(s);
    while (s.faces != 0) {
      auto cands = collapses(s);
      if (cands.empty()) fail(ErrorCode::Internal, "stuck shelling state");
      auto [f, e] = cands.front();
      peak = std::max(peak, boundary_len(s) + ctx.lambda[static_cast<size_t>(f)] - 2);
      s = sweep(MaskKey{s.faces & ~(1ULL << f), s.edges & ~(1ULL << e)});
    }
    return peak;
  }

  // Min over shellings from the swept state s of the max boundary length,
  // including len(s) itself.
  int value(MaskKey s) {
    if (s.faces == 0) {
      // face-free contractible states sweep to the base vertex monotonically
      return boundary_len(s);
    }
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    if (static_cast<long>(memo.size()) > caps.max_states) {
      budget_hit = true;
      return greedy_upper(s);
    }
    int here = boundary_len(s);
    int best = -1;
    for (auto [f, e] : collapses(s)) {
      int peak = here + ctx.lambda[static_cast<size_t>(f)] - 2;
      MaskKey next{s.faces & ~(1ULL << f), s.edges & ~(1ULL << e)};
      next = sweep(next);
      int sub = std::max(peak, value(next));
      if (best < 0 || sub < best) best = sub;
      if (best <= here) break; // cannot go below the current length
    }
    if (best < 0) fail(ErrorCode::Internal, "stuck shelling state");
    int v = std::max(here, best);
    memo.emplace(s, v);
    return v;
  }

  // Reconstructs one optimal shelling.
  void reconstruct(MaskKey s, Shelling& out) {
    s = sweep(s, &out);
    while (s.faces != 0) {
      int here = boundary_len(s);
      int target = value(s);
      bool moved = false;
      for (auto [f, e] : collapses(s)) {
        int peak = here + ctx.lambda[static_cast<size_t>(f)] - 2;
        MaskKey next{s.faces & ~(1ULL << f), s.edges & ~(1ULL << e)};
        MaskKey swept = sweep(next);
        if (std::max({here, peak, value(swept)}) == target) {
          out.push_back(ShellMove{ShellMove::Kind::TwoCellCollapse, f, e});
          s = sweep(next, &out);
          moved = true;
          break;
        }
      }
      if (!moved) fail(ErrorCode::Internal, "witness reconstruction lost the optimum");
    }
    // Final sweep of the remaining tree.
    MaskKey fin = sweep(s, &out);
    if (fin.edges != 0) fail(ErrorCode::Internal, "shelling did not reach the base vertex");
  }
};

} // namespace

ShellFlResult shell_fl_exact(const Diagram& d, const ShellCaps& caps) {
  ShellFlResult res;
  if (d.area() > caps.max_faces || d.edges() > caps.max_edges)
    fail(ErrorCode::TooManyCells, "diagram exceeds the exact shelling caps");
  if (d.edges() == 0) {
    res.value = 0;
    res.exact = true;
    return res;
  }
  Ctx ctx(d);
  ExactSearch search(ctx, caps);
  MaskKey full{d.area() ? (~0ULL >> (64 - d.area())) : 0, ~0ULL >> (64 - d.edges())};
  int start_len = search.boundary_len(full);
  MaskKey swept = search.sweep(full);
  int v = std::max(start_len, search.value(swept));
  res.value = v;
  res.exact = !search.budget_hit;
  if (res.exact) search.reconstruct(full, res.witness);
  return res;
}

std::optional<bool> shell_fl_at_most(const Diagram& d, int cap, const ShellCaps& caps) {
  if (d.edges() == 0) return cap >= 0;
  if (d.edges() <= 64 && d.area() <= 64) {
    Ctx ctx(d);
    ExactSearch search(ctx, caps);
    MaskKey full{d.area() ? (~0ULL >> (64 - d.area())) : 0, ~0ULL >> (64 - d.edges())};
    if (search.boundary_len(full) > cap) return false;
    std::unordered_map<MaskKey, char, MaskKeyHash> seen;
    bool budget = false;
    std::function<bool(MaskKey)> go = [&](MaskKey s) -> bool {
      s = search.sweep(s);
      if (s.faces == 0) return true;
      auto it = seen.find(s);
      if (it != seen.end()) return false;
      if (static_cast<long>(seen.size()) > caps.max_states) {
        budget = true;
        return false;
      }
      seen.emplace(s, 1);
      int here = search.boundary_len(s);
      for (auto [f, e] : search.collapses(s)) {
        if (here + ctx.lambda[static_cast<size_t>(f)] - 2 > cap) continue;
        if (go(MaskKey{s.faces & ~(1ULL << f), s.edges & ~(1ULL << e)})) return true;
      }
      return false;
    };
    bool ok = go(full);
    if (!ok && budget) return std::nullopt;
    return ok;
  }

  // Wide variant for diagrams beyond 64 cells: the same search over
  // vector-backed subcomplex states.
  Ctx ctx(d);
  struct Wide {
    std::vector<char> face, edge;
    bool operator==(const Wide& o) const { return face == o.face && edge == o.edge; }
  };
  struct WideHash {
    size_t operator()(const Wide& s) const {
      size_t h = 1469598103934665603ULL;
      for (char c : s.face) h = (h ^ static_cast<size_t>(c)) * 1099511628211ULL;
      for (char c : s.edge) h = (h ^ static_cast<size_t>(c + 2)) * 1099511628211ULL;
      return h;
    }
  };
  auto filled = [&](const Wide& s, int e) {
    int k = 0;
    for (int side : ctx.sides[static_cast<size_t>(e)])
      if (side >= 0 && s.face[static_cast<size_t>(side)]) ++k;
    return k;
  };
  auto blen = [&](const Wide& s) {
    int len = 0;
    for (int e = 0; e < ctx.E; ++e)
      if (s.edge[static_cast<size_t>(e)]) len += 2;
    for (int f = 0; f < ctx.F; ++f)
      if (s.face[static_cast<size_t>(f)]) len -= ctx.lambda[static_cast<size_t>(f)];
    return len;
  };
  auto sweep = [&](Wide s) {
    bool again = true;
    while (again) {
      again = false;
      std::vector<int> deg(static_cast<size_t>(d.vertices()), 0);
      for (int e = 0; e < ctx.E; ++e)
        if (s.edge[static_cast<size_t>(e)]) {
          ++deg[static_cast<size_t>(ctx.ends[static_cast<size_t>(e)][0])];
          ++deg[static_cast<size_t>(ctx.ends[static_cast<size_t>(e)][1])];
        }
      for (int e = 0; e < ctx.E && !again; ++e) {
        if (!s.edge[static_cast<size_t>(e)] || filled(s, e) != 0) continue;
        auto [a, b] = ctx.ends[static_cast<size_t>(e)];
        if (a == b) continue;
        if ((deg[static_cast<size_t>(a)] == 1 && a != ctx.base) ||
            (deg[static_cast<size_t>(b)] == 1 && b != ctx.base)) {
          s.edge[static_cast<size_t>(e)] = 0;
          again = true;
        }
      }
    }
    return s;
  };
  Wide full{std::vector<char>(static_cast<size_t>(ctx.F), 1),
            std::vector<char>(static_cast<size_t>(ctx.E), 1)};
  if (blen(full) > cap) return false;
  std::unordered_set<Wide, WideHash> seen;
  bool budget = false;
  std::function<bool(Wide)> go = [&](Wide s) -> bool {
    s = sweep(std::move(s));
    bool any_face = false;
    for (char c : s.face)
      if (c) {
        any_face = true;
        break;
      }
    if (!any_face) return true;
    if (seen.count(s)) return false;
    if (static_cast<long>(seen.size()) > caps.max_states) {
      budget = true;
      return false;
    }
    seen.insert(s);
    int here = blen(s);
    for (int f = 0; f < ctx.F; ++f) {
      if (!s.face[static_cast<size_t>(f)]) continue;
      if (here + ctx.lambda[static_cast<size_t>(f)] - 2 > cap) continue;
      for (int e = 0; e < ctx.E; ++e) {
        if (!s.edge[static_cast<size_t>(e)]) continue;
        auto [l, r] = ctx.sides[static_cast<size_t>(e)];
        if (l == f && r == f) continue;
        if ((l == f || r == f) && filled(s, e) == 1) {
          Wide next = s;
          next.face[static_cast<size_t>(f)] = 0;
          next.edge[static_cast<size_t>(e)] = 0;
          if (go(std::move(next))) return true;
        }
      }
    }
    return false;
  };
  bool ok = go(full);
  if (!ok && budget) return std::nullopt;
  return ok;
}

// --- constructive upper bound --------------------------------------------------

namespace {

// Mutable subcomplex with explicit vectors (no 64-cell cap).
struct SubState {
  std::vector<char> face, edge;
  const Ctx& ctx;
  explicit SubState(const Ctx& c)
      : face(static_cast<size_t>(c.F), 1), edge(static_cast<size_t>(c.E), 1), ctx(c) {}

  int filled(int e) const {
    int k = 0;
    for (int side : ctx.sides[static_cast<size_t>(e)])
      if (side >= 0 && face[static_cast<size_t>(side)]) ++k;
    return k;
  }
  int boundary_len() const {
    int len = 0;
    for (int e = 0; e < ctx.E; ++e)
      if (edge[static_cast<size_t>(e)]) len += 2;
    for (int f = 0; f < ctx.F; ++f)
      if (face[static_cast<size_t>(f)]) len -= ctx.lambda[static_cast<size_t>(f)];
    return len;
  }
  void sweep(Shelling& moves, int& peak) {
    bool again = true;
    while (again) {
      again = false;
      std::vector<int> deg(static_cast<size_t>(ctx.d->vertices()), 0);
      for (int e = 0; e < ctx.E; ++e)
        if (edge[static_cast<size_t>(e)]) {
          ++deg[static_cast<size_t>(ctx.ends[static_cast<size_t>(e)][0])];
          ++deg[static_cast<size_t>(ctx.ends[static_cast<size_t>(e)][1])];
        }
      for (int e = 0; e < ctx.E && !again; ++e) {
        if (!edge[static_cast<size_t>(e)] || filled(e) != 0) continue;
        auto [a, b] = ctx.ends[static_cast<size_t>(e)];
        if (a == b) continue;
        int tip = -1;
        if (deg[static_cast<size_t>(a)] == 1 && a != ctx.base) tip = a;
        else if (deg[static_cast<size_t>(b)] == 1 && b != ctx.base) tip = b;
        if (tip < 0) continue;
        edge[static_cast<size_t>(e)] = 0;
        moves.push_back(ShellMove{ShellMove::Kind::OneCellCollapse, -1, e});
        again = true;
      }
    }
    peak = std::max(peak, boundary_len());
  }
  // Collapses f via edge e if legal; returns success.
  bool collapse(int f, int e, Shelling& moves, int& peak) {
    if (!face[static_cast<size_t>(f)] || !edge[static_cast<size_t>(e)]) return false;
    auto [l, r] = ctx.sides[static_cast<size_t>(e)];
    if (l == f && r == f) return false;
    bool touches = l == f || r == f;
    if (!touches || filled(e) != 1) return false;
    face[static_cast<size_t>(f)] = 0;
    edge[static_cast<size_t>(e)] = 0;
    moves.push_back(ShellMove{ShellMove::Kind::TwoCellCollapse, f, e});
    peak = std::max(peak, boundary_len());
    sweep(moves, peak);
    return true;
  }
  // Any legal collapse edge for f (lowest id).
  int collapse_edge(int f) const {
    for (int e = 0; e < ctx.E; ++e) {
      if (!edge[static_cast<size_t>(e)] || filled(e) != 1) continue;
      auto [l, r] = ctx.sides[static_cast<size_t>(e)];
      if ((l == f) != (r == f)) return e;
    }
    return -1;
  }
};

} // namespace

ShellFlResult shell_fl_upper(const Diagram& d, const TreePair& tp) {
  ShellFlResult res;
  if (d.edges() == 0) {
    res.value = 0;
    res.exact = false;
    return res;
  }
  Ctx ctx(d);
  SubState s(ctx);
  int peak = s.boundary_len();

  // Root the dual tree at the outer vertex; parent[f] and the primal edge
  // crossed to reach the parent.
  auto dual = d.dual();
  int root = d.area();
  std::vector<int> parent(static_cast<size_t>(dual.n), -2);
  std::vector<int> parent_edge(static_cast<size_t>(dual.n), -1);
  {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(dual.n));
    for (size_t e = 0; e < dual.edges.size(); ++e) {
      if (!tp.dual_tree[e]) continue;
      auto [a, b] = dual.edges[e];
      adj[static_cast<size_t>(a)].emplace_back(b, static_cast<int>(e));
      adj[static_cast<size_t>(b)].emplace_back(a, static_cast<int>(e));
    }
    std::deque<int> q{root};
    parent[static_cast<size_t>(root)] = -1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (auto [w, e] : adj[static_cast<size_t>(v)])
        if (parent[static_cast<size_t>(w)] == -2) {
          parent[static_cast<size_t>(w)] = v;
          parent_edge[static_cast<size_t>(w)] = e;
          q.push_back(w);
        }
    }
  }

  auto shell_to = [&](int target) {
    // Collapse every still-present face on the dual-tree path root -> target,
    // near side first.
    std::vector<int> path;
    for (int f = target; f != root; f = parent[static_cast<size_t>(f)]) path.push_back(f);
    std::reverse(path.begin(), path.end());
    for (int f : path) {
      if (!s.face[static_cast<size_t>(f)]) continue;
      int via = parent_edge[static_cast<size_t>(f)];
      if (!s.collapse(f, via, res.witness, peak)) {
        int alt = s.collapse_edge(f);
        if (alt < 0 || !s.collapse(f, alt, res.witness, peak))
          fail(ErrorCode::Internal, "tree-guided shelling is stuck");
      }
    }
  };

  // Tour the spanning tree anticlockwise; shell the 2-cells to the right of
  // each traversed tree dart.
  std::vector<char> in_tree_edge = tp.tree;
  int start_dart = -1;
  for (int dart = 0; dart < 2 * d.edges() && start_dart < 0; ++dart)
    if (in_tree_edge[static_cast<size_t>(dart / 2)] &&
        d.darts()[static_cast<size_t>(dart)].origin == d.base_vertex())
      start_dart = dart;
  if (start_dart >= 0) {
    auto next_tree_dart = [&](int dart) {
      // first tree dart strictly after `dart` in the rotation at its origin
      int cur = d.darts()[static_cast<size_t>(dart)].next;
      while (!in_tree_edge[static_cast<size_t>(cur / 2)])
        cur = d.darts()[static_cast<size_t>(cur)].next;
      return cur;
    };
    int gamma = start_dart;
    int steps = 0;
    do {
      int right_face = d.face_left_of(d.darts()[static_cast<size_t>(gamma)].twin);
      if (right_face >= 0 && s.face[static_cast<size_t>(right_face)]) shell_to(right_face);
      gamma = next_tree_dart(d.darts()[static_cast<size_t>(gamma)].twin);
      ++steps;
    } while (gamma != start_dart && steps <= 4 * d.edges());
  }
  // Pockets not adjacent to the tree: nearest-to-root first.
  bool remaining = true;
  while (remaining) {
    remaining = false;
    for (int f = 0; f < d.area(); ++f)
      if (s.face[static_cast<size_t>(f)]) {
        shell_to(f);
        remaining = true;
        break;
      }
  }
  s.sweep(res.witness, peak);
  for (int e = 0; e < ctx.E; ++e)
    if (s.edge[static_cast<size_t>(e)])
      fail(ErrorCode::Internal, "tree-guided shelling left edges behind");

  res.value = peak;
  res.exact = false;

  int lambda = 0;
  for (int f = 0; f < d.area(); ++f)
    lambda = std::max(lambda, static_cast<int>(d.face_cycles()[static_cast<size_t>(f)].size()));
  int bound = tp.tree_diam + 2 * lambda * tp.dual_diam + d.boundary_length();
  if (res.value > bound)
    fail(ErrorCode::Internal, "tree-guided shelling exceeded the FL-by-DGL bound");
  return res;
}

// --- replay ---------------------------------------------------------------------

ShellReplay replay_shelling(const Diagram& d, const Shelling& s) {
  ShellReplay rep;
  Ctx ctx(d);
  std::vector<char> face(static_cast<size_t>(ctx.F), 1), edge(static_cast<size_t>(ctx.E), 1);

  struct Item {
    int dart;
    int copy; // 0 = real boundary dart; >0 phantom from an expansion
  };
  std::vector<Item> items;
  for (int dart : d.boundary_darts()) items.push_back(Item{dart, 0});
  int copy_counter = 0;

  auto word_of = [&]() {
    Word w;
    for (const Item& it : items) w.push_back(d.darts()[static_cast<size_t>(it.dart)].label);
    return w;
  };
  auto bad = [&](int idx, const std::string& msg) {
    rep.valid = false;
    rep.first_bad_move = idx;
    rep.error = msg;
    return rep;
  };

  rep.words.push_back(word_of());
  rep.max_len = static_cast<int>(items.size());
  auto filled = [&](int e) {
    int k = 0;
    for (int side : ctx.sides[static_cast<size_t>(e)])
      if (side >= 0 && face[static_cast<size_t>(side)]) ++k;
    return k;
  };

  for (size_t mi = 0; mi < s.size(); ++mi) {
    const ShellMove& m = s[mi];
    switch (m.kind) {
      case ShellMove::Kind::TwoCellCollapse: {
        int f = m.face, e = m.edge;
        if (f < 0 || f >= ctx.F || !face[static_cast<size_t>(f)])
          return bad(static_cast<int>(mi), "face absent");
        if (e < 0 || e >= ctx.E || !edge[static_cast<size_t>(e)])
          return bad(static_cast<int>(mi), "edge absent");
        if (filled(e) != 1) return bad(static_cast<int>(mi), "edge not on the boundary");
        // the boundary item whose left face is f and edge is e
        int at = -1;
        for (size_t i = 0; i < items.size(); ++i) {
          if (items[i].copy != 0 || items[i].dart / 2 != e) continue;
          if (d.face_left_of(items[i].dart) == f) {
            at = static_cast<int>(i);
            break;
          }
        }
        if (at < 0) return bad(static_cast<int>(mi), "collapse edge is not on the boundary walk");
        const auto& cycle = d.face_cycles()[static_cast<size_t>(f)];
        size_t k = 0;
        while (k < cycle.size() && cycle[k] != items[static_cast<size_t>(at)].dart) ++k;
        if (k == cycle.size()) return bad(static_cast<int>(mi), "dart missing from face cycle");
        std::vector<Item> repl;
        for (size_t j = cycle.size(); j-- > 1;) {
          int dart = cycle[(k + j) % cycle.size()];
          repl.push_back(Item{d.darts()[static_cast<size_t>(dart)].twin, 0});
        }
        int at_dart = items[static_cast<size_t>(at)].dart;
        items.erase(items.begin() + at);
        items.insert(items.begin() + at, repl.begin(), repl.end());
        face[static_cast<size_t>(f)] = 0;
        edge[static_cast<size_t>(e)] = 0;
        rep.positions.push_back(at);
        rep.move_darts.push_back(at_dart);
        ++rep.two_cell_collapses;
        break;
      }
      case ShellMove::Kind::OneCellCollapse: {
        int e = m.edge;
        // phantom spike first
        int at = -1;
        for (size_t i = 0; i + 1 < items.size(); ++i) {
          if (items[i].copy > 0 && items[i].copy == items[i + 1].copy &&
              items[i].dart / 2 == e &&
              items[i + 1].dart == d.darts()[static_cast<size_t>(items[i].dart)].twin) {
            at = static_cast<int>(i);
            break;
          }
        }
        if (at >= 0) {
          rep.move_darts.push_back(items[static_cast<size_t>(at)].dart);
          items.erase(items.begin() + at, items.begin() + at + 2);
          rep.positions.push_back(at);
          break;
        }
        if (e < 0 || e >= ctx.E || !edge[static_cast<size_t>(e)])
          return bad(static_cast<int>(mi), "edge absent");
        if (filled(e) != 0) return bad(static_cast<int>(mi), "spike still bounds a face");
        std::vector<int> deg(static_cast<size_t>(d.vertices()), 0);
        for (int e2 = 0; e2 < ctx.E; ++e2)
          if (edge[static_cast<size_t>(e2)]) {
            ++deg[static_cast<size_t>(ctx.ends[static_cast<size_t>(e2)][0])];
            ++deg[static_cast<size_t>(ctx.ends[static_cast<size_t>(e2)][1])];
          }
        auto [a, b] = ctx.ends[static_cast<size_t>(e)];
        int tip = -1;
        if (deg[static_cast<size_t>(a)] == 1 && a != ctx.base) tip = a;
        else if (deg[static_cast<size_t>(b)] == 1 && b != ctx.base) tip = b;
        if (tip < 0) return bad(static_cast<int>(mi), "edge is not a collapsible spike");
        for (size_t i = 0; i < items.size(); ++i) {
          size_t j = i + 1;
          if (j == items.size()) break; // never across the base corner
          if (items[i].copy == 0 && items[j].copy == 0 && items[i].dart / 2 == e &&
              items[j].dart == d.darts()[static_cast<size_t>(items[i].dart)].twin &&
              d.darts()[static_cast<size_t>(items[j].dart)].origin == tip) {
            at = static_cast<int>(i);
            break;
          }
        }
        if (at < 0) return bad(static_cast<int>(mi), "spike not found on the boundary walk");
        rep.move_darts.push_back(items[static_cast<size_t>(at)].dart);
        items.erase(items.begin() + at, items.begin() + at + 2);
        edge[static_cast<size_t>(e)] = 0;
        rep.positions.push_back(at);
        break;
      }
      case ShellMove::Kind::OneCellExpand: {
        int e = m.edge;
        if (e < 0 || e >= ctx.E || !edge[static_cast<size_t>(e)])
          return bad(static_cast<int>(mi), "edge absent");
        // cut at the first boundary corner of either endpoint
        auto [a, b] = ctx.ends[static_cast<size_t>(e)];
        int at = -1, dart = -1;
        for (size_t i = 0; i < items.size() && at < 0; ++i) {
          int v = d.darts()[static_cast<size_t>(items[i].dart)].origin;
          if (v == a) {
            at = static_cast<int>(i);
            dart = 2 * e;
            if (d.darts()[static_cast<size_t>(2 * e)].origin != a) dart = 2 * e + 1;
          } else if (v == b) {
            at = static_cast<int>(i);
            dart = 2 * e;
            if (d.darts()[static_cast<size_t>(2 * e)].origin != b) dart = 2 * e + 1;
          }
        }
        if (at < 0) return bad(static_cast<int>(mi), "cut edge has no boundary vertex");
        ++copy_counter;
        std::vector<Item> ins{Item{dart, copy_counter},
                              Item{d.darts()[static_cast<size_t>(dart)].twin, copy_counter}};
        items.insert(items.begin() + at, ins.begin(), ins.end());
        rep.positions.push_back(at);
        rep.move_darts.push_back(dart);
        break;
      }
    }
    rep.words.push_back(word_of());
    rep.max_len = std::max(rep.max_len, static_cast<int>(items.size()));
  }
  rep.valid = true;
  return rep;
}

} // namespace fillings
