#include "bridges.hpp"

#include <algorithm>
#include <cassert>

namespace fillings {

namespace {

// Mutable planar map for the singular-annuli construction. The inner face
// (still unfilled region) is tracked as the dart cycle D; invariantly
// fnext(D[i]) = D[i+1], where fnext(d) = next(twin(d)).
struct AnnuliBuilder {
  struct BDart {
    int twin = -1;
    int next = -1;
    int origin = -1;
    Letter label = 0;
    bool dead = false;
  };
  std::vector<BDart> darts;
  std::vector<char> vdead;
  int nv = 0;
  std::vector<int> D;
  int base = 0;
  int first_boundary = -1; // reads w0[0] from the base, remapped through folds

  int new_vertex() {
    vdead.push_back(0);
    return nv++;
  }
  int new_edge(int u, int v, Letter x) {
    int f = static_cast<int>(darts.size());
    darts.push_back(BDart{f + 1, -1, u, x, false});
    darts.push_back(BDart{f, -1, v, inverse(x), false});
    return f;
  }
  int twin(int d) const { return darts[static_cast<size_t>(d)].twin; }
  int nxt(int d) const { return darts[static_cast<size_t>(d)].next; }
  void set_next(int d, int s) { darts[static_cast<size_t>(d)].next = s; }
  int rot_prev(int d) const {
    int cur = d;
    while (nxt(cur) != d) cur = nxt(cur);
    return cur;
  }
  int cyc(int i) const { return (i % static_cast<int>(D.size()) + static_cast<int>(D.size())) %
                                static_cast<int>(D.size()); }
  // corner dart before position i: twin of the previous inner dart
  int corner(int pos) const { return twin(D[static_cast<size_t>(cyc(pos - 1))]); }

  void remap_tracked(int from, int to) {
    if (first_boundary == from) first_boundary = to;
    for (int& d : D)
      if (d == from) d = to;
  }

  void init(const Word& w0) {
    int n = w0.size();
    base = new_vertex();
    if (n == 0) return;
    if (n == 1) {
      int g = new_edge(base, base, w0[0]);
      set_next(g, g + 1);
      set_next(g + 1, g);
      D = {g};
      first_boundary = g;
      return;
    }
    std::vector<int> vtx{base};
    for (int i = 1; i < n; ++i) vtx.push_back(new_vertex());
    std::vector<int> fwd;
    for (int i = 0; i < n; ++i)
      fwd.push_back(new_edge(vtx[static_cast<size_t>(i)], vtx[static_cast<size_t>((i + 1) % n)],
                             w0[i]));
    for (int i = 0; i < n; ++i) {
      // at vertex i+1: rotation (b_i, f_{i+1})
      set_next(fwd[static_cast<size_t>(i)] + 1, fwd[static_cast<size_t>((i + 1) % n)]);
      set_next(fwd[static_cast<size_t>((i + 1) % n)], fwd[static_cast<size_t>(i)] + 1);
    }
    D = fwd;
    first_boundary = fwd[0];
  }

  void free_expand(int pos, Letter x) {
    int tip = new_vertex();
    int v = darts[static_cast<size_t>(D[static_cast<size_t>(cyc(pos))])].origin;
    if (pos == static_cast<int>(D.size()))
      v = darts[static_cast<size_t>(D[0])].origin;
    int cp = corner(pos);
    int g = new_edge(v, tip, x);
    set_next(g + 1, g + 1);
    set_next(g, nxt(cp));
    set_next(cp, g);
    D.insert(D.begin() + pos, {g, g + 1});
  }

  void fold(int pos) {
    int d = D[static_cast<size_t>(pos)];
    int dp = D[static_cast<size_t>(pos + 1)];
    int len = static_cast<int>(D.size());
    if (len == 2) {
      if (dp == twin(d)) {
        // the bare-arc diagram: nothing to merge
        D.clear();
        return;
      }
      // bigon closes: identify the two edges, one survives
      set_next(twin(d), nxt(dp));
      int td = twin(dp);
      int q = rot_prev(td);
      if (q == td) fail(ErrorCode::Internal, "fold removal of a singleton rotation");
      set_next(q, nxt(td));
      darts[static_cast<size_t>(dp)].dead = true;
      darts[static_cast<size_t>(td)].dead = true;
      remap_tracked(td, d);
      remap_tracked(dp, twin(d));
      D.clear();
      return;
    }
    if (dp == twin(d)) {
      // spike poking into the inner region; tip degree 1 by the chaining
      int tip = darts[static_cast<size_t>(dp)].origin;
      if (nxt(dp) != dp) fail(ErrorCode::Internal, "spike tip is not a leaf");
      if (tip == base) fail(ErrorCode::Internal, "spike tip is the base vertex");
      int p = rot_prev(d);
      set_next(p, nxt(d) == d ? p : nxt(d));
      if (nxt(d) == d) fail(ErrorCode::Internal, "spike origin rotation broken");
      darts[static_cast<size_t>(d)].dead = true;
      darts[static_cast<size_t>(dp)].dead = true;
      vdead[static_cast<size_t>(tip)] = 1;
      D.erase(D.begin() + pos, D.begin() + pos + 2);
      return;
    }
    // generic fold of two distinct edges meeting at y = head(d)
    int td = twin(d), tdp = twin(dp);
    int V = darts[static_cast<size_t>(d)].origin;
    int W = darts[static_cast<size_t>(tdp)].origin;
    int y = darts[static_cast<size_t>(td)].origin;
    if (y == V || y == W)
      fail(ErrorCode::Internal, "loop-edge fold is not supported");
    // remove dp from the rotation at y (its predecessor there is twin(d))
    set_next(td, nxt(dp));
    int p = corner(pos); // rotation predecessor of d at V
    int t = nxt(tdp);    // inner successor past the pair
    if (V != W) {
      int q = rot_prev(tdp);
      if (q == tdp) { // W had only this dart
        set_next(p, d);
      } else {
        set_next(p, t);
        set_next(q, d);
      }
      int keep = W == base ? W : V;
      int lose = keep == V ? W : V;
      for (size_t i = 0; i < darts.size(); ++i)
        if (!darts[i].dead && darts[i].origin == lose) darts[i].origin = keep;
      vdead[static_cast<size_t>(lose)] = 1;
    } else if (t != p) {
      int q2 = rot_prev(p);
      int r = rot_prev(tdp);
      set_next(p, t);
      set_next(q2, d);
      set_next(r, p);
    } else {
      // The zip seals a lobe the sequence built and then cancelled: the
      // inner boundary enters V and immediately leaves along the same edge
      // once the pair is gone. The sealed lobe faces nothing but itself, so
      // per the amendment it is dropped wholesale, leaving that edge as a
      // spike into the inner region.
      std::vector<int> sector;
      for (int cur = d;; cur = nxt(cur)) {
        sector.push_back(cur);
        if (cur == tdp) break;
        if (sector.size() > darts.size()) fail(ErrorCode::Internal, "sector walk diverged");
      }
      std::vector<char> in_r(static_cast<size_t>(nv), 0);
      std::vector<int> stack;
      for (int sd : sector) {
        int far = darts[static_cast<size_t>(twin(sd))].origin;
        if (far != V && !in_r[static_cast<size_t>(far)]) {
          in_r[static_cast<size_t>(far)] = 1;
          stack.push_back(far);
        }
      }
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (size_t i = 0; i < darts.size(); ++i) {
          if (darts[i].dead || darts[i].origin != v) continue;
          int far = darts[static_cast<size_t>(darts[i].twin)].origin;
          // lobe edges back to V have their V-side dart in the sector
          if (far == V) continue;
          if (!in_r[static_cast<size_t>(far)]) {
            in_r[static_cast<size_t>(far)] = 1;
            stack.push_back(far);
          }
        }
      }
      for (size_t i = 0; i < darts.size(); ++i)
        if (!darts[i].dead && in_r[static_cast<size_t>(darts[i].origin)]) darts[i].dead = true;
      for (int sd : sector) darts[static_cast<size_t>(sd)].dead = true;
      for (int v = 0; v < nv; ++v)
        if (in_r[static_cast<size_t>(v)]) vdead[static_cast<size_t>(v)] = 1;
      set_next(p, p);
      for (int pos2 = 0; pos2 < static_cast<int>(D.size()); ++pos2)
        if (pos2 != pos && pos2 != pos + 1 && darts[static_cast<size_t>(D[static_cast<size_t>(pos2)])].dead)
          fail(ErrorCode::Internal, "inner boundary reaches into the sealed lobe");
      D.erase(D.begin() + pos, D.begin() + pos + 2);
      return;
    }
    darts[static_cast<size_t>(dp)].dead = true;
    darts[static_cast<size_t>(tdp)].dead = true;
    remap_tracked(tdp, d);
    remap_tracked(dp, td);
    D.erase(D.begin() + pos, D.begin() + pos + 2);
  }

  void attach_insertion(int pos, const Word& c) {
    // k = 0: glue a cell reading c at the corner; inner gains invert(c)
    int lambda = c.size();
    int v = darts[static_cast<size_t>(D[static_cast<size_t>(cyc(pos))])].origin;
    if (pos == static_cast<int>(D.size())) v = darts[static_cast<size_t>(D[0])].origin;
    std::vector<int> g;
    int prev = v;
    for (int i = 0; i < lambda; ++i) {
      int to = i + 1 == lambda ? v : new_vertex();
      g.push_back(new_edge(prev, to, c[i]));
      prev = to;
    }
    for (int i = 0; i + 1 < lambda; ++i) {
      set_next(g[static_cast<size_t>(i)] + 1, g[static_cast<size_t>(i + 1)]);
      set_next(g[static_cast<size_t>(i + 1)], g[static_cast<size_t>(i)] + 1);
    }
    int cp = corner(pos);
    int after = nxt(cp);
    set_next(cp, g[static_cast<size_t>(lambda - 1)] + 1);
    set_next(g[static_cast<size_t>(lambda - 1)] + 1, g[0]);
    set_next(g[0], after);
    std::vector<int> vdarts;
    for (int i = lambda - 1; i >= 0; --i) vdarts.push_back(g[static_cast<size_t>(i)] + 1);
    D.insert(D.begin() + pos, vdarts.begin(), vdarts.end());
  }

  void attach_monogon(int pos) {
    // k = 1, cell word of length 1: close a monogon along D[pos]
    int d = D[static_cast<size_t>(pos)];
    int tCE = twin(d);
    int tDS = corner(pos);
    int P1 = darts[static_cast<size_t>(d)].origin;
    int P2 = darts[static_cast<size_t>(tCE)].origin;
    int after = D[static_cast<size_t>(cyc(pos + 1))];
    if (P1 != P2) {
      set_next(tCE, d);
      set_next(tDS, after);
      int keep = P2 == base ? P2 : P1;
      int lose = keep == P1 ? P2 : P1;
      for (size_t i = 0; i < darts.size(); ++i)
        if (!darts[i].dead && darts[i].origin == lose) darts[i].origin = keep;
      vdead[static_cast<size_t>(lose)] = 1;
    } else {
      int p1 = rot_prev(tCE);
      int p2 = rot_prev(tDS);
      set_next(tCE, d);
      set_next(tDS, after);
      set_next(p1, tDS);
      set_next(p2, tCE);
    }
    D.erase(D.begin() + pos);
  }

  void attach_cell(int pos, const Word& c) {
    // k = 1: the cell covers D[pos] (reading c[0]) plus a fresh chain
    int lambda = c.size();
    int d = D[static_cast<size_t>(pos)];
    if (static_cast<int>(D.size()) == 1) {
      if (lambda == 1) { // monogon fills the monogon: inner region is done
        D.clear();
        return;
      }
      int V = darts[static_cast<size_t>(d)].origin;
      std::vector<int> g;
      int prev = V;
      for (int i = 1; i < lambda; ++i) {
        int to = i + 1 == lambda ? V : new_vertex();
        g.push_back(new_edge(prev, to, c[i]));
        prev = to;
      }
      for (int i = 0; i + 1 < static_cast<int>(g.size()); ++i) {
        set_next(g[static_cast<size_t>(i)] + 1, g[static_cast<size_t>(i + 1)]);
        set_next(g[static_cast<size_t>(i + 1)], g[static_cast<size_t>(i)] + 1);
      }
      int glast = g.back();
      set_next(twin(d), g[0]);
      set_next(g[0], glast + 1);
      set_next(glast + 1, d);
      D.clear();
      for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i)
        D.push_back(g[static_cast<size_t>(i)] + 1);
      return;
    }
    if (lambda == 1) {
      attach_monogon(pos);
      return;
    }
    int P_end = darts[static_cast<size_t>(twin(d))].origin;
    int P_start = darts[static_cast<size_t>(d)].origin;
    std::vector<int> g;
    int prev = P_end;
    for (int i = 1; i < lambda; ++i) {
      int to = i + 1 == lambda ? P_start : new_vertex();
      g.push_back(new_edge(prev, to, c[i]));
      prev = to;
    }
    for (int i = 0; i + 1 < static_cast<int>(g.size()); ++i) {
      set_next(g[static_cast<size_t>(i)] + 1, g[static_cast<size_t>(i + 1)]);
      set_next(g[static_cast<size_t>(i + 1)], g[static_cast<size_t>(i)] + 1);
    }
    int glast = g.back();
    // at P_end: insert g1 right after twin(d)
    set_next(g[0], nxt(twin(d)));
    set_next(twin(d), g[0]);
    // at P_start: insert twin(glast) right after the corner dart
    int cp = corner(pos);
    set_next(glast + 1, nxt(cp));
    set_next(cp, glast + 1);
    std::vector<int> vdarts;
    for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i)
      vdarts.push_back(g[static_cast<size_t>(i)] + 1);
    D.erase(D.begin() + pos);
    D.insert(D.begin() + pos, vdarts.begin(), vdarts.end());
  }

};

} // namespace

Diagram sequence_to_diagram(const NullSequence& ns, const Presentation& p) {
  ReplayResult rep = replay(ns, p, ShiftPolicy::Allow);
  if (!rep.valid || !rep.words.back().empty())
    fail(ErrorCode::InvalidSequence, rep.valid ? "sequence does not end at the empty word"
                                               : "invalid move: " + rep.error);
  if (ns.start.empty()) return Diagram::single_vertex();

  // Normalize: truncate at the first empty word and expand general relator
  // matches into the single-letter mirror move plus free reductions.
  std::vector<Move> moves;
  {
    Word cur = ns.start;
    for (size_t i = 0; i < ns.moves.size() && !cur.empty(); ++i) {
      const Move& m = ns.moves[i];
      if (m.kind == Move::Kind::ApplyRelator) {
        int k = m.match_len;
        if (k < 0) {
          k = 0;
          while (k < m.closure.size() && m.pos + k < cur.size() && cur[m.pos + k] == m.closure[k])
            ++k;
        }
        if (k <= 1) {
          moves.push_back(Move::apply_relator(m.closure, m.pos, k));
        } else {
          moves.push_back(Move::apply_relator(m.closure, m.pos, 1));
          int base_pos = m.pos + (m.closure.size() - 1);
          for (int j = 0; j < k - 1; ++j) moves.push_back(Move::free_reduce(base_pos - 1 - j));
        }
      } else {
        moves.push_back(m);
      }
      cur = rep.words[i + 1];
    }
  }

  AnnuliBuilder b;
  b.init(ns.start);
  {
    // Drive the builder; re-derive each intermediate word as a cross-check.
    RelatorClosure closure = RelatorClosure::of(p);
    Word cur = ns.start;
    for (const Move& m : moves) {
      std::string err;
      auto next = apply_move(cur, m, closure, ShiftPolicy::Allow, &err);
      if (!next) fail(ErrorCode::Internal, "normalized sequence broke: " + err);
      switch (m.kind) {
        case Move::Kind::FreeExpand: b.free_expand(m.pos, m.letter); break;
        case Move::Kind::FreeReduce: b.fold(m.pos); break;
        case Move::Kind::CyclicShift: {
          int n = static_cast<int>(b.D.size());
          if (n > 0) {
            int off = ((m.offset % n) + n) % n;
            std::rotate(b.D.begin(), b.D.begin() + off, b.D.end());
          }
          break;
        }
        case Move::Kind::ApplyRelator: {
          if (m.match_len == 0)
            b.attach_insertion(m.pos, m.closure);
          else if (static_cast<int>(b.D.size()) == m.closure.size() && m.pos == 0 &&
                   m.match_len == m.closure.size())
            b.D.clear(); // cell fills the whole inner region
          else
            b.attach_cell(m.pos, m.closure);
          break;
        }
      }
      cur = *next;
      if (static_cast<int>(b.D.size()) != cur.size())
        fail(ErrorCode::Internal, "builder lost track of the inner word");
      if (cur.empty()) break;
    }
  }

  // Compact and hand off to the validating constructor.
  std::vector<int> dmap(b.darts.size(), -1), vmap(static_cast<size_t>(b.nv), -1);
  int nverts = 0;
  for (int v = 0; v < b.nv; ++v)
    if (!b.vdead[static_cast<size_t>(v)]) vmap[static_cast<size_t>(v)] = nverts++;
  std::vector<Diagram::Dart> out;
  for (size_t i = 0; i < b.darts.size(); ++i)
    if (!b.darts[i].dead) {
      dmap[i] = static_cast<int>(out.size());
      out.emplace_back();
    }
  // The builder's chaining uses successor-of-twin as the face map; the
  // Diagram convention is predecessor-of-twin, so hand over the inverse
  // rotation (same orbits, same cyclic order).
  std::vector<int> bprev(b.darts.size(), -1);
  for (size_t i = 0; i < b.darts.size(); ++i)
    if (!b.darts[i].dead) bprev[static_cast<size_t>(b.darts[i].next)] = static_cast<int>(i);
  for (size_t i = 0, k = 0; i < b.darts.size(); ++i) {
    if (b.darts[i].dead) continue;
    Diagram::Dart& nd = out[k++];
    nd.twin = dmap[static_cast<size_t>(b.darts[i].twin)];
    nd.next = bprev[i] < 0 ? -1 : dmap[static_cast<size_t>(bprev[i])];
    nd.origin = vmap[static_cast<size_t>(b.darts[i].origin)];
    nd.label = b.darts[i].label;
    if (nd.twin < 0 || nd.next < 0 || nd.origin < 0)
      fail(ErrorCode::Internal, "dangling reference to a dead cell");
  }
  if (b.first_boundary < 0 || b.darts[static_cast<size_t>(b.first_boundary)].dead)
    fail(ErrorCode::Internal, "lost the boundary corner");
  int fb = dmap[static_cast<size_t>(b.first_boundary)];
  int outer = out[static_cast<size_t>(fb)].twin;
  Diagram dia = Diagram::from_parts(std::move(out), nverts, vmap[static_cast<size_t>(b.base)],
                                    outer, fb);
  if (dia.boundary_word() != ns.start)
    fail(ErrorCode::Internal, "constructed boundary does not read the start word");
  return dia;
}

NullSequence diagram_to_sequence(const Diagram& d, const Shelling& s) {
  ShellReplay rep = replay_shelling(d, s);
  if (!rep.valid) fail(ErrorCode::InvalidShelling, rep.error);
  if (!rep.words.back().empty())
    fail(ErrorCode::InvalidShelling, "shelling does not reach the base vertex");
  NullSequence ns;
  ns.start = d.boundary_word();
  for (size_t i = 0; i < s.size(); ++i) {
    int pos = rep.positions[i];
    int dart = rep.move_darts[i];
    switch (s[i].kind) {
      case ShellMove::Kind::TwoCellCollapse: {
        const auto& cycle = d.face_cycles()[static_cast<size_t>(s[i].face)];
        size_t at = 0;
        while (at < cycle.size() && cycle[at] != dart) ++at;
        Word c;
        for (size_t j = 0; j < cycle.size(); ++j)
          c.push_back(d.darts()[static_cast<size_t>(cycle[(at + j) % cycle.size()])].label);
        ns.moves.push_back(Move::apply_relator(c, pos, 1));
        break;
      }
      case ShellMove::Kind::OneCellCollapse:
        ns.moves.push_back(Move::free_reduce(pos));
        break;
      case ShellMove::Kind::OneCellExpand:
        ns.moves.push_back(
            Move::free_expand(pos, d.darts()[static_cast<size_t>(dart)].label));
        break;
    }
  }
  return ns;
}

} // namespace fillings
