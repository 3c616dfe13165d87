#pragma once

// Brute-force reference computations used only by the tests. They follow the
// definitions literally and avoid the library's shortcuts.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include "qfg/cut_scan.hpp"
#include "qfg/fgraph.hpp"
#include "qfg/lweight.hpp"
#include "qfg/redsets.hpp"

namespace oracle {

using qfg::FactGraph;
using qfg::KRFactor;
using qfg::VertexId;

/// d(J, {1, n}) by minimizing over every node of J and both boundary nodes.
inline int boundary_distance(int n, int lo, int hi) {
  int best = 1 << 20;
  for (int x = lo; x <= hi; ++x) best = std::min({best, std::abs(x - 1), std::abs(x - n)});
  return best;
}

/// Reducibility set by scanning a wide range of p.
inline std::set<int> rset(int n, int i, int j, int r, int s) {
  std::set<int> out;
  const int d = std::abs(i - j);
  const int bd = boundary_distance(n, std::min(i, j), std::max(i, j));
  for (int p = -100; p < 100; ++p) {
    if (p >= -bd && p < std::min(r, s)) out.insert(r + s + d - 2 * p);
  }
  return out;
}

/// Restricted set: J = [lo, hi] is treated as its own type-A diagram.
inline std::set<int> rset_restricted(int lo, int hi, int i, int j, int r, int s) {
  std::set<int> out;
  const int d = std::abs(i - j);
  int bd = 1 << 20;
  for (int x = std::min(i, j); x <= std::max(i, j); ++x) bd = std::min({bd, x - lo, hi - x});
  for (int p = -100; p < 100; ++p) {
    if (p >= -bd && p < std::min(r, s)) out.insert(r + s + d - 2 * p);
  }
  return out;
}

inline bool defqfact(const KRFactor& a, const KRFactor& b) {
  if (a.color != b.color || a.coset != b.coset) return true;
  for (int p = 0; p < std::min(a.length, b.length); ++p) {
    if (std::abs(a.center - b.center) == a.length + b.length - 2 * p) return false;
  }
  return true;
}

inline void partitions_rec(std::multiset<int> roots, std::vector<std::pair<int, int>>& cur,
                           std::set<std::vector<std::pair<int, int>>>& out) {
  if (roots.empty()) {
    auto sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    out.insert(sorted);
    return;
  }
  const int x = *roots.begin();
  std::multiset<int> rest = roots;
  rest.erase(rest.begin());
  int len = 1;
  while (true) {
    cur.emplace_back(x + len - 1, len);  // (center, length)
    partitions_rec(rest, cur, out);
    cur.pop_back();
    auto it = rest.find(x + 2 * len);
    if (it == rest.end()) break;
    rest.erase(it);
    ++len;
  }
}

/// Every decomposition of a root multiset (one color, one coset) into step-2
/// strings that pairwise satisfy the q-factor condition.
inline std::vector<std::vector<std::pair<int, int>>> valid_string_partitions(const std::multiset<int>& roots,
                                                                              int color) {
  std::set<std::vector<std::pair<int, int>>> all;
  std::vector<std::pair<int, int>> cur;
  partitions_rec(roots, cur, all);
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& part : all) {
    bool ok = true;
    for (std::size_t a = 0; a < part.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < part.size() && ok; ++b) {
        ok = defqfact({color, part[a].first, part[a].second, 0}, {color, part[b].first, part[b].second, 0});
      }
    }
    if (ok) out.push_back(part);
  }
  return out;
}

/// reach[a][b]: a directed path of positive length from vertices()[a] to [b].
inline std::vector<std::vector<bool>> closure(const FactGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& a : g.arrows()) reach[g.index_of(a.tail)][g.index_of(a.head)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  return reach;
}

inline std::vector<std::vector<bool>> closure_of(const FactGraph& g, const std::vector<qfg::Arrow>& arrows) {
  return closure(FactGraph(g.rank(), g.vertices(), arrows));
}

/// Vertices reached from v by walking arrows forwards (down) or backwards (up)
/// inside the vertex subset `side`.
inline std::set<VertexId> monotone_reach(const FactGraph& g, VertexId v, bool up, const std::set<VertexId>& side) {
  std::set<VertexId> seen;
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const auto& a : g.arrows()) {
      const VertexId from = up ? a.head : a.tail;
      const VertexId to = up ? a.tail : a.head;
      if (from == x && side.count(to) != 0 && seen.insert(to).second) stack.push_back(to);
    }
  }
  seen.erase(v);
  return seen;
}

inline std::set<VertexId> all_ids(const FactGraph& g) {
  auto ids = g.ids();
  return {ids.begin(), ids.end()};
}

inline bool extremal_in(const FactGraph& g, VertexId v, const std::set<VertexId>& side) {
  bool has_in = false, has_out = false;
  for (const auto& a : g.arrows()) {
    if (a.head == v && side.count(a.tail)) has_in = true;
    if (a.tail == v && side.count(a.head)) has_out = true;
  }
  return !has_in || !has_out;
}

inline bool isolated_in(const FactGraph& g, VertexId v, const std::set<VertexId>& side) {
  for (const auto& a : g.arrows()) {
    if (a.head == v && side.count(a.tail)) return false;
    if (a.tail == v && side.count(a.head)) return false;
  }
  return true;
}

/// The three conditions of the extremal-cut criterion, checked literally.
inline bool extremal_witness_valid(const FactGraph& g, const std::set<VertexId>& left, const std::set<VertexId>& right,
                                   VertexId vl, VertexId vr) {
  if (!left.count(vl) || !right.count(vr)) return false;
  if (!g.adjacent(vl, vr)) return false;
  if (!extremal_in(g, vl, left) || !extremal_in(g, vr, right)) return false;
  const auto all = all_ids(g);
  if (extremal_in(g, vl, all) && !isolated_in(g, vl, left)) return false;
  if (extremal_in(g, vr, all) && !isolated_in(g, vr, right)) return false;
  return true;
}

/// Search over every candidate pair, in both roles.
inline bool extremal_reducible(const FactGraph& g, const std::set<VertexId>& left, const std::set<VertexId>& right) {
  for (VertexId a : left)
    for (VertexId b : right)
      if (extremal_witness_valid(g, left, right, a, b)) return true;
  return false;
}

/// Dual-neighborhood criterion on one cut, with neighborhoods including
/// their base vertex.
inline bool dual_condition_holds(const FactGraph& g, const std::set<VertexId>& left,
                                 const std::set<VertexId>& right) {
  const auto& rank = g.rank();
  for (VertexId p1 : left) {
    for (VertexId p2 : right) {
      // (i): arrow p2 -> p1, L(a) (x) L(b)^* simple, a >= p1 in left, b <= p2 in right.
      if (g.has_arrow(p2, p1)) {
        auto tops = monotone_reach(g, p1, true, left);
        tops.insert(p1);
        auto bottoms = monotone_reach(g, p2, false, right);
        bottoms.insert(p2);
        bool ok = true;
        for (VertexId a : tops)
          for (VertexId b : bottoms)
            if (!(a == p1 && b == p2) &&
                !qfg::kr_dual_pair_simple(rank, g.vertex(a).factor(), g.vertex(b).factor()))
              ok = false;
        if (ok) return true;
      }
      // (ii): arrow p1 -> p2, L(a)^* (x) L(b) simple, a <= p1 in left, b >= p2 in right.
      if (g.has_arrow(p1, p2)) {
        auto bottoms = monotone_reach(g, p1, false, left);
        bottoms.insert(p1);
        auto tops = monotone_reach(g, p2, true, right);
        tops.insert(p2);
        bool ok = true;
        for (VertexId a : bottoms)
          for (VertexId b : tops)
            if (!(a == p1 && b == p2) &&
                !qfg::kr_dual_pair_simple(rank, g.vertex(b).factor(), g.vertex(a).factor()))
              ok = false;
        if (ok) return true;
      }
    }
  }
  return false;
}

}  // namespace oracle
