#include "qfg/cut_scan.hpp"

#include <bit>

#include "qfg/error.hpp"
#include "qfg/redsets.hpp"

namespace qfg {

namespace {

VertexMask bit(std::size_t v) { return VertexMask{1} << v; }

}  // namespace

CutScanContext::CutScanContext(const FactGraph& g) {
  const std::size_t n = g.size();
  if (n > 63) throw Error(ErrorKind::TooManyVertices, "cut scan supports at most 63 vertices");
  ids_ = g.ids();
  all_ = n == 0 ? 0 : (VertexMask{1} << n) - 1;
  in_.assign(n, 0);
  out_.assign(n, 0);
  for (const auto& a : g.arrows()) {
    const auto t = g.index_of(a.tail);
    const auto h = g.index_of(a.head);
    out_[t] |= bit(h);
    in_[h] |= bit(t);
  }
  dual_simple_.assign(n, 0);
  const auto& vs = g.vertices();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (kr_dual_pair_simple(g.rank(), vs[a].factor(), vs[b].factor())) dual_simple_[a] |= bit(b);
    }
  }
}

VertexMask CutScanContext::mask_of(const std::vector<VertexId>& ids) const {
  VertexMask m = 0;
  for (VertexId id : ids) {
    bool found = false;
    for (std::size_t k = 0; k < ids_.size(); ++k) {
      if (ids_[k] == id) {
        m |= bit(k);
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::InvalidCut, "unknown vertex " + std::to_string(id));
  }
  return m;
}

VertexMask CutScanContext::above_within(std::size_t v, VertexMask side) const {
  VertexMask seen = 0;
  VertexMask frontier = in_[v] & side;
  while (frontier != 0) {
    seen |= frontier;
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= in_[static_cast<std::size_t>(std::countr_zero(f))];
    }
    frontier = next & side & ~seen;
  }
  return seen;
}

VertexMask CutScanContext::below_within(std::size_t v, VertexMask side) const {
  VertexMask seen = 0;
  VertexMask frontier = out_[v] & side;
  while (frontier != 0) {
    seen |= frontier;
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= out_[static_cast<std::size_t>(std::countr_zero(f))];
    }
    frontier = next & side & ~seen;
  }
  return seen;
}

bool CutScanContext::arrowless(VertexMask right) const {
  const VertexMask left = all_ & ~right;
  for (VertexMask l = left; l != 0; l &= l - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(l));
    if (((in_[v] | out_[v]) & right) != 0) return false;
  }
  return true;
}

std::optional<ExtremalWitness> CutScanContext::extremal_witness(VertexMask right) const {
  const VertexMask left = all_ & ~right;
  auto qualifies = [&](std::size_t v, VertexMask side) {
    const bool extremal_in_side = (in_[v] & side) == 0 || (out_[v] & side) == 0;
    if (!extremal_in_side) return false;
    const bool extremal_in_graph = in_[v] == 0 || out_[v] == 0;
    const bool isolated_in_side = ((in_[v] | out_[v]) & side) == 0;
    return !extremal_in_graph || isolated_in_side;
  };
  for (VertexMask l = left; l != 0; l &= l - 1) {
    const auto a = static_cast<std::size_t>(std::countr_zero(l));
    if (!qualifies(a, left)) continue;
    for (VertexMask r = (in_[a] | out_[a]) & right; r != 0; r &= r - 1) {
      const auto b = static_cast<std::size_t>(std::countr_zero(r));
      if (qualifies(b, right)) return ExtremalWitness{ids_[a], ids_[b]};
    }
  }
  return std::nullopt;
}

// Looks for bases p in lower_side, pp in upper_side with arrow pp -> p such
// that L(a) (x) L(b)^* is simple for a above-or-equal p (within lower_side) and
// b below-or-equal pp (within upper_side), except (p, pp).
std::optional<DualWitness> CutScanContext::dual_condition(VertexMask lower_side, VertexMask upper_side,
                                                          bool swapped) const {
  for (VertexMask l = lower_side; l != 0; l &= l - 1) {
    const auto p = static_cast<std::size_t>(std::countr_zero(l));
    for (VertexMask u = in_[p] & upper_side; u != 0; u &= u - 1) {
      const auto pp = static_cast<std::size_t>(std::countr_zero(u));
      const VertexMask tops = above_within(p, lower_side) | bit(p);
      const VertexMask bottoms = below_within(pp, upper_side) | bit(pp);
      bool ok = true;
      for (VertexMask t = tops; t != 0 && ok; t &= t - 1) {
        const auto a = static_cast<std::size_t>(std::countr_zero(t));
        const VertexMask need = a == p ? bottoms & ~bit(pp) : bottoms;
        ok = (need & ~dual_simple_[a]) == 0;
      }
      if (!ok) continue;
      DualWitness w;
      w.condition = swapped ? 2 : 1;
      w.left_base = ids_[swapped ? pp : p];
      w.right_base = ids_[swapped ? p : pp];
      for (VertexMask t = tops; t != 0; t &= t - 1) {
        const auto a = static_cast<std::size_t>(std::countr_zero(t));
        for (VertexMask b = bottoms; b != 0; b &= b - 1) {
          const auto c = static_cast<std::size_t>(std::countr_zero(b));
          if (a == p && c == pp) continue;
          w.simple_pairs.emplace_back(ids_[a], ids_[c]);
        }
      }
      return w;
    }
  }
  return std::nullopt;
}

std::optional<DualWitness> CutScanContext::dual_witness(VertexMask right) const {
  const VertexMask left = all_ & ~right;
  if (auto w = dual_condition(left, right, false)) return w;
  return dual_condition(right, left, true);
}

CutScan CutScanContext::evaluate(VertexMask right) const {
  if ((right & ~all_) != 0 || right == 0 || right == all_) {
    throw Error(ErrorKind::InvalidCut, "cut sides must partition the vertex set nontrivially");
  }
  CutScan s;
  s.right = right;
  s.arrowless = arrowless(right);
  s.extremal = extremal_witness(right);
  s.dual = dual_witness(right);
  return s;
}

std::vector<CutScan> scan_cuts_serial(const CutScanContext& ctx) {
  std::vector<CutScan> out;
  if (ctx.size() < 2) return out;
  const std::uint64_t count = (std::uint64_t{1} << (ctx.size() - 1)) - 1;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(ctx.evaluate(cut_mask(k)));
  return out;
}

}  // namespace qfg
