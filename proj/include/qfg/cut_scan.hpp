#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qfg/fgraph.hpp"

namespace qfg {

using VertexMask = std::uint64_t;

/// Witness for extremal cut reducibility: `left` and `right` are
/// adjacent, each extremal in its side, and a vertex extremal in the whole
/// graph is isolated in its side.
struct ExtremalWitness {
  VertexId left = 0;
  VertexId right = 0;
  bool operator==(const ExtremalWitness&) const = default;
};

/// Witness for the dual-neighborhood criterion on one cut. Condition 1: arrow
/// right_base -> left_base, and L(a) (x) L(b)^* simple for all listed pairs
/// (a in the upper neighborhood of left_base, b in the lower neighborhood of
/// right_base). Condition 2 is the same with the sides exchanged.
struct DualWitness {
  int condition = 1;
  VertexId left_base = 0;
  VertexId right_base = 0;
  /// Pairs (a, b) asserted to satisfy kr_dual_pair_simple(a, b).
  std::vector<std::pair<VertexId, VertexId>> simple_pairs;
  bool operator==(const DualWitness&) const = default;
};

struct CutScan {
  /// Bit k set when vertices()[k] is on the right side.
  VertexMask right = 0;
  bool arrowless = false;
  std::optional<ExtremalWitness> extremal;
  std::optional<DualWitness> dual;
  bool operator==(const CutScan&) const = default;
};

/// Bitmask view of a graph for cut evaluation. Limited to 63 vertices.
class CutScanContext {
 public:
  explicit CutScanContext(const FactGraph& g);

  std::size_t size() const { return ids_.size(); }
  VertexMask all() const { return all_; }
  VertexMask mask_of(const std::vector<VertexId>& ids) const;
  VertexId id(std::size_t k) const { return ids_[k]; }

  CutScan evaluate(VertexMask right) const;
  std::optional<ExtremalWitness> extremal_witness(VertexMask right) const;
  std::optional<DualWitness> dual_witness(VertexMask right) const;
  bool arrowless(VertexMask right) const;

 private:
  VertexMask above_within(std::size_t v, VertexMask side) const;
  VertexMask below_within(std::size_t v, VertexMask side) const;
  std::optional<DualWitness> dual_condition(VertexMask lower_side, VertexMask upper_side,
                                            bool swapped) const;

  std::vector<VertexId> ids_;
  VertexMask all_ = 0;
  std::vector<VertexMask> in_;   // in_[v]: tails of arrows into v
  std::vector<VertexMask> out_;  // out_[v]: heads of arrows out of v
  std::vector<VertexMask> dual_simple_;  // bit b of row a: L(a) (x) L(b)^* simple
};

/// Right-side mask of cut number k, matching CutRange::at.
inline VertexMask cut_mask(std::uint64_t k) { return (k + 1) << 1; }

/// Serial reference: evaluates every cut in order.
std::vector<CutScan> scan_cuts_serial(const CutScanContext& ctx);
/// OpenMP version; identical output to the serial reference.
std::vector<CutScan> scan_cuts_omp(const CutScanContext& ctx);

}  // namespace qfg
