#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qfg/dynkin.hpp"
#include "qfg/lweight.hpp"

namespace qfg {

using VertexId = int;

struct Vertex {
  VertexId id = 0;
  Node color = 1;
  int center = 0;
  int weight = 1;
  int coset = 0;

  KRFactor factor() const { return {color, center, weight, coset}; }
  bool operator==(const Vertex&) const = default;
};

struct Arrow {
  VertexId tail = 0;
  VertexId head = 0;
  int exponent = 0;

  auto operator<=>(const Arrow&) const = default;
};

/// Colored, weighted directed graph whose vertices carry absolute centers.
/// Structural well-formedness (unique ids, arrows between known vertices) is
/// enforced on construction; the factorization-graph axioms are checked by
/// `validate`.
class FactGraph {
 public:
  explicit FactGraph(DynkinA rank) : rank_(rank) {}
  FactGraph(DynkinA rank, std::vector<Vertex> vertices, std::vector<Arrow> arrows);

  const DynkinA& rank() const { return rank_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t size() const { return vertices_.size(); }

  bool has_vertex(VertexId id) const;
  /// Position of `id` in vertices(); throws InvalidVertex.
  std::size_t index_of(VertexId id) const;
  const Vertex& vertex(VertexId id) const { return vertices_[index_of(id)]; }

  bool has_arrow(VertexId tail, VertexId head) const;
  bool adjacent(VertexId a, VertexId b) const { return has_arrow(a, b) || has_arrow(b, a); }
  std::vector<VertexId> ids() const;
  /// Undirected neighbours.
  std::vector<VertexId> neighbours(VertexId id) const;

  FactGraph induced(const std::vector<VertexId>& ids) const;

  bool operator==(const FactGraph&) const = default;

 private:
  DynkinA rank_;
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
};

/// One vertex per factor (ids 0..N-1 in factor order); an arrow f -> g with
/// exponent m whenever L(f) (x) L(g) is reducible and highest-l-weight.
FactGraph build_graph(const DrinfeldPoly& p);

DrinfeldPoly to_polynomial(const FactGraph& g);

enum class Level { Prefact, Pseudo, QFact };

struct ValidationReport {
  bool ok = true;
  /// Level whose axiom failed.
  Level failed_at = Level::Prefact;
  std::string message;
  std::optional<std::pair<VertexId, VertexId>> witness;
};

ValidationReport validate(const FactGraph& g, Level level);

std::vector<FactGraph> connected_components(const FactGraph& g);
bool is_connected(const FactGraph& g);

/// Strict partial order generated by tail > head.
class Poset {
 public:
  Poset(std::vector<VertexId> ids, std::vector<std::vector<bool>> above);

  const std::vector<VertexId>& ids() const { return ids_; }
  /// a > b, i.e. b is reachable from a along arrows.
  bool greater(VertexId a, VertexId b) const;
  bool comparable(VertexId a, VertexId b) const;
  bool is_total() const;

 private:
  std::size_t pos(VertexId id) const;

  std::vector<VertexId> ids_;
  std::vector<std::vector<bool>> above_;
};

/// Transitive closure of the arrows; throws CyclicGraph.
Poset partial_order(const FactGraph& g);

bool has_oriented_cycle(const FactGraph& g);
bool is_totally_ordered(const FactGraph& g);
/// No outgoing arrows (isolated vertices are both sinks and sources).
std::vector<VertexId> sinks(const FactGraph& g);
std::vector<VertexId> sources(const FactGraph& g);
bool is_extremal(const FactGraph& g, VertexId v);
bool is_tournament(const FactGraph& g);
bool is_tree(const FactGraph& g);
bool is_line(const FactGraph& g);
bool is_monotonic_line(const FactGraph& g);

enum class Sign { Plus, Minus };

/// N^+(v): vertices above v (v reachable from them along arrows);
/// N^-(v): vertices below v. The base vertex is excluded.
std::vector<VertexId> neighborhoods(const FactGraph& g, VertexId v, Sign sign);

struct Cut {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
  std::vector<Arrow> crossing;
};

/// Lazily enumerates the 2^(N-1) - 1 nontrivial unordered bipartitions. The
/// first vertex always lies in `left`.
class CutRange {
 public:
  static constexpr std::size_t kDefaultCap = 20;

  CutRange(const FactGraph& g, std::size_t cap = kDefaultCap);

  std::uint64_t count() const { return count_; }
  /// Cut number k in [0, count()): right side = bits of (k + 1) shifted past
  /// the first vertex.
  Cut at(std::uint64_t k) const;

  class iterator {
   public:
    using value_type = Cut;
    using difference_type = std::ptrdiff_t;
    iterator(const CutRange* range, std::uint64_t k) : range_(range), k_(k) {}
    Cut operator*() const { return range_->at(k_); }
    iterator& operator++() {
      ++k_;
      return *this;
    }
    bool operator==(const iterator& o) const { return k_ == o.k_; }

   private:
    const CutRange* range_;
    std::uint64_t k_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }

 private:
  const FactGraph* g_;
  std::uint64_t count_;
};

CutRange cuts(const FactGraph& g, std::size_t cap = CutRange::kDefaultCap);

/// Builds the Cut with the given left side; throws InvalidCut if the sides
/// are not a nontrivial partition.
Cut make_cut(const FactGraph& g, const std::vector<VertexId>& left);

/// Arrows reversed and centers negated.
FactGraph arrow_dual(const FactGraph& g);
/// Colors mapped through the diagram involution.
FactGraph color_dual(const FactGraph& g);

std::vector<Arrow> transitive_reduction(const FactGraph& g);

struct TensorGraph {
  FactGraph graph;
  /// 0 for vertices from the left factor, 1 for the right.
  std::vector<int> origin;
  /// q-factors of the product are the union of the factors' q-factors.
  bool dissociate = false;
};

TensorGraph graph_tensor(const FactGraph& g, const FactGraph& h);

/// Each component shifted to minimal center 0 with its vertices sorted by
/// (color, center, weight, coset); components are then listed in sorted order
/// and ids renumbered. Equal vertices inside a component are treated as
/// interchangeable, which is exact for graphs built from polynomials.
FactGraph canonical_form(const FactGraph& g);
bool isomorphic(const FactGraph& g, const FactGraph& h);

/// Renames vertices()[i] to perm[i]; vertices are then listed by new id.
FactGraph relabel(const FactGraph& g, const std::vector<VertexId>& perm);

}  // namespace qfg
