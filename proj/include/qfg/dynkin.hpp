#pragma once

#include <compare>
#include <span>
#include <vector>

namespace qfg {

using Node = int;

/// Closed integer interval [lo, hi] of nodes; a connected subdiagram of A_n.
struct Interval {
  Node lo = 1;
  Node hi = 1;

  bool contains(Node i) const { return lo <= i && i <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  int size() const { return hi - lo + 1; }
  std::vector<Node> nodes() const;

  auto operator<=>(const Interval&) const = default;
};

/// The type A_n Dynkin diagram with nodes 1..n.
class DynkinA {
 public:
  explicit DynkinA(int n);

  int rank() const { return n_; }
  bool valid(Node i) const { return 1 <= i && i <= n_; }
  /// Throws InvalidNode unless 1 <= i <= n.
  void check(Node i) const;

  int distance(Node i, Node j) const;
  Interval interval(Node i, Node j) const;

  /// d(J, {1, n}) for a connected interval J.
  int boundary_distance(const Interval& j) const;
  /// Same, for an arbitrary node set; throws InvalidInterval when the set is
  /// empty or not an interval.
  int boundary_distance(std::span<const Node> j) const;

  /// w0 involution, i -> n + 1 - i.
  Node star(Node i) const;
  int dual_coxeter() const { return n_ + 1; }

  Interval full() const { return {1, n_}; }

  bool operator==(const DynkinA&) const = default;

 private:
  int n_;
};

}  // namespace qfg
