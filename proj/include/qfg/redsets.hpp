#pragma once

#include <optional>
#include <vector>

#include "qfg/dynkin.hpp"
#include "qfg/lweight.hpp"

namespace qfg {

/// A reducibility set. Always an arithmetic progression of step 2, stored
/// by its bounds; membership is a parity and range check.
class RSet {
 public:
  RSet() = default;
  /// {base - 2p : p_min <= p < p_max}
  RSet(int base, int p_min, int p_max);

  bool empty() const { return p_min_ >= p_max_; }
  bool contains(int m) const;
  int min() const;
  int max() const;
  std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(p_max_ - p_min_); }
  /// Ascending.
  std::vector<int> members() const;

  bool operator==(const RSet& other) const { return members() == other.members(); }

 private:
  int base_ = 0;
  int p_min_ = 0;
  int p_max_ = 0;
};

/// R_{i,j}^{r,s} = {r+s+d(i,j)-2p : -d([i,j], boundary) <= p < min(r,s)}.
RSet rset(const DynkinA& g, Node i, Node j, int r, int s);

/// R_{i,j,J}^{r,s}: J treated as the ambient diagram, so the lower bound on p
/// is minus the distance from [i,j] to the endpoints of J.
RSet rset_restricted(const DynkinA& g, Node i, Node j, int r, int s, const Interval& J);

/// R_i^{r,s} = {r+s-2p : 0 <= p < min(r,s)}.
RSet rset_same_node(const DynkinA& g, Node i, int r, int s);

enum class PairKind { Simple, ReducibleHLW, ReducibleOpposite };

struct PairRelation {
  PairKind kind = PairKind::Simple;
  /// center(f) - center(g) when reducible, 0 otherwise.
  int exponent = 0;

  bool operator==(const PairRelation&) const = default;
};

/// Reducibility of L(f) (x) L(g); highest-l-weight exactly when the center
/// difference is positive.
PairRelation kr_pair_relation(const DynkinA& g, const KRFactor& f, const KRFactor& h);

/// The right dual of a KR factor: (star(i), center - h, r).
KRFactor kr_dual(const DynkinA& g, const KRFactor& f);

/// Simplicity of L(f) (x) L(h)^*.
bool kr_dual_pair_simple(const DynkinA& g, const KRFactor& f, const KRFactor& h);

}  // namespace qfg
