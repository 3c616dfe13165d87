#include "qfg/redsets.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qfg/error.hpp"

namespace qfg {

RSet::RSet(int base, int p_min, int p_max) : base_(base), p_min_(p_min), p_max_(p_max) {}

bool RSet::contains(int m) const {
  if (empty()) return false;
  const int twice_p = base_ - m;
  if (twice_p % 2 != 0) return false;
  const int p = twice_p / 2;
  return p_min_ <= p && p < p_max_;
}

int RSet::min() const {
  if (empty()) throw Error(ErrorKind::PreconditionViolated, "min of empty RSet");
  return base_ - 2 * (p_max_ - 1);
}

int RSet::max() const {
  if (empty()) throw Error(ErrorKind::PreconditionViolated, "max of empty RSet");
  return base_ - 2 * p_min_;
}

std::vector<int> RSet::members() const {
  std::vector<int> out;
  for (int p = p_max_ - 1; p >= p_min_; --p) out.push_back(base_ - 2 * p);
  return out;
}

RSet rset(const DynkinA& g, Node i, Node j, int r, int s) {
  return rset_restricted(g, i, j, r, s, g.full());
}

RSet rset_restricted(const DynkinA& g, Node i, Node j, int r, int s, const Interval& J) {
  const Interval ij = g.interval(i, j);
  g.check(J.lo);
  g.check(J.hi);
  if (!J.contains(ij)) {
    throw Error(ErrorKind::IntervalDoesNotContain,
                "[" + std::to_string(J.lo) + "," + std::to_string(J.hi) + "] does not contain [" +
                    std::to_string(ij.lo) + "," + std::to_string(ij.hi) + "]");
  }
  if (r < 1 || s < 1) throw Error(ErrorKind::NonPositiveLength, "r and s must be positive");
  const int to_edge = std::min(ij.lo - J.lo, J.hi - ij.hi);
  return RSet(r + s + (ij.hi - ij.lo), -to_edge, std::min(r, s));
}

RSet rset_same_node(const DynkinA& g, Node i, int r, int s) {
  return rset_restricted(g, i, i, r, s, Interval{i, i});
}

PairRelation kr_pair_relation(const DynkinA& g, const KRFactor& f, const KRFactor& h) {
  g.check(f.color);
  g.check(h.color);
  if (f.coset != h.coset) return {};
  const int delta = f.center - h.center;
  if (!rset(g, f.color, h.color, f.length, h.length).contains(std::abs(delta))) return {};
  return {delta > 0 ? PairKind::ReducibleHLW : PairKind::ReducibleOpposite, delta};
}

KRFactor kr_dual(const DynkinA& g, const KRFactor& f) {
  return {g.star(f.color), f.center - g.dual_coxeter(), f.length, f.coset};
}

bool kr_dual_pair_simple(const DynkinA& g, const KRFactor& f, const KRFactor& h) {
  return kr_pair_relation(g, f, kr_dual(g, h)).kind == PairKind::Simple;
}

}  // namespace qfg
