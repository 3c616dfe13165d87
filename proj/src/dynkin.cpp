#include "qfg/dynkin.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "qfg/error.hpp"

namespace qfg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidNode: return "InvalidNode";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::IntervalDoesNotContain: return "IntervalDoesNotContain";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::InvalidCut: return "InvalidCut";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::CyclicGraph: return "CyclicGraph";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::NotQFactGraph: return "NotQFactGraph";
    case ErrorKind::ChainConditionViolated: return "ChainConditionViolated";
    case ErrorKind::NonIntegralP: return "NonIntegralP";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ShapeInvalid: return "ShapeInvalid";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonPositiveLength: return "NonPositiveLength";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

std::vector<Node> Interval::nodes() const {
  std::vector<Node> out;
  for (Node i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

DynkinA::DynkinA(int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidNode, "rank must be >= 1, got " + std::to_string(n));
}

void DynkinA::check(Node i) const {
  if (!valid(i)) {
    throw Error(ErrorKind::InvalidNode,
                "node " + std::to_string(i) + " outside 1.." + std::to_string(n_));
  }
}

int DynkinA::distance(Node i, Node j) const {
  check(i);
  check(j);
  return std::abs(i - j);
}

Interval DynkinA::interval(Node i, Node j) const {
  check(i);
  check(j);
  return {std::min(i, j), std::max(i, j)};
}

int DynkinA::boundary_distance(const Interval& j) const {
  if (j.lo > j.hi) throw Error(ErrorKind::InvalidInterval, "empty interval");
  check(j.lo);
  check(j.hi);
  return std::min(j.lo - 1, n_ - j.hi);
}

int DynkinA::boundary_distance(std::span<const Node> j) const {
  if (j.empty()) throw Error(ErrorKind::InvalidInterval, "empty node set");
  std::vector<Node> sorted(j.begin(), j.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Node i : sorted) check(i);
  if (sorted.back() - sorted.front() + 1 != static_cast<int>(sorted.size())) {
    throw Error(ErrorKind::InvalidInterval, "node set is not connected");
  }
  return boundary_distance(Interval{sorted.front(), sorted.back()});
}

Node DynkinA::star(Node i) const {
  check(i);
  return n_ + 1 - i;
}

}  // namespace qfg
