#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "qfg/dynkin.hpp"

namespace qfg {

/// One Kirillov-Reshetikhin string: `length` roots of color `color`, centered
/// at q^center relative to the anchor of `coset`.
struct KRFactor {
  Node color = 1;
  int center = 0;
  int length = 1;
  int coset = 0;

  auto operator<=>(const KRFactor&) const = default;
};

/// Exponents {center + r - 1 - 2p : 0 <= p < r}, ascending.
std::vector<int> roots_of(const KRFactor& f);

/// A Drinfeld polynomial as a multiset of KR strings over A_n. Factors are
/// kept sorted; equality is multiset equality.
class DrinfeldPoly {
 public:
  explicit DrinfeldPoly(DynkinA rank) : rank_(rank) {}
  DrinfeldPoly(DynkinA rank, std::vector<KRFactor> factors);

  const DynkinA& rank() const { return rank_; }
  const std::vector<KRFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  void add(const KRFactor& f);

  /// Multiset union (the product of polynomials). Throws RankMismatch.
  DrinfeldPoly operator*(const DrinfeldPoly& other) const;

  bool operator==(const DrinfeldPoly& other) const = default;

 private:
  DynkinA rank_;
  std::vector<KRFactor> factors_;
};

/// True iff f and g may coexist as q-factors: different color or coset, or
/// |m - m'| != r + r' - 2p for all 0 <= p < min(r, r').
bool q_factor_compatible(const KRFactor& f, const KRFactor& g);

bool is_q_factorization(const DrinfeldPoly& p);

/// The q-factorization: same roots per (color, coset), pairwise compatible.
DrinfeldPoly q_factorize(const DrinfeldPoly& p);

std::map<Node, int> weight(const DrinfeldPoly& p);
std::set<Node> support(const DrinfeldPoly& p);

/// Roots per (color, coset), each list ascending.
std::map<std::pair<Node, int>, std::vector<int>> root_multisets(const DrinfeldPoly& p);

DrinfeldPoly dual_negate(const DrinfeldPoly& p);
DrinfeldPoly dual_sigma(const DrinfeldPoly& p);
/// pi -> pi*: star on colors, centers shifted by -h (dual Coxeter number).
DrinfeldPoly dual_star(const DrinfeldPoly& p);
DrinfeldPoly dual_kappa(const DrinfeldPoly& p);
DrinfeldPoly shift(const DrinfeldPoly& p, int c);

}  // namespace qfg
