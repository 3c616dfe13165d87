#include "qfg/lweight.hpp"

#include <algorithm>
#include <string>

#include "qfg/error.hpp"

namespace qfg {

namespace {

void check_factor(const DynkinA& rank, const KRFactor& f) {
  rank.check(f.color);
  if (f.length < 1) {
    throw Error(ErrorKind::NonPositiveLength, "factor length " + std::to_string(f.length));
  }
}

template <typename Fn>
DrinfeldPoly map_factors(const DrinfeldPoly& p, Fn&& fn) {
  std::vector<KRFactor> out;
  out.reserve(p.size());
  for (const auto& f : p.factors()) out.push_back(fn(f));
  return DrinfeldPoly(p.rank(), std::move(out));
}

// Splits an ascending root multiset into step-2 strings by repeatedly
// removing the longest string present (leftmost start on ties).
std::vector<std::pair<int, int>> peel_strings(std::vector<int> roots) {
  std::vector<std::pair<int, int>> strings;  // (first root, length)
  std::map<int, int> count;
  for (int x : roots) ++count[x];
  while (!count.empty()) {
    int best_start = 0;
    int best_len = 0;
    for (const auto& [x, c] : count) {
      if (count.contains(x - 2)) continue;  // not the start of a maximal run
      int len = 0;
      while (count.contains(x + 2 * len)) ++len;
      if (len > best_len) {
        best_len = len;
        best_start = x;
      }
    }
    for (int k = 0; k < best_len; ++k) {
      auto it = count.find(best_start + 2 * k);
      if (--it->second == 0) count.erase(it);
    }
    strings.emplace_back(best_start, best_len);
  }
  return strings;
}

}  // namespace

std::vector<int> roots_of(const KRFactor& f) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(f.length));
  for (int p = f.length - 1; p >= 0; --p) out.push_back(f.center + f.length - 1 - 2 * p);
  return out;
}

DrinfeldPoly::DrinfeldPoly(DynkinA rank, std::vector<KRFactor> factors)
    : rank_(rank), factors_(std::move(factors)) {
  for (const auto& f : factors_) check_factor(rank_, f);
  std::sort(factors_.begin(), factors_.end());
}

void DrinfeldPoly::add(const KRFactor& f) {
  check_factor(rank_, f);
  factors_.insert(std::upper_bound(factors_.begin(), factors_.end(), f), f);
}

DrinfeldPoly DrinfeldPoly::operator*(const DrinfeldPoly& other) const {
  if (!(rank_ == other.rank_)) {
    throw Error(ErrorKind::RankMismatch, "A_" + std::to_string(rank_.rank()) + " vs A_" +
                                             std::to_string(other.rank_.rank()));
  }
  std::vector<KRFactor> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return DrinfeldPoly(rank_, std::move(all));
}

bool q_factor_compatible(const KRFactor& f, const KRFactor& g) {
  if (f.color != g.color || f.coset != g.coset) return true;
  const int diff = std::abs(f.center - g.center);
  const int lo = std::min(f.length, g.length);
  for (int p = 0; p < lo; ++p) {
    if (diff == f.length + g.length - 2 * p) return false;
  }
  return true;
}

bool is_q_factorization(const DrinfeldPoly& p) {
  const auto& fs = p.factors();
  for (std::size_t a = 0; a < fs.size(); ++a) {
    for (std::size_t b = a + 1; b < fs.size(); ++b) {
      if (!q_factor_compatible(fs[a], fs[b])) return false;
    }
  }
  return true;
}

std::map<std::pair<Node, int>, std::vector<int>> root_multisets(const DrinfeldPoly& p) {
  std::map<std::pair<Node, int>, std::vector<int>> out;
  for (const auto& f : p.factors()) {
    auto& roots = out[{f.color, f.coset}];
    const auto r = roots_of(f);
    roots.insert(roots.end(), r.begin(), r.end());
  }
  for (auto& [key, roots] : out) std::sort(roots.begin(), roots.end());
  return out;
}

DrinfeldPoly q_factorize(const DrinfeldPoly& p) {
  std::vector<KRFactor> out;
  for (const auto& [key, roots] : root_multisets(p)) {
    for (const auto& [first, len] : peel_strings(roots)) {
      // first root is center - (len - 1)
      out.push_back({key.first, first + len - 1, len, key.second});
    }
  }
  DrinfeldPoly result(p.rank(), std::move(out));
  if (!is_q_factorization(result)) {
    throw Error(ErrorKind::InternalInvariantViolation, "string peeling produced incompatible factors");
  }
  return result;
}

std::map<Node, int> weight(const DrinfeldPoly& p) {
  std::map<Node, int> out;
  for (const auto& f : p.factors()) out[f.color] += f.length;
  return out;
}

std::set<Node> support(const DrinfeldPoly& p) {
  std::set<Node> out;
  for (const auto& f : p.factors()) out.insert(f.color);
  return out;
}

DrinfeldPoly dual_negate(const DrinfeldPoly& p) {
  return map_factors(p, [](KRFactor f) {
    f.center = -f.center;
    return f;
  });
}

DrinfeldPoly dual_sigma(const DrinfeldPoly& p) {
  const DynkinA& rank = p.rank();
  return map_factors(p, [&](KRFactor f) {
    f.color = rank.star(f.color);
    return f;
  });
}

DrinfeldPoly dual_star(const DrinfeldPoly& p) {
  return shift(dual_sigma(p), -p.rank().dual_coxeter());
}

DrinfeldPoly dual_kappa(const DrinfeldPoly& p) { return dual_star(dual_negate(p)); }

DrinfeldPoly shift(const DrinfeldPoly& p, int c) {
  return map_factors(p, [c](KRFactor f) {
    f.center += c;
    return f;
  });
}

}  // namespace qfg
