#include "qfg/families.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qfg/error.hpp"
#include "qfg/redsets.hpp"

namespace qfg {

DrinfeldPoly tournament_family(int count, int rank) {
  if (count < 2) throw Error(ErrorKind::PreconditionViolated, "tournament needs N >= 2");
  if (rank < 3 * count - 4) {
    throw Error(ErrorKind::RankTooSmall, "A_" + std::to_string(rank) + " < A_" +
                                             std::to_string(3 * count - 4) + " for N = " +
                                             std::to_string(count));
  }
  const DynkinA g(std::max(rank, 1));
  DrinfeldPoly p(g);
  for (int i = 1; i <= count; ++i) p.add({i + count - 2, 3 * (i - 1), 1, 0});
  return p;
}

namespace {

// p_j for the gap between consecutive points, if integral.
std::optional<int> gap_p(const Snake& s, std::size_t j) {
  const auto& a = s.points[j];
  const auto& b = s.points[j + 1];
  const int excess = 2 + s.rank.distance(a.color, b.color) - (b.center - a.center);
  if (excess % 2 != 0) return std::nullopt;
  return excess / 2;
}

}  // namespace

bool is_snake(const Snake& s) {
  for (const auto& pt : s.points) s.rank.check(pt.color);
  for (std::size_t j = 0; j + 1 < s.points.size(); ++j) {
    const auto p = gap_p(s, j);
    if (!p || *p > 0) return false;
  }
  return true;
}

bool is_prime_snake(const Snake& s) {
  if (!is_snake(s)) return false;
  for (std::size_t j = 0; j + 1 < s.points.size(); ++j) {
    const auto& a = s.points[j];
    const auto& b = s.points[j + 1];
    if (!rset(s.rank, a.color, b.color, 1, 1).contains(b.center - a.center)) return false;
  }
  return true;
}

DrinfeldPoly snake_to_poly(const Snake& s) {
  DrinfeldPoly p(s.rank);
  for (const auto& pt : s.points) p.add({pt.color, pt.center, 1, 0});
  return p;
}

void check_shape(const SkewShape& shape) {
  const int n = shape.rank;
  const auto m = static_cast<int>(shape.mu.size());
  if (n < 1) throw Error(ErrorKind::ShapeInvalid, "rank must be positive");
  if (static_cast<int>(shape.lambda.size()) != m + n + 1) {
    throw Error(ErrorKind::ShapeInvalid, "lambda must have m + n + 1 = " + std::to_string(m + n + 1) +
                                             " parts, got " + std::to_string(shape.lambda.size()));
  }
  if (!std::is_sorted(shape.lambda.rbegin(), shape.lambda.rend())) {
    throw Error(ErrorKind::ShapeInvalid, "lambda is not weakly decreasing");
  }
  if (!std::is_sorted(shape.mu.rbegin(), shape.mu.rend())) {
    throw Error(ErrorKind::ShapeInvalid, "mu is not weakly decreasing");
  }
  for (int k = 0; k < m; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    if (!(shape.lambda[uk] >= shape.mu[uk] &&
          shape.mu[uk] >= shape.lambda[uk + static_cast<std::size_t>(n) + 1])) {
      throw Error(ErrorKind::ShapeInvalid, "interlacing fails at k = " + std::to_string(k + 1));
    }
  }
}

std::vector<std::vector<int>> skew_nu_table(const SkewShape& shape) {
  check_shape(shape);
  const int n = shape.rank;
  const auto m = static_cast<int>(shape.mu.size());
  constexpr long long inf = std::numeric_limits<long long>::max();
  auto mu = [&](int l) -> long long {
    if (l == 0) return inf;
    if (l == m + 1) return -inf;
    return shape.mu[static_cast<std::size_t>(l - 1)];
  };
  std::vector<std::vector<int>> nu(static_cast<std::size_t>(m + 1));
  for (int l = 1; l <= m + 1; ++l) {
    for (int i = 1; i <= n + 1; ++i) {
      long long v[3] = {mu(l - 1), mu(l), shape.lambda[static_cast<std::size_t>(i + l - 2)]};
      std::sort(v, v + 3);
      nu[static_cast<std::size_t>(l - 1)].push_back(static_cast<int>(v[1]));
    }
  }
  return nu;
}

SkewPoly skew_to_poly(const SkewShape& shape) {
  const auto nu = skew_nu_table(shape);
  const int n = shape.rank;
  SkewPoly out{{}, DrinfeldPoly(DynkinA(n))};
  for (std::size_t row = 0; row < nu.size(); ++row) {
    const int l = static_cast<int>(row) + 1;
    std::vector<SkewCell> cells;
    for (int i = 1; i <= n; ++i) {
      const int a = nu[row][static_cast<std::size_t>(i - 1)];
      const int b = nu[row][static_cast<std::size_t>(i)];
      SkewCell cell{a + b - 2 * l + 1 - i, a - b};
      if (cell.length > 0) out.polynomial.add({i, cell.exponent, cell.length, 0});
      cells.push_back(cell);
    }
    out.table.push_back(std::move(cells));
  }
  return out;
}

}  // namespace qfg
