#pragma once

#include <optional>
#include <vector>

#include "qfg/dynkin.hpp"
#include "qfg/lweight.hpp"

namespace qfg {

/// N weight-one factors (i + N - 2, 3(i - 1)), 1 <= i <= N, on A_n with
/// n >= 3N - 4. Throws RankTooSmall.
DrinfeldPoly tournament_family(int count, int rank);

struct SnakePoint {
  Node color = 1;
  int center = 0;
};

struct Snake {
  DynkinA rank;
  std::vector<SnakePoint> points;
};

/// Consecutive gaps of the form 2 + d - 2p with p <= 0.
bool is_snake(const Snake& s);
/// Additionally every gap lies in R^{1,1}.
bool is_prime_snake(const Snake& s);
DrinfeldPoly snake_to_poly(const Snake& s);

struct SkewShape {
  std::vector<int> lambda;  // length m + n + 1, weakly decreasing
  std::vector<int> mu;      // length m, weakly decreasing
  int rank = 1;             // n
};

/// Throws ShapeInvalid on length or interlacing violations.
void check_shape(const SkewShape& shape);

/// nu[l-1][i-1] = median(mu_{l-1}, mu_l, lambda_{i+l-1}) with mu_0 = +inf and
/// mu_{m+1} = -inf; (m+1) rows of n+1 entries.
std::vector<std::vector<int>> skew_nu_table(const SkewShape& shape);

struct SkewCell {
  int exponent = 0;
  int length = 0;
  bool operator==(const SkewCell&) const = default;
};

struct SkewPoly {
  /// (m+1) rows of n cells, zero-length cells included.
  std::vector<std::vector<SkewCell>> table;
  /// Nonzero-length cells as factors.
  DrinfeldPoly polynomial;
};

SkewPoly skew_to_poly(const SkewShape& shape);

}  // namespace qfg
