#pragma once

// Randomized property checks shared by the property test and the acceptance
// binary. Each returns the number of cases run and the failures found.

#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qfg/error.hpp"
#include "qfg/primality.hpp"
#include "qfg/redsets.hpp"

namespace props {

using namespace qfg;

struct Result {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0 && cases >= 500; }
};

inline std::string show(const DrinfeldPoly& p) { return "A_" + std::to_string(p.rank().rank()) + " " + format_poly(p); }

inline Result rset_invariants(std::uint32_t seed, int cases = 1000) {
  Result res{"rset parity/symmetry/inclusion"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> rank_d(1, 9), len_d(1, 5), center_d(-15, 15);
  for (; res.cases < cases; ++res.cases) {
    const DynkinA g(rank_d(rng));
    std::uniform_int_distribution<int> node_d(1, g.rank());
    const int i = node_d(rng), j = node_d(rng), r = len_d(rng), s = len_d(rng);
    std::ostringstream tag;
    tag << "A_" << g.rank() << " i=" << i << " j=" << j << " r=" << r << " s=" << s;
    const RSet set = rset(g, i, j, r, s);
    const int base = r + s + g.distance(i, j);
    for (int m : set.members())
      if ((m - base) % 2 != 0 || m <= 0) res.fail(tag.str() + ": parity of " + std::to_string(m));
    if (!(set == rset(g, j, i, s, r)) || !(set == rset(g, g.star(i), g.star(j), r, s)))
      res.fail(tag.str() + ": symmetry");
    const int bd = g.boundary_distance(g.interval(i, j));
    if (set.max() != base + 2 * bd || set.min() != base - 2 * (std::min(r, s) - 1)) res.fail(tag.str() + ": bounds");
    if (!(rset_restricted(g, i, j, r, s, g.full()) == set)) res.fail(tag.str() + ": full restriction");
    // nested intervals J within K
    const Interval ij = g.interval(i, j);
    std::uniform_int_distribution<int> lo_d(1, ij.lo), hi_d(ij.hi, g.rank());
    const int klo = lo_d(rng), khi = hi_d(rng);
    std::uniform_int_distribution<int> jlo_d(klo, ij.lo), jhi_d(ij.hi, khi);
    const Interval K{klo, khi}, J{jlo_d(rng), jhi_d(rng)};
    const auto small = rset_restricted(g, i, j, r, s, J).members();
    const RSet big = rset_restricted(g, i, j, r, s, K);
    for (int m : small)
      if (!big.contains(m)) res.fail(tag.str() + ": restricted inclusion");
    for (int m : big.members())
      if (!set.contains(m)) res.fail(tag.str() + ": restricted within full");
    // pair relation antisymmetry
    const KRFactor f{i, center_d(rng), r, 0}, h{j, center_d(rng), s, 0};
    const auto fh = kr_pair_relation(g, f, h);
    const auto hf = kr_pair_relation(g, h, f);
    const bool hlw = fh.kind == PairKind::ReducibleHLW;
    const bool opp = hf.kind == PairKind::ReducibleOpposite && hf.exponent == -fh.exponent;
    if (hlw != opp) res.fail(tag.str() + ": pair antisymmetry");
  }
  return res;
}

inline Result q_factorize_invariants(std::uint32_t seed, int cases = 1000) {
  Result res{"q_factorize roots + defqfact"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> shift_d(-9, 9);
  for (; res.cases < cases; ++res.cases) {
    const auto p = fixture::random_poly(rng, 6, 7, 10, 4, 2);
    const auto q = q_factorize(p);
    if (root_multisets(q) != root_multisets(p)) res.fail(show(p) + ": roots changed");
    if (!is_q_factorization(q)) res.fail(show(p) + ": result not a q-factorization");
    for (std::size_t a = 0; a < q.size(); ++a)
      for (std::size_t b = a + 1; b < q.size(); ++b)
        if (!oracle::defqfact(q.factors()[a], q.factors()[b])) res.fail(show(p) + ": pair violates defqfact");
    if (weight(q) != weight(p)) res.fail(show(p) + ": weight changed");
    if (!(q_factorize(q) == q)) res.fail(show(p) + ": not idempotent");
    const int c = shift_d(rng);
    if (!(q_factorize(shift(p, c)) == shift(q, c))) res.fail(show(p) + ": shift does not commute");
  }
  return res;
}

inline Result build_graph_invariants(std::uint32_t seed, int cases = 1000) {
  Result res{"build_graph acyclic + validate(qfact)"};
  std::mt19937 rng(seed);
  for (; res.cases < cases; ++res.cases) {
    const auto p = q_factorize(fixture::random_poly(rng, 6, 6, 20, 4, 2));
    const auto g = build_graph(p);
    if (has_oriented_cycle(g)) res.fail(show(p) + ": cycle");
    const auto report = validate(g, Level::QFact);
    if (!report.ok) res.fail(show(p) + ": " + report.message);
    for (const auto& a : g.arrows())
      if (g.vertex(a.tail).center <= g.vertex(a.head).center) res.fail(show(p) + ": arrow not decreasing");
    if (!(to_polynomial(g) == p)) res.fail(show(p) + ": to_polynomial round trip");
    if (is_totally_ordered(g) && (sinks(g).size() != 1 || sources(g).size() != 1))
      res.fail(show(p) + ": totally ordered without unique sink/source");
    if (is_tournament(g) && !is_totally_ordered(g)) res.fail(show(p) + ": tournament not totally ordered");
    if (is_totally_ordered(g) && g.size() > 1) {
      for (VertexId v : g.ids()) {
        if (!is_extremal(g, v)) continue;
        auto rest = g.ids();
        rest.erase(std::find(rest.begin(), rest.end(), v));
        if (!is_totally_ordered(g.induced(rest))) res.fail(show(p) + ": removing extremal vertex breaks order");
      }
    }
  }
  return res;
}

inline Result dual_invariants(std::uint32_t seed, int cases = 1000) {
  Result res{"dual involutions + arrow_dual polynomial"};
  std::mt19937 rng(seed);
  for (; res.cases < cases; ++res.cases) {
    const auto p = fixture::random_poly(rng, 6, 6, 20, 4, 2);
    const int h = p.rank().dual_coxeter();
    if (!(dual_negate(dual_negate(p)) == p)) res.fail(show(p) + ": negate");
    if (!(dual_sigma(dual_sigma(p)) == p)) res.fail(show(p) + ": sigma");
    if (!(dual_kappa(dual_kappa(p)) == p)) res.fail(show(p) + ": kappa");
    if (!(dual_star(dual_star(p)) == shift(p, -2 * h))) res.fail(show(p) + ": star");
    const auto g = fixture::graph_of(p);
    if (!(arrow_dual(arrow_dual(g)) == g)) res.fail(show(p) + ": arrow_dual involution");
    if (!(color_dual(color_dual(g)) == g)) res.fail(show(p) + ": color_dual involution");
    if (!(to_polynomial(arrow_dual(g)) == dual_negate(to_polynomial(g)))) res.fail(show(p) + ": arrow_dual polynomial");
    if (!validate(arrow_dual(g), Level::QFact).ok || !validate(color_dual(g), Level::QFact).ok)
      res.fail(show(p) + ": dual graph invalid");
    if (!isomorphic(build_graph(to_polynomial(arrow_dual(g))), arrow_dual(g))) res.fail(show(p) + ": arrow_dual arrows");
  }
  return res;
}

inline Result reduction_invariants(std::uint32_t seed, int cases = 1000) {
  Result res{"transitive_reduction closure equality"};
  std::mt19937 rng(seed);
  while (res.cases < cases) {
    const auto g = fixture::graph_of(fixture::random_poly(rng, 5, 8, 10, 3));
    if (g.size() > 8) continue;
    ++res.cases;
    const auto red = transitive_reduction(g);
    const auto want = oracle::closure(g);
    if (oracle::closure_of(g, red) != want) res.fail(show(to_polynomial(g)) + ": closure differs");
    for (std::size_t k = 0; k < red.size(); ++k) {
      auto fewer = red;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
      if (oracle::closure_of(g, fewer) == want) res.fail(show(to_polynomial(g)) + ": reduction not minimal");
    }
    for (const auto& a : red)
      if (std::find(g.arrows().begin(), g.arrows().end(), a) == g.arrows().end())
        res.fail(show(to_polynomial(g)) + ": reduction adds an arrow");
  }
  return res;
}

/// Random chain with strictly increasing centers whose consecutive gaps lie
/// in the reducibility sets.
inline std::vector<ChainEntry> random_chain(std::mt19937& rng, const DynkinA& g, int max_len) {
  std::uniform_int_distribution<int> size_d(2, max_len), len_d(1, 4), base_d(0, 10);
  std::uniform_int_distribution<int> node_d(1, g.rank());
  std::vector<ChainEntry> chain{{base_d(rng), len_d(rng), node_d(rng)}};
  const int n = size_d(rng);
  while (static_cast<int>(chain.size()) < n) {
    const ChainEntry& prev = chain.back();
    const ChainEntry next{0, len_d(rng), node_d(rng)};
    const auto gaps = rset(g, prev.color, next.color, prev.length, next.length).members();
    std::uniform_int_distribution<std::size_t> pick(0, gaps.size() - 1);
    chain.push_back({prev.center + gaps[pick(rng)], next.length, next.color});
  }
  return chain;
}

inline Result chain_invariants(std::uint32_t seed, int cases = 1000) {
  Result res{"p-matrix integrality + strict monotonicity"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> rank_d(1, 8);
  for (; res.cases < cases; ++res.cases) {
    const DynkinA g(rank_d(rng));
    const auto chain = random_chain(rng, g, 6);
    std::ostringstream tag;
    tag << "A_" << g.rank() << " chain";
    for (const auto& e : chain) tag << " (" << e.center << "," << e.length << "," << e.color << ")";
    PMatrix p;
    try {
      p = chain_p_matrix(g, chain);
    } catch (const Error& e) {
      res.fail(tag.str() + ": " + e.what());
      continue;
    }
    const std::size_t n = chain.size();
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) {
        const int lhs = chain[l].center - chain[k].center;
        const int rhs = chain[l].length + chain[k].length + g.distance(chain[l].color, chain[k].color) - 2 * p.at(l, k);
        if (lhs != rhs) res.fail(tag.str() + ": p entry does not satisfy the defining equation");
      }
    const int pn1 = p.at(n - 1, 0);
    if (pn1 >= std::min(chain[0].length, chain[n - 1].length)) res.fail(tag.str() + ": p_N1 bound");
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = k + 1; l < n; ++l) {
        if (k == 0 && l == n - 1) continue;
        const int plk = p.at(l, k);
        if (!(pn1 < plk && plk < std::min(chain[k].length, chain[l].length)))
          res.fail(tag.str() + ": monotonicity at (" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
      }
    for (const auto& pair : chain_arrow_closure(g, chain))
      if (!pair.consistent()) res.fail(tag.str() + ": chain closure implication fails");
  }
  return res;
}

inline Result alternating_line_invariants(std::uint32_t seed, int cases = 500) {
  Result res{"alternating line on boundary-colored totally ordered graphs"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> rank_d(2, 7), count_d(2, 5), center_d(-12, 12), len_d(1, 3), side_d(0, 1);
  int attempts = 0;
  while (res.cases < cases && attempts < 2000000) {
    ++attempts;
    const DynkinA g(rank_d(rng));
    std::vector<KRFactor> fs;
    const int count = count_d(rng);
    for (int k = 0; k < count; ++k) fs.push_back({side_d(rng) == 0 ? 1 : g.rank(), center_d(rng), len_d(rng), 0});
    const auto graph = fixture::graph_of(DrinfeldPoly(g, fs));
    if (graph.size() < 2 || !is_totally_ordered(graph)) continue;
    ++res.cases;
    if (!alternating_line_check(graph)) res.fail(show(to_polynomial(graph)) + ": not an alternating line");
  }
  return res;
}

inline std::vector<Result> all(std::uint32_t seed = 1) {
  return {rset_invariants(seed),        q_factorize_invariants(seed + 1), build_graph_invariants(seed + 2),
          dual_invariants(seed + 3),    reduction_invariants(seed + 4),   chain_invariants(seed + 5),
          alternating_line_invariants(seed + 6)};
}

}  // namespace props
