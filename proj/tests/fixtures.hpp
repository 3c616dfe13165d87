#pragma once

#include <random>
#include <string>
#include <vector>

#include "qfg/fgraph.hpp"
#include "qfg/families.hpp"
#include "qfg/io.hpp"

namespace fixture {

inline qfg::DrinfeldPoly poly(int n, const std::string& text) { return qfg::parse_poly(text, qfg::DynkinA(n)); }

inline qfg::FactGraph graph_of(int n, const std::string& text) {
  return qfg::build_graph(qfg::q_factorize(poly(n, text)));
}

inline qfg::FactGraph graph_of(const qfg::DrinfeldPoly& p) { return qfg::build_graph(qfg::q_factorize(p)); }

inline const char* kVee = "2:0:2 1:3:2 1:4:1";
inline const char* kTriangle1 = "3:6:3 2:3:3 1:0:3";
inline const char* kTriangle2 = "2:7:3 3:4:3 1:0:3";
inline const char* kSnake = "4:-2:1 3:1:1 2:4:1 3:7:1";

inline qfg::DrinfeldPoly random_poly(std::mt19937& rng, int max_rank, int max_factors, int span, int max_len,
                                     int cosets = 1) {
  std::uniform_int_distribution<int> rank_d(1, max_rank);
  const qfg::DynkinA g(rank_d(rng));
  std::uniform_int_distribution<int> count_d(1, max_factors);
  std::uniform_int_distribution<int> color_d(1, g.rank());
  std::uniform_int_distribution<int> center_d(-span, span);
  std::uniform_int_distribution<int> len_d(1, max_len);
  std::uniform_int_distribution<int> coset_d(0, cosets - 1);
  std::vector<qfg::KRFactor> fs;
  const int count = count_d(rng);
  for (int k = 0; k < count; ++k) fs.push_back({color_d(rng), center_d(rng), len_d(rng), coset_d(rng)});
  return qfg::DrinfeldPoly(g, fs);
}

struct Named {
  std::string name;
  qfg::FactGraph graph;
};

/// Paper examples plus a seeded sample of small random q-factorization graphs.
inline std::vector<Named> all() {
  std::vector<Named> out;
  out.push_back({"vee", graph_of(2, kVee)});
  out.push_back({"triangle1", graph_of(3, kTriangle1)});
  out.push_back({"triangle2", graph_of(3, kTriangle2)});
  out.push_back({"snake", graph_of(5, kSnake)});
  out.push_back({"two_vertex", graph_of(2, "1:3:2 2:0:2")});
  out.push_back({"cosets", graph_of(5, "1:0:1 1:0:1@1")});
  out.push_back({"single", graph_of(4, "2:5:3")});
  for (int N = 2; N <= 5; ++N) out.push_back({"tour" + std::to_string(N), graph_of(qfg::tournament_family(N, 3 * N - 4 < 2 ? 2 : 3 * N - 4))});
  out.push_back({"skew1", graph_of(qfg::skew_to_poly({{20, 16, 10, 7, 2, 0}, {17, 5}, 3}).polynomial)});
  out.push_back({"skew2", graph_of(qfg::skew_to_poly({{6, 6, 6, 4, 2, 1, 1}, {5}, 5}).polynomial)});
  std::mt19937 rng(20240611);
  for (int k = 0; k < 20; ++k) {
    out.push_back({"random" + std::to_string(k), graph_of(random_poly(rng, 5, 6, 8, 3))});
  }
  // connected but not totally ordered: these reach the cut scan
  for (int k = 0; k < 30;) {
    auto g = graph_of(random_poly(rng, 5, 7, 6, 3));
    if (g.size() < 3 || !qfg::is_connected(g) || qfg::is_totally_ordered(g)) continue;
    out.push_back({"scan" + std::to_string(k++), std::move(g)});
  }
  return out;
}

}  // namespace fixture
