#include "qfg/fgraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qfg/error.hpp"
#include "qfg/redsets.hpp"

namespace qfg {

namespace {

FactGraph build_from_factors(const DynkinA& rank, const std::vector<KRFactor>& factors) {
  std::vector<Vertex> vs;
  vs.reserve(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    vs.push_back({static_cast<VertexId>(k), f.color, f.center, f.length, f.coset});
  }
  std::vector<Arrow> arrows;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = 0; b < vs.size(); ++b) {
      if (a == b) continue;
      const auto rel = kr_pair_relation(rank, factors[a], factors[b]);
      if (rel.kind == PairKind::ReducibleHLW) {
        arrows.push_back({vs[a].id, vs[b].id, rel.exponent});
      }
    }
  }
  return FactGraph(rank, std::move(vs), std::move(arrows));
}

std::string describe(const Vertex& v) {
  std::ostringstream os;
  os << "v" << v.id << "(" << v.color << ":" << v.center << ":" << v.weight;
  if (v.coset != 0) os << "@" << v.coset;
  os << ")";
  return os.str();
}

ValidationReport fail(Level level, std::string message, VertexId a, VertexId b) {
  return {false, level, std::move(message), std::make_pair(a, b)};
}

// reach[a][b]: b reachable from a by a nonempty directed path.
std::vector<std::vector<bool>> reachability(const FactGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& a : g.arrows()) out[g.index_of(a.tail)].push_back(g.index_of(a.head));
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack(out[s].begin(), out[s].end());
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (reach[s][v]) continue;
      reach[s][v] = true;
      stack.insert(stack.end(), out[v].begin(), out[v].end());
    }
  }
  return reach;
}

std::vector<int> component_labels(const FactGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : g.arrows()) {
    parent[find(g.index_of(a.tail))] = find(g.index_of(a.head));
  }
  std::vector<int> label(n, -1);
  int next = 0;
  std::map<std::size_t, int> seen;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = seen.emplace(find(v), next);
    if (inserted) ++next;
    label[v] = it->second;
  }
  return label;
}

}  // namespace

FactGraph::FactGraph(DynkinA rank, std::vector<Vertex> vertices, std::vector<Arrow> arrows)
    : rank_(rank), vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<VertexId> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v.id).second) {
      throw Error(ErrorKind::InvalidVertex, "duplicate vertex id " + std::to_string(v.id));
    }
  }
  for (const auto& a : arrows_) {
    if (!seen.contains(a.tail) || !seen.contains(a.head)) {
      throw Error(ErrorKind::InvalidVertex, "arrow references unknown vertex");
    }
  }
  std::sort(arrows_.begin(), arrows_.end());
}

bool FactGraph::has_vertex(VertexId id) const {
  return std::any_of(vertices_.begin(), vertices_.end(), [id](const Vertex& v) { return v.id == id; });
}

std::size_t FactGraph::index_of(VertexId id) const {
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (vertices_[k].id == id) return k;
  }
  throw Error(ErrorKind::InvalidVertex, "no vertex with id " + std::to_string(id));
}

bool FactGraph::has_arrow(VertexId tail, VertexId head) const {
  return std::any_of(arrows_.begin(), arrows_.end(),
                     [&](const Arrow& a) { return a.tail == tail && a.head == head; });
}

std::vector<VertexId> FactGraph::ids() const {
  std::vector<VertexId> out;
  for (const auto& v : vertices_) out.push_back(v.id);
  return out;
}

std::vector<VertexId> FactGraph::neighbours(VertexId id) const {
  index_of(id);
  std::set<VertexId> out;
  for (const auto& a : arrows_) {
    if (a.tail == id) out.insert(a.head);
    if (a.head == id) out.insert(a.tail);
  }
  return {out.begin(), out.end()};
}

FactGraph FactGraph::induced(const std::vector<VertexId>& ids) const {
  std::set<VertexId> keep(ids.begin(), ids.end());
  std::vector<Vertex> vs;
  for (const auto& v : vertices_) {
    if (keep.contains(v.id)) vs.push_back(v);
  }
  if (vs.size() != keep.size()) throw Error(ErrorKind::InvalidVertex, "induced: unknown vertex id");
  std::vector<Arrow> as;
  for (const auto& a : arrows_) {
    if (keep.contains(a.tail) && keep.contains(a.head)) as.push_back(a);
  }
  return FactGraph(rank_, std::move(vs), std::move(as));
}

FactGraph build_graph(const DrinfeldPoly& p) { return build_from_factors(p.rank(), p.factors()); }

DrinfeldPoly to_polynomial(const FactGraph& g) {
  std::vector<KRFactor> fs;
  for (const auto& v : g.vertices()) fs.push_back(v.factor());
  return DrinfeldPoly(g.rank(), std::move(fs));
}

ValidationReport validate(const FactGraph& g, Level level) {
  const DynkinA& rank = g.rank();
  for (const auto& v : g.vertices()) {
    if (!rank.valid(v.color)) {
      return fail(Level::Prefact, describe(v) + " has invalid color", v.id, v.id);
    }
    if (v.weight < 1) return fail(Level::Prefact, describe(v) + " has non-positive weight", v.id, v.id);
  }
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const auto& a : g.arrows()) {
    const auto& t = g.vertex(a.tail);
    const auto& h = g.vertex(a.head);
    if (a.tail == a.head) return fail(Level::Prefact, "loop at " + describe(t), a.tail, a.head);
    if (t.coset != h.coset) {
      return fail(Level::Prefact, "arrow joins different cosets: " + describe(t) + " -> " + describe(h),
                  a.tail, a.head);
    }
    if (a.exponent <= 0 || a.exponent != t.center - h.center) {
      return fail(Level::Prefact,
                  "arrow " + describe(t) + " -> " + describe(h) + " has exponent " +
                      std::to_string(a.exponent) + " but center difference " +
                      std::to_string(t.center - h.center),
                  a.tail, a.head);
    }
    const auto key = std::minmax(a.tail, a.head);
    if (!pairs.insert(key).second) {
      return fail(Level::Prefact, "more than one arrow between " + describe(t) + " and " + describe(h),
                  a.tail, a.head);
    }
  }
  if (has_oriented_cycle(g)) {
    return {false, Level::Prefact, "graph contains an oriented cycle", std::nullopt};
  }
  if (level == Level::Prefact) return {};

  for (const auto& a : g.arrows()) {
    const auto& t = g.vertex(a.tail);
    const auto& h = g.vertex(a.head);
    if (!rset(rank, t.color, h.color, t.weight, h.weight).contains(a.exponent)) {
      return fail(Level::Pseudo,
                  "arrow " + describe(t) + " -> " + describe(h) + " exponent " +
                      std::to_string(a.exponent) + " not in R_{" + std::to_string(t.color) + "," +
                      std::to_string(h.color) + "}^{" + std::to_string(t.weight) + "," +
                      std::to_string(h.weight) + "}",
                  a.tail, a.head);
    }
  }
  for (const auto& u : g.vertices()) {
    for (const auto& w : g.vertices()) {
      if (u.id == w.id) continue;
      const auto rel = kr_pair_relation(rank, u.factor(), w.factor());
      if (rel.kind == PairKind::ReducibleHLW && !g.has_arrow(u.id, w.id)) {
        return fail(Level::Pseudo,
                    "missing arrow " + describe(u) + " -> " + describe(w) + ": " +
                        std::to_string(rel.exponent) + " in R_{" + std::to_string(u.color) + "," +
                        std::to_string(w.color) + "}^{" + std::to_string(u.weight) + "," +
                        std::to_string(w.weight) + "}",
                    u.id, w.id);
      }
    }
  }
  if (level == Level::Pseudo) return {};

  const auto& vs = g.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (!q_factor_compatible(vs[a].factor(), vs[b].factor())) {
        return fail(Level::QFact,
                    describe(vs[a]) + " and " + describe(vs[b]) + " are not q-factors: " +
                        std::to_string(std::abs(vs[a].center - vs[b].center)) + " in R_" +
                        std::to_string(vs[a].color) + "^{" + std::to_string(vs[a].weight) + "," +
                        std::to_string(vs[b].weight) + "}",
                    vs[a].id, vs[b].id);
      }
    }
  }
  return {};
}

std::vector<FactGraph> connected_components(const FactGraph& g) {
  const auto label = component_labels(g);
  const int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<VertexId>> groups(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < g.size(); ++v) {
    groups[static_cast<std::size_t>(label[v])].push_back(g.vertices()[v].id);
  }
  std::vector<FactGraph> out;
  for (const auto& ids : groups) out.push_back(g.induced(ids));
  return out;
}

bool is_connected(const FactGraph& g) {
  if (g.size() == 0) return false;
  const auto label = component_labels(g);
  return *std::max_element(label.begin(), label.end()) == 0;
}

Poset::Poset(std::vector<VertexId> ids, std::vector<std::vector<bool>> above)
    : ids_(std::move(ids)), above_(std::move(above)) {}

std::size_t Poset::pos(VertexId id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) throw Error(ErrorKind::InvalidVertex, "no vertex with id " + std::to_string(id));
  return static_cast<std::size_t>(it - ids_.begin());
}

bool Poset::greater(VertexId a, VertexId b) const { return above_[pos(a)][pos(b)]; }

bool Poset::comparable(VertexId a, VertexId b) const {
  return a == b || greater(a, b) || greater(b, a);
}

bool Poset::is_total() const {
  for (std::size_t a = 0; a < ids_.size(); ++a) {
    for (std::size_t b = a + 1; b < ids_.size(); ++b) {
      if (!above_[a][b] && !above_[b][a]) return false;
    }
  }
  return true;
}

bool has_oriented_cycle(const FactGraph& g) {
  const auto reach = reachability(g);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (reach[v][v]) return true;
  }
  return false;
}

Poset partial_order(const FactGraph& g) {
  auto reach = reachability(g);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (reach[v][v]) throw Error(ErrorKind::CyclicGraph, "oriented cycle through vertex " +
                                                             std::to_string(g.vertices()[v].id));
  }
  return Poset(g.ids(), std::move(reach));
}

bool is_totally_ordered(const FactGraph& g) {
  if (!is_connected(g) || has_oriented_cycle(g)) return false;
  return partial_order(g).is_total();
}

std::vector<VertexId> sinks(const FactGraph& g) {
  std::vector<VertexId> out;
  for (const auto& v : g.vertices()) {
    const bool has_out = std::any_of(g.arrows().begin(), g.arrows().end(),
                                     [&](const Arrow& a) { return a.tail == v.id; });
    if (!has_out) out.push_back(v.id);
  }
  return out;
}

std::vector<VertexId> sources(const FactGraph& g) {
  std::vector<VertexId> out;
  for (const auto& v : g.vertices()) {
    const bool has_in = std::any_of(g.arrows().begin(), g.arrows().end(),
                                    [&](const Arrow& a) { return a.head == v.id; });
    if (!has_in) out.push_back(v.id);
  }
  return out;
}

bool is_extremal(const FactGraph& g, VertexId v) {
  g.index_of(v);
  bool has_in = false;
  bool has_out = false;
  for (const auto& a : g.arrows()) {
    has_out = has_out || a.tail == v;
    has_in = has_in || a.head == v;
  }
  return !has_in || !has_out;
}

bool is_tournament(const FactGraph& g) {
  const auto& vs = g.vertices();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if (!g.adjacent(vs[a].id, vs[b].id)) return false;
    }
  }
  return true;
}

bool is_tree(const FactGraph& g) {
  if (!is_connected(g)) return false;
  std::set<std::pair<VertexId, VertexId>> edges;
  for (const auto& a : g.arrows()) edges.insert(std::minmax(a.tail, a.head));
  return edges.size() + 1 == g.size();
}

bool is_line(const FactGraph& g) {
  if (!is_tree(g)) return false;
  for (const auto& v : g.vertices()) {
    if (g.neighbours(v.id).size() > 2) return false;
  }
  return true;
}

bool is_monotonic_line(const FactGraph& g) {
  if (!is_line(g)) return false;
  for (const auto& v : g.vertices()) {
    int in = 0;
    int out = 0;
    for (const auto& a : g.arrows()) {
      out += a.tail == v.id;
      in += a.head == v.id;
    }
    if (in > 1 || out > 1) return false;
  }
  return true;
}

std::vector<VertexId> neighborhoods(const FactGraph& g, VertexId v, Sign sign) {
  if (!g.has_vertex(v)) throw Error(ErrorKind::InvalidVertex, "no vertex with id " + std::to_string(v));
  const Poset order = partial_order(g);
  std::vector<VertexId> out;
  for (const auto& w : g.vertices()) {
    if (w.id == v) continue;
    const bool in = sign == Sign::Plus ? order.greater(w.id, v) : order.greater(v, w.id);
    if (in) out.push_back(w.id);
  }
  return out;
}

CutRange::CutRange(const FactGraph& g, std::size_t cap) : g_(&g), count_(0) {
  if (g.size() > cap || g.size() > 63) {
    throw Error(ErrorKind::TooManyVertices, std::to_string(g.size()) + " vertices exceeds cut cap " +
                                                std::to_string(std::min<std::size_t>(cap, 63)));
  }
  if (g.size() >= 2) count_ = (std::uint64_t{1} << (g.size() - 1)) - 1;
}

Cut CutRange::at(std::uint64_t k) const {
  if (k >= count_) throw Error(ErrorKind::InvalidCut, "cut index out of range");
  const std::uint64_t right_bits = (k + 1) << 1;
  Cut cut;
  const auto& vs = g_->vertices();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (right_bits >> v & 1U) {
      cut.right.push_back(vs[v].id);
    } else {
      cut.left.push_back(vs[v].id);
    }
  }
  std::set<VertexId> right(cut.right.begin(), cut.right.end());
  for (const auto& a : g_->arrows()) {
    if (right.contains(a.tail) != right.contains(a.head)) cut.crossing.push_back(a);
  }
  return cut;
}

CutRange cuts(const FactGraph& g, std::size_t cap) { return CutRange(g, cap); }

Cut make_cut(const FactGraph& g, const std::vector<VertexId>& left) {
  std::set<VertexId> l(left.begin(), left.end());
  for (VertexId id : l) {
    if (!g.has_vertex(id)) throw Error(ErrorKind::InvalidCut, "unknown vertex " + std::to_string(id));
  }
  if (l.empty() || l.size() >= g.size()) throw Error(ErrorKind::InvalidCut, "cut side is empty");
  Cut cut;
  for (const auto& v : g.vertices()) (l.contains(v.id) ? cut.left : cut.right).push_back(v.id);
  for (const auto& a : g.arrows()) {
    if (l.contains(a.tail) != l.contains(a.head)) cut.crossing.push_back(a);
  }
  return cut;
}

FactGraph arrow_dual(const FactGraph& g) {
  std::vector<Vertex> vs = g.vertices();
  for (auto& v : vs) v.center = -v.center;
  std::vector<Arrow> as;
  for (const auto& a : g.arrows()) as.push_back({a.head, a.tail, a.exponent});
  return FactGraph(g.rank(), std::move(vs), std::move(as));
}

FactGraph color_dual(const FactGraph& g) {
  std::vector<Vertex> vs = g.vertices();
  for (auto& v : vs) v.color = g.rank().star(v.color);
  return FactGraph(g.rank(), std::move(vs), g.arrows());
}

std::vector<Arrow> transitive_reduction(const FactGraph& g) {
  const Poset order = partial_order(g);
  std::vector<Arrow> out;
  for (const auto& a : g.arrows()) {
    const bool implied = std::any_of(g.vertices().begin(), g.vertices().end(), [&](const Vertex& w) {
      return w.id != a.tail && w.id != a.head && order.greater(a.tail, w.id) &&
             order.greater(w.id, a.head);
    });
    if (!implied) out.push_back(a);
  }
  return out;
}

TensorGraph graph_tensor(const FactGraph& g, const FactGraph& h) {
  if (!(g.rank() == h.rank())) {
    throw Error(ErrorKind::RankMismatch, "A_" + std::to_string(g.rank().rank()) + " vs A_" +
                                             std::to_string(h.rank().rank()));
  }
  std::vector<KRFactor> fs;
  std::vector<int> origin;
  for (const auto& v : g.vertices()) {
    fs.push_back(v.factor());
    origin.push_back(0);
  }
  for (const auto& v : h.vertices()) {
    fs.push_back(v.factor());
    origin.push_back(1);
  }
  const DrinfeldPoly pg = to_polynomial(g);
  const DrinfeldPoly ph = to_polynomial(h);
  const bool dissociate = q_factorize(pg * ph) == q_factorize(pg) * q_factorize(ph);
  return {build_from_factors(g.rank(), fs), std::move(origin), dissociate};
}

FactGraph canonical_form(const FactGraph& g) {
  using Key = std::tuple<Node, int, int, int>;
  struct Block {
    std::vector<Key> vertices;
    std::vector<std::tuple<int, int, int>> arrows;  // local tail, local head, exponent
    bool operator<(const Block& o) const { return std::tie(vertices, arrows) < std::tie(o.vertices, o.arrows); }
  };
  const auto label = component_labels(g);
  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < g.size(); ++v) members[label[v]].push_back(v);

  std::vector<Block> blocks;
  for (auto& [comp, vs] : members) {
    int low = g.vertices()[vs.front()].center;
    for (auto v : vs) low = std::min(low, g.vertices()[v].center);
    auto key = [&](std::size_t v) {
      const auto& x = g.vertices()[v];
      return Key{x.color, x.center - low, x.weight, x.coset};
    };
    std::stable_sort(vs.begin(), vs.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    std::map<VertexId, int> local;
    Block b;
    for (std::size_t k = 0; k < vs.size(); ++k) {
      local[g.vertices()[vs[k]].id] = static_cast<int>(k);
      b.vertices.push_back(key(vs[k]));
    }
    for (const auto& a : g.arrows()) {
      auto t = local.find(a.tail);
      if (t != local.end()) b.arrows.emplace_back(t->second, local.at(a.head), a.exponent);
    }
    std::sort(b.arrows.begin(), b.arrows.end());
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end());

  std::vector<Vertex> out;
  std::vector<Arrow> as;
  for (const auto& b : blocks) {
    const auto base = static_cast<VertexId>(out.size());
    for (const auto& [color, center, weight, coset] : b.vertices) {
      out.push_back({static_cast<VertexId>(out.size()), color, center, weight, coset});
    }
    for (const auto& [t, h, e] : b.arrows) as.push_back({base + t, base + h, e});
  }
  return FactGraph(g.rank(), std::move(out), std::move(as));
}

bool isomorphic(const FactGraph& g, const FactGraph& h) { return canonical_form(g) == canonical_form(h); }

FactGraph relabel(const FactGraph& g, const std::vector<VertexId>& perm) {
  if (perm.size() != g.size()) throw Error(ErrorKind::InvalidVertex, "relabel: size mismatch");
  std::map<VertexId, VertexId> rename;
  std::vector<Vertex> vs = g.vertices();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    rename[vs[k].id] = perm[k];
    vs[k].id = perm[k];
  }
  std::sort(vs.begin(), vs.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::vector<Arrow> as;
  for (const auto& a : g.arrows()) as.push_back({rename.at(a.tail), rename.at(a.head), a.exponent});
  return FactGraph(g.rank(), std::move(vs), std::move(as));
}

}  // namespace qfg
