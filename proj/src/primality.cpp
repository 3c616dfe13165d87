#include "qfg/primality.hpp"

#include <algorithm>
#include <string>

#include "qfg/error.hpp"
#include "qfg/redsets.hpp"

namespace qfg {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Prime: return "Prime";
    case Outcome::NotPrime: return "NotPrime";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Certificate c) {
  switch (c) {
    case Certificate::SingleVertex: return "SingleVertex";
    case Certificate::TwoVertexConnected: return "TwoVertexConnected";
    case Certificate::TotallyOrdered: return "TotallyOrdered";
    case Certificate::TotallyOrderedLine: return "TotallyOrderedLine";
    case Certificate::DualNeighborhood: return "DualNeighborhood";
    case Certificate::CutsReducible: return "CutsReducible";
  }
  return "?";
}

std::string_view to_string(CutStatus s) {
  switch (s) {
    case CutStatus::ReducibleByExtremal: return "ReducibleByExtremal";
    case CutStatus::ReducibleByDualNeighborhood: return "ReducibleByDualNeighborhood";
    case CutStatus::SimpleArrowless: return "SimpleArrowless";
    case CutStatus::Undetermined: return "Undetermined";
  }
  return "?";
}

namespace {

std::vector<CutScan> scan(const FactGraph& g, const ClassifyOptions& options) {
  const CutRange range(g, options.cut_cap);  // enforces the cap
  const CutScanContext ctx(g);
  return options.parallel ? scan_cuts_omp(ctx) : scan_cuts_serial(ctx);
}

CutClass classify_cut(const FactGraph& g, const CutScan& s) {
  CutClass c;
  std::vector<VertexId> left;
  for (std::size_t k = 0; k < g.size(); ++k) {
    if ((s.right >> k & 1U) == 0) left.push_back(g.vertices()[k].id);
  }
  c.cut = make_cut(g, left);
  c.extremal = s.extremal;
  c.dual = s.dual;
  if (s.extremal) {
    c.status = CutStatus::ReducibleByExtremal;
  } else if (s.dual) {
    c.status = CutStatus::ReducibleByDualNeighborhood;
  } else if (s.arrowless) {
    c.status = CutStatus::SimpleArrowless;
  } else {
    c.status = CutStatus::Undetermined;
  }
  return c;
}

}  // namespace

std::vector<Certificate> prime_certificates(const FactGraph& g) {
  std::vector<Certificate> out;
  if (g.size() == 1) out.push_back(Certificate::SingleVertex);
  if (g.size() == 2 && is_connected(g)) out.push_back(Certificate::TwoVertexConnected);
  if (is_totally_ordered(g)) {
    out.push_back(Certificate::TotallyOrdered);
    if (is_line(g)) out.push_back(Certificate::TotallyOrderedLine);
  }
  return out;
}

Verdict classify(const FactGraph& g, const ClassifyOptions& options) {
  const auto report = validate(g, Level::QFact);
  if (!report.ok) throw Error(ErrorKind::NotQFactGraph, report.message);
  if (g.size() == 0) throw Error(ErrorKind::PreconditionViolated, "empty graph (trivial module)");

  Verdict v;
  const auto components = connected_components(g);
  if (components.size() > 1) {
    v.outcome = Outcome::NotPrime;
    for (const auto& c : components) v.witness.push_back({c.ids(), to_polynomial(c)});
    return v;
  }
  if (g.size() == 1) {
    v.outcome = Outcome::Prime;
    v.certificate = Certificate::SingleVertex;
    return v;
  }
  if (is_totally_ordered(g)) {
    v.outcome = Outcome::Prime;
    v.certificate = Certificate::TotallyOrdered;
    return v;
  }

  const auto scans = scan(g, options);
  bool all_dual = true;
  bool all_reducible = true;
  for (const auto& s : scans) {
    v.report.push_back(classify_cut(g, s));
    all_dual = all_dual && s.dual.has_value();
    all_reducible = all_reducible && (s.dual.has_value() || s.extremal.has_value());
  }
  if (all_dual) {
    v.outcome = Outcome::Prime;
    v.certificate = Certificate::DualNeighborhood;
  } else if (all_reducible) {
    v.outcome = Outcome::Prime;
    v.certificate = Certificate::CutsReducible;
  } else {
    v.outcome = Outcome::Unknown;
  }
  return v;
}

std::optional<ExtremalWitness> cut_reducible_extremal(const FactGraph& g, const Cut& cut) {
  const CutScanContext ctx(g);
  const VertexMask right = ctx.mask_of(cut.right);
  if ((ctx.mask_of(cut.left) | right) != ctx.all() || (ctx.mask_of(cut.left) & right) != 0 ||
      cut.left.empty() || cut.right.empty()) {
    throw Error(ErrorKind::InvalidCut, "cut sides must partition the vertex set nontrivially");
  }
  return ctx.extremal_witness(right);
}

bool cut_arrowless_simple(const FactGraph& g, const Cut& cut) {
  std::vector<bool> on_left(g.size(), false);
  for (VertexId id : cut.left) on_left[g.index_of(id)] = true;
  return std::none_of(g.arrows().begin(), g.arrows().end(), [&](const Arrow& a) {
    return on_left[g.index_of(a.tail)] != on_left[g.index_of(a.head)];
  });
}

std::optional<std::vector<DualWitness>> dual_neighborhood_certificate(const FactGraph& g,
                                                                      const ClassifyOptions& options) {
  const auto scans = scan(g, options);
  std::vector<DualWitness> out;
  for (const auto& s : scans) {
    if (!s.dual) return std::nullopt;
    out.push_back(*s.dual);
  }
  return out;
}

PMatrix chain_p_matrix(const DynkinA& g, const std::vector<ChainEntry>& chain) {
  const std::size_t n = chain.size();
  for (std::size_t k = 1; k < n; ++k) {
    const auto& a = chain[k - 1];
    const auto& b = chain[k];
    if (!rset(g, a.color, b.color, a.length, b.length).contains(std::abs(b.center - a.center))) {
      throw Error(ErrorKind::ChainConditionViolated,
                  "entries " + std::to_string(k) + " and " + std::to_string(k + 1) +
                      ": gap not in the reducibility set");
    }
  }
  std::vector<int> values(n * n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& el = chain[l];
      const auto& ek = chain[k];
      const int twice =
          el.length + ek.length + g.distance(el.color, ek.color) - (el.center - ek.center);
      if (twice % 2 != 0) {
        throw Error(ErrorKind::NonIntegralP, "p_{" + std::to_string(l + 1) + "," +
                                                 std::to_string(k + 1) + "} is not an integer");
      }
      values[l * n + k] = twice / 2;
    }
  }
  return PMatrix(n, std::move(values));
}

std::vector<ChainPair> chain_arrow_closure(const DynkinA& g, const std::vector<ChainEntry>& chain) {
  for (std::size_t k = 1; k < chain.size(); ++k) {
    if (chain[k].center <= chain[k - 1].center) {
      throw Error(ErrorKind::ChainConditionViolated, "centers must be strictly increasing");
    }
  }
  const PMatrix p = chain_p_matrix(g, chain);
  std::vector<ChainPair> out;
  const std::size_t n = chain.size();
  if (n < 2) return out;
  const int p_last_first = p.at(n - 1, 0);
  const auto& first = chain.front();
  const auto& last = chain.back();
  const bool ends_restricted =
      rset_restricted(g, first.color, last.color, first.length, last.length,
                      g.interval(first.color, last.color))
          .contains(last.center - first.center);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      const auto& ek = chain[k];
      const auto& el = chain[l];
      ChainPair pair;
      pair.k = k;
      pair.l = l;
      pair.difference = el.center - ek.center;
      pair.p = p.at(l, k);
      pair.in_rset = rset(g, ek.color, el.color, ek.length, el.length).contains(pair.difference);
      pair.in_restricted = rset_restricted(g, ek.color, el.color, ek.length, el.length,
                                           g.interval(ek.color, el.color))
                               .contains(pair.difference);
      const bool ends = k == 0 && l == n - 1;
      pair.predicts_rset =
          !ends && p_last_first >= -g.boundary_distance(g.interval(ek.color, el.color)) - 1;
      pair.predicts_restricted = ends_restricted;
      out.push_back(pair);
    }
  }
  return out;
}

bool alternating_line_check(const FactGraph& g) {
  if (!is_totally_ordered(g)) {
    throw Error(ErrorKind::PreconditionViolated, "graph is not totally ordered");
  }
  const int n = g.rank().rank();
  for (const auto& v : g.vertices()) {
    if (v.color != 1 && v.color != n) {
      throw Error(ErrorKind::PreconditionViolated,
                  "vertex color " + std::to_string(v.color) + " is not a boundary node");
    }
  }
  if (!is_line(g)) return false;
  return std::all_of(g.arrows().begin(), g.arrows().end(), [&](const Arrow& a) {
    return g.vertex(a.tail).color != g.vertex(a.head).color;
  });
}

}  // namespace qfg
