#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qfg/cut_scan.hpp"
#include "qfg/fgraph.hpp"

namespace qfg {

enum class Outcome { Prime, NotPrime, Unknown };

enum class Certificate {
  SingleVertex,
  TwoVertexConnected,
  TotallyOrdered,
  TotallyOrderedLine,
  DualNeighborhood,
  /// Every cut certified reducible, by extremal or dual-neighborhood witnesses.
  CutsReducible,
};

enum class CutStatus {
  ReducibleByExtremal,
  ReducibleByDualNeighborhood,
  /// No arrow crosses the cut: the tensor product is simple.
  SimpleArrowless,
  Undetermined,
};

std::string_view to_string(Outcome o);
std::string_view to_string(Certificate c);
std::string_view to_string(CutStatus s);

struct CutClass {
  Cut cut;
  CutStatus status = CutStatus::Undetermined;
  std::optional<ExtremalWitness> extremal;
  std::optional<DualWitness> dual;
};

/// One factor of a NotPrime factorization: a union of connected components.
struct Part {
  std::vector<VertexId> vertices;
  DrinfeldPoly polynomial;
};

struct Verdict {
  Outcome outcome = Outcome::Unknown;
  /// Set iff outcome == Prime.
  std::optional<Certificate> certificate;
  /// NotPrime: at least two parts, no arrow between different parts.
  std::vector<Part> witness;
  /// Unknown, DualNeighborhood and CutsReducible: one entry per cut.
  std::vector<CutClass> report;
};

struct ClassifyOptions {
  std::size_t cut_cap = CutRange::kDefaultCap;
  bool parallel = true;
};

/// Primality verdict for a q-factorization graph. Throws NotQFactGraph when
/// `g` fails validate(QFact), TooManyVertices when a cut scan is needed
/// beyond `cut_cap`.
Verdict classify(const FactGraph& g, const ClassifyOptions& options = {});

/// Every structural certificate that applies (SingleVertex,
/// TwoVertexConnected, TotallyOrdered, TotallyOrderedLine), in that order.
std::vector<Certificate> prime_certificates(const FactGraph& g);

std::optional<ExtremalWitness> cut_reducible_extremal(const FactGraph& g, const Cut& cut);
bool cut_arrowless_simple(const FactGraph& g, const Cut& cut);

/// Per-cut witnesses if every cut satisfies the dual-neighborhood criterion.
std::optional<std::vector<DualWitness>> dual_neighborhood_certificate(
    const FactGraph& g, const ClassifyOptions& options = {});

struct ChainEntry {
  int center = 0;
  int length = 1;
  Node color = 1;
};

/// p_{l,k} with center_l - center_k = r_l + r_k + d(i_l, i_k) - 2 p_{l,k}.
/// Indices are 0-based; p_{k,k} = r_k.
class PMatrix {
 public:
  PMatrix() = default;
  PMatrix(std::size_t n, std::vector<int> values) : n_(n), values_(std::move(values)) {}

  std::size_t size() const { return n_; }
  /// True when there are no off-diagonal entries.
  bool empty() const { return n_ < 2; }
  int at(std::size_t l, std::size_t k) const { return values_.at(l * n_ + k); }

 private:
  std::size_t n_ = 0;
  std::vector<int> values_;
};

/// Throws ChainConditionViolated unless consecutive center gaps lie in the
/// corresponding reducibility sets.
PMatrix chain_p_matrix(const DynkinA& g, const std::vector<ChainEntry>& chain);

struct ChainPair {
  std::size_t k = 0;
  std::size_t l = 0;  // k < l
  int difference = 0;
  int p = 0;
  bool in_rset = false;
  bool in_restricted = false;
  /// p_{N,1} >= -d([i_k, i_l], boundary) - 1 and (k, l) != (1, N).
  bool predicts_rset = false;
  /// center_N - center_1 lies in the restricted set over [i_1, i_N].
  bool predicts_restricted = false;

  bool consistent() const {
    return (!predicts_rset || in_rset) && (!predicts_restricted || in_restricted);
  }
};

/// All pairs k < l of a chain with strictly increasing centers.
std::vector<ChainPair> chain_arrow_closure(const DynkinA& g, const std::vector<ChainEntry>& chain);

/// For totally ordered graphs colored in {1, n}: true iff the graph is a line
/// with adjacent vertices of different colors. Throws PreconditionViolated.
bool alternating_line_check(const FactGraph& g);

}  // namespace qfg
