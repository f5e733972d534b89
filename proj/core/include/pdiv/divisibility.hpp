#pragma once

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "pdiv/graph.hpp"
#include "pdiv/invariants.hpp"

namespace pdiv {

struct Partition {
  VertexSet a;
  VertexSet b;
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct DivisibilityVerdict {
  bool divisible = true;
  /// A minimal failing induced subgraph (original vertex indices).
  std::optional<VertexSet> failing_subgraph;
  /// Weights on failing_subgraph's members in ascending vertex order.
  std::optional<WeightFn> failing_weights;
  /// Set by the bounded-weight check: `divisible` only covers weights <= wmax.
  bool semi = false;
};

/// Process-wide verdict cache keyed by canonical form. Concurrent writers
/// always store identical values for a key, so inserts are idempotent.
class DivisibilityMemo {
 public:
  std::optional<bool> find(const std::string& key) const;
  void insert(const std::string& key, bool value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> table_;
};

DivisibilityMemo& shared_divisibility_memo();

struct DivisibilityOptions {
  /// nullptr disables cross-graph memoization.
  DivisibilityMemo* memo = &shared_divisibility_memo();
  int memo_cap = 8;
  /// Upper bound on (1 + 2 * wmax)^n, the subset-and-weighting work of an
  /// uncached run.
  double budget = 1e9;
};

/// Largest order accepted by the exhaustive partition searches.
inline constexpr int kMaxSearchOrder = 20;

/// B is scanned by size, then lexicographically by sorted vertex list, so
/// the result is B-minimal and reproducible. Throws empty-graph when n = 0,
/// budget-exceeded above kMaxSearchOrder, weight-length-mismatch.
std::optional<Partition> find_good_partition(const Graph& g);
std::optional<Partition> find_good_partition(const Graph& g, const WeightFn& w);

/// Independent re-check: G[A] perfect by odd hole / antihole search and a
/// strict weighted clique drop on B.
bool is_good_partition(const Graph& g, const Partition& p, const WeightFn& w);

/// True iff every maximal clique of G[B] extends to a larger clique of G,
/// which is exactly the condition for omega_w(G[B]) < omega_w(G) under every
/// positive weighting (for nonempty G).
bool drops_for_every_weighting(const Graph& g, VertexSet b);

DivisibilityVerdict is_perfectly_divisible(const Graph& g, const DivisibilityOptions& opts = {});

/// All weightings with values in 1..wmax on every induced subgraph. A true
/// verdict is semi-decided (flagged `semi`); false is definitive.
DivisibilityVerdict is_perfectly_weight_divisible_bounded(const Graph& g, int wmax,
                                                          const DivisibilityOptions& opts = {});

bool certify_mnpd(const Graph& g, const DivisibilityOptions& opts = {});
bool certify_mnwd_bounded(const Graph& g, int wmax, const DivisibilityOptions& opts = {});

/// Two colour classes plus the isolated vertices on the A side, the rest of
/// the smallest remaining class on the B side. Throws precondition-violated
/// unless H is triangle-free and 3-colourable.
Partition partition_from_3coloring(const Graph& h, const WeightFn& w);

/// Splits off a perfect part, colours it optimally, and recurses on the rest
/// with a fresh palette; uses at most C(omega + 1, 2) colours. Throws
/// precondition-violated when G is not perfectly divisible.
Coloring coloring_via_divisibility(const Graph& g, const DivisibilityOptions& opts = {});

}  // namespace pdiv
