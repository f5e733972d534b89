#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pdiv/detectors.hpp"
#include "pdiv/graph.hpp"

namespace pdiv {

/// Positive integer vertex weights.
class WeightFn {
 public:
  WeightFn() = default;
  /// Throws invalid-argument when any weight is < 1.
  explicit WeightFn(std::vector<int> weights);
  static WeightFn unit(int n) { return WeightFn(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  int size() const { return static_cast<int>(w_.size()); }
  int operator[](Vertex v) const { return w_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& values() const { return w_; }
  long total(VertexSet s) const;
  /// Weights of S's members in ascending vertex order.
  WeightFn restricted(VertexSet s) const;

  friend bool operator==(const WeightFn&, const WeightFn&) = default;

 private:
  std::vector<int> w_;
};

struct CliqueResult {
  long weight = 0;
  VertexSet clique;
};

int clique_number(const Graph& g);
CliqueResult max_clique(const Graph& g);
/// Throws weight-length-mismatch.
CliqueResult max_weight_clique(const Graph& g, const WeightFn& w);
long weighted_clique_number(const Graph& g, const WeightFn& w);
/// Max-weight clique inside S.
long weighted_clique_number(const Graph& g, const WeightFn& w, VertexSet s);

/// Colours in 1..k, one per vertex.
struct Coloring {
  std::vector<int> colors;
  int count() const;
  bool proper(const Graph& g) const;
};

std::optional<Coloring> is_k_colorable(const Graph& g, int k);
int chromatic_number(const Graph& g);
/// Optimal colouring (uses chromatic_number(g) colours).
Coloring optimal_coloring(const Graph& g);

struct PerfectionResult {
  bool perfect = true;
  std::optional<Witness> certificate;  // odd hole or odd antihole
};

/// Odd hole / odd antihole search.
PerfectionResult is_perfect(const Graph& g);

struct LocalPerfection {
  bool locally_perfect = true;
  std::optional<Vertex> violating;
};

LocalPerfection is_locally_perfect(const Graph& g);

/// Smallest module containing {a, b}: repeatedly absorbs every outside vertex
/// that sees part of the set but not all of it.
VertexSet module_closure(const Graph& g, Vertex a, Vertex b);

/// First proper module_closure over pairs (a, b) in lexicographic order.
std::optional<VertexSet> find_homogeneous_set(const Graph& g);
bool is_homogeneous_set(const Graph& g, VertexSet s);

/// Smallest clique (by size, then lexicographic vertex list) whose removal
/// increases the number of components.
std::optional<VertexSet> find_clique_cutset(const Graph& g);
bool is_clique_cutset(const Graph& g, VertexSet k);

enum class DiamondBranch { triangle_free, low_degree, product, none };
std::string_view to_string(DiamondBranch b);

/// Which branch of the (bull, diamond)-free trichotomy holds, tried in the
/// order triangle-free, low-degree, product. `none` is a counterexample.
/// Throws precondition-violated when G is disconnected or contains a bull or
/// a diamond.
DiamondBranch diamond_trichotomy(const Graph& g);

}  // namespace pdiv
