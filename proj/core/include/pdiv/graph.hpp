#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace pdiv {

using Vertex = int;

/// Largest supported order. One machine word per adjacency row, and the
/// single-byte graph6 size field.
inline constexpr int kMaxOrder = 62;

/// A set of vertices of some graph, stored as a 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<Vertex> members);
  static VertexSet of(std::span<const Vertex> members);
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Smallest member; the set must be nonempty.
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  std::vector<Vertex> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..order()-1 with one bit row per
/// vertex. Rows are kept symmetric and irreflexive; no bit at index >= order.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of the given order. Throws invalid-size outside 0..62.
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u] >> v) & 1U; }
  VertexSet row(Vertex v) const { return VertexSet(rows_[v]); }
  int degree(Vertex v) const { return std::popcount(rows_[v]); }
  int edge_count() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};
};

// ---- named patterns --------------------------------------------------------

/// Builds a catalog pattern. Labelings:
///   bull     triangle {0,1,2}, pendants 3-0 and 4-1
///   house    complement of the path 0-1-2-3-4
///   hammer   triangle {0,1,2}, path 2-3-4
///   diamond  edge 0-1 with 2 and 3 both complete to it
///   fork     claw centre 0 with leaves 1,2 and subdivided leaf 0-4-3
///   E        path 0-1-2-3-4 plus 5 adjacent to 2
///   claw     centre 0, leaves 1,2,3
///   paw      triangle {0,1,2}, pendant 3-0
///   triangle, C4, 4K1, odd-torch-5 (make_odd_torch(5, {0}))
///   grotzsch Mycielskian of C5 (11 vertices)
/// Throws unknown-name.
Graph make_named(std::string_view name);
std::span<const std::string_view> named_patterns();

enum class Family { path, cycle, complete, edgeless };
/// Consecutive-index adjacency. Throws invalid-size (k < 1, cycle k < 3, k > 62).
Graph make_family(Family kind, int k);
inline Graph path_graph(int k) { return make_family(Family::path, k); }
inline Graph cycle_graph(int k) { return make_family(Family::cycle, k); }
inline Graph complete_graph(int k) { return make_family(Family::complete, k); }
inline Graph edgeless_graph(int k) { return make_family(Family::edgeless, k); }

// ---- operations ------------------------------------------------------------

Graph complement(const Graph& g);

/// Vertex (a, u) of G x H is index a * |V(H)| + u. Throws size-overflow.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Vertex v becomes a clique of sizes[v] vertices; bags are laid out
/// consecutively in vertex order. Throws zero-size, size-overflow,
/// invalid-argument on a length mismatch.
Graph clique_blowup(const Graph& g, std::span<const int> sizes);
/// Index range [first, first + size) of each bag in clique_blowup's layout.
std::vector<VertexSet> blowup_bags(std::span<const int> sizes);

/// C_k on 0..k-1, y = k adjacent to `attach`, x = k + 1 adjacent to y only.
/// Throws invalid-size, attach-empty, attach-not-stable.
Graph make_odd_torch(int k, VertexSet attach);

Graph mycielskian(const Graph& g);

/// Relabels S to 0..|S|-1 in ascending order. Throws out-of-range.
Graph induced_subgraph(const Graph& g, VertexSet s);
/// Relabels order[i] to i. Throws out-of-range on bad or repeated vertices.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> order);

VertexSet neighborhood(const Graph& g, Vertex v);
VertexSet anti_neighborhood(const Graph& g, Vertex v);
/// Vertices outside S with a neighbor in S.
VertexSet neighborhood(const Graph& g, VertexSet s);
/// Vertices outside S with no neighbor in S.
VertexSet anti_neighborhood(const Graph& g, VertexSet s);

/// BFS hop count; nullopt when unreachable. Throws out-of-range.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

bool is_clique(const Graph& g, VertexSet s);
bool is_stable(const Graph& g, VertexSet s);
/// Connected components of G[S] as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet s);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }
bool is_connected(const Graph& g);
int min_degree(const Graph& g);

}  // namespace pdiv
