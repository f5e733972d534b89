#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdiv/divisibility.hpp"
#include "pdiv/graph.hpp"

namespace pdiv {

/// Neighbours of u on the hole C, and whether they are pairwise non-adjacent.
struct Attachment {
  VertexSet on_hole;
  bool stable = true;
};

/// Throws not-a-hole when C is not an induced cycle of length >= 4, and
/// invalid-argument when u lies on C.
Attachment attachment_on_hole(const Graph& g, std::span<const Vertex> hole, Vertex u);

/// Vertices classified against an ordered 5-hole v_1..v_5 (stored 0-based:
/// index i holds v_{i+1}). With indices mod 5:
///   x[i]  N_C(u) = {v_i}
///   y[i]  N_C(u) = {v_i, v_{i+2}}
///   z[i]  N_C(u) = {v_{i-1}, v_i, v_{i+1}}
///   w[i]  N_C(u) = {v_i, v_{i+1}, v_{i+2}, v_{i+3}}
///   m     no neighbour on C
///   other any other attachment
struct HoleDecomposition {
  std::array<Vertex, 5> hole{};
  std::array<VertexSet, 5> x{};
  std::array<VertexSet, 5> y{};
  std::array<VertexSet, 5> z{};
  std::array<VertexSet, 5> w{};
  VertexSet m;
  VertexSet other;

  VertexSet hole_set() const;
  VertexSet all_x() const;
  VertexSet all_y() const;
  VertexSet all_z() const;
  VertexSet all_w() const;
};

/// Throws not-a-hole unless `hole` is an induced 5-cycle in that order.
HoleDecomposition classify_around_5hole(const Graph& g, std::span<const Vertex> hole);

enum class ClaimStatus { holds, violated, not_applicable, precondition_not_met };
std::string_view to_string(ClaimStatus s);

struct ClaimEntry {
  std::string claim;
  ClaimStatus status = ClaimStatus::holds;
  std::vector<Vertex> witness;  // vertices re-checkable against the claim
  std::string note;
};

struct ClaimLedger {
  std::vector<ClaimEntry> entries;

  bool all_hold() const;  // no violated and no precondition-not-met entry
  bool any_violated() const;
  const ClaimEntry* find(std::string_view claim) const;
};

/// Edges uv with u in N(V(C)) and v in M(V(C)) force N_C(u) stable, in
/// locally perfect bull-free graphs.
ClaimEntry verify_stable_attachment(const Graph& g, std::span<const Vertex> odd_hole);

/// Adjacent x, y with a common neighbour z in M(V(C)) and at least two hole
/// neighbours each have equal attachments, in locally perfect bull-free graphs.
ClaimEntry verify_common_attachment(const Graph& g, std::span<const Vertex> odd_hole);

/// For every v, G[M(v)] has no odd antihole on 7 or more vertices, in
/// connected locally perfect bull-free graphs.
ClaimEntry verify_no_far_antihole(const Graph& g);

/// Ledger ids of verify_5hole_claims, in entry order.
extern const std::array<std::string_view, 11> kFiveHoleClaims;

/// Structural claims about the 5-hole decomposition of a (bull, 4K1)-free
/// locally perfect graph with the hole inside M(anchor). z-blowup and
/// w-z-attachment need a nonempty Y and are not-applicable otherwise; a failed
/// hypothesis battery makes every entry not-applicable. Throws
/// anchor-not-in-M.
ClaimLedger verify_5hole_claims(const Graph& g, const HoleDecomposition& d, Vertex anchor);

/// Cycle v1..v5 (0..4), y1 = 5 ~ {v1, v3}, y2 = 6 ~ {v2, v4}, v = 7 ~ {y1, y2}.
/// Its structural postconditions are checked on every call; a failure throws
/// std::logic_error.
Graph build_graph_F();

struct FourK1Partition {
  Partition partition;
  bool a_perfect = false;
  bool drops_unit = false;
  bool drops_bounded = false;  // every weighting with values in 1..wmax
  bool drops_all = false;      // maximal-clique criterion, every positive weighting
  bool verified() const { return a_perfect && drops_unit && drops_bounded && drops_all; }
};

/// A = X2 + Y1 + Z1 + Z3 + Z4 + {v1, v3, v4}, B = Z2 + Z5 + W3 + {anchor, v2, v5}.
/// Requires X = X2, Y = Y1 nonempty, W = W3, Other empty and M = {anchor};
/// throws shape-mismatch naming the failing part otherwise.
FourK1Partition build_4k1_partition(const Graph& g, const HoleDecomposition& d, Vertex anchor,
                                    int wmax = 2);

/// The 10 rotations and reflections of an ordered 5-hole.
std::array<std::array<Vertex, 5>, 10> hole_orientations(std::span<const Vertex> hole);

}  // namespace pdiv
