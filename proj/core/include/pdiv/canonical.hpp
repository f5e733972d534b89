#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pdiv/graph.hpp"

namespace pdiv {

inline constexpr int kDefaultCanonicalCap = 8;

/// Position -> vertex map realizing the canonical relabeling.
///
/// The canonical form is the lexicographically largest graph6 bit string over
/// all orderings that respect the colour-refined ordered vertex partition.
/// Twin vertices (equal neighbourhoods apart from each other) are swapped by
/// an automorphism, so only one of them is branched on. Throws cap-exceeded
/// when order > cap.
std::vector<Vertex> canonical_labeling(const Graph& g, int cap = kDefaultCanonicalCap);

/// graph6 text of the canonically relabeled graph; equal iff isomorphic.
std::string canonical_form(const Graph& g, int cap = kDefaultCanonicalCap);

Graph canonical_graph(const Graph& g, int cap = kDefaultCanonicalCap);

bool isomorphic(const Graph& a, const Graph& b);

/// One representative per isomorphism class on n vertices, each in canonical
/// labeling, ordered by canonical key. Results are cached per process.
/// Throws cap-exceeded when n > cap.
std::vector<Graph> enumerate_nonisomorphic(int n, int cap = kDefaultCanonicalCap);

/// Same contract restricted to a hereditary class: every member on n vertices
/// is grown from a member on n - 1 vertices by adding one vertex.
std::vector<Graph> enumerate_hereditary(int n, const std::function<bool(const Graph&)>& in_class,
                                        int cap = kDefaultCanonicalCap);

}  // namespace pdiv
