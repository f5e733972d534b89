#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdiv/graph.hpp"

namespace pdiv {

/// An induced embedding: G[vertices], relabeled in the recorded order, equals
/// `pattern` exactly.
struct Witness {
  std::string kind;
  std::vector<Vertex> vertices;
  Graph pattern;
};

bool verify_witness(const Graph& g, const Witness& w);

/// Exhaustive backtracking over injective maps V(H) -> V(G) in increasing
/// order, so the first hit is the lexicographically least embedding.
std::optional<Witness> contains_induced(const Graph& g, const Graph& h, std::string_view kind = "pattern");

enum class Parity { odd, even, any };

/// Induced cycle with length >= min_len (min_len >= 4) of the given parity.
std::optional<Witness> find_hole(const Graph& g, Parity parity, int min_len = 4);

/// Every hole of length in [min_len, max_len] exactly once, as a cyclic
/// vertex order starting at its smallest vertex.
std::vector<std::vector<Vertex>> enumerate_holes(const Graph& g, Parity parity, int min_len = 4,
                                                 int max_len = kMaxOrder);

/// Vertices whose complement order is an odd hole of length >= min_len.
std::optional<Witness> find_odd_antihole(const Graph& g, int min_len = 5);

/// Witness order: hole v_0..v_{k-1}, then y, then x, matching make_odd_torch.
std::optional<Witness> find_odd_torch(const Graph& g);

enum class SelectorKind { pattern, hole, odd_hole, even_hole, odd_antihole, odd_torch };

struct Selector {
  SelectorKind kind = SelectorKind::pattern;
  std::string name;
  Graph pattern;  // only for SelectorKind::pattern
};

/// A hereditary class given by its forbidden induced subgraphs.
struct ClassSpec {
  std::vector<Selector> forbidden;
};

/// Comma separated selectors, for example "bull,odd-torch" or "bull,P11,C4".
/// Accepted tokens: catalog names from make_named, Pk, Ck, Kk, kK1, hole,
/// odd-hole, even-hole, odd-antihole, odd-torch. Throws unresolvable-selector.
ClassSpec parse_class_spec(std::string_view text);
Selector parse_selector(std::string_view token);

struct Membership {
  bool member = true;
  std::optional<Witness> witness;
};

std::optional<Witness> find_selector(const Graph& g, const Selector& s);

/// Throws unresolvable-selector for an empty spec.
Membership is_class_member(const Graph& g, const ClassSpec& spec);

bool is_free_of(const Graph& g, const Selector& s);

}  // namespace pdiv
