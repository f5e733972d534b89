#include "pdiv/invariants.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pdiv/canonical.hpp"
#include "pdiv/error.hpp"
#include "pdiv/graph6.hpp"

namespace pdiv {

WeightFn::WeightFn(std::vector<int> weights) : w_(std::move(weights)) {
  for (int x : w_)
    if (x < 1) throw Error(Errc::invalid_argument, "weights must be positive integers");
}

long WeightFn::total(VertexSet s) const {
  long t = 0;
  for (Vertex v : s) t += w_[static_cast<std::size_t>(v)];
  return t;
}

WeightFn WeightFn::restricted(VertexSet s) const {
  std::vector<int> out;
  for (Vertex v : s) out.push_back(w_[static_cast<std::size_t>(v)]);
  return WeightFn(std::move(out));
}

// ---- cliques ---------------------------------------------------------------

namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, const WeightFn& w) : g_(g), w_(w) {}

  CliqueResult run(VertexSet within) {
    expand(within, VertexSet(), 0);
    return best_;
  }

 private:
  void expand(VertexSet cand, VertexSet cur, long weight) {
    if (weight > best_.weight) best_ = {weight, cur};
    long room = w_.total(cand);
    for (Vertex v : cand) {
      if (weight + room <= best_.weight) return;
      expand(cand & g_.row(v), cur.with(v), weight + w_[v]);
      cand.erase(v);
      room -= w_[v];
    }
  }

  const Graph& g_;
  const WeightFn& w_;
  CliqueResult best_;
};

void check_weights(const Graph& g, const WeightFn& w) {
  if (w.size() != g.order()) {
    throw Error(Errc::weight_mismatch,
                std::to_string(w.size()) + " weights for " + std::to_string(g.order()) + " vertices");
  }
}

}  // namespace

CliqueResult max_weight_clique(const Graph& g, const WeightFn& w) {
  check_weights(g, w);
  return CliqueSearch(g, w).run(g.vertices());
}

CliqueResult max_clique(const Graph& g) { return max_weight_clique(g, WeightFn::unit(g.order())); }

int clique_number(const Graph& g) { return static_cast<int>(max_clique(g).weight); }

long weighted_clique_number(const Graph& g, const WeightFn& w) { return max_weight_clique(g, w).weight; }

long weighted_clique_number(const Graph& g, const WeightFn& w, VertexSet s) {
  check_weights(g, w);
  return CliqueSearch(g, w).run(s & g.vertices()).weight;
}

// ---- colouring -------------------------------------------------------------

int Coloring::count() const {
  int m = 0;
  for (int c : colors) m = std::max(m, c);
  return m;
}

bool Coloring::proper(const Graph& g) const {
  if (static_cast<int>(colors.size()) != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    if (colors[u] < 1) return false;
    for (Vertex v : g.row(u))
      if (colors[u] == colors[v]) return false;
  }
  return true;
}

namespace {

// DSATUR-ordered backtracking; a new colour is opened only as the next unused
// index, which removes colour-permutation symmetry.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k) : g_(g), k_(k), colors_(static_cast<std::size_t>(g.order()), 0) {}

  bool run() { return step(0, 0); }
  const std::vector<int>& colors() const { return colors_; }

 private:
  bool step(int colored, int used) {
    if (colored == g_.order()) return true;
    Vertex pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (colors_[v] != 0) continue;
      std::uint64_t seen = 0;
      for (Vertex u : g_.row(v))
        if (colors_[u] != 0) seen |= std::uint64_t{1} << colors_[u];
      const int sat = std::popcount(seen);
      if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = g_.degree(v);
      }
    }
    std::uint64_t blocked = 0;
    for (Vertex u : g_.row(pick))
      if (colors_[u] != 0) blocked |= std::uint64_t{1} << colors_[u];
    const int limit = std::min(k_, used + 1);
    for (int c = 1; c <= limit; ++c) {
      if ((blocked >> c) & 1U) continue;
      colors_[pick] = c;
      if (step(colored + 1, std::max(used, c))) return true;
    }
    colors_[pick] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colors_;
};

}  // namespace

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
  if (k < 0) throw Error(Errc::invalid_argument, "k must be >= 0");
  if (g.order() == 0) return Coloring{};
  if (k == 0) return std::nullopt;
  ColoringSearch search(g, std::min(k, g.order()));
  if (!search.run()) return std::nullopt;
  return Coloring{search.colors()};
}

Coloring optimal_coloring(const Graph& g) {
  for (int k = clique_number(g);; ++k) {
    if (auto c = is_k_colorable(g, k)) return *c;
  }
}

int chromatic_number(const Graph& g) { return optimal_coloring(g).count(); }

// ---- perfection ------------------------------------------------------------

PerfectionResult is_perfect(const Graph& g) {
  if (auto hole = find_hole(g, Parity::odd, 5)) {
    hole->kind = "odd-hole";
    return {false, std::move(hole)};
  }
  if (auto anti = find_odd_antihole(g, 7)) return {false, std::move(anti)};
  return {true, std::nullopt};
}

LocalPerfection is_locally_perfect(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!is_perfect(induced_subgraph(g, g.row(v))).perfect) return {false, v};
  }
  return {true, std::nullopt};
}

// ---- homogeneous sets and clique cutsets -----------------------------------

VertexSet module_closure(const Graph& g, Vertex a, Vertex b) {
  VertexSet s = VertexSet::of({a, b});
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex z : g.vertices() - s) {
      const VertexSet seen = g.row(z) & s;
      if (!seen.empty() && seen != s) {
        s.insert(z);
        grew = true;
      }
    }
  }
  return s;
}

bool is_homogeneous_set(const Graph& g, VertexSet s) {
  if (s.size() <= 1 || s.size() >= g.order() || !s.subset_of(g.vertices())) return false;
  for (Vertex z : g.vertices() - s) {
    const VertexSet seen = g.row(z) & s;
    if (!seen.empty() && seen != s) return false;
  }
  return true;
}

std::optional<VertexSet> find_homogeneous_set(const Graph& g) {
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b) {
      const VertexSet m = module_closure(g, a, b);
      if (m.size() < g.order()) return m;
    }
  return std::nullopt;
}

bool is_clique_cutset(const Graph& g, VertexSet k) {
  if (k.empty() || !k.subset_of(g.vertices()) || !is_clique(g, k)) return false;
  return components(g, g.vertices() - k).size() > components(g).size();
}

std::optional<VertexSet> find_clique_cutset(const Graph& g) {
  std::vector<std::vector<Vertex>> cliques;
  auto collect = [&](auto&& self, VertexSet cand, std::vector<Vertex>& cur) -> void {
    for (Vertex v : cand) {
      cur.push_back(v);
      cliques.push_back(cur);
      self(self, VertexSet(cand.bits() & g.row(v).bits() & ~((std::uint64_t{2} << v) - 1)), cur);
      cur.pop_back();
    }
  };
  std::vector<Vertex> cur;
  collect(collect, g.vertices(), cur);
  std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  const std::size_t base = components(g).size();
  for (const auto& c : cliques) {
    const VertexSet k = VertexSet::of(c);
    if (components(g, g.vertices() - k).size() > base) return k;
  }
  return std::nullopt;
}

// ---- (bull, diamond)-free trichotomy ---------------------------------------

std::string_view to_string(DiamondBranch b) {
  switch (b) {
    case DiamondBranch::triangle_free: return "triangle-free";
    case DiamondBranch::low_degree: return "low-degree";
    case DiamondBranch::product: return "product";
    case DiamondBranch::none: return "none";
  }
  return "none";
}

DiamondBranch diamond_trichotomy(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::precondition_violated, "graph is disconnected");
  for (std::string_view name : {"bull", "diamond"}) {
    if (auto w = contains_induced(g, make_named(name), name)) {
      std::string at;
      for (Vertex v : w->vertices) at += " " + std::to_string(v);
      throw Error(Errc::precondition_violated, std::string(name) + " at" + at);
    }
  }
  const int omega = clique_number(g);
  if (omega <= 2) return DiamondBranch::triangle_free;
  if (min_degree(g) <= omega - 1) return DiamondBranch::low_degree;
  if (g.order() == 2 * omega && 2 * omega <= kMaxOrder &&
      isomorphic(g, cartesian_product(complete_graph(2), complete_graph(omega)))) {
    return DiamondBranch::product;
  }
  return DiamondBranch::none;
}

}  // namespace pdiv
