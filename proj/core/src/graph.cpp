#include "pdiv/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "pdiv/error.hpp"

namespace pdiv {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw Error(Errc::out_of_range,
                "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
  }
}

void check_set(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw Error(Errc::out_of_range, "vertex set exceeds graph order " + std::to_string(g.order()));
  }
}

}  // namespace

VertexSet VertexSet::of(std::initializer_list<Vertex> members) {
  VertexSet s;
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::of(std::span<const Vertex> members) {
  VertexSet s;
  for (Vertex v : members) s.insert(v);
  return s;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

Graph::Graph(int order) : n_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw Error(Errc::invalid_size, "order " + std::to_string(order) + " outside 0..62");
  }
}

Graph Graph::from_edges(int order, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edges(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw Error(Errc::invalid_argument, "loop at vertex " + std::to_string(u));
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

// ---- named patterns --------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 13> kNamed = {
    "bull", "house", "hammer", "diamond", "fork", "E", "claw",
    "paw", "triangle", "C4", "4K1", "odd-torch-5", "grotzsch"};

}  // namespace

std::span<const std::string_view> named_patterns() { return kNamed; }

Graph make_named(std::string_view name) {
  if (name == "bull") return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
  if (name == "house") return complement(path_graph(5));
  if (name == "hammer") return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  if (name == "diamond") return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  if (name == "fork") return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 4}, {4, 3}});
  if (name == "E") return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
  if (name == "claw" || name == "K1_3") return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  if (name == "paw") return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  if (name == "triangle") return complete_graph(3);
  if (name == "C4") return cycle_graph(4);
  if (name == "4K1") return edgeless_graph(4);
  if (name == "odd-torch-5") return make_odd_torch(5, VertexSet::of({0}));
  if (name == "grotzsch") return mycielskian(cycle_graph(5));
  throw Error(Errc::unknown_name, std::string(name));
}

Graph make_family(Family kind, int k) {
  if (k < 1 || k > kMaxOrder) throw Error(Errc::invalid_size, "k = " + std::to_string(k));
  Graph g(k);
  switch (kind) {
    case Family::path:
      for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
      break;
    case Family::cycle:
      if (k < 3) throw Error(Errc::invalid_size, "cycle needs k >= 3, got " + std::to_string(k));
      for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
      break;
    case Family::complete:
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
      break;
    case Family::edgeless:
      break;
  }
  return g;
}

// ---- operations ------------------------------------------------------------

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  if (ng * nh > kMaxOrder) {
    throw Error(Errc::size_overflow, std::to_string(ng) + " x " + std::to_string(nh) + " exceeds 62");
  }
  Graph p(ng * nh);
  for (int a = 0; a < ng; ++a) {
    for (int u = 0; u < nh; ++u) {
      for (int v = u + 1; v < nh; ++v)
        if (h.adjacent(u, v)) p.add_edge(a * nh + u, a * nh + v);
      for (int b = a + 1; b < ng; ++b)
        if (g.adjacent(a, b)) p.add_edge(a * nh + u, b * nh + u);
    }
  }
  return p;
}

std::vector<VertexSet> blowup_bags(std::span<const int> sizes) {
  std::vector<VertexSet> bags;
  int next = 0;
  for (int s : sizes) {
    VertexSet bag;
    for (int i = 0; i < s; ++i) bag.insert(next++);
    bags.push_back(bag);
  }
  return bags;
}

Graph clique_blowup(const Graph& g, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != g.order()) {
    throw Error(Errc::invalid_argument, "one bag size per vertex required");
  }
  long total = 0;
  for (int s : sizes) {
    if (s < 1) throw Error(Errc::zero_size, "bag sizes must be >= 1");
    total += s;
  }
  if (total > kMaxOrder) throw Error(Errc::size_overflow, "blowup has " + std::to_string(total) + " vertices");
  const auto bags = blowup_bags(sizes);
  Graph b(static_cast<int>(total));
  for (int u = 0; u < g.order(); ++u) {
    for (Vertex x : bags[u])
      for (Vertex y : bags[u])
        if (x < y) b.add_edge(x, y);
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      for (Vertex x : bags[u])
        for (Vertex y : bags[v]) b.add_edge(x, y);
    }
  }
  return b;
}

Graph make_odd_torch(int k, VertexSet attach) {
  if (k < 5 || k % 2 == 0 || k + 2 > kMaxOrder) {
    throw Error(Errc::invalid_size, "odd torch needs odd k >= 5, got " + std::to_string(k));
  }
  if (attach.empty()) throw Error(Errc::attach_empty, "attach set is empty");
  Graph g = cycle_graph(k);
  Graph torch(k + 2);
  for (int i = 0; i < k; ++i) torch.add_edge(i, (i + 1) % k);
  if (!attach.subset_of(g.vertices())) throw Error(Errc::out_of_range, "attach set outside the hole");
  if (!is_stable(g, attach)) throw Error(Errc::attach_not_stable, "attach set has an edge of the hole");
  const Vertex y = k;
  const Vertex x = k + 1;
  for (Vertex a : attach) torch.add_edge(y, a);
  torch.add_edge(x, y);
  return torch;
}

Graph mycielskian(const Graph& g) {
  const int n = g.order();
  if (2 * n + 1 > kMaxOrder) throw Error(Errc::size_overflow, "Mycielskian too large");
  Graph m(2 * n + 1);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      m.add_edge(u, v);
      m.add_edge(u, n + v);
      m.add_edge(v, n + u);
    }
    m.add_edge(n + u, 2 * n);
  }
  return m;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  check_set(g, s);
  const auto order = s.to_vector();
  return induced_subgraph(g, order);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> order) {
  VertexSet seen;
  for (Vertex v : order) {
    check_vertex(g, v);
    if (seen.contains(v)) throw Error(Errc::out_of_range, "repeated vertex " + std::to_string(v));
    seen.insert(v);
  }
  Graph h(static_cast<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (g.adjacent(order[i], order[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

VertexSet neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.row(v);
}

VertexSet anti_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return g.vertices() - g.row(v) - VertexSet::of({v});
}

VertexSet neighborhood(const Graph& g, VertexSet s) {
  check_set(g, s);
  VertexSet out;
  for (Vertex v : s) out |= g.row(v);
  return out - s;
}

VertexSet anti_neighborhood(const Graph& g, VertexSet s) {
  return g.vertices() - s - neighborhood(g, s);
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  VertexSet reached = VertexSet::of({u});
  VertexSet frontier = reached;
  for (int d = 0; !frontier.empty(); ++d) {
    if (frontier.contains(v)) return d;
    VertexSet next;
    for (Vertex x : frontier) next |= g.row(x);
    frontier = next - reached;
    reached |= frontier;
  }
  return std::nullopt;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!(s.without(v)).subset_of(g.row(v))) return false;
  return true;
}

bool is_stable(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (g.row(v).intersects(s)) return false;
  return true;
}

std::vector<VertexSet> components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::of({rest.first()});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex x : frontier) next |= g.row(x);
      frontier = (next & rest) - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

}  // namespace pdiv
