#include "pdiv/structure.hpp"

#include <cmath>
#include <stdexcept>

#include "pdiv/detectors.hpp"
#include "pdiv/error.hpp"
#include "pdiv/invariants.hpp"

namespace pdiv {

namespace {

void check_hole(const Graph& g, std::span<const Vertex> hole, int exact_len) {
  const int k = static_cast<int>(hole.size());
  if (k < 4 || (exact_len > 0 && k != exact_len)) {
    throw Error(Errc::not_a_hole, "cycle of length " + std::to_string(k));
  }
  for (Vertex v : hole)
    if (v < 0 || v >= g.order()) throw Error(Errc::out_of_range, "hole vertex " + std::to_string(v));
  const VertexSet set = VertexSet::of(hole);
  if (set.size() != k) throw Error(Errc::not_a_hole, "repeated hole vertex");
  for (int i = 0; i < k; ++i) {
    const Vertex v = hole[i];
    if (!g.adjacent(v, hole[(i + 1) % k]) || (g.row(v) & set).size() != 2) {
      throw Error(Errc::not_a_hole, "not an induced cycle at vertex " + std::to_string(v));
    }
  }
}

int mod5(int i) { return ((i % 5) + 5) % 5; }

std::uint32_t positions(std::initializer_list<int> offsets, int i) {
  std::uint32_t m = 0;
  for (int o : offsets) m |= 1U << mod5(i + o);
  return m;
}

ClaimEntry entry(std::string claim) { return ClaimEntry{std::move(claim), ClaimStatus::holds, {}, {}}; }

void violate(ClaimEntry& e, std::vector<Vertex> witness, std::string note) {
  if (e.status == ClaimStatus::violated) return;
  e.status = ClaimStatus::violated;
  e.witness = std::move(witness);
  e.note = std::move(note);
}

// First non-edge between (or inside) the given sets, as a witness pair.
std::optional<std::pair<Vertex, Vertex>> non_edge(const Graph& g, VertexSet a, VertexSet b) {
  for (Vertex u : a)
    for (Vertex v : b - g.row(u))
      if (u != v) return std::pair{u, v};
  return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> edge_between(const Graph& g, VertexSet a, VertexSet b) {
  for (Vertex u : a)
    for (Vertex v : b & g.row(u)) return std::pair{u, v};
  return std::nullopt;
}

// Bull-freeness plus local perfection; returns the failing hypothesis, if any.
std::optional<ClaimEntry> hypothesis_failure(const Graph& g, std::string claim, bool need_connected) {
  ClaimEntry e = entry(std::move(claim));
  if (need_connected && !is_connected(g)) {
    e.status = ClaimStatus::precondition_not_met;
    e.note = "graph is disconnected";
    return e;
  }
  if (auto bull = contains_induced(g, make_named("bull"), "bull")) {
    e.status = ClaimStatus::precondition_not_met;
    e.witness = bull->vertices;
    e.note = "contains a bull";
    return e;
  }
  if (auto lp = is_locally_perfect(g); !lp.locally_perfect) {
    e.status = ClaimStatus::precondition_not_met;
    e.witness = {*lp.violating};
    e.note = "neighbourhood of the vertex is imperfect";
    return e;
  }
  return std::nullopt;
}

}  // namespace

const std::array<std::string_view, 11> kFiveHoleClaims{
    "attachment-shapes",  // every hole neighbour is in X, Y, Z or W
    "m-neighbours",       // X u Y complete to M, and N(M) = X u Y
    "m-trivial",          // M = {anchor} or M homogeneous
    "xy-zw-cliques",      // X_i u Y_i and Z_{i+1} u W_i cliques
    "x-clique",           // X a clique, X_i and X_{i+2} not both nonempty
    "y-exclusions",       // Y_i nonempty forces the other families empty
    "y-anticomplete",     // Y_i misses Y_{i+1}, Z_{i+1}, Z_{i+3}, Z_{i+4}, W_{i+2}
    "y-z-complete",       // Y_i u Z_{i+1} complete to Z_i, Y_i complete to Z_{i+2}
    "z-blowup",           // C u Z is a clique blowup of C with bags Z_i + v_i
    "x-z-attachment",     // X_i complete to Z_i, anticomplete to the rest of Z
    "w-z-attachment",     // W_{i+2} misses Z_{i+1}, sees Z_i u Z_{i+2}
};

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::holds: return "holds";
    case ClaimStatus::violated: return "violated";
    case ClaimStatus::not_applicable: return "not-applicable";
    case ClaimStatus::precondition_not_met: return "precondition-not-met";
  }
  return "unknown";
}

bool ClaimLedger::all_hold() const {
  for (const auto& e : entries)
    if (e.status == ClaimStatus::violated || e.status == ClaimStatus::precondition_not_met) return false;
  return true;
}

bool ClaimLedger::any_violated() const {
  for (const auto& e : entries)
    if (e.status == ClaimStatus::violated) return true;
  return false;
}

const ClaimEntry* ClaimLedger::find(std::string_view claim) const {
  for (const auto& e : entries)
    if (e.claim == claim) return &e;
  return nullptr;
}

Attachment attachment_on_hole(const Graph& g, std::span<const Vertex> hole, Vertex u) {
  check_hole(g, hole, 0);
  if (u < 0 || u >= g.order()) throw Error(Errc::out_of_range, "vertex " + std::to_string(u));
  const VertexSet set = VertexSet::of(hole);
  if (set.contains(u)) throw Error(Errc::invalid_argument, "vertex lies on the hole");
  const VertexSet on = g.row(u) & set;
  return Attachment{on, is_stable(g, on)};
}

// ---- 5-hole decomposition --------------------------------------------------

VertexSet HoleDecomposition::hole_set() const { return VertexSet::of(std::span<const Vertex>(hole)); }

namespace {
VertexSet unite(const std::array<VertexSet, 5>& parts) {
  VertexSet s;
  for (auto p : parts) s |= p;
  return s;
}
}  // namespace

VertexSet HoleDecomposition::all_x() const { return unite(x); }
VertexSet HoleDecomposition::all_y() const { return unite(y); }
VertexSet HoleDecomposition::all_z() const { return unite(z); }
VertexSet HoleDecomposition::all_w() const { return unite(w); }

HoleDecomposition classify_around_5hole(const Graph& g, std::span<const Vertex> hole) {
  check_hole(g, hole, 5);
  HoleDecomposition d;
  std::copy(hole.begin(), hole.end(), d.hole.begin());
  const VertexSet set = d.hole_set();
  for (Vertex u : g.vertices() - set) {
    std::uint32_t at = 0;
    for (int p = 0; p < 5; ++p)
      if (g.adjacent(u, hole[p])) at |= 1U << p;
    if (at == 0) {
      d.m.insert(u);
      continue;
    }
    bool placed = false;
    for (int i = 0; i < 5 && !placed; ++i) {
      if (at == positions({0}, i)) d.x[i].insert(u), placed = true;
      else if (at == positions({0, 2}, i)) d.y[i].insert(u), placed = true;
      else if (at == positions({-1, 0, 1}, i)) d.z[i].insert(u), placed = true;
      else if (at == positions({0, 1, 2, 3}, i)) d.w[i].insert(u), placed = true;
    }
    if (!placed) d.other.insert(u);
  }
  return d;
}

std::array<std::array<Vertex, 5>, 10> hole_orientations(std::span<const Vertex> hole) {
  if (hole.size() != 5) throw Error(Errc::not_a_hole, "need 5 hole vertices");
  std::array<std::array<Vertex, 5>, 10> out{};
  for (int r = 0; r < 5; ++r) {
    for (int i = 0; i < 5; ++i) {
      out[r][i] = hole[mod5(r + i)];
      out[5 + r][i] = hole[mod5(r - i)];
    }
  }
  return out;
}

// ---- odd-hole attachments ---------------------------------------------------

ClaimEntry verify_stable_attachment(const Graph& g, std::span<const Vertex> odd_hole) {
  check_hole(g, odd_hole, 0);
  if (odd_hole.size() % 2 == 0) throw Error(Errc::not_a_hole, "hole has even length");
  if (auto failed = hypothesis_failure(g, "stable-attachment", false)) return *failed;
  ClaimEntry e = entry("stable-attachment");
  const VertexSet c = VertexSet::of(odd_hole);
  const VertexSet far = anti_neighborhood(g, c);
  for (Vertex u : neighborhood(g, c)) {
    const VertexSet into_far = g.row(u) & far;
    if (into_far.empty()) continue;
    const VertexSet on = g.row(u) & c;
    if (auto pair = edge_between(g, on, on)) {
      violate(e, {u, into_far.first(), pair->first, pair->second}, "attachment of u contains a hole edge");
    }
  }
  return e;
}

ClaimEntry verify_common_attachment(const Graph& g, std::span<const Vertex> odd_hole) {
  check_hole(g, odd_hole, 0);
  if (odd_hole.size() % 2 == 0) throw Error(Errc::not_a_hole, "hole has even length");
  if (auto failed = hypothesis_failure(g, "common-attachment", false)) return *failed;
  ClaimEntry e = entry("common-attachment");
  const VertexSet c = VertexSet::of(odd_hole);
  const VertexSet near = neighborhood(g, c);
  for (Vertex z : anti_neighborhood(g, c)) {
    const VertexSet cand = g.row(z) & near;
    for (Vertex x : cand) {
      if ((g.row(x) & c).size() < 2) continue;
      for (Vertex y : cand & g.row(x)) {
        if (y < x || (g.row(y) & c).size() < 2) continue;
        if ((g.row(x) & c) != (g.row(y) & c)) violate(e, {x, y, z}, "adjacent x, y attach differently");
      }
    }
  }
  return e;
}

ClaimEntry verify_no_far_antihole(const Graph& g) {
  if (auto failed = hypothesis_failure(g, "no-far-antihole", true)) return *failed;
  ClaimEntry e = entry("no-far-antihole");
  for (Vertex v = 0; v < g.order() && e.status == ClaimStatus::holds; ++v) {
    const VertexSet far = anti_neighborhood(g, v);
    const auto members = far.to_vector();
    if (auto anti = find_odd_antihole(induced_subgraph(g, far), 7)) {
      std::vector<Vertex> witness{v};
      for (Vertex i : anti->vertices) witness.push_back(members[i]);
      violate(e, std::move(witness), "odd antihole of length >= 7 inside M(v)");
    }
  }
  return e;
}

// ---- claims about the 5-hole decomposition ---------------------------------

ClaimLedger verify_5hole_claims(const Graph& g, const HoleDecomposition& d, Vertex anchor) {
  if (anchor < 0 || anchor >= g.order() || !d.m.contains(anchor)) {
    throw Error(Errc::anchor_not_in_m, "anchor " + std::to_string(anchor) + " has a neighbour on the hole");
  }
  ClaimLedger ledger;
  for (std::string_view id : kFiveHoleClaims) ledger.entries.push_back(entry(std::string(id)));
  auto at = [&](int claim) -> ClaimEntry& { return ledger.entries[static_cast<std::size_t>(claim - 1)]; };

  std::string missing;
  if (contains_induced(g, make_named("bull"))) missing = "graph contains a bull";
  else if (contains_induced(g, edgeless_graph(4))) missing = "graph contains 4K1";
  else if (!is_locally_perfect(g).locally_perfect) missing = "graph is not locally perfect";
  if (!missing.empty()) {
    for (auto& e : ledger.entries) {
      e.status = ClaimStatus::not_applicable;
      e.note = missing;
    }
    return ledger;
  }

  const auto& v = d.hole;
  const VertexSet X = d.all_x();
  const VertexSet Y = d.all_y();
  const VertexSet Z = d.all_z();
  const VertexSet W = d.all_w();

  if (!d.other.empty()) violate(at(1), {d.other.first()}, "vertex outside X, Y, Z, W, M");

  if (auto p = non_edge(g, X | Y, d.m)) violate(at(2), {p->first, p->second}, "X u Y not complete to M");
  if (auto p = edge_between(g, Z | W | d.other, d.m)) violate(at(2), {p->first, p->second}, "N(M) beyond X u Y");

  if (d.m.size() > 1 && !is_homogeneous_set(g, d.m)) violate(at(3), d.m.to_vector(), "M neither {v} nor homogeneous");

  for (int i = 0; i < 5; ++i) {
    const VertexSet xy = d.x[i] | d.y[i];
    if (auto p = non_edge(g, xy, xy)) violate(at(4), {p->first, p->second}, "X_i u Y_i not a clique");
    const VertexSet zw = d.z[mod5(i + 1)] | d.w[i];
    if (auto p = non_edge(g, zw, zw)) violate(at(4), {p->first, p->second}, "Z_{i+1} u W_i not a clique");

    if (!d.x[i].empty() && !d.x[mod5(i + 2)].empty()) {
      violate(at(5), {d.x[i].first(), d.x[mod5(i + 2)].first()}, "X_i and X_{i+2} both nonempty");
    }

    if (!d.y[i].empty()) {
      const VertexSet rest = (X - d.x[mod5(i + 1)]) | d.y[mod5(i + 2)] | d.y[mod5(i + 3)] | (W - d.w[mod5(i + 2)]);
      if (!rest.empty()) violate(at(6), {d.y[i].first(), rest.first()}, "Y_i nonempty beside a forbidden family");
    }

    const VertexSet far_y = d.y[mod5(i + 1)] | d.z[mod5(i + 1)] | d.z[mod5(i + 3)] | d.z[mod5(i + 4)] | d.w[mod5(i + 2)];
    if (auto p = edge_between(g, d.y[i], far_y)) violate(at(7), {p->first, p->second}, "Y_i sees a forbidden family");

    if (auto p = non_edge(g, d.y[i] | d.z[mod5(i + 1)], d.z[i])) {
      violate(at(8), {p->first, p->second}, "Y_i u Z_{i+1} not complete to Z_i");
    }
    if (auto p = non_edge(g, d.y[i], d.z[mod5(i + 2)])) violate(at(8), {p->first, p->second}, "Y_i not complete to Z_{i+2}");

    if (auto p = edge_between(g, d.x[i], Z - d.z[i])) violate(at(10), {p->first, p->second}, "X_i sees Z outside Z_i");
    if (auto p = non_edge(g, d.x[i], d.z[i])) violate(at(10), {p->first, p->second}, "X_i not complete to Z_i");
  }

  if (auto p = non_edge(g, X, X)) violate(at(5), {p->first, p->second}, "X not a clique");

  if (Y.empty()) {
    at(9).status = ClaimStatus::not_applicable;
    at(9).note = "Y is empty";
  } else {
    for (int i = 0; i < 5; ++i) {
      const VertexSet bag = d.z[i].with(v[i]);
      const VertexSet next = d.z[mod5(i + 1)].with(v[mod5(i + 1)]);
      const VertexSet skip = d.z[mod5(i + 2)].with(v[mod5(i + 2)]);
      if (auto p = non_edge(g, bag, bag)) violate(at(9), {p->first, p->second}, "bag not a clique");
      if (auto p = non_edge(g, bag, next)) violate(at(9), {p->first, p->second}, "consecutive bags not complete");
      if (auto p = edge_between(g, bag, skip)) violate(at(9), {p->first, p->second}, "bags two apart adjacent");
    }
  }

  bool any_y = false;
  for (int i = 0; i < 5; ++i) {
    if (d.y[i].empty()) continue;
    any_y = true;
    const VertexSet wi = d.w[mod5(i + 2)];
    if (auto p = edge_between(g, wi, d.z[mod5(i + 1)])) violate(at(11), {p->first, p->second}, "W_{i+2} sees Z_{i+1}");
    if (auto p = non_edge(g, wi, d.z[i] | d.z[mod5(i + 2)])) {
      violate(at(11), {p->first, p->second}, "W_{i+2} not complete to Z_i u Z_{i+2}");
    }
  }
  if (!any_y) {
    at(11).status = ClaimStatus::not_applicable;
    at(11).note = "Y is empty";
  }
  return ledger;
}

// ---- graph F and the final partition ---------------------------------------

Graph build_graph_F() {
  Graph f = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                  {5, 0}, {5, 2}, {6, 1}, {6, 3}, {7, 5}, {7, 6}});
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("graph F postcondition failed: ") + what);
  };
  require(f.order() == 8 && f.edge_count() == 11, "8 vertices and 11 edges");
  require(clique_number(f) == 2, "triangle-free");
  require(chromatic_number(f) == 3, "chromatic number 3");
  require(!contains_induced(f, make_named("bull")), "bull-free");
  require(!contains_induced(f, edgeless_graph(4)), "4K1-free");
  require(!find_homogeneous_set(f), "no homogeneous set");
  return f;
}

FourK1Partition build_4k1_partition(const Graph& g, const HoleDecomposition& d, Vertex anchor, int wmax) {
  auto mismatch = [](const std::string& what) { throw Error(Errc::shape_mismatch, what); };
  if (d.m != VertexSet::of({anchor})) mismatch("M is not {anchor}");
  if (!d.other.empty()) mismatch("Other is nonempty");
  if (d.y[0].empty()) mismatch("Y_1 is empty");
  for (int i = 0; i < 5; ++i) {
    if (i != 1 && !d.x[i].empty()) mismatch("X has a part other than X_2");
    if (i != 0 && !d.y[i].empty()) mismatch("Y has a part other than Y_1");
    if (i != 2 && !d.w[i].empty()) mismatch("W has a part other than W_3");
  }
  if (wmax < 1) throw Error(Errc::invalid_argument, "wmax must be >= 1");

  const auto& v = d.hole;
  FourK1Partition out;
  out.partition.a = d.x[1] | d.y[0] | d.z[0] | d.z[2] | d.z[3] | VertexSet::of({v[0], v[2], v[3]});
  out.partition.b = d.z[1] | d.z[4] | d.w[2] | VertexSet::of({anchor, v[1], v[4]});
  if (out.partition.a.intersects(out.partition.b) || (out.partition.a | out.partition.b) != g.vertices()) {
    mismatch("A and B do not partition V(G)");
  }

  const VertexSet b = out.partition.b;
  out.a_perfect = is_perfect(induced_subgraph(g, out.partition.a)).perfect;
  out.drops_unit = weighted_clique_number(g, WeightFn::unit(g.order()), b) < clique_number(g);
  out.drops_all = drops_for_every_weighting(g, b);

  if (std::pow(static_cast<double>(wmax), g.order()) > 1e7) {
    throw Error(Errc::budget_exceeded, "too many bounded weightings to re-check");
  }
  std::vector<int> w(static_cast<std::size_t>(g.order()), 1);
  out.drops_bounded = true;
  while (out.drops_bounded) {
    const WeightFn fn(w);
    out.drops_bounded = weighted_clique_number(g, fn, b) < weighted_clique_number(g, fn);
    std::size_t i = 0;
    while (i < w.size() && w[i] == wmax) w[i++] = 1;
    if (i == w.size()) break;
    ++w[i];
  }
  return out;
}

}  // namespace pdiv
