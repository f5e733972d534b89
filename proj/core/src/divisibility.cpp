#include "pdiv/divisibility.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <vector>

#include "pdiv/canonical.hpp"
#include "pdiv/error.hpp"

namespace pdiv {

std::optional<bool> DivisibilityMemo::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  if (auto it = table_.find(key); it != table_.end()) return it->second;
  return std::nullopt;
}

void DivisibilityMemo::insert(const std::string& key, bool value) {
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
}

std::size_t DivisibilityMemo::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void DivisibilityMemo::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

DivisibilityMemo& shared_divisibility_memo() {
  static DivisibilityMemo memo;
  return memo;
}

namespace {

using Mask = std::uint64_t;

// G[S] is an odd hole or an odd antihole: the minimal imperfect graphs.
bool is_minimal_imperfect(const Graph& g, Mask s) {
  const int k = std::popcount(s);
  if (k < 5 || k % 2 == 0) return false;
  bool cycle = true;
  bool anticycle = true;
  for (Vertex v : VertexSet(s)) {
    const int d = std::popcount(g.row(v).bits() & s);
    cycle = cycle && d == 2;
    anticycle = anticycle && d == k - 3;
  }
  if (!cycle && !anticycle) return false;
  if (cycle && components(g, VertexSet(s)).size() == 1) return true;
  if (anticycle) {
    // connectivity of the complement inside S
    Mask reached = s & (~s + 1);
    Mask frontier = reached;
    while (frontier != 0) {
      Mask next = 0;
      for (Vertex v : VertexSet(frontier)) next |= s & ~g.row(v).bits() & ~(Mask{1} << v);
      frontier = next & ~reached;
      reached |= frontier;
    }
    return reached == s;
  }
  return false;
}

// perfect[S] for every S, by heredity plus the minimal imperfect test.
std::vector<std::uint8_t> perfect_table(const Graph& g) {
  const Mask full = Mask{1} << g.order();
  std::vector<std::uint8_t> perfect(full, 0);
  perfect[0] = 1;
  for (Mask s = 1; s < full; ++s) {
    bool ok = true;
    for (Mask rest = s; rest != 0 && ok; rest &= rest - 1) ok = perfect[s & ~(rest & (~rest + 1))] != 0;
    perfect[s] = ok && !is_minimal_imperfect(g, s);
  }
  return perfect;
}

// Weighted clique number of every subset of `within`, indexed by mask.
void fill_clique_table(const Graph& g, const std::vector<int>& w, Mask within, std::vector<long>& table) {
  table[0] = 0;
  for (Mask t = within & (~within + 1); t != 0; t = ((t | ~within) + 1) & within) {
    const Vertex v = std::countr_zero(t);
    const Mask without = t & (t - 1);
    table[t] = std::max(table[without], w[v] + table[without & g.row(v).bits()]);
  }
}

void check_order(const Graph& g) {
  if (g.order() > kMaxSearchOrder) {
    throw Error(Errc::budget_exceeded,
                "exhaustive partition search limited to " + std::to_string(kMaxSearchOrder) + " vertices");
  }
}

class DivisibilityEngine {
 public:
  DivisibilityEngine(const Graph& g, int wmax, const DivisibilityOptions& opts)
      : g_(g), wmax_(wmax), opts_(opts) {
    check_order(g);
    const double work = std::pow(1.0 + 2.0 * std::max(wmax, 1), g.order());
    if (work > opts.budget) {
      throw Error(Errc::budget_exceeded, "(1 + 2 * wmax)^n = " + std::to_string(work) + " above budget");
    }
    perfect_ = perfect_table(g);
    state_.assign(std::size_t{1} << g.order(), -1);
    clique_.assign(std::size_t{1} << g.order(), 0);
    weights_.assign(static_cast<std::size_t>(g.order()), 1);
  }

  bool divisible(Mask s) {
    if (state_[s] >= 0) return state_[s] != 0;
    bool result = true;
    if (perfect_[s] == 0) {
      std::string key;
      const bool cacheable = opts_.memo != nullptr && std::popcount(s) <= opts_.memo_cap;
      if (cacheable) {
        key = (wmax_ == 0 ? std::string("pd:") : "pw" + std::to_string(wmax_) + ":") +
              canonical_form(induced_subgraph(g_, VertexSet(s)), opts_.memo_cap);
        if (auto hit = opts_.memo->find(key)) {
          state_[s] = *hit ? 1 : 0;
          return *hit;
        }
      }
      for (Mask rest = s; rest != 0 && result; rest &= rest - 1) result = divisible(s & ~(rest & (~rest + 1)));
      if (result) result = all_weightings_split(s);
      if (cacheable) opts_.memo->insert(key, result);
    }
    state_[s] = result ? 1 : 0;
    return result;
  }

  // Descends to a failing set all of whose one-vertex deletions divide.
  DivisibilityVerdict verdict() {
    const Mask full = g_.vertices().bits();
    DivisibilityVerdict v;
    v.semi = wmax_ > 0;
    if (divisible(full)) return v;
    Mask s = full;
    for (bool descended = true; descended;) {
      descended = false;
      for (Mask rest = s; rest != 0; rest &= rest - 1) {
        const Mask child = s & ~(rest & (~rest + 1));
        if (!divisible(child)) {
          s = child;
          descended = true;
          break;
        }
      }
    }
    v.divisible = false;
    v.failing_subgraph = VertexSet(s);
    if (wmax_ > 0) {
      all_weightings_split(s);
      v.failing_weights = WeightFn(weights_).restricted(VertexSet(s));
    }
    return v;
  }

 private:
  // Does S split well under every weighting? Leaves the first failing
  // weighting in weights_.
  bool all_weightings_split(Mask s) {
    const auto members = VertexSet(s).to_vector();
    for (Vertex v : members) weights_[v] = 1;
    const int top = std::max(wmax_, 1);
    while (true) {
      if (!splits(s)) return false;
      std::size_t i = 0;
      while (i < members.size() && weights_[members[i]] == top) weights_[members[i++]] = 1;
      if (i == members.size()) return true;
      ++weights_[members[i]];
    }
  }

  bool splits(Mask s) {
    fill_clique_table(g_, weights_, s, clique_);
    const long target = clique_[s];
    // B ranges over subsets of S; the complement S \ B must be perfect.
    for (Mask b = 0;; b = ((b | ~s) + 1) & s) {
      if (clique_[b] < target && perfect_[s & ~b] != 0) return true;
      if (b == s) break;
    }
    return false;
  }

  const Graph& g_;
  int wmax_;  // 0: unweighted
  const DivisibilityOptions& opts_;
  std::vector<std::uint8_t> perfect_;
  std::vector<std::int8_t> state_;
  std::vector<long> clique_;
  std::vector<int> weights_;
};

}  // namespace

// ---- good partitions -------------------------------------------------------

std::optional<Partition> find_good_partition(const Graph& g) {
  return find_good_partition(g, WeightFn::unit(g.order()));
}

std::optional<Partition> find_good_partition(const Graph& g, const WeightFn& w) {
  if (g.order() == 0) throw Error(Errc::empty_graph, "good partitions need n >= 1");
  if (w.size() != g.order()) throw Error(Errc::weight_mismatch, "weight count differs from order");
  check_order(g);
  const int n = g.order();
  const Mask full = g.vertices().bits();
  const auto perfect = perfect_table(g);
  std::vector<long> clique(std::size_t{1} << n, 0);
  fill_clique_table(g, w.values(), full, clique);
  const long target = clique[full];
  std::vector<int> idx;
  for (int k = 0; k <= n; ++k) {
    idx.resize(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Mask b = 0;
      for (int i : idx) b |= Mask{1} << i;
      if (clique[b] < target && perfect[full & ~b] != 0) return Partition{VertexSet(full & ~b), VertexSet(b)};
      // next k-combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

bool is_good_partition(const Graph& g, const Partition& p, const WeightFn& w) {
  if (g.order() == 0) return false;
  if (p.a.intersects(p.b) || (p.a | p.b) != g.vertices()) return false;
  if (!is_perfect(induced_subgraph(g, p.a)).perfect) return false;
  return weighted_clique_number(g, w, p.b) < weighted_clique_number(g, w);
}

bool drops_for_every_weighting(const Graph& g, VertexSet b) {
  if (g.order() == 0) return false;
  bool ok = true;
  // Bron-Kerbosch over G[B]; each maximal clique must have a common neighbour.
  auto expand = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
    if (!ok) return;
    if (p.empty() && x.empty()) {
      VertexSet common = g.vertices() - r;
      for (Vertex v : r) common &= g.row(v);
      if (common.empty()) ok = false;
      return;
    }
    const Vertex pivot = (p | x).first();
    for (Vertex v : p - g.row(pivot)) {
      self(self, r.with(v), p & g.row(v), x & g.row(v));
      p.erase(v);
      x.insert(v);
    }
  };
  expand(expand, VertexSet(), b, VertexSet());
  return ok;
}

// ---- divisibility ----------------------------------------------------------

DivisibilityVerdict is_perfectly_divisible(const Graph& g, const DivisibilityOptions& opts) {
  return DivisibilityEngine(g, 0, opts).verdict();
}

DivisibilityVerdict is_perfectly_weight_divisible_bounded(const Graph& g, int wmax,
                                                          const DivisibilityOptions& opts) {
  if (wmax < 1) throw Error(Errc::invalid_argument, "wmax must be >= 1");
  return DivisibilityEngine(g, wmax, opts).verdict();
}

namespace {

bool minimal_failure(const Graph& g, int wmax, const DivisibilityOptions& opts) {
  if (g.order() == 0) return false;
  DivisibilityEngine engine(g, wmax, opts);
  const Mask full = g.vertices().bits();
  if (engine.divisible(full)) return false;
  for (Vertex v : g.vertices())
    if (!engine.divisible(full & ~(Mask{1} << v))) return false;
  return true;
}

}  // namespace

bool certify_mnpd(const Graph& g, const DivisibilityOptions& opts) { return minimal_failure(g, 0, opts); }

bool certify_mnwd_bounded(const Graph& g, int wmax, const DivisibilityOptions& opts) {
  if (wmax < 1) throw Error(Errc::invalid_argument, "wmax must be >= 1");
  return minimal_failure(g, wmax, opts);
}

Partition partition_from_3coloring(const Graph& h, const WeightFn& w) {
  if (w.size() != h.order()) throw Error(Errc::weight_mismatch, "weight count differs from order");
  if (clique_number(h) > 2) throw Error(Errc::precondition_violated, "graph has a triangle");
  const auto coloring = is_k_colorable(h, 3);
  if (!coloring) throw Error(Errc::precondition_violated, "graph is not 3-colourable");
  VertexSet isolated;
  for (Vertex v : h.vertices())
    if (h.degree(v) == 0) isolated.insert(v);
  VertexSet b;
  int best = h.order() + 1;
  for (int c = 3; c >= 1; --c) {
    VertexSet cls;
    for (Vertex v : h.vertices() - isolated)
      if (coloring->colors[v] == c) cls.insert(v);
    if (cls.size() < best) {
      best = cls.size();
      b = cls;
    }
  }
  return Partition{h.vertices() - b, b};
}

Coloring coloring_via_divisibility(const Graph& g, const DivisibilityOptions& opts) {
  if (!is_perfectly_divisible(g, opts).divisible) {
    throw Error(Errc::precondition_violated, "graph is not perfectly divisible");
  }
  Coloring out{std::vector<int>(static_cast<std::size_t>(g.order()), 0)};
  VertexSet rest = g.vertices();
  int offset = 0;
  while (!rest.empty()) {
    const auto members = rest.to_vector();
    const auto split = find_good_partition(induced_subgraph(g, rest));
    if (!split) throw Error(Errc::precondition_violated, "induced subgraph without a good partition");
    VertexSet a;
    VertexSet b;
    for (Vertex i : split->a) a.insert(members[i]);
    for (Vertex i : split->b) b.insert(members[i]);
    const auto part = a.to_vector();
    const Coloring local = optimal_coloring(induced_subgraph(g, a));
    for (std::size_t i = 0; i < part.size(); ++i) out.colors[part[i]] = offset + local.colors[i];
    offset += local.count();
    rest = b;
  }
  return out;
}

}  // namespace pdiv
