#include "pdiv/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>

#include "pdiv/error.hpp"
#include "pdiv/graph6.hpp"

namespace pdiv {

namespace {

void check_cap(int n, int cap) {
  if (n > cap) {
    throw Error(Errc::cap_exceeded, "order " + std::to_string(n) + " above cap " + std::to_string(cap));
  }
}

// Colour refinement from degrees. Colours are ranks of sorted signatures, so
// the resulting ordered partition does not depend on the input labeling.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  std::vector<std::vector<int>> sig(n);
  std::vector<int> idx(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      sig[v].clear();
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (Vertex u : g.row(v)) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    for (int v = 0; v < n; ++v) idx[v] = v;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int rank = 0;
    std::vector<int> next(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
      next[idx[i]] = rank;
    }
    const int count = n == 0 ? 0 : rank + 1;
    color = std::move(next);
    if (count == classes) break;
    classes = count;
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), color_(refined_colors(g)) {
    std::vector<int> sorted = color_;
    std::sort(sorted.begin(), sorted.end());
    slot_color_ = std::move(sorted);
  }

  std::vector<Vertex> run() {
    if (n_ > 0) dfs(0, 0, false);
    return std::vector<Vertex>(best_.begin(), best_.begin() + n_);
  }

 private:
  bool twins(Vertex u, Vertex v) const {
    const std::uint64_t ru = g_.row(u).without(v).bits();
    const std::uint64_t rv = g_.row(v).without(u).bits();
    return ru == rv;
  }

  // `equal`: the current prefix coincides with the best leaf's prefix.
  void dfs(int k, std::uint64_t used, bool equal) {
    if (k == n_) {
      if (!have_best_ || !equal) {
        best_ = cur_;
        best_col_ = cur_col_;
        have_best_ = true;
        ++improvements_;
      }
      return;
    }
    std::array<std::pair<std::uint64_t, Vertex>, kMaxOrder> cands{};
    int count = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      if (color_[v] != slot_color_[k]) continue;
      bool dominated = false;
      for (Vertex u = 0; u < v && !dominated; ++u) {
        if (((used >> u) & 1U) == 0 && color_[u] == color_[v] && twins(u, v)) dominated = true;
      }
      if (dominated) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < k; ++i) col = (col << 1) | (g_.adjacent(cur_[i], v) ? 1U : 0U);
      cands[count++] = {col, v};
    }
    std::stable_sort(cands.begin(), cands.begin() + count,
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (int c = 0; c < count; ++c) {
      const auto [col, v] = cands[c];
      bool child_equal = false;
      if (have_best_ && equal) {
        if (col < best_col_[k]) continue;
        child_equal = col == best_col_[k];
      }
      cur_[k] = v;
      cur_col_[k] = col;
      const auto before = improvements_;
      dfs(k + 1, used | (std::uint64_t{1} << v), child_equal);
      if (improvements_ != before) equal = true;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> color_;
  std::vector<int> slot_color_;
  std::array<Vertex, kMaxOrder> cur_{};
  std::array<Vertex, kMaxOrder> best_{};
  std::array<std::uint64_t, kMaxOrder> cur_col_{};
  std::array<std::uint64_t, kMaxOrder> best_col_{};
  bool have_best_ = false;
  std::uint64_t improvements_ = 0;
};

std::vector<Graph> extend_level(const std::vector<Graph>& parents, int n, int cap,
                                const std::function<bool(const Graph&)>* in_class) {
  std::set<std::string> keys;
  for (const Graph& parent : parents) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
      Graph child(n);
      for (Vertex u = 0; u < n - 1; ++u)
        for (Vertex v : parent.row(u))
          if (u < v) child.add_edge(u, v);
      for (Vertex u : VertexSet(mask)) child.add_edge(u, n - 1);
      if (in_class != nullptr && !(*in_class)(child)) continue;
      keys.insert(canonical_form(child, cap));
    }
  }
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (const auto& key : keys) out.push_back(decode_graph6(key));
  return out;
}

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g, int cap) {
  check_cap(g.order(), cap);
  return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph& g, int cap) {
  const auto labeling = canonical_labeling(g, cap);
  return induced_subgraph(g, labeling);
}

std::string canonical_form(const Graph& g, int cap) { return encode_graph6(canonical_graph(g, cap)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, a.order()) == canonical_form(b, b.order());
}

std::vector<Graph> enumerate_nonisomorphic(int n, int cap) {
  check_cap(n, cap);
  if (n < 0) throw Error(Errc::invalid_size, "negative order");
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Graph> level;
  if (n == 0) {
    level.emplace_back(0);
  } else {
    level = extend_level(enumerate_nonisomorphic(n - 1, cap), n, std::max(cap, n), nullptr);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(level)).first->second;
}

std::vector<Graph> enumerate_hereditary(int n, const std::function<bool(const Graph&)>& in_class, int cap) {
  check_cap(n, cap);
  if (n < 0) throw Error(Errc::invalid_size, "negative order");
  std::vector<Graph> level;
  if (Graph empty(0); in_class(empty)) level.push_back(empty);
  for (int k = 1; k <= n; ++k) level = extend_level(level, k, cap, &in_class);
  return level;
}

}  // namespace pdiv
