#include "pdiv/detectors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>

#include "pdiv/error.hpp"

namespace pdiv {

bool verify_witness(const Graph& g, const Witness& w) {
  for (Vertex v : w.vertices)
    if (v < 0 || v >= g.order()) return false;
  if (VertexSet::of(w.vertices).size() != static_cast<int>(w.vertices.size())) return false;
  return induced_subgraph(g, w.vertices) == w.pattern;
}

// ---- generic containment ---------------------------------------------------

namespace {

class Embedder {
 public:
  Embedder(const Graph& g, const Graph& h) : g_(g), h_(h) {}

  bool run() { return extend(0, VertexSet()); }
  const std::array<Vertex, kMaxOrder>& map() const { return map_; }

 private:
  bool extend(int i, VertexSet used) {
    if (i == h_.order()) return true;
    const int need_deg = h_.degree(i);
    const int need_non = h_.order() - 1 - need_deg;
    for (Vertex x = 0; x < g_.order(); ++x) {
      if (used.contains(x)) continue;
      if (g_.degree(x) < need_deg || g_.order() - 1 - g_.degree(x) < need_non) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g_.adjacent(map_[j], x) == h_.adjacent(j, i);
      if (!ok) continue;
      map_[i] = x;
      if (extend(i + 1, used.with(x))) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::array<Vertex, kMaxOrder> map_{};
};

}  // namespace

std::optional<Witness> contains_induced(const Graph& g, const Graph& h, std::string_view kind) {
  if (h.order() > g.order()) return std::nullopt;
  Embedder e(g, h);
  if (!e.run()) return std::nullopt;
  Witness w{std::string(kind), std::vector<Vertex>(e.map().begin(), e.map().begin() + h.order()), h};
  return w;
}

// ---- holes -----------------------------------------------------------------

namespace {

bool parity_ok(Parity p, int len) {
  switch (p) {
    case Parity::odd: return len % 2 == 1;
    case Parity::even: return len % 2 == 0;
    case Parity::any: return true;
  }
  return false;
}

// Induced paths rooted at the smallest cycle vertex s, extended through larger
// vertices only. A hole closes when the new vertex sees s and nothing interior.
class HoleSearch {
 public:
  using Visit = std::function<bool(const std::vector<Vertex>&)>;  // true = stop

  HoleSearch(const Graph& g, Parity parity, int min_len, int max_len, bool once_per_hole)
      : g_(g), parity_(parity), min_len_(min_len), max_len_(max_len), once_(once_per_hole) {}

  void run(const Visit& visit) {
    visit_ = &visit;
    for (Vertex s = 0; s < g_.order(); ++s) {
      allowed_ = VertexSet(g_.vertices().bits() & ~((std::uint64_t{2} << s) - 1));
      path_.assign(1, s);
      if (grow(VertexSet())) return;
    }
  }

 private:
  // `interior`: path vertices other than the root and the last vertex.
  bool grow(VertexSet interior) {
    const Vertex s = path_.front();
    const Vertex last = path_.back();
    const int len = static_cast<int>(path_.size());
    const VertexSet on_path = interior.with(s).with(last);
    for (Vertex x : (g_.row(last) & allowed_) - on_path) {
      if (g_.row(x).intersects(interior)) continue;
      if (len >= 2 && g_.adjacent(x, s)) {
        if (len == 2) continue;  // triangle
        const int cycle_len = len + 1;
        if (cycle_len < min_len_ || cycle_len > max_len_ || !parity_ok(parity_, cycle_len)) continue;
        if (once_ && path_[1] > x) continue;
        path_.push_back(x);
        const bool stop = (*visit_)(path_);
        path_.pop_back();
        if (stop) return true;
        continue;
      }
      if (len + 2 > max_len_) continue;  // no room left to close
      path_.push_back(x);
      const bool stop = grow(len >= 2 ? interior.with(last) : interior);
      path_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  Parity parity_;
  int min_len_;
  int max_len_;
  bool once_;
  const Visit* visit_ = nullptr;
  VertexSet allowed_;
  std::vector<Vertex> path_;
};

Witness hole_witness(const std::vector<Vertex>& cycle, std::string kind) {
  return Witness{std::move(kind), cycle, cycle_graph(static_cast<int>(cycle.size()))};
}

}  // namespace

std::optional<Witness> find_hole(const Graph& g, Parity parity, int min_len) {
  if (min_len < 4) throw Error(Errc::invalid_argument, "hole length must be >= 4");
  std::optional<Witness> found;
  HoleSearch(g, parity, min_len, kMaxOrder, false).run([&](const std::vector<Vertex>& c) {
    found = hole_witness(c, "hole");
    return true;
  });
  return found;
}

std::vector<std::vector<Vertex>> enumerate_holes(const Graph& g, Parity parity, int min_len, int max_len) {
  if (min_len < 4) throw Error(Errc::invalid_argument, "hole length must be >= 4");
  std::vector<std::vector<Vertex>> out;
  HoleSearch(g, parity, min_len, max_len, true).run([&](const std::vector<Vertex>& c) {
    out.push_back(c);
    return false;
  });
  return out;
}

std::optional<Witness> find_odd_antihole(const Graph& g, int min_len) {
  if (min_len < 5) throw Error(Errc::invalid_argument, "antihole length must be >= 5");
  const Graph co = complement(g);
  std::optional<Witness> found;
  HoleSearch(co, Parity::odd, min_len, kMaxOrder, false).run([&](const std::vector<Vertex>& c) {
    found = Witness{"odd-antihole", c, complement(cycle_graph(static_cast<int>(c.size())))};
    return true;
  });
  return found;
}

std::optional<Witness> find_odd_torch(const Graph& g) {
  std::optional<Witness> found;
  HoleSearch(g, Parity::odd, 5, kMaxOrder, true).run([&](const std::vector<Vertex>& c) {
    const VertexSet hole = VertexSet::of(c);
    const int k = static_cast<int>(c.size());
    for (Vertex y : g.vertices() - hole) {
      const VertexSet attach = g.row(y) & hole;
      if (attach.empty() || !is_stable(g, attach)) continue;
      for (Vertex x : g.row(y) - hole) {
        if (g.row(x).intersects(hole)) continue;
        VertexSet positions;
        for (int i = 0; i < k; ++i)
          if (attach.contains(c[i])) positions.insert(i);
        std::vector<Vertex> order = c;
        order.push_back(y);
        order.push_back(x);
        found = Witness{"odd-torch", std::move(order), make_odd_torch(k, positions)};
        return true;
      }
    }
    return false;
  });
  return found;
}

// ---- class specs -----------------------------------------------------------

namespace {

std::string normalize(std::string_view token) {
  if (token == "K1_3") return std::string(token);
  std::string out;
  for (char c : token) {
    const bool sep = c == '_' || std::isspace(static_cast<unsigned char>(c));
    if (!sep) {
      out.push_back(c);
    } else if (!out.empty() && out.back() != '-') {
      out.push_back('-');
    }
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Selector parse_selector(std::string_view raw) {
  const std::string token = normalize(raw);
  if (token == "hole") return {SelectorKind::hole, token, {}};
  if (token == "odd-hole") return {SelectorKind::odd_hole, token, {}};
  if (token == "even-hole") return {SelectorKind::even_hole, token, {}};
  if (token == "odd-antihole") return {SelectorKind::odd_antihole, token, {}};
  if (token == "odd-torch") return {SelectorKind::odd_torch, token, {}};
  if (token == "K1_3") return {SelectorKind::pattern, token, make_named("claw")};
  for (std::string_view name : named_patterns()) {
    if (token == name) return {SelectorKind::pattern, token, make_named(name)};
  }
  try {
    if (token.size() >= 2 && (token[0] == 'P' || token[0] == 'C' || token[0] == 'K')) {
      if (auto k = parse_int(std::string_view(token).substr(1))) {
        if (token[0] == 'P') return {SelectorKind::pattern, token, path_graph(*k)};
        if (token[0] == 'K') return {SelectorKind::pattern, token, complete_graph(*k)};
        return {SelectorKind::pattern, token, cycle_graph(*k)};
      }
    }
    if (token.size() >= 3 && token.ends_with("K1")) {
      if (auto k = parse_int(std::string_view(token).substr(0, token.size() - 2))) {
        return {SelectorKind::pattern, token, edgeless_graph(*k)};
      }
    }
  } catch (const Error& e) {
    throw Error(Errc::unresolvable_selector, token + " (" + e.what() + ")");
  }
  throw Error(Errc::unresolvable_selector, "'" + std::string(raw) + "'");
}

ClassSpec parse_class_spec(std::string_view text) {
  ClassSpec spec;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::size_t b = 0;
    std::size_t e = part.size();
    while (b < e && std::isspace(static_cast<unsigned char>(part[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(part[e - 1]))) --e;
    if (b == e) throw Error(Errc::unresolvable_selector, "empty selector in '" + std::string(text) + "'");
    spec.forbidden.push_back(parse_selector(part.substr(b, e - b)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return spec;
}

std::optional<Witness> find_selector(const Graph& g, const Selector& s) {
  std::optional<Witness> w;
  switch (s.kind) {
    case SelectorKind::pattern: w = contains_induced(g, s.pattern, s.name); break;
    case SelectorKind::hole: w = find_hole(g, Parity::any, 4); break;
    case SelectorKind::odd_hole: w = find_hole(g, Parity::odd, 5); break;
    case SelectorKind::even_hole: w = find_hole(g, Parity::even, 4); break;
    case SelectorKind::odd_antihole: w = find_odd_antihole(g, 5); break;
    case SelectorKind::odd_torch: w = find_odd_torch(g); break;
  }
  if (w) w->kind = s.name;
  return w;
}

bool is_free_of(const Graph& g, const Selector& s) { return !find_selector(g, s).has_value(); }

Membership is_class_member(const Graph& g, const ClassSpec& spec) {
  if (spec.forbidden.empty()) throw Error(Errc::unresolvable_selector, "class spec lists no forbidden graphs");
  for (const Selector& s : spec.forbidden) {
    if (auto w = find_selector(g, s)) return Membership{false, std::move(w)};
  }
  return Membership{true, std::nullopt};
}

}  // namespace pdiv
