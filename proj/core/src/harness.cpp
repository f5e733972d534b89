#include "pdiv/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "pdiv/canonical.hpp"
#include "pdiv/detectors.hpp"
#include "pdiv/error.hpp"
#include "pdiv/graph6.hpp"
#include "pdiv/invariants.hpp"
#include "pdiv/structure.hpp"

namespace pdiv {

using json = nlohmann::ordered_json;

std::vector<Graph> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot read " + path);
  std::vector<Graph> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.push_back(decode_graph6(line));
    } catch (const Error& e) {
      throw Error(Errc::malformed_line, path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (in.bad()) throw Error(Errc::io_error, "read failed on " + path);
  return out;
}

namespace {

constexpr std::array<std::string_view, 11> kCampaigns{
    "odd-torch",  "even-hole",    "4k1",          "tf-equivalence", "diamond-structure", "diamond-mnpd",
    "far-antihole", "chi-binding", "torch-c3",    "mnwd-search",    "pxx-classes"};

bool triangle_free_source(std::string_view name) { return name == "tf-equivalence" || name == "torch-c3"; }

std::vector<Vertex> members_of(VertexSet s) { return s.to_vector(); }

// Checks shared by the three divisibility campaigns.
struct Outcome {
  json checks = json::object();
  std::vector<std::vector<Vertex>> witness;
  bool member = false;
  bool violated = false;
  bool semi = false;
};

void divisibility_checks(const CampaignSpec& spec, const Graph& g, const DivisibilityOptions& opts, Outcome& out) {
  const auto pd = is_perfectly_divisible(g, opts);
  out.checks["pd"] = pd.divisible;
  if (!pd.divisible) {
    out.violated = true;
    out.witness.push_back(members_of(*pd.failing_subgraph));
  }
  if (g.order() <= spec.weighted_max_n) {
    const auto pwd = is_perfectly_weight_divisible_bounded(g, spec.wmax, opts);
    out.checks["pwd_bounded"] = pwd.divisible;
    out.semi = true;
    if (!pwd.divisible) {
      out.violated = true;
      out.witness.push_back(members_of(*pwd.failing_subgraph));
      out.checks["pwd_weights"] = pwd.failing_weights->values();
    }
  }
}

ClassSpec parsed(std::string_view text) { return parse_class_spec(text); }

// The 5-hole decomposition checks on a (bull, 4K1)-free graph.
void ledger_checks(const Graph& g, const CampaignSpec& spec, Outcome& out) {
  if (!is_locally_perfect(g).locally_perfect) {
    out.checks["ledger"] = "not-locally-perfect";
    return;
  }
  int decompositions = 0;
  int partitions = 0;
  json failed = json::array();
  for (Vertex anchor = 0; anchor < g.order(); ++anchor) {
    const VertexSet far = anti_neighborhood(g, anchor);
    const auto local = far.to_vector();
    for (const auto& cyc : enumerate_holes(induced_subgraph(g, far), Parity::odd, 5, 5)) {
      std::array<Vertex, 5> hole{};
      for (int i = 0; i < 5; ++i) hole[i] = local[cyc[i]];
      ++decompositions;
      const auto ledger = verify_5hole_claims(g, classify_around_5hole(g, hole), anchor);
      for (const auto& e : ledger.entries) {
        if (e.status != ClaimStatus::violated) continue;
        out.violated = true;
        failed.push_back(e.claim);
        std::vector<Vertex> w(hole.begin(), hole.end());
        w.insert(w.begin(), anchor);
        out.witness.push_back(std::move(w));
        out.witness.push_back(e.witness);
      }
      for (const auto& oriented : hole_orientations(hole)) {
        const auto d = classify_around_5hole(g, oriented);
        try {
          const auto part = build_4k1_partition(g, d, anchor, spec.wmax);
          ++partitions;
          if (!part.verified()) {
            out.violated = true;
            failed.push_back("partition");
            out.witness.push_back(members_of(part.partition.a));
            out.witness.push_back(members_of(part.partition.b));
          }
          break;
        } catch (const Error& e) {
          if (e.code() != Errc::shape_mismatch) throw;
        }
      }
    }
  }
  out.checks["decompositions"] = decompositions;
  out.checks["partitions"] = partitions;
  if (!failed.empty()) out.checks["failed_claims"] = failed;
}

Outcome run_checks(const CampaignSpec& spec, const Graph& g, const DivisibilityOptions& opts) {
  Outcome out;
  const std::string& name = spec.name;
  auto witness_of = [](const Membership& m) {
    return m.witness ? m.witness->vertices : std::vector<Vertex>{};
  };

  if (name == "odd-torch" || name == "even-hole" || name == "4k1") {
    static const ClassSpec torch = parsed("bull,odd-torch");
    static const ClassSpec even = parsed("bull,even-hole");
    static const ClassSpec four = parsed("bull,4K1");
    const ClassSpec& cls = name == "odd-torch" ? torch : name == "even-hole" ? even : four;
    const auto m = is_class_member(g, cls);
    out.checks["class"] = m.member;
    if (m.member) {
      out.member = true;
      divisibility_checks(spec, g, opts, out);
      if (name == "4k1") ledger_checks(g, spec, out);
    }
    if (name == "even-hole" && !find_hole(g, Parity::even) && g.order() > 0) {
      out.member = true;
      const int omega = clique_number(g);
      const int chi = chromatic_number(g);
      out.checks["chi"] = chi;
      out.checks["omega"] = omega;
      if (chi > 2 * omega - 1) out.violated = true;
    }
    if (!out.member) out.witness.push_back(witness_of(m));
  } else if (name == "tf-equivalence") {
    out.member = clique_number(g) <= 2;
    if (out.member) {
      const bool col3 = is_k_colorable(g, 3).has_value();
      const auto pd = is_perfectly_divisible(g, opts);
      out.checks["colorable3"] = col3;
      out.checks["pd"] = pd.divisible;
      bool agree = col3 == pd.divisible;
      if (g.order() <= spec.weighted_max_n) {
        const bool pwd = is_perfectly_weight_divisible_bounded(g, spec.wmax, opts).divisible;
        out.checks["pwd_bounded"] = pwd;
        out.semi = true;
        agree = agree && pwd == pd.divisible;
      }
      if (!pd.divisible) {
        out.checks["mnpd"] = certify_mnpd(g, opts);
        out.witness.push_back(members_of(*pd.failing_subgraph));
      }
      out.violated = !agree;
    }
  } else if (name == "diamond-structure") {
    static const ClassSpec cls = parsed("bull,diamond");
    out.member = g.order() > 0 && is_connected(g) && is_class_member(g, cls).member;
    if (out.member) {
      const auto branch = diamond_trichotomy(g);
      out.checks["branch"] = std::string(to_string(branch));
      out.violated = branch == DiamondBranch::none;
    }
  } else if (name == "diamond-mnpd") {
    static const ClassSpec cls = parsed("bull,diamond");
    const auto m = is_class_member(g, cls);
    out.member = m.member;
    if (out.member) {
      const int omega = clique_number(g);
      out.checks["omega"] = omega;
      if (omega >= 3) {
        const bool mnpd = certify_mnpd(g, opts);
        out.checks["mnpd"] = mnpd;
        out.violated = mnpd;
      }
    } else {
      out.witness.push_back(witness_of(m));
    }
  } else if (name == "far-antihole") {
    static const ClassSpec cls = parsed("bull");
    out.member = g.order() > 0 && is_connected(g) && is_class_member(g, cls).member &&
                 is_locally_perfect(g).locally_perfect;
    if (out.member) {
      const auto e = verify_no_far_antihole(g);
      out.checks["status"] = std::string(to_string(e.status));
      if (e.status == ClaimStatus::violated) {
        out.violated = true;
        out.witness.push_back(e.witness);
      }
    }
  } else if (name == "chi-binding") {
    static const ClassSpec torch = parsed("bull,odd-torch");
    static const ClassSpec four = parsed("bull,4K1");
    out.member = is_class_member(g, torch).member || is_class_member(g, four).member;
    if (out.member) {
      const int omega = clique_number(g);
      const int bound = omega * (omega + 1) / 2;
      out.checks["omega"] = omega;
      out.checks["bound"] = bound;
      try {
        const Coloring c = coloring_via_divisibility(g, opts);
        out.checks["colors"] = c.count();
        out.checks["proper"] = c.proper(g);
        out.violated = !c.proper(g) || c.count() > bound;
        if (out.violated) out.witness.push_back(c.colors);
      } catch (const Error& e) {
        if (e.code() != Errc::precondition_violated) throw;
        out.checks["colors"] = nullptr;
        out.violated = true;
      }
    }
  } else if (name == "torch-c3") {
    out.member = clique_number(g) <= 2 && !find_odd_torch(g);
    if (out.member) {
      const auto c = is_k_colorable(g, 3);
      out.checks["colorable3"] = c.has_value();
      out.violated = !c;
    }
  } else if (name == "mnwd-search") {
    static const ClassSpec cls = parsed("bull");
    out.member = is_class_member(g, cls).member && clique_number(g) >= 3;
    if (out.member) {
      const bool mnpd = certify_mnpd(g, opts);
      out.checks["mnpd"] = mnpd;
      out.violated = mnpd;
      if (g.order() <= spec.weighted_max_n) {
        const bool mnwd = certify_mnwd_bounded(g, spec.wmax, opts);
        out.checks["mnwd_bounded"] = mnwd;
        out.semi = true;
        out.violated = out.violated || mnwd;
      }
    }
  } else if (name == "pxx-classes") {
    static const std::array<std::pair<const char*, ClassSpec>, 3> classes{{
        {"bull,P11,C4", parsed("bull,P11,C4")},
        {"bull,P14,C5,C4", parsed("bull,P14,C5,C4")},
        {"bull,P17,C6,C5,C4", parsed("bull,P17,C6,C5,C4")},
    }};
    json in = json::array();
    for (const auto& [label, cls] : classes)
      if (is_class_member(g, cls).member) in.push_back(label);
    out.member = !in.empty();
    if (out.member) {
      out.checks["classes"] = in;
      const auto pd = is_perfectly_divisible(g, opts);
      out.checks["pd"] = pd.divisible;
      if (!pd.divisible) {
        out.violated = true;
        out.witness.push_back(members_of(*pd.failing_subgraph));
      }
    }
  }
  return out;
}

long millis_since(std::chrono::steady_clock::time_point start) {
  return static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
}

std::vector<Graph> campaign_source(const CampaignSpec& spec) {
  std::vector<Graph> graphs;
  for (int n = 1; n <= spec.max_n; ++n) {
    const int cap = std::max(n, kDefaultCanonicalCap);
    auto level = triangle_free_source(spec.name)
                     ? enumerate_hereditary(n, [](const Graph& h) { return clique_number(h) <= 2; }, cap)
                     : enumerate_nonisomorphic(n, cap);
    graphs.insert(graphs.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  if (spec.input) {
    auto extra = load_corpus(*spec.input);
    graphs.insert(graphs.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  }
  return graphs;
}

}  // namespace

std::span<const std::string_view> campaign_names() { return kCampaigns; }

std::string resolve_campaign(std::string_view name) {
  for (std::size_t i = 0; i < kCampaigns.size(); ++i) {
    if (name == kCampaigns[i]) return std::string(name);
    if (name == "C" + std::to_string(i + 1) || name == "c" + std::to_string(i + 1)) return std::string(kCampaigns[i]);
  }
  throw Error(Errc::invalid_argument, "unknown campaign '" + std::string(name) + "'");
}

void validate(const CampaignSpec& spec) {
  resolve_campaign(spec.name);
  if (spec.max_n < 0 || spec.max_n > kMaxOrder) throw Error(Errc::invalid_argument, "max_n must be in 0..62");
  if (spec.wmax < 1) throw Error(Errc::invalid_argument, "wmax must be >= 1");
  if (spec.jobs < 1) throw Error(Errc::invalid_argument, "jobs must be >= 1");
  if (spec.weighted_max_n < 0) throw Error(Errc::invalid_argument, "weighted_max_n must be >= 0");
  if (spec.max_n > kMaxEnumerationOrder) {
    throw Error(Errc::budget_exceeded,
                "builtin enumeration stops at n = " + std::to_string(kMaxEnumerationOrder));
  }
}

std::size_t CampaignReport::members() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.member; }));
}

std::size_t CampaignReport::counterexamples() const { return counterexample_indices().size(); }

std::vector<std::size_t> CampaignReport::counterexample_indices() const {
  std::vector<std::size_t> out;
  for (const auto& r : records)
    if (r.verdict == "counterexample") out.push_back(r.index);
  return out;
}

CampaignRecord evaluate_graph(const CampaignSpec& spec, const Graph& g, std::size_t index,
                              const DivisibilityOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CampaignSpec resolved = spec;
  resolved.name = resolve_campaign(spec.name);
  Outcome out = run_checks(resolved, g, opts);
  CampaignRecord r;
  r.campaign = resolved.name;
  r.index = index;
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.member = out.member;
  r.verdict = !out.member ? "not-member" : out.violated ? "counterexample" : "consistent";
  r.checks = std::move(out.checks);
  r.witness = std::move(out.witness);
  r.semi = out.semi;
  r.millis = spec.timing ? millis_since(start) : 0;
  return r;
}

CampaignRecord recheck_record(const CampaignSpec& spec, const CampaignRecord& record) {
  CampaignSpec quiet = spec;
  quiet.timing = false;
  DivisibilityOptions opts;
  opts.memo = nullptr;
  return evaluate_graph(quiet, decode_graph6(record.graph6), record.index, opts);
}

CampaignReport run_campaign(const CampaignSpec& spec) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  CampaignReport report;
  report.spec = spec;
  report.spec.name = resolve_campaign(spec.name);
  const std::vector<Graph> graphs = campaign_source(report.spec);
  report.records.resize(graphs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      try {
        report.records[i] = evaluate_graph(report.spec, graphs[i], i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = graphs.size();
      }
    }
  };
  const int workers = std::min<int>(spec.jobs, std::max<int>(1, static_cast<int>(graphs.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  report.wall_millis = spec.timing ? millis_since(start) : 0;
  return report;
}

json to_json(const CampaignRecord& r) {
  json j;
  j["campaign"] = r.campaign;
  j["index"] = r.index;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["member"] = r.member;
  j["verdict"] = r.verdict;
  j["semi"] = r.semi;
  j["checks"] = r.checks;
  j["witness"] = r.witness;
  j["millis"] = r.millis;
  return j;
}

json summary_json(const CampaignReport& report) {
  const auto& s = report.spec;
  json j;
  j["summary"] = true;
  j["campaign"] = s.name;
  j["max_n"] = s.max_n;
  j["wmax"] = s.wmax;
  j["weighted_max_n"] = s.weighted_max_n;
  j["source"] = s.input ? "builtin-enumeration+file" : "builtin-enumeration";
  j["graphs"] = report.records.size();
  j["members"] = report.members();
  j["counterexamples"] = report.counterexamples();
  j["counterexample_indices"] = report.counterexample_indices();
  j["semi"] = std::any_of(report.records.begin(), report.records.end(), [](const auto& r) { return r.semi; });
  j["wall_millis"] = report.wall_millis;
  return j;
}

std::string render_report(const CampaignReport& report) {
  std::string out;
  for (const auto& r : report.records) out += to_json(r).dump() + "\n";
  out += summary_json(report).dump() + "\n";
  return out;
}

void emit_report(const CampaignReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write " + path);
  out << render_report(report);
  out.flush();
  if (!out) throw Error(Errc::io_error, "write failed on " + path);
}

}  // namespace pdiv
