#include "pachner/explore.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pachner/error.hpp"
#include "pachner/generate.hpp"
#include "pachner/io.hpp"
#include "pachner/random.hpp"

namespace pachner {

namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const std::size_t workers = std::min(jobs, n);
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

bool within_budget(const Complex& c, const MoveSite& s, std::size_t budget) {
  return s.kind() != c.dim() || c.num_vertices() + 1 <= budget;
}

}  // namespace

// ---- random walks ----------------------------------------------------------

WalkResult random_walk(const Complex& c, std::size_t steps, std::size_t vertex_budget, std::uint64_t seed) {
  if (vertex_budget < c.num_vertices())
    throw Error(ErrorCode::BudgetTooSmall, "vertex budget " + std::to_string(vertex_budget) + " below current " +
                                               std::to_string(c.num_vertices()));
  Rng rng(seed);
  Trace trace;
  trace.seed = seed;
  Complex current = c;
  for (std::size_t i = 0; i < steps; ++i) {
    auto sites = enumerate_moves(current);
    std::erase_if(sites, [&](const MoveSite& s) { return !within_budget(current, s, vertex_budget); });
    if (sites.empty())
      throw Error(ErrorCode::NoAdmissibleMove, "no admissible move within budget at step " + std::to_string(i + 1));
    const MoveSite& pick = sites[rng.index(sites.size())];
    current = apply_move(current, pick);
    trace.steps.push_back({pick, false});
  }
  trace.end_digest = io::digest_hex(current);
  return {std::move(current), std::move(trace)};
}

// ---- flip graphs -----------------------------------------------------------

CanonicalKey canonical_key(const Complex& c) {
  CanonicalKey key;
  key.f_vector = f_vector(c).counts;
  std::map<Vertex, std::size_t> degree;
  for (const auto& e : c.faces(1)) {
    ++degree[e[0]];
    ++degree[e[1]];
    key.edge_link_sizes.push_back(c.facets_containing(e).size());
  }
  for (Vertex v : c.vertices()) key.vertex_degrees.push_back(degree[v]);
  std::sort(key.vertex_degrees.begin(), key.vertex_degrees.end());
  std::sort(key.edge_link_sizes.begin(), key.edge_link_sizes.end());
  return key;
}

std::optional<std::pair<std::size_t, IsoMap>> FlipGraph::locate(const Complex& c) const {
  const CanonicalKey key = canonical_key(c);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (canonical_key(nodes[i]) != key) continue;
    if (auto iso = are_isomorphic(c, nodes[i])) return std::make_pair(i, std::move(*iso));
  }
  return std::nullopt;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> FlipGraph::adjacency() const {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].from].emplace_back(edges[e].to, e);
    adj[edges[e].to].emplace_back(edges[e].from, e);
  }
  return adj;
}

bool FlipGraph::connected() const {
  if (nodes.empty()) return true;
  const auto adj = adjacency();
  std::vector<char> seen(nodes.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == nodes.size();
}

FlipGraph build_flip_graph(const Complex& c0, std::size_t vertex_budget, FlipGraphOptions options) {
  if (!is_closed_pseudomanifold(c0))
    throw Error(ErrorCode::NotClosedPseudomanifold, "flip graphs start from a closed pseudomanifold");
  if (vertex_budget < c0.num_vertices())
    throw Error(ErrorCode::BudgetTooSmall, "vertex budget " + std::to_string(vertex_budget) + " below " +
                                               std::to_string(c0.num_vertices()) + " vertices of the seed");
  FlipGraph g;
  g.vertex_budget = vertex_budget;
  g.nodes.push_back(c0);
  std::multimap<CanonicalKey, std::size_t> buckets;
  buckets.emplace(canonical_key(c0), 0);
  std::set<std::pair<std::size_t, std::size_t>> linked;

  struct Candidate {
    MoveSite site;
    Complex result;
    CanonicalKey key;
  };

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    // Expansion is independent per node; merging is sequential in frontier
    // order so node numbering does not depend on the job count.
    std::vector<std::vector<Candidate>> expanded(frontier.size());
    parallel_for(frontier.size(), options.jobs, [&](std::size_t i) {
      const Complex& rep = g.nodes[frontier[i]];
      for (const auto& site : enumerate_moves(rep)) {
        if (!within_budget(rep, site, vertex_budget)) continue;
        Complex result = apply_move(rep, site);
        CanonicalKey key = canonical_key(result);
        expanded[i].push_back({site, std::move(result), std::move(key)});
      }
    });

    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const std::size_t from = frontier[i];
      for (auto& cand : expanded[i]) {
        std::optional<std::pair<std::size_t, IsoMap>> match;
        auto [lo, hi] = buckets.equal_range(cand.key);
        for (auto it = lo; it != hi && !match; ++it)
          if (auto iso = are_isomorphic(cand.result, g.nodes[it->second])) match.emplace(it->second, std::move(*iso));
        if (!match) {
          const std::size_t id = g.nodes.size();
          std::map<Vertex, Vertex> identity;
          for (Vertex v : cand.result.vertices()) identity.emplace(v, v);
          g.nodes.push_back(cand.result);
          buckets.emplace(cand.key, id);
          next.push_back(id);
          match.emplace(id, IsoMap(std::move(identity)));
        }
        const std::size_t to = match->first;
        if (to == from) continue;
        if (!linked.insert(std::minmax(from, to)).second) continue;
        g.edges.push_back({from, to, cand.site, std::move(match->second)});
      }
    }
    frontier = std::move(next);
  }
  return g;
}

std::string format_adjacency(const FlipGraph& g) {
  const int d = g.nodes.empty() ? 0 : g.nodes.front().dim();
  const auto adj = g.adjacency();
  std::ostringstream os;
  for (std::size_t u = 0; u < g.nodes.size(); ++u) {
    os << u << ':';
    for (const auto& [w, e] : adj[u]) {
      const int kind = g.edges[e].from == u ? g.edges[e].site.kind() : d - g.edges[e].site.kind();
      os << ' ' << w << '[' << kind << ']';
    }
    os << '\n';
  }
  return os.str();
}

void export_flip_graph(const FlipGraph& g, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir / "nodes", ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + (dir / "nodes").string() + ": " + ec.message());
  io::write_file(dir / "graph.txt", format_adjacency(g));
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    io::save(g.nodes[i], dir / "nodes" / (std::to_string(i) + ".txt"));
}

namespace {

MoveSite relabel(const MoveSite& s, const IsoMap& m) { return {m(s.a), m(s.b)}; }

// Maps a site on a representative back onto the concrete complex x, where
// to_rep carries x onto that representative. Vertices outside the
// representative are new and get x's fresh label.
MoveSite pull_back(const MoveSite& s, const IsoMap& to_rep, const Complex& rep, const Complex& x) {
  const IsoMap back = to_rep.inverse();
  const auto pull = [&](const Simplex& simplex) {
    std::vector<Vertex> out;
    Vertex fresh = x.fresh_vertex();
    for (Vertex v : simplex) out.push_back(rep.has_vertex(v) ? back(v) : fresh++);
    return Simplex::from_vertices(std::move(out));
  };
  return {pull(s.a), pull(s.b)};
}

}  // namespace

std::optional<Certificate> connectivity_certificate(const FlipGraph& g, const Complex& c1, const Complex& c2) {
  auto start = g.locate(c1);
  if (!start) throw Error(ErrorCode::NodeNotInGraph, "first complex is not isomorphic to any node");
  auto goal = g.locate(c2);
  if (!goal) throw Error(ErrorCode::NodeNotInGraph, "second complex is not isomorphic to any node");

  const auto adj = g.adjacency();
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(g.nodes.size());
  std::vector<char> seen(g.nodes.size(), 0);
  std::deque<std::size_t> queue{start->first};
  seen[start->first] = 1;
  while (!queue.empty() && !seen[goal->first]) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& [w, e] : adj[u]) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = std::make_pair(u, e);
      queue.push_back(w);
    }
  }
  if (!seen[goal->first]) return std::nullopt;

  std::vector<std::pair<std::size_t, std::size_t>> path;  // (node we leave, edge)
  for (std::size_t v = goal->first; v != start->first; v = parent[v]->first) path.push_back(*parent[v]);
  std::reverse(path.begin(), path.end());

  Certificate cert;
  Complex current = c1;
  IsoMap to_rep = start->second;
  for (const auto& [u, e] : path) {
    const FlipEdge& edge = g.edges[e];
    const std::size_t w = edge.from == u ? edge.to : edge.from;
    const MoveSite on_rep = edge.from == u ? edge.site : relabel(inverse_site(edge.site), edge.to_rep);
    const MoveSite concrete = pull_back(on_rep, to_rep, g.nodes[u], current);
    current = apply_move(current, concrete);
    cert.trace.steps.push_back({concrete, false});
    auto iso = are_isomorphic(current, g.nodes[w]);
    if (!iso) throw Error(ErrorCode::TraceDivergence, "flip graph edge does not reach its endpoint class");
    to_rep = std::move(*iso);
  }
  cert.trace.end_digest = io::digest_hex(current);
  cert.relabel = to_rep.then(goal->second.inverse());
  return cert;
}

bool verify_certificate(const Complex& c1, const Complex& c2, const Certificate& cert) {
  const auto report = verify_trace(c1, cert.trace);
  if (!report.exact_match()) return false;
  return cert.relabel(*report.end) == c2;
}

// ---- simplification --------------------------------------------------------

namespace {

using ReductionKey = std::pair<std::size_t, std::size_t>;  // (f_0, f_d)

ReductionKey key_of(const Complex& c) { return {c.num_vertices(), c.num_facets()}; }

ReductionKey key_after(const Complex& c, const MoveSite& s) {
  const int d = c.dim();
  const int k = s.kind();
  std::size_t vertices = c.num_vertices();
  if (k == 0) --vertices;
  if (k == d) ++vertices;
  const auto facets = static_cast<std::size_t>(static_cast<long long>(c.num_facets()) + facet_delta(k, d));
  return {vertices, facets};
}

bool is_minimal_sphere(const Complex& c) {
  const auto n = static_cast<std::size_t>(c.dim() + 2);
  return c.num_vertices() == n && c.num_facets() == n && are_isomorphic(c, gen::sphere(c.dim())).has_value();
}

struct RunResult {
  bool reduced = false;
  Complex end;
  Trace trace;
  std::size_t steps = 0;
};

RunResult descend(const Complex& c, std::uint64_t seed, const SimplifyOptions& options) {
  Rng rng(seed);
  RunResult run{false, c, {}, 0};
  run.trace.seed = seed;
  double acceptance = options.initial_acceptance;
  const std::size_t period = std::max<std::size_t>(1, options.max_steps / 5);
  std::size_t accepted = 0;
  std::optional<MoveSite> undo;  // inverse of the last accepted move

  for (; run.steps < options.max_steps; ++run.steps) {
    if (is_minimal_sphere(run.end)) {
      run.reduced = true;
      break;
    }
    const auto sites = enumerate_moves(run.end);
    const ReductionKey here = key_of(run.end);

    // Best resulting key among improving moves, else among the rest.
    std::vector<const MoveSite*> improving, other;
    for (const auto& s : sites) (key_after(run.end, s) < here ? improving : other).push_back(&s);
    const bool greedy = !improving.empty();
    auto& pool = greedy ? improving : other;
    if (pool.empty()) break;
    if (pool.size() > 1 && undo)
      std::erase_if(pool, [&](const MoveSite* s) { return *s == *undo; });
    ReductionKey best = key_after(run.end, *pool.front());
    for (const auto* s : pool) best = std::min(best, key_after(run.end, *s));
    std::erase_if(pool, [&](const MoveSite* s) { return key_after(run.end, *s) != best; });

    if (!greedy && !rng.chance(acceptance)) continue;
    const MoveSite pick = *pool[rng.index(pool.size())];
    run.end = apply_move(run.end, pick);
    run.trace.steps.push_back({pick, !greedy});
    undo = inverse_site(pick);
    if (++accepted % period == 0) acceptance /= 2;
  }
  if (!run.reduced && is_minimal_sphere(run.end)) run.reduced = true;
  run.trace.end_digest = io::digest_hex(run.end);
  return run;
}

}  // namespace

SearchReport simplify(const Complex& c, std::uint64_t seed, SimplifyOptions options) {
  if (c.dim() > 3)
    throw Error(ErrorCode::UnsupportedDimension, "simplification supports d <= 3, got d = " + std::to_string(c.dim()));
  if (!is_closed_pseudomanifold(c))
    throw Error(ErrorCode::NotClosedPseudomanifold, "simplification needs a closed pseudomanifold");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t restarts = std::max<std::size_t>(1, options.restarts);
  const std::size_t batch = std::max<std::size_t>(1, options.jobs);

  std::vector<RunResult> runs;
  std::size_t best = 0;
  bool reduced = false;
  std::size_t total_steps = 0;
  // Restarts run in batches; the lowest-index success wins, which matches
  // the sequential order regardless of the job count.
  for (std::size_t first = 0; first < restarts && !reduced; first += batch) {
    const std::size_t n = std::min(batch, restarts - first);
    std::vector<std::optional<RunResult>> fresh(n);
    parallel_for(n, options.jobs, [&](std::size_t i) { fresh[i] = descend(c, derive_seed(seed, first + i), options); });
    for (auto& run : fresh) {
      total_steps += run->steps;
      runs.push_back(std::move(*run));
      const RunResult& latest = runs.back();
      if (latest.reduced || (runs.size() > 1 && key_of(latest.end) < key_of(runs[best].end)))
        best = runs.size() - 1;
      if (latest.reduced) {
        reduced = true;
        break;
      }
    }
  }
  const RunResult& chosen = runs[best];

  SearchReport report{chosen.reduced ? Verdict::Reduced : Verdict::Unknown, chosen.end, chosen.trace, {}};
  report.stats.moves_by_kind.assign(static_cast<std::size_t>(c.dim() + 1), 0);
  for (const auto& step : report.trace.steps) {
    ++report.stats.moves_by_kind[static_cast<std::size_t>(std::get<MoveSite>(step.action).kind())];
    if (step.annealing) ++report.stats.annealing_moves;
  }
  report.stats.steps = total_steps;
  report.stats.restarts_used = runs.size();
  report.stats.seed = seed;
  report.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string to_string(Verdict v) { return v == Verdict::Reduced ? "REDUCED" : "UNKNOWN"; }

std::string format_report(const SearchReport& report, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["verdict"] = to_string(report.verdict);
  doc["seed"] = report.stats.seed;
  nlohmann::ordered_json stats;
  stats["moves_by_kind"] = report.stats.moves_by_kind;
  stats["annealing_moves"] = report.stats.annealing_moves;
  stats["steps"] = report.stats.steps;
  stats["restarts_used"] = report.stats.restarts_used;
  if (include_timing) stats["wall_seconds"] = report.stats.wall_seconds;
  doc["stats"] = std::move(stats);
  doc["final"] = nlohmann::ordered_json::parse(io::format_structured(report.final_complex));
  doc["trace"] = format_trace(report.trace);
  return doc.dump(2) + "\n";
}

}  // namespace pachner
