#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pachner/complex.hpp"
#include "pachner/isomorphism.hpp"
#include "pachner/moves.hpp"
#include "pachner/trace.hpp"

namespace pachner {

// ---- random walks ----------------------------------------------------------

struct WalkResult {
  Complex end;
  Trace trace;
};

// `steps` uniformly random admissible moves, excluding facet subdivisions that
// would push the vertex count past `vertex_budget`.
WalkResult random_walk(const Complex& c, std::size_t steps, std::size_t vertex_budget, std::uint64_t seed);

inline std::size_t default_vertex_budget(const Complex& c) { return c.num_vertices() + 3; }

// ---- flip graphs -----------------------------------------------------------

// Isomorphism-invariant prefilter: f-vector, sorted vertex degrees, sorted
// edge-link sizes.
struct CanonicalKey {
  std::vector<std::size_t> f_vector;
  std::vector<std::size_t> vertex_degrees;
  std::vector<std::size_t> edge_link_sizes;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const Complex& c);

struct FlipEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  // Admissible on nodes[from].
  MoveSite site;
  // Carries apply_move(nodes[from], site) onto nodes[to].
  IsoMap to_rep;
};

struct FlipGraph {
  std::vector<Complex> nodes;
  std::vector<FlipEdge> edges;
  std::size_t vertex_budget = 0;

  // Node index and an isomorphism c -> nodes[i], if c's class is present.
  std::optional<std::pair<std::size_t, IsoMap>> locate(const Complex& c) const;
  // Per node: (neighbour, edge index), in edge order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency() const;
  bool connected() const;
};

struct FlipGraphOptions {
  std::size_t jobs = 1;
};

// Breadth-first closure of c0 under moves that stay within the vertex budget,
// one node per isomorphism class. Exhaustive within the budget.
FlipGraph build_flip_graph(const Complex& c0, std::size_t vertex_budget, FlipGraphOptions options = {});

// `node_id: neighbour[kind] ...`, kind being the move taken from node_id.
std::string format_adjacency(const FlipGraph& g);
// Writes graph.txt and nodes/<id>.txt under `dir`.
void export_flip_graph(const FlipGraph& g, const std::filesystem::path& dir);

// A move sequence from c1 whose end, relabelled by `relabel`, equals c2.
struct Certificate {
  Trace trace;
  IsoMap relabel;
};

// Shortest path in g between the classes of c1 and c2, made concrete.
std::optional<Certificate> connectivity_certificate(const FlipGraph& g, const Complex& c1, const Complex& c2);
bool verify_certificate(const Complex& c1, const Complex& c2, const Certificate& cert);

// ---- simplification --------------------------------------------------------

struct SimplifyOptions {
  std::size_t max_steps = 2000;
  std::size_t restarts = 8;
  // Acceptance probability for non-improving moves; halves every max_steps/5
  // accepted moves.
  double initial_acceptance = 0.3;
  std::size_t jobs = 1;
};

enum class Verdict { Reduced, Unknown };

struct SearchStats {
  std::vector<std::size_t> moves_by_kind;
  std::size_t annealing_moves = 0;
  std::size_t steps = 0;
  std::size_t restarts_used = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
};

struct SearchReport {
  Verdict verdict = Verdict::Unknown;
  Complex final_complex;
  Trace trace;
  SearchStats stats;
};

// Greedy descent on (f_0, f_d) with annealing; REDUCED once the complex is
// the boundary of a (d+1)-simplex. d <= 3.
SearchReport simplify(const Complex& c, std::uint64_t seed, SimplifyOptions options = {});

std::string to_string(Verdict v);
// Timing is excluded unless asked for, so reports are reproducible byte for byte.
std::string format_report(const SearchReport& report, bool include_timing = false);

}  // namespace pachner
