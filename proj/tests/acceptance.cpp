// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Expected values come from the brute-force oracles in
// oracles.hpp, never from the library under test.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "pachner/complex.hpp"
#include "pachner/error.hpp"
#include "pachner/explore.hpp"
#include "pachner/generate.hpp"
#include "pachner/io.hpp"
#include "pachner/isomorphism.hpp"
#include "pachner/moves.hpp"
#include "pachner/random.hpp"
#include "pachner/shellings.hpp"
#include "pachner/stellar.hpp"
#include "pachner/trace.hpp"

using namespace pachner;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // Everything seed-dependent the criterion produced, for the determinism check.
  std::string transcript;
};

Complex cx(const std::vector<std::vector<Vertex>>& facets) { return Complex::from_facets(facets); }

std::vector<oracle::Set> to_sets(const Complex& c) {
  std::vector<oracle::Set> out;
  for (const auto& f : c.facets()) out.emplace_back(f.begin(), f.end());
  return out;
}

std::size_t jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// One uniformly random admissible move within the vertex budget.
MoveSite random_site(const Complex& c, Rng& rng, std::size_t budget) {
  auto sites = enumerate_moves(c);
  std::erase_if(sites, [&](const MoveSite& s) { return s.kind() == c.dim() && c.num_vertices() + 1 > budget; });
  return sites.at(rng.index(sites.size()));
}

// ---- 1 ---------------------------------------------------------------------

Outcome taxonomy() {
  Outcome o;
  const std::vector<std::vector<Complex>> catalog{
      {gen::sphere(1), gen::suspension(gen::sphere(0)), gen::simplex(1)},
      {gen::sphere(2), gen::suspension(gen::sphere(1)), gen::octahedron(), gen::rp2_6(), gen::simplex(2)},
      {gen::sphere(3), gen::suspension(gen::sphere(2)), gen::join(gen::sphere(1), gen::relabel_shift(gen::sphere(1), 3)),
       gen::simplex(3)},
  };
  for (int d = 1; d <= 3; ++d) {
    std::set<int> kinds;
    for (const auto& c : catalog[static_cast<std::size_t>(d - 1)])
      for (const auto& s : enumerate_moves(c)) {
        kinds.insert(s.kind());
        if (s.a.size() + s.b.size() != static_cast<std::size_t>(d + 2)) o.pass = false;
      }
    std::set<int> expected;
    for (int k = 0; k <= d; ++k) expected.insert(k);
    if (kinds != expected) o.pass = false;
    o.detail += "d=" + std::to_string(d) + " kinds=" + std::to_string(kinds.size()) + " ";
  }
  const auto s2 = gen::sphere(2);
  const auto sites = enumerate_moves(s2);
  std::vector<oracle::Move> got;
  for (const auto& s : sites) got.push_back({{s.a.begin(), s.a.end()}, {s.b.begin(), s.b.end()}});
  const auto truth = oracle::moves(to_sets(s2));
  std::size_t truth_kind2 = 0;
  for (const auto& m : truth) truth_kind2 += m.a.size() == 3;
  if (got != truth || truth.size() != 4 || truth_kind2 != 4) o.pass = false;
  o.detail += "bd-tetrahedron sites=" + std::to_string(sites.size()) + " (oracle " + std::to_string(truth.size()) + ")";
  return o;
}

// ---- 2 ---------------------------------------------------------------------

Outcome figures() {
  Outcome o;
  const bool a = apply_move(cx({{1, 2, 3}, {1, 2, 4}}), {Simplex{1, 2}, Simplex{3, 4}}) == cx({{1, 3, 4}, {2, 3, 4}});
  const bool b = apply_move(cx({{1, 2, 3}}), {Simplex{1, 2, 3}, Simplex{4}}) == cx({{1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  const bool c = apply_move(cx({{1, 2, 3, 4}, {1, 2, 3, 5}}), {Simplex{1, 2, 3}, Simplex{4, 5}}) ==
                 cx({{1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}});
  o.pass = a && b && c;
  o.detail = std::string("2-2 ") + (a ? "ok" : "wrong") + ", 1-3 " + (b ? "ok" : "wrong") + ", 2-3 " + (c ? "ok" : "wrong");
  return o;
}

// ---- 3 ---------------------------------------------------------------------

Outcome euler_invariance() {
  Outcome o;
  for (int d = 2; d <= 4; ++d) {
    Complex c = gen::sphere(d);
    const auto chi = euler_characteristic(c);
    Rng rng(derive_seed(3, static_cast<std::uint64_t>(d)));
    const std::size_t budget = static_cast<std::size_t>(d) + 10;
    std::size_t bad = 0;
    Trace trace{"sphere" + std::to_string(d), 3, {}, {}};
    for (int step = 0; step < 1000; ++step) {
      const auto site = random_site(c, rng, budget);
      c = apply_move(c, site);
      trace.steps.push_back({site, false});
      if (euler_characteristic(c) != chi) ++bad;
    }
    trace.end_digest = io::digest_hex(c);
    if (bad) o.pass = false;
    o.detail += "d=" + std::to_string(d) + " chi=" + std::to_string(chi) + " violations=" + std::to_string(bad) + " ";
    o.transcript += format_trace(trace);
  }
  return o;
}

// ---- 4 ---------------------------------------------------------------------

Outcome round_trip() {
  Outcome o;
  for (int d = 2; d <= 3; ++d) {
    Rng rng(derive_seed(4, static_cast<std::uint64_t>(d)));
    std::size_t pairs = 0, failures = 0;
    for (std::uint64_t sample = 0; pairs < 1000; ++sample) {
      const auto c = random_walk(gen::sphere(d), 10 + rng.index(30), 12, derive_seed(40 + d, sample)).end;
      for (int k = 0; k < 10; ++k, ++pairs) {
        const auto site = random_site(c, rng, 1000);
        const auto there = apply_move(c, site);
        const auto back = apply_move(there, inverse_site(site));
        if (back != c) ++failures;
        o.transcript += format_site(site) + " " + io::digest_hex(there) + "\n";
      }
    }
    if (failures) o.pass = false;
    o.detail += "d=" + std::to_string(d) + " pairs=" + std::to_string(pairs) + " failures=" + std::to_string(failures) + " ";
  }
  return o;
}

// ---- 5 ---------------------------------------------------------------------

oracle::Surface canonical_surface(const Complex& c) {
  std::map<Vertex, int> label;
  for (Vertex v : c.vertices()) label.emplace(v, static_cast<int>(label.size()));
  oracle::Surface s;
  for (const auto& f : c.facets()) {
    oracle::Tri t{label[f[0]], label[f[1]], label[f[2]]};
    std::sort(t.begin(), t.end());
    s.push_back(t);
  }
  std::sort(s.begin(), s.end());
  return oracle::detail::canonical(s, static_cast<int>(label.size()));
}

Outcome flip_graph_witness() {
  Outcome o;
  const auto g = build_flip_graph(gen::sphere(2), 7, {jobs()});
  std::map<int, std::set<oracle::Surface>> found;
  bool nodes_ok = true;
  for (const auto& n : g.nodes) {
    found[static_cast<int>(n.num_vertices())].insert(canonical_surface(n));
    nodes_ok = nodes_ok && is_closed_pseudomanifold(n) && euler_characteristic(n) == 2 && is_combinatorial_manifold(n);
  }
  std::string counts, oracle_counts;
  bool classes_ok = true;
  std::size_t oracle_total = 0;
  for (int n = 4; n <= 7; ++n) {
    const auto truth = oracle::sphere_classes(n);
    oracle_total += truth.size();
    classes_ok = classes_ok && found[n] == truth;
    counts += std::to_string(found[n].size()) + (n < 7 ? "+" : "");
    oracle_counts += std::to_string(truth.size()) + (n < 7 ? "+" : "");
  }
  const bool connected = g.connected();
  o.pass = g.nodes.size() == 9 && oracle_total == 9 && classes_ok && nodes_ok && connected;
  o.detail = "nodes=" + std::to_string(g.nodes.size()) + " (" + counts + "), oracle " + oracle_counts +
             ", edges=" + std::to_string(g.edges.size()) + ", connected=" + (connected ? "yes" : "no") +
             ", nodes closed 2-manifolds with chi=2: " + (nodes_ok ? "yes" : "no");
  o.transcript = format_adjacency(g);
  for (const auto& n : g.nodes) o.transcript += io::format_facet_list(n) + "--\n";
  return o;
}

// ---- 6 ---------------------------------------------------------------------

Outcome simplification() {
  Outcome o;
  SimplifyOptions opts;
  opts.jobs = jobs();
  std::size_t reduced2 = 0, reduced3 = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto c = random_walk(gen::sphere(2), 30, 12, derive_seed(60, seed)).end;
    const auto r = simplify(c, seed, opts);
    reduced2 += r.verdict == Verdict::Reduced && are_isomorphic(r.final_complex, gen::sphere(2)).has_value();
    o.transcript += format_report(r);
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto c = random_walk(gen::sphere(3), 20, 10, derive_seed(61, seed)).end;
    const auto r = simplify(c, seed, opts);
    reduced3 += r.verdict == Verdict::Reduced && are_isomorphic(r.final_complex, gen::sphere(3)).has_value();
    o.transcript += format_report(r);
  }
  o.pass = reduced2 == 20 && reduced3 >= 18;
  o.detail = "d=2 REDUCED " + std::to_string(reduced2) + "/20 (need 20), d=3 REDUCED " + std::to_string(reduced3) +
             "/20 (need >= 18)";
  return o;
}

// ---- 7 ---------------------------------------------------------------------

Outcome shelling_law() {
  Outcome o;
  Rng rng(7);
  Complex c = gen::simplex(3);
  std::size_t shellings = 0, inverse = 0, failures = 0;
  for (int step = 0; step < 500; ++step) {
    // drift: grow while small, then wander around ~12 facets
    const bool grow = c.num_facets() == 1 || rng.chance(c.num_facets() < 12 ? 0.7 : 0.4);
    std::optional<ShellingResult> r;
    if (!grow) {
      const auto sites = enumerate_shellings(c).sites;
      if (!sites.empty()) {
        const auto& site = sites[rng.index(sites.size())];
        r = apply_shelling(c, site);
        ++shellings;
        o.transcript += format_shelling(site) + "\n";
      }
    }
    while (!r) {
      const auto bd = *boundary_complex(c);
      const auto& ridge = bd.facets()[rng.index(bd.num_facets())];
      const auto vs = bd.vertices();
      const Vertex v = rng.chance(0.5) ? c.fresh_vertex() : vs[rng.index(vs.size())];
      if (ridge.contains(v)) continue;
      try {
        r = apply_inverse_shelling(c, ridge.with(v));
        ++inverse;
        o.transcript += "+ " + ridge.with(v).to_string() + "\n";
      } catch (const Error&) {
      }
    }
    if (!r->witness.verify()) ++failures;
    c = r->complex;
  }
  o.pass = failures == 0 && shellings > 0 && inverse > 0 && is_combinatorial_manifold(c);
  o.detail = "steps=500 shellings=" + std::to_string(shellings) + " inverse=" + std::to_string(inverse) +
             " witness failures=" + std::to_string(failures);
  return o;
}

// ---- 8 ---------------------------------------------------------------------

Outcome stellar() {
  Outcome o;
  for (int d = 2; d <= 3; ++d) {
    Rng rng(derive_seed(8, static_cast<std::uint64_t>(d)));
    std::size_t checked = 0, failures = 0, degenerate = 0;
    for (std::uint64_t sample = 0; checked < 500; ++sample) {
      const auto c = random_walk(gen::sphere(d), 5 + rng.index(30), 12, derive_seed(80 + d, sample)).end;
      for (int k = 0; k < 5; ++k, ++checked) {
        const auto site = random_site(c, rng, 1000);
        const auto f = factor_via_stellar(c, site);
        degenerate += f.degenerate();
        if (compose(c, f) != apply_move(c, site)) ++failures;
      }
    }
    if (failures) o.pass = false;
    o.detail += "d=" + std::to_string(d) + " sites=" + std::to_string(checked) + " failures=" + std::to_string(failures) +
                " (single-operation " + std::to_string(degenerate) + ") ";
  }
  return o;
}

// ---- 9 ---------------------------------------------------------------------

Outcome rp2_control() {
  Outcome o;
  Complex c = gen::rp2_6();
  const auto sets = to_sets(c);
  // oracle: every edge in exactly two triangles, every vertex link one circle
  std::map<oracle::Set, int> edge_deg;
  for (const auto& t : sets)
    for (std::size_t i = 0; i < 3; ++i) {
      oracle::Set e = t;
      e.erase(e.begin() + static_cast<long>(i));
      ++edge_deg[e];
    }
  bool edges_ok = true;
  for (const auto& [e, n] : edge_deg) edges_ok = edges_ok && n == 2;
  bool links_ok = true;
  for (unsigned v = 1; v <= 6; ++v) {
    // a circle: every link vertex has degree two and the edges form one cycle
    std::map<unsigned, std::vector<unsigned>> adj;
    for (const auto& s : oracle::link(sets, {v}))
      if (s.size() == 2) {
        adj[s[0]].push_back(s[1]);
        adj[s[1]].push_back(s[0]);
      }
    bool circle = !adj.empty();
    for (const auto& [x, nb] : adj) circle = circle && nb.size() == 2;
    if (circle) {
      std::size_t len = 0;
      unsigned prev = 0, cur = adj.begin()->first;
      do {
        const unsigned next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
        prev = cur;
        cur = next;
        ++len;
      } while (cur != adj.begin()->first && len <= adj.size());
      circle = len == adj.size();
    }
    links_ok = links_ok && circle;
  }
  const auto chi0 = oracle::euler(sets);
  const bool orient0 = oracle::orientable(sets);
  bool ok = edges_ok && links_ok && chi0 == 1 && !orient0 && euler_characteristic(c) == 1 && !is_orientable(c);

  Rng rng(9);
  std::size_t drift = 0;
  for (int step = 0; step < 200; ++step) {
    c = apply_move(c, random_site(c, rng, 12));
    if (euler_characteristic(c) != 1 || is_orientable(c)) ++drift;
  }
  const auto r = simplify(gen::rp2_6(), 9, {.jobs = jobs()});
  ok = ok && drift == 0 && r.verdict == Verdict::Unknown;
  o.pass = ok;
  o.detail = "oracle chi=" + std::to_string(chi0) + " orientable=" + (orient0 ? "yes" : "no") +
             ", library agrees, 200 moves drift=" + std::to_string(drift) + ", simplify=" + to_string(r.verdict);
  return o;
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
  double budget_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "move taxonomy", taxonomy, 1},
      {2, "worked examples", figures, 1},
      {3, "Euler characteristic invariance", euler_invariance, 30},
      {4, "move round trip", round_trip, 30},
      {5, "2-sphere flip graph at budget 7", flip_graph_witness, 60},
      {6, "simplification heuristic", simplification, 120},
      {7, "shelling boundary law", shelling_law, 60},
      {8, "stellar factorization", stellar, 30},
      {9, "RP2 control", rp2_control, 30},
  };

  bool all = true;
  std::map<int, std::string> transcripts;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    all = all && pass;
    transcripts[c.id] = o.transcript;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << o.detail << " (" << secs << " s, limit "
         << c.budget_seconds << " s)";
    std::cout << line.str() << std::endl;
  }

  // 10: criteria 3-7 again with the same seeds, compared byte for byte
  {
    const auto t0 = std::chrono::steady_clock::now();
    std::string differing;
    for (const auto& c : criteria) {
      if (c.id < 3 || c.id > 7) continue;
      std::string again;
      try {
        again = c.run().transcript;
      } catch (const std::exception&) {
      }
      if (again.empty() || again != transcripts[c.id]) differing += " " + std::to_string(c.id);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = differing.empty();
    all = all && pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " [10] determinism: criteria 3-7 rerun, "
         << (pass ? "traces and reports byte-identical" : "differences in" + differing) << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
