#include "pachner/cli.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pachner/error.hpp"
#include "pachner/explore.hpp"
#include "pachner/generate.hpp"
#include "pachner/io.hpp"
#include "pachner/moves.hpp"
#include "pachner/shellings.hpp"
#include "pachner/trace.hpp"

namespace pachner::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Result of a verb: its exit code. Output goes through the streams.
using Verb = std::function<int()>;

Simplex parse_simplex_arg(const std::string& text, const char* flag) {
  std::istringstream in(text);
  std::vector<Vertex> vs;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(token, &used);
      if (used != token.size() || v > UINT32_MAX) throw std::invalid_argument(token);
      vs.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": '" + token + "' is not a vertex label");
    }
  }
  if (vs.empty()) throw UsageError(std::string(flag) + ": expected at least one vertex label");
  return Simplex::from_vertices(std::move(vs));
}

void emit_complex(const Complex& c, const std::string& out_path, const std::string& format, std::ostream& out) {
  const bool json = format == "json" || (format.empty() && out_path.size() > 5 &&
                                         out_path.substr(out_path.size() - 5) == ".json");
  const std::string text = json ? io::format_structured(c) : io::format_facet_list(c);
  if (out_path.empty())
    out << text;
  else
    io::write_file(out_path, text);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_info(const Complex& c, std::ostream& out) {
  out << "dim: " << c.dim() << '\n';
  out << "vertices: " << c.num_vertices() << '\n';
  out << "facets: " << c.num_facets() << '\n';
  const FVector fv = f_vector(c);
  out << "f-vector:";
  for (int k = 0; k <= c.dim(); ++k) out << ' ' << fv(k);
  out << '\n';
  out << "euler: " << euler_characteristic(c) << '\n';
  const bool pseudo = is_pseudomanifold(c);
  out << "pseudomanifold: " << yes_no(pseudo) << '\n';
  if (!pseudo) {
    out << "boundary: n/a\n";
  } else if (c.dim() == 0) {
    out << "boundary: " << (c.num_facets() == 2 ? "closed" : "n/a") << '\n';
  } else if (auto bd = boundary_complex(c)) {
    out << "boundary: " << bd->num_facets() << " ridges\n";
  } else {
    out << "boundary: closed\n";
  }
  const bool closed = is_closed_pseudomanifold(c);
  out << "closed-pseudomanifold: " << yes_no(closed) << '\n';
  out << "orientable: " << (closed ? yes_no(is_orientable(c)) : "n/a") << '\n';
  out << "manifold: " << (c.dim() <= 3 ? yes_no(is_combinatorial_manifold(c)) : "n/a") << '\n';
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput:
    case ErrorCode::MixedDimensions:
    case ErrorCode::DegenerateFacet:
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
      return kInputError;
    default:
      return kInadmissible;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pachner moves and elementary shellings on pure simplicial complexes", "pachner"};
  app.require_subcommand(1);
  Verb verb;

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a standard complex");
  std::string gen_kind;
  int gen_dim = -1;
  std::string gen_input, gen_input2, gen_out, gen_format;
  gen_cmd->add_option("--kind", gen_kind, "simplex|sphere|cone|suspension|join|octahedron|rp2")->required();
  gen_cmd->add_option("--dim", gen_dim, "dimension for simplex/sphere");
  gen_cmd->add_option("--input", gen_input, "operand for cone/suspension/join");
  gen_cmd->add_option("--input2", gen_input2, "second operand for join");
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");
  gen_cmd->add_option("--format", gen_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  gen_cmd->callback([&] {
    verb = [&] {
      const auto need_dim = [&] {
        if (gen_dim < 0) throw UsageError("--dim is required for --kind " + gen_kind);
        return gen_dim;
      };
      const auto need_input = [&](const std::string& path, const char* flag) {
        if (path.empty()) throw UsageError(std::string(flag) + " is required for --kind " + gen_kind);
        return io::load(path);
      };
      std::optional<Complex> c;
      if (gen_kind == "simplex")
        c = gen::simplex(need_dim());
      else if (gen_kind == "sphere")
        c = gen::sphere(need_dim());
      else if (gen_kind == "cone")
        c = gen::cone(need_input(gen_input, "--input"));
      else if (gen_kind == "suspension")
        c = gen::suspension(need_input(gen_input, "--input"));
      else if (gen_kind == "join")
        c = gen::join(need_input(gen_input, "--input"), need_input(gen_input2, "--input2"));
      else if (gen_kind == "octahedron")
        c = gen::octahedron();
      else if (gen_kind == "rp2")
        c = gen::rp2_6();
      else
        throw UsageError("unknown --kind '" + gen_kind + "'");
      emit_complex(*c, gen_out, gen_format, out);
      return int{kOk};
    };
  });

  // info
  auto* info_cmd = app.add_subcommand("info", "Print invariants of a complex");
  std::string info_file;
  info_cmd->add_option("file", info_file)->required();
  info_cmd->callback([&] {
    verb = [&] {
      print_info(io::load(info_file), out);
      return int{kOk};
    };
  });

  // moves
  auto* moves_cmd = app.add_subcommand("moves", "List admissible Pachner moves");
  std::string moves_file;
  std::optional<int> moves_kind;
  moves_cmd->add_option("file", moves_file)->required();
  moves_cmd->add_option("--kind", moves_kind, "only moves of this kind");
  moves_cmd->callback([&] {
    verb = [&] {
      for (const auto& s : enumerate_moves(io::load(moves_file)))
        if (!moves_kind || s.kind() == *moves_kind) out << format_site(s) << '\n';
      return int{kOk};
    };
  });

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "Apply one Pachner move");
  std::string apply_file, apply_a, apply_b, apply_out, apply_format;
  apply_cmd->add_option("file", apply_file)->required();
  apply_cmd->add_option("--a", apply_a, "vertices of A, e.g. \"1 2\"")->required();
  apply_cmd->add_option("--b", apply_b, "vertices of B; optional for facet subdivisions");
  apply_cmd->add_option("--out", apply_out, "output file (default stdout)");
  apply_cmd->add_option("--format", apply_format, "text|json")->check(CLI::IsMember({"text", "json"}));
  apply_cmd->callback([&] {
    verb = [&] {
      const Complex c = io::load(apply_file);
      const Simplex a = parse_simplex_arg(apply_a, "--a");
      MoveSite site;
      if (!apply_b.empty()) {
        site = {a, parse_simplex_arg(apply_b, "--b")};
      } else {
        if (a.dim() != c.dim()) throw UsageError("--b is required unless A is a facet");
        site = {a, Simplex{c.fresh_vertex()}};
      }
      emit_complex(apply_move(c, site), apply_out, apply_format, out);
      return int{kOk};
    };
  });

  // walk
  auto* walk_cmd = app.add_subcommand("walk", "Random walk of admissible moves");
  std::string walk_file, walk_trace, walk_out;
  std::size_t walk_steps = 0;
  std::optional<std::size_t> walk_budget;
  std::uint64_t walk_seed = 0;
  walk_cmd->add_option("file", walk_file)->required();
  walk_cmd->add_option("--steps", walk_steps)->required();
  walk_cmd->add_option("--budget", walk_budget, "vertex budget (default vertices + 3)");
  walk_cmd->add_option("--seed", walk_seed)->required();
  walk_cmd->add_option("--trace", walk_trace, "write the trace here");
  walk_cmd->add_option("--out", walk_out, "write the end complex here (default stdout)");
  walk_cmd->callback([&] {
    verb = [&] {
      const Complex c = io::load(walk_file);
      auto result = random_walk(c, walk_steps, walk_budget.value_or(default_vertex_budget(c)), walk_seed);
      result.trace.start = walk_file;
      if (!walk_trace.empty()) io::write_file(walk_trace, format_trace(result.trace));
      emit_complex(result.end, walk_out, "", out);
      return int{kOk};
    };
  });

  // simplify
  auto* simplify_cmd = app.add_subcommand("simplify", "Bistellar simplification towards the minimal sphere");
  std::string simplify_file, simplify_trace, simplify_report;
  std::uint64_t simplify_seed = 0;
  SimplifyOptions simplify_options;
  simplify_cmd->add_option("file", simplify_file)->required();
  simplify_cmd->add_option("--seed", simplify_seed)->required();
  simplify_cmd->add_option("--max-steps", simplify_options.max_steps, "steps per restart");
  simplify_cmd->add_option("--restarts", simplify_options.restarts);
  simplify_cmd->add_option("--acceptance", simplify_options.initial_acceptance,
                           "initial acceptance probability of non-improving moves")
      ->check(CLI::Range(0.0, 1.0));
  simplify_cmd->add_option("--jobs", simplify_options.jobs);
  simplify_cmd->add_option("--trace", simplify_trace, "write the trace here");
  simplify_cmd->add_option("--report", simplify_report, "write the structured report here");
  simplify_cmd->callback([&] {
    verb = [&] {
      const Complex c = io::load(simplify_file);
      auto report = simplify(c, simplify_seed, simplify_options);
      report.trace.start = simplify_file;
      out << "verdict: " << to_string(report.verdict) << '\n';
      out << "moves-by-kind:";
      for (auto n : report.stats.moves_by_kind) out << ' ' << n;
      out << '\n';
      out << "annealing-moves: " << report.stats.annealing_moves << '\n';
      out << "steps: " << report.stats.steps << '\n';
      out << "restarts-used: " << report.stats.restarts_used << '\n';
      out << "final-vertices: " << report.final_complex.num_vertices() << '\n';
      out << "final-facets: " << report.final_complex.num_facets() << '\n';
      out << "seed: " << report.stats.seed << '\n';
      err << "wall-seconds: " << std::fixed << std::setprecision(3) << report.stats.wall_seconds << '\n';
      if (!simplify_trace.empty()) io::write_file(simplify_trace, format_trace(report.trace));
      if (!simplify_report.empty()) io::write_file(simplify_report, format_report(report));
      return report.verdict == Verdict::Reduced ? int{kOk} : int{kUnknown};
    };
  });

  // flipgraph
  auto* flip_cmd = app.add_subcommand("flipgraph", "Enumerate the flip graph up to isomorphism");
  std::string flip_file, flip_out;
  std::optional<std::size_t> flip_budget;
  FlipGraphOptions flip_options;
  flip_cmd->add_option("file", flip_file)->required();
  flip_cmd->add_option("--budget", flip_budget, "vertex budget (default vertices + 3)");
  flip_cmd->add_option("--out", flip_out, "export directory");
  flip_cmd->add_option("--jobs", flip_options.jobs);
  flip_cmd->callback([&] {
    verb = [&] {
      const Complex c = io::load(flip_file);
      const FlipGraph g = build_flip_graph(c, flip_budget.value_or(default_vertex_budget(c)), flip_options);
      if (!flip_out.empty()) export_flip_graph(g, flip_out);
      std::map<std::size_t, std::size_t> by_vertices;
      for (const auto& n : g.nodes) ++by_vertices[n.num_vertices()];
      out << "nodes: " << g.nodes.size() << '\n';
      out << "edges: " << g.edges.size() << '\n';
      out << "connected: " << yes_no(g.connected()) << '\n';
      for (const auto& [v, n] : by_vertices) out << "classes-with-" << v << "-vertices: " << n << '\n';
      return int{kOk};
    };
  });

  // shell
  auto* shell_cmd = app.add_subcommand("shell", "Enumerate or execute elementary shellings");
  std::string shell_file, shell_trace;
  bool shell_to_facet_flag = false;
  bool shell_terminal = false;
  std::optional<std::uint64_t> shell_seed;
  ShellOptions shell_options;
  shell_cmd->add_option("file", shell_file)->required();
  shell_cmd->add_flag("--to-facet", shell_to_facet_flag, "search for a shelling down to one facet");
  shell_cmd->add_flag("--terminal", shell_terminal, "report the deletion of a last remaining facet");
  shell_cmd->add_option("--seed", shell_seed);
  shell_cmd->add_option("--attempts", shell_options.attempts);
  shell_cmd->add_option("--trace", shell_trace, "write the shelling trace here");
  shell_cmd->callback([&] {
    verb = [&] {
      const Complex c = io::load(shell_file);
      if (!shell_to_facet_flag) {
        const auto found = enumerate_shellings(c, shell_terminal);
        for (const auto& site : found.sites) {
          const auto result = apply_shelling(c, site);
          out << format_shelling(site) << '\n';
          out << "  boundary: " << format_site(result.witness.site)
              << (result.witness.verify() ? " verified" : " FAILED") << '\n';
        }
        if (found.terminal) out << "terminal: " << *found.terminal << '\n';
        return int{kOk};
      }
      if (!shell_seed) throw UsageError("--seed is required with --to-facet");
      auto trace = shell_to_facet(c, *shell_seed, shell_options);
      if (!trace) {
        out << "verdict: UNKNOWN\n";
        return int{kUnknown};
      }
      trace->start = shell_file;
      Complex current = c;
      for (const auto& step : trace->steps) {
        const auto& site = std::get<ShellingSite>(step.action);
        const auto result = apply_shelling(current, site);
        out << format_shelling(site) << '\n';
        out << "  boundary: " << format_site(result.witness.site)
            << (result.witness.verify() ? " verified" : " FAILED") << '\n';
        current = result.complex;
      }
      out << "verdict: SHELLED " << trace->steps.size() << " steps\n";
      if (!shell_trace.empty()) io::write_file(shell_trace, format_trace(*trace));
      return int{kOk};
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Replay a trace against its start complex");
  std::string verify_file, verify_trace_path;
  verify_cmd->add_option("file", verify_file)->required();
  verify_cmd->add_option("--trace", verify_trace_path)->required();
  verify_cmd->callback([&] {
    verb = [&] {
      const Complex c = io::load(verify_file);
      const Trace trace = parse_trace(io::read_file(verify_trace_path));
      const VerifyReport report = verify_trace(c, trace);
      if (report.divergence_step)
        throw Error(ErrorCode::TraceDivergence,
                    "first divergence at step " + std::to_string(*report.divergence_step) + ": " + report.reason);
      if (report.digest_matches == false)
        throw Error(ErrorCode::TraceDivergence, "replayed " + std::to_string(report.steps_applied) +
                                                    " steps but the end complex differs from the recorded digest");
      out << "exact-match: " << report.steps_applied << " steps\n";
      return int{kOk};
    };
  });

  std::vector<std::string> argv_storage{"pachner"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ERROR Usage: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!verb) throw UsageError("a command is required; see --help");
    return verb();
  } catch (const UsageError& e) {
    err << "ERROR Usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "ERROR " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "ERROR Internal: " << e.what() << '\n';
    return kInadmissible;
  }
}

}  // namespace pachner::cli
