#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pachner/complex.hpp"
#include "pachner/moves.hpp"
#include "pachner/shellings.hpp"

namespace pachner {

struct TraceStep {
  std::variant<MoveSite, ShellingSite> action;
  // Set for moves accepted by the annealing rule rather than greedy descent.
  bool annealing = false;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

// A replayable sequence of moves and shellings applied to a named start.
//
// Text form:
//   trace start=<name> seed=<n|none>
//   <k> <a...> | <b...>          [# anneal]
//   S <sigma...> | <a...> | <b...>
//   end <digest>                 (optional; io::digest_hex of the result)
struct Trace {
  std::string start;
  std::optional<std::uint64_t> seed;
  std::vector<TraceStep> steps;
  std::optional<std::string> end_digest;

  friend bool operator==(const Trace&, const Trace&) = default;
};

std::string format_trace(const Trace& trace);
Trace parse_trace(std::string_view text);

// Applies every step; throws TraceDivergence naming the first failing step.
Complex replay(const Complex& start, const Trace& trace);

struct VerifyReport {
  std::size_t steps_applied = 0;
  // 1-based index of the first step that could not be applied.
  std::optional<std::size_t> divergence_step;
  std::string reason;
  std::optional<Complex> end;
  // nullopt when the trace carries no end digest.
  std::optional<bool> digest_matches;

  bool exact_match() const { return !divergence_step && digest_matches.value_or(true); }
};

VerifyReport verify_trace(const Complex& start, const Trace& trace);

}  // namespace pachner
