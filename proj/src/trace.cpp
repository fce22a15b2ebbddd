#include "pachner/trace.hpp"

#include <charconv>
#include <sstream>

#include "pachner/error.hpp"
#include "pachner/io.hpp"

namespace pachner {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return out;
    s = s.substr(pos + 1);
  }
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto start = s.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) return out;
    auto end = s.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
}

template <typename T>
T parse_number(std::string_view token, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorCode::ParseError,
                "trace line " + std::to_string(line_no) + ": bad number '" + std::string(token) + "'");
  return value;
}

Simplex parse_simplex(std::string_view field, std::size_t line_no) {
  std::vector<Vertex> vs;
  for (auto t : tokens(field)) vs.push_back(parse_number<Vertex>(t, line_no));
  return Simplex::from_vertices(std::move(vs));
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
  throw Error(ErrorCode::ParseError, "trace line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

std::string format_trace(const Trace& trace) {
  std::ostringstream os;
  os << "trace start=" << trace.start << " seed=";
  if (trace.seed)
    os << *trace.seed;
  else
    os << "none";
  os << '\n';
  for (const auto& step : trace.steps) {
    if (const auto* move = std::get_if<MoveSite>(&step.action))
      os << format_site(*move);
    else
      os << format_shelling(std::get<ShellingSite>(step.action));
    if (step.annealing) os << " # anneal";
    os << '\n';
  }
  if (trace.end_digest) os << "end " << *trace.end_digest << '\n';
  return os.str();
}

Trace parse_trace(std::string_view text) {
  Trace trace;
  bool have_header = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    bool annealing = false;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      annealing = trim(line.substr(hash + 1)) == "anneal";
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (!have_header) {
      if (line.substr(0, 12) != "trace start=") bad_line(line_no, "expected 'trace start=... seed=...' header");
      const auto seed_pos = line.rfind(" seed=");
      if (seed_pos == std::string_view::npos || seed_pos < 12) bad_line(line_no, "header lacks seed=");
      trace.start = std::string(line.substr(12, seed_pos - 12));
      const auto seed = line.substr(seed_pos + 6);
      if (seed != "none") trace.seed = parse_number<std::uint64_t>(seed, line_no);
      have_header = true;
      continue;
    }
    if (line.substr(0, 4) == "end ") {
      trace.end_digest = std::string(trim(line.substr(4)));
      continue;
    }
    if (line.front() == 'S') {
      const auto fields = split(line.substr(1), '|');
      if (fields.size() != 3) bad_line(line_no, "shelling step needs 'S sigma | a | b'");
      trace.steps.push_back({ShellingSite{parse_simplex(fields[0], line_no), parse_simplex(fields[1], line_no),
                                          parse_simplex(fields[2], line_no)},
                             annealing});
      continue;
    }
    const auto fields = split(line, '|');
    if (fields.size() != 2) bad_line(line_no, "move step needs 'k a | b'");
    auto head = tokens(fields[0]);
    if (head.empty()) bad_line(line_no, "missing move kind");
    const int kind = parse_number<int>(head.front(), line_no);
    std::vector<Vertex> a;
    for (std::size_t i = 1; i < head.size(); ++i) a.push_back(parse_number<Vertex>(head[i], line_no));
    MoveSite site{Simplex::from_vertices(std::move(a)), parse_simplex(fields[1], line_no)};
    if (site.kind() != kind)
      bad_line(line_no, "kind " + std::to_string(kind) + " does not match |a| - 1 = " + std::to_string(site.kind()));
    trace.steps.push_back({std::move(site), annealing});
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "trace is empty");
  return trace;
}

namespace {

Complex apply_step(const Complex& c, const TraceStep& step) {
  if (const auto* move = std::get_if<MoveSite>(&step.action)) return apply_move(c, *move);
  return apply_shelling(c, std::get<ShellingSite>(step.action)).complex;
}

}  // namespace

VerifyReport verify_trace(const Complex& start, const Trace& trace) {
  VerifyReport report;
  Complex current = start;
  for (const auto& step : trace.steps) {
    try {
      current = apply_step(current, step);
    } catch (const Error& e) {
      report.divergence_step = report.steps_applied + 1;
      report.reason = e.what();
      return report;
    }
    ++report.steps_applied;
  }
  if (trace.end_digest) report.digest_matches = io::digest_hex(current) == *trace.end_digest;
  report.end = std::move(current);
  return report;
}

Complex replay(const Complex& start, const Trace& trace) {
  auto report = verify_trace(start, trace);
  if (report.divergence_step)
    throw Error(ErrorCode::TraceDivergence,
                "step " + std::to_string(*report.divergence_step) + ": " + report.reason);
  if (report.digest_matches == false)
    throw Error(ErrorCode::TraceDivergence, "replayed complex does not match the recorded end digest");
  return std::move(*report.end);
}

}  // namespace pachner
